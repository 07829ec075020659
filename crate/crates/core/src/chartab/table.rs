use std::collections::BTreeMap;

use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::numth::{factorize, gcd, inv_mod, is_prime, p_split};

/// Header data of one conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassInfo {
    pub name: String,
    pub size: u64,
    pub centralizer: u64,
    pub order: u64,
}

/// An ordinary character table: class headers, prime power maps and the
/// matrix of irreducible character values.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTable {
    name: String,
    order: u64,
    exponent: u64,
    classes: Vec<ClassInfo>,
    power_maps: BTreeMap<u64, Vec<usize>>,
    irr: Vec<Vec<Cyclo>>,
    inverse: Vec<usize>,
}

/// The matrix of central character values `|K| chi(x_K) / chi(1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralCharTable {
    pub values: Vec<Vec<Cyclo>>,
}

fn inconsistent(msg: impl Into<String>) -> Error {
    Error::TableInconsistent(msg.into())
}

impl CharacterTable {
    /// Assemble and check the shape invariants. Power maps are keyed by
    /// prime and hold 0-based class indices.
    pub fn new(
        name: impl Into<String>,
        order: u64,
        exponent: u64,
        classes: Vec<ClassInfo>,
        power_maps: BTreeMap<u64, Vec<usize>>,
        irr: Vec<Vec<Cyclo>>,
    ) -> Result<Self> {
        let r = classes.len();
        if r == 0 {
            return Err(inconsistent("no classes"));
        }
        if irr.len() != r || irr.iter().any(|row| row.len() != r) {
            return Err(inconsistent(format!(
                "character matrix must be {r} x {r} to match the classes"
            )));
        }
        if let Some(i) = irr.iter().position(|row| !row[0].to_i64().is_some_and(|d| d > 0)) {
            return Err(inconsistent(format!(
                "degree {} of row {} is not a positive integer",
                irr[i][0],
                i + 1
            )));
        }
        if classes[0].order != 1 || classes[0].size != 1 {
            return Err(inconsistent("the first class must be the identity"));
        }
        let mut total = 0;
        for c in &classes {
            if c.size == 0 || c.size.checked_mul(c.centralizer) != Some(order) {
                return Err(inconsistent(format!(
                    "class {}: size {} times centralizer order {} is not {order}",
                    c.name, c.size, c.centralizer
                )));
            }
            if c.order == 0 || !exponent.is_multiple_of(c.order) {
                return Err(inconsistent(format!(
                    "class {}: element order {} does not divide the exponent {exponent}",
                    c.name, c.order
                )));
            }
            total += c.size;
        }
        if total != order {
            return Err(inconsistent(format!("class sizes sum to {total}, not {order}")));
        }
        for (p, map) in &power_maps {
            if !is_prime(*p) || map.len() != r || map.iter().any(|&k| k >= r) {
                return Err(inconsistent(format!("invalid {p}-power map")));
            }
        }
        let mut t = CharacterTable {
            name: name.into(),
            order,
            exponent,
            classes,
            power_maps,
            irr,
            inverse: Vec::new(),
        };
        t.inverse = t.compute_inverse_map()?;
        Ok(t)
    }

    fn compute_inverse_map(&self) -> Result<Vec<usize>> {
        let r = self.num_classes();
        let cols: Vec<Vec<&Cyclo>> = (0..r)
            .map(|k| self.irr.iter().map(|row| &row[k]).collect())
            .collect();
        (0..r)
            .map(|k| {
                let conj: Vec<Cyclo> = cols[k].iter().map(|v| v.complex_conjugate()).collect();
                (0..r)
                    .find(|&l| cols[l].iter().zip(&conj).all(|(a, b)| *a == b))
                    .ok_or_else(|| {
                        inconsistent(format!(
                            "the conjugate of column {} is not a column",
                            self.classes[k].name
                        ))
                    })
            })
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn classes(&self) -> &[ClassInfo] {
        &self.classes
    }

    pub fn class(&self, k: usize) -> &ClassInfo {
        &self.classes[k]
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_irr(&self) -> usize {
        self.irr.len()
    }

    pub fn irr(&self) -> &[Vec<Cyclo>] {
        &self.irr
    }

    pub fn row(&self, i: usize) -> &[Cyclo] {
        &self.irr[i]
    }

    pub fn value(&self, i: usize, k: usize) -> &Cyclo {
        &self.irr[i][k]
    }

    /// `chi_i(1)` as an integer.
    pub fn degree(&self, i: usize) -> u64 {
        self.irr[i][0]
            .to_i64()
            .filter(|&d| d > 0)
            .expect("degrees are positive integers") as u64
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.num_irr()).map(|i| self.degree(i)).collect()
    }

    pub fn power_maps(&self) -> &BTreeMap<u64, Vec<usize>> {
        &self.power_maps
    }

    pub fn inverse_map(&self) -> &[usize] {
        &self.inverse
    }

    /// Class of `x_K^n`. Prime factors of `gcd(n, |x_K|)` use the stored
    /// power maps; the remaining unit exponent is resolved by the Galois
    /// action on columns.
    pub fn power_class(&self, k: usize, n: i64) -> Result<usize> {
        let o = self.classes[k].order;
        let nn = n.rem_euclid(o as i64) as u64;
        if nn == 0 {
            return Ok(0);
        }
        let g = gcd(nn, o);
        let mut cur = k;
        for (p, e) in factorize(g) {
            let map = self.power_maps.get(&p).ok_or_else(|| {
                inconsistent(format!("no {p}-power map stored"))
            })?;
            for _ in 0..e {
                cur = map[cur];
            }
        }
        let w = (nn / g) as i64;
        if w == 1 {
            return Ok(cur);
        }
        let img: Vec<Cyclo> = self
            .irr
            .iter()
            .map(|row| row[cur].galois(w))
            .collect::<Result<_>>()?;
        (0..self.num_classes())
            .find(|&l| self.irr.iter().zip(&img).all(|(row, v)| row[l] == *v))
            .ok_or_else(|| inconsistent(format!("no column matches the {n}-th power of class {}", self.classes[k].name)))
    }

    /// Class of the `p`-part of `x_K`.
    pub fn p_part_class(&self, k: usize, p: u64) -> Result<usize> {
        let o = self.classes[k].order;
        let (pa, m) = p_split(o, p);
        let u = m * inv_mod(m as i64, pa).unwrap_or(0) % o;
        self.power_class(k, u as i64)
    }

    pub fn p_regular_classes(&self, p: u64) -> Vec<usize> {
        (0..self.num_classes())
            .filter(|&k| !self.classes[k].order.is_multiple_of(p))
            .collect()
    }

    /// `|G|_p`.
    pub fn p_part_of_order(&self, p: u64) -> u64 {
        p_split(self.order, p).0
    }

    /// Least `m` with every value in `Q(E(m))`.
    pub fn value_conductor(&self) -> u64 {
        self.irr
            .iter()
            .flatten()
            .fold(1, |acc, v| crate::numth::lcm(acc, v.conductor()))
    }

    pub fn is_principal(&self, i: usize) -> bool {
        self.irr[i].iter().all(Cyclo::is_one)
    }

    pub fn central_characters(&self) -> Result<CentralCharTable> {
        let values = self
            .irr
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let d = row[0].inverse()?;
                row.iter()
                    .enumerate()
                    .map(|(k, v)| {
                        let w = &(v * &Cyclo::from_int(self.classes[k].size as i64)) * &d;
                        if w.is_algebraic_integer() {
                            Ok(w)
                        } else {
                            Err(inconsistent(format!(
                                "central character value {w} of row {} at class {} is not integral",
                                i + 1,
                                self.classes[k].name
                            )))
                        }
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(CentralCharTable { values })
    }
}
