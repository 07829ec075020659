//! Character table from class matrices: split their common eigenspaces over
//! a prime field `F_l` with `l = 1 mod exp(G)`, read off central characters
//! and degrees, and lift values to cyclotomic numbers through eigenvalue
//! multiplicities.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{verify_orthogonality, CharacterTable, ClassInfo};
use crate::classalg::StructureConstants;
use crate::cyclo::fp::poly;
use crate::cyclo::{Cyclo, Fp};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, rref, Scalar};
use crate::numth::{inv_mod, is_prime, isqrt, mul_mod, pow_mod, prime_divisors, primitive_root};
use crate::permgrp::ConjClassData;

/// Tuning for [`compute_table`].
#[derive(Clone, Debug)]
pub struct DixonOptions {
    /// Seed for the randomized polynomial root finding.
    pub seed: u64,
    /// How many admissible primes to try before giving up.
    pub max_primes: usize,
}

impl Default for DixonOptions {
    fn default() -> Self {
        DixonOptions {
            seed: 0,
            max_primes: 8,
        }
    }
}

/// Primes `l = 1 mod m` with `l > 2 sqrt(order)`, ascending.
pub fn dixon_primes(order: u64, m: u64) -> impl Iterator<Item = u64> {
    let bound = 2 * isqrt(order) + 1;
    (1u64..)
        .map(move |k| k * m + 1)
        .filter(move |&l| l > bound && is_prime(l))
}

/// Characteristic polynomial over `F_l` via Hessenberg form.
fn charpoly(mut a: Vec<Vec<u64>>, l: u64) -> Vec<u64> {
    let n = a.len();
    let sub = |x: u64, y: u64| (x + l - y) % l;
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| a[i][j] != 0) else {
            continue;
        };
        if piv != j + 1 {
            a.swap(piv, j + 1);
            for row in a.iter_mut() {
                row.swap(piv, j + 1);
            }
        }
        let inv = inv_mod(a[j + 1][j] as i64, l).expect("nonzero pivot");
        for i in j + 2..n {
            let u = mul_mod(a[i][j], inv, l);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let t = mul_mod(u, a[j + 1][c], l);
                a[i][c] = sub(a[i][c], t);
            }
            for row in a.iter_mut() {
                let t = mul_mod(u, row[i], l);
                row[j + 1] = (row[j + 1] + t) % l;
            }
        }
    }
    let mut ps: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        let mut next = poly::mul(&ps[m], &[(l - a[m][m]) % l, 1], l);
        let mut t = 1u64;
        for i in (0..m).rev() {
            t = mul_mod(t, a[i + 1][i], l);
            let coef = mul_mod(a[i][m], t, l);
            if coef != 0 {
                next = poly::sub(&next, &poly::scale(&ps[i], coef, l), l);
            }
        }
        ps.push(next);
    }
    ps.pop().expect("nonempty")
}

/// Common one-dimensional eigenspaces of all class matrices mod `l`,
/// normalized to 1 at the identity class.
fn central_characters_mod(sc: &StructureConstants, l: u64, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<u64>>> {
    let r = sc.num_classes();
    let f = |v: u64| Fp::from_u64(v, l);
    let identity: Vec<Vec<Fp>> = (0..r)
        .map(|i| (0..r).map(|j| f(u64::from(i == j))).collect())
        .collect();
    let mut spaces = vec![identity];
    for k in 1..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mat = sc.class_matrix(k);
        let mut next = Vec::new();
        for space in spaces {
            let dim = space.len();
            if dim == 1 {
                next.push(space);
                continue;
            }
            let pivots: Vec<usize> = space
                .iter()
                .map(|b| b.iter().position(|x| !x.is_zero()).expect("basis vector"))
                .collect();
            let images: Vec<Vec<Fp>> = space
                .iter()
                .map(|b| {
                    (0..r)
                        .map(|row| {
                            (0..r).fold(f(0), |acc, c| acc.add(&f(mat[row][c] % l).mul(&b[c])))
                        })
                        .collect()
                })
                .collect();
            // restricted[j][i] = coordinate j of A b_i
            let restricted: Vec<Vec<u64>> = (0..dim)
                .map(|j| (0..dim).map(|i| images[i][pivots[j]].value()).collect())
                .collect();
            let roots = poly::roots(&charpoly(restricted.clone(), l), l, rng);
            let mut found = 0;
            for lam in roots {
                let shifted: Vec<Vec<Fp>> = (0..dim)
                    .map(|j| {
                        (0..dim)
                            .map(|i| {
                                let v = f(restricted[j][i]);
                                if i == j {
                                    v.sub(&f(lam))
                                } else {
                                    v
                                }
                            })
                            .collect()
                    })
                    .collect();
                let coords = nullspace(&shifted, dim, &f(0));
                let mut basis: Vec<Vec<Fp>> = coords
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|x| {
                                (0..dim).fold(f(0), |acc, i| acc.add(&c[i].mul(&space[i][x])))
                            })
                            .collect()
                    })
                    .collect();
                rref(&mut basis);
                found += basis.len();
                next.push(basis);
            }
            if found != dim {
                return None;
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return None;
    }
    spaces
        .into_iter()
        .map(|s| {
            let v = &s[0];
            let inv = v[0].inv()?;
            Some(v.iter().map(|x| x.mul(&inv).value()).collect())
        })
        .collect()
}

fn table_at_prime(
    cc: &ConjClassData,
    sc: &StructureConstants,
    l: u64,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Vec<Cyclo>>> {
    let r = cc.num_classes();
    let order = cc.group_order();
    let m = cc.exponent();
    let omegas = central_characters_mod(sc, l, rng)?;
    if omegas.len() != r {
        return None;
    }
    let z = pow_mod(primitive_root(l), (l - 1) / m, l);
    let sizes = cc.sizes();
    let inv = cc.inverse_map();
    let mut rows = Vec::with_capacity(r);
    for w in omegas {
        let mut s = 0u64;
        for k in 0..r {
            let t = mul_mod(w[k], w[inv[k]], l);
            s = (s + mul_mod(t, inv_mod(sizes[k] as i64, l)?, l)) % l;
        }
        let s_inv = inv_mod(s as i64, l)?;
        let d2 = mul_mod(order % l, s_inv, l);
        let d = (1..=isqrt(order)).find(|&d| order.is_multiple_of(d) && mul_mod(d, d, l) == d2)?;
        let chi: Vec<u64> = (0..r)
            .map(|k| mul_mod(mul_mod(w[k], d, l), inv_mod(sizes[k] as i64, l).expect("unit"), l))
            .collect();
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let o = cc.rep_orders()[k];
            let zo = pow_mod(z, m / o, l);
            let zo_inv = inv_mod(zo as i64, l).expect("unit");
            let o_inv = inv_mod(o as i64, l).expect("unit");
            let vals: Vec<u64> = (0..o as i64).map(|e| chi[cc.power_class(k, e)]).collect();
            let mut mult = Vec::with_capacity(o as usize);
            for s in 0..o {
                let step = pow_mod(zo_inv, s, l);
                let mut acc = 0u64;
                let mut w = 1u64;
                for &v in &vals {
                    acc = (acc + mul_mod(v, w, l)) % l;
                    w = mul_mod(w, step, l);
                }
                let mu = mul_mod(acc, o_inv, l);
                if mu > d {
                    return None;
                }
                mult.push(mu as i64);
            }
            if mult.iter().sum::<i64>() != d as i64 {
                return None;
            }
            row.push(Cyclo::from_dense_int(o, &mult));
        }
        rows.push(row);
    }
    rows.sort_by(row_order);
    Some(rows)
}

/// Degree ascending, principal character first, then values compared
/// column by column under the standard embedding, larger first.
pub fn row_order(a: &Vec<Cyclo>, b: &Vec<Cyclo>) -> Ordering {
    let deg = |r: &Vec<Cyclo>| r[0].to_i64().unwrap_or(0);
    let principal = |r: &Vec<Cyclo>| r.iter().all(Cyclo::is_one);
    deg(a)
        .cmp(&deg(b))
        .then(principal(b).cmp(&principal(a)))
        .then_with(|| {
            a.iter()
                .zip(b)
                .map(|(x, y)| y.embedding_cmp(x))
                .find(|o| *o != Ordering::Equal)
                .unwrap_or(Ordering::Equal)
        })
}

/// Ordinary character table of the group described by `cc` and `sc`.
pub fn compute_table(
    name: &str,
    cc: &ConjClassData,
    sc: &StructureConstants,
    opts: &DixonOptions,
) -> Result<CharacterTable> {
    let order = cc.group_order();
    let m = cc.exponent();
    let classes: Vec<ClassInfo> = (0..cc.num_classes())
        .map(|k| ClassInfo {
            name: cc.names()[k].clone(),
            size: cc.sizes()[k],
            centralizer: cc.centralizer_orders()[k],
            order: cc.rep_orders()[k],
        })
        .collect();
    let power_maps: BTreeMap<u64, Vec<usize>> = prime_divisors(order)
        .into_iter()
        .map(|p| (p, cc.power_map(p as i64)))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut tried = Vec::new();
    for l in dixon_primes(order, m).take(opts.max_primes) {
        tried.push(l);
        let Some(irr) = table_at_prime(cc, sc, l, &mut rng) else {
            continue;
        };
        let t = CharacterTable::new(name, order, m, classes.clone(), power_maps.clone(), irr)?;
        if verify_orthogonality(&t).is_ok() {
            return Ok(t);
        }
    }
    Err(Error::SplittingFailed(tried))
}
