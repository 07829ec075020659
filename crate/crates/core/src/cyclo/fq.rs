//! Finite fields `F_p[x]/(f)` for a monic irreducible `f`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use super::fp::poly;
use crate::error::{Error, Result};
use crate::linalg::Scalar;
use crate::numth::{is_prime, mul_mod};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqField {
    p: u64,
    modulus: Vec<u64>,
}

impl FqField {
    /// `modulus` is a monic irreducible polynomial over `F_p`, constant
    /// term first.
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Arc<Self>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidArgument(format!(
                "coefficients of {modulus:?} must lie in 0..{p}"
            )));
        }
        let modulus = poly::trim(modulus);
        if modulus.last() != Some(&1) || modulus.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "{modulus:?} is not a monic polynomial of positive degree"
            )));
        }
        if !poly::is_irreducible(&modulus, p) {
            return Err(Error::InvalidArgument(format!(
                "{modulus:?} is not irreducible over F_{p}"
            )));
        }
        Ok(Arc::new(FqField { p, modulus }))
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(self.p).pow(self.degree() as u32)
    }

    pub fn zero(self: &Arc<Self>) -> FqElem {
        self.from_poly(Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> FqElem {
        self.from_int(1)
    }

    pub fn from_int(self: &Arc<Self>, v: i64) -> FqElem {
        self.from_poly(vec![v.rem_euclid(self.p as i64) as u64])
    }

    /// Residue of `x`.
    pub fn generator(self: &Arc<Self>) -> FqElem {
        self.from_poly(vec![0, 1])
    }

    pub fn from_poly(self: &Arc<Self>, c: Vec<u64>) -> FqElem {
        let c: Vec<u64> = c.into_iter().map(|x| x % self.p).collect();
        let mut r = poly::rem(&c, &self.modulus, self.p);
        r.resize(self.degree(), 0);
        FqElem {
            field: self.clone(),
            c: r,
        }
    }
}

/// An element of a finite field, stored as a coefficient vector of length
/// equal to the field degree.
#[derive(Clone, Debug)]
pub struct FqElem {
    field: Arc<FqField>,
    c: Vec<u64>,
}

impl FqElem {
    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    pub fn is_one(&self) -> bool {
        self.c[0] == 1 && self.c[1..].iter().all(|&x| x == 0)
    }

    fn with(&self, c: Vec<u64>) -> FqElem {
        self.field.from_poly(c)
    }

    pub fn pow(&self, e: &BigUint) -> FqElem {
        let r = poly::powmod(&self.c, e, &self.field.modulus, self.field.p);
        self.with(r)
    }

    pub fn pow_u64(&self, e: u64) -> FqElem {
        self.pow(&BigUint::from(e))
    }

    pub fn scale_int(&self, k: u64) -> FqElem {
        let p = self.field.p;
        self.with(self.c.iter().map(|&x| mul_mod(x, k % p, p)).collect())
    }
}

impl PartialEq for FqElem {
    fn eq(&self, other: &Self) -> bool {
        debug_assert_eq!(self.field, other.field);
        self.c == other.c
    }
}

impl Eq for FqElem {}

impl Hash for FqElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl PartialOrd for FqElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FqElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.c.cmp(&other.c)
    }
}

/// Polynomial in the generator `z` of the field, e.g. `z^2+2z+1`.
impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}z"),
                _ => format!("{coef}z^{i}"),
            });
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join("+"))
        }
    }
}

impl Scalar for FqElem {
    fn is_zero(&self) -> bool {
        FqElem::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        self.field.zero()
    }
    fn one_like(&self) -> Self {
        self.field.one()
    }
    fn add(&self, o: &Self) -> Self {
        let p = self.field.p;
        FqElem {
            field: self.field.clone(),
            c: self.c.iter().zip(&o.c).map(|(a, b)| (a + b) % p).collect(),
        }
    }
    fn sub(&self, o: &Self) -> Self {
        let p = self.field.p;
        FqElem {
            field: self.field.clone(),
            c: self.c.iter().zip(&o.c).map(|(a, b)| (a + p - b) % p).collect(),
        }
    }
    fn mul(&self, o: &Self) -> Self {
        if self.c.len() == 1 {
            let p = self.field.p;
            return FqElem {
                field: self.field.clone(),
                c: vec![mul_mod(self.c[0], o.c[0], p)],
            };
        }
        self.with(poly::mul(&self.c, &o.c, self.field.p))
    }
    fn neg(&self) -> Self {
        let p = self.field.p;
        FqElem {
            field: self.field.clone(),
            c: self.c.iter().map(|&a| (p - a) % p).collect(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if FqElem::is_zero(self) {
            return None;
        }
        let e = self.field.size() - BigUint::one() - BigUint::one();
        Some(self.pow(&e))
    }
}
