//! Reduction of cyclotomic integers modulo a prime ideal above `p`.

use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::fp::poly;
use super::fq::{FqElem, FqField};
use super::phi::cyclotomic_poly;
use super::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::Scalar;
use crate::numth::{inv_mod, is_prime, mult_order, p_split};

/// Irreducible factors of the `m`-th cyclotomic polynomial over `F_p`
/// (`p` not dividing `m`), in ascending lexicographic order of their
/// coefficient vectors, constant term first.
pub fn cyclotomic_factors(m: u64, p: u64) -> Vec<Vec<u64>> {
    let f: Vec<u64> = cyclotomic_poly(m)
        .iter()
        .map(|&c| c.rem_euclid(p as i64) as u64)
        .collect();
    let d = mult_order(p % m.max(1), m) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut fs = poly::equal_degree_factor(&poly::trim(f), d, p, &mut rng);
    fs.sort();
    fs
}

/// The reduction map onto `F_p[x]/(factor)`, where `factor` is an
/// irreducible factor of the cyclotomic polynomial of the `p'`-part `m` of a
/// conductor bound. `E(m)` maps to the residue of `x`, roots of unity of
/// `p`-power order map to 1.
#[derive(Clone, Debug)]
pub struct StarMap {
    p: u64,
    m: u64,
    field: Arc<FqField>,
    powers: Vec<FqElem>,
}

impl StarMap {
    /// The map for the least factor.
    pub fn canonical(p: u64, conductor_bound: u64) -> Result<Self> {
        Ok(Self::all(p, conductor_bound)?.remove(0))
    }

    /// One map per irreducible factor, in canonical order.
    pub fn all(p: u64, conductor_bound: u64) -> Result<Vec<Self>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let (_, m) = p_split(conductor_bound.max(1), p);
        cyclotomic_factors(m, p)
            .into_iter()
            .map(|f| Self::with_factor(p, m, f))
            .collect()
    }

    pub fn with_factor(p: u64, m: u64, factor: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 || m.is_multiple_of(p) {
            return Err(Error::InvalidArgument(format!(
                "{m} must be a positive integer prime to {p}"
            )));
        }
        let field = FqField::new(p, factor)?;
        let phi: Vec<u64> = cyclotomic_poly(m)
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect();
        if field.degree() as u64 != mult_order(p % m, m)
            || !poly::rem(&phi, field.modulus(), p).is_empty()
        {
            return Err(Error::InvalidArgument(format!(
                "{:?} is not an irreducible factor of the cyclotomic polynomial {m} mod {p}",
                field.modulus()
            )));
        }
        let theta = field.generator();
        let mut powers = Vec::with_capacity(m as usize);
        let mut acc = field.one();
        for _ in 0..m {
            powers.push(acc.clone());
            acc = acc.mul(&theta);
        }
        Ok(StarMap {
            p,
            m,
            field,
            powers,
        })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    /// The `p'`-part of the conductor bound.
    pub fn m_prime(&self) -> u64 {
        self.m
    }

    pub fn factor(&self) -> &[u64] {
        self.field.modulus()
    }

    pub fn field(&self) -> &Arc<FqField> {
        &self.field
    }

    pub fn reduce_rational(&self, r: &BigRational) -> Result<FqElem> {
        let p = self.p;
        let den = r.denom().mod_floor(&p.into()).to_u64().expect("small");
        if den == 0 {
            return Err(Error::NotIntegral(r.to_string()));
        }
        let num = r.numer().mod_floor(&(p as i64).into()).to_u64().expect("small");
        let v = num * inv_mod(den as i64, p).expect("unit") % p;
        Ok(self.field.from_int(v as i64))
    }

    /// Image of `a`, whose coordinates must have denominators prime to `p`.
    pub fn reduce(&self, a: &Cyclo) -> Result<FqElem> {
        let n = a.conductor();
        let (pe, mn) = p_split(n, self.p);
        if !self.m.is_multiple_of(mn) {
            return Err(Error::ConductorTooLarge {
                conductor: n,
                capacity: self.m,
            });
        }
        let t = inv_mod(pe as i64, mn).expect("coprime");
        let step = t * (self.m / mn) % self.m;
        let mut acc = self.field.zero();
        for (i, c) in a.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = self.reduce_rational(c)?;
            let idx = (i as u64 * step % self.m) as usize;
            acc = acc.add(&r.mul(&self.powers[idx]));
        }
        Ok(acc)
    }
}
