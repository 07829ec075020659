use std::cmp::Ordering;
use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::phi::cyclotomic_poly;
use crate::error::{Error, Result};
use crate::linalg::Scalar;
use crate::numth::{euler_phi, factorize, gcd, inv_mod, lcm};

/// An exact element of a cyclotomic field.
///
/// The value is stored in the smallest field `Q(E(n))` containing it, as
/// rational coordinates in the power basis `1, E(n), .., E(n)^(phi(n)-1)`.
/// This form is canonical, so derived equality, hashing and ordering are
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cyclo {
    n: u64,
    c: Vec<BigRational>,
}

fn reduce_mod_phi(n: u64, mut dense: Vec<BigRational>) -> Vec<BigRational> {
    let f = cyclotomic_poly(n);
    let d = f.len() - 1;
    for deg in (d..dense.len()).rev() {
        if dense[deg].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut dense[deg]);
        for (i, &fi) in f.iter().enumerate().take(d) {
            if fi != 0 {
                dense[deg - d + i] -= &c * BigRational::from_integer(BigInt::from(fi));
            }
        }
    }
    dense.truncate(d);
    dense.resize(d, BigRational::zero());
    dense
}

fn minimize(mut n: u64, mut c: Vec<BigRational>) -> (u64, Vec<BigRational>) {
    'outer: loop {
        for (q, e) in factorize(n) {
            if e >= 2 {
                let q = q as usize;
                if c.iter().enumerate().all(|(i, x)| i % q == 0 || x.is_zero()) {
                    c = c.into_iter().step_by(q).collect();
                    n /= q as u64;
                    continue 'outer;
                }
            } else {
                let m = n / q;
                let a = inv_mod(m as i64, q).expect("coprime") as i64;
                let b = (1 - a * m as i64) / q as i64;
                let mut parts = vec![vec![BigRational::zero(); m as usize]; q as usize];
                for (k, x) in c.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    let j = (a * k as i64).rem_euclid(q as i64) as usize;
                    let e = (b * k as i64).rem_euclid(m as i64) as usize;
                    parts[j][e] += x;
                }
                let parts: Vec<Vec<BigRational>> =
                    parts.into_iter().map(|v| reduce_mod_phi(m, v)).collect();
                if parts[1..].iter().all(|p| *p == parts[1]) {
                    c = parts[0].iter().zip(&parts[1]).map(|(x, y)| x - y).collect();
                    n = m;
                    continue 'outer;
                }
            }
        }
        return (n, c);
    }
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo {
            n: 1,
            c: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(v.into()))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(v))
    }

    pub fn from_rational(v: BigRational) -> Self {
        Cyclo { n: 1, c: vec![v] }
    }

    /// `E(n)^k`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        let mut dense = vec![BigRational::zero(); n as usize];
        dense[k.rem_euclid(n as i64) as usize] = BigRational::one();
        Self::from_dense(n, dense)
    }

    /// The value `sum_i dense[i] E(n)^i` for a coefficient vector indexed by
    /// exponents modulo `n`.
    pub fn from_dense(n: u64, dense: Vec<BigRational>) -> Self {
        assert!(n >= 1 && dense.len() == n as usize, "dense vector must have length n");
        let (n, c) = minimize(n, reduce_mod_phi(n, dense));
        Cyclo { n, c }
    }

    /// Same as [`Cyclo::from_dense`] for integer coefficients.
    pub fn from_dense_int(n: u64, dense: &[i64]) -> Self {
        Self::from_dense(
            n,
            dense.iter().map(|&v| BigRational::from_integer(v.into())).collect(),
        )
    }

    /// Build from power-basis coordinates that are already reduced.
    pub(crate) fn from_reduced(n: u64, c: Vec<BigRational>) -> Self {
        debug_assert_eq!(c.len() as u64, euler_phi(n));
        let (n, c) = minimize(n, c);
        Cyclo { n, c }
    }

    /// The minimal conductor.
    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// Power-basis coordinates for the minimal conductor.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.c[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.c[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.c[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    /// A cyclotomic number is an algebraic integer exactly when its
    /// power-basis coordinates are integers.
    pub fn is_algebraic_integer(&self) -> bool {
        self.c.iter().all(|x| x.is_integer())
    }

    fn dense_in(&self, big: u64) -> Vec<BigRational> {
        let step = (big / self.n) as usize;
        let mut dense = vec![BigRational::zero(); big as usize];
        for (i, x) in self.c.iter().enumerate() {
            dense[i * step] = x.clone();
        }
        dense
    }

    fn reduced_in(&self, big: u64) -> Vec<BigRational> {
        if big == self.n {
            self.c.clone()
        } else {
            reduce_mod_phi(big, self.dense_in(big))
        }
    }

    fn combine(&self, other: &Cyclo, sub: bool) -> Cyclo {
        let big = lcm(self.n, other.n);
        let a = self.reduced_in(big);
        let b = other.reduced_in(big);
        let c = a
            .into_iter()
            .zip(b)
            .map(|(x, y)| if sub { x - y } else { x + y })
            .collect();
        Cyclo::from_reduced(big, c)
    }

    fn scale(&self, r: &BigRational) -> Cyclo {
        if r.is_zero() {
            return Cyclo::zero();
        }
        Cyclo {
            n: self.n,
            c: self.c.iter().map(|x| x * r).collect(),
        }
    }

    fn product(&self, other: &Cyclo) -> Cyclo {
        if self.is_rational() {
            return other.scale(&self.c[0]);
        }
        if other.is_rational() {
            return self.scale(&other.c[0]);
        }
        let big = lcm(self.n, other.n);
        let (sa, sb) = ((big / self.n) as usize, (big / other.n) as usize);
        let mut dense = vec![BigRational::zero(); big as usize];
        for (i, x) in self.c.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in other.c.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                dense[(i * sa + j * sb) % big as usize] += x * y;
            }
        }
        Cyclo::from_dense(big, dense)
    }

    /// The Galois automorphism `E(n) -> E(n)^k`.
    pub fn galois(&self, k: i64) -> Result<Cyclo> {
        let n = self.n;
        let kk = k.rem_euclid(n as i64) as u64;
        if gcd(kk, n) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let mut dense = vec![BigRational::zero(); n as usize];
        for (i, x) in self.c.iter().enumerate() {
            dense[(i as u64 * kk % n) as usize] = x.clone();
        }
        Ok(Cyclo {
            n,
            c: reduce_mod_phi(n, dense),
        })
    }

    pub fn complex_conjugate(&self) -> Cyclo {
        self.galois(-1).expect("-1 is a unit")
    }

    pub fn inverse(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Cyclo::from_rational(self.c[0].recip()));
        }
        let n = self.n as i64;
        let others = (2..n)
            .filter(|&k| gcd(k as u64, n as u64) == 1)
            .fold(Cyclo::one(), |acc, k| acc.product(&self.galois(k).expect("unit")));
        let norm = self
            .product(&others)
            .to_rational()
            .expect("the norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn checked_div(&self, other: &Cyclo) -> Result<Cyclo> {
        Ok(self.product(&other.inverse()?))
    }

    pub fn pow(&self, e: u32) -> Cyclo {
        (0..e).fold(Cyclo::one(), |acc, _| acc.product(self))
    }

    /// Numerical value under the embedding `E(n) -> exp(2 pi i / n)`.
    pub fn to_complex(&self) -> (f64, f64) {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .fold((0.0, 0.0), |(re, im), (i, x)| {
                let v = x.to_f64().unwrap_or(f64::NAN);
                let t = 2.0 * PI * i as f64 / self.n as f64;
                (re + v * t.cos(), im + v * t.sin())
            })
    }

    /// Order by real part, then imaginary part of the standard embedding,
    /// falling back to the canonical order for numerically equal values.
    pub fn embedding_cmp(&self, other: &Cyclo) -> Ordering {
        const TOL: f64 = 1e-9;
        let (a, b) = (self.to_complex(), other.to_complex());
        let cmp = |x: f64, y: f64| {
            if (x - y).abs() <= TOL {
                Ordering::Equal
            } else {
                x.partial_cmp(&y).unwrap_or(Ordering::Equal)
            }
        };
        cmp(a.0, b.0)
            .then(cmp(a.1, b.1))
            .then_with(|| self.cmp(other))
    }

    /// Whether every rational coordinate is non-negative and the value is a
    /// non-negative integer.
    pub fn is_nonnegative_integer(&self) -> bool {
        self.to_integer().is_some_and(|v| !v.is_negative())
    }
}

impl Default for Cyclo {
    fn default() -> Self {
        Cyclo::zero()
    }
}

impl From<i64> for Cyclo {
    fn from(v: i64) -> Self {
        Cyclo::from_int(v)
    }
}

impl From<BigRational> for Cyclo {
    fn from(v: BigRational) -> Self {
        Cyclo::from_rational(v)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo {
                $body(self, rhs)
            }
        }
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: Cyclo) -> Cyclo {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $m(self, rhs: &Cyclo) -> Cyclo {
                $body(&self, rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Cyclo, b: &Cyclo| a.combine(b, false));
binop!(Sub, sub, |a: &Cyclo, b: &Cyclo| a.combine(b, true));
binop!(Mul, mul, |a: &Cyclo, b: &Cyclo| a.product(b));

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        self.scale(&-BigRational::one())
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl std::iter::Sum for Cyclo {
    fn sum<I: Iterator<Item = Cyclo>>(iter: I) -> Cyclo {
        iter.fold(Cyclo::zero(), |a, b| a + b)
    }
}

impl Scalar for Cyclo {
    fn is_zero(&self) -> bool {
        Cyclo::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Cyclo::zero()
    }
    fn one_like(&self) -> Self {
        Cyclo::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        self.inverse().ok()
    }
}
