//! Prime fields and polynomials over them.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

use crate::linalg::Scalar;
use crate::numth::{inv_mod, mul_mod, pow_mod};

/// An element of `F_p`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    pub fn new(v: i64, p: u64) -> Self {
        Fp {
            v: v.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn from_u64(v: u64, p: u64) -> Self {
        Fp { v: v % p, p }
    }

    pub fn value(self) -> u64 {
        self.v
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn pow(self, e: u64) -> Self {
        Fp {
            v: pow_mod(self.v, e, self.p),
            p: self.p,
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Scalar for Fp {
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn zero_like(&self) -> Self {
        Fp { v: 0, p: self.p }
    }
    fn one_like(&self) -> Self {
        Fp::from_u64(1, self.p)
    }
    fn add(&self, o: &Self) -> Self {
        Fp::from_u64(self.v + o.v, self.p)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp::from_u64(self.v + self.p - o.v, self.p)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp {
            v: mul_mod(self.v, o.v, self.p),
            p: self.p,
        }
    }
    fn neg(&self) -> Self {
        Fp::from_u64(self.p - self.v, self.p)
    }
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            None
        } else {
            inv_mod(self.v as i64, self.p).map(|v| Fp { v, p: self.p })
        }
    }
}

/// Polynomials over `F_p` as coefficient vectors, constant term first, with
/// no trailing zeros (the zero polynomial is empty).
pub mod poly {
    use super::*;

    pub type Poly = Vec<u64>;

    pub fn trim(mut a: Poly) -> Poly {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn degree(a: &[u64]) -> Option<usize> {
        a.len().checked_sub(1)
    }

    pub fn add(a: &[u64], b: &[u64], p: u64) -> Poly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
                .collect(),
        )
    }

    pub fn scale(a: &[u64], c: u64, p: u64) -> Poly {
        trim(a.iter().map(|&x| mul_mod(x, c, p)).collect())
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u128; a.len() + b.len() - 1];
        let pp = p as u128;
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x as u128 * y as u128) % pp;
            }
        }
        trim(out.into_iter().map(|v| v as u64).collect())
    }

    /// Quotient and remainder; `b` must be nonzero.
    pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db] as i64, p).expect("nonzero leading coefficient");
        let mut r = a.to_vec();
        if r.len() < b.len() {
            return (Vec::new(), trim(r));
        }
        let mut q = vec![0u64; r.len() - db];
        for i in (0..q.len()).rev() {
            let c = mul_mod(r[i + db], lead_inv, p);
            q[i] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    r[i + j] = (r[i + j] + p - mul_mod(c, bj, p)) % p;
                }
            }
        }
        r.truncate(db);
        (trim(q), trim(r))
    }

    pub fn rem(a: &[u64], b: &[u64], p: u64) -> Poly {
        divrem(a, b, p).1
    }

    pub fn monic(a: &[u64], p: u64) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&l) => scale(a, inv_mod(l as i64, p).expect("nonzero"), p),
        }
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
        let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
        while !y.is_empty() {
            let r = rem(&x, &y, p);
            x = y;
            y = r;
        }
        monic(&x, p)
    }

    pub fn mulmod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Poly {
        rem(&mul(a, b, p), f, p)
    }

    pub fn powmod(base: &[u64], e: &BigUint, f: &[u64], p: u64) -> Poly {
        let mut acc: Poly = rem(&[1], f, p);
        let b = rem(base, f, p);
        for i in (0..e.bits()).rev() {
            acc = mulmod(&acc, &acc, f, p);
            if e.bit(i) {
                acc = mulmod(&acc, &b, f, p);
            }
        }
        acc
    }

    pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
        a.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
    }

    /// `x^(p^k) mod f`.
    fn frobenius_x(k: u32, f: &[u64], p: u64) -> Poly {
        let e = BigUint::from(p).pow(k);
        powmod(&[0, 1], &e, f, p)
    }

    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let Some(d) = degree(f) else { return false };
        if d == 0 {
            return false;
        }
        let f = monic(f, p);
        if frobenius_x(d as u32, &f, p) != rem(&[0, 1], &f, p) {
            return false;
        }
        crate::numth::prime_divisors(d as u64).into_iter().all(|r| {
            let h = sub(&frobenius_x((d as u64 / r) as u32, &f, p), &[0, 1], p);
            gcd(&h, &f, p).len() == 1
        })
    }

    /// Split a monic squarefree `f` whose irreducible factors all have degree
    /// `d` (Cantor-Zassenhaus).
    pub fn equal_degree_factor<R: Rng>(f: &[u64], d: usize, p: u64, rng: &mut R) -> Vec<Poly> {
        let n = degree(f).unwrap_or(0);
        if n <= d {
            return vec![f.to_vec()];
        }
        loop {
            let a: Poly = trim((0..n).map(|_| rng.gen_range(0..p)).collect());
            if degree(&a).unwrap_or(0) < 1 {
                continue;
            }
            let b = if p == 2 {
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..d {
                    t = mulmod(&t, &t, f, p);
                    acc = add(&acc, &t, p);
                }
                acc
            } else {
                let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1;
                sub(&powmod(&a, &e, f, p), &[1], p)
            };
            let g = gcd(f, &b, p);
            let dg = degree(&g).unwrap_or(0);
            if dg > 0 && dg < n {
                let h = monic(&divrem(f, &g, p).0, p);
                let mut out = equal_degree_factor(&g, d, p, rng);
                out.extend(equal_degree_factor(&h, d, p, rng));
                return out;
            }
        }
    }

    /// Distinct roots of `f` in `F_p`, ascending.
    pub fn roots<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<u64> {
        let f = monic(f, p);
        if f.len() <= 1 {
            return Vec::new();
        }
        let xp = powmod(&[0, 1], &BigUint::from(p), &f, p);
        let g = gcd(&f, &sub(&xp, &[0, 1], p), p);
        if g.len() <= 1 {
            return Vec::new();
        }
        let mut rs: Vec<u64> = equal_degree_factor(&g, 1, p, rng)
            .into_iter()
            .map(|lin| (p - lin[0]) % p)
            .collect();
        rs.sort_unstable();
        rs
    }

    pub fn is_zero(a: &[u64]) -> bool {
        a.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::poly::*;
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn fp_arithmetic() {
        let a = Fp::new(-1, 7);
        assert_eq!(a.value(), 6);
        assert_eq!(a.mul(&a).value(), 1);
        assert_eq!(Fp::new(3, 7).inv().unwrap().value(), 5);
        assert!(Fp::new(0, 7).inv().is_none());
        assert_eq!(Fp::new(3, 7).pow(6).value(), 1);
    }

    #[test]
    fn polynomial_arithmetic() {
        let p = 5;
        let a = vec![1, 2, 3];
        let b = vec![4, 1];
        let (q, r) = divrem(&a, &b, p);
        assert_eq!(add(&mul(&q, &b, p), &r, p), a);
        assert_eq!(gcd(&mul(&a, &b, p), &b, p), vec![4, 1]);
        assert_eq!(eval(&[1, 0, 1], 2, p), 0);
    }

    #[test]
    fn irreducibility_and_factoring() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 1, 0, 1], 2));
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        // Phi_7 over F_2 splits into two cubics.
        let mut fs = equal_degree_factor(&[1, 1, 1, 1, 1, 1, 1], 3, 2, &mut rng);
        fs.sort();
        assert_eq!(fs, vec![vec![1, 0, 1, 1], vec![1, 1, 0, 1]]);
        // x^2 - 1 over F_7.
        assert_eq!(roots(&[6, 0, 1], 7, &mut rng), vec![1, 6]);
        assert_eq!(roots(&[1, 0, 1], 7, &mut rng), Vec::<u64>::new());
        assert_eq!(roots(&[0, 0, 1], 7, &mut rng), vec![0]);
    }
}
