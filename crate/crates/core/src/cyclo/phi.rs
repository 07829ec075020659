use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::numth::divisors;

static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();

/// Integer coefficients of the `n`-th cyclotomic polynomial, constant term
/// first.
pub fn cyclotomic_poly(n: u64) -> Arc<Vec<i64>> {
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().expect("cache lock").get(&n) {
        return f.clone();
    }
    let f = Arc::new(compute(n));
    cache.lock().expect("cache lock").insert(n, f.clone());
    f
}

fn compute(n: u64) -> Vec<i64> {
    // x^n - 1 divided by every Phi_d with d a proper divisor of n.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        num = div_monic(&num, &cyclotomic_poly(d));
    }
    num
}

fn div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db];
        q[i] = c;
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                r[i + j] -= c * bj;
            }
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0), "inexact cyclotomic division");
    q
}
