use std::collections::{BTreeMap, VecDeque};

use super::{Perm, PermGroup};
use crate::error::{Error, Result};
use crate::numth::{is_prime, lcm, p_split, inv_mod};

/// Conjugacy classes of an enumerated group with their standard metadata.
///
/// Classes are ordered by representative order, then by decreasing size,
/// then by least element. The representative of a class is its least
/// element.
#[derive(Clone, Debug)]
pub struct ConjClassData {
    group_order: u64,
    reps: Vec<usize>,
    rep_perms: Vec<Perm>,
    sizes: Vec<u64>,
    centralizer_orders: Vec<u64>,
    rep_orders: Vec<u64>,
    names: Vec<String>,
    powers: Vec<Vec<usize>>,
    inverse_map: Vec<usize>,
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
}

/// Letter suffix used in class names: a, b, .., z, aa, ab, ..
pub fn class_letter(mut k: usize) -> String {
    let mut s = Vec::new();
    k += 1;
    while k > 0 {
        k -= 1;
        s.push(b'a' + (k % 26) as u8);
        k /= 26;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}

/// Names `1a, 2a, 2b, ..` for classes listed with the given orders.
pub fn class_names(orders: &[u64]) -> Vec<String> {
    let mut seen: BTreeMap<u64, usize> = BTreeMap::new();
    orders
        .iter()
        .map(|&o| {
            let k = seen.entry(o).or_insert(0);
            let name = format!("{o}{}", class_letter(*k));
            *k += 1;
            name
        })
        .collect()
}

pub fn conjugacy_data(g: &PermGroup) -> ConjClassData {
    let n = g.order();
    let gens = g.generator_indices();
    let mut orbit_id = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if orbit_id[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_id[start] = id;
        let mut orbit = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = g.conj_idx(x, s);
                if orbit_id[y] == usize::MAX {
                    orbit_id[y] = id;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    let orders: Vec<u64> = orbits.iter().map(|o| g.element(o[0]).order()).collect();
    let mut perm: Vec<usize> = (0..orbits.len()).collect();
    perm.sort_by_key(|&i| (orders[i], std::cmp::Reverse(orbits[i].len()), orbits[i][0]));
    let mut members = Vec::with_capacity(perm.len());
    let mut rep_orders = Vec::with_capacity(perm.len());
    for &i in &perm {
        members.push(orbits[i].clone());
        rep_orders.push(orders[i]);
    }
    let mut class_of = vec![0; n];
    for (k, m) in members.iter().enumerate() {
        for &x in m {
            class_of[x] = k;
        }
    }
    let reps: Vec<usize> = members.iter().map(|m| m[0]).collect();
    let rep_perms: Vec<Perm> = reps.iter().map(|&r| g.element(r).clone()).collect();
    let sizes: Vec<u64> = members.iter().map(|m| m.len() as u64).collect();
    let centralizer_orders = sizes.iter().map(|&s| n as u64 / s).collect();
    let powers: Vec<Vec<usize>> = rep_perms
        .iter()
        .zip(&rep_orders)
        .map(|(x, &o)| {
            let mut y = Perm::identity(g.degree());
            (0..o)
                .map(|_| {
                    let c = class_of[g.index_of(&y).expect("power lies in group")];
                    y = y.mul(x);
                    c
                })
                .collect()
        })
        .collect();
    let inverse_map = powers
        .iter()
        .zip(&rep_orders)
        .map(|(pw, &o)| pw[(o as usize - 1) % o as usize])
        .collect();
    ConjClassData {
        group_order: n as u64,
        names: class_names(&rep_orders),
        reps,
        rep_perms,
        sizes,
        centralizer_orders,
        rep_orders,
        powers,
        inverse_map,
        class_of,
        members,
    }
}

impl ConjClassData {
    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    /// Element index of the representative of each class.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn rep(&self, k: usize) -> &Perm {
        &self.rep_perms[k]
    }

    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn centralizer_orders(&self) -> &[u64] {
        &self.centralizer_orders
    }

    pub fn rep_orders(&self) -> &[u64] {
        &self.rep_orders
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn members(&self, k: usize) -> &[usize] {
        &self.members[k]
    }

    pub fn inverse_map(&self) -> &[usize] {
        &self.inverse_map
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn class_of_perm(&self, g: &PermGroup, x: &Perm) -> Option<usize> {
        g.index_of(x).map(|i| self.class_of[i])
    }

    pub fn exponent(&self) -> u64 {
        self.rep_orders.iter().fold(1, |a, &o| lcm(a, o))
    }

    /// Class of `x_K^n`.
    pub fn power_class(&self, k: usize, n: i64) -> usize {
        let o = self.rep_orders[k] as i64;
        self.powers[k][n.rem_euclid(o) as usize]
    }

    /// Map `K -> class of x_K^n` over all classes.
    pub fn power_map(&self, n: i64) -> Vec<usize> {
        (0..self.num_classes()).map(|k| self.power_class(k, n)).collect()
    }

    /// Class of the `p`-part of `x_K`.
    pub fn p_part_class(&self, k: usize, p: u64) -> usize {
        let o = self.rep_orders[k];
        let (pa, m) = p_split(o, p);
        let u = m * inv_mod(m as i64, pa).unwrap_or(0);
        self.power_class(k, (u % o) as i64)
    }

    pub fn p_regular_classes(&self, p: u64) -> Result<Vec<usize>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok((0..self.num_classes())
            .filter(|&k| !self.rep_orders[k].is_multiple_of(p))
            .collect())
    }

    /// Classes grouped by the class of their `p`-part; the section of the
    /// identity comes first and equals the `p`-regular classes.
    pub fn p_section_partition(&self, p: u64) -> Result<Vec<Vec<usize>>> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut sections: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in 0..self.num_classes() {
            sections.entry(self.p_part_class(k, p)).or_default().push(k);
        }
        Ok(sections.into_values().collect())
    }
}
