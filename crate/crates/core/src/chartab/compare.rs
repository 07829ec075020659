use super::CharacterTable;
use crate::cyclo::Cyclo;
use crate::numth::gcd;

/// How one table maps onto another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableMatch {
    /// Column `k` of the first table corresponds to column `columns[k]` of
    /// the second.
    pub columns: Vec<usize>,
    /// The Galois twist `E(m) -> E(m)^galois` applied to the first table.
    pub galois: i64,
}

fn sorted_prefixes(rows: &[Vec<Cyclo>], cols: &[usize]) -> Vec<Vec<Cyclo>> {
    let mut v: Vec<Vec<Cyclo>> = rows
        .iter()
        .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
        .collect();
    v.sort();
    v
}

fn search(
    a: &[Vec<Cyclo>],
    b: &[Vec<Cyclo>],
    candidates: &[Vec<usize>],
    assigned: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let k = assigned.len();
    if k == candidates.len() {
        return true;
    }
    for &c in &candidates[k] {
        if used[c] {
            continue;
        }
        assigned.push(c);
        used[c] = true;
        let a_cols: Vec<usize> = (0..=k).collect();
        if sorted_prefixes(a, &a_cols) == sorted_prefixes(b, assigned)
            && search(a, b, candidates, assigned, used)
        {
            return true;
        }
        assigned.pop();
        used[c] = false;
    }
    false
}

/// Decide whether two tables agree up to a permutation of rows, a
/// permutation of columns preserving element order, class size and
/// centralizer order, and one global Galois automorphism.
pub fn equivalent_tables(a: &CharacterTable, b: &CharacterTable) -> Option<TableMatch> {
    if a.order() != b.order() || a.num_classes() != b.num_classes() {
        return None;
    }
    let r = a.num_classes();
    let key = |t: &CharacterTable, k: usize| {
        let c = t.class(k);
        (c.order, c.size, c.centralizer)
    };
    let candidates: Vec<Vec<usize>> = (0..r)
        .map(|k| (0..r).filter(|&l| key(a, k) == key(b, l)).collect())
        .collect();
    let m = a.exponent().max(1) as i64;
    for g in (1..=m).filter(|&g| gcd(g as u64, m as u64) == 1) {
        let twisted: Vec<Vec<Cyclo>> = a
            .irr()
            .iter()
            .map(|row| row.iter().map(|v| v.galois(g).expect("unit")).collect())
            .collect();
        let mut assigned = Vec::new();
        let mut used = vec![false; r];
        if search(&twisted, b.irr(), &candidates, &mut assigned, &mut used) {
            return Some(TableMatch {
                columns: assigned,
                galois: g,
            });
        }
    }
    None
}
