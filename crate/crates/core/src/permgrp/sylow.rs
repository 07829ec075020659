use super::{Perm, PermGroup, Subgroup};
use crate::error::{Error, Result};
use crate::numth::{inv_mod, is_prime, p_split};

/// Split `g` (of the given order) into its commuting `p`- and `p'`-parts.
pub fn p_parts(g: &Perm, order: u64, p: u64) -> Result<(Perm, Perm)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let (pa, m) = p_split(order, p);
    let u = m * inv_mod(m as i64, pa).unwrap_or(0) % order.max(1);
    let v = (order + 1 - u) % order.max(1);
    Ok((g.pow(u as i64), g.pow(v as i64)))
}

/// One Sylow `p`-subgroup of `s`, built greedily: repeatedly adjoin the least
/// element that normalizes the current `p`-subgroup and has its `p`-th power
/// inside it.
pub fn sylow_p(g: &PermGroup, s: &Subgroup, p: u64) -> Result<Subgroup> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let (target, _) = p_split(s.order() as u64, p);
    let mut cur = g.closure(&[]);
    let mut gens: Vec<usize> = Vec::new();
    while (cur.order() as u64) < target {
        let x = s
            .members()
            .iter()
            .copied()
            .find(|&x| {
                !cur.contains(x)
                    && cur.contains(g.index_of(&g.element(x).pow(p as i64)).expect("closed"))
                    && cur.gens().iter().all(|&h| cur.contains(g.conj_idx(h, x)))
            })
            .expect("a proper p-subgroup is properly contained in its normalizer");
        gens.push(x);
        cur = g.closure(&gens);
    }
    Ok(cur)
}

/// Largest normal `p`-subgroup `O_p(G)`.
pub fn p_core(g: &PermGroup, p: u64) -> Result<Subgroup> {
    let syl = sylow_p(g, &g.whole(), p)?;
    let members = syl
        .members()
        .iter()
        .copied()
        .filter(|&x| (0..g.order()).all(|y| syl.contains(g.conj_idx(x, y))))
        .collect();
    Ok(Subgroup::from_members(g, members))
}

/// Whether every element of `s` has `p`-power order.
pub fn is_p_group(g: &PermGroup, s: &Subgroup, p: u64) -> bool {
    let (pp, _) = p_split(s.order() as u64, p);
    pp == s.order() as u64 && s.members().iter().all(|&x| p_split(g.element(x).order(), p).1 == 1)
}
