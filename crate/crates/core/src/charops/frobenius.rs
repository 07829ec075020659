use super::clifford::as_subgroup;
use super::{decompose, induce, inner, restrict, ClassFunction, FusionMap};
use crate::chartab::{ClassSet, GroupData};
use crate::error::{Error, Result};

/// Kernel of a Frobenius group, found from characters alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusKernel {
    pub classes: ClassSet,
    pub order: u64,
}

/// `H` must satisfy `H ∩ H^x = 1` for every `x` outside `H`. For each
/// nontrivial irreducible `theta` of `H` the class function
/// `theta(1) 1_G - (theta(1) 1_H - theta)^G` is an irreducible character
/// extending `theta`; the kernel is the intersection of their kernels.
pub fn frobenius_kernel(g: &GroupData, h: &GroupData) -> Result<FrobeniusKernel> {
    let not = |m: String| Err(Error::NotFrobeniusComplement(m));
    let sub = as_subgroup(h, g)?;
    let (n, m) = (g.group.order(), sub.order());
    if m == 1 || m == n {
        return not(format!("subgroup of order {m} is trivial or the whole group"));
    }
    let mut coset_seen = vec![false; n];
    for x in 0..n {
        if coset_seen[x] {
            continue;
        }
        for &y in sub.members() {
            coset_seen[g.group.mul_idx(y, x)] = true;
        }
        if sub.contains(x) {
            continue;
        }
        if let Some(&y) = sub.members()[1..].iter().find(|&&y| sub.contains(g.group.conj_idx(y, x))) {
            return not(format!(
                "{} is conjugated into the subgroup by {}",
                g.group.element(y),
                g.group.element(x)
            ));
        }
    }

    let fusion = FusionMap::between(h, g)?;
    let one_g = ClassFunction::trivial(&g.table);
    let one_h = ClassFunction::trivial(&h.table);
    let mut kernel: ClassSet = (0..g.table.num_classes()).collect();
    for i in 1..h.table.num_irr() {
        let theta = ClassFunction::irreducible(&h.table, i);
        let d = theta.degree().clone();
        let psi = one_h.scale(&d).sub(&theta)?;
        let chi = one_g.scale(&d).sub(&induce(&psi, &fusion, &g.table)?)?;
        if !decompose(&chi).is_character || !inner(&chi, &chi)?.is_one() {
            return Err(Error::Verification(format!(
                "extension of character {} of the complement is not irreducible",
                i + 1
            )));
        }
        if restrict(&chi, &fusion, &h.table)?.values() != theta.values() {
            return Err(Error::Verification(format!(
                "extension of character {} does not restrict to it",
                i + 1
            )));
        }
        let ker: ClassSet = chi.kernel().into_iter().collect();
        kernel = &kernel & &ker;
    }
    let order: u64 = kernel.iter().map(|&k| g.table.class(k).size).sum();
    let index = (n / m) as u64;
    if order != index {
        return Err(Error::Verification(format!("kernel has order {order}, expected {index}")));
    }
    // the kernel and the conjugates of the complement partition G
    let fused: ClassSet = fusion.map()[1..].iter().copied().collect();
    if kernel.iter().any(|k| fused.contains(k)) {
        return Err(Error::Verification("kernel meets a conjugate of the complement".into()));
    }
    let covered: u64 = order + fused.iter().map(|&k| g.table.class(k).size).sum::<u64>();
    if covered != n as u64 {
        return Err(Error::Verification(format!("kernel and complements cover {covered} of {n} elements")));
    }
    Ok(FrobeniusKernel { classes: kernel, order })
}
