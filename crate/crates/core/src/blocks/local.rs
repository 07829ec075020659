use super::BlockPartition;
use crate::chartab::GroupData;
use crate::cyclo::{Cyclo, FqElem};
use crate::error::{Error, Result};
use crate::permgrp::{p_core, sylow_p, Perm, Subgroup};

/// Group-theoretic data of one block.
#[derive(Clone, Debug)]
pub struct BlockLocal {
    /// Coefficient of each class sum in the block idempotent.
    pub idempotent: Vec<FqElem>,
    pub defect_classes: Vec<usize>,
    /// A Sylow subgroup of the centralizer of the first defect class.
    pub defect_group: Subgroup,
    pub defect_group_gens: Vec<Perm>,
}

/// `a_B(K) = ((1/|G|) sum_{chi in B} chi(1) conj chi(x_K))*`.
pub fn idempotent_coefficients(g: &GroupData, part: &BlockPartition, b: usize) -> Result<Vec<FqElem>> {
    let t = &g.table;
    let inv_order = Cyclo::from_int(t.order() as i64).inverse()?;
    (0..t.num_classes())
        .map(|k| {
            let s: Cyclo = part.blocks[b]
                .irr
                .iter()
                .map(|&i| t.value(i, 0) * &t.value(i, k).complex_conjugate())
                .sum();
            part.star.reduce(&(&s * &inv_order))
        })
        .collect()
}

/// Sylow `p`-subgroup of `C_G(x_K)`.
pub fn class_defect_group(g: &GroupData, k: usize, p: u64) -> Result<Subgroup> {
    let c = g.group.centralizer(g.classes.reps()[k]);
    sylow_p(&g.group, &c, p)
}

/// Idempotent coefficients, defect classes and defect groups of every block,
/// cross-checked against the defects from character degrees, against
/// `O_p(G) <= D(B)` and against the subconjugacy bounds between block and
/// class defect groups.
pub fn block_local_data(g: &GroupData, part: &BlockPartition) -> Result<Vec<BlockLocal>> {
    let p = part.prime;
    let t = &g.table;
    let fail = |m: String| Err(Error::Verification(m));
    let core = p_core(&g.group, p)?;
    let class_groups = (0..t.num_classes())
        .map(|k| class_defect_group(g, k, p))
        .collect::<Result<Vec<_>>>()?;
    let mut out = Vec::with_capacity(part.num_blocks());
    for (b, block) in part.blocks.iter().enumerate() {
        let name = format!("block {}", b + 1);
        let a = idempotent_coefficients(g, part, b)?;
        if let Some(k) = (0..a.len()).find(|&k| !a[k].is_zero() && t.class(k).order.is_multiple_of(p)) {
            return fail(format!("{name}: idempotent meets the p-singular class {}", t.class(k).name));
        }
        let defect_classes: Vec<usize> = (0..a.len())
            .filter(|&k| !a[k].is_zero() && !block.lambda[k].is_zero())
            .collect();
        let Some(&first) = defect_classes.first() else {
            return fail(format!("{name} has no defect class"));
        };
        let delta = class_groups[first].clone();
        let expected = p.pow(block.defect);
        for &k in &defect_classes {
            if class_groups[k].order() as u64 != expected {
                return fail(format!(
                    "{name}: defect class {} gives a defect group of order {}, degrees give {expected}",
                    t.class(k).name,
                    class_groups[k].order()
                ));
            }
        }
        if !core.is_subgroup_of(&delta) {
            return fail(format!("{name}: O_p(G) is not contained in the defect group"));
        }
        for k in 0..t.num_classes() {
            if !block.lambda[k].is_zero() && !g.group.is_subconjugate(&delta, &class_groups[k]) {
                return fail(format!(
                    "{name}: defect group is not subconjugate to that of class {}",
                    t.class(k).name
                ));
            }
            if !a[k].is_zero() && !g.group.is_subconjugate(&class_groups[k], &delta) {
                return fail(format!(
                    "{name}: defect group of class {} is not subconjugate to the block's",
                    t.class(k).name
                ));
            }
        }
        let defect_group_gens = delta.gens().iter().map(|&i| g.group.element(i).clone()).collect();
        out.push(BlockLocal {
            idempotent: a,
            defect_classes,
            defect_group: delta,
            defect_group_gens,
        });
    }
    Ok(out)
}
