use std::collections::{BTreeSet, HashMap};

use super::BlockPartition;
use crate::charops::FusionMap;
use crate::chartab::GroupData;
use crate::cyclo::fp::Fp;
use crate::cyclo::FqElem;
use crate::error::{Error, Result};
use crate::linalg::{rank, Scalar};
use crate::numth::{p_split, valuation};
use crate::permgrp::{conjugacy_data, is_p_group, sylow_p, ConjClassData, PermGroup, Subgroup};

fn require_p_group(g: &GroupData, s: &Subgroup, p: u64) -> Result<()> {
    if is_p_group(&g.group, s, p) {
        Ok(())
    } else {
        Err(Error::NotPGroup {
            p,
            order: s.order(),
        })
    }
}

/// The map `Z(FG) -> Z(F N_G(P))` sending a class sum to the sum of its
/// elements that centralize `P`, over `F_p`.
#[derive(Clone, Debug)]
pub struct BrauerHom {
    pub prime: u64,
    pub normalizer: PermGroup,
    pub classes: ConjClassData,
    /// For each class of `G`, the classes of `N_G(P)` making up `K ∩ C_G(P)`.
    images: Vec<Vec<usize>>,
}

impl BrauerHom {
    pub fn new(g: &GroupData, p: u64, sub: &Subgroup) -> Result<Self> {
        require_p_group(g, sub, p)?;
        let n = g.group.normalizer(sub);
        let c = g.group.centralizer_of(sub);
        let normalizer = g.group.subgroup_group(&n);
        let classes = conjugacy_data(&normalizer);
        let mut images: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); g.classes.num_classes()];
        for &x in c.members() {
            let l = classes
                .class_of_perm(&normalizer, g.group.element(x))
                .expect("centralizer lies in normalizer");
            images[g.classes.class_of(x)].insert(l);
        }
        Ok(BrauerHom {
            prime: p,
            normalizer,
            classes,
            images: images.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Classes of `N_G(P)` in the image of the class sum of `k`.
    pub fn image_classes(&self, k: usize) -> &[usize] {
        &self.images[k]
    }

    /// Image of `sum_K x_K K^` in class-sum coordinates of `N_G(P)`.
    pub fn apply(&self, x: &[Fp]) -> Vec<Fp> {
        let mut out = vec![Fp::from_u64(0, self.prime); self.classes.num_classes()];
        for (k, v) in x.iter().enumerate() {
            for &l in &self.images[k] {
                out[l] = out[l].add(v);
            }
        }
        out
    }
}

/// Outcome of inducing a block of a subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InducedBlock {
    Block(usize),
    /// The induced central function is not an algebra homomorphism.
    NotMultiplicative,
    /// Multiplicative, but not the central character of any block.
    NoMatch,
}

impl InducedBlock {
    pub fn block(&self) -> Option<usize> {
        match self {
            InducedBlock::Block(b) => Some(*b),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct InducedBlockResult {
    /// `lambda_b^G(K^) = lambda_b(sum of K ∩ H)` for each class `K` of `G`.
    pub lambda: Vec<FqElem>,
    pub result: InducedBlock,
}

/// Both partitions must be built with the same reduction map.
pub fn induced_block(
    g: &GroupData,
    gpart: &BlockPartition,
    h: &GroupData,
    hpart: &BlockPartition,
    b: usize,
) -> Result<InducedBlockResult> {
    let (s, t) = (&gpart.star, &hpart.star);
    if s.prime() != t.prime() || s.m_prime() != t.m_prime() || s.factor() != t.factor() {
        return Err(Error::InvalidArgument("partitions use different reduction maps".into()));
    }
    let block = hpart
        .blocks
        .get(b)
        .ok_or_else(|| Error::InvalidArgument(format!("no block {}", b + 1)))?;
    let fusion = FusionMap::between(h, g)?;
    let zero = block.lambda[0].zero_like();
    let mut lambda = vec![zero; g.classes.num_classes()];
    for (l, &k) in fusion.map().iter().enumerate() {
        lambda[k] = lambda[k].add(&block.lambda[l]);
    }
    let result = if !super::is_multiplicative(&lambda, |k, l, m| g.structure.get(k, l, m)) {
        InducedBlock::NotMultiplicative
    } else {
        match gpart.find(&lambda) {
            Some(b) => InducedBlock::Block(b),
            None => InducedBlock::NoMatch,
        }
    };
    Ok(InducedBlockResult { lambda, result })
}

/// Robinson's count for a normal `p`-subgroup `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RobinsonCount {
    /// `p`-regular classes whose defect group is `D`.
    pub classes: Vec<usize>,
    /// Pairs `(x, y)` in `K x L` with `Px = Py` for a Sylow `p`-subgroup `P`.
    pub matrix: Vec<Vec<u64>>,
    /// Rank of the matrix divided by `p^(a-d)` and reduced mod `p`.
    pub rank: u64,
}

/// Number of blocks with defect group `D` as the rank of the class-pair
/// matrix over `F_p`.
pub fn robinson_block_count(g: &GroupData, p: u64, d: &Subgroup) -> Result<RobinsonCount> {
    require_p_group(g, d, p)?;
    if !g.group.is_normal(d) {
        return Err(Error::NotNormal);
    }
    let grp = &g.group;
    let cc = &g.classes;
    let dd = d.order() as u64;
    let classes: Vec<usize> = (0..cc.num_classes())
        .filter(|&k| {
            let x = cc.reps()[k];
            !cc.rep_orders()[k].is_multiple_of(p)
                && d.gens().iter().all(|&y| grp.element(y).commutes_with(grp.element(x)))
                && p_split(cc.centralizer_orders()[k], p).0 == dd
        })
        .collect();
    let sylow = sylow_p(grp, &grp.whole(), p)?;
    // coset of each element, labelled by its least member
    let coset = |x: usize| sylow.members().iter().map(|&y| grp.mul_idx(y, x)).min().expect("nonempty");
    let counts: Vec<HashMap<usize, u64>> = classes
        .iter()
        .map(|&k| {
            let mut m = HashMap::new();
            for &x in cc.members(k) {
                *m.entry(coset(x)).or_insert(0) += 1;
            }
            m
        })
        .collect();
    let matrix: Vec<Vec<u64>> = counts
        .iter()
        .map(|a| {
            counts
                .iter()
                .map(|b| a.iter().map(|(c, n)| n * b.get(c).copied().unwrap_or(0)).sum())
                .collect()
        })
        .collect();
    let scale = p.pow(valuation(g.table.order(), p) - valuation(dd, p));
    let mut reduced = Vec::with_capacity(matrix.len());
    for (i, row) in matrix.iter().enumerate() {
        let mut r = Vec::with_capacity(row.len());
        for (j, &v) in row.iter().enumerate() {
            if v % scale != 0 {
                return Err(Error::Verification(format!(
                    "entry ({}, {}) = {v} of the class-pair matrix is not divisible by {scale}",
                    i + 1,
                    j + 1
                )));
            }
            r.push(Fp::from_u64(v / scale, p));
        }
        reduced.push(r);
    }
    Ok(RobinsonCount {
        rank: rank(&reduced) as u64,
        classes,
        matrix,
    })
}
