//! Brute-force group algebra over a finite field: an independent check of
//! block idempotents and of the radical of the center.

use std::sync::Arc;

use crate::blocks::{idempotent_coefficients, BlockPartition};
use crate::chartab::GroupData;
use crate::cyclo::fp::Fp;
use crate::cyclo::{FqElem, FqField};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank, rref, Scalar};
use crate::permgrp::PermGroup;

/// Largest group the oracle accepts.
pub const ORACLE_MAX_ORDER: usize = 2000;

/// An element of `FG` as a dense coefficient vector over the group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement<F> {
    pub coeffs: Vec<F>,
}

/// `FG` with its multiplication table.
#[derive(Clone, Debug)]
pub struct GroupAlgebra<F> {
    n: usize,
    table: Vec<u32>,
    generators: Vec<usize>,
    zero: F,
}

impl<F: Scalar> GroupAlgebra<F> {
    /// `zero` fixes the coefficient field.
    pub fn new(g: &PermGroup, zero: F) -> Result<Self> {
        let n = g.order();
        if n > ORACLE_MAX_ORDER {
            return Err(Error::GroupTooLarge {
                cap: ORACLE_MAX_ORDER,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            table.extend((0..n).map(|b| g.mul_idx(a, b) as u32));
        }
        Ok(GroupAlgebra {
            n,
            table,
            generators: g.generator_indices(),
            zero,
        })
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> AlgebraElement<F> {
        AlgebraElement {
            coeffs: vec![self.zero.clone(); self.n],
        }
    }

    /// The basis element of group element `g`.
    pub fn delta(&self, g: usize) -> AlgebraElement<F> {
        let mut a = self.zero();
        a.coeffs[g] = self.zero.one_like();
        a
    }

    pub fn one(&self) -> AlgebraElement<F> {
        self.delta(0)
    }

    /// `sum_K c_K K^` for class member lists.
    pub fn from_class_sums<'a>(&self, terms: impl IntoIterator<Item = (&'a [usize], F)>) -> AlgebraElement<F> {
        let mut a = self.zero();
        for (members, c) in terms {
            for &x in members {
                a.coeffs[x] = a.coeffs[x].add(&c);
            }
        }
        a
    }

    /// `c_g = sum_{xy = g} a_x b_y`.
    pub fn convolve(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> AlgebraElement<F> {
        let mut c = self.zero();
        for (x, ax) in a.coeffs.iter().enumerate() {
            if ax.is_zero() {
                continue;
            }
            let row = &self.table[x * self.n..(x + 1) * self.n];
            for (y, by) in b.coeffs.iter().enumerate() {
                if !by.is_zero() {
                    let g = row[y] as usize;
                    c.coeffs[g] = c.coeffs[g].add(&ax.mul(by));
                }
            }
        }
        c
    }

    pub fn add(&self, a: &AlgebraElement<F>, b: &AlgebraElement<F>) -> AlgebraElement<F> {
        AlgebraElement {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.add(y)).collect(),
        }
    }

    /// Commutes with every generator of the group.
    pub fn is_central(&self, a: &AlgebraElement<F>) -> bool {
        self.generators.iter().all(|&s| {
            let d = self.delta(s);
            self.convolve(a, &d) == self.convolve(&d, a)
        })
    }
}

impl<F: Scalar> AlgebraElement<F> {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }
}

/// Number of orbits of the group acting on itself by conjugation with the
/// generators, found by union-find.
pub fn conjugation_orbits(g: &PermGroup) -> usize {
    let n = g.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for s in g.generator_indices() {
        for x in 0..n {
            let y = g.conj_idx(x, s);
            let (a, b) = (root(&mut parent, x), root(&mut parent, y));
            parent[a.max(b)] = a.min(b);
        }
    }
    (0..n).filter(|&x| root(&mut parent, x) == x).count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentReport {
    pub blocks: usize,
    /// `dim e_B Z(FG)` per block.
    pub block_center_dims: Vec<usize>,
}

fn coordinates<F: Scalar>(data: &GroupData, a: &AlgebraElement<F>) -> Vec<F> {
    data.classes.reps().iter().map(|&x| a.coeffs[x].clone()).collect()
}

/// Dimension sequence of the powers of the ideal spanned by `basis` until it
/// vanishes; fails if the powers stop shrinking.
fn power_dims<F: Scalar>(
    alg: &GroupAlgebra<F>,
    data: &GroupData,
    basis: &[AlgebraElement<F>],
) -> Option<Vec<usize>> {
    let mut cur: Vec<AlgebraElement<F>> = basis.to_vec();
    let mut dims = vec![cur.len()];
    while !cur.is_empty() {
        let mut prods: Vec<AlgebraElement<F>> = Vec::new();
        for x in &cur {
            for y in basis {
                prods.push(alg.convolve(x, y));
            }
        }
        let coords: Vec<Vec<F>> = prods.iter().map(|a| coordinates(data, a)).collect();
        let mut m = coords.clone();
        let piv = rref(&mut m);
        // keep an independent subset of the products
        let mut next = Vec::new();
        let mut acc: Vec<Vec<F>> = Vec::new();
        for (a, c) in prods.into_iter().zip(coords) {
            acc.push(c);
            if rank(&acc) > next.len() {
                next.push(a);
            } else {
                acc.pop();
            }
            if next.len() == piv.len() {
                break;
            }
        }
        if next.len() >= cur.len() {
            return None;
        }
        dims.push(next.len());
        cur = next;
    }
    Some(dims)
}

/// Builds `e_B = sum_K a_B(K) K^` in `FG` and checks that the `e_B` are
/// central, idempotent, pairwise orthogonal and sum to 1, and that each
/// `e_B Z(FG)` is local: the kernel of `lambda_B` on it has codimension one
/// and is nilpotent.
pub fn verify_block_idempotents(data: &GroupData, part: &BlockPartition) -> Result<IdempotentReport> {
    let field: Arc<FqField> = part.star.field().clone();
    let alg = GroupAlgebra::new(&data.group, field.zero())?;
    let fail = |m: String| Err(Error::Verification(m));
    let r = data.classes.num_classes();
    let class_sums: Vec<AlgebraElement<FqElem>> = (0..r)
        .map(|k| alg.from_class_sums([(data.classes.members(k), field.one())]))
        .collect();
    let mut idems = Vec::with_capacity(part.num_blocks());
    for b in 0..part.num_blocks() {
        let a = idempotent_coefficients(data, part, b)?;
        let e = alg.from_class_sums((0..r).map(|k| (data.classes.members(k), a[k].clone())));
        if !alg.is_central(&e) {
            return fail(format!("block {}: idempotent is not central", b + 1));
        }
        if alg.convolve(&e, &e) != e {
            return fail(format!("block {}: e_B^2 != e_B", b + 1));
        }
        idems.push(e);
    }
    for i in 0..idems.len() {
        for j in i + 1..idems.len() {
            if !alg.convolve(&idems[i], &idems[j]).is_zero() {
                return fail(format!("blocks {} and {}: e_B e_B' != 0", i + 1, j + 1));
            }
        }
    }
    let total = idems.iter().fold(alg.zero(), |acc, e| alg.add(&acc, e));
    if total != alg.one() {
        return fail("block idempotents do not sum to 1".into());
    }
    let mut block_center_dims = Vec::new();
    for (b, e) in idems.iter().enumerate() {
        let lambda = &part.blocks[b].lambda;
        let span: Vec<AlgebraElement<FqElem>> = class_sums.iter().map(|k| alg.convolve(e, k)).collect();
        let coords: Vec<Vec<FqElem>> = span.iter().map(|a| coordinates(data, a)).collect();
        let mut m = coords.clone();
        let pivots = rref(&mut m);
        let basis: Vec<Vec<FqElem>> = m[..pivots.len()].to_vec();
        let dim = basis.len();
        // lambda_B on the basis, then its kernel inside e_B Z(FG)
        let eval = |v: &[FqElem]| {
            v.iter()
                .zip(lambda)
                .fold(field.zero(), |acc, (c, l)| acc.add(&c.mul(l)))
        };
        let row: Vec<FqElem> = basis.iter().map(|v| eval(v)).collect();
        if row.iter().all(FqElem::is_zero) {
            return fail(format!("block {}: lambda_B vanishes on e_B Z(FG)", b + 1));
        }
        let ker = nullspace(&[row], dim, &field.zero());
        if ker.len() + 1 != dim {
            return fail(format!("block {}: kernel of lambda_B has codimension != 1", b + 1));
        }
        let ker_elems: Vec<AlgebraElement<FqElem>> = ker
            .iter()
            .map(|c| {
                let v: Vec<FqElem> = (0..r)
                    .map(|k| {
                        c.iter()
                            .zip(&basis)
                            .fold(field.zero(), |acc, (x, bv)| acc.add(&x.mul(&bv[k])))
                    })
                    .collect();
                alg.from_class_sums((0..r).map(|k| (data.classes.members(k), v[k].clone())))
            })
            .collect();
        if power_dims(&alg, data, &ker_elems).is_none() {
            return fail(format!("block {}: kernel of lambda_B is not nilpotent", b + 1));
        }
        block_center_dims.push(dim);
    }
    if block_center_dims.iter().sum::<usize>() != r {
        return fail("block components of the center do not add up".into());
    }
    Ok(IdempotentReport {
        blocks: idems.len(),
        block_center_dims,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    pub center_dim: usize,
    pub radical_dim: usize,
    /// Least `k` with `J^k = 0`.
    pub nilpotency_index: usize,
    /// Whether the sum of all group elements lies in the radical.
    pub group_sum_in_radical: bool,
}

/// `J(Z(FG))` as the common kernel of the block characters, cross-checked
/// against the nilpotent elements found by iterating `z -> z^p` over `F_p`.
pub fn center_radical(data: &GroupData, part: &BlockPartition) -> Result<RadicalReport> {
    let p = part.prime;
    let field = part.star.field().clone();
    let r = data.classes.num_classes();
    let fail = |m: String| Err(Error::Verification(m));
    let orbits = conjugation_orbits(&data.group);
    if orbits != r {
        return fail(format!("{orbits} conjugation orbits for {r} classes"));
    }
    let lambdas: Vec<Vec<FqElem>> = part.blocks.iter().map(|b| b.lambda.clone()).collect();
    let rad = nullspace(&lambdas, r, &field.zero());
    let alg = GroupAlgebra::new(&data.group, field.zero())?;
    let rad_elems: Vec<AlgebraElement<FqElem>> = rad
        .iter()
        .map(|v| alg.from_class_sums((0..r).map(|k| (data.classes.members(k), v[k].clone()))))
        .collect();
    let dims = power_dims(&alg, data, &rad_elems)
        .ok_or_else(|| Error::Verification("common kernel of the block characters is not nilpotent".into()))?;
    let nilpotency_index = dims.len();

    // over F_p: z -> z^p is linear on Z(F_p G); its iterate kills exactly
    // the nilpotent elements
    let palg = GroupAlgebra::new(&data.group, Fp::from_u64(0, p))?;
    let one = Fp::from_u64(1, p);
    let frob_cols: Vec<Vec<Fp>> = (0..r)
        .map(|k| {
            let s = palg.from_class_sums([(data.classes.members(k), one)]);
            let mut acc = palg.one();
            for _ in 0..p {
                acc = palg.convolve(&acc, &s);
            }
            coordinates(data, &acc)
        })
        .collect();
    // matrix acting on coordinate rows: v -> v F, F[k] = image of class k
    let mut power = frob_cols.clone();
    let mut reach = p as usize;
    while reach < r {
        power = (0..r)
            .map(|k| {
                (0..r).fold(vec![Fp::from_u64(0, p); r], |acc, j| {
                    let c = power[k][j];
                    if c.is_zero() {
                        acc
                    } else {
                        acc.iter().zip(&frob_cols[j]).map(|(a, b)| a.add(&c.mul(b))).collect()
                    }
                })
            })
            .collect();
        reach = reach.saturating_mul(p as usize);
    }
    let frob_rank = rank(&power);
    if r - frob_rank != rad.len() {
        return fail(format!(
            "Frobenius kernel has dimension {}, common kernel of the block characters {}",
            r - frob_rank,
            rad.len()
        ));
    }
    let ones = vec![field.one(); r];
    let in_radical = lambdas.iter().all(|l| {
        l.iter()
            .zip(&ones)
            .fold(field.zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            .is_zero()
    });
    if (data.group.order() as u64).is_multiple_of(p) && !in_radical {
        return fail("the sum of all group elements is not in the radical".into());
    }
    Ok(RadicalReport {
        center_dim: r,
        radical_dim: rad.len(),
        nilpotency_index,
        group_sum_in_radical: in_radical,
    })
}
