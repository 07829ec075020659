use super::{block_partition, induced_block, BlockPartition, InducedBlock};
use crate::charops::{inner, restrict, ClassFunction, FusionMap};
use crate::chartab::{CharacterTable, GroupData};
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::rref;
use crate::numth::p_split;

/// Decomposition matrix available without a Brauer table: the identity when
/// `p` does not divide the order, one column of degrees for a `p`-group.
pub fn elementary_decomposition(t: &CharacterTable, p: u64) -> Option<Vec<Vec<u64>>> {
    let n = t.num_irr();
    let (pa, m) = p_split(t.order(), p);
    if pa == 1 {
        Some((0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect())
    } else if m == 1 {
        Some((0..n).map(|i| vec![t.degree(i)]).collect())
    } else {
        None
    }
}

/// Generalized decomposition numbers `d^x` for a `p`-element `x`.
#[derive(Clone, Debug, PartialEq)]
pub struct HigherDecomposition {
    /// `|Irr(G)| x |IBr(C_G(x))|`.
    pub values: Vec<Vec<Cyclo>>,
    /// Block of `G` induced from the block of each Brauer character of the
    /// centralizer, when defined.
    pub induced: Vec<Option<usize>>,
    /// Number of entries forced to vanish by block induction.
    pub vanishing_checked: usize,
}

/// `d^x_{chi phi} = sum_tau (chi_C, tau) d_{tau phi} tau(x)/tau(1)` with
/// `C = C_G(x)` given by `c` and its decomposition matrix. Entries are
/// checked to be algebraic integers in `Q(E(|x|))`, to reproduce `chi(x)`
/// from the Brauer degrees of `C`, and to vanish whenever the block of
/// `phi` induces a block not containing `chi`.
pub fn higher_decomposition(
    g: &GroupData,
    gpart: &BlockPartition,
    x: usize,
    c: &GroupData,
    c_decomp: &[Vec<u64>],
) -> Result<HigherDecomposition> {
    let p = gpart.prime;
    let bad = |m: String| Err(Error::InvalidArgument(m));
    let xp = g.group.element(x);
    let ord = xp.order();
    if p_split(ord, p).1 != 1 {
        return bad(format!("{xp} is not a {p}-element"));
    }
    let cent = g.group.centralizer(x);
    if cent.order() != c.group.order() || !c.group.elements().iter().all(|y| y.commutes_with(xp)) {
        return bad("the given subgroup is not the centralizer of the element".into());
    }
    let ct = &c.table;
    let r = c_decomp.first().map_or(0, Vec::len);
    if c_decomp.len() != ct.num_irr() || r == 0 || c_decomp.iter().any(|row| row.len() != r) {
        return bad("decomposition matrix of the centralizer has the wrong shape".into());
    }
    let xc = c.classes.class_of_perm(&c.group, xp).expect("x is central in C");
    let fusion = FusionMap::between(c, g)?;
    let omega: Vec<Cyclo> = (0..ct.num_irr())
        .map(|tau| ct.value(tau, xc).checked_div(ct.value(tau, 0)))
        .collect::<Result<_>>()?;

    // Brauer degrees of C from tau(1) = sum_phi d_{tau phi} phi(1)
    let mut aug: Vec<Vec<Cyclo>> = (0..ct.num_irr())
        .map(|tau| {
            let mut row: Vec<Cyclo> = c_decomp[tau].iter().map(|&v| Cyclo::from_int(v as i64)).collect();
            row.push(Cyclo::from_int(ct.degree(tau) as i64));
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() != r || pivots.contains(&r) {
        return bad("decomposition matrix of the centralizer is inconsistent with its degrees".into());
    }
    let brauer_degrees: Vec<Cyclo> = (0..r).map(|j| aug[j][r].clone()).collect();

    let mut values = Vec::with_capacity(g.table.num_irr());
    for chi in 0..g.table.num_irr() {
        let res = restrict(&ClassFunction::irreducible(&g.table, chi), &fusion, ct)?;
        let mult: Vec<Cyclo> = (0..ct.num_irr())
            .map(|tau| inner(&res, &ClassFunction::irreducible(ct, tau)))
            .collect::<Result<_>>()?;
        let row: Vec<Cyclo> = (0..r)
            .map(|phi| {
                (0..ct.num_irr())
                    .filter(|&tau| c_decomp[tau][phi] != 0 && !mult[tau].is_zero())
                    .map(|tau| &(&mult[tau] * &omega[tau]) * &Cyclo::from_int(c_decomp[tau][phi] as i64))
                    .sum()
            })
            .collect();
        for v in &row {
            if !v.is_algebraic_integer() || !ord.is_multiple_of(v.conductor()) {
                return Err(Error::Verification(format!(
                    "d^x entry {v} for character {} is not an integer of Q(E({ord}))",
                    chi + 1
                )));
            }
        }
        let at_x: Cyclo = row.iter().zip(&brauer_degrees).map(|(a, b)| a * b).sum();
        if &at_x != g.table.value(chi, g.classes.class_of(x)) {
            return Err(Error::Verification(format!(
                "d^x for character {} gives {at_x} at x",
                chi + 1
            )));
        }
        values.push(row);
    }

    let cpart = block_partition(ct, &gpart.star)?;
    let mut induced = Vec::with_capacity(r);
    let mut vanishing_checked = 0;
    for phi in 0..r {
        let owner = (0..ct.num_irr())
            .find(|&tau| c_decomp[tau][phi] != 0)
            .map(|tau| cpart.block_of(tau))
            .expect("nonzero column");
        let big = induced_block(g, gpart, c, &cpart, owner)?;
        let target = match big.result {
            InducedBlock::Block(b) => Some(b),
            _ => None,
        };
        if let Some(b) = target {
            for (chi, row) in values.iter().enumerate() {
                if gpart.block_of(chi) != b {
                    if !row[phi].is_zero() {
                        return Err(Error::Verification(format!(
                            "d^x for character {} outside the induced block is {}",
                            chi + 1,
                            row[phi]
                        )));
                    }
                    vanishing_checked += 1;
                }
            }
        }
        induced.push(target);
    }
    Ok(HigherDecomposition {
        values,
        induced,
        vanishing_checked,
    })
}
