//! Structure constants of the class algebra.

use crate::chartab::CharacterTable;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::permgrp::{ConjClassData, PermGroup};

/// The tensor `a[K][L][M]` with `K^ L^ = sum_M a[K][L][M] M^`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    r: usize,
    a: Vec<u64>,
}

impl StructureConstants {
    pub fn num_classes(&self) -> usize {
        self.r
    }

    pub fn get(&self, k: usize, l: usize, m: usize) -> u64 {
        self.a[(k * self.r + l) * self.r + m]
    }

    /// Rows `L`, columns `M`; the central characters are its eigenvectors.
    pub fn class_matrix(&self, k: usize) -> Vec<Vec<u64>> {
        (0..self.r)
            .map(|l| (0..self.r).map(|m| self.get(k, l, m)).collect())
            .collect()
    }
}

/// Count, for the representative `z` of each class `M`, the `x` in `K` with
/// `x^-1 z` in `L`.
pub fn structure_constants(g: &PermGroup, cc: &ConjClassData) -> StructureConstants {
    let r = cc.num_classes();
    let mut a = vec![0u64; r * r * r];
    let inverses: Vec<usize> = (0..g.order()).map(|x| g.inv_idx(x)).collect();
    for (m, &z) in cc.reps().iter().enumerate() {
        for (x, &xi) in inverses.iter().enumerate() {
            let k = cc.class_of(x);
            let l = cc.class_of(g.mul_idx(xi, z));
            a[(k * r + l) * r + m] += 1;
        }
    }
    StructureConstants { r, a }
}

/// The same tensor from the character table; every entry must come out as
/// a non-negative integer.
pub fn structure_constants_from_table(t: &CharacterTable) -> Result<StructureConstants> {
    let r = t.num_classes();
    let order = Cyclo::from_int(t.order() as i64);
    let conj: Vec<Vec<Cyclo>> = t
        .irr()
        .iter()
        .map(|row| row.iter().map(Cyclo::complex_conjugate).collect())
        .collect();
    let inv_deg: Vec<Cyclo> = (0..t.num_irr())
        .map(|i| t.value(i, 0).inverse())
        .collect::<Result<_>>()?;
    let mut a = vec![0u64; r * r * r];
    for k in 0..r {
        for l in 0..r {
            let pre: Vec<Cyclo> = (0..t.num_irr())
                .map(|i| &(t.value(i, k) * t.value(i, l)) * &inv_deg[i])
                .collect();
            let scale = Cyclo::from_int((t.class(k).size * t.class(l).size) as i64)
                .checked_div(&order)?;
            for m in 0..r {
                let s: Cyclo = (0..t.num_irr()).map(|i| &pre[i] * &conj[i][m]).sum();
                let v = &s * &scale;
                let n = v
                    .to_i64()
                    .filter(|&n| n >= 0)
                    .ok_or_else(|| {
                        Error::TableInconsistent(format!(
                            "structure constant ({}, {}, {}) is {v}",
                            t.class(k).name,
                            t.class(l).name,
                            t.class(m).name
                        ))
                    })?;
                a[(k * r + l) * r + m] = n as u64;
            }
        }
    }
    Ok(StructureConstants { r, a })
}
