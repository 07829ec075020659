use super::BlockPartition;
use crate::charops::{decompose, ClassFunction};
use crate::chartab::CharacterTable;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::numth::{p_split, valuation};

/// The six equivalent characterizations of a block of defect zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DefectZeroFlags {
    pub equal_counts: bool,
    pub vanishes_off_regular: bool,
    pub vanishes_on_p_elements: bool,
    pub defect_zero: bool,
    pub full_p_part: bool,
    pub single: bool,
}

impl DefectZeroFlags {
    fn as_array(&self) -> [bool; 6] {
        [
            self.equal_counts,
            self.vanishes_off_regular,
            self.vanishes_on_p_elements,
            self.defect_zero,
            self.full_p_part,
            self.single,
        ]
    }

    pub fn consistent(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&x| x == a[0])
    }
}

const CONDITIONS: [&str; 6] = [
    "|Irr(B)| = |IBr(B)|",
    "vanishing on p-singular elements",
    "vanishing on nontrivial p-elements",
    "defect zero",
    "a degree with full p-part",
    "a single character",
];

pub fn defect_zero_report(part: &BlockPartition, t: &CharacterTable) -> Result<Vec<DefectZeroFlags>> {
    let p = part.prime;
    let gp = t.p_part_of_order(p);
    let singular: Vec<usize> = (0..t.num_classes()).filter(|&k| t.class(k).order.is_multiple_of(p)).collect();
    let p_elements: Vec<usize> = singular
        .iter()
        .copied()
        .filter(|&k| p_split(t.class(k).order, p).1 == 1)
        .collect();
    let vanish = |b: &super::Block, cls: &[usize]| {
        b.irr.iter().all(|&i| cls.iter().all(|&k| t.value(i, k).is_zero()))
    };
    let mut out = Vec::new();
    for (n, b) in part.blocks.iter().enumerate() {
        let flags = DefectZeroFlags {
            equal_counts: b.irr.len() == b.ibr_count,
            vanishes_off_regular: vanish(b, &singular),
            vanishes_on_p_elements: vanish(b, &p_elements),
            defect_zero: b.defect == 0,
            full_p_part: b.irr.iter().any(|&i| p_split(t.degree(i), p).0 == gp),
            single: b.irr.len() == 1,
        };
        if !flags.consistent() {
            let a = flags.as_array();
            let bad: Vec<&str> = (0..6).filter(|&j| a[j] != a[3]).map(|j| CONDITIONS[j]).collect();
            return Err(Error::Verification(format!(
                "block {}: defect zero is {} but {} disagree",
                n + 1,
                a[3],
                bad.join(", ")
            )));
        }
        out.push(flags);
    }
    Ok(out)
}

/// `p^d chi` on `p`-regular classes and zero elsewhere, where `p^d` is the
/// `p`-defect of `chi` itself.
#[derive(Clone, Debug)]
pub struct DotCharacter<'t> {
    pub function: ClassFunction<'t>,
    pub defect: u32,
    pub coefficients: Vec<i64>,
}

pub fn defect_zero_generalized_char(t: &CharacterTable, i: usize, p: u64) -> Result<DotCharacter<'_>> {
    let defect = valuation(t.order(), p) - valuation(t.degree(i), p);
    let scale = Cyclo::from_int(p.pow(defect) as i64);
    let values = (0..t.num_classes())
        .map(|k| {
            if t.class(k).order.is_multiple_of(p) {
                Cyclo::zero()
            } else {
                t.value(i, k) * &scale
            }
        })
        .collect();
    let function = ClassFunction::new(t, values)?;
    let coefficients = decompose(&function)
        .integers()
        .ok_or_else(|| Error::Verification(format!("dotted character {} is not a generalized character", i + 1)))?;
    if defect == 0 {
        if let Some(k) = (0..t.num_classes()).find(|&k| t.class(k).order.is_multiple_of(p) && !t.value(i, k).is_zero()) {
            return Err(Error::Verification(format!(
                "character {} has defect zero but does not vanish on {}",
                i + 1,
                t.class(k).name
            )));
        }
    }
    Ok(DotCharacter {
        function,
        defect,
        coefficients,
    })
}
