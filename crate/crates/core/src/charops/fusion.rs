use super::ClassFunction;
use crate::chartab::{CharacterTable, GroupData};
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Embedding of the classes of a subgroup `H` into the classes of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionMap {
    map: Vec<usize>,
    target_classes: usize,
}

impl FusionMap {
    /// Validates an explicit map against both tables: element orders must
    /// agree and `|C_H(x)|` must divide `|C_G(x)|`.
    pub fn new(map: Vec<usize>, sub: &CharacterTable, sup: &CharacterTable) -> Result<Self> {
        if map.len() != sub.num_classes() {
            return Err(Error::FusionInconsistent(format!(
                "{} entries for {} subgroup classes",
                map.len(),
                sub.num_classes()
            )));
        }
        if !sup.order().is_multiple_of(sub.order()) {
            return Err(Error::FusionInconsistent(format!(
                "subgroup order {} does not divide {}",
                sub.order(),
                sup.order()
            )));
        }
        if map.first() != Some(&0) {
            return Err(Error::FusionInconsistent("identity class must map to 1a".into()));
        }
        for (l, &k) in map.iter().enumerate() {
            let (a, b) = match (sub.classes().get(l), sup.classes().get(k)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(Error::FusionInconsistent(format!("class index {} out of range", k + 1))),
            };
            if a.order != b.order || b.centralizer % a.centralizer != 0 {
                return Err(Error::FusionInconsistent(format!(
                    "subgroup class {} cannot fuse into {}",
                    a.name, b.name
                )));
            }
        }
        Ok(FusionMap {
            map,
            target_classes: sup.num_classes(),
        })
    }

    /// Fusion of a subgroup whose elements lie in the permutation group of `g`.
    pub fn between(h: &GroupData, g: &GroupData) -> Result<Self> {
        let map = (0..h.classes.num_classes())
            .map(|l| {
                let x = h.classes.rep(l);
                g.classes.class_of_perm(&g.group, x).ok_or_else(|| {
                    Error::FusionInconsistent(format!("{x} is not an element of the group"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(map, &h.table, &g.table)
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, l: usize) -> usize {
        self.map[l]
    }

    fn check(&self, sub: &CharacterTable, sup: &CharacterTable) -> Result<()> {
        if sub.num_classes() != self.map.len() || sup.num_classes() != self.target_classes {
            return Err(Error::FusionInconsistent("fusion map does not fit the tables".into()));
        }
        Ok(())
    }
}

/// `phi^G(K) = |C_G(x_K)| sum_{L -> K} phi(L) / |C_H(x_L)|`.
pub fn induce<'g>(
    phi: &ClassFunction<'_>,
    fusion: &FusionMap,
    sup: &'g CharacterTable,
) -> Result<ClassFunction<'g>> {
    let sub = phi.table();
    fusion.check(sub, sup)?;
    let mut values = vec![Cyclo::zero(); sup.num_classes()];
    for (l, &k) in fusion.map.iter().enumerate() {
        let v = phi.value(l);
        if v.is_zero() {
            continue;
        }
        let w = BigRational::new(
            BigInt::from(sup.class(k).centralizer),
            BigInt::from(sub.class(l).centralizer),
        );
        values[k] = &values[k] + &(v * &Cyclo::from_rational(w));
    }
    ClassFunction::new(sup, values)
}

/// Pullback of `psi` along the fusion.
pub fn restrict<'h>(
    psi: &ClassFunction<'_>,
    fusion: &FusionMap,
    sub: &'h CharacterTable,
) -> Result<ClassFunction<'h>> {
    fusion.check(sub, psi.table())?;
    ClassFunction::new(sub, fusion.map.iter().map(|&k| psi.value(k).clone()).collect())
}
