use super::{inner, restrict, ClassFunction, FusionMap};
use crate::chartab::GroupData;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::permgrp::Subgroup;

/// Stabilizer of a class function of a normal subgroup under conjugation.
#[derive(Clone, Debug, PartialEq)]
pub struct InertiaReport {
    pub order: usize,
    /// Number of distinct conjugates, `|G : I|`.
    pub index: usize,
    /// Values of the distinct conjugates; the function itself comes first.
    pub conjugates: Vec<Vec<Cyclo>>,
    /// Irreducible characters of `G` lying over the function, with the
    /// ramification `e` in `chi_H = e (theta_1 + ... + theta_t)`.
    pub clifford: Vec<(usize, u64)>,
}

/// `h` must be built from elements of the group of `g`.
pub fn as_subgroup(h: &GroupData, g: &GroupData) -> Result<Subgroup> {
    let members = h
        .group
        .elements()
        .iter()
        .map(|x| {
            g.group
                .index_of(x)
                .ok_or_else(|| Error::InvalidArgument(format!("{x} is not an element of the group")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subgroup::from_members(&g.group, members))
}

/// Values of `theta^x`, where `theta^x(y) = theta(x y x^-1)`.
fn conjugate_values(theta: &ClassFunction<'_>, h: &GroupData, x: &crate::permgrp::Perm) -> Vec<Cyclo> {
    let xinv = x.inv();
    (0..h.classes.num_classes())
        .map(|l| {
            let y = h.classes.rep(l).conj(&xinv);
            let c = h.classes.class_of_perm(&h.group, &y).expect("normal subgroup");
            theta.value(c).clone()
        })
        .collect()
}

pub fn inertia_group(theta: &ClassFunction<'_>, h: &GroupData, g: &GroupData) -> Result<InertiaReport> {
    if !std::ptr::eq(theta.table(), &h.table) {
        return Err(Error::TableMismatch);
    }
    let sub = as_subgroup(h, g)?;
    if !g.group.is_normal(&sub) {
        return Err(Error::NotNormal);
    }
    let mut order = 0;
    let mut conjugates: Vec<Vec<Cyclo>> = vec![theta.values().to_vec()];
    for x in g.group.elements() {
        let v = conjugate_values(theta, h, x);
        if v == theta.values() {
            order += 1;
        } else if !conjugates.contains(&v) {
            conjugates.push(v);
        }
    }
    let index = conjugates.len();
    if order * index != g.group.order() {
        return Err(Error::Verification(format!(
            "orbit of length {index} against stabilizer of order {order}"
        )));
    }

    let fusion = FusionMap::between(h, g)?;
    let orbit_sum: Vec<Cyclo> = (0..h.classes.num_classes())
        .map(|l| conjugates.iter().map(|c| c[l].clone()).sum())
        .collect();
    let mut clifford = Vec::new();
    for i in 0..g.table.num_irr() {
        let res = restrict(&ClassFunction::irreducible(&g.table, i), &fusion, &h.table)?;
        let e = inner(&res, theta)?;
        if e.is_zero() {
            continue;
        }
        let e = e
            .to_integer()
            .and_then(|v| u64::try_from(v).ok())
            .ok_or_else(|| Error::Verification(format!("multiplicity {e} is not a natural number")))?;
        let scaled: Vec<Cyclo> = orbit_sum.iter().map(|v| v * &Cyclo::from_int(e as i64)).collect();
        if res.values() != scaled.as_slice() {
            return Err(Error::Verification(format!(
                "restriction of character {} is not {e} times the orbit sum",
                i + 1
            )));
        }
        clifford.push((i, e));
    }
    if clifford.is_empty() {
        return Err(Error::Verification("no character lies over the given one".into()));
    }
    Ok(InertiaReport {
        order,
        index,
        conjugates,
        clifford,
    })
}
