use std::collections::{BTreeSet, VecDeque};

use super::CharacterTable;
use crate::cyclo::Cyclo;
use crate::numth::factorize;

/// A union of conjugacy classes, by index.
pub type ClassSet = BTreeSet<usize>;

/// Group structure read off the character table.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureReport {
    pub kernels: Vec<ClassSet>,
    /// `Z(chi)`: classes where `|chi| = chi(1)`.
    pub centers: Vec<ClassSet>,
    /// Every normal subgroup with its order, ascending by order.
    pub normal_subgroups: Vec<(ClassSet, u64)>,
    pub derived_subgroup: ClassSet,
    pub center: ClassSet,
    pub solvable: bool,
    pub nilpotent: bool,
    /// `|G : G'|`, the number of linear characters.
    pub linear_count: usize,
}

impl CharacterTable {
    pub fn class_set_order(&self, s: &ClassSet) -> u64 {
        s.iter().map(|&k| self.class(k).size).sum()
    }

    pub fn kernel(&self, i: usize) -> ClassSet {
        (0..self.num_classes())
            .filter(|&k| self.value(i, k) == self.value(i, 0))
            .collect()
    }

    pub fn character_center(&self, i: usize) -> ClassSet {
        let d = self.value(i, 0);
        let d2 = d * d;
        (0..self.num_classes())
            .filter(|&k| {
                let v = self.value(i, k);
                (v * &v.complex_conjugate()) == d2
            })
            .collect()
    }
}

fn intersect_all<I: IntoIterator<Item = ClassSet>>(all: ClassSet, sets: I) -> ClassSet {
    sets.into_iter()
        .fold(all, |acc, s| acc.intersection(&s).copied().collect())
}

fn is_prime_power(n: u64) -> bool {
    n > 1 && factorize(n).len() == 1
}

pub fn structure_report(t: &CharacterTable) -> StructureReport {
    let all: ClassSet = (0..t.num_classes()).collect();
    let kernels: Vec<ClassSet> = (0..t.num_irr()).map(|i| t.kernel(i)).collect();
    let centers: Vec<ClassSet> = (0..t.num_irr()).map(|i| t.character_center(i)).collect();

    let mut normals: BTreeSet<ClassSet> = kernels.iter().cloned().collect();
    normals.insert(all.clone());
    loop {
        let list: Vec<ClassSet> = normals.iter().cloned().collect();
        let mut grew = false;
        for a in &list {
            for b in &list {
                let c: ClassSet = a.intersection(b).copied().collect();
                grew |= normals.insert(c);
            }
        }
        if !grew {
            break;
        }
    }
    let mut normal_subgroups: Vec<(ClassSet, u64)> = normals
        .into_iter()
        .map(|s| {
            let o = t.class_set_order(&s);
            (s, o)
        })
        .collect();
    normal_subgroups.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));

    let linear: Vec<usize> = (0..t.num_irr()).filter(|&i| t.degree(i) == 1).collect();
    let derived_subgroup = intersect_all(all.clone(), linear.iter().map(|&i| kernels[i].clone()));
    let center = intersect_all(all.clone(), centers.iter().cloned());

    let order = t.order();
    let trivial: ClassSet = [0].into_iter().collect();
    let mut seen = BTreeSet::from([trivial.clone()]);
    let mut queue = VecDeque::from([(trivial.clone(), 1u64)]);
    let mut solvable = order == 1;
    while let Some((n, o)) = queue.pop_front() {
        if o == order {
            solvable = true;
            break;
        }
        for (m, om) in &normal_subgroups {
            if *om > o && om % o == 0 && is_prime_power(om / o) && n.is_subset(m) && seen.insert(m.clone()) {
                queue.push_back((m.clone(), *om));
            }
        }
    }

    let mut z = trivial;
    let nilpotent = loop {
        if z == all {
            break true;
        }
        let over: Vec<usize> = (0..t.num_irr()).filter(|&i| z.is_subset(&kernels[i])).collect();
        let next = intersect_all(all.clone(), over.iter().map(|&i| centers[i].clone()));
        if next == z {
            break false;
        }
        z = next;
    };

    StructureReport {
        kernels,
        centers,
        normal_subgroups,
        derived_subgroup,
        center,
        solvable,
        nilpotent,
        linear_count: linear.len(),
    }
}

/// Values of the regular character from `sum chi(1) chi`.
pub fn regular_character(t: &CharacterTable) -> Vec<Cyclo> {
    (0..t.num_classes())
        .map(|k| {
            (0..t.num_irr())
                .map(|i| t.value(i, k) * t.value(i, 0))
                .sum()
        })
        .collect()
}
