use std::collections::{HashMap, VecDeque};

use super::Perm;
use crate::error::{Error, Result};
use crate::numth::lcm;

pub const DEFAULT_MAX_ORDER: usize = 20000;

/// A fully enumerated permutation group. Elements are kept in lexicographic
/// order of their image vectors, so index 0 is always the identity.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
}

impl PermGroup {
    pub fn enumerate(generators: &[Perm]) -> Result<Self> {
        Self::enumerate_with_cap(generators, DEFAULT_MAX_ORDER)
    }

    pub fn enumerate_with_cap(generators: &[Perm], cap: usize) -> Result<Self> {
        let first = generators
            .first()
            .ok_or_else(|| Error::InvalidArgument("no generators given".into()))?;
        let degree = first.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let id = Perm::identity(degree);
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for s in generators {
                let y = x.mul(s);
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let elements: Vec<Perm> = seen.into_keys().collect();
        Ok(Self::from_elements(generators.to_vec(), elements))
    }

    fn from_elements(generators: Vec<Perm>, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, g)| (g.clone(), i))
            .collect();
        PermGroup {
            degree: elements[0].degree(),
            generators,
            elements,
            index,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.index.contains_key(g)
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].mul(&self.elements[b])]
    }

    pub fn inv_idx(&self, a: usize) -> usize {
        self.index[&self.elements[a].inv()]
    }

    /// `b^-1 a b` as an index.
    pub fn conj_idx(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].conj(&self.elements[b])]
    }

    pub fn exponent(&self) -> u64 {
        self.elements.iter().fold(1, |acc, g| lcm(acc, g.order()))
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators.iter().map(|g| self.index[g]).collect()
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(self, (0..self.order()).collect())
    }

    /// Subgroup generated by the given element indices.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut mask = vec![false; self.order()];
        mask[0] = true;
        let mut queue = VecDeque::from([0usize]);
        let mut members = vec![0usize];
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.mul_idx(x, s);
                if !mask[y] {
                    mask[y] = true;
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup {
            members,
            mask,
            gens,
        }
    }

    /// Subgroup generated by permutations that must lie in this group.
    pub fn subgroup(&self, perms: &[Perm]) -> Result<Subgroup> {
        let idx = perms
            .iter()
            .map(|p| {
                self.index_of(p).ok_or_else(|| {
                    Error::InvalidArgument(format!("{p} is not an element of the group"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.closure(&idx))
    }

    pub fn centralizer(&self, x: usize) -> Subgroup {
        let g = &self.elements[x];
        let members = (0..self.order())
            .filter(|&i| self.elements[i].commutes_with(g))
            .collect();
        Subgroup::from_members(self, members)
    }

    /// Elements commuting with every member of `s`.
    pub fn centralizer_of(&self, s: &Subgroup) -> Subgroup {
        let gens: Vec<&Perm> = s.gens.iter().map(|&i| &self.elements[i]).collect();
        let members = (0..self.order())
            .filter(|&i| gens.iter().all(|h| self.elements[i].commutes_with(h)))
            .collect();
        Subgroup::from_members(self, members)
    }

    pub fn normalizer(&self, s: &Subgroup) -> Subgroup {
        let members = (0..self.order())
            .filter(|&g| s.gens.iter().all(|&h| s.contains(self.conj_idx(h, g))))
            .collect();
        Subgroup::from_members(self, members)
    }

    pub fn is_normal(&self, s: &Subgroup) -> bool {
        self.generator_indices()
            .iter()
            .all(|&g| s.gens.iter().all(|&h| s.contains(self.conj_idx(h, g))))
    }

    /// Whether `a` is contained in some conjugate of `b`.
    pub fn is_subconjugate(&self, a: &Subgroup, b: &Subgroup) -> bool {
        if !b.order().is_multiple_of(a.order()) {
            return false;
        }
        (0..self.order()).any(|g| a.gens.iter().all(|&h| b.contains(self.conj_idx(h, g))))
    }

    /// The subgroup as a group in its own right.
    pub fn subgroup_group(&self, s: &Subgroup) -> PermGroup {
        let gens = if s.gens.is_empty() {
            vec![Perm::identity(self.degree)]
        } else {
            s.gens.iter().map(|&i| self.elements[i].clone()).collect()
        };
        let elements = s.members.iter().map(|&i| self.elements[i].clone()).collect();
        Self::from_elements(gens, elements)
    }
}

/// A subgroup stored as a sorted list of element indices of its parent group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
    gens: Vec<usize>,
}

impl Subgroup {
    /// From a member list known to be closed; a small generating set is
    /// chosen greedily.
    pub fn from_members(g: &PermGroup, mut members: Vec<usize>) -> Subgroup {
        members.sort_unstable();
        let mut mask = vec![false; g.order()];
        for &m in &members {
            mask[m] = true;
        }
        let mut gens = Vec::new();
        let mut span = g.closure(&[]);
        for &m in &members {
            if !span.contains(m) {
                gens.push(m);
                span = g.closure(&gens);
                if span.order() == members.len() {
                    break;
                }
            }
        }
        Subgroup {
            members,
            mask,
            gens,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn gens(&self) -> &[usize] {
        &self.gens
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask[i]
    }

    pub fn intersect(&self, g: &PermGroup, other: &Subgroup) -> Subgroup {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|&i| other.contains(i))
            .collect();
        Subgroup::from_members(g, members)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Perm {
        let cs: Vec<Vec<usize>> = cycles.iter().map(|c| c.iter().map(|i| i - 1).collect()).collect();
        Perm::from_cycles(n, &cs).unwrap()
    }

    #[test]
    fn enumerates_small_groups() {
        let s3 = PermGroup::enumerate(&[cyc(3, &[&[1, 2]]), cyc(3, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(s3.element(0).is_identity());
        let a4 = PermGroup::enumerate(&[cyc(4, &[&[1, 2], &[3, 4]]), cyc(4, &[&[1, 2, 3]])]).unwrap();
        assert_eq!(a4.order(), 12);
        assert_eq!(a4.exponent(), 6);
        let triv = PermGroup::enumerate(&[Perm::identity(4)]).unwrap();
        assert_eq!(triv.order(), 1);
    }

    #[test]
    fn enumeration_errors() {
        let err = PermGroup::enumerate(&[cyc(3, &[&[1, 2]]), cyc(4, &[&[1, 2]])]).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { .. }));
        let s5 = [cyc(5, &[&[1, 2]]), cyc(5, &[&[1, 2, 3, 4, 5]])];
        let err = PermGroup::enumerate_with_cap(&s5, 100).unwrap_err();
        assert!(matches!(err, Error::GroupTooLarge { cap: 100 }));
        assert!(PermGroup::enumerate(&[]).is_err());
    }

    #[test]
    fn subgroups() {
        let s4 = PermGroup::enumerate(&[cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3, 4]])]).unwrap();
        let v4 = s4
            .subgroup(&[cyc(4, &[&[1, 2], &[3, 4]]), cyc(4, &[&[1, 3], &[2, 4]])])
            .unwrap();
        assert_eq!(v4.order(), 4);
        assert!(s4.is_normal(&v4));
        let s3 = s4.subgroup(&[cyc(4, &[&[1, 2]]), cyc(4, &[&[1, 2, 3]])]).unwrap();
        assert!(!s4.is_normal(&s3));
        assert_eq!(s4.normalizer(&s3).order(), 6);
        assert_eq!(s4.centralizer_of(&v4).order(), 4);
        let t = s4.subgroup(&[cyc(4, &[&[3, 4]])]).unwrap();
        assert!(s4.is_subconjugate(&t, &s3));
        assert!(!s4.is_subconjugate(&v4, &s3));
        assert_eq!(s4.subgroup_group(&s3).order(), 6);
    }
}
