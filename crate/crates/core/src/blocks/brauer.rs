use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::{Block, BlockPartition};
use crate::chartab::CharacterTable;
use crate::cyclo::{Cyclo, StarMap};
use crate::error::{Error, Result};
use crate::linalg::{det, inverse, mat_mul};
use crate::numth::p_split;

fn incompatible(m: impl Into<String>) -> Error {
    Error::IncompatibleBrauerTable(m.into())
}

/// Irreducible Brauer characters on the `p`-regular classes.
#[derive(Clone, Debug, PartialEq)]
pub struct BrauerTable {
    name: String,
    prime: u64,
    conductor: u64,
    factor: Vec<u64>,
    classes: Vec<String>,
    ibr: Vec<Vec<Cyclo>>,
}

impl BrauerTable {
    /// `conductor` and `factor` describe the reduction map the values refer
    /// to; `factor` is an irreducible factor mod `p` of the cyclotomic
    /// polynomial of the `p'`-part of `conductor`.
    pub fn new(
        name: impl Into<String>,
        prime: u64,
        conductor: u64,
        factor: Vec<u64>,
        classes: Vec<String>,
        ibr: Vec<Vec<Cyclo>>,
    ) -> Result<Self> {
        let t = BrauerTable {
            name: name.into(),
            prime,
            conductor,
            factor,
            classes,
            ibr,
        };
        t.star()?;
        let r = t.classes.len();
        if r == 0 || t.ibr.len() != r || t.ibr.iter().any(|row| row.len() != r) {
            return Err(incompatible(format!(
                "{} rows for {r} classes; the table must be square",
                t.ibr.len()
            )));
        }
        if !t.ibr[0].iter().all(Cyclo::is_one) {
            return Err(incompatible("the first row must be the trivial character"));
        }
        Ok(t)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn factor(&self) -> &[u64] {
        &self.factor
    }

    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn ibr(&self) -> &[Vec<Cyclo>] {
        &self.ibr
    }

    pub fn num_ibr(&self) -> usize {
        self.ibr.len()
    }

    pub fn star(&self) -> Result<StarMap> {
        let (_, m) = p_split(self.conductor.max(1), self.prime);
        StarMap::with_factor(self.prime, m, self.factor.clone())
    }
}

/// Decomposition and Cartan matrices together with the characters of the
/// principal indecomposables.
#[derive(Clone, Debug, PartialEq)]
pub struct DecompData {
    pub prime: u64,
    /// Class indices of the `p`-regular classes, in Brauer-table order.
    pub regular: Vec<usize>,
    pub decomposition: Vec<Vec<u64>>,
    pub cartan: Vec<Vec<u64>>,
    pub cartan_det: BigInt,
    /// `theta_phi = sum_chi d_{chi phi} chi`, one row per Brauer character.
    pub projectives: Vec<Vec<Cyclo>>,
}

fn to_cyclo(m: &[Vec<u64>]) -> Vec<Vec<Cyclo>> {
    m.iter()
        .map(|r| r.iter().map(|&v| Cyclo::from_int(v as i64)).collect())
        .collect()
}

/// Solves `chi^ = D Phi` on the `p`-regular classes, forms `C = D^T D` and
/// checks `det C = prod |C_G(x_K)|_p`.
pub fn decomposition_and_cartan(t: &CharacterTable, phi: &BrauerTable) -> Result<DecompData> {
    let p = phi.prime();
    let regular = t.p_regular_classes(p);
    let names: Vec<&str> = regular.iter().map(|&k| t.class(k).name.as_str()).collect();
    if names != phi.classes().iter().map(String::as_str).collect::<Vec<_>>() {
        return Err(incompatible(format!(
            "Brauer classes {:?} differ from the p-regular classes {names:?}",
            phi.classes()
        )));
    }
    let inv = inverse(phi.ibr()).ok_or_else(|| incompatible("Brauer table is singular"))?;
    let restricted: Vec<Vec<Cyclo>> = t
        .irr()
        .iter()
        .map(|row| regular.iter().map(|&k| row[k].clone()).collect())
        .collect();
    let d_exact = mat_mul(&restricted, &inv, &Cyclo::zero());
    let mut decomposition = Vec::with_capacity(t.num_irr());
    for (i, row) in d_exact.iter().enumerate() {
        let ints = row
            .iter()
            .enumerate()
            .map(|(j, v)| {
                v.to_integer()
                    .and_then(|x| u64::try_from(x).ok())
                    .ok_or_else(|| incompatible(format!("decomposition number d[{}][{}] = {v}", i + 1, j + 1)))
            })
            .collect::<Result<Vec<u64>>>()?;
        if ints.iter().all(|&v| v == 0) {
            return Err(incompatible(format!("character {} has a zero decomposition row", i + 1)));
        }
        decomposition.push(ints);
    }
    let r = regular.len();
    if let Some(j) = (0..r).find(|&j| decomposition.iter().all(|row| row[j] == 0)) {
        return Err(incompatible(format!("Brauer character {} occurs in no ordinary character", j + 1)));
    }
    let cartan: Vec<Vec<u64>> = (0..r)
        .map(|a| (0..r).map(|b| decomposition.iter().map(|row| row[a] * row[b]).sum()).collect())
        .collect();
    let cartan_det = det(&to_cyclo(&cartan), &Cyclo::one())
        .to_integer()
        .expect("integer matrix");
    let expected: BigInt = regular
        .iter()
        .map(|&k| BigInt::from(p_split(t.class(k).centralizer, p).0))
        .product();
    if cartan_det != expected {
        return Err(Error::Verification(format!(
            "det C = {cartan_det}, product of p-parts of centralizer orders is {expected}"
        )));
    }
    let mut data = DecompData {
        prime: p,
        regular,
        decomposition,
        cartan,
        cartan_det,
        projectives: Vec::new(),
    };
    data.projectives = principal_indecomposables(&data, t, phi)?;
    Ok(data)
}

/// `theta_phi = sum_chi d_{chi phi} chi`, checked to vanish off the
/// `p`-regular classes, to be dual to the Brauer characters there, to have
/// degree divisible by `|G|_p` and to equal `C Phi` on regular classes.
pub fn principal_indecomposables(
    data: &DecompData,
    t: &CharacterTable,
    phi: &BrauerTable,
) -> Result<Vec<Vec<Cyclo>>> {
    let p = data.prime;
    let r = data.regular.len();
    let n = t.num_classes();
    let fail = |m: String| Err(Error::Verification(m));
    let theta: Vec<Vec<Cyclo>> = (0..r)
        .map(|j| {
            (0..n)
                .map(|k| {
                    (0..t.num_irr())
                        .filter(|&i| data.decomposition[i][j] != 0)
                        .map(|i| t.value(i, k) * &Cyclo::from_int(data.decomposition[i][j] as i64))
                        .sum()
                })
                .collect()
        })
        .collect();
    let gp = t.p_part_of_order(p);
    let order = Cyclo::from_int(t.order() as i64);
    for (j, th) in theta.iter().enumerate() {
        if let Some(k) = (0..n).find(|&k| t.class(k).order.is_multiple_of(p) && !th[k].is_zero()) {
            return fail(format!("projective {} is nonzero on {}", j + 1, t.class(k).name));
        }
        let deg = th[0].to_integer().expect("integer degree");
        if &deg % BigInt::from(gp) != BigInt::from(0) {
            return fail(format!("projective {} has degree {deg}, not divisible by {gp}", j + 1));
        }
        for (a, row) in phi.ibr().iter().enumerate() {
            let s: Cyclo = data
                .regular
                .iter()
                .enumerate()
                .map(|(c, &k)| {
                    &(&row[c] * &th[k].complex_conjugate()) * &Cyclo::from_int(t.class(k).size as i64)
                })
                .sum();
            let v = s.checked_div(&order)?;
            let expect = if a == j { Cyclo::one() } else { Cyclo::zero() };
            if v != expect {
                return fail(format!("(phi_{}, theta_{}) = {v}", a + 1, j + 1));
            }
        }
        for (c, &k) in data.regular.iter().enumerate() {
            let cphi: Cyclo = (0..r)
                .map(|b| &phi.ibr()[b][c] * &Cyclo::from_int(data.cartan[j][b] as i64))
                .sum();
            if cphi != th[k] {
                return fail(format!("theta_{} differs from C Phi at {}", j + 1, t.class(k).name));
            }
        }
    }
    Ok(theta)
}

impl BlockPartition {
    /// Distributes the Brauer characters over the blocks: `phi` lies in the
    /// block of any `chi` with `d_{chi phi} != 0`, and all such `chi` must
    /// share one block.
    pub fn attach_decomposition(&mut self, data: &DecompData) -> Result<()> {
        if data.prime != self.prime || data.decomposition.len() != self.block_of.len() {
            return Err(incompatible("decomposition does not belong to this partition"));
        }
        for b in &mut self.blocks {
            b.ibr.clear();
        }
        let r = data.regular.len();
        for j in 0..r {
            let owners: BTreeSet<usize> = (0..data.decomposition.len())
                .filter(|&i| data.decomposition[i][j] != 0)
                .map(|i| self.block_of[i])
                .collect();
            if owners.len() != 1 {
                return Err(Error::Verification(format!(
                    "Brauer character {} meets {} blocks",
                    j + 1,
                    owners.len()
                )));
            }
            let b = *owners.iter().next().expect("one owner");
            self.blocks[b].ibr.push(j);
        }
        for (n, b) in self.blocks.iter().enumerate() {
            if b.ibr.len() != b.ibr_count {
                return Err(Error::Verification(format!(
                    "block {} receives {} Brauer characters, its rank is {}",
                    n + 1,
                    b.ibr.len(),
                    b.ibr_count
                )));
            }
        }
        Ok(())
    }
}

/// Graph on the irreducible characters joining two characters that share a
/// Brauer constituent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerGraph {
    pub edges: BTreeSet<(usize, usize)>,
    pub components: Vec<Vec<usize>>,
}

pub fn brauer_graph(d: &[Vec<u64>]) -> BrauerGraph {
    let n = d.len();
    let cols = d.first().map_or(0, Vec::len);
    let mut edges = BTreeSet::new();
    for j in 0..cols {
        let members: Vec<usize> = (0..n).filter(|&i| d[i][j] != 0).collect();
        for (a, &x) in members.iter().enumerate() {
            for &y in &members[a + 1..] {
                edges.insert((x, y));
            }
        }
    }
    let mut comp: Vec<usize> = (0..n).collect();
    fn root(c: &mut [usize], mut x: usize) -> usize {
        while c[x] != x {
            c[x] = c[c[x]];
            x = c[x];
        }
        x
    }
    for &(x, y) in &edges {
        let (a, b) = (root(&mut comp, x), root(&mut comp, y));
        comp[a.max(b)] = a.min(b);
    }
    let mut components: Vec<Vec<usize>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for i in 0..n {
        let r = root(&mut comp, i);
        if index[r] == usize::MAX {
            index[r] = components.len();
            components.push(Vec::new());
        }
        components[index[r]].push(i);
    }
    BrauerGraph { edges, components }
}

impl BrauerGraph {
    /// The components must be exactly the blocks.
    pub fn check_blocks(&self, part: &BlockPartition) -> Result<()> {
        let blocks = part.irr_sets();
        if self.components != blocks {
            return Err(Error::Verification(format!(
                "Brauer graph components {:?} differ from the blocks {:?}",
                self.components, blocks
            )));
        }
        Ok(())
    }
}

/// Brauer tree of a block: vertices are sets of ordinary characters (the
/// exceptional vertex collects the characters with equal decomposition
/// rows), edges are Brauer characters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerTree {
    pub vertices: Vec<Vec<usize>>,
    /// `(vertex, vertex, Brauer character)`.
    pub edges: Vec<(usize, usize, usize)>,
    pub exceptional: Option<usize>,
    pub multiplicity: u64,
}

/// Checks the numerical shape of a block with cyclic defect group and reads
/// off its tree: with `e = |IBr(B)|`, `e | p - 1`, `|Irr(B)| = (p^d - 1)/e + e`,
/// and after merging the exceptional characters the decomposition matrix is
/// the 0/1 incidence matrix of a tree.
pub fn brauer_tree(block: &Block, d: &[Vec<u64>], p: u64) -> Result<BrauerTree> {
    let fail = |m: String| Err(Error::Verification(format!("not a Brauer tree: {m}")));
    if block.ibr.is_empty() {
        return fail("no Brauer characters attached to the block".into());
    }
    let e = block.ibr.len() as u64;
    if block.defect == 0 {
        if block.irr.len() != 1 || e != 1 {
            return fail("defect zero block with more than one character".into());
        }
        return Ok(BrauerTree {
            vertices: vec![block.irr.clone()],
            edges: Vec::new(),
            exceptional: None,
            multiplicity: 1,
        });
    }
    if !(p - 1).is_multiple_of(e) {
        return fail(format!("e = {e} does not divide p - 1 = {}", p - 1));
    }
    let pd = p.pow(block.defect);
    let t = (pd - 1) / e;
    if !(pd - 1).is_multiple_of(e) || block.irr.len() as u64 != t + e {
        return fail(format!(
            "|Irr(B)| = {}, expected (p^d - 1)/e + e = {}",
            block.irr.len(),
            t + e
        ));
    }
    let row = |i: usize| -> Vec<u64> { block.ibr.iter().map(|&j| d[i][j]).collect() };
    let mut vertices: Vec<Vec<usize>> = Vec::new();
    let mut exceptional = None;
    if t > 1 {
        let mut groups: Vec<(Vec<u64>, Vec<usize>)> = Vec::new();
        for &i in &block.irr {
            let r = row(i);
            match groups.iter_mut().find(|(k, _)| *k == r) {
                Some((_, v)) => v.push(i),
                None => groups.push((r, vec![i])),
            }
        }
        let Some(pos) = groups.iter().position(|(_, v)| v.len() as u64 == t) else {
            return fail(format!("no {t} characters with equal decomposition rows"));
        };
        for (n, (_, v)) in groups.into_iter().enumerate() {
            if n == pos {
                exceptional = Some(vertices.len());
                vertices.push(v);
            } else {
                vertices.extend(v.into_iter().map(|i| vec![i]));
            }
        }
    } else {
        vertices = block.irr.iter().map(|&i| vec![i]).collect();
    }
    let mut edges = Vec::new();
    for &j in &block.ibr {
        let ends: Vec<usize> = (0..vertices.len())
            .filter(|&v| d[vertices[v][0]][j] != 0)
            .collect();
        if let Some(&v) = ends.iter().find(|&&v| d[vertices[v][0]][j] != 1) {
            return fail(format!("entry {} in column {}", d[vertices[v][0]][j], j + 1));
        }
        if ends.len() != 2 {
            return fail(format!("column {} has {} nonzero entries", j + 1, ends.len()));
        }
        edges.push((ends[0], ends[1], j));
    }
    // e edges on e + 1 vertices: a tree iff connected
    let mut seen = vec![false; vertices.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b, _) in &edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    if edges.len() + 1 != vertices.len() || seen.iter().any(|s| !s) {
        return fail("incidence graph is not a tree".into());
    }
    Ok(BrauerTree {
        vertices,
        edges,
        exceptional,
        multiplicity: t,
    })
}
