use super::{decompose, inner, ClassFunction};
use crate::chartab::GroupData;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};

/// The character of the natural action on points, with orbit statistics.
#[derive(Clone, Debug)]
pub struct PermutationCharacter<'t> {
    pub character: ClassFunction<'t>,
    pub orbits: usize,
    /// `(chi, chi)`; the rank of the action when it is transitive.
    pub rank: u64,
    pub two_transitive: bool,
    /// Index of the irreducible `chi - 1` when the action is 2-transitive.
    pub complement: Option<usize>,
}

fn count_orbits(data: &GroupData) -> usize {
    let n = data.group.degree();
    let mut seen = vec![false; n];
    let mut orbits = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        orbits += 1;
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for s in data.group.generators() {
                let y = s.image(x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    orbits
}

pub fn permutation_character(data: &GroupData) -> Result<PermutationCharacter<'_>> {
    let t = &data.table;
    let cc = &data.classes;
    let values = (0..cc.num_classes())
        .map(|k| Cyclo::from_int(cc.rep(k).fixed_points() as i64))
        .collect();
    let chi = ClassFunction::new(t, values)?;
    let orbits = count_orbits(data);
    let fail = |m: String| Err(Error::Verification(m));

    let with_one = inner(&chi, &ClassFunction::trivial(t))?;
    if with_one != Cyclo::from_int(orbits as i64) {
        return fail(format!("(chi, 1) = {with_one} but there are {orbits} orbits"));
    }
    let rank = inner(&chi, &chi)?
        .to_integer()
        .and_then(|r| u64::try_from(r).ok())
        .ok_or_else(|| Error::Verification("(chi, chi) is not a non-negative integer".into()))?;
    let degree = data.group.degree() as u64;
    let order = data.group.order() as u64;

    let transitive = orbits == 1;
    if transitive {
        if !order.is_multiple_of(degree) {
            return fail(format!("degree {degree} does not divide |G| = {order}"));
        }
        // point stabilizer meets each class in chi(g)|G|/(chi(1)|C_G(g)|) elements
        let stab: Vec<usize> = (0..data.group.order())
            .filter(|&i| data.group.element(i).image(0) == 0)
            .collect();
        let mut meet = vec![0u64; cc.num_classes()];
        for &i in &stab {
            meet[cc.class_of(i)] += 1;
        }
        for (k, &m) in meet.iter().enumerate() {
            let fixed = cc.rep(k).fixed_points() as u64;
            let expect = fixed * order;
            let denom = degree * cc.centralizer_orders()[k];
            if !expect.is_multiple_of(denom) || expect / denom != m {
                return fail(format!("stabilizer meets class {} in {m} elements", cc.names()[k]));
            }
        }
    }
    let two_transitive = transitive && rank == 2;
    let complement = if two_transitive {
        let theta = chi.sub(&ClassFunction::trivial(t))?;
        let d = decompose(&theta);
        let ints = d.integers().unwrap_or_default();
        match ints.iter().position(|&c| c == 1) {
            Some(i) if ints.iter().filter(|&&c| c != 0).count() == 1 => Some(i),
            _ => return fail("chi - 1 is not irreducible for a 2-transitive action".into()),
        }
    } else {
        None
    };
    Ok(PermutationCharacter {
        character: chi,
        orbits,
        rank,
        two_transitive,
        complement,
    })
}
