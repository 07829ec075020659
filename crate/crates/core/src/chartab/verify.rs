use super::CharacterTable;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};
use crate::linalg::det;
use crate::numth::gcd;

/// Outcome of a successful orthogonality check.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthogonalityReport {
    /// `sum_chi |chi(x_K)|^2` for every class, equal to `|C_G(x_K)|`.
    pub centralizer_diagonal: Vec<Cyclo>,
}

fn conj_matrix(t: &CharacterTable) -> Vec<Vec<Cyclo>> {
    t.irr()
        .iter()
        .map(|row| row.iter().map(Cyclo::complex_conjugate).collect())
        .collect()
}

/// Both orthogonality relations, exactly.
pub fn verify_orthogonality(t: &CharacterTable) -> Result<OrthogonalityReport> {
    let r = t.num_classes();
    let n = t.num_irr();
    let conj = conj_matrix(t);
    let order = Cyclo::from_int(t.order() as i64);
    let sizes: Vec<Cyclo> = t.classes().iter().map(|c| Cyclo::from_int(c.size as i64)).collect();
    for i in 0..n {
        let weighted: Vec<Cyclo> = (0..r).map(|k| t.value(i, k) * &sizes[k]).collect();
        for j in i..n {
            let s: Cyclo = (0..r).map(|k| &weighted[k] * &conj[j][k]).sum();
            let expected = if i == j { order.clone() } else { Cyclo::zero() };
            if s != expected {
                return Err(Error::Verification(format!(
                    "first orthogonality fails for rows {} and {}: inner product {}/{}",
                    i + 1,
                    j + 1,
                    s,
                    t.order()
                )));
            }
        }
    }
    let mut diagonal = Vec::with_capacity(r);
    for k in 0..r {
        for l in k..r {
            let s: Cyclo = (0..n).map(|i| t.value(i, k) * &conj[i][l]).sum();
            let expected = if k == l {
                Cyclo::from_int(t.class(k).centralizer as i64)
            } else {
                Cyclo::zero()
            };
            if s != expected {
                return Err(Error::Verification(format!(
                    "second orthogonality fails for classes {} and {}: sum {s}",
                    t.class(k).name,
                    t.class(l).name
                )));
            }
            if k == l {
                diagonal.push(s);
            }
        }
    }
    Ok(OrthogonalityReport {
        centralizer_diagonal: diagonal,
    })
}

/// `sum chi(1)^2 = |G|`.
pub fn verify_burnside(t: &CharacterTable) -> Result<()> {
    let s: u64 = t.degrees().iter().map(|d| d * d).sum();
    if s == t.order() {
        Ok(())
    } else {
        Err(Error::Verification(format!(
            "squares of the degrees sum to {s}, not {}",
            t.order()
        )))
    }
}

/// Everything a table read from a file must satisfy: principal first row,
/// degree sum, orthogonality, integrality of values and central characters,
/// degrees dividing the group order.
pub fn verify_table(t: &CharacterTable) -> Result<OrthogonalityReport> {
    if !t.is_principal(0) {
        return Err(Error::Verification("the first row is not the principal character".into()));
    }
    for (i, row) in t.irr().iter().enumerate() {
        if let Some(k) = row.iter().position(|v| !v.is_algebraic_integer()) {
            return Err(Error::Verification(format!(
                "value {} of row {} at class {} is not an algebraic integer",
                row[k],
                i + 1,
                t.class(k).name
            )));
        }
        if !t.order().is_multiple_of(t.degree(i)) {
            return Err(Error::Verification(format!(
                "degree {} of row {} does not divide {}",
                t.degree(i),
                i + 1,
                t.order()
            )));
        }
    }
    verify_burnside(t)?;
    let report = verify_orthogonality(t)?;
    t.central_characters()
        .map_err(|e| Error::Verification(e.to_string()))?;
    Ok(report)
}

/// Determinant of the table with the consistency check
/// `det^2 (-1)^l = prod |C_G(x_K)|`, `l` the number of pairs of complex
/// conjugate rows.
#[derive(Clone, Debug, PartialEq)]
pub struct TableDeterminant {
    pub value: Cyclo,
    pub conjugate_pairs: usize,
    pub check: bool,
}

pub fn table_determinant(t: &CharacterTable) -> TableDeterminant {
    let value = det(t.irr(), &Cyclo::one());
    let conj = conj_matrix(t);
    let real_rows = (0..t.num_irr()).filter(|&i| conj[i] == t.irr()[i]).count();
    let conjugate_pairs = (t.num_irr() - real_rows) / 2;
    let prod: Cyclo = t
        .classes()
        .iter()
        .fold(Cyclo::one(), |acc, c| &acc * &Cyclo::from_int(c.centralizer as i64));
    let sign = if conjugate_pairs.is_multiple_of(2) { Cyclo::one() } else { Cyclo::from_int(-1) };
    let check = &(&value * &value) * &sign == prod;
    TableDeterminant {
        value,
        conjugate_pairs,
        check,
    }
}

/// Number of pairs `(a, b)` with `[a, b] = x_K`, from
/// `sum_chi |G| / chi(1) chi(x_K)`.
pub fn commutator_counts(t: &CharacterTable) -> Result<Vec<u64>> {
    let order = t.order() as i64;
    (0..t.num_classes())
        .map(|k| {
            let s: Cyclo = (0..t.num_irr())
                .map(|i| t.value(i, k) * &Cyclo::from_int(order / t.degree(i) as i64))
                .sum();
            s.to_i64()
                .filter(|&v| v >= 0)
                .map(|v| v as u64)
                .ok_or_else(|| {
                    Error::TableInconsistent(format!(
                        "commutator count {s} at class {} is not a non-negative integer",
                        t.class(k).name
                    ))
                })
        })
        .collect()
}

/// The permutation `i -> j` of rows with `chi_i^sigma = chi_j` for
/// `sigma: E(m) -> E(m)^k`, where `m` is the conductor of the field of
/// values of the table.
pub fn galois_conjugate_table(t: &CharacterTable, k: i64) -> Result<Vec<usize>> {
    let m = t.value_conductor();
    if gcd(k.rem_euclid(m as i64) as u64, m) != 1 {
        return Err(Error::NotCoprime { k, n: m });
    }
    t.irr()
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let img: Vec<Cyclo> = row.iter().map(|v| v.galois(k)).collect::<Result<_>>()?;
            t.irr().iter().position(|r| *r == img).ok_or_else(|| {
                Error::TableInconsistent(format!(
                    "the Galois conjugate of row {} by {k} is not a row",
                    i + 1
                ))
            })
        })
        .collect()
}
