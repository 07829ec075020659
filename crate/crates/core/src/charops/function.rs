use crate::chartab::CharacterTable;
use crate::cyclo::Cyclo;
use crate::error::{Error, Result};

/// A class function on the group of `table`, one value per class.
#[derive(Clone, Debug)]
pub struct ClassFunction<'t> {
    table: &'t CharacterTable,
    values: Vec<Cyclo>,
}

impl PartialEq for ClassFunction<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.table, other.table) && self.values == other.values
    }
}

/// Coefficients of a class function over `Irr(G)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub coeffs: Vec<Cyclo>,
    /// All coefficients are non-negative integers.
    pub is_character: bool,
    /// All coefficients are integers.
    pub is_generalized: bool,
}

impl Decomposition {
    /// Integer coefficients, when the function is a generalized character.
    pub fn integers(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(Cyclo::to_i64).collect()
    }
}

impl<'t> ClassFunction<'t> {
    pub fn new(table: &'t CharacterTable, values: Vec<Cyclo>) -> Result<Self> {
        if values.len() != table.num_classes() {
            return Err(Error::TableMismatch);
        }
        Ok(ClassFunction { table, values })
    }

    pub fn irreducible(table: &'t CharacterTable, i: usize) -> Self {
        ClassFunction {
            table,
            values: table.row(i).to_vec(),
        }
    }

    pub fn trivial(table: &'t CharacterTable) -> Self {
        Self::constant(table, 1)
    }

    pub fn constant(table: &'t CharacterTable, c: i64) -> Self {
        ClassFunction {
            table,
            values: vec![Cyclo::from_int(c); table.num_classes()],
        }
    }

    pub fn zero(table: &'t CharacterTable) -> Self {
        Self::constant(table, 0)
    }

    /// The regular character.
    pub fn regular(table: &'t CharacterTable) -> Self {
        let mut values = vec![Cyclo::zero(); table.num_classes()];
        values[0] = Cyclo::from_int(table.order() as i64);
        ClassFunction { table, values }
    }

    /// Integer combination of irreducible characters.
    pub fn combination(table: &'t CharacterTable, coeffs: &[i64]) -> Self {
        let values = (0..table.num_classes())
            .map(|k| {
                coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| table.value(i, k) * &Cyclo::from_int(c))
                    .sum()
            })
            .collect();
        ClassFunction { table, values }
    }

    pub fn table(&self) -> &'t CharacterTable {
        self.table
    }

    pub fn values(&self) -> &[Cyclo] {
        &self.values
    }

    pub fn value(&self, k: usize) -> &Cyclo {
        &self.values[k]
    }

    pub fn degree(&self) -> &Cyclo {
        &self.values[0]
    }

    fn check(&self, other: &ClassFunction<'_>) -> Result<()> {
        if std::ptr::eq(self.table, other.table) {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    fn zip_with(&self, other: &ClassFunction<'t>, f: impl Fn(&Cyclo, &Cyclo) -> Cyclo) -> Result<Self> {
        self.check(other)?;
        Ok(ClassFunction {
            table: self.table,
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &ClassFunction<'t>) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ClassFunction<'t>) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product (the tensor product of characters).
    pub fn product(&self, other: &ClassFunction<'t>) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        ClassFunction {
            table: self.table,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn complex_conjugate(&self) -> Self {
        ClassFunction {
            table: self.table,
            values: self.values.iter().map(Cyclo::complex_conjugate).collect(),
        }
    }

    /// `g -> phi(g^-1)`.
    pub fn contragredient(&self) -> Self {
        let inv = self.table.inverse_map();
        ClassFunction {
            table: self.table,
            values: inv.iter().map(|&k| self.values[k].clone()).collect(),
        }
    }

    /// Classes where the function takes its value at 1.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&k| self.values[k] == self.values[0])
            .collect()
    }
}

/// `(phi, psi) = 1/|G| sum_g phi(g) conj(psi(g))`.
pub fn inner(phi: &ClassFunction<'_>, psi: &ClassFunction<'_>) -> Result<Cyclo> {
    phi.check(psi)?;
    let t = phi.table;
    let s: Cyclo = (0..t.num_classes())
        .filter(|&k| !phi.values[k].is_zero() && !psi.values[k].is_zero())
        .map(|k| &(&phi.values[k] * &psi.values[k].complex_conjugate()) * &Cyclo::from_int(t.class(k).size as i64))
        .sum();
    s.checked_div(&Cyclo::from_int(t.order() as i64))
}

pub fn decompose(phi: &ClassFunction<'_>) -> Decomposition {
    let t = phi.table;
    let coeffs: Vec<Cyclo> = (0..t.num_irr())
        .map(|i| inner(phi, &ClassFunction::irreducible(t, i)).expect("same table"))
        .collect();
    let is_generalized = coeffs.iter().all(|c| c.to_integer().is_some());
    let is_character = coeffs.iter().all(Cyclo::is_nonnegative_integer);
    Decomposition {
        coeffs,
        is_character,
        is_generalized,
    }
}
