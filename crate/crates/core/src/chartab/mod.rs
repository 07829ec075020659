//! Ordinary character tables: computation, verification and the group
//! structure they encode.

mod compare;
mod dixon;
mod structure;
mod table;
mod verify;

pub use compare::{equivalent_tables, TableMatch};
pub use dixon::{compute_table, dixon_primes, row_order, DixonOptions};
pub use structure::{regular_character, structure_report, ClassSet, StructureReport};
pub use table::{CentralCharTable, CharacterTable, ClassInfo};
pub use verify::{
    commutator_counts, galois_conjugate_table, table_determinant, verify_burnside,
    verify_orthogonality, verify_table, OrthogonalityReport, TableDeterminant,
};

use crate::classalg::{structure_constants, StructureConstants};
use crate::error::Result;
use crate::permgrp::{conjugacy_data, ConjClassData, PermGroup, Subgroup};

/// Classes, structure constants and table of a permutation group in one go.
pub fn table_of_group(name: &str, g: &PermGroup, opts: &DixonOptions) -> Result<CharacterTable> {
    let cc = conjugacy_data(g);
    let sc = structure_constants(g, &cc);
    compute_table(name, &cc, &sc, opts)
}

/// A permutation group together with its classes, class algebra and table,
/// all sharing one class ordering.
#[derive(Clone, Debug)]
pub struct GroupData {
    pub group: PermGroup,
    pub classes: ConjClassData,
    pub structure: StructureConstants,
    pub table: CharacterTable,
}

impl GroupData {
    pub fn new(name: &str, group: PermGroup, opts: &DixonOptions) -> Result<Self> {
        let classes = conjugacy_data(&group);
        let structure = structure_constants(&group, &classes);
        let table = compute_table(name, &classes, &structure, opts)?;
        Ok(GroupData {
            group,
            classes,
            structure,
            table,
        })
    }

    /// Data for a subgroup, computed from scratch.
    pub fn subgroup(&self, name: &str, s: &Subgroup, opts: &DixonOptions) -> Result<Self> {
        Self::new(name, self.group.subgroup_group(s), opts)
    }
}
