//! `p`-modular block theory on top of an ordinary character table.

mod brauer;
mod higher;
mod local;
mod local_theory;
mod partition;
mod zero;

pub use brauer::{
    brauer_graph, brauer_tree, decomposition_and_cartan, principal_indecomposables, BrauerGraph,
    BrauerTable, BrauerTree, DecompData,
};
pub use higher::{elementary_decomposition, higher_decomposition, HigherDecomposition};
pub use local::{block_local_data, class_defect_group, idempotent_coefficients, BlockLocal};
pub use local_theory::{
    induced_block, robinson_block_count, BrauerHom, InducedBlock, InducedBlockResult, RobinsonCount,
};
pub use partition::{
    block_partition, default_star, is_multiplicative, lambda_table, Block, BlockPartition,
};
pub use zero::{defect_zero_generalized_char, defect_zero_report, DefectZeroFlags, DotCharacter};
