//! Class functions: inner products, decomposition, induction and
//! restriction, permutation characters, Clifford theory and Frobenius
//! kernels.

mod clifford;
mod frobenius;
mod function;
mod fusion;
mod permutation;

pub use clifford::{as_subgroup, inertia_group, InertiaReport};
pub use frobenius::{frobenius_kernel, FrobeniusKernel};
pub use function::{decompose, inner, ClassFunction, Decomposition};
pub use fusion::{induce, restrict, FusionMap};
pub use permutation::{permutation_character, PermutationCharacter};
