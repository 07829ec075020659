//! Permutation groups by full enumeration: elements, conjugacy classes,
//! power maps, `p`-parts, Sylow subgroups and `p`-sections.

mod classes;
mod group;
mod parse;
mod perm;
mod sylow;

pub use classes::{class_letter, class_names, conjugacy_data, ConjClassData};
pub use group::{PermGroup, Subgroup, DEFAULT_MAX_ORDER};
pub use parse::{parse_generators, parse_group, parse_group_with_cap, parse_perm, write_group};
pub use perm::Perm;
pub use sylow::{is_p_group, p_core, p_parts, sylow_p};
