//! Exact character theory of finite permutation groups: ordinary character
//! tables, table-derived structure, and `p`-modular block theory, with a
//! brute-force group-algebra oracle for cross-checking.

#![allow(clippy::needless_range_loop)]

pub mod blocks;
pub mod charops;
pub mod chartab;
pub mod classalg;
pub mod cyclo;
pub mod error;
pub mod fpg;
pub mod io;
pub mod linalg;
pub mod numth;
pub mod permgrp;

pub use error::{Error, Result};
