//! Exact cyclotomic arithmetic, finite fields, and the reduction map from
//! cyclotomic integers to a finite field of characteristic `p`.

mod format;
pub mod fp;
mod fq;
mod phi;
mod star;
mod value;

pub use fp::Fp;
pub use fq::{FqElem, FqField};
pub use phi::cyclotomic_poly;
pub use star::{cyclotomic_factors, StarMap};
pub use value::Cyclo;
