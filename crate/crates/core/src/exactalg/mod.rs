//! Exact arithmetic: prime fields, dense linear algebra over F_p, and
//! Smith normal form over the integers.

pub mod fp;
mod matrix;
mod search;
mod snf;

pub use fp::FpScalar;
pub use matrix::{solve_mod_p, FpMatrix, Solution};
pub use search::{combine, invertible_elements, InvertibleElements, LexVectors};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};
