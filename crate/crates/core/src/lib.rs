//! Exact verification and construction of solutions to the nonhomogeneous
//! associative Yang-Baxter equation in finite-dimensional unital algebras,
//! together with the operator forms attached to them.

pub mod algebra;
pub mod catalog;
pub mod constructions;
pub mod dendriform;
pub mod error;
pub mod frobenius;
pub mod json;
pub mod linalg;
pub mod operators;
pub mod random;
pub mod report;
pub mod scalar;
pub mod tensor;
pub mod ybe;

pub use error::{Error, Result};
pub use scalar::Rational;
