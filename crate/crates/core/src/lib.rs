//! Inverse systems of ideals in `K[x1..xm]` over the rationals, level
//! Artinian quotients, and admissible families of dual polynomials that
//! produce level algebras of positive dimension.

pub mod admissible;
pub mod cli;
pub mod construct;
pub mod dpmodule;
pub mod duality;
pub mod error;
pub mod exactalg;
pub mod fixtures;
pub mod quotient;

pub use error::{Error, Result};
pub use exactalg::{DualPolynomial, Monomial, Polynomial, Scalar, Side, VarNames};
