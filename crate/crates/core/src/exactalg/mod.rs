//! Exact arithmetic: rationals, polynomials, sparse linear algebra.

pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod space;

pub use linalg::{kernel_basis, rank, rref, span_contains, span_intersect, SpanBasis, SparseVec};
pub use monomial::Monomial;
pub use parse::VarNames;
pub use poly::{DualPolynomial, Polynomial, Side};
pub use scalar::Scalar;
pub use space::{ColumnOrder, MonomialBasis, PolySpan};
