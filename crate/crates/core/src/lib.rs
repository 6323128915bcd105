//! Exact-arithmetic toolkit for tropicalizing homogeneous ideals in two
//! variables, for the Schur-polynomial description of dependence loci on
//! the Hilbert scheme of points of the projective line, and for
//! necklace-indexed torus-orbit data.
//!
//! The linear algebra core is generic over an exact [`field::Field`]; the
//! concrete scalars are [`field::Rational`] and [`cyclotomic::CycNum`]
//! (plain rationals are the order-1 case of the latter). Every dependence
//! decision reduces to an exact zero test; there is no floating point in
//! the computation path.

pub mod cli;
pub mod cyclotomic;
pub mod field;
pub mod ideal;
pub mod matrix;
pub mod matroid;
pub mod monomial;
pub mod necklace;
pub mod parse;
pub mod picture;
pub mod poly;
pub mod schur;
pub mod tgraph;

pub use cyclotomic::CycNum;
pub use field::{Field, Rational};
pub use ideal::{GradedIdeal, TruncatedTropIdeal};
pub use monomial::{Monomial, TermOrder};
pub use necklace::Necklace;
pub use poly::HomogPoly;
pub use schur::Partition;

/// Matrix over the rationals.
pub type QMatrix = matrix::Matrix<Rational>;
/// Matrix over a cyclotomic field.
pub type CycMatrix = matrix::Matrix<CycNum>;
/// Realized matroid over the rationals.
pub type QMatroid = matroid::Matroid<Rational>;
/// Realized matroid over a cyclotomic field.
pub type CycMatroid = matroid::Matroid<CycNum>;
