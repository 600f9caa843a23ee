//! Exact computer algebra for Virasoro Verma modules, Jack symmetric
//! functions and SU(2) Nekrasov partition functions.
//!
//! Everything is exact: arbitrary-precision rationals, sparse Laurent
//! polynomials in `u = t^(1/2)`, a quadratic extension by `sqrt(2)`,
//! polynomials in the highest weight `h`, and reduced multivariate
//! rational functions. No floating point anywhere.

pub mod algebra;
pub mod bosonization;
pub mod linalg;
pub mod nekrasov;
pub mod partitions;
pub mod report;
pub mod sample;
pub mod symfunc;
pub mod virasoro;

pub use algebra::error::{CoreError, Result};
pub use algebra::hpoly::HPoly;
pub use algebra::laurent::LaurentPoly;
pub use algebra::mpoly::MPoly;
pub use algebra::ratfunc::RatFunc;
pub use algebra::rational::BigRat;
pub use algebra::sqrt2::Sqrt2Ext;
pub use partitions::Partition;
