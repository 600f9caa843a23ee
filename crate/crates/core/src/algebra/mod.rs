//! Exact arithmetic substrate: big rationals, sparse Laurent polynomials
//! in `u = t^(1/2)`, the quadratic extension by `sqrt(2)`, polynomials in
//! `h` over Laurent coefficients, and reduced rational functions.

pub mod error;
pub mod hcpoly;
pub mod hpoly;
pub mod laurent;
pub mod mpoly;
pub mod ratfunc;
pub mod rational;
pub mod sqrt2;
pub mod upoly;
