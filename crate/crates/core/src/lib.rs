//! Partial actions of finite-dimensional pointed Hopf algebras on the base field.
//!
//! Everything is exact: scalars live in a cyclotomic field ℚ(ζ_m), polynomial
//! systems are solved with Gröbner bases and case splits, and every reported
//! structure is re-verified against the defining identities.

pub mod exactfield;
pub mod groups;
pub mod hopfcore;
pub mod partial;
pub mod expr;
pub mod polysolve;
pub mod catalog;
pub mod smash;
pub mod cli;
