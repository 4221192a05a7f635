//! Exact certification toolkit for the classification fact that PSU(3,q),
//! q >= 3, is never the socle of a point- and line-primitive automorphism
//! group of a finite thick generalized quadrangle.
//!
//! The crate re-verifies every computational ingredient of that case
//! analysis with exact integer arithmetic: the quadrangle parameter laws,
//! the maximal-subgroup index catalog, brute-force conjugacy/centralizer
//! facts in small unitary groups, the Diophantine eliminations lemma by
//! lemma, and the base-q0 digit ladders. Run `examples/` for guided tours,
//! or the `gqcert` binary for the full certification report.

pub mod catalog;
pub mod eliminate;
pub mod gq;
pub mod int;
pub mod ladder;
pub mod poly;
pub mod primes;
pub mod report;
pub mod unitary;

pub use int::Int;
pub use primes::PrimePower;
