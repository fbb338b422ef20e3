//! Construction and verification of pure simplicial complexes with long
//! dual-graph diameter.
//!
//! The pipeline: pick a primitive polynomial over GF(q) with no zero
//! coefficient ([`poly`]), run its linear recurrence ([`lfsr`]), color the
//! terms cyclically and take every window of `d` consecutive colored terms as
//! a facet ([`construct::build_lfsr_complex`]). The result is a closed
//! corridor; dropping a facet gives a corridor, and doubling a corridor gives
//! a pseudo-manifold without boundary ([`construct::double_corridor`]).
//! [`complex`] holds the data model, predicates, diameter engine and the
//! `scx v1` text format.

pub mod arith;
pub mod exec;
pub mod field;
pub mod poly;

pub use exec::Execution;
pub use field::{FieldElement, FieldError, FieldSpec};
pub use poly::{PolyError, Polynomial};
pub mod complex;
pub mod construct;
pub mod lfsr;
