//! Long-diameter constructions.
//!
//! * [`build_lfsr_complex`]: windows of a cyclically colored m-sequence,
//!   giving a closed corridor with `lcm(q^(d-1) - 1, d + 2)` facets.
//! * [`drop_facet`]: removing one facet of a closed corridor leaves a corridor.
//! * [`double_corridor`] / [`double_closed_corridor`]: two-colored copies of
//!   each facet, glued into a pseudo-manifold without boundary.
//!
//! Every builder re-checks its output and refuses to return anything that
//! fails the check.

mod doubling;
mod lfsr_complex;

use thiserror::Error;

use crate::complex::{ComplexError, PureComplex};
use crate::field::FieldError;
use crate::lfsr::LfsrError;
use crate::poly::PolyError;

pub use doubling::{
    corridor_frame, double_closed_corridor, double_corridor, doubled_vertex, undoubled_vertex,
    CorridorFrame,
};
pub use lfsr_complex::{build_lfsr_complex, colored_vertex, LfsrComplex};

/// Builders refuse to emit more facets than this.
pub const MAX_FACETS: usize = 5_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("facet size d must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error("no all-nonzero primitive polynomial of degree {degree} over GF({order})")]
    NoPolynomial { order: u64, degree: usize },
    #[error("invalid feedback polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("input is not a corridor (dual graph is not a path)")]
    NotACorridor,
    #[error("input is not a closed corridor (dual graph is not a cycle)")]
    NotAClosedCorridor,
    #[error("corridor needs at least two facets")]
    TooSmall,
    #[error("facet index {index} out of range for {len} facets")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("dropping the only facet would leave an empty complex")]
    WouldBeEmpty,
    #[error("vertex {0} is not used by any facet")]
    UnusedVertex(u32),
    #[error("no valid choice of glue vertices: both boundary ridges are the same single vertex")]
    NoValidGlueChoice,
    #[error("construction produced {facets} facets, above the limit of {MAX_FACETS}")]
    TooLarge { facets: u128 },
    #[error("construction check failed: {0}")]
    ConstructionCheckFailed(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Lfsr(#[from] LfsrError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// The complex minus facet `index`.
pub fn drop_facet(c: &PureComplex, index: usize) -> Result<PureComplex, ConstructionError> {
    if index >= c.len() {
        return Err(ConstructionError::IndexOutOfRange {
            index,
            len: c.len(),
        });
    }
    if c.len() < 2 {
        return Err(ConstructionError::WouldBeEmpty);
    }
    Ok(c.without_facet(index))
}
