use super::{ConstructionError, MAX_FACETS};
use crate::arith;
use crate::complex::{classify_dual, ComplexError, DualShape, PureComplex, Vertex};
use crate::field::{FieldElement, FieldSpec};
use crate::lfsr;
use crate::poly::{self, PolyError, Polynomial};

/// Output of [`build_lfsr_complex`] with the data it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfsrComplex {
    pub complex: PureComplex,
    pub polynomial: Polynomial,
    pub seed: Vec<FieldElement>,
    pub q: u64,
    pub d: usize,
    /// Period of the underlying sequence, `q^(d-1) - 1`.
    pub base_period: u64,
    /// Period of the colored sequence and facet count, `lcm(base_period, d + 2)`.
    pub period: u64,
}

/// Vertex id of the element with canonical index `value` in color class
/// `color`: `value + q * color`.
pub fn colored_vertex(q: u64, value: u64, color: u64) -> Vertex {
    (value + q * color) as Vertex
}

/// Colored-window complex: with `u_i` the recurrence sequence of a primitive
/// polynomial of degree `d - 1` with no zero coefficient and
/// `v_i = (u_i, i mod (d + 2))`, the facets are `{v_i, ..., v_{i+d-1}}` for
/// one full period of `v`. Vertices are `[0, (d + 2) q)`.
///
/// The dual graph is a cycle of length `lcm(q^(d-1) - 1, d + 2)` and no ridge
/// lies in more than two facets. For `d >= 3` the ridges that skip a window
/// position lie in a single facet, so the complex has boundary.
///
/// Without `poly` the lexicographically smallest admissible polynomial is
/// used; without `seed`, `(1, 0, ..., 0)`.
pub fn build_lfsr_complex(
    q: u64,
    d: usize,
    poly: Option<&Polynomial>,
    seed: Option<&[FieldElement]>,
) -> Result<LfsrComplex, ConstructionError> {
    if d < 2 {
        return Err(ConstructionError::DimensionTooSmall(d));
    }
    let field = FieldSpec::new(q)?;
    let degree = d - 1;
    let polynomial = match poly {
        Some(p) => {
            validate_polynomial(&field, degree, p)?;
            p.clone()
        }
        None => poly::find_primitive_all_nonzero(&field, degree).map_err(|e| match e {
            PolyError::NotFound { .. } => ConstructionError::NoPolynomial { order: q, degree },
            other => other.into(),
        })?,
    };
    let seed = match seed {
        Some(s) => s.to_vec(),
        None => lfsr::default_seed(&field, degree),
    };

    let colors = d as u64 + 2;
    let base_period = polynomial.state_space() - 1;
    let period = arith::lcm(base_period, colors).map_err(|_| ConstructionError::TooLarge {
        facets: base_period as u128 * colors as u128,
    })?;
    if period > MAX_FACETS as u64 {
        return Err(ConstructionError::TooLarge {
            facets: period as u128,
        });
    }
    let n = colors
        .checked_mul(q)
        .filter(|&n| n <= Vertex::MAX as u64)
        .ok_or(ConstructionError::TooLarge {
            facets: period as u128,
        })? as usize;

    let measured = lfsr::period(&polynomial, &seed)?;
    if measured != base_period {
        return Err(ConstructionError::ConstructionCheckFailed(format!(
            "sequence period {measured}, expected {base_period}"
        )));
    }
    let seed_idx: Vec<u64> = seed
        .iter()
        .map(|s| field.canonical_index(s))
        .collect::<Result<_, _>>()?;
    let terms = lfsr::generate_indices(&polynomial, &seed_idx, base_period as usize)?;

    let vertex = |j: u64| colored_vertex(q, terms[(j % base_period) as usize], j % colors);
    let facets: Vec<Vec<Vertex>> = (0..period)
        .map(|i| (i..i + d as u64).map(vertex).collect())
        .collect();
    let complex = PureComplex::new(d, n, facets).map_err(|e| match e {
        ComplexError::DuplicateFacet { first, second } => {
            ConstructionError::ConstructionCheckFailed(format!(
                "facets {first} and {second} coincide"
            ))
        }
        other => other.into(),
    })?;

    verify_closed_corridor(&complex, period)?;
    Ok(LfsrComplex {
        complex,
        polynomial,
        seed,
        q,
        d,
        base_period,
        period,
    })
}

fn validate_polynomial(
    field: &FieldSpec,
    degree: usize,
    p: &Polynomial,
) -> Result<(), ConstructionError> {
    let fail = |why: String| Err(ConstructionError::InvalidPolynomial(why));
    if p.field() != field {
        return fail(format!("defined over {}, expected {field}", p.field()));
    }
    if p.degree() != degree {
        return fail(format!("degree {}, expected {degree}", p.degree()));
    }
    if p.has_zero_coefficient() {
        return fail(format!("{p} has a zero coefficient"));
    }
    if !p.is_primitive() {
        return fail(format!("{p} is not primitive"));
    }
    Ok(())
}

fn verify_closed_corridor(c: &PureComplex, period: u64) -> Result<(), ConstructionError> {
    match classify_dual(c)? {
        DualShape::Cycle(order) if order.len() as u64 == period => {}
        other => {
            return Err(ConstructionError::ConstructionCheckFailed(format!(
                "dual graph is a {}, expected a cycle of length {period}",
                other.name()
            )))
        }
    }
    // ridges between consecutive windows are shared; the others are boundary
    let ridges = c.ridge_index();
    if let Some((ridge, fs)) = ridges.iter().find(|(_, fs)| fs.len() > 2) {
        return Err(ConstructionError::ConstructionCheckFailed(format!(
            "ridge {ridge:?} lies in {} facets",
            fs.len()
        )));
    }
    Ok(())
}
