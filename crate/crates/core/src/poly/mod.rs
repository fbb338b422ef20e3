//! Monic polynomials over GF(q): irreducibility, primitivity, exhaustive
//! counting and deterministic search.
//!
//! A degree-`D` polynomial `x^D + a_1 x^(D-1) + ... + a_D` is stored as the
//! canonical indices `(a_1, ..., a_D)`. Candidates are ordered
//! lexicographically on that tuple, `a_1` most significant.

pub(crate) mod dense;

use std::fmt;

use thiserror::Error;

use crate::arith;
use crate::exec::Execution;
use crate::field::{FieldElement, FieldError, FieldSpec};

/// Exhaustive enumeration refuses more candidates than this.
pub const ENUMERATION_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial degree must be at least 1")]
    ZeroDegree,
    #[error("coefficient index {index} is out of range for GF({order})")]
    CoefficientOutOfRange { index: u64, order: u64 },
    #[error("q^D overflows 64 bits for q = {order}, D = {degree}")]
    Overflow { order: u64, degree: usize },
    #[error("{order}^{degree} candidates exceed the enumeration limit of {ENUMERATION_LIMIT}")]
    TooLarge { order: u64, degree: usize },
    #[error("no {} primitive polynomial of degree {degree} over GF({order})", if *.all_nonzero { "all-nonzero" } else { "" })]
    NotFound {
        order: u64,
        degree: usize,
        all_nonzero: bool,
    },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: FieldSpec,
    coeffs: Vec<u64>,
}

impl Polynomial {
    /// `x^D + a_1 x^(D-1) + ... + a_D` from the indices `(a_1, ..., a_D)`.
    pub fn new(field: &FieldSpec, coeffs: &[u64]) -> Result<Self, PolyError> {
        if coeffs.is_empty() {
            return Err(PolyError::ZeroDegree);
        }
        if let Some(&index) = coeffs.iter().find(|&&c| c >= field.order()) {
            return Err(PolyError::CoefficientOutOfRange {
                index,
                order: field.order(),
            });
        }
        state_space(field, coeffs.len())?;
        Ok(Self {
            field: field.clone(),
            coeffs: coeffs.to_vec(),
        })
    }

    pub fn from_elements(field: &FieldSpec, coeffs: &[FieldElement]) -> Result<Self, PolyError> {
        let idx = coeffs
            .iter()
            .map(|c| field.canonical_index(c))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(field, &idx)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// Canonical indices `(a_1, ..., a_D)`.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// `a_i` for `1 <= i <= D`.
    pub fn coefficient(&self, i: usize) -> FieldElement {
        assert!(
            (1..=self.degree()).contains(&i),
            "coefficient a_{i} out of range"
        );
        self.field
            .element_of_index(self.coeffs[i - 1])
            .expect("validated on construction")
    }

    pub fn has_zero_coefficient(&self) -> bool {
        self.coeffs.contains(&0)
    }

    /// `q^D`, the number of register states.
    pub fn state_space(&self) -> u64 {
        state_space(&self.field, self.degree()).expect("validated on construction")
    }

    /// Full monic coefficient vector, constant term first.
    pub fn to_little_endian(&self) -> Vec<u64> {
        little_endian(&self.coeffs)
    }

    pub fn is_irreducible(&self) -> bool {
        dense::is_irreducible(&self.field, &self.to_little_endian())
    }

    pub fn is_primitive(&self) -> bool {
        PrimitivityTest::new(&self.field, self.degree())
            .expect("validated on construction")
            .is_primitive(&self.coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        match d {
            1 => write!(f, "x")?,
            _ => write!(f, "x^{d}")?,
        }
        for (i, &c) in self.coeffs.iter().enumerate() {
            let power = d - 1 - i;
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && power > 0 {
                String::new()
            } else if self.field.is_prime_field() {
                c.to_string()
            } else {
                format!("[{c}]")
            };
            match power {
                0 => write!(f, " + {coef}")?,
                1 => write!(f, " + {coef}x")?,
                _ => write!(f, " + {coef}x^{power}")?,
            }
        }
        Ok(())
    }
}

fn state_space(field: &FieldSpec, degree: usize) -> Result<u64, PolyError> {
    u32::try_from(degree)
        .ok()
        .and_then(|d| field.order().checked_pow(d))
        .ok_or(PolyError::Overflow {
            order: field.order(),
            degree,
        })
}

fn little_endian(coeffs: &[u64]) -> Vec<u64> {
    let mut le: Vec<u64> = coeffs.iter().rev().copied().collect();
    le.push(1);
    le
}

/// Order test for every degree-`D` candidate over one field, with the
/// factorization of `q^D - 1` done once.
#[derive(Debug, Clone)]
pub struct PrimitivityTest {
    field: FieldSpec,
    degree: usize,
    group_order: u64,
    /// `(q^D - 1) / r` for each prime `r | q^D - 1`.
    maximal_divisors: Vec<u64>,
}

impl PrimitivityTest {
    pub fn new(field: &FieldSpec, degree: usize) -> Result<Self, PolyError> {
        if degree == 0 {
            return Err(PolyError::ZeroDegree);
        }
        let group_order = state_space(field, degree)? - 1;
        let maximal_divisors = arith::factorize(group_order)
            .expect("q^D - 1 >= 1")
            .distinct_primes()
            .map(|r| group_order / r)
            .collect();
        Ok(Self {
            field: field.clone(),
            degree,
            group_order,
            maximal_divisors,
        })
    }

    /// `x` has multiplicative order exactly `q^D - 1` modulo `f`, and `f` is
    /// irreducible. Takes `(a_1, ..., a_D)`.
    pub fn is_primitive(&self, coeffs: &[u64]) -> bool {
        debug_assert_eq!(coeffs.len(), self.degree);
        let f = little_endian(coeffs);
        if f[0] == 0 {
            return false;
        }
        let ring = dense::QuotientRing::new(&self.field, &f);
        let x = ring.x();
        let one = ring.one();
        if ring.pow(&x, self.group_order) != one {
            return false;
        }
        if self
            .maximal_divisors
            .iter()
            .any(|&e| ring.pow(&x, e) == one)
        {
            return false;
        }
        // Full order already forces irreducibility; the check is kept so the
        // predicate stands on its own.
        dense::is_irreducible(&self.field, &f)
    }
}

/// Coefficients of the `rank`-th candidate in lexicographic order. With
/// `all_nonzero` the candidates range over `[1, q)^D` instead of `[0, q)^D`.
pub fn candidate(order: u64, degree: usize, rank: u64, all_nonzero: bool) -> Vec<u64> {
    let (base, offset) = if all_nonzero {
        (order - 1, 1)
    } else {
        (order, 0)
    };
    let mut out = vec![0; degree];
    let mut r = rank;
    for slot in out.iter_mut().rev() {
        *slot = r % base + offset;
        r /= base;
    }
    out
}

fn enumeration_size(field: &FieldSpec, degree: usize) -> Result<u64, PolyError> {
    if degree == 0 {
        return Err(PolyError::ZeroDegree);
    }
    let too_large = PolyError::TooLarge {
        order: field.order(),
        degree,
    };
    match state_space(field, degree) {
        Ok(n) if n <= ENUMERATION_LIMIT => Ok(n),
        _ => Err(too_large),
    }
}

/// Exhaustive count of monic primitive polynomials of degree `degree`.
pub fn count_primitive(field: &FieldSpec, degree: usize) -> Result<u64, PolyError> {
    count_primitive_with(field, degree, Execution::default())
}

pub fn count_primitive_with(
    field: &FieldSpec,
    degree: usize,
    exec: Execution,
) -> Result<u64, PolyError> {
    let total = enumeration_size(field, degree)?;
    let test = PrimitivityTest::new(field, degree)?;
    let q = field.order();
    Ok(exec.count(total, |rank| {
        test.is_primitive(&candidate(q, degree, rank, false))
    }))
}

/// Every monic primitive polynomial of the given degree, in lexicographic order.
pub fn primitive_polynomials(
    field: &FieldSpec,
    degree: usize,
) -> Result<Vec<Polynomial>, PolyError> {
    let total = enumeration_size(field, degree)?;
    let test = PrimitivityTest::new(field, degree)?;
    let q = field.order();
    let hits = Execution::default().map(total as usize, |rank| {
        let c = candidate(q, degree, rank as u64, false);
        test.is_primitive(&c).then_some(c)
    });
    hits.into_iter()
        .flatten()
        .map(|c| Polynomial::new(field, &c))
        .collect()
}

/// Lexicographically smallest primitive polynomial of the given degree,
/// optionally restricted to nonzero coefficients.
pub fn find_primitive(
    field: &FieldSpec,
    degree: usize,
    all_nonzero: bool,
) -> Result<Polynomial, PolyError> {
    find_primitive_with(field, degree, all_nonzero, Execution::default())
}

pub fn find_primitive_with(
    field: &FieldSpec,
    degree: usize,
    all_nonzero: bool,
    exec: Execution,
) -> Result<Polynomial, PolyError> {
    let test = PrimitivityTest::new(field, degree)?;
    let q = field.order();
    let base = if all_nonzero { q - 1 } else { q };
    // base^degree <= q^degree, which PrimitivityTest::new already bounded
    let total = base.pow(degree as u32);
    exec.find_first(total, |rank| {
        test.is_primitive(&candidate(q, degree, rank, all_nonzero))
    })
    .map(|rank| Polynomial::new(field, &candidate(q, degree, rank, all_nonzero)))
    .unwrap_or(Err(PolyError::NotFound {
        order: q,
        degree,
        all_nonzero,
    }))
}

pub fn find_primitive_all_nonzero(
    field: &FieldSpec,
    degree: usize,
) -> Result<Polynomial, PolyError> {
    find_primitive(field, degree, true)
}
