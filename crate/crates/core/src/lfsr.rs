//! Linear recurrence sequences over GF(q).
//!
//! For `p(x) = x^D + a_1 x^(D-1) + ... + a_D` the sequence obeys
//! `u_{n+D} + a_1 u_{n+D-1} + ... + a_D u_n = 0`, indexed from `u_0`.
//! A register state `(u_i, ..., u_{i+D-1})` is encoded as the integer
//! `sum_j index(u_{i+j}) q^j`, which lets window bookkeeping use a bitmap.

use thiserror::Error;

use crate::field::{FieldElement, FieldError, FieldSpec};
use crate::poly::{Polynomial, ENUMERATION_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LfsrError {
    #[error("seed must be a nonzero vector")]
    ZeroSeed,
    #[error("seed has length {found}, expected {expected}")]
    SeedLength { expected: usize, found: usize },
    #[error("feedback polynomial is not primitive")]
    NotPrimitive,
    #[error("{states} register states exceed the enumeration limit of {ENUMERATION_LIMIT}")]
    TooLarge { states: u64 },
    #[error("constant term of the feedback polynomial is zero, the recurrence cannot be reversed")]
    SingularFeedback,
    #[error("initial state never recurs: the sequence is only eventually periodic")]
    NotPeriodic,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// A generated prefix of a recurrence sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfsrRun {
    pub poly: Polynomial,
    pub seed: Vec<FieldElement>,
    pub terms: Vec<FieldElement>,
}

impl LfsrRun {
    pub fn new(poly: &Polynomial, seed: &[FieldElement], count: usize) -> Result<Self, LfsrError> {
        Ok(Self {
            poly: poly.clone(),
            seed: seed.to_vec(),
            terms: generate(poly, seed, count)?,
        })
    }

    /// Consecutive length-`D` windows of the generated terms.
    pub fn windows(&self) -> impl Iterator<Item = &[FieldElement]> {
        self.terms.windows(self.poly.degree())
    }
}

/// `(1, 0, ..., 0)`.
pub fn default_seed(field: &FieldSpec, degree: usize) -> Vec<FieldElement> {
    let mut seed = vec![field.zero(); degree];
    if let Some(first) = seed.first_mut() {
        *first = field.one();
    }
    seed
}

fn seed_indices(poly: &Polynomial, seed: &[FieldElement]) -> Result<Vec<u64>, LfsrError> {
    if seed.len() != poly.degree() {
        return Err(LfsrError::SeedLength {
            expected: poly.degree(),
            found: seed.len(),
        });
    }
    let idx = seed
        .iter()
        .map(|s| poly.field().canonical_index(s))
        .collect::<Result<Vec<_>, _>>()?;
    if idx.iter().all(|&i| i == 0) {
        return Err(LfsrError::ZeroSeed);
    }
    Ok(idx)
}

/// Next term from the last `D` terms of `window` (oldest first).
fn next_term(field: &FieldSpec, neg_coeffs: &[u64], window: &[u64]) -> u64 {
    // neg_coeffs[j] = -a_{j+1} multiplies u_{n+D-1-j}
    let d = window.len();
    neg_coeffs.iter().enumerate().fold(0, |acc, (j, &c)| {
        field.add_index(acc, field.mul_index(c, window[d - 1 - j]))
    })
}

fn negated(poly: &Polynomial) -> Vec<u64> {
    let f = poly.field();
    poly.coeffs().iter().map(|&a| f.neg_index(a)).collect()
}

/// `u_0, ..., u_{count-1}` as canonical indices.
pub fn generate_indices(
    poly: &Polynomial,
    seed: &[u64],
    count: usize,
) -> Result<Vec<u64>, LfsrError> {
    let d = poly.degree();
    if seed.len() != d {
        return Err(LfsrError::SeedLength {
            expected: d,
            found: seed.len(),
        });
    }
    if seed.iter().all(|&i| i == 0) {
        return Err(LfsrError::ZeroSeed);
    }
    let field = poly.field();
    if let Some(&index) = seed.iter().find(|&&i| i >= field.order()) {
        return Err(FieldError::IndexOutOfRange {
            index,
            order: field.order(),
        }
        .into());
    }
    let neg = negated(poly);
    let mut out = Vec::with_capacity(count.max(d));
    out.extend_from_slice(seed);
    while out.len() < count {
        let next = next_term(field, &neg, &out[out.len() - d..]);
        out.push(next);
    }
    out.truncate(count);
    Ok(out)
}

pub fn generate(
    poly: &Polynomial,
    seed: &[FieldElement],
    count: usize,
) -> Result<Vec<FieldElement>, LfsrError> {
    let idx = seed_indices(poly, seed)?;
    let field = poly.field();
    generate_indices(poly, &idx, count)?
        .into_iter()
        .map(|i| field.element_of_index(i).map_err(LfsrError::from))
        .collect()
}

/// The `count` terms preceding `window` (which is `u_m, ..., u_{m+D-1}`),
/// oldest first. Requires `a_D != 0`.
pub fn generate_backward(
    poly: &Polynomial,
    window: &[FieldElement],
    count: usize,
) -> Result<Vec<FieldElement>, LfsrError> {
    let field = poly.field();
    let d = poly.degree();
    let a = poly.coeffs();
    let last_inv = field
        .inv_index(a[d - 1])
        .ok_or(LfsrError::SingularFeedback)?;
    let mut rev: Vec<u64> = seed_indices(poly, window)?;
    rev.reverse();
    // rev holds newest first; u_n = -a_D^{-1} (u_{n+D} + a_1 u_{n+D-1} + ... + a_{D-1} u_{n+1})
    for _ in 0..count {
        let len = rev.len();
        let recent = &rev[len - d..];
        let mut acc = recent[0];
        for (j, &aj) in a[..d - 1].iter().enumerate() {
            acc = field.add_index(acc, field.mul_index(aj, recent[j + 1]));
        }
        rev.push(field.neg_index(field.mul_index(last_inv, acc)));
    }
    rev.drain(..d);
    rev.reverse();
    rev.into_iter()
        .map(|i| field.element_of_index(i).map_err(LfsrError::from))
        .collect()
}

fn encode(q: u64, window: &[u64]) -> u64 {
    window.iter().rev().fold(0, |acc, &u| acc * q + u)
}

/// Smallest `P > 0` after which the register returns to its initial state.
pub fn period(poly: &Polynomial, seed: &[FieldElement]) -> Result<u64, LfsrError> {
    let idx = seed_indices(poly, seed)?;
    period_indices(poly, &idx)
}

pub fn period_indices(poly: &Polynomial, seed: &[u64]) -> Result<u64, LfsrError> {
    let field = poly.field();
    let q = field.order();
    let d = poly.degree();
    let states = poly.state_space();
    let top = states / q;
    let neg = negated(poly);
    let start = encode(q, seed);
    let mut window = seed.to_vec();
    let mut code = start;
    let mut steps = 0u64;
    // a revisit of the initial state, if any, happens within q^D steps
    while steps < states {
        let next = next_term(field, &neg, &window);
        window.rotate_left(1);
        window[d - 1] = next;
        code = code / q + next * top;
        steps += 1;
        if code == start {
            return Ok(steps);
        }
    }
    Err(LfsrError::NotPeriodic)
}

/// Whether the `q^D - 1` windows of one period are exactly the nonzero
/// vectors of `GF(q)^D`, each once.
pub fn window_coverage(poly: &Polynomial) -> Result<bool, LfsrError> {
    let states = poly.state_space();
    if states > ENUMERATION_LIMIT {
        return Err(LfsrError::TooLarge { states });
    }
    if !poly.is_primitive() {
        return Err(LfsrError::NotPrimitive);
    }
    let q = poly.field().order();
    let d = poly.degree();
    let seed: Vec<u64> = (0..d).map(|i| u64::from(i == 0)).collect();
    let terms = generate_indices(poly, &seed, (states - 1) as usize + d - 1)?;
    let mut seen = vec![false; states as usize];
    for w in terms.windows(d) {
        let code = encode(q, w) as usize;
        if code == 0 || seen[code] {
            return Ok(false);
        }
        seen[code] = true;
    }
    Ok(seen.iter().skip(1).all(|&s| s))
}
