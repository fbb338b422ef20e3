//! Exact arithmetic in GF(q), q = p^k.
//!
//! Elements are residue vectors `c_0 + c_1 x + ... + c_{k-1} x^{k-1}` over
//! GF(p), reduced modulo a fixed monic irreducible of degree `k`. Every
//! element has a canonical index `sum c_i p^i` in `[0, q)`; polynomial
//! coefficients, sequence terms and vertex ids downstream are all expressed
//! through that index, so the index-level operations (`add_index`,
//! `mul_index`, ...) are public as well.

use std::fmt;

use thiserror::Error;

use crate::arith;
use crate::poly::dense;

/// Largest supported field order. Keeps every intermediate product in `u64`.
pub const MAX_ORDER: u64 = 1 << 32;

const MAX_DEGREE: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("field order must be at least 2, got {0}")]
    OrderTooSmall(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields: GF({left}) and GF({right})")]
    FieldMismatch { left: u64, right: u64 },
    #[error("index {index} is out of range for GF({order})")]
    IndexOutOfRange { index: u64, order: u64 },
    #[error("residue {residue} is out of range for characteristic {p}")]
    ResidueOutOfRange { residue: u64, p: u64 },
    #[error("expected {expected} residues, got {found}")]
    WrongLength { expected: usize, found: usize },
}

/// The field GF(p^k) with its extension modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    k: u32,
    q: u64,
    /// Little-endian coefficients of the monic modulus (length `k + 1`);
    /// `None` for prime fields.
    modulus: Option<Vec<u64>>,
}

/// An element of some [`FieldSpec`], tagged with the field order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    order: u64,
    coeffs: Vec<u64>,
}

impl FieldElement {
    /// Residues `c_0, ..., c_{k-1}`, low degree first.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if wrote {
                write!(f, "+")?;
            }
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FieldSpec {
    /// Build GF(q). For `q = p^k` with `k >= 2` the modulus is the
    /// lexicographically smallest monic irreducible of degree `k` over GF(p),
    /// comparing coefficients from the constant term upwards.
    pub fn new(q: u64) -> Result<Self, FieldError> {
        if q < 2 {
            return Err(FieldError::OrderTooSmall(q));
        }
        if q > MAX_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        let factored = arith::factorize(q).expect("q >= 2");
        let (p, k) = factored
            .as_prime_power()
            .ok_or(FieldError::NotPrimePower(q))?;
        if k == 1 {
            return Ok(Self::prime(p));
        }
        let base = Self::prime(p);
        let ku = k as usize;
        let modulus = (0..q)
            // a zero constant term means x divides the candidate
            .filter(|idx| idx / p.pow(k - 1) != 0)
            .map(|idx| {
                let mut m: Vec<u64> = (0..ku)
                    .map(|j| (idx / p.pow(k - 1 - j as u32)) % p)
                    .collect();
                m.push(1);
                m
            })
            .find(|m| dense::is_irreducible(&base, m))
            .expect("irreducible polynomials exist in every degree");
        Ok(Self {
            p,
            k,
            q,
            modulus: Some(modulus),
        })
    }

    pub(crate) fn prime(p: u64) -> Self {
        Self {
            p,
            k: 1,
            q: p,
            modulus: None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn is_prime_field(&self) -> bool {
        self.k == 1
    }

    /// Little-endian monic modulus, if this is a proper extension.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    pub fn zero(&self) -> FieldElement {
        self.element_unchecked(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element_unchecked(1)
    }

    /// Element with the given residue vector (low degree first).
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement, FieldError> {
        if coeffs.len() != self.k as usize {
            return Err(FieldError::WrongLength {
                expected: self.k as usize,
                found: coeffs.len(),
            });
        }
        if let Some(&residue) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(FieldError::ResidueOutOfRange { residue, p: self.p });
        }
        Ok(FieldElement {
            order: self.q,
            coeffs: coeffs.to_vec(),
        })
    }

    pub fn element_of_index(&self, index: u64) -> Result<FieldElement, FieldError> {
        if index >= self.q {
            return Err(FieldError::IndexOutOfRange {
                index,
                order: self.q,
            });
        }
        Ok(self.element_unchecked(index))
    }

    pub fn canonical_index(&self, a: &FieldElement) -> Result<u64, FieldError> {
        self.check(a)?;
        Ok(self.undigits(&a.coeffs))
    }

    /// All elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(|i| self.element_unchecked(i))
    }

    fn element_unchecked(&self, index: u64) -> FieldElement {
        let mut coeffs = vec![0; self.k as usize];
        self.digits(index, &mut coeffs);
        FieldElement {
            order: self.q,
            coeffs,
        }
    }

    fn check(&self, a: &FieldElement) -> Result<(), FieldError> {
        if a.order != self.q {
            return Err(FieldError::FieldMismatch {
                left: self.q,
                right: a.order,
            });
        }
        Ok(())
    }

    fn index2(&self, a: &FieldElement, b: &FieldElement) -> Result<(u64, u64), FieldError> {
        if a.order != b.order {
            return Err(FieldError::FieldMismatch {
                left: a.order,
                right: b.order,
            });
        }
        Ok((self.canonical_index(a)?, self.canonical_index(b)?))
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        let (x, y) = self.index2(a, b)?;
        Ok(self.element_unchecked(self.add_index(x, y)))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        let (x, y) = self.index2(a, b)?;
        Ok(self.element_unchecked(self.sub_index(x, y)))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        let (x, y) = self.index2(a, b)?;
        Ok(self.element_unchecked(self.mul_index(x, y)))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, FieldError> {
        let (x, y) = self.index2(a, b)?;
        let inv = self.inv_index(y).ok_or(FieldError::DivisionByZero)?;
        Ok(self.element_unchecked(self.mul_index(x, inv)))
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        let x = self.canonical_index(a)?;
        Ok(self.element_unchecked(self.neg_index(x)))
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        let x = self.canonical_index(a)?;
        let inv = self.inv_index(x).ok_or(FieldError::DivisionByZero)?;
        Ok(self.element_unchecked(inv))
    }

    pub fn pow(&self, a: &FieldElement, exp: u64) -> Result<FieldElement, FieldError> {
        let x = self.canonical_index(a)?;
        Ok(self.element_unchecked(self.pow_index(x, exp)))
    }

    /// Equality that refuses to compare elements of different fields.
    pub fn eq(&self, a: &FieldElement, b: &FieldElement) -> Result<bool, FieldError> {
        let (x, y) = self.index2(a, b)?;
        Ok(x == y)
    }

    // Index-level arithmetic. Arguments must already lie in [0, q).

    pub fn add_index(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.k == 1 {
            return (a + b) % self.p;
        }
        self.zip_digits(a, b, |x, y| (x + y) % self.p)
    }

    pub fn sub_index(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.k == 1 {
            return (a + self.p - b) % self.p;
        }
        self.zip_digits(a, b, |x, y| (x + self.p - y) % self.p)
    }

    pub fn neg_index(&self, a: u64) -> u64 {
        self.sub_index(0, a)
    }

    pub fn mul_index(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.q && b < self.q);
        if self.k == 1 {
            return a * b % self.p;
        }
        if a == 0 || b == 0 {
            return 0;
        }
        let k = self.k as usize;
        let p = self.p;
        let mut x = [0u64; MAX_DEGREE];
        let mut y = [0u64; MAX_DEGREE];
        self.digits(a, &mut x[..k]);
        self.digits(b, &mut y[..k]);
        let mut prod = [0u64; 2 * MAX_DEGREE];
        for i in 0..k {
            if x[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
            }
        }
        // x^k = -(m_0 + ... + m_{k-1} x^{k-1})
        let m = self
            .modulus
            .as_ref()
            .expect("extension field has a modulus");
        for t in (k..2 * k - 1).rev() {
            let c = prod[t];
            if c == 0 {
                continue;
            }
            prod[t] = 0;
            for i in 0..k {
                prod[t - k + i] = (prod[t - k + i] + (p - m[i]) % p * c) % p;
            }
        }
        self.undigits(&prod[..k])
    }

    pub fn pow_index(&self, a: u64, mut exp: u64) -> u64 {
        let mut base = a;
        let mut acc = 1 % self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_index(acc, base);
            }
            base = self.mul_index(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv_index(&self, a: u64) -> Option<u64> {
        (a != 0).then(|| self.pow_index(a, self.q - 2))
    }

    fn digits(&self, mut index: u64, out: &mut [u64]) {
        for d in out.iter_mut() {
            *d = index % self.p;
            index /= self.p;
        }
    }

    fn undigits(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn zip_digits(&self, a: u64, b: u64, op: impl Fn(u64, u64) -> u64) -> u64 {
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.k {
            out += op(a % self.p, b % self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}
