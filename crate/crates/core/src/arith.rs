//! Integer helpers: trial-division factorization, Euler's totient and
//! overflow-checked combinatorics.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("argument must be positive")]
    Zero,
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("invalid arguments: {0}")]
    InvalidArgument(String),
}

/// A positive integer together with its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredInteger {
    value: u64,
    /// `(prime, multiplicity)` in increasing prime order.
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn distinct_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Euler's totient, `m * prod(1 - 1/p)`.
    pub fn phi(&self) -> u64 {
        self.factors
            .iter()
            .fold(self.value, |acc, &(p, _)| acc / p * (p - 1))
    }

    /// `Some((p, k))` when the value is `p^k` for a single prime `p`.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [(p, k)] => Some((*p, *k)),
            _ => None,
        }
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, (p, k)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if *k == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{k}")?;
            }
        }
        Ok(())
    }
}

/// Factor `m` by trial division.
pub fn factorize(m: u64) -> Result<FactoredInteger, ArithError> {
    if m == 0 {
        return Err(ArithError::Zero);
    }
    let mut rest = m;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut k = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            k += 1;
        }
        if k > 0 {
            factors.push((p, k));
        }
    };
    push(2, &mut rest);
    let mut p = 3u64;
    // p <= rest / p avoids squaring past u64::MAX
    while p <= rest / p {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(FactoredInteger { value: m, factors })
}

/// Factorization and Euler totient of `m` in one call.
pub fn factorize_and_phi(m: u64) -> Result<(FactoredInteger, u64), ArithError> {
    let f = factorize(m)?;
    let phi = f.phi();
    Ok((f, phi))
}

pub fn is_prime(m: u64) -> bool {
    m >= 2 && factorize(m).map(|f| f.factors == [(m, 1)]).unwrap_or(false)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> Result<u64, ArithError> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or(ArithError::Overflow("lcm"))
}

pub fn checked_pow(base: u64, exp: u32) -> Result<u64, ArithError> {
    base.checked_pow(exp).ok_or(ArithError::Overflow("power"))
}

/// Binomial coefficient `C(n, k)` in exact arithmetic.
pub fn binomial(n: u64, k: u64) -> Result<u128, ArithError> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) since acc = C(n, i)
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(ArithError::Overflow("binomial"))?
            / (i as u128 + 1);
    }
    Ok(acc)
}
