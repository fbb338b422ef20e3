//! Closed-form diameter bounds evaluated in exact integer arithmetic.

use crate::arith::{self, ArithError};

fn check_nd(n: u64, d: u64) -> Result<(), ArithError> {
    if d < 2 || n < d {
        return Err(ArithError::InvalidArgument(format!(
            "need n >= d >= 2, got n = {n}, d = {d}"
        )));
    }
    Ok(())
}

/// Ridge-counting upper bound on the diameter of a strongly connected pure
/// `(d-1)`-complex on `n` vertices: `floor(C(n, d-1) / (d-1))`.
pub fn hirsch_upper_bound(n: u64, d: u64) -> Result<u64, ArithError> {
    check_nd(n, d)?;
    let b = arith::binomial(n, d - 1)? / (d as u128 - 1);
    u64::try_from(b).map_err(|_| ArithError::Overflow("hirsch bound"))
}

/// `ceil(num / den) - offset` for positive `den`.
fn ceil_minus(num: u128, den: u128, offset: i128) -> Result<i128, ArithError> {
    let c = num.div_ceil(den);
    i128::try_from(c)
        .map(|c| c - offset)
        .map_err(|_| ArithError::Overflow("bound"))
}

fn pow128(base: u64, exp: u64) -> Result<u128, ArithError> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| (base as u128).checked_pow(e))
        .ok_or(ArithError::Overflow("power"))
}

/// Smallest integer diameter meeting `n^(d-1) / (d+2)^(d-1) - 3`, the
/// guarantee for corridors obtained from the colored-window construction.
pub fn corridor_lower_bound(n: u64, d: u64) -> Result<i128, ArithError> {
    check_nd(n, d)?;
    ceil_minus(pow128(n, d - 1)?, pow128(d + 2, d - 1)?, 3)
}

/// Smallest integer diameter meeting `n^(d-1) / (2(d+2))^(d-1) - 1`, the
/// guarantee for doubled corridors on `n` vertices.
pub fn pseudo_manifold_lower_bound(n: u64, d: u64) -> Result<i128, ArithError> {
    check_nd(n, d)?;
    ceil_minus(pow128(n, d - 1)?, pow128(2 * (d + 2), d - 1)?, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hirsch_examples() {
        assert_eq!(hirsch_upper_bound(10, 3), Ok(22));
        assert_eq!(hirsch_upper_bound(15, 3), Ok(52));
        // floor(d / (d - 1))
        assert_eq!(hirsch_upper_bound(2, 2), Ok(2));
        for d in 3..30 {
            assert_eq!(hirsch_upper_bound(d, d), Ok(1), "d = {d}");
        }
        assert!(hirsch_upper_bound(3, 4).is_err());
        assert!(hirsch_upper_bound(5, 1).is_err());
        assert!(hirsch_upper_bound(u64::MAX, 40).is_err());
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(corridor_lower_bound(10, 3), Ok(1));
        assert_eq!(corridor_lower_bound(15, 3), Ok(6));
        assert_eq!(corridor_lower_bound(18, 4), Ok(24));
        assert_eq!(corridor_lower_bound(8, 2), Ok(-1));
        // 20^2 / 10^2 - 1
        assert_eq!(pseudo_manifold_lower_bound(20, 3), Ok(3));
        // non-integral quotient rounds up: 11^2 / 25 = 4.84
        assert_eq!(corridor_lower_bound(11, 3), Ok(2));
    }
}
