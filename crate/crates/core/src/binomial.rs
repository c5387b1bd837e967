//! Binomial coefficients over all integer arguments.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)` with the convention used by every generating function here:
///
/// * `C(a, b) = 0` when `b < 0`, or when `a ≥ 0` and `b > a`;
/// * `C(a, 0) = 1` for every integer `a`, including negative ones.
///
/// For `a < 0 < b` the usual upper-negation identity
/// `C(a, b) = (-1)^b C(b - a - 1, b)` applies.
pub fn binom(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if b == 0 {
        return BigInt::one();
    }
    if a >= 0 {
        if b > a {
            return BigInt::zero();
        }
        return nonneg(a as u64, b as u64);
    }
    let magnitude = nonneg((b - a - 1) as u64, b as u64);
    if b % 2 == 0 {
        magnitude
    } else {
        -magnitude
    }
}

fn nonneg(a: u64, b: u64) -> BigInt {
    let b = b.min(a - b);
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    acc
}

/// `base^exp` with `0^0 = 1`.
pub fn ipow(base: i64, exp: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), exp as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn convention_edges() {
        assert_eq!(binom(-1, 0), BigInt::one());
        assert_eq!(binom(5, -1), BigInt::zero());
        assert_eq!(binom(3, 4), BigInt::zero());
        assert_eq!(binom(0, 0), BigInt::one());
        assert_eq!(binom(-1, 1), BigInt::from(-1));
        assert_eq!(binom(-2, 2), BigInt::from(3));
    }

    #[test]
    fn pascal_rows() {
        for a in 1..30i64 {
            for b in 1..=a {
                assert_eq!(binom(a, b), binom(a - 1, b - 1) + binom(a - 1, b), "C({a},{b})");
            }
        }
        assert_eq!(binom(52, 5), BigInt::from(2_598_960));
        assert_eq!(binom(100, 50).to_string(), "100891344545564193334812497256");
    }

    #[test]
    fn zero_to_the_zero() {
        assert_eq!(ipow(0, 0), BigInt::one());
        assert_eq!(ipow(0, 3), BigInt::zero());
        assert_eq!(ipow(-2, 3), BigInt::from(-8));
    }
}
