//! Smirnov words (no two equal adjacent letters).

use num_bigint::BigInt;

use super::kernels::build_kernels;
use super::{check_positive, geometric, inv, one_plus, poly_x, GfKind};
use crate::error::{Error, Result};
use crate::fps::XSeries;

/// `2(t-1)x^s / ((1-tx)(1-x)) + (1+x)/(1-x)`.
///
/// This is `C_2` for `s ≥ 2`: every window of an alternating word over `[2]`
/// contains a `1`, so a word of length `n ≥ s` holds exactly `n - s + 1`
/// rectangles.
pub(crate) fn c2_closed(s: u32, order: usize) -> XSeries {
    let s = s as usize;
    let first = (XSeries::term(order, 2, 1, s) - XSeries::term(order, 2, 0, s))
        * geometric(order, 1, 1)
        * geometric(order, 1, 0);
    first + one_plus(order, 1, 0) * geometric(order, 1, 0)
}

/// `C_2` for any `s`. At `s = 1` the capacity is the letter sum, which
/// differs between the two words of odd length, giving
/// `(1 + (t+t²)x + t³x²) / (1 - t³x²)`.
fn c2(s: u32, order: usize) -> XSeries {
    if s > 1 {
        return c2_closed(s, order);
    }
    let num = poly_x(
        order,
        [
            (BigInt::from(1), 0, 0),
            (BigInt::from(1), 1, 1),
            (BigInt::from(1), 2, 1),
            (BigInt::from(1), 3, 2),
        ],
    );
    let den = XSeries::one(order) - XSeries::term(order, 1, 3, 2);
    num * inv(&den)
}

/// Lifts `C_2` to `C_k` through
/// `C_k = (1+tx)(γ_k + δ_k C_{k-1}(tx)) / (1 + tx - tx C_{k-1}(tx))`.
pub(crate) fn c_from_base(mut c: XSeries, k: u32, s: u32, order: usize) -> XSeries {
    for level in 3..=k {
        let kernels = build_kernels(GfKind::C, level, 1, s, order).expect("level ≥ 3");
        let (gamma, delta) = (kernels.gamma.unwrap(), kernels.delta.unwrap());
        let shifted = c.scale_x(1);
        let tx = XSeries::term(order, 1, 1, 1);
        let num = one_plus(order, 1, 1) * (gamma + delta * &shifted);
        let den = one_plus(order, 1, 1) - tx * shifted;
        c = num * inv(&den);
    }
    c
}

/// Distribution of `1 × s` rectangles over Smirnov words on `[k]`, `k ≥ 2`.
pub fn gf_c(k: u32, s: u32, order: usize) -> Result<XSeries> {
    check_positive(k, 1, s)?;
    if k < 2 {
        return Err(Error::ParameterDomain(format!("Smirnov generating functions need k ≥ 2, got {k}")));
    }
    Ok(c_from_base(c2(s, order), k, s, order))
}

fn check_d_regime(k: u32, r: u32, s: u32) -> Result<()> {
    check_positive(k, r, s)?;
    if r < 2 {
        return Err(Error::ParameterDomain("D counts r×s rectangles with r ≥ 2; use C for r = 1".into()));
    }
    if k < r {
        return Err(Error::ParameterDomain(format!("D needs k ≥ r (k = {k}, r = {r})")));
    }
    if s < 2 {
        return Err(Error::UnsupportedRegime(format!(
            "Smirnov r×s with r = {r} ≥ 2 and s = 1 has no verified generating function; use the oracle"
        )));
    }
    Ok(())
}

/// Unchecked level recursion for `D^{(≥r-1)}` starting at `k = r`.
pub(crate) fn dgeq_series(k: u32, r: u32, s: u32, order: usize) -> XSeries {
    let mut d = one_plus(order, 1, 0) * geometric(order, 1, 0);
    let shift = -(i64::from(s) - 1);
    for level in (r + 1)..=k {
        let kernels = build_kernels(GfKind::Dgeq, level, r, s, order).expect("level ≥ r + 1");
        let (sigma, rho) = (kernels.sigma.unwrap(), kernels.rho.unwrap());
        let shifted = d.scale_x(1).shift_t(shift);
        let num = one_plus(order, 1, 0) * (&shifted + sigma);
        let den = rho - XSeries::term(order, 1, 0, 1) * shifted;
        d = num * inv(&den);
    }
    d
}

/// Unchecked `D_k` for `k ≥ r + 1` from `D^{(≥r-1)}_{k-1}`.
pub(crate) fn d_from_dgeq(dgeq_prev: &XSeries, k: u32, r: u32, s: u32, order: usize) -> XSeries {
    let kernels = build_kernels(GfKind::D, k, r, s, order).expect("k ≥ r + 1");
    let (sigma, rho) = (kernels.sigma.unwrap(), kernels.rho.unwrap());
    let shifted = dgeq_prev.scale_x(1).shift_t(-(i64::from(s) - 1));
    let rm1 = i64::from(r) - 1;
    let num = one_plus(order, 1, 0) * (&shifted + sigma);
    let den = XSeries::term(order, -rm1, 0, 1) * shifted - one_plus(order, 1, 0).scale(rm1 - 1)
        + rho.scale(rm1);
    num * inv(&den)
}

/// Distribution of `r × s` rectangles over Smirnov words on `[k]` whose
/// letters are all `≥ r - 1`. Requires `k ≥ r ≥ 2` and `s ≥ 2`.
///
/// Base `D_r^{(≥r-1)} = (1+x)/(1-x)` (two alternating words over `{r-1, r}`,
/// which hold no `r × s` rectangle once `s ≥ 2`), then
/// `D_k = (1+x)(t^{-(s-1)} D_{k-1}(tx) + σ_k) / (-x t^{-(s-1)} D_{k-1}(tx) + ρ_k)`.
pub fn gf_dgeq(k: u32, r: u32, s: u32, order: usize) -> Result<XSeries> {
    check_d_regime(k, r, s)?;
    Ok(dgeq_series(k, r, s, order))
}

/// Distribution of `r × s` rectangles over all Smirnov words on `[k]`.
/// Requires `k ≥ r ≥ 2` and `s ≥ 2`.
///
/// At `k = r` no window of two or more columns can have every column of
/// height `r`, so the series is the word count `(1+x)/(1-(r-1)x)`.
pub fn gf_d(k: u32, r: u32, s: u32, order: usize) -> Result<XSeries> {
    check_d_regime(k, r, s)?;
    if k == r {
        return Ok(one_plus(order, 1, 0) * geometric(order, i64::from(r) - 1, 0));
    }
    let prev = dgeq_series(k - 1, r, s, order);
    Ok(d_from_dgeq(&prev, k, r, s, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::LaurentPoly;

    const N: usize = 9;

    #[test]
    fn two_letter_alternating_words() {
        for s in 2..=4u32 {
            let c = gf_c(2, s, N).unwrap();
            for n in s as usize..=N {
                assert_eq!(c.coeff(n), &LaurentPoly::monomial(2, (n - s as usize + 1) as i64));
            }
        }
        let c = gf_c(2, 2, 3).unwrap();
        let expected: Vec<LaurentPoly> = vec![
            LaurentPoly::one(),
            LaurentPoly::constant(2),
            LaurentPoly::monomial(2, 1),
            LaurentPoly::monomial(2, 2),
        ];
        assert_eq!(c.coeffs(), &expected[..]);
    }

    #[test]
    fn unit_squares_letter_sums() {
        let c = gf_c(2, 1, N).unwrap();
        assert_eq!(c.coeff(1), &LaurentPoly::from_terms([(1, 1), (2, 1)]));
        assert_eq!(c.coeff(2), &LaurentPoly::monomial(2, 3));
        assert_eq!(c.coeff(3), &LaurentPoly::from_terms([(4, 1), (5, 1)]));
    }

    #[test]
    fn three_letters_length_two() {
        let c = gf_c(3, 2, N).unwrap();
        assert_eq!(c.coeff(2), &LaurentPoly::from_terms([(1, 4), (2, 2)]));
    }

    #[test]
    fn c_rejects_single_letter() {
        assert!(matches!(gf_c(1, 2, N), Err(Error::ParameterDomain(_))));
    }

    #[test]
    fn dgeq_base_and_first_step() {
        for r in 2..=4 {
            for s in 2..=3 {
                let d = gf_dgeq(r, r, s, N).unwrap();
                let mut expected = vec![2i64; N + 1];
                expected[0] = 1;
                assert_eq!(d, XSeries::from_integers(N, expected));
            }
        }
        let d = gf_dgeq(3, 2, 2, N).unwrap();
        assert_eq!(d.coeff(2), &LaurentPoly::from_terms([(0, 4), (1, 2)]));
    }

    #[test]
    fn d_examples_and_regimes() {
        let d = gf_d(3, 2, 2, N).unwrap();
        assert_eq!(d.coeff(2), &LaurentPoly::from_terms([(0, 4), (1, 2)]));
        let base = gf_d(3, 3, 2, N).unwrap();
        assert_eq!(base.t_free_values().unwrap()[4], BigInt::from(3 * 8));
        assert!(matches!(gf_d(3, 2, 1, N), Err(Error::UnsupportedRegime(_))));
        assert!(matches!(gf_dgeq(4, 3, 1, N), Err(Error::UnsupportedRegime(_))));
        assert!(matches!(gf_d(2, 3, 2, N), Err(Error::ParameterDomain(_))));
        assert!(matches!(gf_d(3, 1, 2, N), Err(Error::ParameterDomain(_))));
    }
}
