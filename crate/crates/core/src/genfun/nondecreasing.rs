//! Nondecreasing words.

use super::kernels::{build_kernels, KernelSet};
use super::{check_positive, inv, poly_x, GfKind};
use crate::binomial::binom;
use crate::error::{Error, Result};
use crate::fps::XSeries;

/// `∏_{j=lo}^{hi} (1 - t^j x)`, empty product `1`.
fn falling_product(lo: u32, hi: u32, order: usize) -> XSeries {
    (lo..=hi).fold(XSeries::one(order), |acc, j| {
        acc * (XSeries::one(order) - XSeries::term(order, 1, i64::from(j), 1))
    })
}

/// `Σ_n C(n+k-1, k-1) x^n`: all nondecreasing words, no `t`.
fn count_series(k: u32, order: usize) -> XSeries {
    let k = i64::from(k);
    poly_x(order, (0..=order).map(|n| (binom(n as i64 + k - 1, k - 1), 0, n)))
}

fn alpha(set: &KernelSet, m: u32) -> &XSeries {
    set.alpha.get(&m).expect("kernel set covers every m in range")
}

/// Distribution of `1 × s` rectangles over nondecreasing words on `[k]`:
///
/// `A_k = Σ_{i=0}^{k-1} α_{k-i}(t^i x, t) / (t^{i(s-1)} ∏_{j=1}^{i} (1 - t^j x))`.
pub fn gf_a(k: u32, s: u32, order: usize) -> Result<XSeries> {
    check_positive(k, 1, s)?;
    let kernels = build_kernels(GfKind::A, k, 1, s, order)?;
    let shift = i64::from(s) - 1;
    let mut total = XSeries::zero(order);
    for i in 0..k {
        let num = alpha(&kernels, k - i).scale_x(i64::from(i));
        let den = inv(&falling_product(1, i, order));
        total = total + (num * den).shift_t(-(i64::from(i) * shift));
    }
    Ok(total)
}

/// Distribution of `r × s` rectangles over nondecreasing words on `[k]`
/// whose letters are all `≥ r - 1`; requires `r ≥ 2` and `k ≥ r - 1`:
///
/// `Σ_{i=0}^{k-r+1} α^{(≥r-1)}_{k-i}(t^i x, t) / (t^{i(s-1)} ∏_{j=0}^{i-1} (1 - t^j x))`.
pub fn gf_bgeq(k: u32, r: u32, s: u32, order: usize) -> Result<XSeries> {
    check_positive(k, r, s)?;
    if r < 2 || k + 1 < r {
        return Err(Error::ParameterDomain(format!(
            "Bgeq needs r ≥ 2 and k ≥ r - 1 (k = {k}, r = {r})"
        )));
    }
    let kernels = build_kernels(GfKind::Bgeq, k, r, s, order)?;
    let shift = i64::from(s) - 1;
    let mut total = XSeries::zero(order);
    for i in 0..=(k + 1 - r) {
        let num = alpha(&kernels, k - i).scale_x(i64::from(i));
        let den = if i == 0 {
            XSeries::one(order)
        } else {
            inv(&falling_product(0, i - 1, order))
        };
        total = total + (num * den).shift_t(-(i64::from(i) * shift));
    }
    Ok(total)
}

/// Distribution of `r × s` rectangles (`r ≥ 2`) over nondecreasing words on
/// `[k]`:
///
/// `B_k = (1-x)^{-(r-1)} Σ_{i=1}^{k-r+1} α^{(≥r-1)}_{k-i}(t^i x, t) / (t^{i(s-1)} ∏_{j=1}^{i-1} (1 - t^j x)) + β_k`.
///
/// When `k < r` no rectangle fits and the result is the plain count series.
pub fn gf_b(k: u32, r: u32, s: u32, order: usize) -> Result<XSeries> {
    check_positive(k, r, s)?;
    if r < 2 {
        return Err(Error::ParameterDomain("B counts r×s rectangles with r ≥ 2; use A for r = 1".into()));
    }
    if k < r {
        return Ok(count_series(k, order));
    }
    let kernels = build_kernels(GfKind::B, k, r, s, order)?;
    let shift = i64::from(s) - 1;
    let mut sum = XSeries::zero(order);
    for i in 1..=(k + 1 - r) {
        let num = alpha(&kernels, k - i).scale_x(i64::from(i));
        let den = inv(&falling_product(1, i - 1, order));
        sum = sum + (num * den).shift_t(-(i64::from(i) * shift));
    }
    let prefactor = inv(&(XSeries::one(order) - XSeries::term(order, 1, 0, 1))).pow(r - 1);
    let beta = kernels.beta.expect("beta is built for k ≥ r");
    Ok(prefactor * sum + beta)
}
