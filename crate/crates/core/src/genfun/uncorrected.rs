//! Formulas exactly as stated in the cases where they disagree with the
//! oracle. Used to report both values side by side; nothing else should
//! build on these.

use num_bigint::BigInt;

use super::smirnov::{c2_closed, c_from_base, d_from_dgeq, dgeq_series};
use super::totals::smirnov_weight;
use super::{check_positive, geometric, one_plus};
use crate::binomial::ipow;
use crate::error::{Error, Result};
use crate::fps::XSeries;

/// `C_k` grown from the two-letter closed form at every `s`, including
/// `s = 1` where that form undercounts the odd-length words.
pub fn gf_c_as_stated(k: u32, s: u32, order: usize) -> Result<XSeries> {
    check_positive(k, 1, s)?;
    if k < 2 {
        return Err(Error::ParameterDomain(format!("Smirnov generating functions need k ≥ 2, got {k}")));
    }
    Ok(c_from_base(c2_closed(s, order), k, s, order))
}

/// `D_r = (1+x)/(1-x)`, the stated base of the `D_k` recursion. Correct
/// only for `r = 2`.
pub fn d_base_as_stated(order: usize) -> XSeries {
    one_plus(order, 1, 0) * geometric(order, 1, 0)
}

fn check_d(k: u32, r: u32, s: u32) -> Result<()> {
    check_positive(k, r, s)?;
    if r < 2 || k < r {
        return Err(Error::ParameterDomain(format!("D needs k ≥ r ≥ 2 (k = {k}, r = {r})")));
    }
    Ok(())
}

/// `D^{(≥r-1)}_k` from its recursion with no restriction on `s`.
pub fn gf_dgeq_as_stated(k: u32, r: u32, s: u32, order: usize) -> Result<XSeries> {
    check_d(k, r, s)?;
    Ok(dgeq_series(k, r, s, order))
}

/// `D_k` with the stated base at `k = r` and no restriction on `s`.
pub fn gf_d_as_stated(k: u32, r: u32, s: u32, order: usize) -> Result<XSeries> {
    check_d(k, r, s)?;
    if k == r {
        return Ok(d_base_as_stated(order));
    }
    Ok(d_from_dgeq(&dgeq_series(k - 1, r, s, order), k, r, s, order))
}

/// Smirnov total with the sum starting at `i = 1`, which drops the `0^{s-1}`
/// term that matters at `s = 1`:
/// `(k-1)^{n-s} (n-s+1) Σ_{i=1}^{k-r} i^{s-1}(i+1)`.
pub fn smirnov_closed_total_as_stated(n: usize, k: u32, r: u32, s: u32) -> Result<BigInt> {
    check_positive(k, r, s)?;
    if k < 2 {
        return Err(Error::ParameterDomain(format!("Smirnov totals need k ≥ 2, got {k}")));
    }
    if n < s as usize {
        return Ok(BigInt::default());
    }
    let (ki, ri, si) = (i64::from(k), i64::from(r), i64::from(s));
    let d = n as i64 - si;
    Ok(ipow(ki - 1, d as u32) * (d + 1) * smirnov_weight(ki, ri, si, 1))
}
