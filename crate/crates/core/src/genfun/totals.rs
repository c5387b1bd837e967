//! Total capacity over a family, as a series in `x` and in closed form.

use num_bigint::BigInt;

use super::{check_positive, geometric, poly_x};
use crate::binomial::{binom, ipow};
use crate::error::{Error, Result};
use crate::fps::XSeries;
use crate::wordspace::Family;

fn check_total_regime(family: Family, k: u32, r: u32, s: u32) -> Result<()> {
    check_positive(k, r, s)?;
    if family == Family::Smirnov {
        if k < 2 {
            return Err(Error::ParameterDomain(format!("Smirnov totals need k ≥ 2, got {k}")));
        }
        if r >= 2 && s < 2 {
            return Err(Error::UnsupportedRegime(format!(
                "Smirnov r×s totals with r = {r} ≥ 2 and s = 1 are served by the oracle only"
            )));
        }
    }
    Ok(())
}

/// `(-1)^i C(i+s-2, i) C(k-r+1+s, s+i+1)` for `i = 0..=k-r+1`.
fn nondecreasing_weights(k: i64, r: i64, s: i64) -> impl Iterator<Item = (i64, BigInt)> {
    (0..=(k - r + 1)).map(move |i| {
        let w = binom(i + s - 2, i) * binom(k - r + 1 + s, s + i + 1);
        (i, if i % 2 == 0 { w } else { -w })
    })
}

/// `Σ_{i=0}^{k-r} i^{s-1} (i+1)` with `0^0 = 1`.
pub(crate) fn smirnov_weight(k: i64, r: i64, s: i64, from: i64) -> BigInt {
    (from..=(k - r)).map(|i| ipow(i, (s - 1) as u32) * (i + 1)).sum()
}

/// Nondecreasing:
/// `x^s Σ_{i=0}^{k-r+1} (-1)^i C(i+s-2, i) C(k-r+1+s, s+i+1) x^i / (1-x)^{k+1}`.
///
/// Smirnov: `x^s Σ_{i=0}^{k-r} i^{s-1}(i+1) / (1-(k-1)x)^2`.
///
/// Both are t-free.
pub fn gf_total(family: Family, k: u32, r: u32, s: u32, order: usize) -> Result<XSeries> {
    check_total_regime(family, k, r, s)?;
    let (ki, ri, si) = (i64::from(k), i64::from(r), i64::from(s));
    let su = s as usize;
    Ok(match family {
        Family::Nondecreasing => {
            let num = poly_x(order, nondecreasing_weights(ki, ri, si).map(|(i, w)| (w, 0, su + i as usize)));
            num * geometric(order, 1, 0).pow(k + 1)
        }
        Family::Smirnov => {
            let lead = smirnov_weight(ki, ri, si, 0);
            XSeries::term(order, lead, 0, su) * geometric(order, ki - 1, 0).pow(2)
        }
    })
}

/// Exact total capacity over words of length `n`; `0` for `n < s`.
///
/// Nondecreasing:
/// `Σ_{i=0}^{min(k-r+1, n-s)} (-1)^i C(i+s-2, i) C(k-r+1+s, s+i+1) C(n-s-i+k, k)`.
///
/// Smirnov: `(k-1)^{n-s} (n-s+1) Σ_{i=0}^{k-r} i^{s-1}(i+1)`.
pub fn closed_total(family: Family, n: usize, k: u32, r: u32, s: u32) -> Result<BigInt> {
    check_total_regime(family, k, r, s)?;
    if n < s as usize {
        return Ok(BigInt::default());
    }
    let (ki, ri, si) = (i64::from(k), i64::from(r), i64::from(s));
    let d = n as i64 - si;
    Ok(match family {
        Family::Nondecreasing => nondecreasing_weights(ki, ri, si)
            .take_while(|&(i, _)| i <= d)
            .map(|(i, w)| w * binom(d - i + ki, ki))
            .sum(),
        Family::Smirnov => ipow(ki - 1, d as u32) * (d + 1) * smirnov_weight(ki, ri, si, 0),
    })
}
