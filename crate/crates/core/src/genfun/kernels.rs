//! The auxiliary series each generating function is assembled from.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{check_positive, geometric, inv, one_plus, poly_x, GfKind};
use crate::binomial::{binom, ipow};
use crate::error::{Error, Result};
use crate::fps::XSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaVariant {
    /// Kernel of the `1 × s` nondecreasing recursion.
    Plain,
    /// Kernel of the recursion over words with letters `≥ r - 1`.
    Geq,
}

/// Kernel `α_m` (or its `≥ r - 1` variant) as a series in `x` and `t`.
///
/// Plain:
/// `Σ_{n<s-1} C(n+m-1, m-1) x^n + C(s+m-3, m-1) x^{s-1}/(1-tx)
///  - t^{-(s-1)}/(1-tx) · Σ_{n<s-1} C(n+m-2, m-2) (tx)^n`.
///
/// Geq:
/// `Σ_{n<s} C(n+m-r+1, m-r+1) x^n + C(s+m-r, s-1) x^s/(1-x)
///  - t^{-(s-1)}/(1-x) · Σ_{n<s} C(n+m-r, m-r) (tx)^n`.
pub fn build_alpha(variant: AlphaVariant, m: u32, r: u32, s: u32, order: usize) -> Result<XSeries> {
    if m == 0 || s == 0 {
        return Err(Error::ParameterDomain(format!("alpha needs m, s ≥ 1 (m = {m}, s = {s})")));
    }
    let (m, r, s) = (i64::from(m), i64::from(r), i64::from(s));
    let series = match variant {
        AlphaVariant::Plain => {
            let head = poly_x(order, (0..s - 1).map(|n| (binom(n + m - 1, m - 1), 0, n as usize)));
            let tail = XSeries::term(order, binom(s + m - 3, m - 1), 0, (s - 1) as usize)
                * geometric(order, 1, 1);
            let corr = poly_x(order, (0..s - 1).map(|n| (binom(n + m - 2, m - 2), n, n as usize)));
            head + tail - (geometric(order, 1, 1) * corr).shift_t(-(s - 1))
        }
        AlphaVariant::Geq => {
            if r < 2 {
                return Err(Error::ParameterDomain(format!("alpha(≥r-1) needs r ≥ 2, got {r}")));
            }
            let head = poly_x(order, (0..s).map(|n| (binom(n + m - r + 1, m - r + 1), 0, n as usize)));
            let tail = XSeries::term(order, binom(s + m - r, s - 1), 0, s as usize) * geometric(order, 1, 0);
            let corr = poly_x(order, (0..s).map(|n| (binom(n + m - r, m - r), n, n as usize)));
            head + tail - (geometric(order, 1, 0) * corr).shift_t(-(s - 1))
        }
    };
    Ok(series)
}

/// Named kernels for one generating function; only the ones it uses are set.
#[derive(Clone, Debug, Default)]
pub struct KernelSet {
    /// `α_m` (or `α_m^{(≥r-1)}`) keyed by `m`.
    pub alpha: BTreeMap<u32, XSeries>,
    pub beta: Option<XSeries>,
    pub gamma: Option<XSeries>,
    pub delta: Option<XSeries>,
    pub sigma: Option<XSeries>,
    pub rho: Option<XSeries>,
}

/// Builds the kernels that `which` needs at alphabet size `k`.
///
/// For the recursive Smirnov kinds this is the level-`k` pair
/// (`γ_k, δ_k` or `σ_k, ρ_k`); it is empty at the base level.
pub fn build_kernels(which: GfKind, k: u32, r: u32, s: u32, order: usize) -> Result<KernelSet> {
    check_positive(k, r, s)?;
    let mut set = KernelSet::default();
    match which {
        GfKind::A => {
            for m in 1..=k {
                set.alpha.insert(m, build_alpha(AlphaVariant::Plain, m, r, s, order)?);
            }
        }
        GfKind::Bgeq | GfKind::B => {
            if r < 2 || k + 1 < r {
                return Err(Error::ParameterDomain(format!("{which} kernels need r ≥ 2 and k ≥ r - 1")));
            }
            let top = if which == GfKind::B { k - 1 } else { k };
            for m in (r - 1).max(1)..=top {
                set.alpha.insert(m, build_alpha(AlphaVariant::Geq, m, r, s, order)?);
            }
            if which == GfKind::B && k >= r {
                set.beta = Some(beta(k, r, s, order));
            }
        }
        GfKind::C => {
            if k < 2 {
                return Err(Error::ParameterDomain("Smirnov kernels need k ≥ 2".into()));
            }
            if k >= 3 {
                set.gamma = Some(gamma(k, s, order));
                set.delta = Some(delta(k, s, order));
            }
        }
        GfKind::Dgeq | GfKind::D => {
            if r < 2 || k < r {
                return Err(Error::ParameterDomain(format!("{which} kernels need k ≥ r ≥ 2")));
            }
            if k > r {
                set.sigma = Some(sigma(k, r, s, order));
                set.rho = Some(rho(k, r, s, order));
            }
        }
        GfKind::TotalNondecreasing | GfKind::TotalSmirnov => {}
    }
    Ok(set)
}

/// `Σ_{i<s} C(i+k-r, k-r) t^{i·te} x^i`.
fn shifted_heads(k: i64, r: i64, s: i64, te: i64, order: usize) -> XSeries {
    poly_x(order, (0..s).map(|i| (binom(i + k - r, k - r), i * te, i as usize)))
}

pub(crate) fn beta(k: u32, r: u32, s: u32, order: usize) -> XSeries {
    let (k, r, s) = (i64::from(k), i64::from(r), i64::from(s));
    let inv_pow = geometric(order, 1, 0).pow((r - 1) as u32);
    let first = poly_x(order, (0..s).map(|i| (binom(i + k - 1, k - 1), 0, i as usize)));
    let second = &inv_pow * shifted_heads(k, r, s, 0, order);
    let mut third = XSeries::zero(order);
    for i in 0..s {
        let inner = poly_x(order, (0..s - i).map(|n| (binom(n + r - 2, r - 2), 0, n as usize)));
        third = third + XSeries::term(order, binom(i + k - r, k - r), 0, i as usize) * inner;
    }
    let fourth = (&inv_pow * shifted_heads(k, r, s, 1, order)).shift_t(-(s - 1));
    first + second - third - fourth
}

/// `(1 + u - lead · u^s) / (1 - q u)` with `u = t^te x`.
fn smirnov_ratio(lead: &BigInt, q: i64, s: i64, te: i64, order: usize) -> XSeries {
    let num = one_plus(order, 1, te) - XSeries::term(order, lead.clone(), s * te, s as usize);
    num * geometric(order, q, te)
}

pub(crate) fn gamma(k: u32, s: u32, order: usize) -> XSeries {
    let (k, s) = (i64::from(k), i64::from(s));
    let lead = BigInt::from(k) * ipow(k - 1, (s - 1) as u32);
    smirnov_ratio(&lead, k - 1, s, 0, order) - smirnov_ratio(&lead, k - 1, s, 1, order).shift_t(-(s - 1))
}

pub(crate) fn delta(k: u32, s: u32, order: usize) -> XSeries {
    let (k, s) = (i64::from(k), i64::from(s));
    let q = k - 1;
    let num = XSeries::one(order) - XSeries::term(order, k - 2, 1, 1)
        - XSeries::term(order, ipow(q, (s - 1) as u32), s, s as usize);
    let first = (num * geometric(order, q, 1)).shift_t(-(s - 1));
    let tx_over = XSeries::term(order, 1, 1, 1) * inv(&one_plus(order, 1, 1));
    let tail = XSeries::one(order) - XSeries::term(order, ipow(q, (s - 1) as u32), 0, (s - 1) as usize);
    let second = tx_over * one_plus(order, 1, 0) * tail * geometric(order, q, 0);
    first - second
}

pub(crate) fn sigma(k: u32, r: u32, s: u32, order: usize) -> XSeries {
    let (q, s) = (i64::from(k) - i64::from(r), i64::from(s));
    let lead = BigInt::from(q + 1) * ipow(q, (s - 1) as u32);
    smirnov_ratio(&lead, q, s, 0, order) - smirnov_ratio(&lead, q, s, 1, order).shift_t(-(s - 1))
}

pub(crate) fn rho(k: u32, r: u32, s: u32, order: usize) -> XSeries {
    let (q, s) = (i64::from(k) - i64::from(r), i64::from(s));
    let lead = BigInt::from(q + 1) * ipow(q, (s - 1) as u32);
    let tail = XSeries::one(order) - XSeries::term(order, ipow(q, (s - 1) as u32), 0, (s - 1) as usize);
    let middle = XSeries::term(order, q + 1, 0, 2) * tail * geometric(order, q, 0);
    let last = XSeries::term(order, 1, 0, 1) * smirnov_ratio(&lead, q, s, 1, order).shift_t(-(s - 1));
    XSeries::one(order) - middle + last
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fps::LaurentPoly;

    const N: usize = 8;

    #[test]
    fn alpha_one_is_the_single_letter_gf() {
        // s = 2: 1 + x/(1 - tx)
        let a = build_alpha(AlphaVariant::Plain, 1, 1, 2, N).unwrap();
        let expected = XSeries::from_coeffs(
            std::iter::once(LaurentPoly::one())
                .chain((1..=N).map(|n| LaurentPoly::monomial(1, n as i64 - 1)))
                .collect(),
        );
        assert_eq!(a, expected);
    }

    #[test]
    fn alpha_vanishes_at_s1() {
        for m in 2..=5 {
            assert!(build_alpha(AlphaVariant::Plain, m, 1, 1, N).unwrap().is_zero(), "m = {m}");
        }
    }

    #[test]
    fn alpha_geq_base_is_geometric() {
        for r in 2..=4 {
            let a = build_alpha(AlphaVariant::Geq, r - 1, r, 1, N).unwrap();
            assert_eq!(a, XSeries::from_integers(N, [1; N + 1]), "r = {r}");
        }
    }

    #[test]
    fn beta_vanishes_at_s1() {
        for (k, r) in [(2, 2), (3, 2), (5, 3), (4, 4)] {
            assert!(beta(k, r, 1, N).is_zero(), "k = {k}, r = {r}");
        }
    }

    #[test]
    fn smirnov_kernel_constants() {
        // At x = 0 the two halves of γ and σ leave 1 - t^{-(s-1)}, and δ
        // leaves t^{-(s-1)}; all reduce to 0 or 1 at t = 1.
        for s in 1..=3 {
            let lead = LaurentPoly::one() - LaurentPoly::monomial(1, 1 - i64::from(s));
            for k in 3..=5 {
                assert!(gamma(k, s, N).eval_t1().is_zero(), "gamma_{k} at t=1, s={s}");
                assert_eq!(gamma(k, s, N).coeff(0), &lead);
                assert_eq!(delta(k, s, N).coeff(0), &LaurentPoly::monomial(1, 1 - i64::from(s)));
                assert_eq!(delta(k, s, N).eval_t1(), XSeries::one(N), "delta_{k} at t=1, s={s}");
            }
            for (k, r) in [(3, 2), (4, 2), (4, 3)] {
                assert_eq!(rho(k, r, s, N).coeff(0), &LaurentPoly::one());
                assert_eq!(sigma(k, r, s, N).coeff(0), &lead);
                assert!(sigma(k, r, s, N).eval_t1().coeff(0).is_zero());
            }
        }
    }

    #[test]
    fn kernel_sets_follow_the_kind() {
        let set = build_kernels(GfKind::B, 4, 2, 2, N).unwrap();
        assert_eq!(set.alpha.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(set.beta.is_some() && set.gamma.is_none());
        let set = build_kernels(GfKind::C, 2, 1, 2, N).unwrap();
        assert!(set.gamma.is_none());
        let set = build_kernels(GfKind::D, 4, 2, 2, N).unwrap();
        assert!(set.sigma.is_some() && set.rho.is_some());
        assert!(build_kernels(GfKind::D, 2, 3, 2, N).is_err());
        assert!(build_kernels(GfKind::C, 1, 1, 2, N).is_err());
    }
}
