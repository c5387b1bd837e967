//! Generating functions for the capacity distribution and its total.
//!
//! Every series is built from closed rational expressions or from a
//! recursion over the alphabet size, using only [`XSeries`] arithmetic:
//! finite sums of monomials, the substitution `x ↦ t^i x`, and inversion of
//! denominators whose constant term is `1`.
//!
//! | kind                 | family                           | rectangle        |
//! |----------------------|----------------------------------|------------------|
//! | [`GfKind::A`]        | nondecreasing                    | `1 × s`          |
//! | [`GfKind::Bgeq`]     | nondecreasing, letters `≥ r - 1` | `r × s`, `r ≥ 2` |
//! | [`GfKind::B`]        | nondecreasing                    | `r × s`, `r ≥ 2` |
//! | [`GfKind::C`]        | Smirnov                          | `1 × s`          |
//! | [`GfKind::Dgeq`]     | Smirnov, letters `≥ r - 1`       | `r × s`, `r, s ≥ 2` |
//! | [`GfKind::D`]        | Smirnov                          | `r × s`, `r, s ≥ 2` |
//!
//! The coefficient of `x^n` is the distribution polynomial over words of
//! length `n`. The two total kinds give the sum of capacities instead.

mod kernels;
mod nondecreasing;
mod smirnov;
mod special;
mod totals;
pub mod uncorrected;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fps::XSeries;
use crate::wordspace::Family;

pub use kernels::{build_alpha, build_kernels, AlphaVariant, KernelSet};
pub use nondecreasing::{gf_a, gf_b, gf_bgeq};
pub use smirnov::{gf_c, gf_d, gf_dgeq};
pub use special::{special_formula, SpecialFormula};
pub use totals::{closed_total, gf_total};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GfKind {
    A,
    Bgeq,
    B,
    C,
    Dgeq,
    D,
    TotalNondecreasing,
    TotalSmirnov,
}

impl GfKind {
    pub const ALL: [GfKind; 8] = [
        GfKind::A,
        GfKind::Bgeq,
        GfKind::B,
        GfKind::C,
        GfKind::Dgeq,
        GfKind::D,
        GfKind::TotalNondecreasing,
        GfKind::TotalSmirnov,
    ];

    pub fn family(&self) -> Family {
        match self {
            GfKind::A | GfKind::Bgeq | GfKind::B | GfKind::TotalNondecreasing => Family::Nondecreasing,
            _ => Family::Smirnov,
        }
    }

    pub fn is_total(&self) -> bool {
        matches!(self, GfKind::TotalNondecreasing | GfKind::TotalSmirnov)
    }
}

impl fmt::Display for GfKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GfKind::A => "A",
            GfKind::Bgeq => "Bgeq",
            GfKind::B => "B",
            GfKind::C => "C",
            GfKind::Dgeq => "Dgeq",
            GfKind::D => "D",
            GfKind::TotalNondecreasing => "totalND",
            GfKind::TotalSmirnov => "totalSM",
        })
    }
}

impl FromStr for GfKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GfKind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::ParameterDomain(format!("unknown generating function `{s}`")))
    }
}

/// A fully specified generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GfRequest {
    pub kind: GfKind,
    pub k: u32,
    pub r: u32,
    pub s: u32,
    pub order: usize,
}

impl GfRequest {
    pub fn new(kind: GfKind, k: u32, r: u32, s: u32, order: usize) -> Self {
        Self { kind, k, r, s, order }
    }

    /// Expands the series to the requested order.
    pub fn build(&self) -> Result<XSeries> {
        let Self { kind, k, r, s, order } = *self;
        check_positive(k, r, s)?;
        match kind {
            GfKind::A => {
                require_r1(kind, r)?;
                gf_a(k, s, order)
            }
            GfKind::C => {
                require_r1(kind, r)?;
                gf_c(k, s, order)
            }
            GfKind::Bgeq => gf_bgeq(k, r, s, order),
            GfKind::B => gf_b(k, r, s, order),
            GfKind::Dgeq => gf_dgeq(k, r, s, order),
            GfKind::D => gf_d(k, r, s, order),
            GfKind::TotalNondecreasing => gf_total(Family::Nondecreasing, k, r, s, order),
            GfKind::TotalSmirnov => gf_total(Family::Smirnov, k, r, s, order),
        }
    }
}

fn require_r1(kind: GfKind, r: u32) -> Result<()> {
    if r == 1 {
        Ok(())
    } else {
        Err(Error::ParameterDomain(format!("{kind} counts 1×s rectangles; got r = {r}")))
    }
}

pub(crate) fn check_positive(k: u32, r: u32, s: u32) -> Result<()> {
    if k == 0 || r == 0 || s == 0 {
        return Err(Error::ParameterDomain(format!(
            "k, r, s must all be positive (k = {k}, r = {r}, s = {s})"
        )));
    }
    Ok(())
}

// Small builders shared by the submodules.

/// `Σ c · t^te · x^xe` over the given terms.
pub(crate) fn poly_x<I>(order: usize, terms: I) -> XSeries
where
    I: IntoIterator<Item = (BigInt, i64, usize)>,
{
    let mut out = XSeries::zero(order);
    for (c, te, xe) in terms {
        if xe <= order {
            out.coeff_mut(xe).add_term(te, c);
        }
    }
    out
}

/// `1 / (1 - c · t^te · x)`.
pub(crate) fn geometric(order: usize, c: impl Into<BigInt>, te: i64) -> XSeries {
    (XSeries::one(order) - XSeries::term(order, c, te, 1))
        .invert()
        .expect("constant term is 1")
}

/// `1 + c · t^te · x`.
pub(crate) fn one_plus(order: usize, c: impl Into<BigInt>, te: i64) -> XSeries {
    XSeries::one(order) + XSeries::term(order, c, te, 1)
}

pub(crate) fn inv(a: &XSeries) -> XSeries {
    a.invert().expect("denominator has unit constant term")
}
