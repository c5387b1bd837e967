//! The rectangle-capacity statistic and the brute-force oracle.
//!
//! A window of `s` consecutive columns whose lowest column has height `h`
//! holds `max(0, h - r + 1)` placements of an `r × s` rectangle (one per
//! vertical offset), so the capacity is the sum of that quantity over all
//! `n - s + 1` windows. For the word `345134` and a `3 × 2` rectangle the
//! windows `34, 45, 51, 13, 34` contribute `1 + 2 + 0 + 0 + 1 = 4`.
//!
//! The oracle walks every word of a family and tallies capacities. It is
//! deliberately naive and shares nothing with [`crate::genfun`].

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::fps::LaurentPoly;
use crate::wordspace::{closed_cardinality, enumerate, FamilySpec, Words};

/// An `r × s` rectangle: `r` rows tall, `s` columns wide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RectSpec {
    r: u32,
    s: u32,
}

impl RectSpec {
    pub fn new(r: u32, s: u32) -> Result<Self> {
        if r == 0 || s == 0 {
            return Err(Error::ParameterDomain(format!(
                "rectangle {r}×{s}: both sides must be at least 1"
            )));
        }
        Ok(Self { r, s })
    }

    pub fn rows(&self) -> u32 {
        self.r
    }

    pub fn cols(&self) -> u32 {
        self.s
    }
}

impl fmt::Display for RectSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}×{}", self.r, self.s)
    }
}

/// Maximum number of words the oracle may visit for one call.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Budget(pub u64);

impl Budget {
    pub const UNLIMITED: Budget = Budget(u64::MAX);
}

impl Default for Budget {
    fn default() -> Self {
        Budget(1_000_000)
    }
}

/// Number of `r × s` rectangles inside the bargraph of `word`.
///
/// Uses a monotone deque for the sliding-window minimum, so the cost is
/// linear in the word length.
pub fn rect_capacity(word: &[u32], rect: RectSpec) -> u64 {
    let s = rect.s as usize;
    if word.len() < s {
        return 0;
    }
    let mut window: VecDeque<usize> = VecDeque::with_capacity(s);
    let mut total = 0u64;
    for (i, &h) in word.iter().enumerate() {
        while window.back().is_some_and(|&j| word[j] >= h) {
            window.pop_back();
        }
        window.push_back(i);
        if window[0] + s <= i {
            window.pop_front();
        }
        if i + 1 >= s {
            let min = word[window[0]];
            total += u64::from((min + 1).saturating_sub(rect.r));
        }
    }
    total
}

/// Distribution polynomial `Σ_w t^{capacity(w)}` over one family cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistPoly {
    pub poly: LaurentPoly,
    pub family: FamilySpec,
    pub n: usize,
    pub k: u32,
    pub rect: RectSpec,
}

impl DistPoly {
    /// Number of words in the family (the polynomial at `t = 1`).
    pub fn word_count(&self) -> BigUint {
        self.poly
            .eval_at_one()
            .to_biguint()
            .expect("distribution counts are nonnegative")
    }

    /// Sum of capacities over the family (`d/dt` at `t = 1`).
    pub fn total(&self) -> BigUint {
        self.poly
            .dt_at_one()
            .to_biguint()
            .expect("distribution exponents are nonnegative")
    }
}

/// Starts an enumeration, refusing up front when the family size is known
/// to exceed the budget.
fn start(spec: FamilySpec, n: usize, k: u32, budget: Budget) -> Result<Words> {
    let words = enumerate(spec, n, k)?;
    if closed_cardinality(spec, n, k).is_some_and(|c| c > budget.0.into()) {
        return Err(Error::BudgetExceeded { budget: budget.0 });
    }
    Ok(words)
}

fn tally(spec: FamilySpec, n: usize, k: u32, rect: RectSpec, budget: Budget) -> Result<BTreeMap<u64, u64>> {
    let mut words = start(spec, n, k, budget)?;
    let mut hist = BTreeMap::new();
    let mut seen = 0u64;
    while let Some(w) = words.next_word() {
        seen += 1;
        if seen > budget.0 {
            return Err(Error::BudgetExceeded { budget: budget.0 });
        }
        *hist.entry(rect_capacity(w, rect)).or_insert(0u64) += 1;
    }
    Ok(hist)
}

/// Enumerates the family and returns the exact distribution of capacities.
pub fn oracle_distribution(
    spec: FamilySpec,
    n: usize,
    k: u32,
    rect: RectSpec,
    budget: Budget,
) -> Result<DistPoly> {
    let hist = tally(spec, n, k, rect, budget)?;
    let poly = LaurentPoly::from_terms(hist.into_iter().map(|(cap, count)| (cap as i64, count)));
    Ok(DistPoly { poly, family: spec, n, k, rect })
}

/// Sum of capacities over the family, accumulated word by word.
pub fn oracle_total(spec: FamilySpec, n: usize, k: u32, rect: RectSpec, budget: Budget) -> Result<BigUint> {
    let mut words = start(spec, n, k, budget)?;
    let mut total = BigUint::default();
    let mut seen = 0u64;
    while let Some(w) = words.next_word() {
        seen += 1;
        if seen > budget.0 {
            return Err(Error::BudgetExceeded { budget: budget.0 });
        }
        total += rect_capacity(w, rect);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wordspace::Restriction;

    fn rect(r: u32, s: u32) -> RectSpec {
        RectSpec::new(r, s).unwrap()
    }

    #[test]
    fn bargraph_anchor() {
        let w = [3, 4, 5, 1, 3, 4];
        assert_eq!(rect_capacity(&w, rect(3, 2)), 4);
        assert_eq!(rect_capacity(&w, rect(1, 1)), 20);
        assert_eq!(rect_capacity(&[1, 2], rect(2, 3)), 0);
        assert_eq!(rect_capacity(&[], rect(1, 1)), 0);
    }

    #[test]
    fn all_ones_word() {
        for n in 1..=12usize {
            for s in 1..=n as u32 {
                assert_eq!(rect_capacity(&vec![1; n], rect(1, s)), (n as u64) - u64::from(s) + 1);
                assert_eq!(rect_capacity(&vec![1; n], rect(2, s)), 0);
            }
        }
    }

    #[test]
    fn rejects_degenerate_rectangles() {
        assert!(RectSpec::new(0, 1).is_err());
        assert!(RectSpec::new(1, 0).is_err());
    }

    #[test]
    fn distribution_examples() {
        let nd = FamilySpec::nondecreasing();
        let sm = FamilySpec::smirnov();
        let d = oracle_distribution(nd, 2, 2, rect(1, 1), Budget::default()).unwrap();
        assert_eq!(d.poly, LaurentPoly::from_terms([(2, 1), (3, 1), (4, 1)]));
        let d = oracle_distribution(sm, 3, 2, rect(1, 2), Budget::default()).unwrap();
        assert_eq!(d.poly, LaurentPoly::monomial(2, 2));
        let d = oracle_distribution(nd, 1, 3, rect(5, 1), Budget::default()).unwrap();
        assert_eq!(d.poly, LaurentPoly::constant(3));
    }

    #[test]
    fn total_examples() {
        let nd = FamilySpec::nondecreasing();
        let sm = FamilySpec::smirnov();
        let b = Budget::default();
        assert_eq!(oracle_total(nd, 3, 2, rect(1, 2), b).unwrap(), 11u32.into());
        assert_eq!(oracle_total(sm, 2, 3, rect(2, 2), b).unwrap(), 2u32.into());
        assert_eq!(oracle_total(nd, 2, 5, rect(1, 3), b).unwrap(), 0u32.into());
        assert_eq!(oracle_total(sm, 0, 3, rect(1, 1), b).unwrap(), 0u32.into());
    }

    #[test]
    fn budget_guard() {
        let nd = FamilySpec::nondecreasing();
        let err = oracle_distribution(nd, 3, 3, rect(1, 1), Budget(5)).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { budget: 5 });
        assert!(oracle_total(nd, 3, 3, rect(1, 1), Budget(10)).is_ok());
    }

    #[test]
    fn restricted_oracle() {
        let spec = FamilySpec::smirnov().with(Restriction::MinLetter(1));
        let d = oracle_distribution(spec, 3, 2, rect(2, 2), Budget::default()).unwrap();
        assert_eq!(d.poly, LaurentPoly::constant(2));
        assert_eq!(d.word_count(), 2u32.into());
    }
}
