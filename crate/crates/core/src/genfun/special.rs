//! Closed displays for particular `(k, r, s)`, kept verbatim so they can be
//! compared against [`super::closed_total`] and the oracle.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;

use crate::binomial::{binom, ipow};
use crate::error::{Error, Result};
use crate::wordspace::Family;

/// Tabulated `f_2` rows, verbatim: `(3n² - lin·n + constant) / 2` for `s = 1..=11`.
const TABLE1: [(i64, i64); 11] = [
    (3, 0),
    (1, -2),
    (5, -2),
    (9, 0),
    (13, 4),
    (17, 10),
    (21, 18),
    (25, 28),
    (29, 40),
    (33, 54),
    (37, 70),
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpecialFormula {
    /// `f_2(n) = (3n² + (7-4s)n + (s-1)(s-4)) / 2`.
    F2General,
    /// `f_3(n) = (2n³ - 3(s-3)n² + (s²-10s+13)n + 2(s-1)(s-3)) / 2`.
    F3,
    /// Row of the `f_2` table for the given `s` in `1..=11`.
    Table1Row(u32),
    /// `g_2(n) = C(n-s+2, 2)` for `r = k = 2`.
    G2,
    /// `g_k(n) = (n-1)/(n+1) · C(k, 2) C(n-1+k, k)` for `r = s = 2`.
    GRs2,
    /// `g_k(n) = C(k-r+2, 2) C(n-1+k, k)` for `s = 1`.
    GS1,
    /// `h_2(n) = 2(n-s+1)`.
    H2,
    /// `h_3(n) = 2^{n-s} (n-s+1)(2 + 3·2^{s-1})`.
    H3,
}

impl SpecialFormula {
    /// Every display, tabulated rows in order of `s`.
    pub fn all() -> Vec<SpecialFormula> {
        let mut out = vec![SpecialFormula::F2General, SpecialFormula::F3];
        out.extend((1..=TABLE1.len() as u32).map(SpecialFormula::Table1Row));
        out.extend([
            SpecialFormula::G2,
            SpecialFormula::GRs2,
            SpecialFormula::GS1,
            SpecialFormula::H2,
            SpecialFormula::H3,
        ]);
        out
    }

    pub fn family(&self) -> Family {
        match self {
            SpecialFormula::H2 | SpecialFormula::H3 => Family::Smirnov,
            _ => Family::Nondecreasing,
        }
    }

    /// Whether the display describes the total for these parameters.
    pub fn applies_to(&self, family: Family, k: u32, r: u32, s: u32) -> bool {
        family == self.family()
            && match *self {
                SpecialFormula::F2General => k == 2 && r == 1,
                SpecialFormula::F3 => k == 3 && r == 1,
                SpecialFormula::Table1Row(row) => k == 2 && r == 1 && s == row,
                SpecialFormula::G2 => k == 2 && r == 2,
                SpecialFormula::GRs2 => r == 2 && s == 2 && k >= 1,
                SpecialFormula::GS1 => s == 1 && r >= 2 && k + 1 >= r,
                SpecialFormula::H2 => k == 2 && r == 1,
                SpecialFormula::H3 => k == 3 && r == 1,
            }
    }

    /// Whether the display is claimed to hold at this point.
    pub fn in_regime(&self, n: usize, k: u32, r: u32, s: u32) -> bool {
        let base = self.applies_to(self.family(), k, r, s) && n >= s as usize;
        match self {
            SpecialFormula::H2 | SpecialFormula::H3 => base && s >= 2,
            _ => base,
        }
    }

    /// Evaluates the display exactly. Fails if it does not apply to
    /// `(k, r, s)` or the division is not exact.
    pub fn eval(&self, n: usize, k: u32, r: u32, s: u32) -> Result<BigInt> {
        if !self.applies_to(self.family(), k, r, s) {
            return Err(Error::ParameterDomain(format!(
                "display {self} does not apply to k = {k}, r = {r}, s = {s}"
            )));
        }
        let (n, k, r, s) = (n as i64, i64::from(k), i64::from(r), i64::from(s));
        let big = BigInt::from;
        let (num, den): (BigInt, BigInt) = match *self {
            SpecialFormula::F2General => (big(3 * n * n + (7 - 4 * s) * n + (s - 1) * (s - 4)), big(2)),
            SpecialFormula::F3 => (
                big(2 * n.pow(3) - 3 * (s - 3) * n * n + (s * s - 10 * s + 13) * n + 2 * (s - 1) * (s - 3)),
                big(2),
            ),
            SpecialFormula::Table1Row(row) => {
                let (lin, c) = TABLE1[row as usize - 1];
                (big(3 * n * n - lin * n + c), big(2))
            }
            SpecialFormula::G2 => (binom(n - s + 2, 2), big(1)),
            SpecialFormula::GRs2 => ((n - 1) * binom(k, 2) * binom(n - 1 + k, k), big(n + 1)),
            SpecialFormula::GS1 => (binom(k - r + 2, 2) * binom(n - 1 + k, k), big(1)),
            SpecialFormula::H2 => (big(2 * (n - s + 1)), big(1)),
            SpecialFormula::H3 => {
                let d = n - s;
                let pow = if d >= 0 { ipow(2, d as u32) } else { big(0) };
                (pow * (d + 1) * (ipow(2, (s - 1) as u32) * 3 + 2), big(1))
            }
        };
        let (q, rem) = num.div_rem(&den);
        if rem != BigInt::default() {
            return Err(Error::ParameterDomain(format!("display {self} is not integral at n = {n}")));
        }
        Ok(q)
    }
}

impl fmt::Display for SpecialFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecialFormula::F2General => f.write_str("f2-general"),
            SpecialFormula::F3 => f.write_str("f3"),
            SpecialFormula::Table1Row(s) => write!(f, "table1-s{s}"),
            SpecialFormula::G2 => f.write_str("g2"),
            SpecialFormula::GRs2 => f.write_str("g-r2s2"),
            SpecialFormula::GS1 => f.write_str("g-s1"),
            SpecialFormula::H2 => f.write_str("h2"),
            SpecialFormula::H3 => f.write_str("h3"),
        }
    }
}

impl FromStr for SpecialFormula {
    type Err = Error;
    fn from_str(id: &str) -> Result<Self> {
        SpecialFormula::all()
            .into_iter()
            .find(|f| f.to_string() == id)
            .ok_or_else(|| Error::UnknownFormula(id.to_string()))
    }
}

/// Looks up a display by id and evaluates it.
pub fn special_formula(id: &str, n: usize, k: u32, r: u32, s: u32) -> Result<BigInt> {
    id.parse::<SpecialFormula>()?.eval(n, k, r, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instantiated_displays() {
        assert_eq!(special_formula("f2-general", 3, 2, 1, 2).unwrap(), BigInt::from(11));
        assert_eq!(special_formula("g-s1", 1, 2, 2, 1).unwrap(), BigInt::from(1));
        assert_eq!(special_formula("table1-s1", 2, 2, 1, 1).unwrap(), BigInt::from(3));
        assert_eq!(special_formula("f2-general", 2, 2, 1, 1).unwrap(), BigInt::from(9));
        assert_eq!(special_formula("g-r2s2", 2, 3, 2, 2).unwrap(), BigInt::from(4));
        assert_eq!(special_formula("h3", 2, 3, 1, 2).unwrap(), BigInt::from(8));
    }

    #[test]
    fn table_rows_follow_the_general_display_from_s2() {
        for s in 2..=11u32 {
            for n in 0..30usize {
                assert_eq!(
                    SpecialFormula::Table1Row(s).eval(n, 2, 1, s).unwrap(),
                    SpecialFormula::F2General.eval(n, 2, 1, s).unwrap()
                );
            }
        }
    }

    #[test]
    fn ids_round_trip() {
        for f in SpecialFormula::all() {
            assert_eq!(f.to_string().parse::<SpecialFormula>().unwrap(), f);
        }
        assert_eq!(
            special_formula("table1-s12", 3, 2, 1, 12),
            Err(Error::UnknownFormula("table1-s12".into()))
        );
    }

    #[test]
    fn rejects_foreign_parameters() {
        assert!(SpecialFormula::H2.eval(4, 3, 1, 2).is_err());
        assert!(SpecialFormula::Table1Row(3).eval(4, 2, 1, 2).is_err());
        assert!(!SpecialFormula::H3.in_regime(4, 3, 1, 1));
        assert!(SpecialFormula::H3.in_regime(4, 3, 1, 2));
    }
}
