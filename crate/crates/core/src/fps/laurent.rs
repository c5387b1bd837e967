use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Laurent polynomial in `t` with arbitrary-precision integer coefficients.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c · t^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `true` if the polynomial does not involve `t`.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn has_negative_exponent(&self) -> bool {
        self.min_exp().is_some_and(|e| e < 0)
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.terms.values().any(|c| c.is_negative())
    }

    /// Multiplies by `t^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `d/dt` evaluated at `t = 1`, i.e. `Σ e · coeff_e`.
    pub fn dt_at_one(&self) -> BigInt {
        self.terms.iter().map(|(&e, c)| c * e).sum()
    }

    /// Returns `(j, ±1)` when the polynomial is the unit `±t^j`.
    pub fn as_unit(&self) -> Option<(i64, BigInt)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, c) = self.terms.iter().next()?;
        (c.abs().is_one()).then(|| (e, c.clone()))
    }

    /// Inverse of a unit `±t^j`.
    pub fn unit_inverse(&self) -> Option<Self> {
        self.as_unit().map(|(e, c)| Self::monomial(c, -e))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// Human-readable form in increasing powers of `t`, e.g. `3 + t - 2t^-1`
/// is stated as `-2t^-1 + 3 + t`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if e == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, String>::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in raw {
            let e: i64 = e
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent `{e}`")))?;
            let c: BigInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = LaurentPoly::from_terms([(2, 3), (2, -3), (0, 1)]);
        assert_eq!(p, LaurentPoly::one());
        p -= &LaurentPoly::one();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn negative_exponents_cancel() {
        let a = LaurentPoly::monomial(1, 1);
        let b = LaurentPoly::monomial(1, -1);
        assert_eq!(&a * &b, LaurentPoly::one());
    }

    #[test]
    fn derivative_and_eval() {
        let p = LaurentPoly::from_terms([(2, 1), (3, 1), (4, 1)]);
        assert_eq!(p.eval_at_one(), BigInt::from(3));
        assert_eq!(p.dt_at_one(), BigInt::from(9));
        assert_eq!(LaurentPoly::monomial(1, 3).dt_at_one(), BigInt::from(3));
        assert_eq!(LaurentPoly::monomial(2, 2).dt_at_one(), BigInt::from(4));
    }

    #[test]
    fn units() {
        assert_eq!(LaurentPoly::monomial(-1, 4).as_unit(), Some((4, BigInt::from(-1))));
        assert_eq!(LaurentPoly::monomial(2, 0).as_unit(), None);
        assert_eq!(LaurentPoly::from_terms([(0, 1), (1, 1)]).as_unit(), None);
        assert_eq!(
            LaurentPoly::monomial(-1, 4).unit_inverse(),
            Some(LaurentPoly::monomial(-1, -4))
        );
    }

    #[test]
    fn display() {
        let p = LaurentPoly::from_terms([(-1, -2), (0, 3), (1, 1), (5, -1)]);
        assert_eq!(p.to_string(), "-2t^-1 + 3 + t - t^5");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_schema() {
        let p = LaurentPoly::from_terms([(2, 2)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"2":"2"}"#);
        let big: LaurentPoly =
            serde_json::from_str(r#"{"-3":"-123456789012345678901234567890","0":"0"}"#).unwrap();
        assert_eq!(big.len(), 1);
        assert_eq!(big.coeff(-3).to_string(), "-123456789012345678901234567890");
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"x":"1"}"#).is_err());
        assert!(serde_json::from_str::<LaurentPoly>(r#"{"1":1.5}"#).is_err());
    }
}
