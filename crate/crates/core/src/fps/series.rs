use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LaurentPoly;
use crate::error::{Error, Result};

/// Power series `Σ_{n ≤ N} c_n x^n + O(x^{N+1})` with [`LaurentPoly`]
/// coefficients.
///
/// The coefficient vector always has exactly `N + 1` entries. Binary
/// operations require equal orders; the `checked_*` methods report a
/// mismatch as [`Error::OrderMismatch`], while the operator impls panic on it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XSeries {
    coeffs: Vec<LaurentPoly>,
}

impl XSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![LaurentPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, LaurentPoly::one())
    }

    pub fn constant(order: usize, c: LaurentPoly) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c · t^t_exp · x^x_exp`, or zero if `x_exp > order`.
    pub fn term(order: usize, c: impl Into<BigInt>, t_exp: i64, x_exp: usize) -> Self {
        let mut s = Self::zero(order);
        if x_exp <= order {
            s.coeffs[x_exp] = LaurentPoly::monomial(c, t_exp);
        }
        s
    }

    /// Takes ownership of `coeffs`; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series has at least one coefficient");
        Self { coeffs }
    }

    /// `Σ values[n] x^n` with integer (t-free) coefficients.
    pub fn from_integers<I, C>(order: usize, values: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (n, v) in values.into_iter().take(order + 1).enumerate() {
            s.coeffs[n] = LaurentPoly::constant(v);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff_mut(&mut self, n: usize) -> &mut LaurentPoly {
        &mut self.coeffs[n]
    }

    pub fn into_coeffs(self) -> Vec<LaurentPoly> {
        self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Self { coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Self { coeffs })
    }

    /// Cauchy product truncated at the common order.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse modulo `x^{N+1}`.
    ///
    /// The constant term must be a unit `±t^j`. With `u = c_0^{-1}`,
    /// `b_0 = u` and `b_n = -u Σ_{j=1}^{n} c_j b_{n-j}`.
    pub fn invert(&self) -> Result<Self> {
        let u = self.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::NonInvertible(self.coeffs[0].to_string()))?;
        let neg_u = -&u;
        let order = self.order();
        let mut out = Self::zero(order);
        out.coeffs[0] = u;
        for n in 1..=order {
            let mut acc = LaurentPoly::zero();
            for j in 1..=n {
                let (a, b) = (&self.coeffs[j], &out.coeffs[n - j]);
                if !a.is_zero() && !b.is_zero() {
                    acc += &(a * b);
                }
            }
            out.coeffs[n] = &neg_u * &acc;
        }
        Ok(out)
    }

    /// Substitutes `x ↦ t^m x`: `c_n` becomes `t^{m n} c_n`.
    pub fn scale_x(&self, m: i64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.shift(m * n as i64))
            .collect();
        Self { coeffs }
    }

    /// Multiplies every coefficient by `t^shift`.
    pub fn shift_t(&self, shift: i64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c.shift(shift)).collect(),
        }
    }

    /// Multiplies by `x^d`, dropping what falls past the order.
    pub fn shift_x(&self, d: usize) -> Self {
        let order = self.order();
        let mut out = Self::zero(order);
        for n in d..=order {
            out.coeffs[n] = self.coeffs[n - d].clone();
        }
        out
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        Self {
            coeffs: self.coeffs.iter().map(|p| p.scale(&c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficientwise `∂/∂t` evaluated at `t = 1`.
    pub fn dt_at_1(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| LaurentPoly::constant(c.dt_at_one()))
                .collect(),
        }
    }

    /// Coefficientwise substitution `t = 1`.
    pub fn eval_t1(&self) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| LaurentPoly::constant(c.eval_at_one()))
                .collect(),
        }
    }

    /// The integer coefficients, if no coefficient involves `t`.
    pub fn t_free_values(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_constant().then(|| c.coeff(0)))
            .collect()
    }

    /// Indices `n` whose coefficient has a negative `t`-exponent or a
    /// negative integer coefficient.
    pub fn negative_positions(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.has_negative_exponent() || c.has_negative_coefficient())
            .map(|(n, _)| n)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Debug for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XSeries[{self}]")
    }
}

impl fmt::Display for XSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr for &XSeries {
            type Output = XSeries;
            fn $m(self, rhs: &XSeries) -> XSeries {
                self.$checked(rhs).expect("series orders must match")
            }
        }
        impl $tr for XSeries {
            type Output = XSeries;
            fn $m(self, rhs: XSeries) -> XSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&XSeries> for XSeries {
            type Output = XSeries;
            fn $m(self, rhs: &XSeries) -> XSeries {
                (&self).$m(rhs)
            }
        }
        impl $tr<XSeries> for &XSeries {
            type Output = XSeries;
            fn $m(self, rhs: XSeries) -> XSeries {
                self.$m(&rhs)
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &XSeries {
    type Output = XSeries;
    fn neg(self) -> XSeries {
        XSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for XSeries {
    type Output = XSeries;
    fn neg(self) -> XSeries {
        -&self
    }
}

impl Serialize for XSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for XSeries {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let coeffs = Vec::<LaurentPoly>::deserialize(deserializer)?;
        if coeffs.is_empty() {
            return Err(D::Error::custom("series needs at least one coefficient"));
        }
        Ok(Self { coeffs })
    }
}
