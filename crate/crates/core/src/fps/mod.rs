//! Exact series arithmetic.
//!
//! [`LaurentPoly`] is a sparse Laurent polynomial in the marking variable `t`;
//! [`XSeries`] is a power series in `x` truncated after `x^N`, whose
//! coefficients are Laurent polynomials. Negative `t`-exponents are ordinary
//! values here: several kernels carry factors `t^{-(s-1)}` that only cancel
//! once everything is summed.
//!
//! Both types serialize to JSON with decimal strings so nothing is lost to
//! floating point: a polynomial is `{"<exp>": "<coeff>", ...}` and a series
//! is an array of polynomials indexed by the power of `x`.

mod laurent;
mod series;

pub use laurent::LaurentPoly;
pub use series::XSeries;
