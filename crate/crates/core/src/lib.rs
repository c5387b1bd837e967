//! Exact enumeration and generating functions for the rectangle capacity of
//! words.
//!
//! The rectangle capacity of a word `w_1 ⋯ w_n` counts the placements of an
//! `r × s` block of cells (`r` rows tall, `s` columns wide) inside the word's
//! bargraph, where column `i` has height `w_i`. This crate provides:
//!
//! * [`wordspace`]: lexicographic enumeration and cardinalities of
//!   nondecreasing and Smirnov words and their restricted subfamilies;
//! * [`capacity`]: the statistic itself and a brute-force oracle for its
//!   distribution and total over a family;
//! * [`fps`]: Laurent polynomials in `t` and truncated power series in `x`
//!   with arbitrary-precision integer coefficients;
//! * [`genfun`]: every distribution and total generating function as an
//!   exact [`fps::XSeries`], plus closed-form totals.
//!
//! The oracle and the generating functions share no code beyond the
//! polynomial container, so agreement between them is meaningful.

pub mod binomial;
pub mod capacity;
pub mod error;
pub mod fps;
pub mod genfun;
pub mod wordspace;

pub use capacity::{oracle_distribution, oracle_total, rect_capacity, Budget, DistPoly, RectSpec};
pub use error::{Error, Result};
pub use fps::{LaurentPoly, XSeries};
pub use wordspace::{cardinality, enumerate, Family, FamilySpec, Restriction, Word};
