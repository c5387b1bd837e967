//! Word families over the alphabet `[k] = {1, …, k}` and their exact
//! enumeration.
//!
//! Two families are supported, each with the restricted subfamilies the
//! generating-function recurrences decompose into:
//!
//! | restriction               | nondecreasing                          | Smirnov                               |
//! |---------------------------|----------------------------------------|---------------------------------------|
//! | `FirstOneAt(0)`           | every letter `> 1`                     | every letter `> 1`                    |
//! | `FirstOneAt(i)`, `i ≥ 1`  | `w_i = 1`, letters after `i` are `> 1` | `w_i = 1`, letters before `i` are `> 1` |
//! | `MinLetter(m)`            | every letter `≥ m`                     | every letter `≥ m`                    |
//! | `MinLetterBarredFirst(m)` | letters `≥ m` and `w_1 ≠ m`            | letters `≥ m` and `w_1 ≠ m`           |
//! | `BarredFirst(m)`          | `w_1 ≠ m`                              | `w_1 ≠ m`                             |
//!
//! Enumeration is lexicographic. The empty word belongs to every family
//! whose conditions are vacuous at `n = 0`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::binomial::binom;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `w_i ≤ w_{i+1}` for all `i`.
    Nondecreasing,
    /// `w_i ≠ w_{i+1}` for all `i`.
    Smirnov,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Nondecreasing => "nondecreasing",
            Family::Smirnov => "smirnov",
        })
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "nondecreasing" | "nd" => Ok(Family::Nondecreasing),
            "smirnov" | "sm" => Ok(Family::Smirnov),
            _ => Err(Error::ParameterDomain(format!("unknown family `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Restriction {
    #[default]
    None,
    FirstOneAt(usize),
    MinLetter(u32),
    MinLetterBarredFirst(u32),
    BarredFirst(u32),
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Restriction::None => f.write_str("none"),
            Restriction::FirstOneAt(i) => write!(f, "first-one-at:{i}"),
            Restriction::MinLetter(m) => write!(f, "geq:{m}"),
            Restriction::MinLetterBarredFirst(m) => write!(f, "geq-barred-first:{m}"),
            Restriction::BarredFirst(m) => write!(f, "barred-first:{m}"),
        }
    }
}

impl FromStr for Restriction {
    type Err = Error;

    /// Parses `none`, `geq:M`, `first-one-at:I`, `barred-first:M` and
    /// `geq-barred-first:M`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "none" {
            return Ok(Restriction::None);
        }
        let bad = || Error::ParameterDomain(format!("unknown restriction `{s}`"));
        let (kind, value) = s.split_once(':').ok_or_else(bad)?;
        let value: u32 = value.parse().map_err(|_| bad())?;
        match kind {
            "geq" => Ok(Restriction::MinLetter(value)),
            "first-one-at" => Ok(Restriction::FirstOneAt(value as usize)),
            "barred-first" => Ok(Restriction::BarredFirst(value)),
            "geq-barred-first" => Ok(Restriction::MinLetterBarredFirst(value)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    pub family: Family,
    pub restriction: Restriction,
}

impl FamilySpec {
    pub const fn new(family: Family, restriction: Restriction) -> Self {
        Self { family, restriction }
    }

    pub const fn nondecreasing() -> Self {
        Self::new(Family::Nondecreasing, Restriction::None)
    }

    pub const fn smirnov() -> Self {
        Self::new(Family::Smirnov, Restriction::None)
    }

    pub const fn with(self, restriction: Restriction) -> Self {
        Self::new(self.family, restriction)
    }

    /// Checks `k ≥ 1` and the restriction parameter against `n` and `k`.
    pub fn validate(&self, n: usize, k: u32) -> Result<()> {
        if k == 0 {
            return Err(Error::ParameterDomain("alphabet size k must be at least 1".into()));
        }
        match self.restriction {
            Restriction::None => Ok(()),
            Restriction::FirstOneAt(i) if i > n => Err(Error::ParameterDomain(format!(
                "first-one-at:{i} needs i ≤ n = {n}"
            ))),
            Restriction::FirstOneAt(_) => Ok(()),
            Restriction::MinLetter(m)
            | Restriction::MinLetterBarredFirst(m)
            | Restriction::BarredFirst(m) => {
                if m == 0 || m > k {
                    Err(Error::ParameterDomain(format!("letter bound m = {m} must lie in 1..={k}")))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Whether `letter` may sit at 0-based `pos` ignoring the adjacency rule.
    fn allows(&self, pos: usize, letter: u32) -> bool {
        match (self.restriction, self.family) {
            (Restriction::None, _) => true,
            (Restriction::FirstOneAt(0), _) => letter > 1,
            (Restriction::FirstOneAt(i), Family::Nondecreasing) => {
                if pos + 1 == i {
                    letter == 1
                } else if pos + 1 > i {
                    letter > 1
                } else {
                    true
                }
            }
            (Restriction::FirstOneAt(i), Family::Smirnov) => {
                if pos + 1 == i {
                    letter == 1
                } else if pos + 1 < i {
                    letter > 1
                } else {
                    true
                }
            }
            (Restriction::MinLetter(m), _) => letter >= m,
            (Restriction::MinLetterBarredFirst(m), _) => letter >= m && (pos > 0 || letter != m),
            (Restriction::BarredFirst(m), _) => pos > 0 || letter != m,
        }
    }

    fn adjacent_ok(&self, prev: u32, next: u32) -> bool {
        match self.family {
            Family::Nondecreasing => prev <= next,
            Family::Smirnov => prev != next,
        }
    }

    /// Membership test for a word over `[k]`.
    pub fn contains(&self, word: &[u32], k: u32) -> bool {
        if self.validate(word.len(), k).is_err() {
            return false;
        }
        word.iter().all(|&w| (1..=k).contains(&w))
            && word.iter().enumerate().all(|(p, &w)| self.allows(p, w))
            && word.windows(2).all(|p| self.adjacent_ok(p[0], p[1]))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.restriction {
            Restriction::None => write!(f, "{}", self.family),
            r => write!(f, "{}[{}]", self.family, r),
        }
    }
}

/// A word over `[k]`; letter `w_i` is the height of bargraph column `i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<u32>);

impl Word {
    /// Validates that every letter lies in `1..=k`.
    pub fn new(letters: Vec<u32>, k: u32) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|&&w| w == 0 || w > k) {
            return Err(Error::ParameterDomain(format!("letter {bad} is outside [1, {k}]")));
        }
        Ok(Self(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        let sep = if self.0.iter().any(|&w| w > 9) { "," } else { "" };
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Comma-separated letters, e.g. `3,4,5,1,3,4`. The empty string is the
    /// empty word. The alphabet bound is checked by [`Word::new`] callers.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word(Vec::new()));
        }
        s.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .ok()
                    .filter(|&w| w >= 1)
                    .ok_or_else(|| Error::ParameterDomain(format!("bad letter `{p}`")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

/// Lexicographic iterator over the words of one family.
///
/// Yields each word as a borrowed slice through [`Words::next_word`] to avoid
/// allocating per word; the [`Iterator`] impl clones into a [`Word`].
#[derive(Clone, Debug)]
pub struct Words {
    spec: FamilySpec,
    k: u32,
    buf: Vec<u32>,
    started: bool,
    done: bool,
}

impl Words {
    fn new(spec: FamilySpec, n: usize, k: u32) -> Self {
        Self {
            spec,
            k,
            buf: vec![0; n],
            started: false,
            done: false,
        }
    }

    fn letter_fits(&self, pos: usize, letter: u32) -> bool {
        self.spec.allows(pos, letter) && (pos == 0 || self.spec.adjacent_ok(self.buf[pos - 1], letter))
    }

    /// Fills `buf[pos..]` with the lexicographically smallest valid suffix.
    fn fill_from(&mut self, pos: usize) -> bool {
        if pos == self.buf.len() {
            return true;
        }
        let lo = match (self.spec.family, pos) {
            (Family::Nondecreasing, p) if p > 0 => self.buf[p - 1],
            _ => 1,
        };
        for letter in lo..=self.k {
            if self.letter_fits(pos, letter) {
                self.buf[pos] = letter;
                if self.fill_from(pos + 1) {
                    return true;
                }
            }
        }
        false
    }

    /// Advances to the next word and returns it, or `None` when exhausted.
    pub fn next_word(&mut self) -> Option<&[u32]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.fill_from(0) {
                return Some(&self.buf);
            }
            self.done = true;
            return None;
        }
        let mut pos = self.buf.len();
        while pos > 0 {
            pos -= 1;
            let mut letter = self.buf[pos] + 1;
            while letter <= self.k {
                if self.letter_fits(pos, letter) {
                    self.buf[pos] = letter;
                    if self.fill_from(pos + 1) {
                        return Some(&self.buf);
                    }
                }
                letter += 1;
            }
        }
        self.done = true;
        None
    }
}

impl Iterator for Words {
    type Item = Word;
    fn next(&mut self) -> Option<Word> {
        self.next_word().map(|w| Word(w.to_vec()))
    }
}

/// All words of `spec` with length `n` over `[k]`, in lexicographic order.
pub fn enumerate(spec: FamilySpec, n: usize, k: u32) -> Result<Words> {
    spec.validate(n, k)?;
    Ok(Words::new(spec, n, k))
}

/// Number of words in the family, from a closed form where one is known and
/// by enumeration otherwise.
pub fn cardinality(spec: FamilySpec, n: usize, k: u32) -> Result<BigUint> {
    spec.validate(n, k)?;
    if let Some(c) = closed_cardinality(spec, n, k) {
        return Ok(c);
    }
    let mut words = enumerate(spec, n, k)?;
    let mut count = 0u64;
    while words.next_word().is_some() {
        count += 1;
    }
    Ok(BigUint::from(count))
}

pub(crate) fn closed_cardinality(spec: FamilySpec, n: usize, k: u32) -> Option<BigUint> {
    let n_i = n as i64;
    let k_i = i64::from(k);
    // (a)(b)^{n-1} with the n = 0 case equal to 1
    let lead_then_power = |a: i64, b: i64| -> BigInt {
        if n == 0 {
            BigInt::from(1)
        } else {
            BigInt::from(a) * num_traits::pow(BigInt::from(b), n - 1)
        }
    };
    let value = match (spec.family, spec.restriction) {
        (Family::Nondecreasing, Restriction::None) => binom(n_i + k_i - 1, k_i - 1),
        (Family::Nondecreasing, Restriction::MinLetter(m)) => {
            let size = k_i - i64::from(m) + 1;
            binom(n_i + size - 1, size - 1)
        }
        (Family::Smirnov, Restriction::None) => lead_then_power(k_i, k_i - 1),
        (Family::Smirnov, Restriction::FirstOneAt(1)) => {
            num_traits::pow(BigInt::from(k_i - 1), n - 1)
        }
        (Family::Smirnov, Restriction::MinLetter(m)) => {
            let m = i64::from(m);
            lead_then_power(k_i - m + 1, k_i - m)
        }
        (Family::Smirnov, Restriction::MinLetterBarredFirst(m)) => {
            num_traits::pow(BigInt::from(k_i - i64::from(m)), n)
        }
        _ => return None,
    };
    value.to_biguint()
}

/// Small helper for callers that need a machine-size count.
pub fn cardinality_u64(spec: FamilySpec, n: usize, k: u32) -> Result<Option<u64>> {
    Ok(cardinality(spec, n, k)?.to_u64())
}
