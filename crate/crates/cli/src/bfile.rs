//! b-file export: `index value` lines preceded by `#` comment lines.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rectcap_core::genfun::closed_total;
use rectcap_core::{oracle_total, Budget, Error, Family, FamilySpec, RectSpec};

/// A total-capacity sequence indexed by word length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sequence {
    /// Nondecreasing words, `1 × s` rectangles.
    F { k: u32, s: u32 },
    /// Nondecreasing words, `r × s` rectangles.
    G { k: u32, r: u32, s: u32 },
    /// Smirnov words, `1 × s` rectangles.
    H { k: u32, s: u32 },
    /// Smirnov words, `r × s` rectangles.
    I { k: u32, r: u32, s: u32 },
}

impl Sequence {
    pub fn family(&self) -> Family {
        match self {
            Sequence::F { .. } | Sequence::G { .. } => Family::Nondecreasing,
            Sequence::H { .. } | Sequence::I { .. } => Family::Smirnov,
        }
    }

    pub fn params(&self) -> (u32, u32, u32) {
        match *self {
            Sequence::F { k, s } | Sequence::H { k, s } => (k, 1, s),
            Sequence::G { k, r, s } | Sequence::I { k, r, s } => (k, r, s),
        }
    }

    /// First emitted index: the first length where the OEIS entries start
    /// with a nonnegative term.
    pub fn default_offset(&self) -> usize {
        let (_, _, s) = self.params();
        match self.family() {
            Family::Nondecreasing => (s as usize).saturating_sub(1).max(1),
            Family::Smirnov => s as usize,
        }
    }
}

impl fmt::Display for Sequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Sequence::F { k, s } => write!(f, "f:k={k},s={s}"),
            Sequence::G { k, r, s } => write!(f, "g:k={k},r={r},s={s}"),
            Sequence::H { k, s } => write!(f, "h:k={k},s={s}"),
            Sequence::I { k, r, s } => write!(f, "i:k={k},r={r},s={s}"),
        }
    }
}

const SHIFT_NOTE: &str = "the closed display (3n^2-3n)/2 lists this sequence one index late";

/// OEIS entries for totals, with any offset that departs from the default.
const OEIS: [(&str, Sequence, Option<usize>, Option<&str>); 23] = [
    ("A045943", Sequence::F { k: 2, s: 1 }, Some(0), Some(SHIFT_NOTE)),
    ("A115067", Sequence::F { k: 2, s: 2 }, None, None),
    ("A140090", Sequence::F { k: 2, s: 3 }, None, None),
    ("A140091", Sequence::F { k: 2, s: 4 }, None, None),
    ("A059845", Sequence::F { k: 2, s: 5 }, None, None),
    ("A140672", Sequence::F { k: 2, s: 6 }, None, None),
    ("A140673", Sequence::F { k: 2, s: 7 }, None, None),
    ("A140674", Sequence::F { k: 2, s: 8 }, None, None),
    ("A140675", Sequence::F { k: 2, s: 9 }, None, None),
    ("A151542", Sequence::F { k: 2, s: 10 }, None, None),
    ("A370238", Sequence::F { k: 2, s: 11 }, None, None),
    ("A077414", Sequence::G { k: 3, r: 2, s: 2 }, None, None),
    ("A105938", Sequence::G { k: 4, r: 2, s: 2 }, None, None),
    ("A027480", Sequence::G { k: 3, r: 2, s: 1 }, None, None),
    ("A033487", Sequence::G { k: 4, r: 2, s: 1 }, None, None),
    ("A266732", Sequence::G { k: 5, r: 2, s: 1 }, None, None),
    ("A240440", Sequence::G { k: 6, r: 2, s: 1 }, None, None),
    ("A266733", Sequence::G { k: 7, r: 2, s: 1 }, None, None),
    ("A050534", Sequence::G { k: 4, r: 3, s: 1 }, None, None),
    ("A253945", Sequence::G { k: 5, r: 3, s: 1 }, None, None),
    ("A271040", Sequence::G { k: 6, r: 3, s: 1 }, None, None),
    ("A241204", Sequence::H { k: 3, s: 2 }, None, None),
    ("A281200", Sequence::H { k: 3, s: 3 }, None, None),
];

/// A resolved `--seq` argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Selector {
    pub label: String,
    pub sequence: Sequence,
    pub offset: usize,
    pub note: Option<&'static str>,
}

impl Selector {
    pub fn known_ids() -> impl Iterator<Item = &'static str> {
        OEIS.iter().map(|e| e.0)
    }
}

fn parse_generic(s: &str) -> Option<Sequence> {
    let (name, rest) = s.split_once(':')?;
    let (mut k, mut r, mut sw) = (None, None, None);
    for part in rest.split(',') {
        let (key, value) = part.trim().split_once('=')?;
        let value = value.trim().parse::<u32>().ok().filter(|&v| v >= 1)?;
        match key.trim() {
            "k" => k = Some(value),
            "r" => r = Some(value),
            "s" => sw = Some(value),
            _ => return None,
        }
    }
    let (k, s) = (k?, sw?);
    match (name.trim(), r) {
        ("f", None) => Some(Sequence::F { k, s }),
        ("h", None) => Some(Sequence::H { k, s }),
        ("g", Some(r)) => Some(Sequence::G { k, r, s }),
        ("i", Some(r)) => Some(Sequence::I { k, r, s }),
        _ => None,
    }
}

impl FromStr for Selector {
    type Err = String;

    /// An OEIS id from the list above, or `f:k=K,s=S`, `g:k=K,r=R,s=S`,
    /// `h:k=K,s=S`, `i:k=K,r=R,s=S`.
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some((id, sequence, offset, note)) = OEIS.iter().find(|e| e.0.eq_ignore_ascii_case(s)) {
            return Ok(Selector {
                label: id.to_string(),
                sequence: *sequence,
                offset: offset.unwrap_or_else(|| sequence.default_offset()),
                note: *note,
            });
        }
        let sequence = parse_generic(s).ok_or_else(|| {
            format!("unknown sequence `{s}`; use an OEIS id such as A115067 or f:k=2,s=3, g:k=3,r=2,s=1, h:k=3,s=2, i:k=3,r=2,s=2")
        })?;
        Ok(Selector { label: sequence.to_string(), sequence, offset: sequence.default_offset(), note: None })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub label: String,
    pub offset: usize,
    pub header: Vec<String>,
    pub rows: Vec<(usize, BigInt)>,
}

impl BFile {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in &self.header {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
        for (i, v) in &self.rows {
            out.push_str(&format!("{i} {v}\n"));
        }
        out
    }
}

/// Why an export could not be produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExportError {
    Core(Error),
    /// The closed form and exhaustive enumeration disagree.
    OracleMismatch { n: usize, closed: BigInt, oracle: BigInt },
}

impl From<Error> for ExportError {
    fn from(e: Error) -> Self {
        ExportError::Core(e)
    }
}

impl fmt::Display for ExportError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExportError::Core(e) => write!(f, "{e}"),
            ExportError::OracleMismatch { n, closed, oracle } => {
                write!(f, "closed form gives {closed} but enumeration gives {oracle} at n = {n}")
            }
        }
    }
}

/// `count` terms from the selector's offset. Every term is checked against
/// exhaustive enumeration until a length exceeds `budget`.
pub fn export_bfile(selector: &Selector, count: usize, budget: Budget) -> Result<BFile, ExportError> {
    let family = selector.sequence.family();
    let (k, r, s) = selector.sequence.params();
    let rect = RectSpec::new(r, s)?;
    let spec = FamilySpec::new(family, Default::default());
    let mut rows = Vec::with_capacity(count);
    let mut verified_to = None;
    let mut verifying = true;
    for n in selector.offset..selector.offset + count {
        let value = closed_total(family, n, k, r, s)?;
        if verifying {
            match oracle_total(spec, n, k, rect, budget) {
                Ok(o) => {
                    let o = BigInt::from(o);
                    if o != value {
                        return Err(ExportError::OracleMismatch { n, closed: value, oracle: o });
                    }
                    verified_to = Some(n);
                }
                Err(Error::BudgetExceeded { .. }) => verifying = false,
                Err(e) => return Err(e.into()),
            }
        }
        rows.push((n, value));
    }
    let mut header = vec![
        selector.label.clone(),
        format!("total {r}x{s} rectangles over {family} words on [{k}], indexed by word length n"),
        format!("offset {}", selector.offset),
    ];
    if let Some(note) = selector.note {
        header.push(note.to_string());
    }
    header.push(match verified_to {
        Some(last) if count > 0 => {
            format!("checked against exhaustive enumeration for n = {}..{last}", selector.offset)
        }
        _ => "not checked against enumeration (budget too small)".to_string(),
    });
    Ok(BFile { label: selector.label.clone(), offset: selector.offset, header, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(sel: &str, count: usize) -> Vec<String> {
        let sel: Selector = sel.parse().unwrap();
        let b = export_bfile(&sel, count, Budget::default()).unwrap();
        b.to_text().lines().filter(|l| !l.starts_with('#')).map(str::to_string).collect()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(rows("f:k=2,s=2", 4), ["1 0", "2 4", "3 11", "4 21"]);
        assert_eq!(rows("A115067", 4), ["1 0", "2 4", "3 11", "4 21"]);
        assert_eq!(rows("g:k=3,r=2,s=1", 3), ["1 3", "2 12", "3 30"]);
        assert_eq!(rows("h:k=2,s=2", 4), ["2 2", "3 4", "4 6", "5 8"]);
        assert_eq!(rows("A045943", 5), ["0 0", "1 3", "2 9", "3 18", "4 30"]);
    }

    #[test]
    fn header_records_offset_and_check() {
        let sel: Selector = "A045943".parse().unwrap();
        let text = export_bfile(&sel, 5, Budget::default()).unwrap().to_text();
        assert!(text.starts_with("# A045943\n"));
        assert!(text.contains("# offset 0\n"));
        assert!(text.contains("one index late"));
        assert!(text.contains("n = 0..4"));
    }

    #[test]
    fn unknown_selectors() {
        assert!("A000001".parse::<Selector>().is_err());
        assert!("f:k=2".parse::<Selector>().is_err());
        assert!("g:k=2,s=2".parse::<Selector>().is_err());
        assert!("f:k=0,s=2".parse::<Selector>().is_err());
    }

    #[test]
    fn every_listed_id_exports() {
        for id in Selector::known_ids() {
            let sel: Selector = id.parse().unwrap();
            let b = export_bfile(&sel, 6, Budget::default()).unwrap();
            assert_eq!(b.rows.len(), 6);
            assert!(b.rows.iter().all(|(_, v)| v >= &BigInt::default()), "{id}");
        }
    }

    #[test]
    fn unverified_tail_is_recorded() {
        let sel: Selector = "h:k=3,s=2".parse().unwrap();
        let b = export_bfile(&sel, 6, Budget(20)).unwrap();
        assert!(b.header.last().unwrap().contains("n = 2..3"));
        let b = export_bfile(&sel, 3, Budget(1)).unwrap();
        assert!(b.header.last().unwrap().contains("not checked"));
    }
}
