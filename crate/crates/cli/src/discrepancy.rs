//! Cells where a stated formula is known to disagree with the oracle.
//!
//! The crosscheck harness reports these as flags with both values instead
//! of failing. Anything that disagrees outside this table is a mismatch.

use rectcap_core::Family;

/// One point of the crosscheck grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellKey {
    pub family: Family,
    pub k: u32,
    pub r: u32,
    pub s: u32,
    pub n: usize,
}

impl std::fmt::Display for CellKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} k={} r={} s={} n={}", self.family, self.k, self.r, self.s, self.n)
    }
}

pub struct KnownDiscrepancy {
    pub id: &'static str,
    pub note: &'static str,
    applies: fn(&CellKey) -> bool,
}

impl KnownDiscrepancy {
    pub fn applies(&self, cell: &CellKey) -> bool {
        (self.applies)(cell)
    }
}

pub const TABLE1_S1: &str = "table1-s1-shift";
pub const D_BASE: &str = "d-base-count";
pub const SMIRNOV_TALL_S1: &str = "smirnov-tall-s1";
pub const SMIRNOV_S1_ZERO_TERM: &str = "smirnov-s1-zero-term";

pub static KNOWN: [KnownDiscrepancy; 4] = [
    KnownDiscrepancy {
        id: TABLE1_S1,
        note: "row formula (3n²-3n)/2 equals f_2(n-1); the oracle gives (3n²+3n)/2",
        applies: |c| c.family == Family::Nondecreasing && c.k == 2 && c.r == 1 && c.s == 1 && c.n >= 1,
    },
    KnownDiscrepancy {
        id: D_BASE,
        note: "stated base (1+x)/(1-x) for D_r; the word count over [r] is (1+x)/(1-(r-1)x)",
        applies: |c| c.family == Family::Smirnov && c.r >= 3 && c.k == c.r && c.s >= 2 && c.n >= 1,
    },
    KnownDiscrepancy {
        id: SMIRNOV_TALL_S1,
        note: "alternating words over {r-1, r} do hold r×1 rectangles, so the D recursion and its total do not apply; oracle only",
        applies: |c| c.family == Family::Smirnov && c.r >= 2 && c.s == 1 && c.k >= 2,
    },
    KnownDiscrepancy {
        id: SMIRNOV_S1_ZERO_TERM,
        note: "at s = 1 the two-letter closed form undercounts and the total's sum omits its i = 0 term (0^0 = 1)",
        applies: |c| c.family == Family::Smirnov && c.r == 1 && c.s == 1 && c.k >= 2 && c.n >= 1,
    },
];

pub fn lookup(id: &str) -> Option<&'static KnownDiscrepancy> {
    KNOWN.iter().find(|d| d.id == id)
}
