//! Compares every generating function, total and closed display against the
//! brute-force oracle over a grid of `(family, k, r, s, n)` cells.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use rectcap_core::genfun::{
    closed_total, gf_a, gf_b, gf_bgeq, gf_c, gf_d, gf_dgeq, gf_total, uncorrected, GfKind, SpecialFormula,
};
use rectcap_core::{
    cardinality, oracle_distribution, Budget, DistPoly, Error, Family, FamilySpec, LaurentPoly, RectSpec,
    Restriction, XSeries,
};
use serde_json::{json, Value};

use crate::discrepancy::{self, CellKey, KNOWN};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_n: usize,
    pub max_k: u32,
    pub max_r: u32,
    pub max_s: u32,
}

/// Adds 1 to the `t^0` part of `[x^n]` of every series of one kind, as a
/// negative control for the harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mutation {
    pub kind: GfKind,
    pub n: usize,
}

impl FromStr for Mutation {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (kind, n) = s.split_once(':').ok_or_else(|| format!("expected KIND:N, got `{s}`"))?;
        let kind = kind.parse::<GfKind>().map_err(|e| e.to_string())?;
        let n = n.parse::<usize>().map_err(|e| format!("bad coefficient index `{n}`: {e}"))?;
        Ok(Mutation { kind, n })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Match,
    Mismatch,
    SkippedRegime,
    BudgetExceeded,
}

impl Verdict {
    pub const ALL: [Verdict; 4] = [Verdict::Match, Verdict::Mismatch, Verdict::SkippedRegime, Verdict::BudgetExceeded];
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::SkippedRegime => "skipped-regime",
            Verdict::BudgetExceeded => "budget-exceeded",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellResult {
    pub cell: CellKey,
    pub verdict: Verdict,
    pub detail: Option<String>,
}

/// A stated formula disagreeing with the oracle at a known cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flag {
    pub id: &'static str,
    pub cell: CellKey,
    pub stated: String,
    pub oracle: String,
}

#[derive(Clone, Debug)]
pub struct CrosscheckReport {
    pub bounds: Bounds,
    pub budget: Budget,
    pub cells: Vec<CellResult>,
    pub flags: Vec<Flag>,
}

impl CrosscheckReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.cells.iter().filter(|c| c.verdict == verdict).count()
    }

    pub fn has_mismatch(&self) -> bool {
        self.count(Verdict::Mismatch) > 0
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_mismatch())
    }

    pub fn to_text(&self) -> String {
        let b = self.bounds;
        let mut out = format!(
            "crosscheck n<={} k<={} r<={} s<={} budget={}\n",
            b.max_n, b.max_k, b.max_r, b.max_s, self.budget.0
        );
        for c in &self.cells {
            out.push_str(&format!("{} {}", c.cell, c.verdict));
            if let Some(d) = &c.detail {
                out.push_str(&format!(" ({d})"));
            }
            out.push('\n');
        }
        for f in &self.flags {
            let note = discrepancy::lookup(f.id).map_or("", |d| d.note);
            out.push_str(&format!(
                "flag {} {} stated={} oracle={} : {note}\n",
                f.id, f.cell, f.stated, f.oracle
            ));
        }
        out.push_str(&format!(
            "summary cells={} match={} mismatch={} skipped-regime={} budget-exceeded={} flagged={}\n",
            self.cells.len(),
            self.count(Verdict::Match),
            self.count(Verdict::Mismatch),
            self.count(Verdict::SkippedRegime),
            self.count(Verdict::BudgetExceeded),
            self.flags.len()
        ));
        out
    }

    pub fn to_json(&self) -> Value {
        let b = self.bounds;
        let cell_json = |c: &CellKey| {
            json!({"family": c.family.to_string(), "k": c.k, "r": c.r, "s": c.s, "n": c.n})
        };
        let cells: Vec<Value> = self
            .cells
            .iter()
            .map(|c| {
                let mut v = cell_json(&c.cell);
                v["verdict"] = json!(c.verdict.to_string());
                v["detail"] = json!(c.detail);
                v
            })
            .collect();
        let flags: Vec<Value> = self
            .flags
            .iter()
            .map(|f| {
                let mut v = json!({"id": f.id});
                v["cell"] = cell_json(&f.cell);
                v["stated"] = json!(f.stated);
                v["oracle"] = json!(f.oracle);
                v["note"] = json!(discrepancy::lookup(f.id).map(|d| d.note));
                v
            })
            .collect();
        let mut summary = json!({"cells": self.cells.len()});
        for v in Verdict::ALL {
            summary[v.to_string()] = json!(self.count(v));
        }
        summary["flagged"] = json!(self.flags.len());
        json!({
            "bounds": {"max_n": b.max_n, "max_k": b.max_k, "max_r": b.max_r, "max_s": b.max_s},
            "budget": self.budget.0,
            "summary": summary,
            "cells": cells,
            "flags": flags,
        })
    }

    /// One row per cell: `family,k,r,s,n,verdict,flag`.
    pub fn csv_rows(&self) -> Vec<[String; 7]> {
        self.cells
            .iter()
            .map(|c| {
                let flag = self.flags.iter().find(|f| f.cell == c.cell).map_or("", |f| f.id);
                let k = c.cell;
                [
                    k.family.to_string(),
                    k.k.to_string(),
                    k.r.to_string(),
                    k.s.to_string(),
                    k.n.to_string(),
                    c.verdict.to_string(),
                    flag.to_string(),
                ]
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug)]
struct Group {
    family: Family,
    k: u32,
    r: u32,
    s: u32,
}

impl Group {
    fn cell(&self, n: usize) -> CellKey {
        CellKey { family: self.family, k: self.k, r: self.r, s: self.s, n }
    }

    fn rect(&self) -> RectSpec {
        RectSpec::new(self.r, self.s).expect("grid starts at 1")
    }
}

/// Series built once per group and then read cell by cell.
struct Built {
    /// `None` where no rectangle fits and the distribution is the word count.
    main: Option<(GfKind, XSeries)>,
    /// Restricted-alphabet variant and the family it counts.
    aux: Option<(GfKind, XSeries, FamilySpec)>,
    total: XSeries,
    stated_d: Option<XSeries>,
}

fn mutate(kind: GfKind, series: XSeries, mutation: Option<Mutation>) -> XSeries {
    match mutation {
        Some(m) if m.kind == kind && m.n <= series.order() => {
            let mut series = series;
            series.coeff_mut(m.n).add_term(0, BigInt::from(1));
            series
        }
        _ => series,
    }
}

fn build(g: Group, order: usize, mutation: Option<Mutation>) -> Result<Built, Error> {
    let Group { family, k, r, s } = g;
    let min_letter = FamilySpec::new(family, Restriction::MinLetter(r.saturating_sub(1).max(1)));
    let (main, aux) = match family {
        Family::Nondecreasing if r == 1 => (Some((GfKind::A, gf_a(k, s, order)?)), None),
        Family::Nondecreasing => {
            let aux = if k + 1 >= r { Some((GfKind::Bgeq, gf_bgeq(k, r, s, order)?, min_letter)) } else { None };
            (Some((GfKind::B, gf_b(k, r, s, order)?)), aux)
        }
        Family::Smirnov if r == 1 => (Some((GfKind::C, gf_c(k, s, order)?)), None),
        Family::Smirnov if k < r => (None, None),
        Family::Smirnov => (
            Some((GfKind::D, gf_d(k, r, s, order)?)),
            Some((GfKind::Dgeq, gf_dgeq(k, r, s, order)?, min_letter)),
        ),
    };
    let total_kind = match family {
        Family::Nondecreasing => GfKind::TotalNondecreasing,
        Family::Smirnov => GfKind::TotalSmirnov,
    };
    let stated_d = if discrepancy::lookup(discrepancy::D_BASE).unwrap().applies(&g.cell(1)) {
        Some(uncorrected::gf_d_as_stated(k, r, s, order)?)
    } else {
        None
    };
    Ok(Built {
        main: main.map(|(kind, gf)| (kind, mutate(kind, gf, mutation))),
        aux: aux.map(|(kind, gf, spec)| (kind, mutate(kind, gf, mutation), spec)),
        total: mutate(total_kind, gf_total(family, k, r, s, order)?, mutation),
        stated_d,
    })
}

fn oracle(spec: FamilySpec, cell: &CellKey, rect: RectSpec, budget: Budget) -> Result<DistPoly, Error> {
    oracle_distribution(spec, cell.n, cell.k, rect, budget)
}

fn constant(v: impl Into<BigInt>) -> LaurentPoly {
    LaurentPoly::constant(v.into())
}

struct CellOutcome {
    result: CellResult,
    flag: Option<Flag>,
}

fn outcome(cell: CellKey, verdict: Verdict, detail: Option<String>) -> CellOutcome {
    CellOutcome { result: CellResult { cell, verdict, detail }, flag: None }
}

fn check_cell(g: Group, built: &Built, n: usize, budget: Budget) -> CellOutcome {
    let cell = g.cell(n);
    let rect = g.rect();
    let spec = FamilySpec::new(g.family, Restriction::None);
    let dist = match oracle(spec, &cell, rect, budget) {
        Ok(d) => d,
        Err(Error::BudgetExceeded { .. }) => return outcome(cell, Verdict::BudgetExceeded, None),
        Err(e) => return outcome(cell, Verdict::Mismatch, Some(format!("oracle failed: {e}"))),
    };
    let count = BigInt::from(cardinality(spec, n, g.k).expect("validated by the oracle"));
    let total = BigInt::from(dist.total());
    let mut failures: Vec<String> = Vec::new();
    let mut flag = None;

    match &built.main {
        Some((kind, gf)) => {
            let coeff = gf.coeff(n);
            if coeff != &dist.poly {
                failures.push(format!("{kind}: {coeff} != oracle {}", dist.poly));
            }
            if coeff.has_negative_exponent() || coeff.has_negative_coefficient() {
                failures.push(format!("{kind}: negative term in {coeff}"));
            }
            if gf.eval_t1().coeff(n) != &constant(count.clone()) {
                failures.push(format!("{kind}: value at t=1 != word count {count}"));
            }
            let dt = gf.dt_at_1().coeff(n).eval_at_one();
            if dt != total {
                failures.push(format!("{kind}: derivative at t=1 {dt} != oracle total {total}"));
            }
        }
        None => {
            if dist.poly != constant(count.clone()) {
                failures.push(format!("fallback: oracle {} != word count {count}", dist.poly));
            }
        }
    }

    if let Some((kind, gf, aux_spec)) = &built.aux {
        match oracle(*aux_spec, &cell, rect, budget) {
            Ok(aux) => {
                let coeff = gf.coeff(n);
                if coeff != &aux.poly {
                    failures.push(format!("{kind}: {coeff} != oracle {}", aux.poly));
                }
                if coeff.has_negative_exponent() || coeff.has_negative_coefficient() {
                    failures.push(format!("{kind}: negative term in {coeff}"));
                }
                let aux_count = BigInt::from(cardinality(*aux_spec, n, g.k).expect("validated by the oracle"));
                if gf.eval_t1().coeff(n) != &constant(aux_count.clone()) {
                    failures.push(format!("{kind}: value at t=1 != word count {aux_count}"));
                }
            }
            Err(Error::BudgetExceeded { .. }) => return outcome(cell, Verdict::BudgetExceeded, None),
            Err(e) => failures.push(format!("{kind} oracle failed: {e}")),
        }
    }

    let series_total = built.total.coeff(n).eval_at_one();
    if built.total.coeff(n) != &constant(series_total.clone()) || series_total != total {
        failures.push(format!("total series: {} != oracle total {total}", built.total.coeff(n)));
    }
    match closed_total(g.family, n, g.k, g.r, g.s) {
        Ok(v) if v == total => {}
        Ok(v) => failures.push(format!("closed total {v} != oracle total {total}")),
        Err(e) => failures.push(format!("closed total failed: {e}")),
    }

    for sf in SpecialFormula::all() {
        if sf.family() != g.family || !sf.in_regime(n, g.k, g.r, g.s) {
            continue;
        }
        match sf.eval(n, g.k, g.r, g.s) {
            Ok(v) if v == total => {}
            Ok(v) => match KNOWN.iter().find(|d| d.applies(&cell)) {
                Some(d) => {
                    flag = Some(Flag { id: d.id, cell, stated: v.to_string(), oracle: total.to_string() });
                }
                None => failures.push(format!("display {sf}: {v} != oracle total {total}")),
            },
            Err(e) => failures.push(format!("display {sf} failed: {e}")),
        }
    }

    if let Some(stated) = &built.stated_d {
        if stated.coeff(n) != &dist.poly {
            flag = Some(Flag {
                id: discrepancy::D_BASE,
                cell,
                stated: stated.coeff(n).to_string(),
                oracle: dist.poly.to_string(),
            });
        }
    }
    if discrepancy::lookup(discrepancy::SMIRNOV_S1_ZERO_TERM).unwrap().applies(&cell) {
        let stated = uncorrected::smirnov_closed_total_as_stated(n, g.k, g.r, g.s).expect("k ≥ 2");
        if stated != total {
            flag = Some(Flag {
                id: discrepancy::SMIRNOV_S1_ZERO_TERM,
                cell,
                stated: stated.to_string(),
                oracle: total.to_string(),
            });
        }
    }

    let (verdict, detail) = if failures.is_empty() {
        (Verdict::Match, None)
    } else {
        (Verdict::Mismatch, Some(failures.join("; ")))
    };
    CellOutcome { result: CellResult { cell, verdict, detail }, flag }
}

/// Smirnov cells with `r ≥ 2`, `s = 1`: no formula applies; report the
/// stated total next to the oracle.
fn tall_unit_width(g: Group, n: usize, budget: Budget) -> CellOutcome {
    let cell = g.cell(n);
    let stated = uncorrected::smirnov_closed_total_as_stated(n, g.k, g.r, g.s).expect("k ≥ 2");
    let oracle_total = match oracle(FamilySpec::new(g.family, Restriction::None), &cell, g.rect(), budget) {
        Ok(d) => d.total().to_string(),
        Err(_) => "budget-exceeded".to_string(),
    };
    let note = "oracle only".to_string();
    CellOutcome {
        result: CellResult { cell, verdict: Verdict::SkippedRegime, detail: Some(note) },
        flag: Some(Flag { id: discrepancy::SMIRNOV_TALL_S1, cell, stated: stated.to_string(), oracle: oracle_total }),
    }
}

fn run_group(g: Group, max_n: usize, budget: Budget, mutation: Option<Mutation>) -> Vec<CellOutcome> {
    let cells = 0..=max_n;
    if g.family == Family::Smirnov && g.k < 2 {
        let why = "Smirnov generating functions need k >= 2".to_string();
        return cells.map(|n| outcome(g.cell(n), Verdict::SkippedRegime, Some(why.clone()))).collect();
    }
    if g.family == Family::Smirnov && g.r >= 2 && g.s == 1 {
        return cells.map(|n| tall_unit_width(g, n, budget)).collect();
    }
    match build(g, max_n, mutation) {
        Ok(built) => cells.map(|n| check_cell(g, &built, n, budget)).collect(),
        Err(e) => {
            let why = format!("construction failed: {e}");
            cells.map(|n| outcome(g.cell(n), Verdict::Mismatch, Some(why.clone()))).collect()
        }
    }
}

/// Runs every cell of the grid. Groups are evaluated in parallel and
/// reassembled in grid order, so the report is deterministic.
pub fn run_crosscheck(bounds: Bounds, budget: Budget, mutation: Option<Mutation>) -> CrosscheckReport {
    let mut groups = Vec::new();
    for family in [Family::Nondecreasing, Family::Smirnov] {
        for k in 1..=bounds.max_k {
            for r in 1..=bounds.max_r {
                for s in 1..=bounds.max_s {
                    groups.push(Group { family, k, r, s });
                }
            }
        }
    }
    let outcomes: Vec<Vec<CellOutcome>> =
        groups.par_iter().map(|&g| run_group(g, bounds.max_n, budget, mutation)).collect();
    let mut cells = Vec::new();
    let mut flags = Vec::new();
    for o in outcomes.into_iter().flatten() {
        cells.push(o.result);
        flags.extend(o.flag);
    }
    CrosscheckReport { bounds, budget, cells, flags }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bounds(max_n: usize, max_k: u32, max_r: u32, max_s: u32) -> Bounds {
        Bounds { max_n, max_k, max_r, max_s }
    }

    #[test]
    fn small_grid_matches() {
        let report = run_crosscheck(bounds(6, 3, 2, 2), Budget::default(), None);
        assert_eq!(report.cells.len(), 2 * 3 * 2 * 2 * 7);
        assert!(!report.has_mismatch(), "{}", report.to_text());
        assert_eq!(report.exit_code(), 0);
    }

    #[test]
    fn mutation_is_caught() {
        let m = "A:3".parse::<Mutation>().unwrap();
        let report = run_crosscheck(bounds(4, 2, 1, 2), Budget::default(), Some(m));
        assert!(report.has_mismatch());
        assert_eq!(report.exit_code(), 1);
    }

    #[test]
    fn tall_unit_width_cells_are_skipped_and_flagged() {
        let report = run_crosscheck(bounds(3, 3, 2, 1), Budget::default(), None);
        let tall: Vec<_> = report
            .cells
            .iter()
            .filter(|c| c.cell.family == Family::Smirnov && c.cell.r == 2 && c.cell.k >= 2)
            .collect();
        assert!(!tall.is_empty());
        for c in tall {
            assert_eq!(c.verdict, Verdict::SkippedRegime);
            assert!(report.flags.iter().any(|f| f.cell == c.cell && f.id == discrepancy::SMIRNOV_TALL_S1));
        }
    }

    #[test]
    fn budget_overrun_is_reported() {
        let report = run_crosscheck(bounds(5, 3, 1, 1), Budget(10), None);
        assert!(report.count(Verdict::BudgetExceeded) > 0);
        assert!(!report.has_mismatch());
    }

    #[test]
    fn mutation_syntax() {
        assert!("A3".parse::<Mutation>().is_err());
        assert!("Q:3".parse::<Mutation>().is_err());
        assert_eq!("totalSM:2".parse::<Mutation>().unwrap(), Mutation { kind: GfKind::TotalSmirnov, n: 2 });
    }
}
