//! Command-line front end for `rectcap`: one-off queries, the crosscheck
//! harness and b-file export.
//!
//! Exit codes: `0` success, `1` a crosscheck or export disagreement, `2`
//! usage error, `3` parameters outside a supported domain or budget.

pub mod bfile;
pub mod crosscheck;
pub mod discrepancy;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rectcap_core::genfun::{GfKind, GfRequest};
use rectcap_core::{
    oracle_distribution, oracle_total, rect_capacity, Budget, Error, Family, FamilySpec, RectSpec, Restriction, Word,
};
use serde_json::json;

use crate::bfile::{export_bfile, ExportError, Selector};
use crate::crosscheck::{run_crosscheck, Bounds, Mutation};

pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "rectcap", version, about = "Exact counts of r×s rectangles in bargraphs of words")]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// nondecreasing | smirnov
    #[arg(long, value_parser = parse_via::<Family>)]
    pub family: Family,
    /// none | geq:M | first-one-at:I | barred-first:M | geq-barred-first:M
    #[arg(long, default_value = "none", value_parser = parse_via::<Restriction>)]
    pub restriction: Restriction,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub r: u32,
    #[arg(long)]
    pub s: u32,
    /// Maximum number of words to enumerate
    #[arg(long, default_value_t = Budget::default().0)]
    pub budget: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rectangles inside the bargraph of one word
    Capacity {
        /// Comma-separated letters, e.g. 3,4,5,1,3,4
        #[arg(long, value_parser = parse_via::<Word>)]
        word: Word,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        s: u32,
    },
    /// Distribution polynomial over a family, by enumeration
    Dist(FamilyArgs),
    /// Total capacity over a family, by enumeration
    Total(FamilyArgs),
    /// Expand a generating function
    Series {
        /// A | Bgeq | B | C | Dgeq | D | totalND | totalSM
        #[arg(long, value_parser = parse_via::<GfKind>)]
        gf: GfKind,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        s: u32,
        /// Truncation order in x
        #[arg(long)]
        order: usize,
    },
    /// Check every formula against enumeration over a grid
    Crosscheck {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_k: u32,
        #[arg(long)]
        max_r: u32,
        #[arg(long)]
        max_s: u32,
        /// Maximum number of words to enumerate per cell
        #[arg(long, default_value_t = Budget::default().0)]
        budget: u64,
        /// Corrupt one coefficient, e.g. A:3 (negative control)
        #[arg(long)]
        mutate: Option<Mutation>,
    },
    /// Export a total-capacity sequence as an OEIS b-file
    Oeis {
        /// OEIS id (e.g. A115067) or f:k=2,s=3 | g:k=3,r=2,s=1 | h:k=3,s=2 | i:k=3,r=2,s=2
        #[arg(long)]
        seq: Selector,
        #[arg(long)]
        count: usize,
        /// Maximum number of words to enumerate per term when checking
        #[arg(long, default_value_t = Budget::default().0)]
        budget: u64,
    },
}

fn parse_via<T: std::str::FromStr<Err = Error>>(s: &str) -> Result<T, String> {
    s.parse::<T>().map_err(|e| e.to_string())
}

/// A failed command and the exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownFormula(_) => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<ExportError> for Failure {
    fn from(e: ExportError) -> Self {
        match e {
            ExportError::Core(e) => e.into(),
            other => Failure { code: EXIT_MISMATCH, message: other.to_string() },
        }
    }
}

fn csv_text<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn json_line(v: serde_json::Value) -> String {
    format!("{v}\n")
}

fn family_spec(a: &FamilyArgs) -> Result<(FamilySpec, RectSpec), Failure> {
    Ok((FamilySpec::new(a.family, a.restriction), RectSpec::new(a.r, a.s)?))
}

/// Executes one parsed command and returns its standard output and status.
pub fn execute(cli: Cli) -> Result<(String, i32), Failure> {
    let format = cli.format;
    let out = match cli.command {
        Command::Capacity { word, r, s } => {
            let c = rect_capacity(&word.0, RectSpec::new(r, s)?);
            match format {
                Format::Text => format!("{c}\n"),
                Format::Json => json_line(json!({ "capacity": c })),
                Format::Csv => csv_text(&["capacity"], [[c.to_string()]]),
            }
        }
        Command::Dist(a) => {
            let (spec, rect) = family_spec(&a)?;
            let d = oracle_distribution(spec, a.n, a.k, rect, Budget(a.budget))?;
            match format {
                Format::Text => format!("{}\n", d.poly),
                Format::Json => json_line(json!({ "poly": d.poly })),
                Format::Csv => csv_text(
                    &["exponent", "coefficient"],
                    d.poly.terms().map(|(e, c)| [e.to_string(), c.to_string()]),
                ),
            }
        }
        Command::Total(a) => {
            let (spec, rect) = family_spec(&a)?;
            let t = oracle_total(spec, a.n, a.k, rect, Budget(a.budget))?;
            match format {
                Format::Text => format!("{t}\n"),
                Format::Json => json_line(json!({ "total": t.to_string() })),
                Format::Csv => csv_text(&["total"], [[t.to_string()]]),
            }
        }
        Command::Series { gf, k, r, s, order } => {
            let series = GfRequest::new(gf, k, r, s, order).build()?;
            match format {
                Format::Text => series
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(n, c)| format!("x^{n}: {c}\n"))
                    .collect(),
                Format::Json => json_line(json!({ "coefficients": series })),
                Format::Csv => csv_text(
                    &["x_exponent", "t_exponent", "coefficient"],
                    series.coeffs().iter().enumerate().flat_map(|(n, c)| {
                        c.terms().map(move |(e, v)| [n.to_string(), e.to_string(), v.to_string()])
                    }),
                ),
            }
        }
        Command::Crosscheck { max_n, max_k, max_r, max_s, budget, mutate } => {
            let report = run_crosscheck(Bounds { max_n, max_k, max_r, max_s }, Budget(budget), mutate);
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => json_line(report.to_json()),
                Format::Csv => csv_text(&["family", "k", "r", "s", "n", "verdict", "flag"], report.csv_rows()),
            };
            return Ok((text, report.exit_code()));
        }
        Command::Oeis { seq, count, budget } => {
            let b = export_bfile(&seq, count, Budget(budget))?;
            match format {
                Format::Text => b.to_text(),
                Format::Json => json_line(json!({
                    "label": b.label,
                    "offset": b.offset,
                    "header": b.header,
                    "rows": b.rows.iter().map(|(i, v)| json!([i, v.to_string()])).collect::<Vec<_>>(),
                })),
                Format::Csv => {
                    csv_text(&["index", "value"], b.rows.iter().map(|(i, v)| [i.to_string(), v.to_string()]))
                }
            }
        }
    };
    Ok((out, 0))
}

/// Parses `args` (including the program name), runs the command, writes
/// to `out` / `err`, and returns the exit status.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
