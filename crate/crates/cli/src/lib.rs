//! Library half of the `porc` binary: per-prime reports, single-prime
//! verification and output formatting.

mod report;
mod verify;

use std::io::Write;

use porc_core::diophantine::{ClassWitnesses, DensityScan};
use serde::Serialize;

pub use report::{prime_report, sweep, PrimeReport, BRUTE_MAX_CAP};
pub use verify::{verify_prime, Check};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug)]
pub enum OutputError {
    Io(std::io::Error),
    Csv(csv::Error),
    Json(serde_json::Error),
}

impl std::fmt::Display for OutputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OutputError::Io(e) => write!(f, "{e}"),
            OutputError::Csv(e) => write!(f, "{e}"),
            OutputError::Json(e) => write!(f, "{e}"),
        }
    }
}

impl From<std::io::Error> for OutputError {
    fn from(e: std::io::Error) -> Self {
        OutputError::Io(e)
    }
}
impl From<csv::Error> for OutputError {
    fn from(e: csv::Error) -> Self {
        OutputError::Csv(e)
    }
}
impl From<serde_json::Error> for OutputError {
    fn from(e: serde_json::Error) -> Self {
        OutputError::Json(e)
    }
}

pub const CSV_HEADER: &str = "p,class12,a,b,a_mod3,quartic360_root,octic_root,v_p,ec_naive,ec_formula,s_size,group_order,dp_formula,dp_burnside,dp_brute,elapsed_ms";

/// Writes records as CSV (header included, even when empty) or as a JSON
/// array.
pub fn write_records<T: Serialize>(
    rows: &[T],
    header: &[&str],
    format: Format,
    out: &mut dyn Write,
) -> Result<(), OutputError> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
        Format::Csv | Format::Text => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut *out);
            w.write_record(header)?;
            for r in rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

/// Column names of a sweep, without `elapsed_ms` when timing is off.
pub fn sweep_header(timing: bool) -> Vec<&'static str> {
    let mut h: Vec<&str> = CSV_HEADER.split(',').collect();
    if !timing {
        h.pop();
    }
    h
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensitySummary {
    pub max: u64,
    pub n_1mod12: u64,
    pub n_quartic: u64,
    pub n_both: u64,
    /// Exact, as `n/d`.
    pub frac_quartic: String,
    pub frac_both: String,
    pub frac_quartic_approx: f64,
    pub frac_both_approx: f64,
}

pub const DENSITY_HEADER: [&str; 8] =
    ["max", "n_1mod12", "n_quartic", "n_both", "frac_quartic", "frac_both", "frac_quartic_approx", "frac_both_approx"];

impl From<&DensityScan> for DensitySummary {
    fn from(s: &DensityScan) -> Self {
        let approx = |n: u64| n as f64 / s.n_1mod12.max(1) as f64;
        DensitySummary {
            max: s.max,
            n_1mod12: s.n_1mod12,
            n_quartic: s.n_quartic,
            n_both: s.n_both,
            frac_quartic: s.frac_quartic().to_string(),
            frac_both: s.frac_both().to_string(),
            frac_quartic_approx: approx(s.n_quartic),
            frac_both_approx: approx(s.n_both),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRow {
    pub d: u64,
    pub modulus: u64,
    pub c: u64,
    pub witness_vp_positive: Option<u64>,
    pub witness_vp_zero: Option<u64>,
}

pub const CLASS_HEADER: [&str; 5] = ["d", "modulus", "c", "witness_vp_positive", "witness_vp_zero"];

impl ClassRow {
    pub fn new(d: u64, w: &ClassWitnesses) -> Self {
        ClassRow {
            d,
            modulus: w.modulus,
            c: w.c,
            witness_vp_positive: w.witness_vp_positive,
            witness_vp_zero: w.witness_vp_zero,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_blanks_and_header() {
        let rows = vec![prime_report(7, 0, false).unwrap()];
        let mut buf = Vec::new();
        write_records(&rows, &sweep_header(false), Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.trim_end_matches(",elapsed_ms"));
        assert_eq!(lines.next().unwrap(), "7,7,,,,0,0,0,7,,2,12,34,34,-1");
    }

    #[test]
    fn json_nulls() {
        let rows = vec![prime_report(7, 7, false).unwrap()];
        let mut buf = Vec::new();
        write_records(&rows, &sweep_header(false), Format::Json, &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v[0]["ec_formula"], serde_json::Value::Null);
        assert_eq!(v[0]["dp_brute"], 34);
        assert!(v[0].get("elapsed_ms").is_none());
    }
}
