//! Output rows, checks and CSV/JSON rendering.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use schur_ratio::exact::rational::{to_exact_string, to_f64};
use schur_ratio::exact::RatioRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// One named pass/fail line.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        if self.detail.is_empty() {
            format!("{tag} {}", self.name)
        } else {
            format!("{tag} {}: {}", self.name, self.detail)
        }
    }
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

pub fn render_checks(checks: &[Check]) -> String {
    let mut out = String::new();
    for c in checks {
        writeln!(out, "{}", c.line()).unwrap();
    }
    out
}

/// Exact quantities of one degree, as strings, plus float renderings of the probabilities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub d: u32,
    pub ratio: String,
    pub v_total: String,
    pub v0: String,
    pub v1: String,
    pub p0: String,
    pub p1: String,
    pub p0_float: f64,
    pub p1_float: f64,
}

impl From<&RatioRecord> for ReportRow {
    fn from(r: &RatioRecord) -> Self {
        ReportRow {
            d: r.d,
            ratio: r.ratio.to_string(),
            v_total: to_exact_string(&r.v_total),
            v0: to_exact_string(&r.v0),
            v1: to_exact_string(&r.v1),
            p0: to_exact_string(&r.p0),
            p1: to_exact_string(&r.p1),
            p0_float: to_f64(&r.p0),
            p1_float: to_f64(&r.p1),
        }
    }
}

/// Tabular data that renders identically to CSV and JSON.
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    /// Exact value; quoted in JSON.
    Exact(String),
    Float(f64),
    Missing,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Exact(s) => s.clone(),
            // 17 significant digits: always at least 15, and always round-trips.
            Cell::Float(f) => format!("{f:.16e}"),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => json!(i),
            Cell::Exact(s) => json!(s),
            Cell::Float(f) => json!(f),
            Cell::Missing => Value::Null,
        }
    }
}

impl Table {
    pub fn to_csv(&self) -> String {
        let mut out = self.header.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj = self.header.iter().zip(row).map(|(h, c)| (h.to_string(), c.json())).collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

impl From<&[ReportRow]> for Table {
    fn from(rows: &[ReportRow]) -> Self {
        Table {
            header: vec!["d", "ratio", "v_total", "v0", "v1", "p0", "p1", "p0_float", "p1_float"],
            rows: rows
                .iter()
                .map(|r| {
                    vec![
                        Cell::Int(r.d as i64),
                        Cell::Exact(r.ratio.clone()),
                        Cell::Exact(r.v_total.clone()),
                        Cell::Exact(r.v0.clone()),
                        Cell::Exact(r.v1.clone()),
                        Cell::Exact(r.p0.clone()),
                        Cell::Exact(r.p1.clone()),
                        Cell::Float(r.p0_float),
                        Cell::Float(r.p1_float),
                    ]
                })
                .collect(),
        }
    }
}

/// `{config, results, checks}`, pretty-printed with a trailing newline.
pub fn envelope(config: Value, results: Value, checks: &[Check]) -> String {
    let doc = json!({ "config": config, "results": results, "checks": checks });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

pub fn render(table: &Table, format: Format, config: Value, checks: &[Check]) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Json => envelope(config, table.to_json_rows(), checks),
    }
}
