//! CSV and JSON writers for result tables.

use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::reconstruct::Evaluation;
use crate::{Result, ResumError, C64, VERSION};

/// Columns of every point-valued result.
pub const RESULT_COLUMNS: [&str; 5] = ["re_z", "im_z", "re_f", "im_f", "abs_err"];

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Flag(bool),
}

/// A table with named columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

/// Output format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// What produced a table, recorded in JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct Metadata {
    pub command: String,
    pub model: String,
    pub tol: f64,
    pub version: &'static str,
}

impl Metadata {
    pub fn new(command: &str, model: &str, tol: f64) -> Self {
        Metadata {
            command: command.to_string(),
            model: model.to_string(),
            tol,
            version: VERSION,
        }
    }
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    /// An empty table with the standard result columns.
    pub fn results() -> Self {
        Table::new(&RESULT_COLUMNS)
    }

    /// Append a standard result row.
    pub fn push_result(&mut self, z: C64, f: C64, abs_err: f64) {
        self.rows
            .push([z.re, z.im, f.re, f.im, abs_err].into_iter().map(Cell::Num).collect());
    }

    pub fn push_evaluation(&mut self, z: C64, e: &Evaluation) {
        self.push_result(z, e.value, e.abs_error_estimate);
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(csv_cell).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, meta: &Metadata) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(name, cell)| (name.clone(), json_cell(cell)))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let doc = json!({ "metadata": meta, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("tables serialise");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format, meta: &Metadata) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(meta),
        }
    }
}

/// Shortest round-trip text of `x`, switching to exponent form for very large or small magnitudes.
pub fn format_f64(x: f64) -> String {
    let m = x.abs();
    if x == 0.0 || !x.is_finite() || (1e-5..1e16).contains(&m) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

fn csv_cell(c: &Cell) -> String {
    match c {
        Cell::Num(x) => format_f64(*x),
        Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
        Cell::Text(s) => s.clone(),
        Cell::Flag(b) => b.to_string(),
    }
}

fn json_cell(c: &Cell) -> Value {
    match c {
        Cell::Num(x) if x.is_finite() => json!(x),
        Cell::Num(x) => json!(x.to_string()),
        Cell::Text(s) => json!(s),
        Cell::Flag(b) => json!(b),
    }
}

/// Write `table` to `path`, or to stdout when `path` is `None`. Empty tables are refused.
pub fn emit(table: &Table, format: Format, meta: &Metadata, path: Option<&Path>) -> Result<()> {
    if table.is_empty() {
        return Err(ResumError::Validation("no results to write".into()));
    }
    let text = table.render(format, meta);
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| ResumError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
            Ok(())
        }
    }
}
