//! Report values and the three output formats.

use std::fmt::Write as _;

use heunforge::poly::{Backend, ExactComplex, Poly, C64};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Int(i64),
    Real(f64),
    Complex(C64),
    Exact(ExactComplex),
    Poly(Vec<C64>),
    ExactPoly(Vec<ExactComplex>),
    List(Vec<Cell>),
}

impl Cell {
    pub fn poly(p: &Poly<C64>) -> Self {
        Cell::Poly(p.coeffs().to_vec())
    }

    pub fn exact_poly(p: &Poly<ExactComplex>) -> Self {
        Cell::ExactPoly(p.coeffs().to_vec())
    }

    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn json(&self) -> Value {
        match self {
            Cell::Text(s) => json!(s),
            Cell::Int(v) => json!(v),
            Cell::Real(v) => real_json(*v),
            Cell::Complex(z) => complex_json(*z),
            Cell::Exact(z) => exact_json(z),
            Cell::Poly(c) => Value::Array(c.iter().map(|z| complex_json(*z)).collect()),
            Cell::ExactPoly(c) => Value::Array(c.iter().map(exact_json).collect()),
            Cell::List(v) => Value::Array(v.iter().map(Cell::json).collect()),
        }
    }

    /// Plain text, as used in csv cells and table columns.
    pub fn display(&self) -> String {
        self.plain()
    }

    fn plain(&self) -> String {
        match self {
            Cell::Text(s) => s.clone(),
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => real_text(*v),
            Cell::Complex(z) => complex_text(*z),
            Cell::Exact(z) => heunforge::poly::Scalar::render(z),
            Cell::Poly(c) => Poly::new(c.clone()).to_string(),
            Cell::ExactPoly(c) => Poly::new(c.clone()).to_string(),
            Cell::List(v) => v.iter().map(Cell::plain).collect::<Vec<_>>().join("; "),
        }
    }
}

fn real_json(v: f64) -> Value {
    // JSON has no NaN or infinity
    if v.is_finite() {
        json!(v)
    } else {
        json!(v.to_string())
    }
}

fn complex_json(z: C64) -> Value {
    json!({ "re": real_json(z.re), "im": real_json(z.im) })
}

/// Integers that fit in an `i64` stay numbers, larger ones become strings.
fn rational_json(num: String, den: String) -> Value {
    let int = |s: String| s.parse::<i64>().map_or(json!(s), |v| json!(v));
    json!({ "num": int(num), "den": int(den) })
}

fn exact_json(z: &ExactComplex) -> Value {
    json!({
        "re": rational_json(z.re.numer().to_string(), z.re.denom().to_string()),
        "im": rational_json(z.im.numer().to_string(), z.im.denom().to_string()),
    })
}

fn real_text(v: f64) -> String {
    if v == 0.0 || (1e-4..1e6).contains(&v.abs()) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

fn complex_text(z: C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else {
        format!("{}{:+}i", z.re, z.im)
    }
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tol: f64,
}

impl Check {
    pub fn pass(&self) -> bool {
        self.value <= self.tol
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub backend: Backend,
    pub fields: Vec<(String, Cell)>,
    pub rows: Vec<Vec<(String, Cell)>>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &str, backend: Backend) -> Self {
        Self {
            command: command.into(),
            backend,
            fields: Vec::new(),
            rows: Vec::new(),
            checks: Vec::new(),
        }
    }

    pub fn field(&mut self, name: &str, cell: Cell) {
        self.fields.push((name.into(), cell));
    }

    pub fn check(&mut self, name: impl Into<String>, value: f64, tol: f64) {
        self.checks.push(Check {
            name: name.into(),
            value,
            tol,
        });
    }

    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::pass)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass()).collect()
    }

    pub fn render(&self, format: Format) -> anyhow::Result<String> {
        match format {
            Format::Json => Ok(serde_json::to_string_pretty(&self.to_json())? + "\n"),
            Format::Csv => self.csv(),
            Format::Table => Ok(self.table()),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema".into(), json!(1));
        m.insert("command".into(), json!(self.command));
        m.insert("backend".into(), json!(self.backend.name()));
        for (k, v) in &self.fields {
            m.insert(k.clone(), v.json());
        }
        let rows = self
            .rows
            .iter()
            .map(|r| Value::Object(r.iter().map(|(k, v)| (k.clone(), v.json())).collect()))
            .collect();
        m.insert("rows".into(), Value::Array(rows));
        let checks = self
            .checks
            .iter()
            .map(|c| json!({ "name": c.name, "value": real_json(c.value), "tol": c.tol, "pass": c.pass() }))
            .collect();
        m.insert("checks".into(), Value::Array(checks));
        m.insert("ok".into(), json!(self.ok()));
        Value::Object(m)
    }

    /// One record per row, the scalar fields repeated on each; a report
    /// without rows becomes a single record.
    fn csv(&self) -> anyhow::Result<String> {
        let mut header: Vec<String> = self.fields.iter().map(|(k, _)| k.clone()).collect();
        for row in &self.rows {
            for (k, _) in row {
                if !header.contains(k) {
                    header.push(k.clone());
                }
            }
        }
        header.push("ok".into());
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&header)?;
        let empty = Vec::new();
        let rows: Vec<&Vec<(String, Cell)>> = if self.rows.is_empty() {
            vec![&empty]
        } else {
            self.rows.iter().collect()
        };
        for row in rows {
            let record: Vec<String> = header
                .iter()
                .map(|h| {
                    if h == "ok" {
                        return self.ok().to_string();
                    }
                    row.iter()
                        .chain(self.fields.iter())
                        .find(|(k, _)| k == h)
                        .map_or_else(String::new, |(_, v)| v.plain())
                })
                .collect();
            w.write_record(&record)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} ({})", self.command, self.backend.name());
        for (k, v) in &self.fields {
            let _ = writeln!(out, "  {k}: {}", v.plain());
        }
        if let Some(first) = self.rows.first() {
            let header: Vec<&str> = first.iter().map(|(k, _)| k.as_str()).collect();
            let body: Vec<Vec<String>> = self
                .rows
                .iter()
                .map(|r| r.iter().map(|(_, v)| v.plain()).collect())
                .collect();
            let widths: Vec<usize> = (0..header.len())
                .map(|i| {
                    body.iter()
                        .filter_map(|r| r.get(i))
                        .map(|s| s.chars().count())
                        .chain([header[i].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            };
            let _ = writeln!(out);
            let _ = writeln!(out, "{}", line(header.clone()));
            for r in &body {
                let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
            }
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out);
            for c in &self.checks {
                let mark = if c.pass() { "ok  " } else { "FAIL" };
                let _ = writeln!(out, "{mark} {} = {:.3e} (tol {:.1e})", c.name, c.value, c.tol);
            }
        }
        out
    }
}
