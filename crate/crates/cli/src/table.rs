use std::fmt::Write as _;

use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    /// Six significant digits, shared by every file format.
    fn real_text(x: f64) -> String {
        format!("{x:.5e}")
    }

    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => Self::real_text(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => json!(v),
            Cell::Real(v) if v.is_finite() => {
                json!(Self::real_text(*v).parse::<f64>().expect("formatted float parses"))
            }
            Cell::Real(_) | Cell::Empty => Value::Null,
            Cell::Text(s) => json!(s),
            Cell::Bool(b) => json!(b),
        }
    }

    fn paper(&self) -> String {
        match self {
            Cell::Real(v) => paper_number(*v),
            other => other.csv(),
        }
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v.into())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Empty, Cell::Real)
    }
}

/// Charges print as integers when they are integers.
pub fn charge_cell(z: f64) -> Cell {
    if z.fract() == 0.0 && z.abs() < 1e9 {
        Cell::Int(z as i64)
    } else {
        Cell::Real(z)
    }
}

/// 4.797e-2 → "4.80(-2)"
pub fn paper_number(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mut exp = x.abs().log10().floor() as i32;
    let mut mant = x / 10f64.powi(exp);
    if (mant.abs() * 100.0).round() >= 1000.0 {
        exp += 1;
        mant /= 10.0;
    }
    if exp == 0 {
        format!("{mant:.2}")
    } else {
        format!("{mant:.2}({exp})")
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    columns: Vec<(String, String)>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    /// `columns` pairs each name with its unit ("1" for dimensionless).
    pub fn new(name: impl Into<String>, columns: &[(&str, &str)]) -> Self {
        Self {
            name: name.into(),
            columns: columns
                .iter()
                .map(|(c, u)| (c.to_string(), u.to_string()))
                .collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width in table {}", self.name);
        self.rows.push(row);
    }

    fn units_line(&self) -> String {
        let parts: Vec<String> = self
            .columns
            .iter()
            .map(|(c, u)| format!("{c}={u}"))
            .collect();
        format!("# units: {}", parts.join(", "))
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.units_line();
        out.push('\n');
        let header: Vec<&str> = self.columns.iter().map(|(c, _)| c.as_str()).collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let units: serde_json::Map<String, Value> = self
            .columns
            .iter()
            .map(|(c, u)| (c.clone(), json!(u)))
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
            .collect();
        let doc = json!({
            "table": self.name,
            "units": units,
            "columns": self.columns.iter().map(|(c, _)| c.as_str()).collect::<Vec<_>>(),
            "rows": rows,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("table serializes");
        text.push('\n');
        text
    }

    /// Aligned text with paper-style exponents, for reading next to the
    /// published tables.
    pub fn to_paper(&self) -> String {
        let body: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::paper).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, (c, _))| {
                body.iter()
                    .map(|r| r[i].chars().count())
                    .chain([c.chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = format!("== {} ==\n", self.name);
        let line = |cells: Vec<&str>| -> String {
            let mut s = String::new();
            for (cell, w) in cells.iter().zip(&widths) {
                let _ = write!(s, "{cell:>w$}  ", w = *w);
            }
            s.trim_end().to_string()
        };
        out.push_str(&line(self.columns.iter().map(|(c, _)| c.as_str()).collect()));
        out.push('\n');
        for r in &body {
            out.push_str(&line(r.iter().map(String::as_str).collect()));
            out.push('\n');
        }
        out
    }
}
