//! Rendering of command results as CSV, JSON or aligned text.

use std::fmt::Write as _;

use serde_json::{Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Bool(bool),
    Missing,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<Option<f64>> for Cell {
    fn from(v: Option<f64>) -> Self {
        v.map_or(Cell::Missing, Cell::Num)
    }
}

#[derive(Debug, Clone)]
pub struct Column {
    pub name: &'static str,
    pub units: Option<&'static str>,
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[(&'static str, Option<&'static str>)]) -> Self {
        Self {
            columns: columns
                .iter()
                .map(|&(name, units)| Column { name, units })
                .collect(),
            rows: Vec::new(),
        }
    }
}

/// Flat scalar fields plus an optional table.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub fields: Vec<(String, Cell, Option<&'static str>)>,
    pub table: Option<Table>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Self {
            command,
            fields: Vec::new(),
            table: None,
        }
    }

    pub fn field(
        &mut self,
        key: impl Into<String>,
        value: impl Into<Cell>,
        units: Option<&'static str>,
    ) -> &mut Self {
        self.fields.push((key.into(), value.into(), units));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            Format::Json => self.json(),
            Format::Pretty => self.pretty(),
        }
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        if let Some(t) = &self.table {
            let header: Vec<&str> = t.columns.iter().map(|c| c.name).collect();
            out.push_str(&header.join(","));
            out.push('\n');
            for row in &t.rows {
                let cells: Vec<String> = row.iter().map(csv_cell).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        } else {
            let header: Vec<&str> = self.fields.iter().map(|(k, _, _)| k.as_str()).collect();
            out.push_str(&header.join(","));
            out.push('\n');
            let cells: Vec<String> = self.fields.iter().map(|(_, v, _)| csv_cell(v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn json(&self) -> String {
        let mut obj = Map::new();
        obj.insert("schema_version".into(), SCHEMA_VERSION.into());
        obj.insert("command".into(), self.command.into());
        for (k, v, units) in &self.fields {
            obj.insert(k.clone(), json_cell(v));
            if let Some(u) = units {
                obj.insert(format!("{k}_units"), (*u).into());
            }
        }
        if let Some(t) = &self.table {
            let mut units = Map::new();
            for c in &t.columns {
                if let Some(u) = c.units {
                    units.insert(format!("{}_units", c.name), u.into());
                }
            }
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|r| {
                    let mut row = Map::new();
                    for (c, v) in t.columns.iter().zip(r) {
                        row.insert(c.name.into(), json_cell(v));
                    }
                    Value::Object(row)
                })
                .collect();
            obj.insert("row_units".into(), Value::Object(units));
            obj.insert("rows".into(), Value::Array(rows));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(obj))
            .expect("json values always serialize");
        s.push('\n');
        s
    }

    fn pretty(&self) -> String {
        let mut out = String::new();
        let width = self
            .fields
            .iter()
            .map(|(k, _, _)| k.len())
            .max()
            .unwrap_or(0);
        for (k, v, units) in &self.fields {
            let _ = write!(out, "{k:<width$}  {}", pretty_cell(v));
            if let Some(u) = units {
                let _ = write!(out, " {u}");
            }
            out.push('\n');
        }
        if let Some(t) = &self.table {
            if !self.fields.is_empty() {
                out.push('\n');
            }
            let cells: Vec<Vec<String>> = t
                .rows
                .iter()
                .map(|r| r.iter().map(pretty_cell).collect())
                .collect();
            let widths: Vec<usize> = t
                .columns
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    cells
                        .iter()
                        .map(|r| r[i].len())
                        .max()
                        .unwrap_or(0)
                        .max(c.name.len())
                })
                .collect();
            let line = |items: Vec<String>| -> String {
                let padded: Vec<String> = items
                    .iter()
                    .zip(&widths)
                    .map(|(s, w)| format!("{s:>w$}"))
                    .collect();
                padded.join("  ").trim_end().to_owned() + "\n"
            };
            out.push_str(&line(t.columns.iter().map(|c| c.name.to_owned()).collect()));
            for r in cells {
                out.push_str(&line(r));
            }
        }
        out
    }
}

/// 17 significant digits, fixed exponent form.
pub fn csv_number(v: f64) -> String {
    if v == 0.0 {
        // avoid a signed zero leaking into golden files
        "0.0000000000000000e0".to_owned()
    } else {
        format!("{v:.16e}")
    }
}

fn csv_cell(c: &Cell) -> String {
    match c {
        Cell::Num(v) => csv_number(*v),
        Cell::Text(s) => s.clone(),
        Cell::Bool(b) => b.to_string(),
        Cell::Missing => String::new(),
    }
}

fn json_cell(c: &Cell) -> Value {
    match c {
        Cell::Num(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
        Cell::Text(s) => Value::String(s.clone()),
        Cell::Bool(b) => Value::Bool(*b),
        Cell::Missing => Value::Null,
    }
}

fn pretty_cell(c: &Cell) -> String {
    match c {
        Cell::Num(v) => format!("{v:.6e}"),
        Cell::Text(s) => s.clone(),
        Cell::Bool(b) => b.to_string(),
        Cell::Missing => "-".to_owned(),
    }
}
