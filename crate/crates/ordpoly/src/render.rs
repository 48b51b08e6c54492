//! Tables and their text, CSV and JSON renderings.

use std::io::{self, Write};

use ordpoly_core::VertexSet;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug)]
pub enum Cell {
    Int(i64),
    /// Shown as `{4,5,7}`.
    Set(VertexSet),
    /// Shown as a presence grid over `0..=n`.
    Grid(VertexSet, u32),
    Ints(Vec<i64>),
    Text(String),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(x) => x.to_string(),
            Cell::Set(s) => braces(s),
            Cell::Grid(s, n) => grid(s, *n),
            Cell::Ints(v) => tuple(v),
            Cell::Text(t) => t.clone(),
        }
    }

    fn csv(&self) -> String {
        match self {
            Cell::Set(s) | Cell::Grid(s, _) => spaced(s.iter()),
            Cell::Ints(v) => spaced(v.iter()),
            _ => self.text(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(x) => json!(x),
            Cell::Set(s) | Cell::Grid(s, _) => json!(s.as_slice()),
            Cell::Ints(v) => json!(v),
            Cell::Text(t) => json!(t),
        }
    }
}

/// One block of output: a titled table plus trailing notes.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub title: String,
    pub params: Option<(u32, u32, u32)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub notes: Vec<(String, Cell)>,
    /// Extra top-level JSON members.
    pub extra: Vec<(&'static str, Value)>,
}

impl Table {
    pub fn new(title: impl Into<String>, columns: Vec<&'static str>) -> Self {
        Table { title: title.into(), columns, ..Table::default() }
    }

    pub fn note(&mut self, key: impl Into<String>, value: Cell) {
        self.notes.push((key.into(), value));
    }

    pub fn write_text(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", self.title)?;
        if !self.columns.is_empty() {
            let cells: Vec<Vec<String>> = std::iter::once(self.columns.iter().map(|c| c.to_string()).collect())
                .chain(self.rows.iter().map(|r| r.iter().map(Cell::text).collect()))
                .collect();
            let mut widths = vec![0; self.columns.len()];
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            for row in &cells {
                let mut line = String::new();
                for (i, (c, w)) in row.iter().zip(&widths).enumerate() {
                    if i > 0 {
                        line.push_str("  ");
                    }
                    line.push_str(c);
                    line.extend(std::iter::repeat(' ').take(w - c.chars().count()));
                }
                writeln!(out, "{}", line.trim_end())?;
            }
        }
        for (k, v) in &self.notes {
            writeln!(out, "{k}: {}", v.text())?;
        }
        Ok(())
    }

    pub fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(out);
        if !self.columns.is_empty() {
            w.write_record(&self.columns)?;
            for row in &self.rows {
                w.write_record(row.iter().map(Cell::csv))?;
            }
        }
        for (k, v) in &self.notes {
            w.write_record([format!("# {k}"), v.csv()])?;
        }
        w.flush()
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("title".into(), json!(self.title));
        if let Some((d, k, n)) = self.params {
            obj.insert("params".into(), json!({ "d": d, "k": k, "n": n }));
        }
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let m: Map<String, Value> =
                    self.columns.iter().zip(r).map(|(c, v)| (c.to_string(), v.json())).collect();
                Value::Object(m)
            })
            .collect();
        obj.insert("rows".into(), Value::Array(rows));
        let notes: Map<String, Value> = self.notes.iter().map(|(k, v)| (k.clone(), v.json())).collect();
        obj.insert("notes".into(), Value::Object(notes));
        for (k, v) in &self.extra {
            obj.insert(k.to_string(), v.clone());
        }
        Value::Object(obj)
    }
}

/// Writes the tables in `format`. Several tables become a JSON array; in
/// text and CSV they are separated by a blank line.
pub fn write_tables(tables: &[Table], format: Format, out: &mut dyn Write) -> io::Result<()> {
    match format {
        Format::Json => {
            let v = if tables.len() == 1 {
                tables[0].to_json()
            } else {
                Value::Array(tables.iter().map(Table::to_json).collect())
            };
            serde_json::to_writer_pretty(&mut *out, &v)?;
            writeln!(out)
        }
        Format::Text | Format::Csv => {
            for (i, t) in tables.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                if format == Format::Text {
                    t.write_text(out)?;
                } else {
                    t.write_csv(out)?;
                }
            }
            Ok(())
        }
    }
}

/// Vertex `v` at column `v`, shown by its last digit. `∅` for the empty set.
pub fn grid(s: &VertexSet, n: u32) -> String {
    if s.is_empty() {
        return "∅".into();
    }
    (0..=n.max(s.last().unwrap_or(0)))
        .map(|v| if s.contains(v) { char::from_digit(v % 10, 10).unwrap() } else { ' ' })
        .collect()
}

pub fn braces(s: &VertexSet) -> String {
    if s.is_empty() {
        return "∅".into();
    }
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn tuple(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn spaced<T: ToString>(it: impl Iterator<Item = T>) -> String {
    it.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}
