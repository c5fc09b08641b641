//! Deterministic CSV and JSON emitters for flat record tables.
//!
//! Numbers are written in scientific notation with 17 significant digits, so
//! every `f64` survives a round trip bit for bit.

use std::io::{self, Write};
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Field {
    Text(String),
    Num(f64),
    Empty,
}

impl From<&str> for Field {
    fn from(s: &str) -> Self {
        Field::Text(s.to_string())
    }
}

impl From<String> for Field {
    fn from(s: String) -> Self {
        Field::Text(s)
    }
}

impl From<f64> for Field {
    fn from(x: f64) -> Self {
        Field::Num(x)
    }
}

/// 17 significant digits, `.` decimal point, independent of locale.
pub fn number(x: f64) -> String {
    format!("{x:.16e}")
}

pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Field>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Field>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for row in &self.rows {
            w.write_record(row.iter().map(|f| match f {
                Field::Text(s) => s.clone(),
                Field::Num(x) => number(*x),
                Field::Empty => String::new(),
            }))?;
        }
        w.flush()
    }

    fn write_json(&self, out: &mut impl Write) -> io::Result<()> {
        let records: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let fields = self.columns.iter().zip(row).map(|(c, f)| {
                    let v = match f {
                        Field::Text(s) => serde_json::Value::String(s.clone()),
                        // Keeps the 17-digit text verbatim instead of re-shortening it.
                        Field::Num(x) if x.is_finite() => serde_json::Value::Number(number(*x).parse().expect("finite number")),
                        Field::Num(_) | Field::Empty => serde_json::Value::Null,
                    };
                    (c.to_string(), v)
                });
                serde_json::Value::Object(fields.collect())
            })
            .collect();
        serde_json::to_writer_pretty(&mut *out, &records)?;
        writeln!(out)
    }
}
