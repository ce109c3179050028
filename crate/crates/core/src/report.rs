//! CSV and JSON rendering of command results, and the signal literal format.
//!
//! Rationals are always written as `num/den` strings (integers without a
//! denominator), never as floats.

use std::str::FromStr;

use num_rational::BigRational;
use serde_json::{json, Map, Value};

use crate::cyclo::{CycNumber, CyclotomicField, RationalScalar};
use crate::error::{Error, Result};
use crate::fourier::Signal;
use crate::groups::GroupSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

/// One report field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cell {
    Int(u128),
    Text(String),
    /// Written space-separated in CSV, as an array in JSON.
    Indices(Vec<usize>),
    Flag(bool),
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u128)
    }
}

impl From<u128> for Cell {
    fn from(v: u128) -> Self {
        Cell::Int(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<Vec<usize>> for Cell {
    fn from(v: Vec<usize>) -> Self {
        Cell::Indices(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Flag(v)
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Indices(v) => v.iter().map(usize::to_string).collect::<Vec<_>>().join(" "),
            Cell::Flag(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => match u64::try_from(*v) {
                Ok(x) => json!(x),
                Err(_) => json!(v.to_string()),
            },
            Cell::Text(s) => json!(s),
            Cell::Indices(v) => json!(v),
            Cell::Flag(b) => json!(b),
        }
    }
}

/// Rows under fixed column names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Table {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    /// Header line plus one line per row; the header is present even when
    /// there are no rows.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
        let io = |e: csv::Error| Error::Parse(e.to_string());
        w.write_record(&self.columns).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
    }

    /// An array of objects keyed by column name.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let mut m = Map::new();
                    for (c, v) in self.columns.iter().zip(row) {
                        m.insert((*c).to_string(), v.json());
                    }
                    Value::Object(m)
                })
                .collect(),
        )
    }
}

/// A command result: the CSV table, and a JSON document that defaults to the
/// table's rows.
#[derive(Debug, Clone)]
pub struct Report {
    pub table: Table,
    pub json: Option<Value>,
}

impl Report {
    pub fn from_table(table: Table) -> Self {
        Report { table, json: None }
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Csv => self.table.to_csv(),
            Format::Json => {
                let v = self.json.clone().unwrap_or_else(|| self.table.to_json());
                let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::Parse(e.to_string()))?;
                s.push('\n');
                Ok(s)
            }
        }
    }
}

pub fn rational_string(q: &BigRational) -> String {
    q.to_string()
}

/// Power-basis coordinates of every value, as rational strings.
pub fn values_json(values: &[CycNumber]) -> Value {
    Value::Array(values.iter().map(|v| json!(v.to_rational_strings())).collect())
}

fn parse_rational(s: &str) -> Result<RationalScalar> {
    let s = s.trim();
    if let Some((_, den)) = s.split_once('/') {
        if den.trim().trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
            return Err(Error::DivisionByZero);
        }
    }
    BigRational::from_str(s).map_err(|_| Error::Parse(format!("bad rational {s:?}")))
}

/// Parses a JSON array with one entry per group element: either a rational
/// string (`"3/2"`, `"-1"`) or an array of such strings giving power-basis
/// coordinates in `Q(zeta_N)` for the group exponent `N`.
pub fn parse_signal(group: &GroupSpec, literal: &str) -> Result<Signal> {
    let v: Value = serde_json::from_str(literal).map_err(|e| Error::Parse(e.to_string()))?;
    let Value::Array(items) = v else {
        return Err(Error::Parse("signal literal must be a JSON array".into()));
    };
    let field = CyclotomicField::get(group.exponent());
    let values = items
        .iter()
        .map(|item| match item {
            Value::String(s) => Ok(CycNumber::from_rational(&field, parse_rational(s)?)),
            Value::Array(coords) => {
                let coords = coords
                    .iter()
                    .map(|c| match c {
                        Value::String(s) => parse_rational(s),
                        other => Err(Error::Parse(format!("expected a rational string, got {other}"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                CycNumber::from_coords(&field, coords)
            }
            other => Err(Error::Parse(format!("expected a rational string or array, got {other}"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Signal::new(group, values)
}
