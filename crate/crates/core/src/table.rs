//! Tabular command output rendered as CSV or JSON.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde_json::Value;

/// Decimal places used for every real number in output.
pub const DECIMALS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?} (expected csv or json)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Text(String),
    Real(f64),
    Int(usize),
    Bool(bool),
    Empty,
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Real(x)
    }
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(x)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(x: Option<T>) -> Self {
        x.map_or(Cell::Empty, Into::into)
    }
}

/// Rounds to the displayed precision, folding `-0` into `0`.
pub fn round_display(x: f64) -> f64 {
    let scale = 10f64.powi(DECIMALS as i32);
    let r = (x * scale).round() / scale;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn format_real(x: f64) -> String {
    format!("{:.*}", DECIMALS, round_display(x))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    header: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.header.len(), "row width");
        self.rows.push(row);
    }

    pub fn header(&self) -> &[&'static str] {
        &self.header
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(|c| match c {
                Cell::Text(s) => s.clone(),
                Cell::Real(x) => format_real(*x),
                Cell::Int(i) => i.to_string(),
                Cell::Bool(b) => b.to_string(),
                Cell::Empty => String::new(),
            }))
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn to_json(&self) -> String {
        let records: Vec<IndexMap<&str, Value>> = self
            .rows
            .iter()
            .map(|row| {
                self.header
                    .iter()
                    .zip(row)
                    .map(|(k, c)| {
                        let v = match c {
                            Cell::Text(s) => Value::from(s.as_str()),
                            Cell::Real(x) => Value::from(round_display(*x)),
                            Cell::Int(i) => Value::from(*i),
                            Cell::Bool(b) => Value::from(*b),
                            Cell::Empty => Value::Null,
                        };
                        (*k, v)
                    })
                    .collect()
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&records).expect("json values serialize");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(vec!["set", "mass", "focal"]);
        t.push(vec!["{Poor,Low}".into(), 0.714_285_7.into(), true.into()]);
        t.push(vec!["{Low}".into(), (-1e-9).into(), Cell::Empty]);
        t
    }

    #[test]
    fn csv_quotes_and_fixes_precision() {
        assert_eq!(
            sample().to_csv(),
            "set,mass,focal\n\"{Poor,Low}\",0.7143,true\n{Low},0.0000,\n"
        );
    }

    #[test]
    fn json_keeps_column_order() {
        let json = sample().to_json();
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v[0]["mass"], Value::from(0.7143));
        assert_eq!(v[1]["focal"], Value::Null);
        assert!(json.find("\"set\"").unwrap() < json.find("\"mass\"").unwrap());
    }

    #[test]
    fn formats_parse() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
        assert_eq!(format_real(std::f64::consts::FRAC_1_SQRT_2), "0.7071");
        assert_eq!(format_real(-0.00001), "0.0000");
    }
}
