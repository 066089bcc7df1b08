//! CSV and JSON serialization of result tables.

use std::io::Write;
use std::path::Path;

use serde_json::{Map, Value};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Real(f64),
    Int(u64),
    Text(String),
    Empty,
}

impl Cell {
    /// Reals use 17 significant digits so that they round-trip.
    fn csv(&self) -> String {
        match self {
            Cell::Real(x) => format!("{:.16e}", if *x == 0.0 { 0.0 } else { *x }),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Real(x) => serde_json::Number::from_f64(*x).map(Value::Number).unwrap_or(Value::Null),
            Cell::Int(n) => Value::from(*n),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Empty => Value::Null,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Table { headers, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::config(format!("csv serialization failed: {e}"));
        w.write_record(&self.headers).map_err(io)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).map_err(io)?;
        }
        w.into_inner().map_err(|e| CliError::config(format!("csv serialization failed: {e}")))
    }

    /// One JSON object per row; empty cells are omitted.
    pub fn records(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let mut obj = Map::new();
                    for (h, cell) in self.headers.iter().zip(row) {
                        if *cell != Cell::Empty {
                            obj.insert((*h).to_string(), cell.json());
                        }
                    }
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

pub fn to_json(value: &Value) -> Result<Vec<u8>, CliError> {
    let mut bytes = serde_json::to_vec_pretty(value)
        .map_err(|e| CliError::config(format!("json serialization failed: {e}")))?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Writes to the file, or to stdout when no path is given.
pub fn emit(bytes: &[u8], out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| CliError::config(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|_| stdout.flush())
                .map_err(|e| CliError::config(format!("cannot write to stdout: {e}")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_round_trips_reals() {
        let mut t = Table::new(vec!["a", "b"]);
        t.push(vec![Cell::Real(0.1), Cell::Int(3)]);
        t.push(vec![Cell::Real(std::f64::consts::PI), Cell::Empty]);
        let text = String::from_utf8(t.to_csv().unwrap()).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "a,b");
        let x: f64 = lines[2].split(',').next().unwrap().parse().unwrap();
        assert_eq!(x, std::f64::consts::PI);
        assert_eq!(lines[1], "1.0000000000000001e-1,3");
    }

    #[test]
    fn records_skip_empty_cells() {
        let mut t = Table::new(vec!["a", "b"]);
        t.push(vec![Cell::Int(1), Cell::Empty]);
        assert_eq!(t.records().to_string(), r#"[{"a":1}]"#);
    }
}
