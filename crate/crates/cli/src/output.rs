//! Deterministic CSV/JSON emission: every file carries the tool version and
//! config hash, numbers print with full round-trip precision, diagnostics go
//! to stderr only.

use serde_json::{json, Value};
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FileFormat {
    Csv,
    Json,
}

/// One output cell: text, full-precision number, or empty (outside a
/// method's validity region).
#[derive(Debug, Clone)]
pub enum Cell {
    Text(&'static str),
    Int(i64),
    Num(f64),
    Empty,
}

impl Cell {
    fn to_csv(&self) -> String {
        match self {
            Cell::Text(s) => (*s).to_string(),
            Cell::Int(i) => i.to_string(),
            Cell::Num(x) => format_f64(*x),
            Cell::Empty => String::new(),
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Text(s) => json!(s),
            Cell::Int(i) => json!(i),
            Cell::Num(x) => json!(format_f64(*x)),
            Cell::Empty => Value::Null,
        }
    }
}

/// 17 significant digits: enough for exact f64 round trips.
pub fn format_f64(x: f64) -> String {
    format!("{:.16e}", x)
}

pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &'static str, columns: Vec<&'static str>) -> Self {
        Table {
            name,
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Write the table under `dir`, returning the file path.
    pub fn write(
        &self,
        dir: &Path,
        format: FileFormat,
        config_hash: &str,
    ) -> std::io::Result<PathBuf> {
        let version = env!("CARGO_PKG_VERSION");
        match format {
            FileFormat::Csv => {
                let path = dir.join(format!("{}.csv", self.name));
                let mut text = format!("# diffract {} config={}\n", version, config_hash);
                text.push_str(&self.columns.join(","));
                text.push('\n');
                for row in &self.rows {
                    let line: Vec<String> = row.iter().map(Cell::to_csv).collect();
                    text.push_str(&line.join(","));
                    text.push('\n');
                }
                fs::write(&path, text)?;
                Ok(path)
            }
            FileFormat::Json => {
                let path = dir.join(format!("{}.json", self.name));
                let rows: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let mut obj = serde_json::Map::new();
                        for (col, cell) in self.columns.iter().zip(row) {
                            obj.insert((*col).to_string(), cell.to_json());
                        }
                        Value::Object(obj)
                    })
                    .collect();
                let doc = json!({
                    "tool": "diffract",
                    "version": version,
                    "config_hash": config_hash,
                    "table": self.name,
                    "columns": self.columns,
                    "rows": rows,
                });
                let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
                text.push('\n');
                fs::write(&path, text)?;
                Ok(path)
            }
        }
    }
}
