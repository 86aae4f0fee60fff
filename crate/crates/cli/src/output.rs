//! Machine-readable output: CSV with 17-significant-digit floats, or a
//! self-describing JSON document `{config, rows, provenance}`.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Number, Value};
use std::io::Write;

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(u64),
    Float(f64),
    Text(String),
    Bool(bool),
    /// Empty CSV field / absent JSON key (informational rows).
    Blank,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            // 17 significant digits: exact f64 round trip
            Cell::Float(v) => format!("{v:.16e}"),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Blank => String::new(),
        }
    }

    fn json(&self) -> Option<Value> {
        match self {
            Cell::Int(v) => Some(Value::Number((*v).into())),
            Cell::Float(v) => Number::from_f64(*v).map(Value::Number),
            Cell::Text(s) => Some(Value::String(s.clone())),
            Cell::Bool(b) => Some(Value::Bool(*b)),
            Cell::Blank => None,
        }
    }
}

/// A column-ordered table of cells.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: Vec<S>) -> Self {
        Table {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

/// Run provenance recorded alongside the rows.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub horizon: Option<f64>,
    pub tolerances: std::collections::BTreeMap<String, f64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

impl Provenance {
    pub fn new() -> Self {
        Provenance {
            route: None,
            horizon: None,
            tolerances: Default::default(),
            notes: Vec::new(),
        }
    }

    pub fn route(mut self, route: impl std::fmt::Display) -> Self {
        self.route = Some(route.to_string());
        self
    }

    pub fn horizon(mut self, horizon: f64) -> Self {
        self.horizon = Some(horizon);
        self
    }

    pub fn tolerance(mut self, key: &str, value: f64) -> Self {
        self.tolerances.insert(key.to_string(), value);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

/// The full JSON document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub config: Map<String, Value>,
    pub rows: Vec<Map<String, Value>>,
    pub provenance: Provenance,
}

/// The answer of one subcommand, ready to emit in either format.
#[derive(Debug, Clone)]
pub struct Output {
    pub config: Map<String, Value>,
    pub table: Table,
    pub provenance: Provenance,
    /// Process exit status; nonzero when output is emitted but an identity
    /// check inside it failed.
    pub status: u8,
}

impl Output {
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        s.push_str(&self.table.columns.join(","));
        s.push('\n');
        for row in &self.table.rows {
            let fields: Vec<String> = row.iter().map(Cell::csv).collect();
            s.push_str(&fields.join(","));
            s.push('\n');
        }
        s
    }

    pub fn to_document(&self) -> Document {
        let rows = self
            .table
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, cell) in self.table.columns.iter().zip(row) {
                    if let Some(v) = cell.json() {
                        obj.insert(name.clone(), v);
                    }
                }
                obj
            })
            .collect();
        Document {
            config: self.config.clone(),
            rows,
            provenance: self.provenance.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s =
            serde_json::to_string_pretty(&self.to_document()).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn write(&self, format: crate::Format, out: Option<&std::path::Path>) -> std::io::Result<()> {
        let body = match format {
            crate::Format::Csv => self.to_csv(),
            crate::Format::Json => self.to_json(),
        };
        match out {
            Some(path) => std::fs::write(path, body),
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                lock.write_all(body.as_bytes())
            }
        }
    }
}

/// Config map builder with insertion in call order (serde_json's map keeps
/// insertion order only with the `preserve_order` feature; the default map
/// is sorted, which is just as deterministic).
pub struct ConfigBuilder(Map<String, Value>);

impl ConfigBuilder {
    pub fn new(subcommand: &str) -> Self {
        let mut m = Map::new();
        m.insert("subcommand".into(), Value::String(subcommand.into()));
        ConfigBuilder(m)
    }

    pub fn str(mut self, key: &str, value: impl Into<String>) -> Self {
        self.0.insert(key.into(), Value::String(value.into()));
        self
    }

    pub fn int(mut self, key: &str, value: u64) -> Self {
        self.0.insert(key.into(), Value::Number(value.into()));
        self
    }

    pub fn float(mut self, key: &str, value: f64) -> Self {
        if let Some(n) = Number::from_f64(value) {
            self.0.insert(key.into(), Value::Number(n));
        }
        self
    }

    pub fn build(self) -> Map<String, Value> {
        self.0
    }
}
