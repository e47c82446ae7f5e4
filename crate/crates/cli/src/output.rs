//! Tables rendered either as CSV (with `# key=value` header lines) or as a
//! JSON document.

use std::io::Write;

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub struct Table {
    pub name: String,
    pub meta: Vec<(String, Value)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table {
            name: name.to_string(),
            meta: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn meta(&mut self, key: &str, value: impl Into<Value>) {
        self.meta.push((key.to_string(), value.into()));
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("table".into(), Value::String(self.name.clone()));
        for (k, v) in &self.meta {
            obj.insert(k.clone(), v.clone());
        }
        let rows = self
            .rows
            .iter()
            .map(|r| Value::Object(self.columns.iter().cloned().zip(r.iter().cloned()).collect()))
            .collect();
        obj.insert("rows".into(), Value::Array(rows));
        Value::Object(obj)
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn render(tables: &[Table], format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let doc = if tables.len() == 1 {
                tables[0].to_json()
            } else {
                Value::Array(tables.iter().map(Table::to_json).collect())
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)
        }
        Format::Csv => {
            for (i, t) in tables.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "# table={}", t.name)?;
                for (k, v) in &t.meta {
                    writeln!(out, "# {k}={}", csv_cell(v))?;
                }
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&t.columns)?;
                for r in &t.rows {
                    w.write_record(r.iter().map(csv_cell))?;
                }
                out.write_all(&w.into_inner().map_err(|e| e.into_error())?)?;
            }
            Ok(())
        }
    }
}
