use std::io::Write;

use serde_json::{json, Map, Value};

use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format!("{v:.14e}"),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn json(&self) -> Value {
        match self {
            // non-finite numbers have no JSON form
            Cell::Num(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
        }
    }
}

/// Column-oriented output with run metadata.
#[derive(Debug, Clone)]
pub struct Table {
    pub command: &'static str,
    pub formula: String,
    pub parameters: Map<String, Value>,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(command: &'static str, formula: impl Into<String>, header: Vec<&'static str>) -> Self {
        Table {
            command,
            formula: formula.into(),
            parameters: Map::new(),
            header,
            rows: Vec::new(),
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.parameters.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<(), CliError> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv))?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mut columns = Map::new();
        for (i, name) in self.header.iter().enumerate() {
            let col: Vec<Value> = self.rows.iter().map(|r| r[i].json()).collect();
            columns.insert((*name).to_string(), Value::Array(col));
        }
        json!({
            "metadata": {
                "artifact": "kerrsq",
                "version": env!("CARGO_PKG_VERSION"),
                "command": self.command,
                "formula": self.formula,
                "parameters": Value::Object(self.parameters.clone()),
            },
            "columns": Value::Object(columns),
        })
    }

    pub fn write_json<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut out, &self.to_json())?;
        writeln!(out)?;
        Ok(())
    }
}
