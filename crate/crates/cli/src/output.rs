use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use serde_json::{Map, Value};

pub const SCHEMA: u64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

/// One output row: ordered key/value pairs.
#[derive(Clone, Debug, Default)]
pub struct Record(Vec<(String, Value)>);

impl Record {
    pub fn new() -> Self {
        Record::default()
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.push((key.to_string(), value.into()));
        self
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Bool(true) => "yes".into(),
        Value::Bool(false) => "no".into(),
        Value::Array(items) => items.iter().map(plain).collect::<Vec<_>>().join(","),
        other => other.to_string(),
    }
}

/// Writes records in the chosen format. A single text record is printed as
/// `key: value` lines; several are printed one per line.
pub fn emit(out: &mut impl Write, format: Format, records: &[Record]) -> Result<()> {
    match format {
        Format::Text => {
            if let [only] = records {
                for (k, v) in &only.0 {
                    writeln!(out, "{k}: {}", plain(v))?;
                }
            } else {
                for r in records {
                    let line: Vec<String> = r.0.iter().map(|(k, v)| format!("{k}: {}", plain(v))).collect();
                    writeln!(out, "{}", line.join(", "))?;
                }
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if let Some(first) = records.first() {
                w.write_record(first.0.iter().map(|(k, _)| k.as_str()))?;
            }
            for r in records {
                w.write_record(r.0.iter().map(|(_, v)| plain(v)))?;
            }
            w.flush()?;
        }
        Format::Json => {
            for r in records {
                let mut m = Map::new();
                m.insert("schema".into(), SCHEMA.into());
                for (k, v) in &r.0 {
                    m.insert(k.clone(), v.clone());
                }
                writeln!(out, "{}", Value::Object(m))?;
            }
        }
    }
    Ok(())
}
