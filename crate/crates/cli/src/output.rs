use std::io::Write;

use anyhow::Context;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::args::Format;

/// Rows of named columns, rendered as CSV or as JSON objects.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Self { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Numeric table from `(x, y...)` rows.
    pub fn numeric(columns: Vec<&'static str>, rows: impl IntoIterator<Item = Vec<f64>>) -> Self {
        let mut t = Self::new(columns);
        for r in rows {
            t.push(r.into_iter().map(num).collect());
        }
        t
    }
}

/// JSON value of a float; non-finite values become strings.
pub fn num(v: f64) -> Value {
    serde_json::Number::from_f64(v).map_or_else(|| Value::String(v.to_string()), Value::Number)
}

/// 17 significant digits, independent of locale.
pub fn csv_number(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        v.to_string()
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Number(n) if n.is_f64() => csv_number(n.as_f64().unwrap_or(f64::NAN)),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn render<C: Serialize>(config: &C, table: &Table, warnings: &[String], format: Format) -> anyhow::Result<String> {
    let config = serde_json::to_value(config).context("serializing config")?;
    match format {
        Format::Csv => {
            let mut out = format!("# config={config}\n");
            out.push_str(&table.columns.join(","));
            out.push('\n');
            for row in &table.rows {
                let cells: Vec<String> = row.iter().map(csv_cell).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            Ok(out)
        }
        Format::Json => {
            let results: Vec<Value> = table
                .rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> = table
                        .columns
                        .iter()
                        .zip(row)
                        .map(|(c, v)| (c.to_string(), v.clone()))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            let doc = json!({ "config": config, "results": results, "warnings": warnings });
            Ok(format!("{}\n", serde_json::to_string_pretty(&doc)?))
        }
    }
}

pub fn write_out(path: Option<&std::path::Path>, text: &[u8]) -> anyhow::Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let t = Table::numeric(vec!["x", "Q"], vec![vec![0.0, 1.0], vec![0.5, 0.25]]);
        let s = render(&json!({"a": 1}), &t, &[], Format::Csv).unwrap();
        assert_eq!(
            s,
            "# config={\"a\":1}\nx,Q\n0.0000000000000000e0,1.0000000000000000e0\n5.0000000000000000e-1,2.5000000000000000e-1\n"
        );
        let v: f64 = csv_number(0.1 + 0.2).parse().unwrap();
        assert_eq!(v, 0.1 + 0.2);
    }

    #[test]
    fn json_layout() {
        let mut t = Table::new(vec!["p", "value"]);
        t.push(vec![json!(1), num(0.015625)]);
        let s = render(&json!({}), &t, &["w".into()], Format::Json).unwrap();
        let v: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["results"][0], json!({"p": 1, "value": 0.015625}));
        assert_eq!(v["warnings"], json!(["w"]));
        assert_eq!(num(f64::NAN), json!("NaN"));
    }
}
