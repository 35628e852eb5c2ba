//! One report type rendered three ways.

use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Mismatch,
}

#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub fields: Vec<(String, Value)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            fields: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            status: Status::Ok,
        }
    }

    pub fn field(mut self, k: &str, v: impl Into<Value>) -> Self {
        self.fields.push((k.to_string(), v.into()));
        self
    }

    pub fn push_field(&mut self, k: &str, v: impl Into<Value>) {
        self.fields.push((k.to_string(), v.into()));
    }

    pub fn columns(mut self, cols: &[&str]) -> Self {
        self.columns = cols.iter().map(|c| c.to_string()).collect();
        self
    }

    pub fn row(&mut self, r: Vec<Value>) {
        debug_assert_eq!(r.len(), self.columns.len());
        self.rows.push(r);
    }

    /// Marks a failed verification unless `ok`.
    pub fn check(&mut self, ok: bool) {
        if !ok {
            self.status = Status::Mismatch;
        }
    }

    pub fn render(&self, fmt: Format) -> String {
        match fmt {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn json(&self) -> String {
        let mut m = Map::new();
        m.insert("schema".into(), json!(1));
        m.insert("command".into(), json!(self.command));
        m.insert("ok".into(), json!(self.status == Status::Ok));
        for (k, v) in &self.fields {
            m.insert(k.clone(), v.clone());
        }
        if !self.columns.is_empty() {
            let rows: Vec<Value> = self
                .rows
                .iter()
                .map(|r| {
                    let mut o = Map::new();
                    for (c, v) in self.columns.iter().zip(r) {
                        o.insert(c.clone(), v.clone());
                    }
                    Value::Object(o)
                })
                .collect();
            m.insert("rows".into(), Value::Array(rows));
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("json");
        s.push('\n');
        s
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        if self.columns.is_empty() {
            out.push_str("key,value\n");
            out.push_str(&format!("ok,{}\n", self.status == Status::Ok));
            for (k, v) in &self.fields {
                out.push_str(&format!("{},{}\n", csv_cell(k), csv_cell(&plain(v))));
            }
        } else {
            out.push_str(&self.columns.join(","));
            out.push('\n');
            for r in &self.rows {
                let cells: Vec<String> = r.iter().map(|v| csv_cell(&plain(v))).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        out
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            out.push_str(&format!("{}: {}\n", k, plain(v)));
        }
        if !self.columns.is_empty() {
            let cells: Vec<Vec<String>> = self
                .rows
                .iter()
                .map(|r| r.iter().map(plain).collect())
                .collect();
            let mut width: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
            for r in &cells {
                for (w, c) in width.iter_mut().zip(r) {
                    *w = (*w).max(c.len());
                }
            }
            let line = |r: &[String]| {
                let parts: Vec<String> = r
                    .iter()
                    .zip(&width)
                    .map(|(c, w)| format!("{:<w$}", c, w = *w))
                    .collect();
                parts.join("  ").trim_end().to_string() + "\n"
            };
            out.push_str(&line(&self.columns));
            for r in &cells {
                out.push_str(&line(r));
            }
        }
        if self.status == Status::Mismatch {
            out.push_str("verdict: MISMATCH\n");
        }
        out
    }
}

pub fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn csv_cell(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_all_formats() {
        let mut r = Report::new("demo").field("n", 3).columns(&["a", "b"]);
        r.row(vec![json!("x,y"), json!(2)]);
        assert!(r.render(Format::Json).contains("\"schema\": 1"));
        assert_eq!(r.render(Format::Csv), "a,b\n\"x,y\",2\n");
        assert!(r.render(Format::Text).starts_with("n: 3\n"));
    }
}
