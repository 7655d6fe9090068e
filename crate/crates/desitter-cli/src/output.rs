//! Tables and their CSV and JSON renderings.

use std::io::Write;

use serde_json::{json, Map, Value as Json};

/// Output format selected by `--format`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One cell of a row.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
}

impl Value {
    fn csv(&self) -> String {
        match self {
            Value::Num(x) if x.is_nan() => "nan".to_string(),
            Value::Num(x) if x.is_infinite() => if *x > 0.0 { "inf" } else { "-inf" }.to_string(),
            Value::Num(x) => format!("{:.16e}", x + 0.0),
            Value::Int(n) => n.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Value::Num(x) if x.is_finite() => json!(x),
            Value::Num(_) => Json::Null,
            Value::Int(n) => json!(n),
            Value::Bool(b) => json!(b),
            Value::Text(s) => json!(s),
        }
    }
}

/// A row and the error that prevented its evaluation, if any.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub cells: Vec<Value>,
    pub error: Option<String>,
}

impl Row {
    pub fn ok(cells: Vec<Value>) -> Self {
        Self { cells, error: None }
    }

    pub fn failed(cells: Vec<Value>, error: impl ToString) -> Self {
        Self {
            cells,
            error: Some(error.to_string()),
        }
    }
}

/// Rows sharing a citation and column layout.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub citation: String,
    pub notes: Vec<String>,
    pub columns: Vec<String>,
    pub rows: Vec<Row>,
}

impl Table {
    pub fn new(citation: impl Into<String>, columns: &[&str]) -> Self {
        Self {
            citation: citation.into(),
            notes: Vec::new(),
            columns: columns.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn push(&mut self, row: Row) {
        debug_assert_eq!(row.cells.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn has_errors(&self) -> bool {
        self.rows.iter().any(|r| r.error.is_some())
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "# citation: {}", self.citation)?;
        for n in &self.notes {
            writeln!(out, "# {n}")?;
        }
        let mut w = csv::Writer::from_writer(out);
        let mut header = self.columns.clone();
        header.push("error".to_string());
        w.write_record(&header)?;
        for r in &self.rows {
            let mut rec: Vec<String> = r.cells.iter().map(Value::csv).collect();
            rec.push(r.error.clone().unwrap_or_default());
            w.write_record(&rec)?;
        }
        w.flush()
    }

    fn write_json(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let rows: Vec<Json> = self
            .rows
            .iter()
            .map(|r| {
                let mut m = Map::new();
                for (c, v) in self.columns.iter().zip(&r.cells) {
                    m.insert(c.clone(), v.json());
                }
                m.insert("citation".to_string(), json!(self.citation));
                m.insert("error".to_string(), r.error.as_ref().map_or(Json::Null, |e| json!(e)));
                Json::Object(m)
            })
            .collect();
        let doc = json!({
            "citation": self.citation,
            "notes": self.notes,
            "rows": rows,
        });
        serde_json::to_writer_pretty(&mut *out, &doc)?;
        writeln!(out)
    }
}
