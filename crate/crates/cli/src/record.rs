use std::fmt::Write as _;

use serde::Serialize;

use crate::error::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const UNITS_BANNER: &str = "# natural units: hbar = c = 1; lengths and times share one unit";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Number(f64),
    Text(String),
}

/// Shortest round-trip form; scientific notation outside `[1e-4, 1e6)`.
pub fn fmt_number(x: f64) -> String {
    let m = x.abs();
    if m != 0.0 && m.is_finite() && !(1e-4..1e6).contains(&m) {
        format!("{x:e}")
    } else {
        x.to_string()
    }
}

impl Value {
    fn render(&self) -> String {
        match self {
            Value::Number(x) => fmt_number(*x),
            Value::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Input {
    pub name: &'static str,
    pub value: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Output {
    pub name: &'static str,
    pub value: f64,
    pub method: &'static str,
}

/// One evaluation: inputs as given, outputs each tagged with the operation
/// that produced it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<usize>,
    pub version: &'static str,
    pub conventions: &'static str,
    pub inputs: Vec<Input>,
    pub outputs: Vec<Output>,
}

impl RunRecord {
    pub fn new(command: &'static str) -> Self {
        RunRecord {
            command,
            index: None,
            version: VERSION,
            conventions: casimir_core::CONVENTION_NOTE,
            inputs: Vec::new(),
            outputs: Vec::new(),
        }
    }

    pub fn input(&mut self, name: &'static str, value: f64) -> &mut Self {
        self.inputs.push(Input { name, value: Value::Number(value) });
        self
    }

    pub fn input_text(&mut self, name: &'static str, value: &str) -> &mut Self {
        self.inputs.push(Input { name, value: Value::Text(value.to_owned()) });
        self
    }

    pub fn output(&mut self, name: &'static str, value: f64, method: &'static str) -> &mut Self {
        // fold −0 into +0 so that output does not depend on the sign of zero
        self.outputs.push(Output { name, value: value + 0.0, method });
        self
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.outputs.iter().find(|o| o.name == name).map(|o| o.value)
    }
}

pub fn render_text(record: &RunRecord) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{} (casimir {})", record.command, record.version);
    let _ = writeln!(s, "conventions: {}", record.conventions);
    s.push_str("inputs:\n");
    for i in &record.inputs {
        let _ = writeln!(s, "  {} = {}", i.name, i.value.render());
    }
    s.push_str("outputs:\n");
    let width = record.outputs.iter().map(|o| o.name.len()).max().unwrap_or(0);
    for o in &record.outputs {
        let _ = writeln!(s, "  {:<width$} = {:<24} [{}]", o.name, fmt_number(o.value), o.method);
    }
    s
}

pub fn render_json<T: Serialize + ?Sized>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// CSV with one row per record. Columns come from the first record; output
/// headers carry the method tag as `name[method]`.
pub fn render_csv(records: &[RunRecord]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    if let Some(first) = records.first() {
        let mut header = vec!["command".to_owned(), "index".to_owned()];
        header.extend(first.inputs.iter().map(|i| i.name.to_owned()));
        header.extend(first.outputs.iter().map(|o| format!("{}[{}]", o.name, o.method)));
        header.push("version".to_owned());
        w.write_record(&header)?;
    }
    for r in records {
        let mut row = vec![r.command.to_owned(), r.index.map(|i| i.to_string()).unwrap_or_default()];
        row.extend(r.inputs.iter().map(|i| i.value.render()));
        row.extend(r.outputs.iter().map(|o| fmt_number(o.value)));
        row.push(r.version.to_owned());
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv writer emits utf-8"))
}

pub fn render_records(records: &[RunRecord], format: Format, sweep: bool) -> Result<String, CliError> {
    match format {
        Format::Json if sweep => render_json(records),
        Format::Json => render_json(&records[0]),
        // sweeps are tabular data; text mode falls back to CSV
        Format::Csv => render_csv(records),
        Format::Text if sweep => render_csv(records),
        Format::Text => Ok(render_text(&records[0])),
    }
}
