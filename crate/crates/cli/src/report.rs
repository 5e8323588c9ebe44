use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Number, Value};

/// Every float leaves the program with 17 significant digits.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::Null;
    }
    Value::Number(Number::from_str(&format!("{x:.16e}")).expect("formatted float parses"))
}

pub fn opt(x: Option<f64>) -> Value {
    x.map_or(Value::Null, num)
}

#[derive(Debug, Clone, Serialize)]
pub struct Diagnostic {
    pub check: String,
    pub pass: bool,
    pub value: Value,
    pub tolerance: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub outputs: Map<String, Value>,
    pub diagnostics: Vec<Diagnostic>,
    pub wall_time_ms: u64,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_owned(),
            inputs: Map::new(),
            outputs: Map::new(),
            diagnostics: Vec::new(),
            wall_time_ms: 0,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_owned(), value.into());
        self
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.outputs.insert(key.to_owned(), value.into());
        self
    }

    /// Passes when `value <= tolerance`; a NaN value fails.
    pub fn check(&mut self, name: &str, value: f64, tolerance: f64) -> &mut Self {
        self.diagnostics.push(Diagnostic {
            check: name.to_owned(),
            pass: value <= tolerance,
            value: num(value),
            tolerance: num(tolerance),
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.diagnostics.iter().all(|d| d.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per input, output and diagnostic.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["section", "name", "value", "tolerance", "pass"])
            .unwrap();
        for (k, v) in &self.inputs {
            w.write_record(["input", k, &cell(v), "", ""]).unwrap();
        }
        for (k, v) in &self.outputs {
            w.write_record(["output", k, &cell(v), "", ""]).unwrap();
        }
        for d in &self.diagnostics {
            let pass = if d.pass { "true" } else { "false" };
            w.write_record(["diagnostic", &d.check, &cell(&d.value), &cell(&d.tolerance), pass])
                .unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

/// CSV cell text: nulls are empty, strings unquoted by JSON.
pub fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
