use std::fmt::Write as _;

use hkrr_core::algebra::format_rational;
use hkrr_core::{Rational, UniPoly};
use serde::Serialize;
use serde_json::{Map, Value};

/// One comparison with the quantity it checks and where the expectation
/// comes from.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
    pub source: String,
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        expected: impl Into<String>,
        actual: impl Into<String>,
        source: impl Into<String>,
    ) -> Self {
        let expected = expected.into();
        let actual = actual.into();
        Check {
            name: name.into(),
            pass: expected == actual,
            expected,
            actual,
            source: source.into(),
        }
    }

    pub fn rational(name: &str, expected: &Rational, actual: &Rational, source: &str) -> Self {
        Check::new(name, format_rational(expected), format_rational(actual), source)
    }
}

/// Output of a command. Serializes with inputs and results in insertion
/// order; rationals are `"p/q"` strings.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            inputs: Map::new(),
            results: Map::new(),
            checks: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.results.insert(key.into(), value.into());
        self
    }

    pub fn rational(&mut self, key: &str, r: &Rational) -> &mut Self {
        self.result(key, format_rational(r))
    }

    pub fn check(&mut self, c: Check) -> &mut Self {
        self.checks.push(c);
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.command).unwrap();
        for (k, v) in &self.inputs {
            writeln!(out, "  input  {k} = {}", plain(v)).unwrap();
        }
        for (k, v) in &self.results {
            writeln!(out, "  {k} = {}", plain(v)).unwrap();
        }
        for c in &self.checks {
            writeln!(
                out,
                "  [{}] {}: expected {}, got {}  ({})",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.expected,
                c.actual,
                c.source
            )
            .unwrap();
        }
        if !self.checks.is_empty() {
            let n = self.checks.iter().filter(|c| c.pass).count();
            writeln!(out, "  {n}/{} checks passed", self.checks.len()).unwrap();
        }
        out
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(plain).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(map) => {
            let parts: Vec<String> = map.iter().map(|(k, v)| format!("{k}: {}", plain(v))).collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

pub fn rational_list(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|r| Value::String(format_rational(r))).collect())
}

/// Coefficients `[c_0, c_1, …]` as strings.
pub fn poly_value(p: &UniPoly) -> Value {
    rational_list(p.coeffs())
}
