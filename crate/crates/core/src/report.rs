//! Deterministic reports: one line per check and per table in text mode, or a
//! single JSON object `{command, inputs, checks, tables}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Fail,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub checks: Vec<CheckLine>,
    pub tables: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), inputs: BTreeMap::new(), checks: Vec::new(), tables: BTreeMap::new() }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.insert(key.into(), value.to_string());
        self
    }

    pub fn table(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.tables.insert(key.into(), serde_json::to_value(value).expect("tables serialize"));
        self
    }

    /// Record a check; violations become `fail`, every other error `error`.
    pub fn check(&mut self, name: impl Into<String>, outcome: &Result<()>) -> bool {
        let (status, witness) = match outcome {
            Ok(()) => (Status::Ok, None),
            Err(e) if e.is_violation() => (Status::Fail, Some(e.to_string())),
            Err(e) => (Status::Error, Some(e.to_string())),
        };
        self.checks.push(CheckLine { name: name.into(), status, witness });
        status == Status::Ok
    }

    /// Record a boolean expectation.
    pub fn expect(&mut self, name: impl Into<String>, holds: bool, witness: impl FnOnce() -> String) -> bool {
        let status = if holds { Status::Ok } else { Status::Fail };
        let witness = (!holds).then(witness);
        self.checks.push(CheckLine { name: name.into(), status, witness });
        holds
    }

    /// Run `f`, turning an early error into an `error` or `fail` line.
    pub fn guard(&mut self, name: &str, f: impl FnOnce(&mut Report) -> Result<()>) {
        if let Err(e) = f(self) {
            self.check(name, &Err(e));
        }
    }

    /// 0 when every check passes, 2 if any check hit an input or limit error, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.checks.iter().any(|c| c.status == Status::Error) {
            2
        } else if self.checks.iter().any(|c| c.status == Status::Fail) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for (k, v) in &self.inputs {
            writeln!(out, "input {k}: {v}").unwrap();
        }
        for c in &self.checks {
            let status = match c.status {
                Status::Ok => "ok",
                Status::Fail => "FAIL",
                Status::Error => "ERROR",
            };
            match &c.witness {
                Some(w) => writeln!(out, "check {}: {status} ({w})", c.name).unwrap(),
                None => writeln!(out, "check {}: {status}", c.name).unwrap(),
            }
        }
        for (k, v) in &self.tables {
            writeln!(out, "table {k}: {v}").unwrap();
        }
        out
    }
}
