use gamma2_core::rep::{RepConfig, Violation};
use gamma2_core::{ExactComplex, SquareMatrix};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INVALID_CONFIG: u8 = 3;
pub const EXIT_PROPERTY_FAILURE: u8 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violation,
    Error,
}

/// Machine-readable result of one command. `status` is `ok` exactly when
/// `failures` is empty.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CliReport {
    pub command: String,
    pub status: Status,
    pub payload: Value,
    pub cases_run: u64,
    pub failures: Vec<Value>,
}

impl CliReport {
    pub fn new(command: &str, payload: Value, cases_run: u64, failures: Vec<Value>) -> Self {
        let status = if failures.is_empty() { Status::Ok } else { Status::Violation };
        Self { command: command.to_string(), status, payload, cases_run, failures }
    }

    pub fn exit_code(&self) -> u8 {
        match self.status {
            Status::Ok => EXIT_OK,
            Status::Violation => EXIT_PROPERTY_FAILURE,
            Status::Error => EXIT_USAGE,
        }
    }
}

/// A command that could not run: bad input or an invalid configuration.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
    pub details: Vec<Value>,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into(), details: Vec::new() }
    }

    pub fn invalid_config(violations: &[Violation]) -> Self {
        Self {
            code: EXIT_INVALID_CONFIG,
            message: format!("invalid configuration: {} violation(s)", violations.len()),
            details: violations.iter().map(|v| json!({ "violation": v.to_string() })).collect(),
        }
    }

    pub fn into_report(self, command: &str) -> CliReport {
        let mut failures = vec![json!({ "error": self.message, "exit_code": self.code })];
        failures.extend(self.details);
        CliReport {
            command: command.to_string(),
            status: Status::Error,
            payload: Value::Null,
            cases_run: 0,
            failures,
        }
    }
}

impl From<gamma2_core::Error> for CliError {
    fn from(e: gamma2_core::Error) -> Self {
        match e {
            gamma2_core::Error::InvalidConfig(v) => CliError::invalid_config(&v),
            other => CliError::usage(other.to_string()),
        }
    }
}

pub fn scalar_json(x: &ExactComplex) -> Value {
    Value::String(x.to_string())
}

pub fn matrix_json(m: &SquareMatrix) -> Value {
    Value::Array(m.rows().map(|row| Value::Array(row.iter().map(scalar_json).collect())).collect())
}

pub fn config_json(cfg: &RepConfig) -> Value {
    Value::Array(
        cfg.tuples()
            .iter()
            .map(|t| Value::Array(t.entries().iter().map(scalar_json).collect()))
            .collect(),
    )
}
