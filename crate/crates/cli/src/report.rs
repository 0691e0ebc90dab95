use std::fmt;
use std::fs;
use std::path::Path;

use clap::ValueEnum;
use radixforge::wire::ScheduleJson;
use radixforge::{OperatorSchedule, Rational};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit status 2.
    Parse(String),
    /// Valid input the library rejects: exit status 1.
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<radixforge::Error> for CliError {
    fn from(e: radixforge::Error) -> Self {
        if e.is_parse() {
            CliError::Parse(e.to_string())
        } else {
            CliError::Domain(e.to_string())
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// One command result in every format it supports.
#[derive(Debug)]
pub struct Report {
    pub plain: String,
    pub json: Value,
    pub csv: Option<String>,
    /// False when the command ran but reports a failure (exit status 1).
    pub ok: bool,
}

impl Report {
    pub fn new(plain: impl Into<String>, json: Value) -> Self {
        Self {
            plain: plain.into(),
            json,
            csv: None,
            ok: true,
        }
    }

    pub fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }

    pub fn render(&self, format: Format, command: &str) -> CliResult<String> {
        let mut out = match format {
            Format::Plain => self.plain.clone(),
            Format::Json => {
                serde_json::to_string_pretty(&self.json).expect("json values serialize")
            }
            Format::Csv => self.csv.clone().ok_or_else(|| {
                CliError::Parse(format!("`{command}` does not support --format csv"))
            })?,
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        Ok(out)
    }
}

pub fn q(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn load_schedule(path: &Path) -> CliResult<OperatorSchedule> {
    let text = fs::read_to_string(path).map_err(|e| {
        CliError::Parse(format!(
            "cannot read schedule file '{}': {e}",
            path.display()
        ))
    })?;
    let json: ScheduleJson = serde_json::from_str(&text).map_err(|e| {
        CliError::Parse(format!("malformed schedule file '{}': {e}", path.display()))
    })?;
    Ok(OperatorSchedule::try_from(json)?)
}
