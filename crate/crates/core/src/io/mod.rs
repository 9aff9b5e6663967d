//! File formats and reports.

mod off;
mod plc;
mod report;

use thiserror::Error;

pub use off::{parse_off, serialize_off};
pub use plc::{parse_plc, serialize_plc_standard, serialize_plc_traditional, PlcDocument};
pub use report::{exit_code, Report, ReportCounts, ReportWitness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid input{}: {message}", line.map(|l| format!(" (line {l})")).unwrap_or_default())]
    Invalid { line: Option<usize>, message: String },
}

impl IoError {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        IoError::Parse { line, message: message.into() }
    }

    pub(crate) fn invalid(line: Option<usize>, message: impl Into<String>) -> Self {
        IoError::Invalid { line, message: message.into() }
    }
}

/// Non-empty lines with `#` comments removed, numbered from 1.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

pub(crate) fn parse_usize(line: usize, token: &str) -> Result<usize, IoError> {
    token.parse().map_err(|_| IoError::parse(line, format!("expected a non-negative integer, found `{token}`")))
}
