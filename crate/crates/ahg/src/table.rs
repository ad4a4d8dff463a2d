//! Loop table files: a header line "order identity", then one row per line of
//! space-separated element indices. Blank lines are skipped.

use ahg_core::{validate_loop, AlgebraError, Loop};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("table file is empty; expected a header line \"order identity\"")]
    MissingHeader,
    #[error("line {line}: header must be \"order identity\", got {text:?}")]
    BadHeader { line: usize, text: String },
    #[error("line {line}: {token:?} is not a nonnegative integer")]
    BadToken { line: usize, token: String },
    #[error("expected {expected} rows after the header, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error(transparent)]
    Invalid(#[from] AlgebraError),
}

fn numbers(line: usize, text: &str) -> Result<Vec<usize>, TableError> {
    text.split_whitespace()
        .map(|t| t.parse().map_err(|_| TableError::BadToken { line, token: t.to_string() }))
        .collect()
}

/// Parses and validates a loop table (Latin square with two-sided identity).
pub fn parse_table(text: &str) -> Result<Loop, TableError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(TableError::MissingHeader)?;
    let (order, identity) = match numbers(line, header)?.as_slice() {
        &[order, identity] => (order, identity),
        _ => return Err(TableError::BadHeader { line, text: header.to_string() }),
    };
    let rows = lines.map(|(line, l)| numbers(line, l)).collect::<Result<Vec<_>, _>>()?;
    if rows.len() != order {
        return Err(TableError::RowCount { expected: order, found: rows.len() });
    }
    Ok(validate_loop(&rows, identity)?)
}
