//! Where a knot comes from: the table, a matrix file, a braid word, or a batch line.

use std::path::{Path, PathBuf};

use conclab::diagrams::{parse_braid, seifert_matrix_from_braid};
use conclab::exactmath::IntMatrix;
use conclab::knot_invariants::{KnotTable, SeifertMatrix};
use serde::Deserialize;

use crate::CliError;

pub const TABLE_ENV: &str = "CONCLAB_TABLE";

#[derive(Clone, Debug, PartialEq)]
pub enum KnotSource {
    Name(String),
    Matrix(PathBuf),
    Braid(String),
    /// Already parsed, e.g. from a batch line.
    Inline { name: Option<String>, seifert: SeifertMatrix },
}

/// The bundled table, or the file named by CONCLAB_TABLE.
pub fn load_table() -> Result<KnotTable, CliError> {
    match std::env::var_os(TABLE_ENV) {
        Some(p) => KnotTable::load(Path::new(&p)).map_err(CliError::parse),
        None => Ok(KnotTable::bundled()),
    }
}

/// Reads `arg` as a file when such a file exists, otherwise returns it unchanged.
pub fn inline_or_file(arg: &str) -> Result<String, CliError> {
    let p = Path::new(arg);
    if p.is_file() {
        std::fs::read_to_string(p).map_err(|e| CliError::parse(format!("{}: {e}", p.display())))
    } else {
        Ok(arg.to_string())
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum MatrixInput {
    Named { name: Option<String>, seifert_matrix: IntMatrix },
    Bare(IntMatrix),
}

/// `{"name"?, "seifert_matrix": [[...]]}` or a bare `[[...]]`.
pub fn parse_matrix_json(text: &str) -> Result<(Option<String>, SeifertMatrix), CliError> {
    let input: MatrixInput = serde_json::from_str(text).map_err(CliError::parse)?;
    let (name, m) = match input {
        MatrixInput::Named { name, seifert_matrix } => (name, seifert_matrix),
        MatrixInput::Bare(m) => (None, m),
    };
    Ok((name, SeifertMatrix::new(m).map_err(CliError::parse)?))
}

/// Resolves a source to a display name and Seifert matrix.
pub fn resolve(src: &KnotSource, table: &dyn Fn() -> Result<KnotTable, CliError>) -> Result<(String, SeifertMatrix), CliError> {
    match src {
        KnotSource::Name(n) => {
            let t = table()?;
            let e = t.get(n).ok_or_else(|| {
                let known: Vec<&str> = t.names().collect();
                CliError::unknown(format!("unknown knot '{n}' (table has {})", known.join(", ")))
            })?;
            Ok((n.clone(), e.seifert.clone()))
        }
        KnotSource::Matrix(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::parse(format!("{}: {e}", p.display())))?;
            let (name, s) = parse_matrix_json(&text)?;
            Ok((name.unwrap_or_else(|| "K".into()), s))
        }
        KnotSource::Braid(w) => {
            let b = parse_braid(w).map_err(CliError::parse)?;
            let s = seifert_matrix_from_braid(&b).map_err(CliError::parse)?;
            Ok((format!("closure({b})"), s))
        }
        KnotSource::Inline { name, seifert } => Ok((name.clone().unwrap_or_else(|| "K".into()), seifert.clone())),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BatchLine {
    name: Option<String>,
    seifert_matrix: Option<IntMatrix>,
    braid: Option<String>,
}

/// One batch line: `{"name": ...}`, `{"seifert_matrix": ..., "name"?: ...}` or `{"braid": ...}`.
pub fn parse_batch_line(line: &str) -> Result<KnotSource, CliError> {
    let b: BatchLine = serde_json::from_str(line).map_err(CliError::parse)?;
    match (b.name, b.seifert_matrix, b.braid) {
        (name, Some(m), None) => Ok(KnotSource::Inline { name, seifert: SeifertMatrix::new(m).map_err(CliError::parse)? }),
        (None, None, Some(w)) => Ok(KnotSource::Braid(w)),
        (Some(n), None, None) => Ok(KnotSource::Name(n)),
        _ => Err(CliError::parse("batch line needs exactly one of name, seifert_matrix or braid")),
    }
}
