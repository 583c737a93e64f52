//! Truth-table corpus files.
//!
//! One hex truth table per line. `#` starts a comment, blank lines are
//! skipped, and an optional `n=<k>` line before the first table declares the
//! arity:
//!
//! ```text
//! # three functions
//! n=3
//! E8
//! 17
//! AA
//! ```

use std::io::Write;

use npn_core::{Error, TruthTable};

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub vars: usize,
    pub tables: Vec<TruthTable>,
}

/// Parses corpus text. `vars` is the arity given on the command line, if
/// any; it must agree with the header when both are present. `origin` names
/// the source in error messages.
pub fn parse(text: &str, vars: Option<usize>, origin: &str) -> Result<Corpus> {
    let err = |line: usize, source: Error| CliError::Corpus {
        path: origin.to_string(),
        line,
        source,
    };
    let mut declared = vars;
    let mut tables = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(value) = line.strip_prefix("n=") {
            let header: usize = value.trim().parse().map_err(|_| {
                CliError::Usage(format!("{origin}:{line_no}: malformed header {line:?}"))
            })?;
            if !tables.is_empty() {
                return Err(CliError::Usage(format!(
                    "{origin}:{line_no}: arity header after the first table"
                )));
            }
            if let Some(flag) = vars {
                if flag != header {
                    return Err(CliError::Usage(format!(
                        "{origin}:{line_no}: header n={header} conflicts with --n {flag}"
                    )));
                }
            }
            declared = Some(header);
            continue;
        }
        let n = declared.ok_or_else(|| {
            CliError::Usage(format!(
                "{origin}: no arity given (add an n=<k> header or pass --n)"
            ))
        })?;
        tables.push(TruthTable::from_hex(line, n).map_err(|e| err(line_no, e))?);
    }
    let vars = declared.ok_or_else(|| {
        CliError::Usage(format!(
            "{origin}: no arity given (add an n=<k> header or pass --n)"
        ))
    })?;
    Ok(Corpus { vars, tables })
}

/// Writes a corpus with an optional comment line, the arity header and one
/// table per line.
pub fn write(
    out: &mut impl Write,
    vars: usize,
    comment: Option<&str>,
    tables: impl IntoIterator<Item = TruthTable>,
) -> std::io::Result<()> {
    if let Some(c) = comment {
        writeln!(out, "# {c}")?;
    }
    writeln!(out, "n={vars}")?;
    for t in tables {
        writeln!(out, "{t}")?;
    }
    Ok(())
}
