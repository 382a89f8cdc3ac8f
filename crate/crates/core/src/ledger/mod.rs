//! Inequality ledgers: transcribed curvature bounds, deficit rows and
//! closed-form thresholds, each recomputed exactly and compared with its
//! claim.
//!
//! A ledger is a JSON-lines file. Values are integers in multiples of π/30
//! unless written with `pi`. Symbolic terms such as `d1`, `d2` stand for a
//! split of a fixed total (see [`DEFAULT_PAIRS`]) and only the total enters
//! any bound.

mod check;
mod entry;

use std::path::Path;

use thiserror::Error;

pub use check::{
    check_entries, check_entry, substitute, symbolic_groups, term_total, EntryReport, LedgerReport, PairGroup, Verdict,
    DEFAULT_PAIRS,
};
pub use entry::{
    parse_degree, parse_ledger, Adjust, Claim, EntryKind, FormulaName, LedgerEntry, Relation, Stated, Term,
};

/// Errors reading a ledger.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LedgerError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Io(String),
}

/// Parses and checks ledger text.
pub fn check_str(text: &str) -> Result<LedgerReport, LedgerError> {
    Ok(check_entries(&parse_ledger(text)?))
}

/// Reads, parses and checks a ledger file.
pub fn check_file(path: impl AsRef<Path>) -> Result<LedgerReport, LedgerError> {
    let p = path.as_ref();
    let text = std::fs::read_to_string(p).map_err(|e| LedgerError::Io(format!("{}: {e}", p.display())))?;
    check_str(&text)
}

/// Renders the findings of several checked ledgers as a Markdown document,
/// one section per ledger in the order given. Each line names the entry, its
/// source locator and the finding.
pub fn findings_markdown(reports: &[(&str, &LedgerReport)]) -> String {
    let mut out = String::from("# Ledger findings\n\n");
    out.push_str("Generated by `fib ledger findings`. Every entry listed here checks Verified; the lines record\n");
    out.push_str("where the printed arithmetic or notation differs from the recomputation or the transcription.\n");
    for (name, report) in reports {
        let rows: Vec<&EntryReport> = report.entries.iter().filter(|e| !e.findings.is_empty()).collect();
        out.push_str(&format!("\n## {name}\n\n"));
        if rows.is_empty() {
            out.push_str("No findings.\n");
            continue;
        }
        for e in rows {
            for f in &e.findings {
                out.push_str(&format!("- `{}` ({}): {f}\n", e.id, e.src));
            }
        }
    }
    out
}
