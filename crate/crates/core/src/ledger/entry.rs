//! Ledger entries as stored in JSON lines, and their parsed forms.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::LedgerError;
use crate::curvature::Angle;

/// What an entry asserts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryKind {
    /// `curvature(degrees) + Σ cv + Σ adjust` against the claim.
    #[default]
    Bound,
    /// The deficit formula over `degrees` and `kappa`.
    Deficit,
    /// `Σ cv + Σ adjust` against the claim, no curvature term.
    Sum,
    /// A closed-form bound evaluated over a range of its argument.
    Formula,
}

/// One cv or κ term: a literal multiple of π/30 or a symbolic pair member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Term {
    Lit(i64),
    Sym(String),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Lit(v) => write!(f, "{v}"),
            Term::Sym(s) => write!(f, "{s}"),
        }
    }
}

/// A signed constant in multiples of π/30 with its justification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Adjust {
    pub v: i64,
    pub note: String,
}

/// Parts of the printed inequality, in multiples of π/30, used to flag
/// printed arithmetic that disagrees with the recomputation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Stated {
    /// Printed curvature term; must equal the recomputed curvature.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<i64>,
    /// Printed cv total; the recomputed total must not exceed it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cv: Option<i64>,
}

/// Closed forms available to [`EntryKind::Formula`] entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaName {
    /// `(2-k)π + k(2π/3) + k(2π/15)`.
    TypeA,
    /// `π(2 - n₂/5)`.
    Dagger,
    /// `(2-k)π + k(2π/3) + k(π/3)`.
    Delta0,
}

/// One line of a ledger file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LedgerEntry {
    pub id: String,
    #[serde(default)]
    pub kind: EntryKind,
    /// Degree lower bounds: `"3"`, `"4"`, `"5+"`, `"6+"`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degrees: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cv: Vec<Term>,
    /// A printed cv total standing in for the per-edge vector.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cv_total: Option<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub kappa: Vec<Term>,
    /// Pair sums overriding the defaults: a letter such as `"d"`, or a
    /// group written `"x1+y1"`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub pairs: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub adjust: Vec<Adjust>,
    /// `<0`, `<=0`, `=12`, `>=17`, `=-13pi/30`, ...
    pub claim: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub formula: Option<FormulaName>,
    /// Inclusive argument range for formula entries.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub range: Option<(u64, u64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stated: Option<Stated>,
    /// The printed text where the transcription had to differ from it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed: Option<String>,
    pub src: String,
}

/// Comparison operator of a claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Lt,
    Le,
    Eq,
    Ge,
    Gt,
}

impl Relation {
    pub fn holds(self, lhs: &Angle, rhs: &Angle) -> bool {
        match self {
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Eq => lhs == rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Gt => ">",
        }
    }
}

/// A parsed claim. Bare integers are multiples of π/30.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Claim {
    pub rel: Relation,
    pub value: Angle,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.rel.symbol(), self.value)
    }
}

impl FromStr for Claim {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim().replace('≤', "<=").replace('≥', ">=");
        let (rel, rest) =
            [("<=", Relation::Le), (">=", Relation::Ge), ("<", Relation::Lt), (">", Relation::Gt), ("=", Relation::Eq)]
                .into_iter()
                .find_map(|(p, r)| t.strip_prefix(p).map(|rest| (r, rest.trim().to_string())))
                .ok_or_else(|| format!("claim `{s}` has no relation"))?;
        let value = if rest.contains("pi") {
            rest.parse::<Angle>().map_err(|e| e.to_string())?
        } else {
            Angle::thirtieths(rest.parse::<i64>().map_err(|_| format!("claim `{s}` has no value"))?)
        };
        Ok(Claim { rel, value })
    }
}

/// Parses a degree bound such as `"4"` or `"5+"`, returning the bound.
pub fn parse_degree(s: &str) -> Result<u32, String> {
    let t = s.trim();
    let t = t.strip_suffix('+').unwrap_or(t);
    let d: u32 = t.parse().map_err(|_| format!("bad degree `{s}`"))?;
    if d < 3 {
        return Err(format!("degree {d} is below 3"));
    }
    Ok(d)
}

/// Parses a ledger file: one JSON object per non-blank line. Ids must be
/// unique.
pub fn parse_ledger(text: &str) -> Result<Vec<LedgerEntry>, LedgerError> {
    let mut out: Vec<LedgerEntry> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let e: LedgerEntry =
            serde_json::from_str(line).map_err(|err| LedgerError::Parse { line: i + 1, msg: err.to_string() })?;
        if !seen.insert(e.id.clone()) {
            return Err(LedgerError::Parse { line: i + 1, msg: format!("duplicate id `{}`", e.id) });
        }
        out.push(e);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claims() {
        assert_eq!("<0".parse::<Claim>().unwrap(), Claim { rel: Relation::Lt, value: Angle::zero() });
        assert_eq!("= 12".parse::<Claim>().unwrap().value, Angle::new(2, 5));
        assert_eq!("=-13pi/30".parse::<Claim>().unwrap().value, Angle::new(-13, 30));
        assert_eq!("≤0".parse::<Claim>().unwrap().rel, Relation::Le);
        assert!("0".parse::<Claim>().is_err());
        assert!("<x".parse::<Claim>().is_err());
    }

    #[test]
    fn degrees() {
        assert_eq!(parse_degree("5+"), Ok(5));
        assert_eq!(parse_degree("3"), Ok(3));
        assert!(parse_degree("2").is_err());
        assert!(parse_degree("x").is_err());
    }

    #[test]
    fn parse_errors_carry_lines() {
        let text = "{\"id\":\"a\",\"claim\":\"<0\",\"src\":\"s\"}\n\n{\"id\":\"a\",\"claim\":\"<0\",\"src\":\"s\"}\n";
        assert!(matches!(parse_ledger(text), Err(LedgerError::Parse { line: 3, .. })));
        assert!(matches!(parse_ledger("{\"id\":1}"), Err(LedgerError::Parse { line: 1, .. })));
        assert!(parse_ledger("").unwrap().is_empty());
    }
}
