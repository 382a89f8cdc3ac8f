//! Evaluation of ledger entries.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::entry::{parse_degree, Claim, EntryKind, FormulaName, LedgerEntry, Term};
use crate::curvature::{curvature, dagger_bound, delta0_bound, type_a_bound, Angle};

/// Pair sums that apply unless an entry overrides them.
pub const DEFAULT_PAIRS: [(&str, i64); 7] = [("a", 7), ("b", 8), ("c", 9), ("d", 10), ("e", 11), ("f", 12), ("h", 14)];

/// Outcome of one entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", content = "reason")]
pub enum Verdict {
    Verified,
    Refuted,
    Malformed(String),
}

/// Result of checking one entry. `value` is the recomputed left-hand side
/// (for formula entries, the value at the first failing argument).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryReport {
    pub id: String,
    pub src: String,
    pub verdict: Verdict,
    pub value: Option<Angle>,
    pub claim: String,
    /// Places where the printed arithmetic differs from the recomputation.
    pub findings: Vec<String>,
}

/// Result of checking a whole ledger, entries sorted by id.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerReport {
    pub verified: usize,
    pub refuted: usize,
    pub malformed: usize,
    pub entries: Vec<EntryReport>,
}

impl LedgerReport {
    /// `true` when nothing is refuted or malformed.
    pub fn ok(&self) -> bool {
        self.refuted == 0 && self.malformed == 0
    }

    /// `(id, finding)` for every finding, in id order.
    pub fn findings(&self) -> Vec<(String, String)> {
        self.entries.iter().flat_map(|e| e.findings.iter().map(|f| (e.id.clone(), f.clone()))).collect()
    }
}

/// A group of symbols whose values sum to a fixed total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairGroup {
    pub members: Vec<String>,
    pub sum: i64,
}

fn group_of(sym: &str, overrides: &BTreeMap<String, i64>) -> Result<PairGroup, String> {
    for (k, &sum) in overrides {
        if k.contains('+') {
            let members: Vec<String> = k.split('+').map(|m| m.trim().to_string()).collect();
            if members.iter().any(|m| m == sym) {
                return Ok(PairGroup { members, sum });
            }
        }
    }
    let letter = sym.trim_end_matches(|c: char| c.is_ascii_digit());
    if letter.is_empty() || letter.len() == sym.len() {
        return Err(format!("symbol `{sym}` has no index"));
    }
    let sum = overrides
        .get(letter)
        .copied()
        .or_else(|| DEFAULT_PAIRS.iter().find(|(l, _)| *l == letter).map(|p| p.1))
        .ok_or_else(|| format!("no pair sum declared for `{sym}`"))?;
    Ok(PairGroup { members: vec![format!("{letter}1"), format!("{letter}2")], sum })
}

/// Groups used by `terms`, each with its multiplicity. Every member of a
/// group must occur equally often.
pub fn symbolic_groups(terms: &[Term], overrides: &BTreeMap<String, i64>) -> Result<Vec<(PairGroup, usize)>, String> {
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for t in terms {
        if let Term::Sym(s) = t {
            *counts.entry(s.as_str()).or_default() += 1;
        }
    }
    let mut groups: Vec<(PairGroup, usize)> = Vec::new();
    for &sym in counts.keys() {
        let g = group_of(sym, overrides)?;
        if groups.iter().any(|(h, _)| h.members == g.members) {
            continue;
        }
        if g.sum < 0 {
            return Err(format!("negative pair sum for `{sym}`"));
        }
        let mult = counts[sym];
        for m in &g.members {
            let c = counts.get(m.as_str()).copied().unwrap_or(0);
            if c != mult {
                return Err(format!("symbol `{sym}` is unpaired: `{m}` occurs {c} times, expected {mult}"));
            }
        }
        groups.push((g, mult));
    }
    Ok(groups)
}

/// Sum of `terms` in multiples of π/30. Symbols contribute their group sum
/// once per full occurrence of the group.
pub fn term_total(terms: &[Term], overrides: &BTreeMap<String, i64>) -> Result<i64, String> {
    let mut total = 0i64;
    for t in terms {
        if let Term::Lit(v) = t {
            if *v < 0 {
                return Err(format!("negative literal {v}"));
            }
            total += v;
        }
    }
    for (g, mult) in symbolic_groups(terms, overrides)? {
        total += g.sum * mult as i64;
    }
    Ok(total)
}

/// Replaces symbols by literals from `values`, leaving the rest alone.
pub fn substitute(e: &LedgerEntry, values: &BTreeMap<String, i64>) -> LedgerEntry {
    let sub = |ts: &[Term]| -> Vec<Term> {
        ts.iter()
            .map(|t| match t {
                Term::Sym(s) => values.get(s).map_or_else(|| t.clone(), |&v| Term::Lit(v)),
                lit => lit.clone(),
            })
            .collect()
    };
    LedgerEntry { cv: sub(&e.cv), kappa: sub(&e.kappa), ..e.clone() }
}

fn degrees(e: &LedgerEntry) -> Result<Vec<u32>, String> {
    e.degrees.iter().map(|d| parse_degree(d)).collect()
}

fn adjust_total(e: &LedgerEntry) -> i64 {
    e.adjust.iter().map(|a| a.v).sum()
}

struct Evaluated {
    value: Angle,
    findings: Vec<String>,
    /// Formula entries verify per argument; others compare `value`.
    failed: Option<bool>,
}

fn stated_findings(e: &LedgerEntry, c: Option<&Angle>, cv_total: i64, out: &mut Vec<String>) {
    let Some(st) = &e.stated else { return };
    if let (Some(sc), Some(c)) = (st.c, c) {
        if Angle::thirtieths(sc) != *c {
            out.push(format!("printed curvature term {sc}pi/30, recomputed {c}"));
        }
    }
    if let Some(scv) = st.cv {
        if cv_total > scv {
            out.push(format!("printed cv total {scv}pi/30, recomputed {cv_total}pi/30"));
        }
    }
}

fn evaluate(e: &LedgerEntry, claim: &Claim) -> Result<Evaluated, String> {
    let mut findings = Vec::new();
    if let Some(p) = &e.printed {
        findings.push(format!("transcription differs from printed text: {p}"));
    }
    let adj = adjust_total(e);
    match e.kind {
        EntryKind::Bound => {
            if !e.kappa.is_empty() || e.formula.is_some() {
                return Err("bound entries take degrees and cv only".into());
            }
            let degs = degrees(e)?;
            if degs.is_empty() {
                return Err("bound entry without degrees".into());
            }
            if !e.cv.is_empty() && e.cv.len() != degs.len() {
                return Err(format!("cv has {} terms for {} vertices", e.cv.len(), degs.len()));
            }
            let c = curvature(&degs).map_err(|x| x.to_string())?;
            let cv = match e.cv_total {
                Some(t) if e.cv.is_empty() && t >= 0 => t,
                Some(_) => return Err("cv_total must be nonnegative and excludes cv".into()),
                None => term_total(&e.cv, &e.pairs)?,
            };
            stated_findings(e, Some(&c), cv, &mut findings);
            Ok(Evaluated { value: c + Angle::thirtieths(cv + adj), findings, failed: None })
        }
        EntryKind::Sum => {
            if !e.degrees.is_empty() || !e.kappa.is_empty() || e.formula.is_some() || e.cv_total.is_some() {
                return Err("sum entries take cv only".into());
            }
            let cv = term_total(&e.cv, &e.pairs)?;
            stated_findings(e, None, cv, &mut findings);
            Ok(Evaluated { value: Angle::thirtieths(cv + adj), findings, failed: None })
        }
        EntryKind::Deficit => {
            if !e.cv.is_empty() || e.formula.is_some() || e.cv_total.is_some() {
                return Err("deficit entries take degrees and kappa only".into());
            }
            let degs = degrees(e)?;
            if degs.is_empty() || e.kappa.len() != degs.len() + 1 {
                return Err(format!(
                    "deficit needs one more kappa than degrees, got {} and {}",
                    e.kappa.len(),
                    degs.len()
                ));
            }
            let kappa = term_total(&e.kappa, &e.pairs)?;
            // Each vertex contributes 2π/3 - 2π/d; each κ slot carries 2π/15.
            let mut v = Angle::thirtieths(4 * e.kappa.len() as i64 - kappa + adj);
            for &d in &degs {
                v += Angle::new(2, 3) - Angle::new(2, i64::from(d));
            }
            stated_findings(e, None, kappa, &mut findings);
            Ok(Evaluated { value: v, findings, failed: None })
        }
        EntryKind::Formula => {
            let f = e.formula.ok_or("formula entry without `formula`")?;
            let (lo, hi) = e.range.ok_or("formula entry without `range`")?;
            if lo > hi || !e.degrees.is_empty() || !e.cv.is_empty() || !e.kappa.is_empty() || e.cv_total.is_some() {
                return Err("formula entries take formula and range only".into());
            }
            let eval = |k: u64| match f {
                FormulaName::TypeA => type_a_bound(k),
                FormulaName::Dagger => dagger_bound(k),
                FormulaName::Delta0 => delta0_bound(k),
            };
            let adj = Angle::thirtieths(adj);
            for k in lo..=hi {
                let v = eval(k) + adj.clone();
                if !claim.rel.holds(&v, &claim.value) {
                    findings.push(format!("fails at argument {k}"));
                    return Ok(Evaluated { value: v, findings, failed: Some(true) });
                }
            }
            Ok(Evaluated { value: eval(hi) + adj, findings, failed: Some(false) })
        }
    }
}

/// Checks one entry.
pub fn check_entry(e: &LedgerEntry) -> EntryReport {
    let mut r = EntryReport {
        id: e.id.clone(),
        src: e.src.clone(),
        verdict: Verdict::Verified,
        value: None,
        claim: e.claim.clone(),
        findings: Vec::new(),
    };
    let claim = match e.claim.parse::<Claim>() {
        Ok(c) => c,
        Err(msg) => {
            r.verdict = Verdict::Malformed(msg);
            return r;
        }
    };
    match evaluate(e, &claim) {
        Err(msg) => r.verdict = Verdict::Malformed(msg),
        Ok(ev) => {
            let ok = match ev.failed {
                Some(failed) => !failed,
                None => claim.rel.holds(&ev.value, &claim.value),
            };
            r.verdict = if ok { Verdict::Verified } else { Verdict::Refuted };
            r.value = Some(ev.value);
            r.findings = ev.findings;
        }
    }
    r
}

/// Checks entries in parallel; the report is sorted by id.
pub fn check_entries(entries: &[LedgerEntry]) -> LedgerReport {
    let mut reports: Vec<EntryReport> = entries.par_iter().map(check_entry).collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    let mut out = LedgerReport::default();
    for r in &reports {
        match r.verdict {
            Verdict::Verified => out.verified += 1,
            Verdict::Refuted => out.refuted += 1,
            Verdict::Malformed(_) => out.malformed += 1,
        }
    }
    out.entries = reports;
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ledger::parse_ledger;

    fn entry(json: &str) -> LedgerEntry {
        parse_ledger(json).unwrap().remove(0)
    }

    fn verdict(json: &str) -> Verdict {
        check_entry(&entry(json)).verdict
    }

    #[test]
    fn octagon_with_three_high_vertices() {
        let e = entry(
            r#"{"id":"x","degrees":["3","3","3","3","3","4","4","4"],"cv":[4,0,6,"e1","e2",6,0,6],"claim":"<0","src":"t"}"#,
        );
        let r = check_entry(&e);
        assert_eq!(r.verdict, Verdict::Verified);
        // -35 + 33 in thirtieths.
        assert_eq!(r.value, Some(Angle::thirtieths(-2)));
    }

    #[test]
    fn twelve_gon_example() {
        let r = check_entry(&entry(
            r#"{"id":"x","degrees":["3","3","3","3","3","3","3","3","3","3","3","3"],"cv":[10,10,0,0,6,0,10,10,0,0,0,0],"claim":"<0","src":"t"}"#,
        ));
        assert_eq!(r.verdict, Verdict::Verified);
        assert_eq!(r.value, Some(Angle::thirtieths(-60 + 46)));
    }

    #[test]
    fn positive_square_is_refuted() {
        let r = check_entry(&entry(r#"{"id":"x","degrees":["3","3","3","3"],"cv":[0,0,0,0],"claim":"<0","src":"t"}"#));
        assert_eq!(r.verdict, Verdict::Refuted);
        assert_eq!(r.value, Some(Angle::new(2, 3)));
    }

    #[test]
    fn unpaired_symbol_is_malformed() {
        let v = verdict(r#"{"id":"x","degrees":["3","3","3","3"],"cv":["d1",0,0,0],"claim":"<0","src":"t"}"#);
        assert!(matches!(v, Verdict::Malformed(_)));
        let v = verdict(r#"{"id":"x","degrees":["3","3","3","3"],"cv":["q1","q2",0,0],"claim":"<0","src":"t"}"#);
        assert!(matches!(v, Verdict::Malformed(_)));
    }

    #[test]
    fn ad_hoc_groups_and_repeats() {
        let p: BTreeMap<String, i64> = [("x1+y1".to_string(), 4)].into();
        let t = |s: &str| Term::Sym(s.into());
        assert_eq!(term_total(&[t("x1"), t("y1"), Term::Lit(3)], &p), Ok(7));
        assert_eq!(term_total(&[t("e1"), t("e2"), t("e1"), t("e2")], &p), Ok(22));
        assert!(term_total(&[t("e1"), t("e2"), t("e1")], &p).is_err());
    }

    #[test]
    fn deficit_rows() {
        let row = |d: &str, k: &str, adj: &str, claim: &str| {
            verdict(&format!(
                r#"{{"id":"x","kind":"deficit","degrees":{d},"kappa":{k},"adjust":{adj},"claim":"{claim}","src":"t"}}"#
            ))
        };
        assert_eq!(row(r#"["4","3"]"#, "[2,0,0]", "[]", "=15"), Verdict::Verified);
        assert_eq!(row(r#"["3","3"]"#, "[0,0,0]", "[]", "=12"), Verdict::Verified);
        assert_eq!(row(r#"["3","3"]"#, "[0,6,0]", r#"[{"v":6,"note":"redistributed"}]"#, "=12"), Verdict::Verified);
        assert_eq!(row(r#"["3","3"]"#, "[0,6,0]", r#"[{"v":3,"note":"no redistribution"}]"#, "=9"), Verdict::Verified);
        assert_eq!(row(r#"["3","3"]"#, "[0,6,0]", "[]", "=12"), Verdict::Refuted);
        assert!(matches!(row(r#"["3","3"]"#, "[0,6]", "[]", "=12"), Verdict::Malformed(_)));
    }

    #[test]
    fn formulas() {
        let f = |name: &str, lo: u64, hi: u64, claim: &str| {
            verdict(&format!(
                r#"{{"id":"x","kind":"formula","formula":"{name}","range":[{lo},{hi}],"claim":"{claim}","src":"t"}}"#
            ))
        };
        assert_eq!(f("type_a", 10, 50, "<=0"), Verdict::Verified);
        assert_eq!(f("type_a", 1, 9, ">0"), Verdict::Verified);
        assert_eq!(f("type_a", 9, 10, "<=0"), Verdict::Refuted);
        assert_eq!(f("dagger", 0, 9, ">0"), Verdict::Verified);
        assert_eq!(f("delta0", 1, 100, "=2pi"), Verdict::Verified);
    }

    #[test]
    fn stated_mismatch_is_a_finding_only() {
        let r = check_entry(&entry(
            r#"{"id":"x","degrees":["3","3","3","3","3","3","3","3"],"cv":[4,0,4,0,2,4,4,0],"stated":{"c":-20,"cv":17},"claim":"<0","src":"t"}"#,
        ));
        assert_eq!(r.verdict, Verdict::Verified);
        assert_eq!(r.findings.len(), 1);
    }

    #[test]
    fn report_is_sorted_and_counted() {
        let es = parse_ledger(concat!(
            r#"{"id":"b","degrees":["3","3","3","3"],"claim":"<0","src":"t"}"#,
            "\n",
            r#"{"id":"a","kind":"sum","cv":[4,2],"claim":"<=7","src":"t"}"#,
            "\n",
            r#"{"id":"c","kind":"sum","cv":["z1"],"claim":"<=7","src":"t"}"#,
        ))
        .unwrap();
        let r = check_entries(&es);
        assert_eq!((r.verified, r.refuted, r.malformed), (1, 1, 1));
        assert_eq!(r.entries.iter().map(|e| e.id.as_str()).collect::<Vec<_>>(), ["a", "b", "c"]);
        assert!(!r.ok());
        assert!(check_entries(&[]).ok());
    }
}
