//! The shipped ledgers check Verified, the findings document is current,
//! and symbolic splits never change a verdict.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use fib_core::ledger::{
    check_entry, check_file, check_str, findings_markdown, parse_ledger, substitute, symbolic_groups, LedgerReport,
    Verdict,
};
use proptest::prelude::*;

fn data_dir() -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "data", "ledger"].iter().collect()
}

fn shipped() -> Vec<(String, LedgerReport)> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(data_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "ledger"))
        .collect();
    files.sort();
    files.iter().map(|f| (f.file_name().unwrap().to_string_lossy().into_owned(), check_file(f).unwrap())).collect()
}

#[test]
fn shipped_ledgers_verify() {
    let t = Instant::now();
    let reports = shipped();
    assert_eq!(reports.len(), 6);
    for (name, r) in &reports {
        let bad: Vec<_> = r.entries.iter().filter(|e| e.verdict != Verdict::Verified).map(|e| &e.id).collect();
        assert!(bad.is_empty(), "{name}: {bad:?}");
        assert!(r.verified > 0, "{name} is empty");
    }
    assert!(t.elapsed() < Duration::from_secs(30));
}

#[test]
fn required_rows_present() {
    let reports = shipped();
    let ids: Vec<&str> = reports.iter().flat_map(|(_, r)| r.entries.iter().map(|e| e.id.as_str())).collect();
    for id in [
        "curv.quad.3445",
        "curv.hex.334444",
        "def3.i.4.3",
        "def3.i.3.3",
        "def3.i.3.3.bracket",
        "thr.typeA.nonpos",
        "thr.typeA.pos",
        "thr.dagger.nonpos",
        "thr.dagger.pos",
        "thr.delta0",
    ] {
        assert!(ids.contains(&id), "missing {id}");
    }
    let quad = ids.iter().filter(|i| i.starts_with("curv.quad.")).count();
    let hex = ids.iter().filter(|i| i.starts_with("curv.hex.")).count();
    assert_eq!((quad, hex), (21, 8));
    for case in 1..=12 {
        assert!(ids.iter().any(|i| i.starts_with(&format!("A{case}."))), "type A case {case}");
    }
    for (letter, n) in [("a", 6), ("b", 16), ("c", 8)] {
        for case in 1..=n {
            assert!(ids.iter().any(|i| i.starts_with(&format!("{letter}{case}."))), "case {letter}{case}");
        }
    }
}

#[test]
fn findings_document_is_current() {
    let reports = shipped();
    let refs: Vec<(&str, &LedgerReport)> = reports.iter().map(|(n, r)| (n.as_str(), r)).collect();
    let want = findings_markdown(&refs);
    let have = std::fs::read_to_string(data_dir().join("FINDINGS.md")).unwrap();
    assert_eq!(have, want, "regenerate with `fib ledger findings crates/core/data/ledger --out .../FINDINGS.md`");
}

#[test]
fn empty_ledger_has_no_entries() {
    let r = check_str("").unwrap();
    assert_eq!((r.verified, r.refuted, r.malformed, r.entries.len()), (0, 0, 0, 0));
    assert!(r.ok());
}

#[test]
fn threshold_boundaries() {
    let cases = [
        (r#"{"id":"a","kind":"formula","formula":"type_a","range":[9,9],"claim":"<=0","src":"s"}"#, Verdict::Refuted),
        (r#"{"id":"b","kind":"formula","formula":"dagger","range":[9,9],"claim":"<=0","src":"s"}"#, Verdict::Refuted),
        (r#"{"id":"c","kind":"formula","formula":"delta0","range":[1,3],"claim":"=pi","src":"s"}"#, Verdict::Refuted),
    ];
    for (line, want) in cases {
        assert_eq!(check_str(line).unwrap().entries[0].verdict, want, "{line}");
    }
}

fn all_entries() -> Vec<fib_core::ledger::LedgerEntry> {
    let mut out = Vec::new();
    for e in std::fs::read_dir(data_dir()).unwrap() {
        let p = e.unwrap().path();
        if p.extension().is_some_and(|x| x == "ledger") {
            out.extend(parse_ledger(&std::fs::read_to_string(p).unwrap()).unwrap());
        }
    }
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Any concrete split of each symbolic group gives the same verdict and
    /// value as the symbolic entry.
    #[test]
    fn symbolic_split_invariance(idx in any::<prop::sample::Index>(), seeds in prop::collection::vec(any::<u32>(), 8)) {
        let entries = all_entries();
        let symbolic: Vec<_> = entries.iter().filter(|e| !symbolic_groups(&e.cv, &e.pairs).unwrap().is_empty()).collect();
        let e = symbolic[idx.index(symbolic.len())];
        let mut values = BTreeMap::new();
        for (i, (g, _)) in symbolic_groups(&e.cv, &e.pairs).unwrap().iter().enumerate() {
            let mut left = g.sum;
            for (j, m) in g.members.iter().enumerate() {
                let v = if j + 1 == g.members.len() { left } else { (seeds[(i + j) % seeds.len()] as i64) % (left + 1) };
                left -= v;
                values.insert(m.clone(), v);
            }
        }
        let concrete = substitute(e, &values);
        let a = check_entry(e);
        let b = check_entry(&concrete);
        prop_assert_eq!(a.verdict, b.verdict, "{}", e.id);
        prop_assert_eq!(a.value, b.value, "{}", e.id);
    }
}
