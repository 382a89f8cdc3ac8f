//! The shipped reduction scripts replay to `<u,t | t^5, t^2 u t u^-e>`.

use std::path::PathBuf;

use fib_core::presentations::{
    build_extension, build_reduced_target, verify_tietze_script, Family, TietzeScript, TietzeStep, Verdict, Word,
};

fn script(family: &str, k: u32) -> TietzeScript {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "data", "tietze", &format!("{family}_k{k}.json")].iter().collect();
    TietzeScript::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

#[test]
fn shipped_scripts_validate() {
    for k in 0..4 {
        for (name, family) in [("seven", Family::Seven), ("eight", Family::Eight)] {
            let s = script(name, k);
            let start = build_extension(k, family);
            let target = build_reduced_target(family.exponent(k));
            assert!(s.start.as_ref().unwrap().equivalent_up_to_cyclic(&start), "{name} k={k} embedded start");
            assert!(s.target.as_ref().unwrap().equivalent_up_to_cyclic(&target), "{name} k={k} embedded target");
            let report = verify_tietze_script(&start, &s, &target);
            assert_eq!(report.verdict, Verdict::Valid, "{name} k={k}");
            assert_eq!(report.trace.len(), s.steps.len() + 1);
        }
    }
}

#[test]
fn replay_is_deterministic() {
    let s = script("seven", 2);
    let start = build_extension(2, Family::Seven);
    let target = build_reduced_target(17);
    let a = verify_tietze_script(&start, &s, &target);
    let b = verify_tietze_script(&start, &s, &target);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
}

#[test]
fn mutated_rewrite_rejected_at_its_step() {
    let mut s = script("seven", 0);
    // t^-2 -> t^2 is not a consequence of t^5.
    s.steps[3] = TietzeStep::SubstituteInRelator {
        index: 1,
        from: Word::parse("t^-2").unwrap(),
        to: Word::parse("t^2").unwrap(),
        by: 0,
    };
    let report = verify_tietze_script(&build_extension(0, Family::Seven), &s, &build_reduced_target(7));
    assert!(matches!(report.verdict, Verdict::InvalidAtStep(3, _)), "{:?}", report.verdict);
    assert_eq!(report.trace.len(), 4);
}

#[test]
fn wrong_power_rejected_at_its_step() {
    let mut s = script("seven", 1);
    // t = s^3 would need 3*3 = 1 mod 5.
    s.steps[5] =
        TietzeStep::ReplaceGeneratorByWord { name: "t".into(), word: Word::parse("s^3").unwrap(), justification: 0 };
    let report = verify_tietze_script(&build_extension(1, Family::Seven), &s, &build_reduced_target(12));
    assert!(matches!(report.verdict, Verdict::InvalidAtStep(5, _)), "{:?}", report.verdict);
}

#[test]
fn wrong_family_target_rejected_at_comparison() {
    let s = script("eight", 0);
    let report = verify_tietze_script(&build_extension(0, Family::Eight), &s, &build_reduced_target(13));
    assert!(matches!(&report.verdict, Verdict::InvalidAtStep(i, _) if *i == s.steps.len()), "{:?}", report.verdict);
}
