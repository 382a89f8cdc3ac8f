//! Independent engines for group orders and abelianizations, and the
//! finite-order classification of `F(r,n)` checked against them.

mod coset;
mod smith;

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::presentations::{build_fibonacci, Presentation};

pub use coset::{coset_enumerate, coset_enumerate_with, Enumeration, EnumerationReport, Strategy, DEFAULT_MAX_COSETS};
pub use smith::{invariant_factors, IntegerMatrix};

/// Exponent-sum relation matrix: one row per relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> IntegerMatrix {
    let rows: Vec<Vec<i64>> =
        p.relators.iter().map(|r| p.generators.iter().map(|g| r.exponent_sum(g)).collect()).collect();
    if rows.is_empty() {
        return IntegerMatrix::zeros(0, p.generators.len());
    }
    IntegerMatrix::from_rows(&rows)
}

/// Nonunit invariant factors of the abelianization; `0` is an infinite cyclic factor.
pub fn abelianization(p: &Presentation) -> Vec<BigInt> {
    invariant_factors(&relation_matrix(p))
}

/// Order of the abelianization, or `None` when it is infinite.
pub fn abelianization_order(p: &Presentation) -> Option<BigInt> {
    let f = abelianization(p);
    if f.iter().any(|d| *d == BigInt::from(0)) {
        None
    } else {
        Some(f.iter().product())
    }
}

/// One finite case of the classification of `F(r,n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCase {
    pub r: i64,
    pub n: i64,
    pub expected: u64,
    /// Which clause of the classification the case instantiates.
    pub clause: String,
}

impl TheoremCase {
    fn new(r: i64, n: i64, expected: u64, clause: &str) -> Self {
        TheoremCase { r, n, expected, clause: clause.to_string() }
    }
}

/// Order predicted by the classification for `F(r,n)`, or `None` when the
/// group is infinite.
pub fn classified_order(r: i64, n: i64) -> Option<u64> {
    let sporadic: &[(i64, i64, u64)] =
        &[(2, 2, 1), (2, 3, 8), (2, 4, 5), (2, 5, 11), (2, 7, 29), (3, 2, 8), (3, 3, 2), (3, 5, 22), (3, 6, 1512)];
    if let Some(&(_, _, o)) = sporadic.iter().find(|&&(a, b, _)| a == r && b == n) {
        return Some(o);
    }
    if r < 4 || n < 2 {
        return None;
    }
    if r % n == 0 {
        return Some((r - 1) as u64);
    }
    if r % n == 1 {
        return (r as u64).checked_pow(n as u32).map(|p| p - 1);
    }
    if n == 4 && r % 4 == 2 {
        let k = (r - 2) / 4;
        let value = (4 * k + 1) * (2 * 4i64.pow(2 * k as u32) + 2 * (-4i64).pow(k as u32) + 1);
        return Some(value as u64);
    }
    None
}

/// The finite cases exercised by the acceptance suite.
pub fn acceptance_cases() -> Vec<TheoremCase> {
    vec![
        TheoremCase::new(2, 2, 1, "r=2"),
        TheoremCase::new(2, 3, 8, "r=2"),
        TheoremCase::new(2, 4, 5, "r=2"),
        TheoremCase::new(2, 5, 11, "r=2"),
        TheoremCase::new(2, 7, 29, "r=2"),
        TheoremCase::new(3, 2, 8, "r=3"),
        TheoremCase::new(3, 3, 2, "r=3"),
        TheoremCase::new(3, 5, 22, "r=3"),
        TheoremCase::new(3, 6, 1512, "r=3"),
        TheoremCase::new(4, 4, 3, "r=0 mod n"),
        TheoremCase::new(5, 4, 624, "r=1 mod n"),
        TheoremCase::new(6, 4, 125, "n=4, r=2 mod 4"),
    ]
}

/// Every finite case with `r <= max_r`, `n <= max_n` whose predicted order
/// is at most `size_cap`.
pub fn classified_cases(max_r: i64, max_n: i64, size_cap: u64) -> Vec<TheoremCase> {
    let mut out = Vec::new();
    for r in 2..=max_r {
        for n in 2..=max_n {
            if let Some(o) = classified_order(r, n) {
                if o <= size_cap {
                    let clause = match (r, n) {
                        (2, _) => "r=2",
                        (3, _) => "r=3",
                        _ if r % n == 0 => "r=0 mod n",
                        _ if r % n == 1 => "r=1 mod n",
                        _ => "n=4, r=2 mod 4",
                    };
                    out.push(TheoremCase::new(r, n, o, clause));
                }
            }
        }
    }
    out
}

/// Outcome of one case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    Pass,
    Fail,
    Skipped,
}

/// Per-case report row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub r: i64,
    pub n: i64,
    pub expected: u64,
    pub got: Option<u64>,
    pub status: CaseStatus,
    pub cosets_defined: usize,
    pub ms: u128,
    /// Nonunit abelian invariants, as decimal strings.
    pub abelian_invariants: Vec<String>,
    /// `|ab|` divides the enumerated order. `None` when not applicable.
    pub ab_divides_order: Option<bool>,
}

/// Summary over all cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub cases: Vec<CaseReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl TheoremReport {
    /// `true` when no case failed.
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Enumerates every case whose expected order is at most `size_cap`, in
/// parallel, and compares orders exactly.
pub fn verify_theorem_1_1(cases: &[TheoremCase], max_cosets: usize, size_cap: u64) -> TheoremReport {
    let rows: Vec<CaseReport> = cases
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let p = match build_fibonacci(c.r, c.n) {
                Ok(p) => p,
                Err(_) => {
                    return CaseReport {
                        r: c.r,
                        n: c.n,
                        expected: c.expected,
                        got: None,
                        status: CaseStatus::Fail,
                        cosets_defined: 0,
                        ms: 0,
                        abelian_invariants: Vec::new(),
                        ab_divides_order: None,
                    }
                }
            };
            let ab = abelianization(&p);
            let ab_order = abelianization_order(&p);
            if c.expected > size_cap {
                return CaseReport {
                    r: c.r,
                    n: c.n,
                    expected: c.expected,
                    got: None,
                    status: CaseStatus::Skipped,
                    cosets_defined: 0,
                    ms: 0,
                    abelian_invariants: ab.iter().map(BigInt::to_string).collect(),
                    ab_divides_order: None,
                };
            }
            let rep = coset_enumerate_with(&p, max_cosets, Strategy::Felsch);
            let got = match rep.result {
                Enumeration::Finite(n) => Some(n),
                Enumeration::Overflow => None,
            };
            let divides = match (got, &ab_order) {
                (Some(g), Some(a)) => Some((BigInt::from(g) % a) == BigInt::from(0)),
                _ => None,
            };
            CaseReport {
                r: c.r,
                n: c.n,
                expected: c.expected,
                got,
                status: if got == Some(c.expected) { CaseStatus::Pass } else { CaseStatus::Fail },
                cosets_defined: rep.cosets_defined,
                ms: start.elapsed().as_millis(),
                abelian_invariants: ab.iter().map(BigInt::to_string).collect(),
                ab_divides_order: divides,
            }
        })
        .collect();
    let count = |s| rows.iter().filter(|r| r.status == s).count();
    TheoremReport {
        passed: count(CaseStatus::Pass),
        failed: count(CaseStatus::Fail),
        skipped: count(CaseStatus::Skipped),
        cases: rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(abelianization(&build_fibonacci(2, 3).unwrap()), ints(&[2, 2]));
        assert_eq!(abelianization(&build_fibonacci(2, 4).unwrap()), ints(&[5]));
        let comm = Presentation::new(
            vec!["a".into(), "b".into()],
            vec![crate::presentations::Word::parse("a b a^-1 b^-1").unwrap()],
        )
        .unwrap();
        assert_eq!(abelianization(&comm), ints(&[0, 0]));
    }

    #[test]
    fn classified_order_formulas() {
        assert_eq!(classified_order(6, 4), Some(125));
        assert_eq!(classified_order(10, 4), Some(4905));
        assert_eq!(classified_order(5, 4), Some(624));
        assert_eq!(classified_order(4, 4), Some(3));
        assert_eq!(classified_order(7, 5), None);
        assert_eq!(classified_order(8, 5), None);
        assert_eq!(classified_order(2, 6), None);
    }

    #[test]
    fn small_cases_pass() {
        let cases: Vec<TheoremCase> = acceptance_cases().into_iter().filter(|c| c.expected < 100).collect();
        let rep = verify_theorem_1_1(&cases, DEFAULT_MAX_COSETS, 10_000);
        assert!(rep.all_passed(), "{rep:?}");
    }
}
