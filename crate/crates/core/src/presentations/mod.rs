//! Words, finite presentations, cyclic presentations `F(r,n)`, the relative
//! presentation `P_n = <t,u | t^5, t^2 u t u^-n>`, and Tietze script replay.

mod tietze;
mod word;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use tietze::{verify_tietze_script, TietzeReport, TietzeScript, TietzeStep, Verdict};
pub use word::{Letter, Word};

/// Errors raised while building or parsing presentations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PresentationError {
    /// `build_fibonacci` requires `r >= 2` and `n >= 2`.
    #[error("F(r,n) needs r > 1 and n > 1, got r={r}, n={n}")]
    BadParameters { r: i64, n: i64 },
    /// A token that is not a generator name with optional integer exponent.
    #[error("malformed letter `{0}`")]
    BadLetter(String),
    /// A relator uses a generator that was not declared.
    #[error("relator {relator} uses undeclared generator `{gen}`")]
    UndeclaredGenerator { relator: usize, gen: String },
    /// Two generators share a name.
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    /// Text format error with a 1-based line number.
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
}

/// A finite presentation: generator names plus cyclically reduced relators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Builds a presentation, cyclically reducing relators and checking that
    /// every letter names a declared generator.
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self, PresentationError> {
        let mut seen = BTreeSet::new();
        for g in &generators {
            if g.is_empty() {
                return Err(PresentationError::BadLetter(String::new()));
            }
            if !seen.insert(g.clone()) {
                return Err(PresentationError::DuplicateGenerator(g.clone()));
            }
        }
        let relators: Vec<Word> = relators.iter().map(Word::cyclically_reduce).collect();
        for (i, r) in relators.iter().enumerate() {
            for l in r.letters() {
                if !seen.contains(&l.gen) {
                    return Err(PresentationError::UndeclaredGenerator { relator: i, gen: l.gen.clone() });
                }
            }
        }
        Ok(Presentation { generators, relators })
    }

    /// Parses the text format: a header `gens: x1 x2 ...` followed by one
    /// relator per line. Blank lines and lines starting with `#` are ignored.
    pub fn parse_text(text: &str) -> Result<Self, PresentationError> {
        let mut gens: Option<Vec<String>> = None;
        let mut rels = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if gens.is_none() {
                let rest = line.strip_prefix("gens:").ok_or_else(|| PresentationError::Syntax {
                    line: lineno,
                    msg: "expected header `gens: ...`".into(),
                })?;
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                for n in &names {
                    if Word::parse(n).map(|w| w.len() != 1).unwrap_or(true) || n.contains('^') {
                        return Err(PresentationError::Syntax { line: lineno, msg: format!("bad generator `{n}`") });
                    }
                }
                gens = Some(names);
                continue;
            }
            let w = Word::parse(line).map_err(|e| PresentationError::Syntax { line: lineno, msg: e.to_string() })?;
            rels.push(w);
        }
        let gens = gens.ok_or(PresentationError::Syntax { line: 1, msg: "missing `gens:` header".into() })?;
        Presentation::new(gens, rels)
    }

    /// Renders the text format accepted by [`Presentation::parse_text`].
    pub fn to_text(&self) -> String {
        let mut s = format!("gens: {}\n", self.generators.join(" "));
        for r in &self.relators {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    /// Generator names as a set.
    pub fn generator_set(&self) -> BTreeSet<String> {
        self.generators.iter().cloned().collect()
    }

    /// `true` when both presentations have the same generator set and the
    /// relators match one-to-one up to cyclic permutation and inversion.
    pub fn equivalent_up_to_cyclic(&self, other: &Presentation) -> bool {
        if self.generator_set() != other.generator_set() || self.relators.len() != other.relators.len() {
            return false;
        }
        let mut used = vec![false; other.relators.len()];
        'outer: for r in &self.relators {
            for (j, s) in other.relators.iter().enumerate() {
                if !used[j] && r.cyclic_equivalent(s) {
                    used[j] = true;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "< {} | ", self.generators.join(", "))?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, " >")
    }
}

/// Name of the `i`-th generator of a cyclic presentation (1-based).
fn x(i: usize) -> String {
    format!("x{i}")
}

/// The cyclic presentation of `F(r,n)`: generators `x1..xn` and relators
/// `x_i x_{i+1} ... x_{i+r-1} x_{i+r}^-1`, subscripts taken mod `n` in `1..=n`.
pub fn build_fibonacci(r: i64, n: i64) -> Result<Presentation, PresentationError> {
    if r < 2 || n < 2 {
        return Err(PresentationError::BadParameters { r, n });
    }
    let (r, n) = (r as usize, n as usize);
    let sub = |k: usize| (k - 1) % n + 1;
    let gens: Vec<String> = (1..=n).map(x).collect();
    let rels = (1..=n)
        .map(|i| {
            let mut letters: Vec<Letter> = (0..r).map(|j| Letter::pos(x(sub(i + j)))).collect();
            letters.push(Letter::neg(x(sub(i + r))));
            Word::new(letters)
        })
        .collect();
    Presentation::new(gens, rels)
}

/// The shift map `x_i -> x_{i+1}` (mod `n`) applied to a word over `x1..xn`.
pub fn shift_subscripts(w: &Word, n: usize) -> Word {
    Word::new(w.letters().iter().map(|l| {
        let i: usize = l.gen.trim_start_matches('x').parse().unwrap_or(0);
        Letter { gen: x(i % n + 1), inv: l.inv }
    }))
}

/// A relative presentation over the coefficient group `<t | t^5>`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelativePresentation {
    pub coefficient_relators: Vec<Word>,
    pub extra_generators: Vec<String>,
    pub mixed_relators: Vec<Word>,
    /// Non-fatal remarks, e.g. a parameter below the asphericity range.
    pub warnings: Vec<String>,
}

/// `P_n = <t,u | t^5, t^2 u t u^-n>`. Values of `n` below 7 are allowed but
/// produce a warning.
pub fn build_relative_pn(n: u32) -> RelativePresentation {
    let mut mixed = Word::power_of("t", 2);
    mixed = mixed.concat(&Word::power_of("u", 1));
    mixed = mixed.concat(&Word::power_of("t", 1));
    mixed = mixed.concat(&Word::power_of("u", -(n as i64)));
    let mut warnings = Vec::new();
    if n < 7 {
        warnings.push(format!("n = {n} is below 7; asphericity is only claimed for n >= 7"));
    }
    RelativePresentation {
        coefficient_relators: vec![Word::power_of("t", 5)],
        extra_generators: vec!["u".into()],
        mixed_relators: vec![mixed.cyclically_reduce()],
        warnings,
    }
}

impl RelativePresentation {
    /// `true` when each mixed relator has no adjacent letters from the same
    /// free factor that cancel, including across the wrap-around.
    pub fn mixed_relators_cyclically_reduced(&self) -> bool {
        self.mixed_relators.iter().all(Word::is_cyclically_reduced)
    }
}

/// Which of the two extension families reduces to `P_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `<x,t | t^5, (x t^-1)^(7+5k) x^-1 t^2>`.
    Seven,
    /// `<x,t | t^5, (x t^-1)^(8+5k) x^-1 t^3>`.
    Eight,
}

impl Family {
    /// Exponent `7+5k` or `8+5k`.
    pub fn exponent(self, k: u32) -> i64 {
        match self {
            Family::Seven => 7 + 5 * k as i64,
            Family::Eight => 8 + 5 * k as i64,
        }
    }
}

/// The two-generator presentation of the family at parameter `k`.
pub fn build_extension(k: u32, family: Family) -> Presentation {
    let e = family.exponent(k);
    let tail = match family {
        Family::Seven => 2,
        Family::Eight => 3,
    };
    let xt = Word::parse("x t^-1").expect("static word");
    let rel = xt.pow(e).concat(&Word::power_of("x", -1)).concat(&Word::power_of("t", tail));
    Presentation::new(vec!["x".into(), "t".into()], vec![Word::power_of("t", 5), rel])
        .expect("static presentation is well formed")
}

/// The target `<u,t | t^5, t^2 u t u^-e>` of the reduction for exponent `e`.
pub fn build_reduced_target(e: i64) -> Presentation {
    let rel = Word::power_of("t", 2)
        .concat(&Word::power_of("u", 1))
        .concat(&Word::power_of("t", 1))
        .concat(&Word::power_of("u", -e));
    Presentation::new(vec!["u".into(), "t".into()], vec![Word::power_of("t", 5), rel])
        .expect("static presentation is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibonacci_2_3() {
        let p = build_fibonacci(2, 3).unwrap();
        let want = ["x1 x2 x3^-1", "x2 x3 x1^-1", "x3 x1 x2^-1"];
        assert_eq!(p.generators, vec!["x1", "x2", "x3"]);
        for (r, w) in p.relators.iter().zip(want) {
            assert_eq!(r.to_string(), w);
        }
    }

    #[test]
    fn fibonacci_2_2() {
        let p = build_fibonacci(2, 2).unwrap();
        // x1 x2 x1^-1 and x2 x1 x2^-1 are stored cyclically reduced.
        assert_eq!(p.relators[0], Word::parse("x1 x2 x1^-1").unwrap().cyclically_reduce());
        assert_eq!(p.relators[0].to_string(), "x2");
        assert_eq!(p.relators[1].to_string(), "x1");
    }

    #[test]
    fn fibonacci_7_5() {
        let p = build_fibonacci(7, 5).unwrap();
        assert_eq!(p.relators.len(), 5);
        assert!(p.relators.iter().all(|r| r.len() == 8));
        assert_eq!(p.relators[0].to_string(), "x1 x2 x3 x4 x5 x1 x2 x3^-1");
    }

    #[test]
    fn fibonacci_rejects_small_parameters() {
        assert!(build_fibonacci(1, 5).is_err());
        assert!(build_fibonacci(3, 1).is_err());
    }

    #[test]
    fn relative_pn_letter_counts() {
        let p = build_relative_pn(7);
        let r = &p.mixed_relators[0];
        assert_eq!(r.len(), 11);
        assert_eq!(r.exponent_sum("t"), 3);
        assert_eq!(r.exponent_sum("u"), -6);
        assert!(p.warnings.is_empty());
        assert_eq!(build_relative_pn(8).mixed_relators[0].len(), 12);
        assert_eq!(build_relative_pn(5).warnings.len(), 1);
        assert!(p.mixed_relators_cyclically_reduced());
    }

    #[test]
    fn extensions() {
        let p = build_extension(0, Family::Seven);
        assert_eq!(p.relators[1], Word::parse("x t^-1").unwrap().pow(7).concat(&Word::parse("x^-1 t^2").unwrap()));
        assert_eq!(build_extension(1, Family::Seven).relators[1].len(), 27);
        assert_eq!(build_extension(0, Family::Eight).relators[1].exponent_sum("t"), -5);
    }

    #[test]
    fn text_round_trip() {
        let p = build_fibonacci(3, 4).unwrap();
        let q = Presentation::parse_text(&p.to_text()).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn text_errors_carry_lines() {
        let e = Presentation::parse_text("gens: a b\na b\nc\n").unwrap_err();
        assert!(matches!(e, PresentationError::UndeclaredGenerator { relator: 1, .. }));
        let e = Presentation::parse_text("a b\n").unwrap_err();
        assert!(matches!(e, PresentationError::Syntax { line: 1, .. }));
        let e = Presentation::parse_text("gens: a\n\na^x\n").unwrap_err();
        assert!(matches!(e, PresentationError::Syntax { line: 3, .. }));
    }
}
