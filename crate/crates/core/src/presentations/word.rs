//! Letters and freely reduced words over named generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::PresentationError;

/// A generator occurrence `g` or `g^-1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    /// Generator name, e.g. `x3`, `t`, `u`.
    pub gen: String,
    /// `true` for the inverse letter `g^-1`.
    pub inv: bool,
}

impl Letter {
    /// The positive letter `g`.
    pub fn pos(gen: impl Into<String>) -> Self {
        Letter { gen: gen.into(), inv: false }
    }

    /// The negative letter `g^-1`.
    pub fn neg(gen: impl Into<String>) -> Self {
        Letter { gen: gen.into(), inv: true }
    }

    /// The formal inverse of this letter.
    pub fn inverse(&self) -> Self {
        Letter { gen: self.gen.clone(), inv: !self.inv }
    }

    /// `true` when `self` and `other` cancel.
    pub fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.inv != other.inv
    }

    /// Exponent `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inv {
            write!(f, "{}^-1", self.gen)
        } else {
            write!(f, "{}", self.gen)
        }
    }
}

/// A freely reduced word. Every constructor reduces, so no value of this type
/// contains an adjacent `g g^-1` or `g^-1 g` pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word.
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// Builds a word from letters, freely reducing it.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last().is_some_and(|p| p.cancels(&l)) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Builds `g^e` for an integer exponent.
    pub fn power_of(gen: &str, e: i64) -> Self {
        let l = if e >= 0 { Letter::pos(gen) } else { Letter::neg(gen) };
        Word { letters: vec![l; e.unsigned_abs() as usize] }
    }

    /// Parses space separated letters such as `x1 x2^-1 t`. A lone `1` or an
    /// empty string is the empty word. Compact exponents `t^5` and `t^-3` are
    /// accepted as shorthand for repeated letters.
    pub fn parse(s: &str) -> Result<Self, PresentationError> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                Some((name, e)) => {
                    let e: i64 = e.parse().map_err(|_| PresentationError::BadLetter(tok.to_string()))?;
                    (name, e)
                }
                None => (tok, 1),
            };
            if name.is_empty()
                || exp == 0
                || exp.unsigned_abs() > 1_000_000
                || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
                || name.chars().next().is_some_and(|c| c.is_ascii_digit())
            {
                return Err(PresentationError::BadLetter(tok.to_string()));
            }
            let l = if exp > 0 { Letter::pos(name) } else { Letter::neg(name) };
            for _ in 0..exp.unsigned_abs() {
                letters.push(l.clone());
            }
        }
        Ok(Word::new(letters))
    }

    /// Letters of the word.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// `true` for the empty word.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The formal inverse.
    pub fn inverse(&self) -> Self {
        Word { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word) -> Self {
        Word::new(self.letters.iter().chain(other.letters.iter()).cloned())
    }

    /// `self^e` for any integer `e`.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Removes cancelling letters across the wrap-around.
    pub fn cyclically_reduce(&self) -> Self {
        let l = &self.letters;
        let mut i = 0;
        let mut j = l.len();
        while j >= i + 2 && l[i].cancels(&l[j - 1]) {
            i += 1;
            j -= 1;
        }
        Word { letters: l[i..j].to_vec() }
    }

    /// `true` if the word is cyclically reduced.
    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(a), Some(b)) if self.letters.len() >= 2 => !a.cancels(b),
            _ => true,
        }
    }

    /// Rotation moving the first `k` letters (mod length) to the end.
    pub fn rotate(&self, k: usize) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut v = self.letters[k..].to_vec();
        v.extend_from_slice(&self.letters[..k]);
        Word { letters: v }
    }

    /// `true` if `other` is a cyclic permutation of `self` or of its inverse.
    /// Both words are cyclically reduced before comparison.
    pub fn cyclic_equivalent(&self, other: &Word) -> bool {
        let a = self.cyclically_reduce();
        let b = other.cyclically_reduce();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        let binv = b.inverse();
        (0..a.len()).any(|k| {
            let r = a.rotate(k);
            r == b || r == binv
        })
    }

    /// Sum of exponents of generator `gen`.
    pub fn exponent_sum(&self, gen: &str) -> i64 {
        self.letters.iter().filter(|l| l.gen == gen).map(Letter::sign).sum()
    }

    /// Number of occurrences (either sign) of `gen`.
    pub fn occurrences(&self, gen: &str) -> usize {
        self.letters.iter().filter(|l| l.gen == gen).count()
    }

    /// Substitutes `gen -> w` everywhere and reduces.
    pub fn substitute(&self, gen: &str, w: &Word) -> Self {
        let winv = w.inverse();
        let mut out = Vec::new();
        for l in &self.letters {
            if l.gen == gen {
                out.extend_from_slice(if l.inv { &winv.letters } else { &w.letters });
            } else {
                out.push(l.clone());
            }
        }
        Word::new(out)
    }

    /// Renames generators according to `map`; names absent from the map are kept.
    pub fn rename(&self, map: &std::collections::BTreeMap<String, String>) -> Self {
        Word::new(
            self.letters
                .iter()
                .map(|l| Letter { gen: map.get(&l.gen).cloned().unwrap_or_else(|| l.gen.clone()), inv: l.inv }),
        )
    }

    /// Generator names that occur in the word.
    pub fn generators(&self) -> std::collections::BTreeSet<String> {
        self.letters.iter().map(|l| l.gen.clone()).collect()
    }

    /// Replaces every non-overlapping occurrence of `from`, scanning left to
    /// right, by `to`. Returns the reduced result and the number of replacements.
    pub fn replace_subword(&self, from: &Word, to: &Word) -> (Self, usize) {
        if from.is_empty() {
            return (self.clone(), 0);
        }
        let f = &from.letters;
        let l = &self.letters;
        let mut out = Vec::new();
        let mut count = 0;
        let mut i = 0;
        while i < l.len() {
            if i + f.len() <= l.len() && &l[i..i + f.len()] == f.as_slice() {
                out.extend_from_slice(&to.letters);
                i += f.len();
                count += 1;
            } else {
                out.push(l[i].clone());
                i += 1;
            }
        }
        (Word::new(out), count)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = PresentationError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        Word::parse(&s)
    }
}

impl std::str::FromStr for Word {
    type Err = PresentationError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let w = Word::parse("x1 x2 x3^-1").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_string(), "x1 x2 x3^-1");
        assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn parse_reduces_and_expands_powers() {
        assert_eq!(Word::parse("a b b^-1 a^-1").unwrap(), Word::empty());
        assert_eq!(Word::parse("t^5").unwrap(), Word::power_of("t", 5));
        assert_eq!(Word::parse("t^-2").unwrap().exponent_sum("t"), -2);
        assert!(Word::parse("x^0").is_err());
        assert!(Word::parse("3x").is_err());
        assert!(Word::parse("x^y").is_err());
    }

    #[test]
    fn cyclic_reduction_strips_wraparound() {
        let w = Word::parse("a b c b^-1 a^-1").unwrap();
        assert_eq!(w.cyclically_reduce(), Word::parse("c").unwrap());
        assert!(!w.is_cyclically_reduced());
    }

    #[test]
    fn cyclic_equivalence_includes_inverse() {
        let w = Word::parse("t t u t u^-1 u^-1").unwrap();
        let rot = w.rotate(3);
        assert!(w.cyclic_equivalent(&rot));
        assert!(w.cyclic_equivalent(&rot.inverse()));
        assert!(!w.cyclic_equivalent(&Word::parse("t t u t u^-1").unwrap()));
    }

    #[test]
    fn subword_replacement() {
        let w = Word::parse("y y t y^-1 t^-2").unwrap();
        let (r, n) = w.replace_subword(&Word::parse("t^-2").unwrap(), &Word::parse("t^3").unwrap());
        assert_eq!(n, 1);
        assert_eq!(r, Word::parse("y y t y^-1 t^3").unwrap());
    }
}
