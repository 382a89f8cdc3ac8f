//! Chord configurations on an `m`-gon and their dihedral canonical form.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::RegionError;

/// An `m`-gon with boundary vertices `1..=m` and a multiset of chords
/// `(p,q)`, `p < q`, drawn inside the disk without crossings. Chords are
/// kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ChordConfig {
    pub m: usize,
    pub chords: Vec<(usize, usize)>,
}

/// `true` when chords `(a,b)` and `(c,d)` with four distinct endpoints
/// interleave around the circle.
pub fn crosses(c1: (usize, usize), c2: (usize, usize)) -> bool {
    let (a, b) = (c1.0.min(c1.1), c1.0.max(c1.1));
    let (c, d) = (c2.0.min(c2.1), c2.0.max(c2.1));
    if a == c || a == d || b == c || b == d {
        return false;
    }
    (a < c && c < b) != (a < d && d < b)
}

impl ChordConfig {
    /// Validates endpoints and planarity and sorts the chords.
    pub fn new(m: usize, chords: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, RegionError> {
        if m < 2 {
            return Err(RegionError::BadDegree(m));
        }
        let mut cs = Vec::new();
        for (p, q) in chords {
            if p == q || p == 0 || q == 0 || p > m || q > m {
                return Err(RegionError::BadChord { p, q, m });
            }
            cs.push((p.min(q), p.max(q)));
        }
        cs.sort();
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                if crosses(cs[i], cs[j]) {
                    return Err(RegionError::Crossing(cs[i], cs[j]));
                }
            }
        }
        Ok(ChordConfig { m, chords: cs })
    }

    /// The empty configuration on an `m`-gon.
    pub fn empty(m: usize) -> Self {
        ChordConfig { m, chords: Vec::new() }
    }

    /// Parses `(13)(14)(46)`, `13,14,46` or `1-3,1-4,4-6`. Two-digit
    /// vertices need the `p-q` form or a space inside parentheses.
    pub fn parse(m: usize, s: &str) -> Result<Self, RegionError> {
        let bad = || RegionError::Syntax(s.to_string());
        let s = s.trim();
        if s.is_empty() || s == "{}" || s == "()" {
            return ChordConfig::new(m, []);
        }
        let tokens: Vec<String> = if s.contains('(') {
            s.split(['(', ')']).map(str::trim).filter(|t| !t.is_empty() && *t != ",").map(String::from).collect()
        } else {
            s.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect()
        };
        let mut chords = Vec::new();
        for t in tokens {
            let t = t.trim_matches(',').trim();
            let parts: Vec<&str> = if t.contains('-') {
                t.split('-').collect()
            } else if t.contains(' ') {
                t.split_whitespace().collect()
            } else if t.len() == 2 {
                vec![&t[..1], &t[1..]]
            } else {
                return Err(bad());
            };
            if parts.len() != 2 {
                return Err(bad());
            }
            let p = parts[0].trim().parse().map_err(|_| bad())?;
            let q = parts[1].trim().parse().map_err(|_| bad())?;
            chords.push((p, q));
        }
        ChordConfig::new(m, chords)
    }

    /// Image under the dihedral map `i -> i + r` or, with `reflect`,
    /// `i -> r - i` (vertices taken mod `m` in `1..=m`).
    pub fn transform(&self, r: usize, reflect: bool) -> Self {
        let m = self.m;
        let map = |v: usize| {
            let i = v - 1;
            let j = if reflect { (r + m - i % m) % m } else { (i + r) % m };
            j + 1
        };
        let mut chords: Vec<(usize, usize)> = self
            .chords
            .iter()
            .map(|&(p, q)| {
                let (a, b) = (map(p), map(q));
                (a.min(b), a.max(b))
            })
            .collect();
        chords.sort();
        ChordConfig { m, chords }
    }

    /// Minimum chord list over all `2m` dihedral images.
    pub fn canonical(&self) -> Self {
        let mut best = self.clone();
        for r in 0..self.m {
            for reflect in [false, true] {
                let t = self.transform(r, reflect);
                if t.chords < best.chords {
                    best = t;
                }
            }
        }
        best
    }

    /// Number of chords incident to boundary vertex `v` (1-based).
    pub fn chord_degree(&self, v: usize) -> usize {
        self.chords.iter().filter(|&&(p, q)| p == v || q == v).count()
    }

    /// Formats one chord as `(13)`, or `(5 10)` when `m >= 10`.
    pub fn chord_name(&self, c: (usize, usize)) -> String {
        if self.m >= 10 {
            format!("({} {})", c.0, c.1)
        } else {
            format!("({}{})", c.0, c.1)
        }
    }
}

impl fmt::Display for ChordConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chords.is_empty() {
            return write!(f, "{{}}");
        }
        for &c in &self.chords {
            write!(f, "{}", self.chord_name(c))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let a = ChordConfig::parse(6, "(13)(14)(46)").unwrap();
        let b = ChordConfig::parse(6, "13,14,46").unwrap();
        let c = ChordConfig::parse(6, "1-3, 1-4, 4-6").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.to_string(), "(13)(14)(46)");
        assert_eq!(ChordConfig::parse(12, "(5 10)").unwrap().chords, vec![(5, 10)]);
        assert!(ChordConfig::parse(6, "(14)(25)").is_err());
        assert!(ChordConfig::parse(6, "(17)").is_err());
    }

    #[test]
    fn canonical_is_dihedral_invariant() {
        let c = ChordConfig::parse(8, "(13)(14)(47)").unwrap();
        let k = c.canonical();
        for r in 0..8 {
            for refl in [false, true] {
                assert_eq!(c.transform(r, refl).canonical(), k);
            }
        }
    }

    #[test]
    fn crossing_rule() {
        assert!(crosses((1, 3), (2, 4)));
        assert!(!crosses((1, 3), (3, 5)));
        assert!(!crosses((1, 4), (2, 3)));
    }
}
