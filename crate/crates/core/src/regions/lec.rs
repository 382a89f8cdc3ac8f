//! Length feasibility: every face has `n+1` edges, boundary edges have
//! length 1, chords have unknown positive integer lengths.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::config::ChordConfig;
use super::faces::{faces, Face};
use super::RegionError;

/// `alpha·n + beta`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Affine {
    pub alpha: i64,
    pub beta: i64,
}

impl Affine {
    pub fn eval(self, n: i64) -> i64 {
        self.alpha * n + self.beta
    }
}

/// Renders `n-1`, `2n`, `n+3`, `6`, `-n+9`.
impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Affine { alpha, beta } = *self;
        match alpha {
            0 => return write!(f, "{beta}"),
            1 => write!(f, "n")?,
            -1 => write!(f, "-n")?,
            a => write!(f, "{a}n")?,
        }
        match beta {
            0 => Ok(()),
            b if b > 0 => write!(f, "+{b}"),
            b => write!(f, "{b}"),
        }
    }
}

/// The values of `n` for which a configuration is length-feasible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NCondition {
    AtLeast(i64),
    Between(i64, i64),
    Exactly(i64),
}

impl NCondition {
    pub fn contains(self, n: i64) -> bool {
        match self {
            NCondition::AtLeast(a) => n >= a,
            NCondition::Between(a, b) => a <= n && n <= b,
            NCondition::Exactly(a) => n == a,
        }
    }

    /// Smallest admissible `n`.
    pub fn min(self) -> i64 {
        match self {
            NCondition::AtLeast(a) | NCondition::Between(a, _) | NCondition::Exactly(a) => a,
        }
    }
}

impl fmt::Display for NCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NCondition::AtLeast(a) => write!(f, "n >= {a}"),
            NCondition::Between(a, b) => write!(f, "{a} <= n <= {b}"),
            NCondition::Exactly(a) => write!(f, "n = {a}"),
        }
    }
}

/// Outcome of [`lec_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FeasibilityResult {
    /// `lengths[i]` is the length of `chords[i]`.
    Feasible {
        lengths: Vec<Affine>,
        n: NCondition,
    },
    Lec {
        reason: String,
    },
}

impl FeasibilityResult {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityResult::Feasible { .. })
    }
}

fn lec(reason: impl Into<String>) -> FeasibilityResult {
    FeasibilityResult::Lec { reason: reason.into() }
}

/// Face perimeter as an affine function of `n` given chord lengths.
fn perimeter(face: &Face, lengths: &[Option<Affine>]) -> Affine {
    let mut p = Affine { alpha: 0, beta: face.boundary_edges().len() as i64 };
    for c in face.chords() {
        let l = lengths[c].expect("known length");
        p.alpha += l.alpha;
        p.beta += l.beta;
    }
    p
}

/// Solves the face equations by peeling faces with a single unknown chord,
/// starting away from a root face whose equation becomes the condition on
/// `n`. Reasons read `n+1 = <root perimeter>` or name a chord whose length
/// cannot be positive.
pub fn lec_check(c: &ChordConfig, nmin: i64) -> Result<FeasibilityResult, RegionError> {
    let fs = faces(c)?;
    Ok(lec_check_faces(c, &fs, nmin))
}

pub(crate) fn lec_check_faces(c: &ChordConfig, fs: &[Face], nmin: i64) -> FeasibilityResult {
    let info: Vec<(usize, usize)> = fs.iter().map(|f| (f.boundary_edges().len(), f.chords().len())).collect();
    let root = (0..fs.len()).max_by_key(|&i| (info[i].0, info[i].1, std::cmp::Reverse(i))).expect("at least one face");
    let mut lengths: Vec<Option<Affine>> = vec![None; c.chords.len()];
    let mut remaining: Vec<usize> = (0..fs.len()).filter(|&i| i != root).collect();
    // Extra equations from faces whose chords were all fixed elsewhere.
    let mut conditions = Vec::new();
    while !remaining.is_empty() {
        let pos = remaining.iter().position(|&i| fs[i].chords().iter().filter(|&&x| lengths[x].is_none()).count() <= 1);
        let Some(pos) = pos else {
            return lec("face equations are underdetermined");
        };
        let i = remaining.remove(pos);
        let unknown: Vec<usize> = fs[i].chords().into_iter().filter(|&x| lengths[x].is_none()).collect();
        match unknown.as_slice() {
            [] => conditions.push(perimeter(&fs[i], &lengths)),
            [u] => {
                let mut l = Affine { alpha: 1, beta: 1 - info[i].0 as i64 };
                for x in fs[i].chords() {
                    if x != *u {
                        let k = lengths[x].expect("known");
                        l.alpha -= k.alpha;
                        l.beta -= k.beta;
                    }
                }
                // A chord occurring twice on one face is not a planar shape.
                if fs[i].chords().iter().filter(|&&x| x == *u).count() != 1 {
                    return lec("chord bounds the same face twice");
                }
                lengths[*u] = Some(l);
            }
            _ => unreachable!(),
        }
    }
    if lengths.iter().any(Option::is_none) {
        return lec("face equations are underdetermined");
    }
    let root_p = perimeter(&fs[root], &lengths);
    let mut exact: Option<i64> = None;
    for p in std::iter::once(root_p).chain(conditions) {
        let msg = format!("n+1 = {p}");
        // n + 1 = alpha n + beta  <=>  (alpha - 1) n = 1 - beta
        let a = p.alpha - 1;
        let b = 1 - p.beta;
        if a == 0 {
            if b != 0 {
                return lec(msg);
            }
            continue;
        }
        if !b.is_multiple_of(&a) {
            return lec(msg);
        }
        let n0 = b / a;
        if n0 < nmin || exact.is_some_and(|e| e != n0) {
            return lec(msg);
        }
        exact = Some(n0);
    }
    let lengths: Vec<Affine> = lengths.into_iter().map(Option::unwrap).collect();
    let (mut lo, mut hi) = (nmin, None::<i64>);
    if let Some(e) = exact {
        lo = e;
        hi = Some(e);
    }
    for (i, l) in lengths.iter().enumerate() {
        // alpha n + beta >= 1
        let need = 1 - l.beta;
        let ok = match l.alpha.cmp(&0) {
            std::cmp::Ordering::Greater => {
                lo = lo.max(Integer::div_ceil(&need, &l.alpha));
                true
            }
            std::cmp::Ordering::Less => {
                let bound = Integer::div_floor(&-need, &-l.alpha);
                hi = Some(hi.map_or(bound, |h| h.min(bound)));
                true
            }
            std::cmp::Ordering::Equal => need <= 0,
        };
        if !ok || hi.is_some_and(|h| lo > h) {
            return lec(format!("length of {} is {} < 1", c.chord_name(c.chords[i]), l));
        }
    }
    let n = match hi {
        Some(h) if h == lo => NCondition::Exactly(lo),
        Some(h) => NCondition::Between(lo, h),
        None => NCondition::AtLeast(lo),
    };
    FeasibilityResult::Feasible { lengths, n }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: usize, s: &str) -> FeasibilityResult {
        lec_check(&ChordConfig::parse(m, s).unwrap(), 7).unwrap()
    }

    #[test]
    fn hexagon_walkthrough() {
        assert_eq!(check(6, ""), lec("n+1 = 6"));
        assert_eq!(check(6, "(13)"), lec("n+1 = n+3"));
        assert_eq!(check(6, "(13)(15)"), lec("n+1 = 2n"));
    }

    #[test]
    fn square_diagonal() {
        let FeasibilityResult::Feasible { lengths, n } = check(4, "(13)") else { panic!() };
        assert_eq!(lengths, vec![Affine { alpha: 1, beta: -1 }]);
        assert_eq!(n, NCondition::AtLeast(7));
    }

    #[test]
    fn octagon_empty_only_at_seven() {
        assert_eq!(check(8, ""), FeasibilityResult::Feasible { lengths: vec![], n: NCondition::Exactly(7) });
    }

    #[test]
    fn affine_display() {
        assert_eq!(Affine { alpha: 1, beta: -1 }.to_string(), "n-1");
        assert_eq!(Affine { alpha: 2, beta: 0 }.to_string(), "2n");
        assert_eq!(Affine { alpha: 0, beta: 4 }.to_string(), "4");
        assert_eq!(Affine { alpha: -1, beta: 9 }.to_string(), "-n+9");
    }
}
