//! Corner labelings of a chord configuration and the labelling checks.
//!
//! Each face reads one relator cycle. Faces on opposite sides of a chord
//! read it in opposite directions, so faces carry a sign `ε` that flips
//! across every chord. A face has exactly one `(b,a)`-edge, which must be a
//! boundary edge; the corner entering it reads `a` (`b⁻¹` when `ε = -1`),
//! the corner leaving it reads `b` (`a⁻¹`), and every other corner reads a
//! single `λ^∓1`. The word read around a boundary vertex, from the corner on
//! its incoming boundary edge across the chords to the outgoing one, must be
//! the underlying word of one corner letter.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::config::ChordConfig;
use super::faces::{faces, EdgeRef, Face};
use super::RegionError;
use crate::stargraph::{matches_letter, CornerLetter, UnderlyingSymbol};

/// A chord configuration with one corner letter per boundary vertex,
/// `labels[i]` sitting at vertex `i+1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LabeledRegion {
    pub config: ChordConfig,
    pub labels: Vec<CornerLetter>,
}

impl LabeledRegion {
    /// Dihedral image; reflections invert every label.
    pub fn transform(&self, r: usize, reflect: bool) -> Self {
        let m = self.config.m;
        let mut labels = self.labels.clone();
        for (i, &l) in self.labels.iter().enumerate() {
            let j = if reflect { (r + m - i) % m } else { (i + r) % m };
            labels[j] = if reflect { l.inverse() } else { l };
        }
        LabeledRegion { config: self.config.transform(r, reflect), labels }
    }

    /// Minimum of `(chords, labels)` over the dihedral group.
    pub fn canonical(&self) -> Self {
        let mut best = self.clone();
        for r in 0..self.config.m {
            for reflect in [false, true] {
                let t = self.transform(r, reflect);
                if (&t.config.chords, &t.labels) < (&best.config.chords, &best.labels) {
                    best = t;
                }
            }
        }
        best
    }

    /// Minimum label sequence over the dihedral group, ignoring chords.
    pub fn canonical_labels(&self) -> Vec<CornerLetter> {
        (0..self.config.m).flat_map(|r| [false, true].map(|f| self.transform(r, f).labels)).min().expect("m >= 1")
    }
}

impl fmt::Display for LabeledRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.config)?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

/// Labelling rule that kills a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LacRule {
    /// A face has no boundary edge, so no `a`/`b` corner.
    R1,
    /// A face is a bigon between two copies of one chord.
    R2,
    /// Every labeling reads a vertex word of the wrong length parity.
    R3,
    /// Some labeling has correct parity, but none reads a letter at every
    /// vertex.
    R4,
}

/// Outcome of [`lac_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LacResult {
    Pass,
    Lac { rule: LacRule, witness: String },
}

/// Faces, their signs and per-face boundary edges, shared by the checks.
pub(crate) struct Structure {
    pub faces: Vec<Face>,
    pub sign: Vec<i8>,
}

impl Structure {
    pub fn new(c: &ChordConfig) -> Result<Self, RegionError> {
        Ok(Self::from_faces(faces(c)?))
    }

    pub fn from_faces(faces: Vec<Face>) -> Self {
        let mut owner: std::collections::HashMap<usize, Vec<usize>> = Default::default();
        for (i, f) in faces.iter().enumerate() {
            for ch in f.chords() {
                owner.entry(ch).or_default().push(i);
            }
        }
        let mut sign = vec![0i8; faces.len()];
        if !faces.is_empty() {
            sign[0] = 1;
            let mut stack = vec![0];
            while let Some(i) = stack.pop() {
                for ch in faces[i].chords() {
                    for &j in &owner[&ch] {
                        if sign[j] == 0 {
                            sign[j] = -sign[i];
                            stack.push(j);
                        }
                    }
                }
            }
        }
        Structure { faces, sign }
    }
}

enum VertexVerdict {
    Letter(CornerLetter),
    Parity,
    Pair,
}

fn classify_word(w: &[UnderlyingSymbol]) -> VertexVerdict {
    if let Some(l) = CornerLetter::all().into_iter().find(|&l| matches_letter(w, l)) {
        return VertexVerdict::Letter(l);
    }
    let has_ab = w.iter().any(|s| !matches!(s, UnderlyingSymbol::Lambda | UnderlyingSymbol::Mu));
    if has_ab {
        VertexVerdict::Pair
    } else {
        VertexVerdict::Parity
    }
}

/// Reads vertex words for one choice of `(b,a)`-edges and a global sign.
/// `Err(true)` marks a parity failure, `Err(false)` a letter failure.
fn read_labels(c: &ChordConfig, s: &Structure, choice: &[usize], eps: i8) -> Result<Vec<CornerLetter>, (bool, usize)> {
    use UnderlyingSymbol::*;
    let m = c.m;
    // (vertex, incoming edge) -> (symbol, outgoing edge)
    let mut corner: std::collections::HashMap<(usize, EdgeRef), (UnderlyingSymbol, EdgeRef)> = Default::default();
    for (i, f) in s.faces.iter().enumerate() {
        let pos = s.sign[i] * eps > 0;
        let special = EdgeRef::Boundary(choice[i]);
        for (v, ein, eout) in f.corners() {
            let sym = if ein == special {
                if pos {
                    A
                } else {
                    BInv
                }
            } else if eout == special {
                if pos {
                    B
                } else {
                    AInv
                }
            } else if pos {
                Mu
            } else {
                Lambda
            };
            corner.insert((v, ein), (sym, eout));
        }
    }
    let mut labels = Vec::with_capacity(m);
    for v in 0..m {
        // Inner faces run along boundary edge `v` from `v+1` to `v`, so the
        // first corner at `v` is the one entered by that edge.
        let mut key = (v, EdgeRef::Boundary(v));
        let mut word = Vec::new();
        loop {
            let (sym, eout) = corner[&key];
            word.push(sym);
            if matches!(eout, EdgeRef::Boundary(_)) {
                break;
            }
            key = (v, eout);
        }
        match classify_word(&word) {
            VertexVerdict::Letter(l) => labels.push(l),
            VertexVerdict::Parity => return Err((true, v)),
            VertexVerdict::Pair => return Err((false, v)),
        }
    }
    Ok(labels)
}

/// Runs every labeling. Returns the successful label sequences, or the
/// rule and witness that kill the configuration.
pub(crate) fn all_labelings(c: &ChordConfig, s: &Structure) -> Result<Vec<Vec<CornerLetter>>, (LacRule, String)> {
    let bd: Vec<Vec<usize>> = s.faces.iter().map(Face::boundary_edges).collect();
    if let Some(i) = bd.iter().position(Vec::is_empty) {
        let ch = s.faces[i].chords();
        let names: Vec<String> = ch.iter().map(|&x| c.chord_name(c.chords[x])).collect();
        if ch.len() == 2 && c.chords[ch[0]] == c.chords[ch[1]] {
            return Err((LacRule::R2, format!("bigon between two copies of {}", names[0])));
        }
        return Err((LacRule::R1, format!("face bounded by {} has no boundary edge", names.concat())));
    }
    let mut out = Vec::new();
    let mut parity_everywhere = true;
    let mut witness: Option<(bool, usize)> = None;
    for eps in [1i8, -1] {
        let mut idx = vec![0usize; bd.len()];
        loop {
            let choice: Vec<usize> = idx.iter().zip(&bd).map(|(&k, b)| b[k]).collect();
            match read_labels(c, s, &choice, eps) {
                Ok(l) => out.push(l),
                Err((parity, v)) => {
                    parity_everywhere &= parity;
                    if witness.is_none_or(|(p, _)| p && !parity) {
                        witness = Some((parity, v));
                    }
                }
            }
            // Odometer over the per-face choices.
            let mut k = 0;
            while k < idx.len() {
                idx[k] += 1;
                if idx[k] < bd[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == idx.len() {
                break;
            }
        }
    }
    if out.is_empty() {
        let (_, v) = witness.expect("at least one labeling tried");
        return Err(if parity_everywhere {
            (LacRule::R3, format!("vertex {} reads an even λμ-word in every labeling", v + 1))
        } else {
            (LacRule::R4, format!("vertex {} reads no corner letter", v + 1))
        });
    }
    Ok(out)
}

/// Applies the labelling rules R1 to R4 in order.
pub fn lac_check(c: &ChordConfig) -> Result<LacResult, RegionError> {
    let s = Structure::new(c)?;
    Ok(match all_labelings(c, &s) {
        Ok(_) => LacResult::Pass,
        Err((rule, witness)) => LacResult::Lac { rule, witness },
    })
}

/// All labelings of `c`, canonicalized and deduplicated, in sorted order.
pub fn enumerate_labelings(c: &ChordConfig) -> Result<Vec<LabeledRegion>, RegionError> {
    let s = Structure::new(c)?;
    let mut out: Vec<LabeledRegion> = match all_labelings(c, &s) {
        Ok(ls) => ls.into_iter().map(|labels| LabeledRegion { config: c.clone(), labels }.canonical()).collect(),
        Err(_) => Vec::new(),
    };
    out.sort();
    out.dedup();
    Ok(out)
}
