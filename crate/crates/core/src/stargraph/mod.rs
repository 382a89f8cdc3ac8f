//! The star graph alphabet `{ã, b̃, λ̃, x, y, z}^±`, its weights and
//! adjacency, and exhaustive enumeration of vertex labels.
//!
//! Each corner letter stands for a family of words over the underlying
//! alphabet `a, b, λ, μ` (with `μ = λ^-1`):
//!
//! | letter | underlying word          |
//! |--------|--------------------------|
//! | `ã`    | `a (λμ)^k`               |
//! | `b̃`    | `(μλ)^k b`               |
//! | `λ̃`    | `(λμ)^k λ`               |
//! | `x`    | `ã λ`                    |
//! | `y`    | `λ b̃`                    |
//! | `z`    | `ã λ b̃`                  |
//!
//! Two letters may be adjacent in a label only when their underlying words
//! compose at a vertex of the graph and their concatenation neither cancels,
//! nor collapses into a single letter, nor becomes a power of `λμ`. The
//! forbidden pairs are derived from this rule, not listed by hand.

mod underlying;

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use underlying::{matches_letter, underlying_word, UnderlyingSymbol};

/// Base letters of the star graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Base {
    A,
    B,
    Lambda,
    X,
    Y,
    Z,
}

impl Base {
    pub const ALL: [Base; 6] = [Base::A, Base::B, Base::Lambda, Base::X, Base::Y, Base::Z];

    /// Power of `t` represented by the letter.
    pub fn weight(self) -> i64 {
        match self {
            Base::A => 1,
            Base::B => 2,
            Base::Lambda => 0,
            Base::X => 1,
            Base::Y => 2,
            Base::Z => 3,
        }
    }

    /// Parity of the underlying word length.
    pub fn parity(self) -> Parity {
        match self {
            Base::X | Base::Y => Parity::Even,
            _ => Parity::Odd,
        }
    }

    /// Number of `a^±1` and `b^±1` occurrences in the underlying word.
    pub fn ab_count(self) -> usize {
        match self {
            Base::A | Base::B | Base::X | Base::Y => 1,
            Base::Z => 2,
            Base::Lambda => 0,
        }
    }
}

/// Parity of a length or count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// A corner letter `base^±1`. `μ̃` is `λ̃^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CornerLetter {
    pub base: Base,
    pub inv: bool,
}

/// The two vertices of the star graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StarVertex {
    P,
    N,
}

impl CornerLetter {
    pub const fn new(base: Base, inv: bool) -> Self {
        CornerLetter { base, inv }
    }

    /// All twelve letters, positive before negative for each base.
    pub fn all() -> [CornerLetter; 12] {
        let mut out = [CornerLetter::new(Base::A, false); 12];
        for (i, b) in Base::ALL.iter().enumerate() {
            out[2 * i] = CornerLetter::new(*b, false);
            out[2 * i + 1] = CornerLetter::new(*b, true);
        }
        out
    }

    /// Index in `0..12` matching [`CornerLetter::all`].
    pub fn index(self) -> usize {
        2 * Base::ALL.iter().position(|b| *b == self.base).unwrap() + usize::from(self.inv)
    }

    pub fn inverse(self) -> Self {
        CornerLetter::new(self.base, !self.inv)
    }

    /// Signed weight.
    pub fn weight(self) -> i64 {
        if self.inv {
            -self.base.weight()
        } else {
            self.base.weight()
        }
    }

    /// Parity of the underlying word length.
    pub fn parity(self) -> Parity {
        self.base.parity()
    }

    /// Vertex at which a path reading this letter starts.
    pub fn start(self) -> StarVertex {
        match underlying_word(self, 0).first().copied() {
            Some(UnderlyingSymbol::Lambda | UnderlyingSymbol::A | UnderlyingSymbol::AInv) => StarVertex::P,
            _ => StarVertex::N,
        }
    }

    /// Vertex at which a path reading this letter ends.
    pub fn end(self) -> StarVertex {
        match underlying_word(self, 0).last().copied() {
            Some(UnderlyingSymbol::Mu | UnderlyingSymbol::A | UnderlyingSymbol::AInv) => StarVertex::P,
            _ => StarVertex::N,
        }
    }

    /// ASCII name: `a`, `b`, `l`, `x`, `y`, `z`, with `^-1` for inverses and
    /// `mu` for `λ̃^-1`.
    pub fn ascii(self) -> String {
        let b = match self.base {
            Base::A => "a",
            Base::B => "b",
            Base::Lambda => "l",
            Base::X => "x",
            Base::Y => "y",
            Base::Z => "z",
        };
        match (self.base, self.inv) {
            (Base::Lambda, true) => "mu".to_string(),
            (_, true) => format!("{b}^-1"),
            (_, false) => b.to_string(),
        }
    }

    /// Parses an ASCII or Unicode letter name.
    pub fn parse(s: &str) -> Result<Self, StarError> {
        let (name, inv) = match s.strip_suffix("^-1").or_else(|| s.strip_suffix("⁻¹")) {
            Some(n) => (n, true),
            None => (s, false),
        };
        let (base, flip) = match name {
            "a" | "ã" => (Base::A, false),
            "b" | "b̃" => (Base::B, false),
            "l" | "lambda" | "λ̃" | "λ" => (Base::Lambda, false),
            "mu" | "μ̃" | "μ" => (Base::Lambda, true),
            "x" => (Base::X, false),
            "y" => (Base::Y, false),
            "z" => (Base::Z, false),
            _ => return Err(StarError::BadLetter(s.to_string())),
        };
        Ok(CornerLetter::new(base, inv ^ flip))
    }
}

impl fmt::Display for CornerLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = match self.base {
            Base::A => "ã",
            Base::B => "b̃",
            Base::Lambda => "λ̃",
            Base::X => "x",
            Base::Y => "y",
            Base::Z => "z",
        };
        match (self.base, self.inv) {
            (Base::Lambda, true) => write!(f, "μ̃"),
            (_, true) => write!(f, "{b}⁻¹"),
            (_, false) => write!(f, "{b}"),
        }
    }
}

/// Errors from parsing labels.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StarError {
    #[error("unknown corner letter `{0}`")]
    BadLetter(String),
}

/// Required parity of the number of chords incident to a boundary vertex of
/// a region carrying this corner letter. A corner whose underlying word has
/// even length is split into an odd number of pieces, so it needs an odd
/// number of chords.
pub fn shadow_parity(letter: CornerLetter) -> Parity {
    match letter.parity() {
        Parity::Even => Parity::Odd,
        Parity::Odd => Parity::Even,
    }
}

/// Why a pair of letters cannot be adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// The concatenation is a single corner letter, so the boundary between
    /// the two corners is not a `(b,a)`-edge.
    MergesInto { letter: String, example: String },
    /// The concatenation contains `a^-1 a` or `b b^-1` (or their inverses).
    Cancels { example: String },
    /// The concatenation is a power of `λμ`, which is never a corner label.
    LambdaMuPower { example: String },
}

/// An ordered forbidden pair with the reason it is forbidden.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenPair {
    pub first: CornerLetter,
    pub second: CornerLetter,
    pub witness: Witness,
}

/// Classifies the concatenation `pq` for one choice of the free exponents.
fn collapse(p: CornerLetter, q: CornerLetter, kp: usize, kq: usize) -> Option<Witness> {
    let mut w = underlying_word(p, kp);
    w.extend(underlying_word(q, kq));
    let example = underlying::render(&w);
    if w.windows(2).any(|s| s[0].cancels(s[1])) {
        return Some(Witness::Cancels { example });
    }
    if underlying::is_lambda_mu_power(&w) {
        return Some(Witness::LambdaMuPower { example });
    }
    CornerLetter::all()
        .into_iter()
        .find(|l| underlying::matches_letter(&w, *l))
        .map(|l| Witness::MergesInto { letter: l.to_string(), example })
}

/// Exponents tried for each free `(λμ)^k` factor when looking for witnesses.
const WITNESS_EXPONENTS: [usize; 3] = [0, 1, 2];

/// All ordered pairs `pq` that compose in the star graph, are not a plain
/// free reduction `p p^-1` of a letter with an `a` or `b` in it, and collapse
/// for every tried exponent. The set is closed under `pq -> q^-1 p^-1`.
pub fn derive_forbidden_pairs() -> Vec<ForbiddenPair> {
    let mut out = Vec::new();
    for p in CornerLetter::all() {
        for q in CornerLetter::all() {
            if p.end() != q.start() || (q == p.inverse() && p.base != Base::Lambda) {
                continue;
            }
            let mut witness = None;
            let mut all = true;
            for kp in WITNESS_EXPONENTS {
                for kq in WITNESS_EXPONENTS {
                    match collapse(p, q, kp, kq) {
                        Some(w) => {
                            if kp == 1 && kq == 1 {
                                witness = Some(w);
                            }
                        }
                        None => all = false,
                    }
                }
            }
            if all {
                out.push(ForbiddenPair { first: p, second: q, witness: witness.expect("exponent 1 was tried") });
            }
        }
    }
    out
}

/// Adjacency table of the star graph after removing forbidden pairs and free
/// reductions.
struct Adjacency {
    allowed: [[bool; 12]; 12],
}

fn adjacency() -> &'static Adjacency {
    static ADJ: OnceLock<Adjacency> = OnceLock::new();
    ADJ.get_or_init(|| {
        let forbidden: BTreeSet<(usize, usize)> =
            derive_forbidden_pairs().iter().map(|f| (f.first.index(), f.second.index())).collect();
        let mut allowed = [[false; 12]; 12];
        for p in CornerLetter::all() {
            for q in CornerLetter::all() {
                allowed[p.index()][q.index()] =
                    p.end() == q.start() && q != p.inverse() && !forbidden.contains(&(p.index(), q.index()));
            }
        }
        Adjacency { allowed }
    })
}

/// `true` when `q` may follow `p` in a vertex label.
pub fn admissible_pair(p: CornerLetter, q: CornerLetter) -> bool {
    adjacency().allowed[p.index()][q.index()]
}

/// A cyclic word over the star graph alphabet.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexLabel {
    pub letters: Vec<CornerLetter>,
}

impl VertexLabel {
    pub fn new(letters: Vec<CornerLetter>) -> Self {
        VertexLabel { letters }
    }

    /// Parses whitespace separated letter names, e.g. `a x y^-1` or `b mu z`.
    pub fn parse(s: &str) -> Result<Self, StarError> {
        Ok(VertexLabel { letters: s.split_whitespace().map(CornerLetter::parse).collect::<Result<_, _>>()? })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Formal inverse.
    pub fn inverse(&self) -> Self {
        VertexLabel { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Rotation by `k` places.
    pub fn rotate(&self, k: usize) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut v = self.letters[k..].to_vec();
        v.extend_from_slice(&self.letters[..k]);
        VertexLabel { letters: v }
    }

    /// Lexicographic minimum over all rotations of the label and its inverse.
    pub fn canonical(&self) -> Self {
        let inv = self.inverse();
        let mut best = self.clone();
        for w in [self, &inv] {
            for k in 0..w.len() {
                let r = w.rotate(k);
                if r < best {
                    best = r;
                }
            }
        }
        best
    }

    /// Sum of signed weights reduced into `0..5`.
    pub fn weight(&self) -> i64 {
        weight(self)
    }

    /// No adjacent letter-inverse pair and no forbidden pair, cyclically.
    pub fn is_admissible(&self) -> bool {
        let n = self.letters.len();
        n > 0 && (0..n).all(|i| admissible_pair(self.letters[i], self.letters[(i + 1) % n]))
    }

    /// Total `a^±1`/`b^±1` occurrences in the underlying word.
    pub fn ab_count(&self) -> usize {
        self.letters.iter().map(|l| l.base.ab_count()).sum()
    }

    /// ASCII rendering with single spaces.
    pub fn ascii(&self) -> String {
        self.letters.iter().map(|l| l.ascii()).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Signed weight sum of a label, reduced mod 5 into `0..5`.
pub fn weight(w: &VertexLabel) -> i64 {
    w.letters.iter().map(|l| l.weight()).sum::<i64>().rem_euclid(5)
}

/// All canonical admissible labels of length `d` with weight `0 mod modulus`,
/// sorted. The search is split by first letter and run in parallel.
pub fn enumerate_vertex_labels(d: usize) -> Vec<VertexLabel> {
    enumerate_vertex_labels_mod(d, 5)
}

/// As [`enumerate_vertex_labels`] with an explicit modulus.
pub fn enumerate_vertex_labels_mod(d: usize, modulus: i64) -> Vec<VertexLabel> {
    if d == 0 {
        return Vec::new();
    }
    let adj = adjacency();
    let all = CornerLetter::all();
    let found: BTreeSet<VertexLabel> = all
        .par_iter()
        .flat_map_iter(|&first| {
            let mut out = BTreeSet::new();
            let mut path = vec![first];
            extend(&mut path, d, modulus, adj, &all, &mut out);
            out
        })
        .collect();
    found.into_iter().collect()
}

fn extend(
    path: &mut Vec<CornerLetter>,
    d: usize,
    modulus: i64,
    adj: &Adjacency,
    all: &[CornerLetter; 12],
    out: &mut BTreeSet<VertexLabel>,
) {
    let last = *path.last().unwrap();
    if path.len() == d {
        let sum: i64 = path.iter().map(|l| l.weight()).sum();
        if sum.rem_euclid(modulus) == 0 && adj.allowed[last.index()][path[0].index()] {
            let label = VertexLabel::new(path.clone());
            let canon = label.canonical();
            if canon == label {
                out.insert(canon);
            }
        }
        return;
    }
    for &q in all {
        // Canonical representatives start with their smallest letter.
        if q < path[0] {
            continue;
        }
        if adj.allowed[last.index()][q.index()] {
            path.push(q);
            extend(path, d, modulus, adj, all, out);
            path.pop();
        }
    }
}
