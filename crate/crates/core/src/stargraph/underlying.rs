//! Underlying words over `a, b, λ, μ` and pattern matching against the
//! letter families.

use serde::{Deserialize, Serialize};

use super::{Base, CornerLetter};

/// A letter of the underlying alphabet. `λ` and `μ` stand for relator
/// letters of distinct indices and never cancel each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnderlyingSymbol {
    A,
    AInv,
    B,
    BInv,
    Lambda,
    Mu,
}

impl UnderlyingSymbol {
    pub fn inverse(self) -> Self {
        use UnderlyingSymbol::*;
        match self {
            A => AInv,
            AInv => A,
            B => BInv,
            BInv => B,
            Lambda => Mu,
            Mu => Lambda,
        }
    }

    /// `a a^-1`, `a^-1 a`, `b b^-1`, `b^-1 b`.
    pub fn cancels(self, other: Self) -> bool {
        use UnderlyingSymbol::*;
        matches!((self, other), (A, AInv) | (AInv, A) | (B, BInv) | (BInv, B))
    }

    fn glyph(self) -> &'static str {
        use UnderlyingSymbol::*;
        match self {
            A => "a",
            AInv => "a⁻¹",
            B => "b",
            BInv => "b⁻¹",
            Lambda => "λ",
            Mu => "μ",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Token {
    Lit(UnderlyingSymbol),
    /// `(p q)^k` for any `k >= 0`.
    Star(UnderlyingSymbol, UnderlyingSymbol),
}

fn pattern(letter: CornerLetter) -> Vec<Token> {
    use Token::*;
    use UnderlyingSymbol::*;
    let pos = match letter.base {
        Base::A => vec![Lit(A), Star(Lambda, Mu)],
        Base::B => vec![Star(Mu, Lambda), Lit(B)],
        Base::Lambda => vec![Star(Lambda, Mu), Lit(Lambda)],
        Base::X => vec![Lit(A), Star(Lambda, Mu), Lit(Lambda)],
        Base::Y => vec![Lit(Lambda), Star(Mu, Lambda), Lit(B)],
        Base::Z => vec![Lit(A), Star(Lambda, Mu), Lit(Lambda), Star(Mu, Lambda), Lit(B)],
    };
    if !letter.inv {
        return pos;
    }
    pos.iter()
        .rev()
        .map(|t| match *t {
            Lit(s) => Lit(s.inverse()),
            Star(p, q) => Star(q.inverse(), p.inverse()),
        })
        .collect()
}

/// The underlying word of `letter` with every free exponent set to `k`.
pub fn underlying_word(letter: CornerLetter, k: usize) -> Vec<UnderlyingSymbol> {
    let mut out = Vec::new();
    for t in pattern(letter) {
        match t {
            Token::Lit(s) => out.push(s),
            Token::Star(p, q) => {
                for _ in 0..k {
                    out.push(p);
                    out.push(q);
                }
            }
        }
    }
    out
}

fn match_from(tokens: &[Token], w: &[UnderlyingSymbol]) -> bool {
    match tokens.split_first() {
        None => w.is_empty(),
        Some((Token::Lit(s), rest)) => w.first() == Some(s) && match_from(rest, &w[1..]),
        Some((Token::Star(p, q), rest)) => {
            let mut i = 0;
            loop {
                if match_from(rest, &w[i..]) {
                    return true;
                }
                if w.len() >= i + 2 && w[i] == *p && w[i + 1] == *q {
                    i += 2;
                } else {
                    return false;
                }
            }
        }
    }
}

/// `true` when `w` is the underlying word of `letter` for some exponents.
pub fn matches_letter(w: &[UnderlyingSymbol], letter: CornerLetter) -> bool {
    match_from(&pattern(letter), w)
}

/// `true` for `(λμ)^k` or `(μλ)^k` with `k >= 1`.
pub fn is_lambda_mu_power(w: &[UnderlyingSymbol]) -> bool {
    use UnderlyingSymbol::*;
    if w.is_empty() || !w.len().is_multiple_of(2) {
        return false;
    }
    w.chunks(2).all(|c| c == [Lambda, Mu]) || w.chunks(2).all(|c| c == [Mu, Lambda])
}

/// Concatenated glyphs.
pub fn render(w: &[UnderlyingSymbol]) -> String {
    w.iter().map(|s| s.glyph()).collect()
}
