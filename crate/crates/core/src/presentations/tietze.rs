//! Replay and verification of Tietze transformation scripts.
//!
//! A script is data: a list of tagged steps applied to a start presentation.
//! Each step is checked for legality before it is applied, and the final
//! presentation is compared with a target after applying the script's
//! renaming map, up to cyclic permutation and inversion of relators.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Presentation, Word};

/// One Tietze move. Relator indices are 0-based positions in the current
/// relator list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum TietzeStep {
    /// Adds generator `name` with defining relator `name * word^-1`, appended
    /// at the end of the relator list.
    AddGenerator { name: String, word: Word },
    /// Removes generator `name` using the relator at `relator` (or the unique
    /// relator where `name` occurs exactly once). The relator is solved for
    /// `name`, deleted, and the solution substituted everywhere else.
    EliminateGenerator {
        name: String,
        #[serde(default)]
        relator: Option<usize>,
    },
    /// Rewrites every occurrence of `from` in relator `index` as `to`. The
    /// move is legal when `from * to^-1` is a cyclic conjugate of relator
    /// `by` or of its inverse.
    SubstituteInRelator { index: usize, from: Word, to: Word, by: usize },
    /// Substitutes `name -> name^-1` in every relator.
    ReplaceGeneratorByInverse { name: String },
    /// Eliminates `name` in favour of a power `word = h^p` of another
    /// generator `h`. Requires the relator `justification` to be `name^N`,
    /// some relator to define `h = name^q`, and `p*q = 1 (mod N)`. The
    /// defining relator is deleted, the justification becomes `h^N`, and
    /// `name -> h^p` is substituted everywhere else.
    ReplaceGeneratorByWord { name: String, word: Word, justification: usize },
    /// Rotates relator `index` left by `shift` letters.
    CyclicPermuteRelator { index: usize, shift: usize },
    /// Replaces relator `index` by its inverse.
    InvertRelator { index: usize },
}

impl TietzeStep {
    /// Short tag used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            TietzeStep::AddGenerator { .. } => "AddGenerator",
            TietzeStep::EliminateGenerator { .. } => "EliminateGenerator",
            TietzeStep::SubstituteInRelator { .. } => "SubstituteInRelator",
            TietzeStep::ReplaceGeneratorByInverse { .. } => "ReplaceGeneratorByInverse",
            TietzeStep::ReplaceGeneratorByWord { .. } => "ReplaceGeneratorByWord",
            TietzeStep::CyclicPermuteRelator { .. } => "CyclicPermuteRelator",
            TietzeStep::InvertRelator { .. } => "InvertRelator",
        }
    }
}

/// A script file: metadata, steps, and the final renaming map.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TietzeScript {
    #[serde(default)]
    pub name: String,
    /// Free-form remarks, e.g. choices made where the source chain is terse.
    #[serde(default)]
    pub notes: Vec<String>,
    /// Optional embedded start presentation.
    #[serde(default)]
    pub start: Option<Presentation>,
    /// Optional embedded target presentation.
    #[serde(default)]
    pub target: Option<Presentation>,
    pub steps: Vec<TietzeStep>,
    /// Renaming applied after the last step, old name to new name.
    #[serde(default)]
    pub rename: BTreeMap<String, String>,
}

impl TietzeScript {
    /// Parses a JSON script.
    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Outcome of script verification.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Valid,
    /// 0-based step index (the step count itself denotes the final
    /// comparison) and a reason.
    InvalidAtStep(usize, String),
}

/// Verdict plus every intermediate presentation, starting with `start`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TietzeReport {
    pub verdict: Verdict,
    pub trace: Vec<Presentation>,
}

/// Replays `script` from `start` and compares the result with `target`.
pub fn verify_tietze_script(start: &Presentation, script: &TietzeScript, target: &Presentation) -> TietzeReport {
    let mut cur = start.clone();
    let mut trace = vec![cur.clone()];
    for (i, step) in script.steps.iter().enumerate() {
        match apply(&cur, step) {
            Ok(next) => {
                cur = next;
                trace.push(cur.clone());
            }
            Err(reason) => {
                return TietzeReport { verdict: Verdict::InvalidAtStep(i, format!("{}: {reason}", step.kind())), trace }
            }
        }
    }
    let renamed = match rename(&cur, &script.rename) {
        Ok(p) => p,
        Err(reason) => return TietzeReport { verdict: Verdict::InvalidAtStep(script.steps.len(), reason), trace },
    };
    let verdict = if renamed.equivalent_up_to_cyclic(target) {
        Verdict::Valid
    } else {
        Verdict::InvalidAtStep(script.steps.len(), format!("final presentation {renamed} differs from target {target}"))
    };
    TietzeReport { verdict, trace }
}

fn rename(p: &Presentation, map: &BTreeMap<String, String>) -> Result<Presentation, String> {
    let gens: Vec<String> = p.generators.iter().map(|g| map.get(g).cloned().unwrap_or_else(|| g.clone())).collect();
    let rels = p.relators.iter().map(|r| r.rename(map)).collect();
    Presentation::new(gens, rels).map_err(|e| format!("renaming: {e}"))
}

fn relator(p: &Presentation, index: usize) -> Result<&Word, String> {
    p.relators.get(index).ok_or_else(|| format!("relator index {index} out of range (have {})", p.relators.len()))
}

fn require_generator(p: &Presentation, name: &str) -> Result<(), String> {
    if p.generators.iter().any(|g| g == name) {
        Ok(())
    } else {
        Err(format!("unknown generator `{name}`"))
    }
}

/// If `w` (cyclically) has the form `g^{±1}` times a word free of `g`, returns
/// the value of `g` in terms of the other generators.
fn solve_for(w: &Word, g: &str) -> Option<Word> {
    if w.occurrences(g) != 1 {
        return None;
    }
    let pos = w.letters().iter().position(|l| l.gen == g)?;
    let rot = w.rotate(pos);
    let rest = Word::new(rot.letters()[1..].iter().cloned());
    // g^e * rest = 1  =>  g = rest^-1 when e = +1, g = rest when e = -1.
    Some(if rot.letters()[0].inv { rest } else { rest.inverse() })
}

fn rebuild(gens: Vec<String>, rels: Vec<Word>) -> Result<Presentation, String> {
    Presentation::new(gens, rels).map_err(|e| e.to_string())
}

fn apply(p: &Presentation, step: &TietzeStep) -> Result<Presentation, String> {
    match step {
        TietzeStep::AddGenerator { name, word } => {
            if p.generators.iter().any(|g| g == name) {
                return Err(format!("generator `{name}` already exists"));
            }
            for g in word.generators() {
                require_generator(p, &g)?;
            }
            let mut gens = p.generators.clone();
            gens.push(name.clone());
            let mut rels = p.relators.clone();
            rels.push(Word::power_of(name, 1).concat(&word.inverse()));
            rebuild(gens, rels)
        }
        TietzeStep::EliminateGenerator { name, relator: idx } => {
            require_generator(p, name)?;
            let idx = match idx {
                Some(i) => {
                    relator(p, *i)?;
                    *i
                }
                None => {
                    let hits: Vec<usize> =
                        (0..p.relators.len()).filter(|&i| p.relators[i].occurrences(name) == 1).collect();
                    match hits.as_slice() {
                        [i] => *i,
                        [] => return Err(format!("no relator contains `{name}` exactly once")),
                        _ => return Err(format!("several relators contain `{name}` exactly once; name one")),
                    }
                }
            };
            let value = solve_for(&p.relators[idx], name)
                .ok_or_else(|| format!("relator {idx} does not contain `{name}` exactly once"))?;
            let gens = p.generators.iter().filter(|g| *g != name).cloned().collect();
            let rels = p
                .relators
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != idx)
                .map(|(_, r)| r.substitute(name, &value))
                .collect();
            rebuild(gens, rels)
        }
        TietzeStep::SubstituteInRelator { index, from, to, by } => {
            let target = relator(p, *index)?;
            let just = relator(p, *by)?;
            if index == by {
                return Err("a relator cannot justify a rewrite of itself".into());
            }
            let identity = from.concat(&to.inverse());
            if identity.is_empty() || !identity.cyclic_equivalent(just) {
                return Err(format!("`{from}` -> `{to}` is not justified by relator {by} (`{just}`)"));
            }
            let (new, count) = target.replace_subword(from, to);
            if count == 0 {
                return Err(format!("`{from}` does not occur in relator {index} (`{target}`)"));
            }
            let mut rels = p.relators.clone();
            rels[*index] = new;
            rebuild(p.generators.clone(), rels)
        }
        TietzeStep::ReplaceGeneratorByInverse { name } => {
            require_generator(p, name)?;
            let inv = Word::power_of(name, -1);
            let rels = p.relators.iter().map(|r| r.substitute(name, &inv)).collect();
            rebuild(p.generators.clone(), rels)
        }
        TietzeStep::ReplaceGeneratorByWord { name, word, justification } => {
            require_generator(p, name)?;
            let just = relator(p, *justification)?;
            let order = power_exponent(just, name)
                .ok_or_else(|| format!("relator {justification} (`{just}`) is not a power of `{name}`"))?;
            let gens_in_word: Vec<String> = word.generators().into_iter().collect();
            let h = match gens_in_word.as_slice() {
                [h] if h != name => h.clone(),
                _ => return Err(format!("`{word}` is not a power of a single other generator")),
            };
            require_generator(p, &h)?;
            let pw = word.exponent_sum(&h);
            if word.len() as i64 != pw.abs() {
                return Err(format!("`{word}` is not a power of `{h}`"));
            }
            let (def_idx, q) = (0..p.relators.len())
                .find_map(|i| definition_exponent(&p.relators[i], &h, name).map(|q| (i, q)))
                .ok_or_else(|| format!("no relator defines `{h}` as a power of `{name}`"))?;
            if (pw * q - 1).rem_euclid(order) != 0 {
                return Err(format!("{pw} * {q} is not 1 mod {order}; `{name}` is not `{word}`"));
            }
            let gens = p.generators.iter().filter(|g| *g != name).cloned().collect();
            let mut rels = Vec::new();
            for (i, r) in p.relators.iter().enumerate() {
                if i == def_idx {
                    continue;
                }
                if i == *justification {
                    rels.push(Word::power_of(&h, order));
                } else {
                    rels.push(r.substitute(name, word));
                }
            }
            rebuild(gens, rels)
        }
        TietzeStep::CyclicPermuteRelator { index, shift } => {
            let r = relator(p, *index)?;
            let mut rels = p.relators.clone();
            rels[*index] = r.rotate(*shift);
            rebuild(p.generators.clone(), rels)
        }
        TietzeStep::InvertRelator { index } => {
            let r = relator(p, *index)?;
            let mut rels = p.relators.clone();
            rels[*index] = r.inverse();
            rebuild(p.generators.clone(), rels)
        }
    }
}

/// `N > 0` when `w` is `g^N` or `g^-N`.
fn power_exponent(w: &Word, g: &str) -> Option<i64> {
    if w.is_empty() || w.occurrences(g) != w.len() {
        return None;
    }
    Some(w.exponent_sum(g).abs())
}

/// `q` when `w` is cyclically `h g^-q` or its inverse, with `h` occurring once.
fn definition_exponent(w: &Word, h: &str, g: &str) -> Option<i64> {
    if w.occurrences(h) != 1 || w.occurrences(g) + 1 != w.len() {
        return None;
    }
    let value = solve_for(w, h)?;
    if value.occurrences(g) != value.len() {
        return None;
    }
    Some(value.exponent_sum(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
        Presentation::new(
            gens.iter().map(|s| s.to_string()).collect(),
            rels.iter().map(|r| Word::parse(r).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn add_then_eliminate() {
        let p = pres(&["x", "t"], &["t^5", "x t^-1 x t^-1 x^-1 t^2"]);
        let q =
            apply(&p, &TietzeStep::AddGenerator { name: "y".into(), word: Word::parse("x t^-1").unwrap() }).unwrap();
        assert_eq!(q.relators[2].to_string(), "y t x^-1");
        let r = apply(&q, &TietzeStep::EliminateGenerator { name: "x".into(), relator: Some(2) }).unwrap();
        assert_eq!(r.generators, vec!["t", "y"]);
        assert_eq!(r.relators[1], Word::parse("y y t^-1 y^-1 t^2").unwrap());
    }

    #[test]
    fn substitution_needs_justification() {
        let p = pres(&["y", "t"], &["t^-5", "y t y^-1 t^-2"]);
        let ok = TietzeStep::SubstituteInRelator {
            index: 1,
            from: Word::parse("t^-2").unwrap(),
            to: Word::parse("t^3").unwrap(),
            by: 0,
        };
        assert_eq!(apply(&p, &ok).unwrap().relators[1], Word::parse("y t y^-1 t^3").unwrap());
        let bad = TietzeStep::SubstituteInRelator {
            index: 1,
            from: Word::parse("t^-2").unwrap(),
            to: Word::parse("t^2").unwrap(),
            by: 0,
        };
        assert!(apply(&p, &bad).is_err());
    }

    #[test]
    fn power_replacement() {
        let p = pres(&["y", "t", "s"], &["t^-5", "y y t y^-1 t^3", "s t^-3"]);
        let step = TietzeStep::ReplaceGeneratorByWord {
            name: "t".into(),
            word: Word::parse("s^2").unwrap(),
            justification: 0,
        };
        let q = apply(&p, &step).unwrap();
        assert_eq!(q.generators, vec!["y", "s"]);
        assert_eq!(q.relators, vec![Word::parse("s^5").unwrap(), Word::parse("y y s^2 y^-1 s^6").unwrap()]);
        let wrong = TietzeStep::ReplaceGeneratorByWord {
            name: "t".into(),
            word: Word::parse("s^3").unwrap(),
            justification: 0,
        };
        assert!(apply(&p, &wrong).is_err());
    }
}
