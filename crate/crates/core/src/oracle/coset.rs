//! Todd–Coxeter coset enumeration over the trivial subgroup.
//!
//! Two definition strategies are provided. `Hlt` scans and fills every
//! relator from each coset in order; `Felsch` defines one entry at a time
//! and processes all consequences before the next definition. Both use the
//! same coincidence routine with union-find forwarding.

use serde::{Deserialize, Serialize};

use crate::presentations::Presentation;

/// Default coset budget.
pub const DEFAULT_MAX_COSETS: usize = 200_000;

/// Coset definition strategy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    Hlt,
    Felsch,
}

/// Result of an enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Enumeration {
    /// The table closed with this many live cosets, and every relator traced
    /// to the identity from every live coset.
    Finite(u64),
    /// More than the budgeted number of cosets were needed. This says nothing
    /// about infiniteness.
    Overflow,
}

/// Enumeration result plus bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub result: Enumeration,
    /// Total cosets ever defined, including ones later identified.
    pub cosets_defined: usize,
    pub strategy: Strategy,
}

const UNDEF: u32 = 0;

/// A coset table with 1-based coset numbers; `0` marks an undefined entry.
#[derive(Clone, Debug)]
pub struct CosetTable {
    cols: usize,
    table: Vec<u32>,
    forward: Vec<u32>,
    live: Vec<bool>,
    defined: usize,
    max_cosets: usize,
    deductions: Vec<(u32, usize)>,
    record_deductions: bool,
}

#[derive(Debug)]
struct Overflowed;

impl CosetTable {
    fn new(ngens: usize, max_cosets: usize, record_deductions: bool) -> Self {
        let cols = 2 * ngens;
        let mut t = CosetTable {
            cols,
            table: vec![UNDEF; 2 * cols],
            forward: vec![0, 1],
            live: vec![false, true],
            defined: 1,
            max_cosets,
            deductions: Vec::new(),
            record_deductions,
        };
        t.forward[1] = 1;
        t
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.cols + x] = d;
    }

    /// Sets `c.x = d` and `d.x^-1 = c`.
    fn link(&mut self, c: u32, x: usize, d: u32) {
        self.set(c, x, d);
        self.set(d, x ^ 1, c);
        if self.record_deductions {
            self.deductions.push((c, x));
        }
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32, Overflowed> {
        if self.defined >= self.max_cosets {
            return Err(Overflowed);
        }
        self.defined += 1;
        let d = self.live.len() as u32;
        self.live.push(true);
        self.forward.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.link(c, x, d);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.forward[r as usize] != r {
            r = self.forward[r as usize];
        }
        let mut k = c;
        while self.forward[k as usize] != r {
            let next = self.forward[k as usize];
            self.forward[k as usize] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32, queue: &mut Vec<u32>) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.forward[hi as usize] = lo;
        self.live[hi as usize] = false;
        queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let e = queue[i];
            i += 1;
            for x in 0..self.cols {
                let f = self.get(e, x);
                if f == UNDEF {
                    continue;
                }
                if self.get(f, x ^ 1) == e {
                    self.set(f, x ^ 1, UNDEF);
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let g = self.get(e1, x);
                if g != UNDEF {
                    self.merge(f1, g, &mut queue);
                } else {
                    let h = self.get(f1, x ^ 1);
                    if h != UNDEF {
                        self.merge(e1, h, &mut queue);
                    } else {
                        self.link(e1, x, f1);
                    }
                }
            }
        }
    }

    /// Scans `w` from coset `c`. With `fill`, missing cosets are defined.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> Result<(), Overflowed> {
        if w.is_empty() {
            return Ok(());
        }
        let mut f = c;
        let mut b = c;
        let mut i: isize = 0;
        let mut j: isize = w.len() as isize - 1;
        loop {
            while i <= j {
                let n = self.get(f, w[i as usize]);
                if n == UNDEF {
                    break;
                }
                f = n;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let n = self.get(b, w[j as usize] ^ 1);
                if n == UNDEF {
                    break;
                }
                b = n;
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                self.link(f, w[i as usize], b);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    fn live_cosets(&self) -> Vec<u32> {
        (1..self.live.len() as u32).filter(|&c| self.live[c as usize]).collect()
    }

    fn is_complete(&self) -> bool {
        self.live_cosets().iter().all(|&c| (0..self.cols).all(|x| self.get(c, x) != UNDEF))
    }

    /// Every relator traces from every live coset back to itself, and the
    /// table is closed under inverses.
    fn audit(&self, relators: &[Vec<usize>]) -> bool {
        let live = self.live_cosets();
        for &c in &live {
            for x in 0..self.cols {
                let d = self.get(c, x);
                if d == UNDEF || !self.live[d as usize] || self.get(d, x ^ 1) != c {
                    return false;
                }
            }
            for r in relators {
                let mut k = c;
                for &x in r {
                    k = self.get(k, x);
                }
                if k != c {
                    return false;
                }
            }
        }
        true
    }
}

fn relator_columns(p: &Presentation) -> Vec<Vec<usize>> {
    p.relators
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| {
            r.letters()
                .iter()
                .map(|l| {
                    let g = p.generators.iter().position(|g| *g == l.gen).expect("validated presentation");
                    2 * g + usize::from(l.inv)
                })
                .collect()
        })
        .collect()
}

/// Enumerates the cosets of the trivial subgroup with the Felsch strategy.
/// HLT needs more than the default budget for `F(2,7)`, Felsch does not.
pub fn coset_enumerate(p: &Presentation, max_cosets: usize) -> Enumeration {
    coset_enumerate_with(p, max_cosets, Strategy::Felsch).result
}

/// Enumerates with an explicit strategy and returns bookkeeping.
pub fn coset_enumerate_with(p: &Presentation, max_cosets: usize, strategy: Strategy) -> EnumerationReport {
    let rels = relator_columns(p);
    let ngens = p.generators.len();
    let mut t = CosetTable::new(ngens, max_cosets.max(1), strategy == Strategy::Felsch);
    let run = match strategy {
        Strategy::Hlt => run_hlt(&mut t, &rels),
        Strategy::Felsch => run_felsch(&mut t, &rels),
    };
    let result = match run {
        Err(Overflowed) => Enumeration::Overflow,
        Ok(()) => {
            assert!(t.audit(&rels), "closed coset table failed the relator audit");
            Enumeration::Finite(t.live_cosets().len() as u64)
        }
    };
    EnumerationReport { result, cosets_defined: t.defined, strategy }
}

fn run_hlt(t: &mut CosetTable, rels: &[Vec<usize>]) -> Result<(), Overflowed> {
    let mut c = 1u32;
    while (c as usize) < t.live.len() {
        if t.live[c as usize] {
            for r in rels {
                if !t.live[c as usize] {
                    break;
                }
                t.scan(c, r, true)?;
            }
            for x in 0..t.cols {
                if !t.live[c as usize] {
                    break;
                }
                if t.get(c, x) == UNDEF {
                    t.define(c, x)?;
                }
            }
        }
        c += 1;
    }
    debug_assert!(t.is_complete());
    Ok(())
}

fn run_felsch(t: &mut CosetTable, rels: &[Vec<usize>]) -> Result<(), Overflowed> {
    // For each column, every cyclic conjugate of every relator and its inverse
    // that starts with that column.
    let mut by_first: Vec<Vec<Vec<usize>>> = vec![Vec::new(); t.cols];
    for r in rels {
        let inv: Vec<usize> = r.iter().rev().map(|x| x ^ 1).collect();
        for w in [r, &inv] {
            for k in 0..w.len() {
                let mut rot = w[k..].to_vec();
                rot.extend_from_slice(&w[..k]);
                if !by_first[rot[0]].contains(&rot) {
                    by_first[rot[0]].push(rot);
                }
            }
        }
    }
    for r in rels {
        t.scan(1, r, false)?;
    }
    process_deductions(t, &by_first)?;
    let mut c = 1u32;
    while (c as usize) < t.live.len() {
        for x in 0..t.cols {
            if !t.live[c as usize] {
                break;
            }
            if t.get(c, x) == UNDEF {
                t.define(c, x)?;
                process_deductions(t, &by_first)?;
            }
        }
        c += 1;
    }
    // Felsch is complete on its own; a final HLT sweep guards the audit.
    if !t.audit(rels) {
        t.record_deductions = false;
        run_hlt(t, rels)?;
    }
    Ok(())
}

fn process_deductions(t: &mut CosetTable, by_first: &[Vec<Vec<usize>>]) -> Result<(), Overflowed> {
    while let Some((c, x)) = t.deductions.pop() {
        let c = t.rep(c);
        for w in &by_first[x] {
            t.scan(c, w, false)?;
        }
        let d = t.get(c, x);
        if d != UNDEF {
            let d = t.rep(d);
            for w in &by_first[x ^ 1] {
                t.scan(d, w, false)?;
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentations::{build_fibonacci, Word};

    fn pres(gens: &[&str], rels: &[&str]) -> Presentation {
        Presentation::new(
            gens.iter().map(|s| s.to_string()).collect(),
            rels.iter().map(|r| Word::parse(r).unwrap()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn cyclic_group() {
        let p = pres(&["a"], &["a^5"]);
        assert_eq!(coset_enumerate(&p, 100), Enumeration::Finite(5));
        assert_eq!(coset_enumerate_with(&p, 100, Strategy::Felsch).result, Enumeration::Finite(5));
    }

    #[test]
    fn symmetric_group_s3() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "a b a b"]);
        for s in [Strategy::Hlt, Strategy::Felsch] {
            assert_eq!(coset_enumerate_with(&p, 1000, s).result, Enumeration::Finite(6));
        }
    }

    #[test]
    fn quaternion() {
        let p = build_fibonacci(2, 3).unwrap();
        for s in [Strategy::Hlt, Strategy::Felsch] {
            assert_eq!(coset_enumerate_with(&p, 10_000, s).result, Enumeration::Finite(8));
        }
    }

    #[test]
    fn free_group_overflows() {
        let p = pres(&["a", "b"], &[]);
        assert_eq!(coset_enumerate(&p, 500), Enumeration::Overflow);
        let z2 = pres(&["a", "b"], &["a b a^-1 b^-1"]);
        assert_eq!(coset_enumerate_with(&z2, 500, Strategy::Felsch).result, Enumeration::Overflow);
    }

    #[test]
    fn trivial_group() {
        let p = build_fibonacci(2, 2).unwrap();
        assert_eq!(coset_enumerate(&p, 100), Enumeration::Finite(1));
        let q = pres(&["a"], &["a"]);
        assert_eq!(coset_enumerate_with(&q, 100, Strategy::Felsch).result, Enumeration::Finite(1));
    }
}
