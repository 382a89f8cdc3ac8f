//! Planar subdivision of the disk by chords.
//!
//! Boundary vertices are 0-based internally. Around each vertex the incident
//! edges are sorted by a key that encodes how far, clockwise, the other end
//! lies; tracing "next edge in rotation" from each dart then walks the faces.

use serde::{Deserialize, Serialize};

use super::config::{crosses, ChordConfig};
use super::RegionError;

/// An edge of the subdivided disk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeRef {
    /// Boundary edge from vertex `i` to `i+1` (0-based, mod `m`).
    Boundary(usize),
    /// Index into `ChordConfig::chords`.
    Chord(usize),
}

/// A traversal of `edge` leaving 0-based vertex `from`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dart {
    pub edge: EdgeRef,
    pub from: usize,
    pub to: usize,
}

/// One face: its darts in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn boundary_edges(&self) -> Vec<usize> {
        self.darts
            .iter()
            .filter_map(|d| match d.edge {
                EdgeRef::Boundary(i) => Some(i),
                EdgeRef::Chord(_) => None,
            })
            .collect()
    }

    pub fn chords(&self) -> Vec<usize> {
        self.darts
            .iter()
            .filter_map(|d| match d.edge {
                EdgeRef::Chord(c) => Some(c),
                EdgeRef::Boundary(_) => None,
            })
            .collect()
    }

    /// Corners as `(vertex, incoming edge, outgoing edge)`.
    pub fn corners(&self) -> Vec<(usize, EdgeRef, EdgeRef)> {
        let k = self.darts.len();
        (0..k).map(|i| (self.darts[i].to, self.darts[i].edge, self.darts[(i + 1) % k].edge)).collect()
    }
}

fn endpoints(c: &ChordConfig, e: EdgeRef) -> (usize, usize) {
    match e {
        EdgeRef::Boundary(i) => (i, (i + 1) % c.m),
        EdgeRef::Chord(j) => (c.chords[j].0 - 1, c.chords[j].1 - 1),
    }
}

/// The inner faces of the disk cut along the chords of `c`.
pub fn faces(c: &ChordConfig) -> Result<Vec<Face>, RegionError> {
    let m = c.m;
    for (i, &(p, q)) in c.chords.iter().enumerate() {
        if p == q || p == 0 || q == 0 || p > m || q > m {
            return Err(RegionError::BadChord { p, q, m });
        }
        for &other in &c.chords[i + 1..] {
            if crosses((p, q), other) {
                return Err(RegionError::Crossing((p, q), other));
            }
        }
    }
    let mi = m as i64;
    let mut rot: Vec<Vec<((i64, i64), EdgeRef)>> = vec![Vec::new(); m];
    for i in 0..m {
        let e = EdgeRef::Boundary(i);
        rot[i].push(((1, -1), e));
        rot[(i + 1) % m].push(((mi - 1, 1), e));
    }
    for (idx, &(p1, q1)) in c.chords.iter().enumerate() {
        let copy = c.chords[..idx].iter().filter(|&&x| x == (p1, q1)).count() as i64;
        let (mut p, mut q) = (p1 - 1, q1 - 1);
        if (q + m - p) % m > m / 2 {
            std::mem::swap(&mut p, &mut q);
        }
        let d = ((q + m - p) % m) as i64;
        let e = EdgeRef::Chord(idx);
        rot[p].push(((d, copy), e));
        rot[q].push(((mi - d, -copy), e));
    }
    for r in &mut rot {
        r.sort();
    }
    let nedges = m + c.chords.len();
    let eid = |e: EdgeRef| match e {
        EdgeRef::Boundary(i) => i,
        EdgeRef::Chord(j) => m + j,
    };
    // Position of each edge in the rotation at each endpoint.
    let mut pos = vec![[usize::MAX; 2]; nedges];
    for (v, r) in rot.iter().enumerate() {
        for (k, &(_, e)) in r.iter().enumerate() {
            let side = usize::from(endpoints(c, e).0 != v);
            pos[eid(e)][side] = k;
        }
    }
    // A dart is (edge, side) where side 0 leaves the first endpoint.
    let mut seen = vec![[false; 2]; nedges];
    let mut out = Vec::new();
    for id in 0..nedges {
        let e = if id < m { EdgeRef::Boundary(id) } else { EdgeRef::Chord(id - m) };
        for side in 0..2 {
            if seen[id][side] {
                continue;
            }
            let mut darts = Vec::new();
            let (mut ce, mut cs) = (e, side);
            while !seen[eid(ce)][cs] {
                seen[eid(ce)][cs] = true;
                let (a, b) = endpoints(c, ce);
                let (from, to) = if cs == 0 { (a, b) } else { (b, a) };
                darts.push(Dart { edge: ce, from, to });
                let r = &rot[to];
                let k = pos[eid(ce)][1 - cs];
                let next = r[(k + 1) % r.len()].1;
                cs = usize::from(endpoints(c, next).0 != to);
                ce = next;
            }
            let outer = darts.iter().all(|d| matches!(d.edge, EdgeRef::Boundary(i) if d.from == i));
            if !outer {
                out.push(Face { darts });
            }
        }
    }
    Ok(out)
}
