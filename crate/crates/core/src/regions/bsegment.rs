//! b-segments: maximal boundary runs through degree-3 vertices whose corner
//! letters alternate between `x⁻¹` and `y⁻¹` (or `x` and `y` after
//! inverting the region).
//!
//! A degree-3 vertex with an `x^±1` or `y^±1` corner must carry the vertex
//! label `ã x y⁻¹` up to rotation and inversion, since it is the only
//! degree-3 label using those letters. So corner letters and degrees
//! suffice.

use serde::{Deserialize, Serialize};

use crate::stargraph::{Base, CornerLetter};

/// A b-segment on boundary edges `start, start+1, …, start+length-1`
/// (0-based, mod `m`), where edge `i` joins vertex `i` to vertex `i+1`.
/// The `length - 1` interior vertices have degree 3 and alternating corners
/// `corners`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BSegment {
    pub start: usize,
    pub length: usize,
    pub corners: Vec<CornerLetter>,
}

fn b_vertex(l: CornerLetter, d: u32) -> bool {
    d == 3 && matches!(l.base, Base::X | Base::Y)
}

/// Consecutive interior vertices must alternate `x`/`y` with a common sign.
fn continues(prev: CornerLetter, next: CornerLetter) -> bool {
    prev.base != next.base && prev.inv == next.inv
}

/// Finds every b-segment of a region given its boundary corner letters and
/// vertex degrees, both indexed by boundary vertex. When the whole boundary
/// is one alternating cycle the single segment has length `m`.
pub fn find_b_segments(corners: &[CornerLetter], degrees: &[u32]) -> Vec<BSegment> {
    let m = corners.len();
    assert_eq!(m, degrees.len(), "one degree per corner");
    let is_b: Vec<bool> = (0..m).map(|v| b_vertex(corners[v], degrees[v])).collect();
    let linked = |v: usize| {
        let w = (v + 1) % m;
        is_b[v] && is_b[w] && continues(corners[v], corners[w])
    };
    if m > 0 && (0..m).all(linked) {
        return vec![BSegment { start: 0, length: m, corners: corners.to_vec() }];
    }
    // Start each run at a b-vertex not linked from its predecessor.
    let mut out = Vec::new();
    for v in 0..m {
        if !is_b[v] || linked((v + m - 1) % m) {
            continue;
        }
        let mut run = vec![corners[v]];
        let mut w = v;
        while linked(w) {
            w = (w + 1) % m;
            run.push(corners[w]);
        }
        out.push(BSegment { start: (v + m - 1) % m, length: run.len() + 1, corners: run });
    }
    out.sort_by_key(|s| s.start);
    out
}

/// Total length `n₁` of the b-segments; `n₂ = m - n₁`.
pub fn b_segment_total(segments: &[BSegment]) -> usize {
    segments.iter().map(|s| s.length).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> CornerLetter {
        CornerLetter::parse(s).unwrap()
    }

    #[test]
    fn single_interior_vertex() {
        let corners = [l("a"), l("y^-1"), l("b"), l("l"), l("l")];
        let segs = find_b_segments(&corners, &[4, 3, 4, 4, 4]);
        assert_eq!(segs, vec![BSegment { start: 0, length: 2, corners: vec![l("y^-1")] }]);
    }

    #[test]
    fn alternating_pair_and_break() {
        let corners = [l("a"), l("y^-1"), l("x^-1"), l("x^-1"), l("b"), l("y"), l("x")];
        let degs = [5, 3, 3, 4, 4, 3, 3];
        let segs = find_b_segments(&corners, &degs);
        assert_eq!(segs.len(), 2);
        assert_eq!((segs[0].start, segs[0].length), (0, 3));
        assert_eq!((segs[1].start, segs[1].length), (4, 3));
        assert_eq!(b_segment_total(&segs), 6);
        // Two equal letters in a row end one run and start the next.
        let segs = find_b_segments(&corners, &[5, 3, 3, 3, 4, 4, 4]);
        assert_eq!(segs.iter().map(|s| (s.start, s.length)).collect::<Vec<_>>(), vec![(0, 3), (2, 2)]);
    }

    #[test]
    fn high_degree_gives_nothing() {
        let corners = [l("x^-1"), l("y^-1"), l("x^-1"), l("y^-1")];
        assert!(find_b_segments(&corners, &[4, 4, 5, 6]).is_empty());
        assert_eq!(find_b_segments(&corners, &[3, 3, 3, 3])[0].length, 4);
    }
}
