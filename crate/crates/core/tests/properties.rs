//! Property tests for word reduction, Smith normal form and the two
//! canonical forms, each against a brute-force oracle.

use fib_core::oracle::{invariant_factors, IntegerMatrix};
use fib_core::presentations::{build_fibonacci, shift_subscripts, Letter, Word};
use fib_core::regions::{crosses, ChordConfig};
use fib_core::stargraph::{CornerLetter, VertexLabel};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn letter() -> impl Strategy<Value = Letter> {
    (0..3usize, any::<bool>()).prop_map(|(g, inv)| {
        let name = ["a", "b", "c"][g];
        if inv {
            Letter::neg(name)
        } else {
            Letter::pos(name)
        }
    })
}

/// Removes the leftmost cancelling pair until none is left.
fn naive_reduce(mut v: Vec<Letter>) -> Vec<Letter> {
    while let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i].cancels(&v[i + 1])) {
        v.drain(i..i + 2);
    }
    v
}

proptest! {
    #[test]
    fn reduction_matches_naive(ls in prop::collection::vec(letter(), 0..50)) {
        let w = Word::new(ls.clone());
        let naive = naive_reduce(ls.clone());
        prop_assert_eq!(w.letters(), naive.as_slice());
        prop_assert!(w.len() <= ls.len());
        prop_assert_eq!(Word::new(w.letters().to_vec()), w.clone());
        prop_assert!(w.concat(&w.inverse()).is_empty());
    }

    #[test]
    fn cyclic_reduction_is_rotation_invariant(ls in prop::collection::vec(letter(), 1..30), k in 0usize..30) {
        let w = Word::new(ls).cyclically_reduce();
        prop_assert!(w.is_cyclically_reduced());
        if !w.is_empty() {
            let r = w.rotate(k % w.len());
            prop_assert!(r.cyclic_equivalent(&w));
            prop_assert!(r.inverse().cyclic_equivalent(&w));
        }
    }

    #[test]
    fn text_round_trip(ls in prop::collection::vec(letter(), 0..30)) {
        let w = Word::new(ls);
        prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn fibonacci_relators_shift_invariant(r in 2i64..7, n in 2i64..9) {
        let p = build_fibonacci(r, n).unwrap();
        let mut shifted: Vec<Word> = p.relators.iter().map(|w| shift_subscripts(w, n as usize)).collect();
        let mut orig = p.relators.clone();
        shifted.sort();
        orig.sort();
        prop_assert_eq!(shifted, orig);
    }
}

/// Determinant by permutation expansion.
fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0;
    for (j, _) in m[0].iter().enumerate() {
        let minor: Vec<Vec<i128>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
            .collect();
        let sign = if j % 2 == 0 { 1 } else { -1 };
        total += sign * m[0][j] * det(&minor);
    }
    total
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Smith diagonal from determinantal divisors: `D_i` is the gcd of all
/// `i x i` minors and `d_i = D_i / D_{i-1}`.
fn diagonal_by_minors(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = m[0].len();
    let mut prev = 1i128;
    let mut out = Vec::new();
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g == 0 {
            out.extend(std::iter::repeat_n(0, rows.min(cols) - out.len()));
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..4, 1usize..4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..10, c), r))
}

proptest! {
    #[test]
    fn smith_diagonal_matches_minors(m in matrix()) {
        let got: Vec<BigInt> = IntegerMatrix::from_rows(&m).smith_diagonal();
        let want: Vec<BigInt> = diagonal_by_minors(&m).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(&got, &want);
        for w in got.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]) || w[0] == BigInt::from(0) && w[1] == BigInt::from(0));
        }
    }

    #[test]
    fn invariants_survive_unimodular_change(m in matrix(), ops in prop::collection::vec((0usize..3, 0usize..3, -3i64..4), 0..8)) {
        let a = IntegerMatrix::from_rows(&m);
        let mut u = IntegerMatrix::identity(a.rows);
        for &(i, j, k) in &ops {
            let (i, j) = (i % a.rows, j % a.rows);
            if i != j {
                let mut e = IntegerMatrix::identity(a.rows);
                e[(i, j)] = BigInt::from(k);
                u = e.mul(&u);
            }
        }
        prop_assert_eq!(invariant_factors(&u.mul(&a)), invariant_factors(&a));
    }
}

fn corner() -> impl Strategy<Value = CornerLetter> {
    (0usize..12).prop_map(|i| CornerLetter::all()[i])
}

proptest! {
    #[test]
    fn label_canonical_is_orbit_minimum(ls in prop::collection::vec(corner(), 1..8), k in 0usize..8, inv in any::<bool>()) {
        let w = VertexLabel::new(ls);
        let c = w.canonical();
        let moved = if inv { w.rotate(k).inverse() } else { w.rotate(k) };
        prop_assert_eq!(moved.canonical(), c.clone());
        prop_assert_eq!(c.canonical(), c.clone());
        let orbit_min = (0..w.len()).flat_map(|i| [w.rotate(i), w.inverse().rotate(i)]).min().unwrap();
        prop_assert_eq!(c, orbit_min);
    }

    #[test]
    fn chord_canonical_is_dihedral_minimum(m in 4usize..10, raw in prop::collection::vec((1usize..10, 1usize..10), 0..6), r in 0usize..10, reflect in any::<bool>()) {
        let mut chords: Vec<(usize, usize)> = Vec::new();
        for (p, q) in raw {
            let (p, q) = ((p - 1) % m + 1, (q - 1) % m + 1);
            let c = (p.min(q), p.max(q));
            if p != q && !chords.iter().any(|&d| crosses(c, d)) {
                chords.push(c);
            }
        }
        let cfg = ChordConfig::new(m, chords).unwrap();
        let c = cfg.canonical();
        prop_assert_eq!(cfg.transform(r % m, reflect).canonical(), c.clone());
        let mut images: Vec<Vec<(usize, usize)>> = Vec::new();
        for s in 0..m {
            for refl in [false, true] {
                let mut img: Vec<(usize, usize)> = cfg
                    .chords
                    .iter()
                    .map(|&(p, q)| {
                        let f = |v: usize| if refl { (m - (v - 1) + s) % m + 1 } else { (v - 1 + s) % m + 1 };
                        (f(p).min(f(q)), f(p).max(f(q)))
                    })
                    .collect();
                img.sort();
                images.push(img);
            }
        }
        prop_assert_eq!(c.chords, images.into_iter().min().unwrap());
    }
}
