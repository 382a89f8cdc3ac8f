//! Smith normal form over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    /// The zero matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    /// Builds a matrix from row vectors. All rows must share one length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = IntegerMatrix::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, v) in r.iter().enumerate() {
                m[(i, j)] = v.clone().into();
            }
        }
        m
    }

    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        let mut m = IntegerMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Matrix product.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = a * &other[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = q * &self[(src, j)];
            self[(dst, j)] -= v;
        }
    }

    /// col[dst] -= q * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = q * &self[(i, src)];
            self[(i, dst)] -= v;
        }
    }

    /// Diagonal `d_1 | d_2 | ... | d_k` of the Smith normal form, with
    /// `k = min(rows, cols)` and every `d_i >= 0`. Pivots on the entry of
    /// smallest absolute value in the remaining block.
    pub fn smith_diagonal(&self) -> Vec<BigInt> {
        let mut m = self.clone();
        let k = m.rows.min(m.cols);
        let mut diag = Vec::with_capacity(k);
        for t in 0..k {
            loop {
                let mut best: Option<(usize, usize)> = None;
                for i in t..m.rows {
                    for j in t..m.cols {
                        let v = &m[(i, j)];
                        if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < m[(bi, bj)].abs()) {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((pi, pj)) = best else {
                    diag.resize(k, BigInt::zero());
                    return diag;
                };
                m.swap_rows(t, pi);
                m.swap_cols(t, pj);
                let p = m[(t, t)].clone();
                let mut clean = true;
                for i in t + 1..m.rows {
                    if !m[(i, t)].is_zero() {
                        let q = m[(i, t)].div_floor(&p);
                        m.row_axpy(i, t, &q);
                        clean &= m[(i, t)].is_zero();
                    }
                }
                for j in t + 1..m.cols {
                    if !m[(t, j)].is_zero() {
                        let q = m[(t, j)].div_floor(&p);
                        m.col_axpy(j, t, &q);
                        clean &= m[(t, j)].is_zero();
                    }
                }
                if !clean {
                    continue;
                }
                // Enforce divisibility of the remaining block by the pivot.
                let offender = (t + 1..m.rows)
                    .flat_map(|i| (t + 1..m.cols).map(move |j| (i, j)))
                    .find(|&(i, j)| !m[(i, j)].is_multiple_of(&p));
                match offender {
                    Some((i, _)) => {
                        let minus_one = -BigInt::one();
                        m.row_axpy(t, i, &minus_one);
                    }
                    None => break,
                }
            }
            diag.push(m[(t, t)].abs());
        }
        diag
    }
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

/// Invariant factors of the abelian group presented by `m` (rows are
/// relations, columns generators): nonunit diagonal entries, then one `0`
/// per free rank.
pub fn invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    let diag = m.smith_diagonal();
    let mut out: Vec<BigInt> = diag.iter().filter(|d| !d.is_one() && !d.is_zero()).cloned().collect();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    out.extend(std::iter::repeat_n(BigInt::zero(), m.cols - rank));
    out
}
