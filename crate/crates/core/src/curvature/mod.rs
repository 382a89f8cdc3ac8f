//! Exact curvature arithmetic for polygons with given vertex degrees, the
//! closed form for `(8+k)`-gons with degrees in `{3,4,5}`, surplus and
//! deficit, and the Euler identity on spherical complexes.

mod angle;
mod complex;

use thiserror::Error;

pub use angle::{Angle, AngleParseError};
pub use complex::SphericalComplex;

/// Errors from curvature computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CurvatureError {
    #[error("a polygon needs at least one vertex")]
    Empty,
    #[error("vertex degree {0} is below the minimum {1}")]
    DegreeTooSmall(u32, u32),
    #[error("m2 + m3 = {0} exceeds m = {1}")]
    ClosedFormDomain(i64, i64),
    #[error("invalid complex: {0}")]
    Complex(String),
}

/// `c(d_1, ..., d_m) = (2 - m)π + 2π Σ 1/d_i`, requiring every `d_i >= 3`.
pub fn curvature(degrees: &[u32]) -> Result<Angle, CurvatureError> {
    if let Some(&d) = degrees.iter().find(|&&d| d < 3) {
        return Err(CurvatureError::DegreeTooSmall(d, 3));
    }
    curvature_raw(degrees)
}

/// As [`curvature`] but accepting any positive degree.
pub fn curvature_raw(degrees: &[u32]) -> Result<Angle, CurvatureError> {
    if degrees.is_empty() {
        return Err(CurvatureError::Empty);
    }
    if let Some(&d) = degrees.iter().find(|&&d| d == 0) {
        return Err(CurvatureError::DegreeTooSmall(d, 1));
    }
    let m = degrees.len() as i64;
    let sum: Angle = degrees.iter().map(|&d| Angle::new(2, i64::from(d))).sum();
    Ok(Angle::new(2 - m, 1) + sum)
}

/// Degree sequence `3^(m - m2 - m3) 4^m2 5^m3` with `m = 8 + k`.
pub fn closed_form_degrees(k: i64, m2: i64, m3: i64) -> Result<Vec<u32>, CurvatureError> {
    let m = 8 + k;
    if m < 1 || m2 < 0 || m3 < 0 || m2 + m3 > m {
        return Err(CurvatureError::ClosedFormDomain(m2 + m3, m));
    }
    let mut v = vec![3u32; (m - m2 - m3) as usize];
    v.extend(std::iter::repeat_n(4, m2 as usize));
    v.extend(std::iter::repeat_n(5, m3 as usize));
    Ok(v)
}

/// `-(20 + 10k + 5 m2 + 8 m3)π/30`, the curvature of an `(8+k)`-gon with
/// `m2` vertices of degree 4, `m3` of degree 5 and the rest of degree 3.
/// Negative `k` down to `-7` is accepted so every polygon size from 1 up is
/// covered.
pub fn curvature_closed_form(k: i64, m2: i64, m3: i64) -> Result<Angle, CurvatureError> {
    closed_form_degrees(k, m2, m3)?;
    Ok(Angle::thirtieths(-(20 + 10 * k + 5 * m2 + 8 * m3)))
}

/// Edge surplus `c - 2π/15`.
pub fn surplus(c: &Angle) -> Angle {
    c.clone() - Angle::new(2, 15)
}

/// Vertex deficit `2π(1/d - 1/3)`.
pub fn vertex_deficit(d: u32) -> Result<Angle, CurvatureError> {
    if d < 3 {
        return Err(CurvatureError::DegreeTooSmall(d, 3));
    }
    Ok(Angle::new(2, i64::from(d)) - Angle::new(2, 3))
}

/// `π(2 - n2/5)`.
pub fn dagger_bound(n2: u64) -> Angle {
    Angle::new(2, 1) - Angle::new(n2 as i64, 5)
}

/// `(2-k)π + k(2π/3) + k(π/3)`, evaluated term by term. Always `2π`.
pub fn delta0_bound(k: u64) -> Angle {
    let k = k as i64;
    let v = Angle::new(2 - k, 1) + Angle::new(2, 3).times(k) + Angle::new(1, 3).times(k);
    debug_assert_eq!(v, Angle::new(2, 1));
    v
}

/// `(2-k)π + k(2π/3) + k(2π/15)`: the upper bound on a region of degree `k`
/// whose vertices all have degree at least 3 and whose edges each receive at
/// most `2π/15`.
pub fn type_a_bound(k: u64) -> Angle {
    let k = k as i64;
    Angle::new(2 - k, 1) + Angle::new(2, 3).times(k) + Angle::new(2, 15).times(k)
}

/// Sum of face curvatures, computed with [`curvature_raw`]. Rejects
/// complexes that fail [`SphericalComplex::validate`].
pub fn total_curvature(k: &SphericalComplex) -> Result<Angle, CurvatureError> {
    k.validate()?;
    let mut total = Angle::zero();
    for face in &k.faces {
        let degs: Vec<u32> = face.iter().map(|&v| k.degrees[v]).collect();
        total += curvature_raw(&degs)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(curvature(&[3, 3, 3, 3]).unwrap(), Angle::new(2, 3));
        assert_eq!(curvature(&[3, 4, 4, 7]).unwrap(), Angle::new(-1, 21));
        assert_eq!(curvature(&[3, 3, 3, 3, 4, 5]).unwrap(), Angle::new(-13, 30));
        assert_eq!(curvature(&[6, 6, 6]).unwrap(), Angle::zero());
        assert_eq!(curvature(&[]), Err(CurvatureError::Empty));
        assert!(curvature(&[2, 3, 3]).is_err());
        assert_eq!(curvature_raw(&[2, 2]).unwrap(), Angle::new(2, 1));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(curvature_closed_form(0, 0, 0).unwrap(), Angle::new(-2, 3));
        assert_eq!(curvature_closed_form(0, 1, 0).unwrap(), Angle::thirtieths(-25));
        assert_eq!(curvature_closed_form(1, 0, 1).unwrap(), Angle::thirtieths(-38));
        assert!(curvature_closed_form(0, 5, 4).is_err());
    }

    #[test]
    fn surplus_and_deficit() {
        assert_eq!(surplus(&Angle::new(1, 5)), Angle::new(1, 15));
        assert_eq!(vertex_deficit(3).unwrap(), Angle::zero());
        assert_eq!(vertex_deficit(4).unwrap(), Angle::new(-1, 6));
    }

    #[test]
    fn bounds() {
        assert_eq!(dagger_bound(10), Angle::zero());
        assert_eq!(dagger_bound(9), Angle::new(1, 5));
        assert_eq!(dagger_bound(0), Angle::new(2, 1));
        for k in [1, 5, 100] {
            assert_eq!(delta0_bound(k), Angle::new(2, 1));
        }
        assert!(type_a_bound(10).is_zero());
        assert!(type_a_bound(9).is_positive());
    }
}
