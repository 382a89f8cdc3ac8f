//! Polygonal complexes on the 2-sphere given by face vertex lists.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::CurvatureError;

/// A closed polygonal surface: each face is a cyclic list of vertex
/// indices, and `degrees[v]` is the recorded degree of vertex `v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalComplex {
    pub faces: Vec<Vec<usize>>,
    pub degrees: Vec<u32>,
}

fn bad(msg: impl Into<String>) -> CurvatureError {
    CurvatureError::Complex(msg.into())
}

fn edge(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl SphericalComplex {
    /// Builds a complex from faces, deriving degrees as corner counts.
    pub fn from_faces(faces: Vec<Vec<usize>>) -> Self {
        let n = faces.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
        let mut degrees = vec![0u32; n];
        for f in &faces {
            for &v in f {
                degrees[v] += 1;
            }
        }
        SphericalComplex { faces, degrees }
    }

    /// Parses the JSON form `{"faces": [[v, ...], ...], "degrees": [d, ...]}`.
    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn vertex_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_uses().len()
    }

    fn edge_uses(&self) -> BTreeMap<(usize, usize), usize> {
        let mut uses = BTreeMap::new();
        for f in &self.faces {
            for i in 0..f.len() {
                *uses.entry(edge(f[i], f[(i + 1) % f.len()])).or_insert(0) += 1;
            }
        }
        uses
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.faces.len() as i64
    }

    /// Checks that faces are polygons on distinct in-range vertices, every
    /// edge borders exactly two faces, each vertex link is one cycle, the
    /// recorded degrees match corner counts, the complex is connected, and
    /// `V - E + F = 2`.
    pub fn validate(&self) -> Result<(), CurvatureError> {
        let n = self.degrees.len();
        if self.faces.is_empty() {
            return Err(bad("no faces"));
        }
        let mut corners = vec![0u32; n];
        for (i, f) in self.faces.iter().enumerate() {
            if f.len() < 3 {
                return Err(bad(format!("face {i} has fewer than 3 corners")));
            }
            if f.iter().collect::<BTreeSet<_>>().len() != f.len() {
                return Err(bad(format!("face {i} repeats a vertex")));
            }
            for &v in f {
                if v >= n {
                    return Err(bad(format!("face {i} references vertex {v}, only {n} vertices")));
                }
                corners[v] += 1;
            }
        }
        for (v, (&c, &d)) in corners.iter().zip(&self.degrees).enumerate() {
            if c != d {
                return Err(bad(format!("vertex {v} has recorded degree {d} but {c} corners")));
            }
            if c == 0 {
                return Err(bad(format!("vertex {v} is isolated")));
            }
        }
        if let Some((e, k)) = self.edge_uses().into_iter().find(|&(_, k)| k != 2) {
            return Err(bad(format!("edge {e:?} borders {k} faces")));
        }
        self.check_links()?;
        self.check_connected()?;
        let chi = self.euler_characteristic();
        if chi != 2 {
            return Err(bad(format!("Euler characteristic {chi}, expected 2")));
        }
        Ok(())
    }

    /// Each vertex's incident faces, joined across shared edges, form a
    /// single cycle.
    fn check_links(&self) -> Result<(), CurvatureError> {
        let mut link: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.degrees.len()];
        for f in &self.faces {
            let m = f.len();
            for i in 0..m {
                link[f[i]].push((f[(i + m - 1) % m], f[(i + 1) % m]));
            }
        }
        for (v, pairs) in link.iter().enumerate() {
            let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for &(a, b) in pairs {
                adj.entry(a).or_default().push(b);
                adj.entry(b).or_default().push(a);
            }
            if adj.values().any(|n| n.len() != 2) {
                return Err(bad(format!("vertex {v} is not a manifold point")));
            }
            let start = pairs[0].0;
            let mut seen = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &y in &adj[&x] {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            if seen.len() != adj.len() {
                return Err(bad(format!("vertex {v} has a disconnected link")));
            }
        }
        Ok(())
    }

    fn check_connected(&self) -> Result<(), CurvatureError> {
        let n = self.degrees.len();
        let mut adj = vec![Vec::new(); n];
        for (a, b) in self.edge_uses().into_keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().all(|&s| s) {
            Ok(())
        } else {
            Err(bad("complex is disconnected"))
        }
    }

    pub fn tetrahedron() -> Self {
        Self::from_faces(vec![vec![0, 1, 2], vec![0, 3, 1], vec![0, 2, 3], vec![1, 3, 2]])
    }

    pub fn cube() -> Self {
        Self::from_faces(vec![
            vec![0, 1, 2, 3],
            vec![4, 7, 6, 5],
            vec![0, 4, 5, 1],
            vec![1, 5, 6, 2],
            vec![2, 6, 7, 3],
            vec![3, 7, 4, 0],
        ])
    }

    pub fn octahedron() -> Self {
        Self::from_faces(vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 1],
            vec![5, 2, 1],
            vec![5, 3, 2],
            vec![5, 4, 3],
            vec![5, 1, 4],
        ])
    }

    /// Apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
    pub fn icosahedron() -> Self {
        let mut faces = Vec::new();
        for i in 0..5 {
            let u = 1 + i;
            let u1 = 1 + (i + 1) % 5;
            let l = 6 + i;
            let l1 = 6 + (i + 1) % 5;
            faces.push(vec![0, u, u1]);
            faces.push(vec![u, l, u1]);
            faces.push(vec![u1, l, l1]);
            faces.push(vec![11, l1, l]);
        }
        Self::from_faces(faces)
    }

    pub fn dodecahedron() -> Self {
        Self::icosahedron().dual()
    }

    /// The five platonic solids.
    pub fn platonic_solids() -> Vec<(&'static str, Self)> {
        vec![
            ("tetrahedron", Self::tetrahedron()),
            ("cube", Self::cube()),
            ("octahedron", Self::octahedron()),
            ("dodecahedron", Self::dodecahedron()),
            ("icosahedron", Self::icosahedron()),
        ]
    }

    /// The dual complex: one vertex per face, one face per vertex with its
    /// incident faces in cyclic order.
    pub fn dual(&self) -> Self {
        let mut by_edge: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (fi, f) in self.faces.iter().enumerate() {
            for i in 0..f.len() {
                by_edge.entry((f[i], f[(i + 1) % f.len()])).or_default().push(fi);
            }
        }
        let mut out = Vec::new();
        for v in 0..self.degrees.len() {
            let Some(start) = self.faces.iter().position(|f| f.contains(&v)) else { continue };
            let mut cycle = vec![start];
            let mut cur = start;
            loop {
                let f = &self.faces[cur];
                let i = f.iter().position(|&x| x == v).unwrap();
                let prev = f[(i + f.len() - 1) % f.len()];
                // The face across the edge (prev, v) traverses it as (v, prev)
                // in a consistently oriented complex; accept either direction.
                let next = by_edge
                    .get(&(v, prev))
                    .into_iter()
                    .chain(by_edge.get(&(prev, v)))
                    .flatten()
                    .copied()
                    .find(|&g| g != cur)
                    .expect("closed surface");
                if next == start {
                    break;
                }
                cycle.push(next);
                cur = next;
            }
            out.push(cycle);
        }
        Self::from_faces(out)
    }

    /// Adds a new vertex inside face `fi` joined to each of its corners.
    pub fn stellar_subdivide(&mut self, fi: usize) {
        let f = self.faces.swap_remove(fi);
        let c = self.degrees.len();
        self.degrees.push(f.len() as u32);
        for i in 0..f.len() {
            let a = f[i];
            let b = f[(i + 1) % f.len()];
            self.faces.push(vec![a, b, c]);
            // One corner of the old face becomes two.
            self.degrees[a] += 1;
        }
    }

    /// Splits face `fi` along the diagonal between corner positions `i` and
    /// `j`, which must be non-adjacent.
    pub fn split_face(&mut self, fi: usize, i: usize, j: usize) -> Result<(), CurvatureError> {
        let f = self.faces[fi].clone();
        let m = f.len();
        let (i, j) = (i.min(j), i.max(j));
        if j >= m || j - i < 2 || (i == 0 && j == m - 1) {
            return Err(bad(format!("corners {i},{j} of a {m}-gon are not a diagonal")));
        }
        let first: Vec<usize> = f[i..=j].to_vec();
        let mut second: Vec<usize> = f[j..].to_vec();
        second.extend_from_slice(&f[..=i]);
        self.faces[fi] = first;
        self.faces.push(second);
        self.degrees[f[i]] += 1;
        self.degrees[f[j]] += 1;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn platonic_solids_validate() {
        for (name, k) in SphericalComplex::platonic_solids() {
            k.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        let d = SphericalComplex::dodecahedron();
        assert_eq!(d.faces.len(), 12);
        assert!(d.faces.iter().all(|f| f.len() == 5));
        assert!(d.degrees.iter().all(|&x| x == 3));
        assert_eq!(SphericalComplex::octahedron().dual().faces.len(), 6);
    }

    #[test]
    fn rejects_bad_degree_and_torus() {
        let mut k = SphericalComplex::cube();
        k.degrees[0] = 4;
        assert!(k.validate().is_err());
        // A 3x3 square torus has V - E + F = 0.
        let idx = |r: usize, c: usize| (r % 3) * 3 + c % 3;
        let mut faces = Vec::new();
        for r in 0..3 {
            for c in 0..3 {
                faces.push(vec![idx(r, c), idx(r, c + 1), idx(r + 1, c + 1), idx(r + 1, c)]);
            }
        }
        let torus = SphericalComplex::from_faces(faces);
        assert_eq!(torus.euler_characteristic(), 0);
        assert!(torus.validate().is_err());
    }

    #[test]
    fn subdivisions_stay_spherical() {
        let mut k = SphericalComplex::cube();
        k.stellar_subdivide(0);
        k.validate().unwrap();
        let big = k.faces.iter().position(|f| f.len() == 4).unwrap();
        k.split_face(big, 0, 2).unwrap();
        k.validate().unwrap();
        assert!(k.split_face(0, 0, 1).is_err());
    }
}
