//! Simplicial sets from nondegenerate data.
//!
//! Every simplex is uniquely `σ^* x` for a nondegenerate `x` of dimension `m`
//! and a monotone surjection `σ: [k] → [m]`. The builder records the faces of
//! each nondegenerate simplex and generates all degeneracies up to the
//! requested dimension bound.

use std::collections::HashMap;

use super::SimplicialSet;
use crate::error::{Error, Result};

/// A simplex of the set under construction: a nondegenerate simplex together
/// with a monotone surjection onto its dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Handle {
    base: usize,
    surjection: Vec<u8>,
}

impl Handle {
    pub fn dim(&self) -> usize {
        self.surjection.len() - 1
    }

    pub fn is_degenerate(&self) -> bool {
        self.surjection.windows(2).any(|w| w[0] == w[1])
    }
}

#[derive(Default)]
pub struct Builder {
    dims: Vec<usize>,
    faces: Vec<Vec<Handle>>,
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self) -> Handle {
        self.dims.push(0);
        self.faces.push(Vec::new());
        Handle { base: self.dims.len() - 1, surjection: vec![0] }
    }

    /// Adds a nondegenerate simplex with faces `d_0, …, d_m`.
    pub fn simplex(&mut self, faces: Vec<Handle>) -> Result<Handle> {
        let m = faces.len().checked_sub(1).filter(|&m| m >= 1).ok_or_else(|| {
            Error::InvalidSimplicialSet("a positive-dimensional simplex needs at least two faces".into())
        })?;
        if let Some(f) = faces.iter().find(|f| f.dim() != m - 1) {
            return Err(Error::InvalidSimplicialSet(format!("face of dimension {} given for a {m}-simplex", f.dim())));
        }
        if m >= 2 {
            for j in 1..faces.len() {
                for i in 0..j {
                    if self.face(&faces[j], i) != self.face(&faces[i], j - 1) {
                        return Err(Error::InvalidSimplicialSet(format!(
                            "faces violate d_{i} d_{j} = d_{} d_{i}",
                            j - 1
                        )));
                    }
                }
            }
        }
        self.dims.push(m);
        self.faces.push(faces);
        Ok(Handle { base: self.dims.len() - 1, surjection: (0..=m as u8).collect() })
    }

    /// `s_j` applied to a handle.
    pub fn degen(&self, h: &Handle, j: usize) -> Handle {
        let mut surjection = h.surjection.clone();
        surjection.insert(j, surjection[j]);
        Handle { base: h.base, surjection }
    }

    /// `d_i` applied to a handle.
    pub fn face(&self, h: &Handle, i: usize) -> Handle {
        let m = self.dims[h.base];
        let mut tau = h.surjection.clone();
        tau.remove(i);
        let missing = (0..=m as u8).find(|v| tau.binary_search(v).is_err());
        match missing {
            None => Handle { base: h.base, surjection: tau },
            Some(j) => {
                let lowered: Vec<u8> = tau.iter().map(|&v| if v > j { v - 1 } else { v }).collect();
                let inner = &self.faces[h.base][j as usize];
                let surjection = lowered.iter().map(|&p| inner.surjection[p as usize]).collect();
                Handle { base: inner.base, surjection }
            }
        }
    }

    /// The handle of a nondegenerate simplex viewed at a higher level through
    /// an explicit monotone surjection.
    pub fn handle(&self, base: usize, surjection: Vec<u8>) -> Handle {
        Handle { base, surjection }
    }

    pub fn build(&self, dim: usize) -> Result<SimplicialSet> {
        let mut levels: Vec<Vec<Handle>> = vec![Vec::new(); dim + 1];
        for (base, &m) in self.dims.iter().enumerate() {
            for (k, level) in levels.iter_mut().enumerate().skip(m) {
                for surjection in surjections(k, m) {
                    level.push(Handle { base, surjection });
                }
            }
        }
        let index: Vec<HashMap<&Handle, usize>> = levels
            .iter()
            .map(|level| level.iter().enumerate().map(|(i, h)| (h, i)).collect())
            .collect();
        SimplicialSet::from_fn(
            dim,
            levels.iter().map(Vec::len).collect(),
            |k, i, x| index[k - 1][&self.face(&levels[k][x], i)],
            |k, i, x| index[k + 1][&self.degen(&levels[k][x], i)],
        )
    }
}

/// Monotone surjections `[k] → [m]` as value sequences, in lexicographic order.
fn surjections(k: usize, m: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k + 1);
    fn rec(k: usize, m: usize, current: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if current.len() == k + 1 {
            if *current.last().unwrap() as usize == m {
                out.push(current.clone());
            }
            return;
        }
        let last = *current.last().unwrap();
        for next in [last, last + 1] {
            if next as usize <= m {
                current.push(next);
                rec(k, m, current, out);
                current.pop();
            }
        }
    }
    current.push(0);
    rec(k, m, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::standard_simplex;

    #[test]
    fn surjection_counts_are_binomial() {
        assert_eq!(surjections(3, 0).len(), 1);
        assert_eq!(surjections(3, 1).len(), 3);
        assert_eq!(surjections(3, 2).len(), 3);
        assert_eq!(surjections(3, 3).len(), 1);
        assert_eq!(surjections(4, 2).len(), 6);
    }

    #[test]
    fn built_triangle_matches_standard_simplex_counts() {
        let mut b = Builder::new();
        let v: Vec<Handle> = (0..3).map(|_| b.vertex()).collect();
        let e01 = b.simplex(vec![v[1].clone(), v[0].clone()]).unwrap();
        let e02 = b.simplex(vec![v[2].clone(), v[0].clone()]).unwrap();
        let e12 = b.simplex(vec![v[2].clone(), v[1].clone()]).unwrap();
        b.simplex(vec![e12, e02, e01]).unwrap();
        let built = b.build(4).unwrap();
        assert_eq!(built.counts(), standard_simplex(2, 4).counts());
    }

    #[test]
    fn inconsistent_faces_rejected() {
        let mut b = Builder::new();
        let v: Vec<Handle> = (0..3).map(|_| b.vertex()).collect();
        let e01 = b.simplex(vec![v[1].clone(), v[0].clone()]).unwrap();
        let e12 = b.simplex(vec![v[2].clone(), v[1].clone()]).unwrap();
        assert!(b.simplex(vec![e12.clone(), e12, e01]).is_err());
    }

    #[test]
    fn loop_with_degenerate_faces() {
        let mut b = Builder::new();
        let v = b.vertex();
        let a = b.simplex(vec![v.clone(), v.clone()]).unwrap();
        let sv = b.degen(&v, 0);
        b.simplex(vec![a, sv.clone(), sv]).unwrap();
        let set = b.build(3).unwrap();
        assert_eq!(set.nondegenerate(1).len(), 1);
        assert_eq!(set.nondegenerate(2).len(), 1);
    }
}
