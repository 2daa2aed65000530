use std::collections::HashMap;

use super::{SimplicialMap, SimplicialSet};

/// Simplicial set of an ordered simplicial complex: level-k simplices are the
/// nondecreasing vertex tuples of length `k + 1` whose support is a face.
#[derive(Clone, Debug)]
pub struct OrderedComplex {
    pub set: SimplicialSet,
    /// `tuples[k][x]` is the vertex tuple of simplex `x` at level `k`.
    pub tuples: Vec<Vec<Vec<u32>>>,
}

impl OrderedComplex {
    pub fn id_of(&self, tuple: &[u32]) -> Option<usize> {
        let k = tuple.len().checked_sub(1)?;
        self.tuples.get(k)?.binary_search_by(|t| t.as_slice().cmp(tuple)).ok()
    }

    /// Inclusion into another ordered complex over the same vertex labels.
    pub fn inclusion_into(&self, other: &OrderedComplex) -> SimplicialMap {
        let levels = self
            .tuples
            .iter()
            .map(|level| level.iter().map(|t| other.id_of(t).expect("subcomplex tuple")).collect())
            .collect();
        SimplicialMap::new(self.set.clone(), other.set.clone(), levels).expect("inclusion is simplicial")
    }
}

/// `support` receives a sorted, deduplicated vertex list and must describe a
/// family closed under subsets.
pub fn ordered_complex(vertices: u32, dim: usize, support: impl Fn(&[u32]) -> bool) -> OrderedComplex {
    let mut tuples: Vec<Vec<Vec<u32>>> = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let mut level = Vec::new();
        let mut current = vec![0u32; k + 1];
        if vertices > 0 {
            loop {
                let mut s = current.clone();
                s.dedup();
                if support(&s) {
                    level.push(current.clone());
                }
                // Next nondecreasing tuple in lexicographic order.
                let mut pos = k as isize;
                while pos >= 0 && current[pos as usize] == vertices - 1 {
                    pos -= 1;
                }
                if pos < 0 {
                    break;
                }
                let v = current[pos as usize] + 1;
                for slot in current.iter_mut().skip(pos as usize) {
                    *slot = v;
                }
            }
        }
        tuples.push(level);
    }
    let index: Vec<HashMap<&[u32], usize>> = tuples
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect())
        .collect();
    let set = SimplicialSet::from_fn(
        dim,
        tuples.iter().map(Vec::len).collect(),
        |k, i, x| {
            let mut t = tuples[k][x].clone();
            t.remove(i);
            index[k - 1][t.as_slice()]
        },
        |k, i, x| {
            let mut t = tuples[k][x].clone();
            t.insert(i, t[i]);
            index[k + 1][t.as_slice()]
        },
    )
    .expect("ordered complexes satisfy the simplicial identities");
    drop(index);
    OrderedComplex { set, tuples }
}

/// `Δ[n]` truncated at `dim`.
pub fn standard_simplex(n: usize, dim: usize) -> SimplicialSet {
    ordered_complex(n as u32 + 1, dim, |_| true).set
}

/// `∂Δ[n] ↪ Δ[n]`: tuples missing at least one vertex.
pub fn boundary_subcomplex(n: usize, dim: usize) -> (SimplicialSet, SimplicialMap) {
    let full = ordered_complex(n as u32 + 1, dim, |_| true);
    let sub = ordered_complex(n as u32 + 1, dim, |s| s.len() < n + 1);
    let inc = sub.inclusion_into(&full);
    (sub.set, inc)
}

/// `Λ^i[n] ↪ Δ[n]`: tuples missing some vertex other than `i`.
pub fn horn_subcomplex(n: usize, i: usize, dim: usize) -> (SimplicialSet, SimplicialMap) {
    assert!(i <= n, "horn index {i} exceeds {n}");
    let full = ordered_complex(n as u32 + 1, dim, |_| true);
    let sub = ordered_complex(n as u32 + 1, dim, |s| {
        let with_i = s.len() + usize::from(!s.contains(&(i as u32)));
        with_i < n + 1
    });
    let inc = sub.inclusion_into(&full);
    (sub.set, inc)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Number of nondecreasing tuples of length k+1 over n+1 symbols: C(n+k+1, k+1).
    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn simplex_level_counts() {
        for n in 0..4 {
            let d = standard_simplex(n, 4);
            for k in 0..=4 {
                assert_eq!(d.count(k), binomial(n + k + 1, k + 1));
            }
        }
        assert_eq!(standard_simplex(0, 3).counts(), vec![1, 1, 1, 1]);
        assert_eq!(standard_simplex(1, 2).count(1), 3);
        assert_eq!(standard_simplex(2, 2).count(0), 3);
    }

    #[test]
    fn boundaries_and_horns() {
        let (b1, _) = boundary_subcomplex(1, 2);
        assert_eq!(b1.count(0), 2);
        assert!(b1.nondegenerate(1).is_empty());

        let (b2, inc) = boundary_subcomplex(2, 3);
        assert_eq!(b2.nondegenerate(0).len(), 3);
        assert_eq!(b2.nondegenerate(1).len(), 3);
        assert!(b2.nondegenerate(2).is_empty());
        assert!(inc.is_levelwise_injective());

        let (h, _) = horn_subcomplex(2, 0, 3);
        assert_eq!(h.nondegenerate(0).len(), 3);
        assert_eq!(h.nondegenerate(1).len(), 2);
        let oc = ordered_complex(3, 1, |s| s.len() + usize::from(!s.contains(&0)) < 3);
        assert!(oc.id_of(&[1, 2]).is_none());
        assert!(oc.id_of(&[0, 2]).is_some());
    }

    #[test]
    fn empty_boundary_of_point() {
        let (b0, inc) = boundary_subcomplex(0, 2);
        assert!(b0.is_empty());
        assert!(inc.is_levelwise_injective());
    }
}
