//! Levelwise-finite simplicial sets truncated at a dimension bound.
//!
//! Simplices at each level are dense ids `0..count(k)`. Face and degeneracy
//! operators are stored as flat arrays, degenerate simplices included. All
//! constructors validate the simplicial identities that are visible below the
//! dimension bound.

mod builder;
pub mod kan;
mod standard;

use std::fmt;
use std::sync::Arc;

pub use builder::{Builder, Handle};
pub use standard::{boundary_subcomplex, horn_subcomplex, ordered_complex, standard_simplex, OrderedComplex};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
struct Level {
    count: usize,
    /// `faces[x * (k + 1) + i] = d_i x`; empty at level 0.
    faces: Vec<usize>,
    /// `degens[x * (k + 1) + i] = s_i x`; empty at the top level.
    degens: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq)]
struct Inner {
    dim: usize,
    levels: Vec<Level>,
}

/// A simplicial set known through levels `0..=dim`.
#[derive(Clone)]
pub struct SimplicialSet(Arc<Inner>);

impl PartialEq for SimplicialSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for SimplicialSet {}

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialSet(dim {}, counts {:?})", self.dim(), self.counts())
    }
}

impl SimplicialSet {
    /// `faces[k][i][x] = d_i x` for `1 ≤ k ≤ dim`, `degens[k][i][x] = s_i x`
    /// for `0 ≤ k < dim`. Index 0 of `faces` is ignored and may be empty.
    pub fn from_parts(
        dim: usize,
        counts: Vec<usize>,
        faces: Vec<Vec<Vec<usize>>>,
        degens: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let bad = |msg: String| Error::InvalidSimplicialSet(msg);
        if counts.len() != dim + 1 {
            return Err(bad(format!("{} level counts for dimension bound {dim}", counts.len())));
        }
        let mut levels = Vec::with_capacity(dim + 1);
        for k in 0..=dim {
            let count = counts[k];
            let mut level = Level { count, faces: Vec::new(), degens: Vec::new() };
            if k > 0 {
                let fk = faces.get(k).ok_or_else(|| bad(format!("missing faces for level {k}")))?;
                if fk.len() != k + 1 {
                    return Err(bad(format!("level {k} needs {} face maps, got {}", k + 1, fk.len())));
                }
                level.faces = vec![0; count * (k + 1)];
                for (i, di) in fk.iter().enumerate() {
                    if di.len() != count {
                        return Err(bad(format!("d_{i} on level {k} has {} entries, expected {count}", di.len())));
                    }
                    for (x, &y) in di.iter().enumerate() {
                        if y >= counts[k - 1] {
                            return Err(bad(format!("d_{i} of simplex {x} at level {k} is out of range")));
                        }
                        level.faces[x * (k + 1) + i] = y;
                    }
                }
            }
            if k < dim {
                let sk = degens.get(k).ok_or_else(|| bad(format!("missing degeneracies for level {k}")))?;
                if sk.len() != k + 1 {
                    return Err(bad(format!("level {k} needs {} degeneracies, got {}", k + 1, sk.len())));
                }
                level.degens = vec![0; count * (k + 1)];
                for (i, si) in sk.iter().enumerate() {
                    if si.len() != count {
                        return Err(bad(format!("s_{i} on level {k} has {} entries, expected {count}", si.len())));
                    }
                    for (x, &y) in si.iter().enumerate() {
                        if y >= counts[k + 1] {
                            return Err(bad(format!("s_{i} of simplex {x} at level {k} is out of range")));
                        }
                        level.degens[x * (k + 1) + i] = y;
                    }
                }
            }
            levels.push(level);
        }
        let set = Self(Arc::new(Inner { dim, levels }));
        set.check_identities()?;
        Ok(set)
    }

    /// Builds from closures computing faces and degeneracies; used by the
    /// structured constructors in this crate.
    pub(crate) fn from_fn(
        dim: usize,
        counts: Vec<usize>,
        mut face: impl FnMut(usize, usize, usize) -> usize,
        mut degen: impl FnMut(usize, usize, usize) -> usize,
    ) -> Result<Self> {
        let mut levels = Vec::with_capacity(dim + 1);
        for k in 0..=dim {
            let count = counts[k];
            let mut level = Level { count, faces: Vec::new(), degens: Vec::new() };
            if k > 0 {
                level.faces.reserve(count * (k + 1));
                for x in 0..count {
                    for i in 0..=k {
                        level.faces.push(face(k, i, x));
                    }
                }
            }
            if k < dim {
                level.degens.reserve(count * (k + 1));
                for x in 0..count {
                    for i in 0..=k {
                        level.degens.push(degen(k, i, x));
                    }
                }
            }
            levels.push(level);
        }
        for k in 1..=dim {
            if levels[k].faces.iter().any(|&y| y >= counts[k - 1]) {
                return Err(Error::InvalidSimplicialSet(format!("face out of range at level {k}")));
            }
        }
        for k in 0..dim {
            if levels[k].degens.iter().any(|&y| y >= counts[k + 1]) {
                return Err(Error::InvalidSimplicialSet(format!("degeneracy out of range at level {k}")));
            }
        }
        let set = Self(Arc::new(Inner { dim, levels }));
        set.check_identities()?;
        Ok(set)
    }

    pub fn empty(dim: usize) -> Self {
        Self::from_fn(dim, vec![0; dim + 1], |_, _, _| 0, |_, _, _| 0).expect("empty set is valid")
    }

    /// `Δ[0]`: one simplex in every level.
    pub fn point(dim: usize) -> Self {
        Self::discrete(1, dim)
    }

    /// `n` points, all higher simplices degenerate.
    pub fn discrete(n: usize, dim: usize) -> Self {
        Self::from_fn(dim, vec![n; dim + 1], |_, _, x| x, |_, _, x| x).expect("discrete set is valid")
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn count(&self, k: usize) -> usize {
        self.0.levels[k].count
    }

    pub fn counts(&self) -> Vec<usize> {
        self.0.levels.iter().map(|l| l.count).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.count(0) == 0
    }

    #[inline]
    pub fn face(&self, k: usize, i: usize, x: usize) -> usize {
        debug_assert!(k >= 1 && i <= k);
        self.0.levels[k].faces[x * (k + 1) + i]
    }

    #[inline]
    pub fn degen(&self, k: usize, i: usize, x: usize) -> usize {
        debug_assert!(k < self.dim() && i <= k);
        self.0.levels[k].degens[x * (k + 1) + i]
    }

    /// All faces `d_0 x, …, d_k x`.
    pub fn faces(&self, k: usize, x: usize) -> &[usize] {
        &self.0.levels[k].faces[x * (k + 1)..(x + 1) * (k + 1)]
    }

    /// Vertex `i` of a level-k simplex (the image of the i-th vertex of Δ[k]).
    pub fn vertex(&self, k: usize, x: usize, i: usize) -> usize {
        let mut y = x;
        let mut level = k;
        let mut position = i;
        while level > 0 {
            // Delete a vertex other than `position`.
            let drop = if position == level { 0 } else { level };
            y = self.face(level, drop, y);
            if drop < position {
                position -= 1;
            }
            level -= 1;
        }
        y
    }

    pub fn vertices(&self, k: usize, x: usize) -> Vec<usize> {
        (0..=k).map(|i| self.vertex(k, x, i)).collect()
    }

    pub fn check_identities(&self) -> Result<()> {
        let n = self.dim();
        let bad = |msg: String| Err(Error::InvalidSimplicialSet(msg));
        for k in 2..=n {
            for x in 0..self.count(k) {
                for j in 1..=k {
                    for i in 0..j {
                        let lhs = self.face(k - 1, i, self.face(k, j, x));
                        let rhs = self.face(k - 1, j - 1, self.face(k, i, x));
                        if lhs != rhs {
                            return bad(format!("d_{i} d_{j} != d_{} d_{i} on simplex {x} at level {k}", j - 1));
                        }
                    }
                }
            }
        }
        for k in 0..n.saturating_sub(1) {
            for x in 0..self.count(k) {
                for j in 0..=k {
                    for i in 0..=j {
                        let lhs = self.degen(k + 1, i, self.degen(k, j, x));
                        let rhs = self.degen(k + 1, j + 1, self.degen(k, i, x));
                        if lhs != rhs {
                            return bad(format!("s_{i} s_{j} != s_{} s_{i} on simplex {x} at level {k}", j + 1));
                        }
                    }
                }
            }
        }
        for k in 0..n {
            for x in 0..self.count(k) {
                for j in 0..=k {
                    let sx = self.degen(k, j, x);
                    for i in 0..=k + 1 {
                        let lhs = self.face(k + 1, i, sx);
                        let rhs = if i < j {
                            self.degen(k - 1, j - 1, self.face(k, i, x))
                        } else if i == j || i == j + 1 {
                            x
                        } else {
                            self.degen(k - 1, j, self.face(k, i - 1, x))
                        };
                        if lhs != rhs {
                            return bad(format!("d_{i} s_{j} identity fails on simplex {x} at level {k}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Ids at level `k` not in the image of any degeneracy.
    pub fn nondegenerate(&self, k: usize) -> Vec<usize> {
        let mut degenerate = vec![false; self.count(k)];
        if k > 0 {
            for y in 0..self.count(k - 1) {
                for i in 0..k {
                    degenerate[self.degen(k - 1, i, y)] = true;
                }
            }
        }
        (0..self.count(k)).filter(|&x| !degenerate[x]).collect()
    }

    pub fn is_degenerate(&self, k: usize, x: usize) -> bool {
        // A simplex is degenerate iff it equals s_i d_i of itself for some i.
        k > 0 && (0..k).any(|i| self.degen(k - 1, i, self.face(k, i, x)) == x)
    }

    /// Restricts to a lower dimension bound.
    pub fn truncate(&self, dim: usize) -> Self {
        assert!(dim <= self.dim());
        if dim == self.dim() {
            return self.clone();
        }
        let mut levels: Vec<Level> = self.0.levels[..=dim].to_vec();
        levels[dim].degens.clear();
        Self(Arc::new(Inner { dim, levels }))
    }

    /// Levelwise cartesian product; id `(a, b)` is `a * count_B(k) + b`.
    pub fn product(&self, other: &Self) -> Self {
        let dim = self.dim().min(other.dim());
        let counts: Vec<usize> = (0..=dim).map(|k| self.count(k) * other.count(k)).collect();
        Self::from_fn(
            dim,
            counts,
            |k, i, x| {
                let (a, b) = (x / other.count(k), x % other.count(k));
                self.face(k, i, a) * other.count(k - 1) + other.face(k, i, b)
            },
            |k, i, x| {
                let (a, b) = (x / other.count(k), x % other.count(k));
                self.degen(k, i, a) * other.count(k + 1) + other.degen(k, i, b)
            },
        )
        .expect("product of valid sets is valid")
    }

    /// Disjoint union; the second summand's ids are shifted by `count_A(k)`.
    pub fn coproduct(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "coproduct needs equal dimension bounds");
        let counts: Vec<usize> = (0..=self.dim()).map(|k| self.count(k) + other.count(k)).collect();
        Self::from_fn(
            self.dim(),
            counts,
            |k, i, x| {
                if x < self.count(k) {
                    self.face(k, i, x)
                } else {
                    self.count(k - 1) + other.face(k, i, x - self.count(k))
                }
            },
            |k, i, x| {
                if x < self.count(k) {
                    self.degen(k, i, x)
                } else {
                    self.count(k + 1) + other.degen(k, i, x - self.count(k))
                }
            },
        )
        .expect("coproduct of valid sets is valid")
    }

    /// Sub-simplicial set on the marked simplices, renumbered ascending.
    /// Fails unless the marks are closed under faces and degeneracies.
    pub fn subcomplex(&self, marks: &[Vec<bool>]) -> Result<(Self, SimplicialMap)> {
        let n = self.dim();
        for k in 0..=n {
            for x in (0..self.count(k)).filter(|&x| marks[k][x]) {
                if k > 0 && (0..=k).any(|i| !marks[k - 1][self.face(k, i, x)]) {
                    return Err(Error::InvalidSimplicialSet(format!("marked simplex {x} at level {k} has an unmarked face")));
                }
                if k < n && (0..=k).any(|i| !marks[k + 1][self.degen(k, i, x)]) {
                    return Err(Error::InvalidSimplicialSet(format!("marked simplex {x} at level {k} has an unmarked degeneracy")));
                }
            }
        }
        let kept: Vec<Vec<usize>> = (0..=n).map(|k| (0..self.count(k)).filter(|&x| marks[k][x]).collect()).collect();
        let mut new_id: Vec<Vec<usize>> = (0..=n).map(|k| vec![usize::MAX; self.count(k)]).collect();
        for k in 0..=n {
            for (j, &x) in kept[k].iter().enumerate() {
                new_id[k][x] = j;
            }
        }
        let sub = Self::from_fn(
            n,
            kept.iter().map(Vec::len).collect(),
            |k, i, x| new_id[k - 1][self.face(k, i, kept[k][x])],
            |k, i, x| new_id[k + 1][self.degen(k, i, kept[k][x])],
        )?;
        let inclusion = SimplicialMap::new_unchecked(sub.clone(), self.clone(), kept);
        Ok((sub, inclusion))
    }

    /// Smallest sub-simplicial set containing the given `(level, id)` simplices.
    pub fn generated_subcomplex(&self, simplices: &[(usize, usize)]) -> (Self, SimplicialMap) {
        let n = self.dim();
        let mut marks: Vec<Vec<bool>> = (0..=n).map(|k| vec![false; self.count(k)]).collect();
        for &(k, x) in simplices {
            marks[k][x] = true;
        }
        for k in (1..=n).rev() {
            for x in 0..self.count(k) {
                if marks[k][x] {
                    for i in 0..=k {
                        marks[k - 1][self.face(k, i, x)] = true;
                    }
                }
            }
        }
        for k in 0..n {
            for x in 0..self.count(k) {
                if marks[k][x] {
                    for i in 0..=k {
                        marks[k + 1][self.degen(k, i, x)] = true;
                    }
                }
            }
        }
        self.subcomplex(&marks).expect("closure is a subcomplex")
    }

    /// Smallest simplicial quotient identifying the given `(level, a, b)`
    /// pairs. Classes are numbered by their least member.
    pub fn quotient_by_relation(&self, pairs: &[(usize, usize, usize)]) -> (Self, SimplicialMap) {
        let n = self.dim();
        let mut uf: Vec<UnionFind> = (0..=n).map(|k| UnionFind::new(self.count(k))).collect();
        for &(k, a, b) in pairs {
            uf[k].union(a, b);
        }
        loop {
            let mut changed = false;
            for k in 0..=n {
                for x in 0..self.count(k) {
                    let r = uf[k].find(x);
                    if r == x {
                        continue;
                    }
                    if k > 0 {
                        for i in 0..=k {
                            changed |= uf[k - 1].union(self.face(k, i, x), self.face(k, i, r));
                        }
                    }
                    if k < n {
                        for i in 0..=k {
                            changed |= uf[k + 1].union(self.degen(k, i, x), self.degen(k, i, r));
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let labels: Vec<Vec<usize>> = uf.iter_mut().map(|u| (0..u.len()).map(|x| u.find(x)).collect()).collect();
        self.quotient_by_labels(&labels).expect("closed relation gives a simplicial quotient")
    }

    /// Quotient by per-level partitions given as labels; the partition must
    /// already be compatible with faces and degeneracies.
    pub(crate) fn quotient_by_labels(&self, labels: &[Vec<usize>]) -> Result<(Self, SimplicialMap)> {
        let n = self.dim();
        let mut class_of: Vec<Vec<usize>> = Vec::with_capacity(n + 1);
        let mut reps: Vec<Vec<usize>> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut seen = std::collections::HashMap::new();
            let mut classes = vec![0; self.count(k)];
            let mut level_reps = Vec::new();
            for x in 0..self.count(k) {
                let id = *seen.entry(labels[k][x]).or_insert_with(|| {
                    level_reps.push(x);
                    level_reps.len() - 1
                });
                classes[x] = id;
            }
            class_of.push(classes);
            reps.push(level_reps);
        }
        for k in 0..=n {
            for x in 0..self.count(k) {
                let r = reps[k][class_of[k][x]];
                let compatible = (k == 0 || (0..=k).all(|i| class_of[k - 1][self.face(k, i, x)] == class_of[k - 1][self.face(k, i, r)]))
                    && (k == n || (0..=k).all(|i| class_of[k + 1][self.degen(k, i, x)] == class_of[k + 1][self.degen(k, i, r)]));
                if !compatible {
                    return Err(Error::InvalidSimplicialSet(format!(
                        "partition is not simplicial at simplex {x} of level {k}"
                    )));
                }
            }
        }
        let quotient = Self::from_fn(
            n,
            reps.iter().map(Vec::len).collect(),
            |k, i, c| class_of[k - 1][self.face(k, i, reps[k][c])],
            |k, i, c| class_of[k + 1][self.degen(k, i, reps[k][c])],
        )?;
        let projection = SimplicialMap::new_unchecked(self.clone(), quotient.clone(), class_of);
        Ok((quotient, projection))
    }

    /// Vertex labels of connected components, numbered by least vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.count(0));
        if self.dim() >= 1 {
            for e in 0..self.count(1) {
                uf.union(self.face(1, 0, e), self.face(1, 1, e));
            }
        }
        (0..self.count(0)).map(|v| uf.find(v)).collect()
    }

    /// Least vertex of each connected component.
    pub fn component_roots(&self) -> Vec<usize> {
        let labels = self.components();
        let mut roots: Vec<usize> = labels.clone();
        roots.sort_unstable();
        roots.dedup();
        roots
    }

    /// The connected component containing `vertex`, as a subcomplex.
    pub fn component(&self, vertex: usize) -> (Self, SimplicialMap) {
        let labels = self.components();
        let root = labels[vertex];
        let marks: Vec<Vec<bool>> = (0..=self.dim())
            .map(|k| (0..self.count(k)).map(|x| labels[self.vertex(k, x, 0)] == root).collect())
            .collect();
        self.subcomplex(&marks).expect("components are subcomplexes")
    }

    /// Relabels simplex ids: `perm[k][x]` is the new id of `x`.
    pub fn relabel(&self, perm: &[Vec<usize>]) -> Result<(Self, SimplicialMap)> {
        let n = self.dim();
        let mut inverse: Vec<Vec<usize>> = (0..=n).map(|k| vec![usize::MAX; self.count(k)]).collect();
        for k in 0..=n {
            for (x, &y) in perm[k].iter().enumerate() {
                if y >= self.count(k) || inverse[k][y] != usize::MAX {
                    return Err(Error::InvalidSimplicialSet(format!("relabeling at level {k} is not a permutation")));
                }
                inverse[k][y] = x;
            }
        }
        let relabeled = Self::from_fn(
            n,
            self.counts(),
            |k, i, y| perm[k - 1][self.face(k, i, inverse[k][y])],
            |k, i, y| perm[k + 1][self.degen(k, i, inverse[k][y])],
        )?;
        let iso = SimplicialMap::new_unchecked(self.clone(), relabeled.clone(), perm.to_vec());
        Ok((relabeled, iso))
    }
}

/// Levelwise functions commuting with faces and degeneracies.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialMap {
    source: SimplicialSet,
    target: SimplicialSet,
    levels: Arc<Vec<Vec<usize>>>,
}

impl fmt::Debug for SimplicialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialMap")
            .field("source", &self.source)
            .field("target", &self.target)
            .finish()
    }
}

impl SimplicialMap {
    pub fn new(source: SimplicialSet, target: SimplicialSet, levels: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidMap(msg));
        if source.dim() != target.dim() {
            return bad(format!("dimension bounds differ: {} vs {}", source.dim(), target.dim()));
        }
        if levels.len() != source.dim() + 1 {
            return bad(format!("{} levels given, expected {}", levels.len(), source.dim() + 1));
        }
        for k in 0..=source.dim() {
            if levels[k].len() != source.count(k) {
                return bad(format!("level {k} has {} images, expected {}", levels[k].len(), source.count(k)));
            }
            if let Some(x) = levels[k].iter().position(|&y| y >= target.count(k)) {
                return bad(format!("image of simplex {x} at level {k} is out of range"));
            }
        }
        let map = Self::new_unchecked(source, target, levels);
        map.check_simplicial()?;
        Ok(map)
    }

    pub(crate) fn new_unchecked(source: SimplicialSet, target: SimplicialSet, levels: Vec<Vec<usize>>) -> Self {
        Self { source, target, levels: Arc::new(levels) }
    }

    fn check_simplicial(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        let n = s.dim();
        for k in 0..=n {
            for x in 0..s.count(k) {
                let fx = self.apply(k, x);
                for i in 0..=k {
                    if k > 0 && self.apply(k - 1, s.face(k, i, x)) != t.face(k, i, fx) {
                        return Err(Error::InvalidMap(format!("does not commute with d_{i} at simplex {x} of level {k}")));
                    }
                    if k < n && self.apply(k + 1, s.degen(k, i, x)) != t.degen(k, i, fx) {
                        return Err(Error::InvalidMap(format!("does not commute with s_{i} at simplex {x} of level {k}")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn identity(set: &SimplicialSet) -> Self {
        let levels = (0..=set.dim()).map(|k| (0..set.count(k)).collect()).collect();
        Self::new_unchecked(set.clone(), set.clone(), levels)
    }

    /// The unique map to `Δ[0]`.
    pub fn to_point(set: &SimplicialSet) -> Self {
        let levels = (0..=set.dim()).map(|k| vec![0; set.count(k)]).collect();
        Self::new_unchecked(set.clone(), SimplicialSet::point(set.dim()), levels)
    }

    pub fn source(&self) -> &SimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &SimplicialSet {
        &self.target
    }

    pub fn levels(&self) -> &[Vec<usize>] {
        &self.levels
    }

    #[inline]
    pub fn apply(&self, k: usize, x: usize) -> usize {
        self.levels[k][x]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> Result<SimplicialMap> {
        if self.target != other.source {
            return Err(Error::ShapeMismatch("composable maps need matching target and source".into()));
        }
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(k, level)| level.iter().map(|&y| other.apply(k, y)).collect())
            .collect();
        Ok(Self::new_unchecked(self.source.clone(), other.target.clone(), levels))
    }

    /// First `(level, a, b)` with `a ≠ b` and equal images, if any.
    pub fn injectivity_failure(&self) -> Option<(usize, usize, usize)> {
        for (k, level) in self.levels.iter().enumerate() {
            let mut preimage = vec![usize::MAX; self.target.count(k)];
            for (x, &y) in level.iter().enumerate() {
                if preimage[y] != usize::MAX {
                    return Some((k, preimage[y], x));
                }
                preimage[y] = x;
            }
        }
        None
    }

    pub fn is_levelwise_injective(&self) -> bool {
        self.injectivity_failure().is_none()
    }

    pub fn is_levelwise_surjective(&self) -> bool {
        self.levels.iter().enumerate().all(|(k, level)| {
            let mut hit = vec![false; self.target.count(k)];
            for &y in level {
                hit[y] = true;
            }
            hit.into_iter().all(|h| h)
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_levelwise_injective() && self.is_levelwise_surjective()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.levels.iter().all(|level| level.iter().enumerate().all(|(x, &y)| x == y))
    }

    /// `self × other` between products.
    pub fn product(&self, other: &SimplicialMap) -> SimplicialMap {
        let source = self.source.product(&other.source);
        let target = self.target.product(&other.target);
        let levels = (0..=source.dim())
            .map(|k| {
                let (sb, tb) = (other.source.count(k), other.target.count(k));
                (0..source.count(k)).map(|x| self.apply(k, x / sb) * tb + other.apply(k, x % sb)).collect()
            })
            .collect();
        SimplicialMap::new_unchecked(source, target, levels)
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect() }
    }

    pub(crate) fn len(&self) -> usize {
        self.parent.len()
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut y = x;
        while self.parent[y] != root {
            let next = self.parent[y];
            self.parent[y] = root;
            y = next;
        }
        root
    }

    /// Merges toward the smaller root; returns whether anything changed.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}
