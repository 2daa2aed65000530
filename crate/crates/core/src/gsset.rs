//! Simplicial sets with a levelwise right G-action.
//!
//! Homogeneous spaces `G/H` are built from left cosets `xH` and made into
//! right G-objects through the inverse action `xH · g = g⁻¹xH`. This is the
//! only bridge between left and right conventions in the crate.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{left_cosets, Elem, FiniteGroup, Subgroup, SubgroupFamily};
use crate::sset::kan::{unfilled_horn, UnfilledHorn};
use crate::sset::{standard_simplex, SimplicialMap, SimplicialSet, UnionFind};

/// `tables[k][g][x] = x · g` at level `k`.
pub type ActionTables = Vec<Vec<Vec<usize>>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ActionViolation {
    Shape { detail: String },
    NotBijective { level: usize, element: Elem },
    IdentityMoves { level: usize, simplex: usize },
    NotRightAction { level: usize, simplex: usize, g: Elem, h: Elem },
    FaceMismatch { level: usize, face: usize, simplex: usize, element: Elem },
    DegeneracyMismatch { level: usize, degeneracy: usize, simplex: usize, element: Elem },
}

impl fmt::Display for ActionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Shape { detail } => write!(f, "malformed action tables: {detail}"),
            Self::NotBijective { level, element } => write!(f, "element {element} does not act bijectively on level {level}"),
            Self::IdentityMoves { level, simplex } => write!(f, "identity moves simplex {simplex} at level {level}"),
            Self::NotRightAction { level, simplex, g, h } => {
                write!(f, "(a·{g})·{h} != a·({g}{h}) for a = {simplex} at level {level}")
            }
            Self::FaceMismatch { level, face, simplex, element } => {
                write!(f, "action of {element} does not commute with d_{face} on simplex {simplex} at level {level}")
            }
            Self::DegeneracyMismatch { level, degeneracy, simplex, element } => {
                write!(f, "action of {element} does not commute with s_{degeneracy} on simplex {simplex} at level {level}")
            }
        }
    }
}

/// Checks that `tables` is a right action commuting with the simplicial
/// structure; reports the first violated identity.
pub fn validate_action(group: &FiniteGroup, set: &SimplicialSet, tables: &ActionTables) -> Result<(), ActionViolation> {
    let n = set.dim();
    if tables.len() != n + 1 {
        return Err(ActionViolation::Shape { detail: format!("{} levels, expected {}", tables.len(), n + 1) });
    }
    for k in 0..=n {
        if tables[k].len() != group.order() {
            return Err(ActionViolation::Shape { detail: format!("level {k} has {} element tables", tables[k].len()) });
        }
        for g in group.elements() {
            let t = &tables[k][g];
            if t.len() != set.count(k) {
                return Err(ActionViolation::Shape { detail: format!("element {g} at level {k} has {} entries", t.len()) });
            }
            let mut hit = vec![false; t.len()];
            for &y in t {
                if y >= hit.len() || hit[y] {
                    return Err(ActionViolation::NotBijective { level: k, element: g });
                }
                hit[y] = true;
            }
        }
        if let Some(x) = (0..set.count(k)).find(|&x| tables[k][0][x] != x) {
            return Err(ActionViolation::IdentityMoves { level: k, simplex: x });
        }
        for g in group.elements() {
            for h in group.elements() {
                let gh = group.mul(g, h);
                if let Some(x) = (0..set.count(k)).find(|&x| tables[k][h][tables[k][g][x]] != tables[k][gh][x]) {
                    return Err(ActionViolation::NotRightAction { level: k, simplex: x, g, h });
                }
            }
        }
    }
    for k in 0..=n {
        for g in group.elements() {
            for x in 0..set.count(k) {
                let xg = tables[k][g][x];
                for i in 0..=k {
                    if k > 0 && tables[k - 1][g][set.face(k, i, x)] != set.face(k, i, xg) {
                        return Err(ActionViolation::FaceMismatch { level: k, face: i, simplex: x, element: g });
                    }
                    if k < n && tables[k + 1][g][set.degen(k, i, x)] != set.degen(k, i, xg) {
                        return Err(ActionViolation::DegeneracyMismatch { level: k, degeneracy: i, simplex: x, element: g });
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone)]
pub struct GSimplicialSet {
    group: Arc<FiniteGroup>,
    underlying: SimplicialSet,
    action: Arc<ActionTables>,
}

impl PartialEq for GSimplicialSet {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
            && self.underlying == other.underlying
            && (Arc::ptr_eq(&self.action, &other.action) || self.action == other.action)
    }
}

impl Eq for GSimplicialSet {}

impl fmt::Debug for GSimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GSimplicialSet(|G| = {}, {:?})", self.group.order(), self.underlying)
    }
}

impl GSimplicialSet {
    pub fn new(group: Arc<FiniteGroup>, underlying: SimplicialSet, action: ActionTables) -> Result<Self> {
        validate_action(&group, &underlying, &action).map_err(|v| Error::InvalidAction(v.to_string()))?;
        Ok(Self { group, underlying, action: Arc::new(action) })
    }

    /// Expands actions given on generators to the whole group by
    /// `x·(gs) = (x·g)·s`, then validates.
    pub fn from_generators(
        group: Arc<FiniteGroup>,
        underlying: SimplicialSet,
        generators: &[(Elem, Vec<Vec<usize>>)],
    ) -> Result<Self> {
        let n = underlying.dim();
        for (s, levels) in generators {
            if *s >= group.order() {
                return Err(Error::InvalidAction(format!("generator {s} is not a group element")));
            }
            if levels.len() != n + 1 || (0..=n).any(|k| levels[k].len() != underlying.count(k)) {
                return Err(Error::InvalidAction(format!("action of generator {s} has the wrong shape")));
            }
        }
        let mut known: Vec<Option<Vec<Vec<usize>>>> = vec![None; group.order()];
        known[0] = Some((0..=n).map(|k| (0..underlying.count(k)).collect()).collect());
        let mut queue = VecDeque::from([0]);
        while let Some(g) = queue.pop_front() {
            for (s, sl) in generators {
                let gs = group.mul(g, *s);
                let composed: Vec<Vec<usize>> = {
                    let gl = known[g].as_ref().expect("queued elements are known");
                    (0..=n).map(|k| gl[k].iter().map(|&y| sl[k][y]).collect()).collect()
                };
                match &known[gs] {
                    Some(existing) if *existing != composed => {
                        return Err(Error::InvalidAction(format!(
                            "generator actions are inconsistent at element {gs}"
                        )))
                    }
                    Some(_) => {}
                    None => {
                        known[gs] = Some(composed);
                        queue.push_back(gs);
                    }
                }
            }
        }
        if known.iter().any(Option::is_none) {
            return Err(Error::InvalidAction("action generators do not generate the group".into()));
        }
        let per_element: Vec<Vec<Vec<usize>>> = known.into_iter().map(Option::unwrap).collect();
        let tables = (0..=n).map(|k| per_element.iter().map(|levels| levels[k].clone()).collect()).collect();
        Self::new(group, underlying, tables)
    }

    pub fn trivial(group: Arc<FiniteGroup>, underlying: SimplicialSet) -> Self {
        let action = (0..=underlying.dim())
            .map(|k| vec![(0..underlying.count(k)).collect(); group.order()])
            .collect();
        Self { group, underlying, action: Arc::new(action) }
    }

    /// `G/H` as a discrete right G-simplicial set: left cosets with
    /// `xH · g = g⁻¹xH`.
    pub fn homogeneous(group: Arc<FiniteGroup>, h: &Subgroup, dim: usize) -> Self {
        let cosets = left_cosets(&group, h);
        let coset_of = |x: Elem| cosets.iter().position(|c| c.elements.binary_search(&x).is_ok()).expect("cosets partition G");
        let level: Vec<Vec<usize>> = group
            .elements()
            .map(|g| cosets.iter().map(|c| coset_of(group.mul(group.inv(g), c.rep))).collect())
            .collect();
        let underlying = SimplicialSet::discrete(cosets.len(), dim);
        let action = vec![level; dim + 1];
        Self::new(group, underlying, action).expect("inverse coset action is a right action")
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn underlying(&self) -> &SimplicialSet {
        &self.underlying
    }

    pub fn dim(&self) -> usize {
        self.underlying.dim()
    }

    pub fn action_tables(&self) -> &ActionTables {
        &self.action
    }

    #[inline]
    pub fn act(&self, k: usize, x: usize, g: Elem) -> usize {
        self.action[k][g][x]
    }

    pub fn is_trivial_action(&self) -> bool {
        self.action.iter().all(|level| level.iter().all(|t| t.iter().enumerate().all(|(x, &y)| x == y)))
    }

    /// Diagonal action on the product.
    pub fn product(&self, other: &GSimplicialSet) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::ShapeMismatch("products need a common group".into()));
        }
        let underlying = self.underlying.product(&other.underlying);
        let action = (0..=underlying.dim())
            .map(|k| {
                let cb = other.underlying.count(k);
                self.group
                    .elements()
                    .map(|g| (0..underlying.count(k)).map(|x| self.act(k, x / cb, g) * cb + other.act(k, x % cb, g)).collect())
                    .collect()
            })
            .collect();
        Ok(Self { group: self.group.clone(), underlying, action: Arc::new(action) })
    }

    /// Product with a simplicial set carrying the trivial action.
    pub fn times(&self, set: &SimplicialSet) -> Self {
        self.product(&Self::trivial(self.group.clone(), set.clone())).expect("same group")
    }

    pub fn coproduct(&self, other: &GSimplicialSet) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::ShapeMismatch("coproducts need a common group".into()));
        }
        let underlying = self.underlying.coproduct(&other.underlying);
        let action = (0..=underlying.dim())
            .map(|k| {
                let ca = self.underlying.count(k);
                self.group
                    .elements()
                    .map(|g| {
                        (0..underlying.count(k))
                            .map(|x| if x < ca { self.act(k, x, g) } else { ca + other.act(k, x - ca, g) })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(Self { group: self.group.clone(), underlying, action: Arc::new(action) })
    }

    /// Quotient by the smallest G-invariant simplicial relation containing
    /// the `(level, a, b)` pairs, with the induced action.
    pub fn equivariant_quotient(&self, pairs: &[(usize, usize, usize)]) -> (Self, GMap) {
        let closed: Vec<(usize, usize, usize)> = pairs
            .iter()
            .flat_map(|&(k, a, b)| self.group.elements().map(move |g| (k, self.act(k, a, g), self.act(k, b, g))))
            .collect();
        let (quotient, projection) = self.underlying.quotient_by_relation(&closed);
        let action = self.induced_action(&quotient, &projection);
        let target = Self::new(self.group.clone(), quotient, action).expect("invariant relation gives an action");
        let map = GMap::new(self.clone(), target, projection).expect("projection is equivariant");
        (map.target.clone(), map)
    }

    fn induced_action(&self, quotient: &SimplicialSet, projection: &SimplicialMap) -> ActionTables {
        (0..=quotient.dim())
            .map(|k| {
                let mut rep = vec![usize::MAX; quotient.count(k)];
                for x in (0..self.underlying.count(k)).rev() {
                    rep[projection.apply(k, x)] = x;
                }
                self.group
                    .elements()
                    .map(|g| rep.iter().map(|&x| projection.apply(k, self.act(k, x, g))).collect())
                    .collect()
            })
            .collect()
    }

    /// Smallest G-invariant sub-simplicial set containing the given simplices.
    pub fn generated_subcomplex(&self, simplices: &[(usize, usize)]) -> (Self, GMap) {
        let orbit: Vec<(usize, usize)> = simplices
            .iter()
            .flat_map(|&(k, x)| self.group.elements().map(move |g| (k, self.act(k, x, g))))
            .collect();
        let (sub, inclusion) = self.underlying.generated_subcomplex(&orbit);
        let action = self.restricted_action(&sub, &inclusion);
        let source = Self::new(self.group.clone(), sub, action).expect("invariant subcomplex carries the action");
        let map = GMap::new(source.clone(), self.clone(), inclusion).expect("inclusion is equivariant");
        (source, map)
    }

    fn restricted_action(&self, sub: &SimplicialSet, inclusion: &SimplicialMap) -> ActionTables {
        (0..=sub.dim())
            .map(|k| {
                let mut back = vec![usize::MAX; self.underlying.count(k)];
                for x in 0..sub.count(k) {
                    back[inclusion.apply(k, x)] = x;
                }
                self.group
                    .elements()
                    .map(|g| (0..sub.count(k)).map(|x| back[self.act(k, inclusion.apply(k, x), g)]).collect())
                    .collect()
            })
            .collect()
    }

    fn orbit_labels(&self, h: &Subgroup) -> Vec<Vec<usize>> {
        let gens = h.generators(&self.group);
        (0..=self.dim())
            .map(|k| {
                let mut uf = UnionFind::new(self.underlying.count(k));
                for x in 0..self.underlying.count(k) {
                    for &g in &gens {
                        uf.union(x, self.act(k, x, g));
                    }
                }
                (0..self.underlying.count(k)).map(|x| uf.find(x)).collect()
            })
            .collect()
    }
}

/// `A/H` with its projection `a ↦ [a]_H`; orbits are numbered by least member.
pub fn orbit_space(a: &GSimplicialSet, h: &Subgroup) -> (SimplicialSet, SimplicialMap) {
    a.underlying
        .quotient_by_labels(&a.orbit_labels(h))
        .expect("orbits of an action commuting with the structure maps form a simplicial quotient")
}

/// `A^H` with its inclusion.
pub fn fixed_points(a: &GSimplicialSet, h: &Subgroup) -> (SimplicialSet, SimplicialMap) {
    let gens = h.generators(&a.group);
    let marks: Vec<Vec<bool>> = (0..=a.dim())
        .map(|k| (0..a.underlying.count(k)).map(|x| gens.iter().all(|&g| a.act(k, x, g) == x)).collect())
        .collect();
    a.underlying.subcomplex(&marks).expect("fixed simplices are closed under faces and degeneracies")
}

/// An equivariant simplicial map.
#[derive(Clone, PartialEq, Eq)]
pub struct GMap {
    source: GSimplicialSet,
    target: GSimplicialSet,
    map: SimplicialMap,
}

impl fmt::Debug for GMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GMap").field("source", &self.source).field("target", &self.target).finish()
    }
}

/// `f(a) · g ≠ f(a · g)` witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivarianceFailure {
    pub level: usize,
    pub simplex: usize,
    pub element: Elem,
}

fn equivariance_failure(source: &GSimplicialSet, target: &GSimplicialSet, map: &SimplicialMap) -> Option<EquivarianceFailure> {
    for k in 0..=source.dim() {
        for g in source.group.elements() {
            for x in 0..source.underlying.count(k) {
                if map.apply(k, source.act(k, x, g)) != target.act(k, map.apply(k, x), g) {
                    return Some(EquivarianceFailure { level: k, simplex: x, element: g });
                }
            }
        }
    }
    None
}

impl GMap {
    pub fn new(source: GSimplicialSet, target: GSimplicialSet, map: SimplicialMap) -> Result<Self> {
        if source.group != target.group {
            return Err(Error::ShapeMismatch("equivariant maps need a common group".into()));
        }
        if map.source() != &source.underlying || map.target() != &target.underlying {
            return Err(Error::ShapeMismatch("underlying map does not match the G-sets".into()));
        }
        if let Some(w) = equivariance_failure(&source, &target, &map) {
            return Err(Error::NotEquivariant(format!(
                "f(x·g) != f(x)·g for simplex {} at level {} and g = {}",
                w.simplex, w.level, w.element
            )));
        }
        Ok(Self { source, target, map })
    }

    pub fn from_levels(source: GSimplicialSet, target: GSimplicialSet, levels: Vec<Vec<usize>>) -> Result<Self> {
        let map = SimplicialMap::new(source.underlying.clone(), target.underlying.clone(), levels)?;
        Self::new(source, target, map)
    }

    pub fn identity(a: &GSimplicialSet) -> Self {
        Self { source: a.clone(), target: a.clone(), map: SimplicialMap::identity(&a.underlying) }
    }

    /// The map to the one-point G-set.
    pub fn to_point(a: &GSimplicialSet) -> Self {
        let point = GSimplicialSet::trivial(a.group.clone(), SimplicialSet::point(a.dim()));
        let map = SimplicialMap::to_point(&a.underlying);
        Self { source: a.clone(), target: point, map }
    }

    pub fn source(&self) -> &GSimplicialSet {
        &self.source
    }

    pub fn target(&self) -> &GSimplicialSet {
        &self.target
    }

    pub fn underlying(&self) -> &SimplicialMap {
        &self.map
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GMap) -> Result<GMap> {
        if self.target != other.source {
            return Err(Error::ShapeMismatch("composable G-maps need matching target and source".into()));
        }
        Ok(GMap { source: self.source.clone(), target: other.target.clone(), map: self.map.then(&other.map)? })
    }

    pub fn is_levelwise_injective(&self) -> bool {
        self.map.is_levelwise_injective()
    }

    /// `f × g` with the diagonal action on both products.
    pub fn product(&self, other: &GMap) -> Result<GMap> {
        let source = self.source.product(&other.source)?;
        let target = self.target.product(&other.target)?;
        let map = self.map.product(&other.map);
        Ok(GMap { source, target, map })
    }

    /// `f × id_X` with the trivial action on `X`.
    pub fn times(&self, set: &SimplicialSet) -> GMap {
        let id = GMap::identity(&GSimplicialSet::trivial(self.source.group.clone(), set.clone()));
        self.product(&id).expect("same group")
    }
}

/// `[a]_H ↦ [f(a)]_H`.
pub fn orbit_map(f: &GMap, h: &Subgroup) -> SimplicialMap {
    let (source, ps) = orbit_space(&f.source, h);
    let (target, pt) = orbit_space(&f.target, h);
    let levels = (0..=source.dim())
        .map(|k| {
            let mut rep = vec![usize::MAX; source.count(k)];
            for x in (0..f.source.underlying.count(k)).rev() {
                rep[ps.apply(k, x)] = x;
            }
            rep.iter().map(|&x| pt.apply(k, f.map.apply(k, x))).collect()
        })
        .collect();
    SimplicialMap::new_unchecked(source, target, levels)
}

/// Restriction of `f` to H-fixed simplices.
pub fn fixed_map(f: &GMap, h: &Subgroup) -> SimplicialMap {
    let (source, is) = fixed_points(&f.source, h);
    let (target, it) = fixed_points(&f.target, h);
    let levels = (0..=source.dim())
        .map(|k| {
            let mut back = vec![usize::MAX; f.target.underlying.count(k)];
            for y in 0..target.count(k) {
                back[it.apply(k, y)] = y;
            }
            (0..source.count(k))
                .map(|x| {
                    let y = back[f.map.apply(k, is.apply(k, x))];
                    assert!(y != usize::MAX, "equivariant maps send fixed simplices to fixed simplices");
                    y
                })
                .collect()
        })
        .collect();
    SimplicialMap::new_unchecked(source, target, levels)
}

/// The fold map `A ⊔ A → A`.
pub fn fold(a: &GSimplicialSet) -> GMap {
    let source = a.coproduct(a).expect("same group");
    let levels = (0..=a.dim())
        .map(|k| {
            let n = a.underlying.count(k);
            (0..2 * n).map(|x| x % n).collect()
        })
        .collect();
    let map = SimplicialMap::new_unchecked(source.underlying.clone(), a.underlying.clone(), levels);
    GMap { source, target: a.clone(), map }
}

/// `A ⊔ A --i--> A × Δ[1] --w--> A` with G acting on the first factor only.
#[derive(Clone, Debug)]
pub struct Cylinder {
    pub cylinder: GSimplicialSet,
    /// `i = (id × δ¹) ⊔ (id × δ⁰)`: the first copy lands on vertex 0.
    pub ends: GMap,
    pub end0: GMap,
    pub end1: GMap,
    /// `w(x, t) = x`.
    pub projection: GMap,
}

pub fn cylinder(a: &GSimplicialSet) -> Cylinder {
    let interval = standard_simplex(1, a.dim());
    let cyl = a.times(&interval);
    let end = |vertex: usize| {
        let levels = (0..=a.dim())
            .map(|k| {
                // Vertices of Δ[1] at level k: 0…0 has id 0, 1…1 has id k+1.
                let t = if vertex == 0 { 0 } else { k + 1 };
                (0..a.underlying.count(k)).map(|x| x * (k + 2) + t).collect()
            })
            .collect();
        GMap {
            source: a.clone(),
            target: cyl.clone(),
            map: SimplicialMap::new_unchecked(a.underlying.clone(), cyl.underlying.clone(), levels),
        }
    };
    let (end0, end1) = (end(0), end(1));
    let both = a.coproduct(a).expect("same group");
    let levels = (0..=a.dim())
        .map(|k| {
            let n = a.underlying.count(k);
            (0..2 * n)
                .map(|x| if x < n { end0.map.apply(k, x) } else { end1.map.apply(k, x - n) })
                .collect()
        })
        .collect();
    let ends = GMap {
        source: both.clone(),
        target: cyl.clone(),
        map: SimplicialMap::new_unchecked(both.underlying.clone(), cyl.underlying.clone(), levels),
    };
    let proj_levels = (0..=a.dim())
        .map(|k| (0..cyl.underlying.count(k)).map(|x| x / (k + 2)).collect())
        .collect();
    let projection = GMap {
        source: cyl.clone(),
        target: a.clone(),
        map: SimplicialMap::new_unchecked(cyl.underlying.clone(), a.underlying.clone(), proj_levels),
    };
    Cylinder { cylinder: cyl, ends, end0, end1, projection }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitCollision {
    pub subgroup: Subgroup,
    pub level: usize,
    /// Two distinct H-orbits of the source with the same image.
    pub orbits: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CofibrationReport {
    pub is_cofibration: bool,
    pub collisions: Vec<OrbitCollision>,
}

/// `f/H` levelwise injective for every `H` in the family.
pub fn is_orbit_cofibration(f: &GMap, family: &SubgroupFamily) -> CofibrationReport {
    let collisions: Vec<OrbitCollision> = family
        .members()
        .iter()
        .filter_map(|h| {
            orbit_map(f, h).injectivity_failure().map(|(level, a, b)| OrbitCollision {
                subgroup: h.clone(),
                level,
                orbits: (a, b),
            })
        })
        .collect();
    CofibrationReport { is_cofibration: collisions.is_empty(), collisions }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum HomotopyCheck {
    Valid,
    NotEquivariant(EquivarianceFailure),
    StartMismatch { level: usize, simplex: usize },
    EndMismatch { level: usize, simplex: usize },
}

impl HomotopyCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, Self::Valid)
    }
}

/// Restriction of `h: A × Δ[1] → B` along `id × δ¹` (vertex 0) or `id × δ⁰`
/// (vertex 1), as a levelwise map on A.
fn restrict_to_end(h: &SimplicialMap, a: &SimplicialSet, vertex: usize) -> Vec<Vec<usize>> {
    (0..=a.dim())
        .map(|k| {
            let t = if vertex == 0 { 0 } else { k + 1 };
            (0..a.count(k)).map(|x| h.apply(k, x * (k + 2) + t)).collect()
        })
        .collect()
}

/// Checks that `homotopy: A × Δ[1] → B` is equivariant and restricts to `f`
/// at vertex 0 and to `g` at vertex 1.
pub fn is_g_homotopy(homotopy: &SimplicialMap, source: &GSimplicialSet, f: &GMap, g: &GMap) -> Result<HomotopyCheck> {
    if f.source != g.source || f.target != g.target {
        return Err(Error::ShapeMismatch("endpoint maps must share source and target".into()));
    }
    let a = &f.source;
    let cyl = a.times(&standard_simplex(1, a.dim()));
    if source != &cyl || homotopy.source() != &cyl.underlying || homotopy.target() != &f.target.underlying {
        return Err(Error::ShapeMismatch("homotopy must be a map A × Δ[1] → B".into()));
    }
    if let Some(w) = equivariance_failure(&cyl, &f.target, homotopy) {
        return Ok(HomotopyCheck::NotEquivariant(w));
    }
    let start = restrict_to_end(homotopy, &a.underlying, 0);
    let end = restrict_to_end(homotopy, &a.underlying, 1);
    for k in 0..=a.dim() {
        if let Some(x) = (0..a.underlying.count(k)).find(|&x| start[k][x] != f.map.apply(k, x)) {
            return Ok(HomotopyCheck::StartMismatch { level: k, simplex: x });
        }
        if let Some(x) = (0..a.underlying.count(k)).find(|&x| end[k][x] != g.map.apply(k, x)) {
            return Ok(HomotopyCheck::EndMismatch { level: k, simplex: x });
        }
    }
    Ok(HomotopyCheck::Valid)
}

/// A G-homotopy between two G-maps `A → B`, checked at construction.
#[derive(Clone, Debug)]
pub struct GHomotopy {
    pub map: GMap,
    pub start: GMap,
    pub end: GMap,
}

impl GHomotopy {
    pub fn new(map: GMap, start: GMap, end: GMap) -> Result<Self> {
        match is_g_homotopy(map.underlying(), map.source(), &start, &end)? {
            HomotopyCheck::Valid => Ok(Self { map, start, end }),
            other => Err(Error::ShapeMismatch(format!("not a G-homotopy: {other:?}"))),
        }
    }

    /// The constant homotopy `f ∘ pr₁`.
    pub fn constant(f: &GMap) -> Self {
        let c = cylinder(&f.source);
        let map = c.projection.then(f).expect("composable");
        Self { map, start: f.clone(), end: f.clone() }
    }
}

/// Witness that `A/H` is not a Kan complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrancyObstruction {
    pub subgroup: Subgroup,
    pub horn: UnfilledHorn,
}

/// Necessary condition for fibrancy: every `A/H` fills all horns up to
/// dimension `max_n`. Returns the first obstruction found.
pub fn fibrancy_obstruction(a: &GSimplicialSet, family: &SubgroupFamily, max_n: usize) -> Option<FibrancyObstruction> {
    family.members().iter().find_map(|h| {
        let (quotient, _) = orbit_space(a, h);
        unfilled_horn(&quotient, max_n).map(|horn| FibrancyObstruction { subgroup: h.clone(), horn })
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupHornCheck {
    pub subgroup: String,
    pub elements: Vec<Elem>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unfilled: Option<UnfilledHorn>,
}

/// Horn filling in every `A/H` through dimension `max_n`. A single unfilled
/// horn certifies that `A` is not fibrant; passing all checks is only a
/// necessary condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrancyReport {
    pub checked_up_to: usize,
    pub non_fibrant: bool,
    pub orbits: Vec<SubgroupHornCheck>,
}

pub fn fibrancy_report(a: &GSimplicialSet, family: &SubgroupFamily, max_n: usize) -> FibrancyReport {
    let orbits: Vec<SubgroupHornCheck> = family
        .members()
        .iter()
        .map(|h| SubgroupHornCheck {
            subgroup: h.label(&a.group),
            elements: h.elements().to_vec(),
            unfilled: unfilled_horn(&orbit_space(a, h).0, max_n),
        })
        .collect();
    FibrancyReport {
        checked_up_to: max_n.min(a.dim()),
        non_fibrant: orbits.iter().any(|o| o.unfilled.is_some()),
        orbits,
    }
}
