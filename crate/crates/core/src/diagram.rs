//! Diagrams `O_F → sSet` and the adjunction `θ_! ⊣ θ*` relating them to
//! G-simplicial sets.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{OrbitCategory, Subgroup};
use crate::gsset::{orbit_map, orbit_space, GMap, GSimplicialSet};
use crate::homology::{homology_iso_failure, HomologyMismatch};
use crate::sset::{standard_simplex, SimplicialMap, SimplicialSet};

/// A functor from the orbit category: `at[object]` and `on[morphism id]`.
#[derive(Clone)]
pub struct OrbitDiagram {
    category: Arc<OrbitCategory>,
    at: Vec<SimplicialSet>,
    on: Vec<SimplicialMap>,
}

impl fmt::Debug for OrbitDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrbitDiagram").field("at", &self.at).finish()
    }
}

impl PartialEq for OrbitDiagram {
    fn eq(&self, other: &Self) -> bool {
        self.category.objects() == other.category.objects() && self.at == other.at && self.on == other.on
    }
}

impl OrbitDiagram {
    pub fn new(category: Arc<OrbitCategory>, at: Vec<SimplicialSet>, on: Vec<SimplicialMap>) -> Result<Self> {
        if at.len() != category.object_count() || on.len() != category.morphisms().len() {
            return Err(Error::InvalidDiagram(format!(
                "expected {} objects and {} morphisms, got {} and {}",
                category.object_count(),
                category.morphisms().len(),
                at.len(),
                on.len()
            )));
        }
        let diagram = Self { category, at, on };
        diagram.check_functor().map_err(Error::InvalidDiagram)?;
        Ok(diagram)
    }

    fn check_functor(&self) -> Result<(), String> {
        let cat = &self.category;
        for (i, m) in cat.morphisms().iter().enumerate() {
            if self.on[i].source() != &self.at[m.source] || self.on[i].target() != &self.at[m.target] {
                return Err(format!("map on morphism {} has the wrong source or target", self.label(i)));
            }
        }
        for object in 0..cat.object_count() {
            if !self.on[cat.identity(object)].is_identity() {
                return Err(format!("identity of object {object} is not sent to an identity"));
            }
        }
        for (a, ma) in cat.morphisms().iter().enumerate() {
            for b in cat.out_of(ma.target) {
                let composite = self.on[a].then(&self.on[b]).map_err(|e| e.to_string())?;
                if composite != self.on[cat.compose(a, b)] {
                    return Err(format!(
                        "composition fails for {} followed by {}",
                        self.label(a),
                        self.label(b)
                    ));
                }
            }
        }
        Ok(())
    }

    /// `"s->t:rep"`.
    pub fn label(&self, morphism: usize) -> String {
        let m = self.category.morphism(morphism);
        format!("{}->{}:{}", m.source, m.target, m.rep)
    }

    pub fn category(&self) -> &Arc<OrbitCategory> {
        &self.category
    }

    pub fn at(&self, object: usize) -> &SimplicialSet {
        &self.at[object]
    }

    pub fn on(&self, morphism: usize) -> &SimplicialMap {
        &self.on[morphism]
    }

    pub fn objects(&self) -> &[SimplicialSet] {
        &self.at
    }

    pub fn maps(&self) -> &[SimplicialMap] {
        &self.on
    }

    pub fn constant(category: Arc<OrbitCategory>, set: &SimplicialSet) -> Self {
        let at = vec![set.clone(); category.object_count()];
        let on = vec![SimplicialMap::identity(set); category.morphisms().len()];
        Self { category, at, on }
    }

    /// Objectwise product with a fixed simplicial set.
    pub fn times(&self, set: &SimplicialSet) -> Self {
        let id = SimplicialMap::identity(set);
        Self {
            category: self.category.clone(),
            at: self.at.iter().map(|x| x.product(set)).collect(),
            on: self.on.iter().map(|f| f.product(&id)).collect(),
        }
    }
}

/// Naturality failure witness for the square over `morphism`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaturalityFailure {
    pub morphism: String,
    pub level: usize,
    pub simplex: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NatTrans {
    source: OrbitDiagram,
    target: OrbitDiagram,
    components: Vec<SimplicialMap>,
}

fn naturality_failure(source: &OrbitDiagram, target: &OrbitDiagram, components: &[SimplicialMap]) -> Option<NaturalityFailure> {
    for (i, m) in source.category.morphisms().iter().enumerate() {
        let (s, t) = (m.source, m.target);
        for k in 0..=source.at[s].dim() {
            for x in 0..source.at[s].count(k) {
                let around = components[t].apply(k, source.on[i].apply(k, x));
                let down = target.on[i].apply(k, components[s].apply(k, x));
                if around != down {
                    return Some(NaturalityFailure { morphism: source.label(i), level: k, simplex: x });
                }
            }
        }
    }
    None
}

impl NatTrans {
    pub fn new(source: OrbitDiagram, target: OrbitDiagram, components: Vec<SimplicialMap>) -> Result<Self> {
        if source.category.objects() != target.category.objects() || components.len() != source.at.len() {
            return Err(Error::ShapeMismatch("transformation between diagrams of different shapes".into()));
        }
        for (i, c) in components.iter().enumerate() {
            if c.source() != &source.at[i] || c.target() != &target.at[i] {
                return Err(Error::ShapeMismatch(format!("component {i} has the wrong source or target")));
            }
        }
        if let Some(w) = naturality_failure(&source, &target, &components) {
            return Err(Error::InvalidDiagram(format!(
                "naturality fails over {} at simplex {} of level {}",
                w.morphism, w.simplex, w.level
            )));
        }
        Ok(Self { source, target, components })
    }

    pub fn identity(diagram: &OrbitDiagram) -> Self {
        let components = diagram.at.iter().map(SimplicialMap::identity).collect();
        Self { source: diagram.clone(), target: diagram.clone(), components }
    }

    pub fn source(&self) -> &OrbitDiagram {
        &self.source
    }

    pub fn target(&self) -> &OrbitDiagram {
        &self.target
    }

    pub fn component(&self, object: usize) -> &SimplicialMap {
        &self.components[object]
    }

    pub fn components(&self) -> &[SimplicialMap] {
        &self.components
    }

    pub fn is_identity(&self) -> bool {
        self.components.iter().all(SimplicialMap::is_identity)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &NatTrans) -> Result<NatTrans> {
        if self.target != other.source {
            return Err(Error::ShapeMismatch("transformations are not composable".into()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.then(b))
            .collect::<Result<_>>()?;
        Ok(NatTrans { source: self.source.clone(), target: other.target.clone(), components })
    }
}

/// `θ_!(A)`: `G/H ↦ A/H`, `g̃ ↦ ([a]_H ↦ [a·g]_K)`.
pub fn theta_shriek(a: &GSimplicialSet, category: &Arc<OrbitCategory>) -> Result<OrbitDiagram> {
    if a.group() != category.group() {
        return Err(Error::ShapeMismatch("G-set and orbit category use different groups".into()));
    }
    let orbits: Vec<(SimplicialSet, SimplicialMap)> = category.objects().iter().map(|h| orbit_space(a, h)).collect();
    let on = category
        .morphisms()
        .iter()
        .map(|m| {
            let (source, ps) = &orbits[m.source];
            let (target, pt) = &orbits[m.target];
            let levels = (0..=a.dim())
                .map(|k| {
                    let mut image = vec![usize::MAX; source.count(k)];
                    for x in (0..a.underlying().count(k)).rev() {
                        image[ps.apply(k, x)] = pt.apply(k, a.act(k, x, m.rep));
                    }
                    image
                })
                .collect();
            SimplicialMap::new_unchecked(source.clone(), target.clone(), levels)
        })
        .collect();
    let at = orbits.into_iter().map(|(set, _)| set).collect();
    let diagram = OrbitDiagram { category: category.clone(), at, on };
    if let Err(e) = diagram.check_functor() {
        return Err(Error::Internal(format!("orbit diagram is not a functor: {e}")));
    }
    Ok(diagram)
}

/// `θ_!(f)` with components `f/H`.
pub fn theta_shriek_map(f: &GMap, category: &Arc<OrbitCategory>) -> Result<NatTrans> {
    let source = theta_shriek(f.source(), category)?;
    let target = theta_shriek(f.target(), category)?;
    let components = category.objects().iter().map(|h| orbit_map(f, h)).collect();
    NatTrans::new(source, target, components).map_err(|e| Error::Internal(format!("θ_!(f) is not natural: {e}")))
}

/// `θ*(T)`: `T(G/e)` with `a·g = T(g̃)(a)` for `g̃ ∈ Hom(G/e, G/e)`.
pub fn theta_star(t: &OrbitDiagram) -> Result<GSimplicialSet> {
    let cat = &t.category;
    let e = cat.free_orbit().ok_or(Error::MissingFreeOrbit)?;
    let set = t.at[e].clone();
    let group = cat.group().clone();
    let by_rep: Vec<usize> = {
        let mut v = vec![usize::MAX; group.order()];
        for &m in cat.hom(e, e) {
            v[cat.morphism(m).rep] = m;
        }
        v
    };
    let action = (0..=set.dim())
        .map(|k| group.elements().map(|g| t.on[by_rep[g]].levels()[k].clone()).collect())
        .collect();
    GSimplicialSet::new(group, set, action)
}

/// `θ*(η)`: the component at the free orbit as a G-map.
pub fn theta_star_map(eta: &NatTrans) -> Result<GMap> {
    let e = eta.source.category.free_orbit().ok_or(Error::MissingFreeOrbit)?;
    GMap::new(theta_star(&eta.source)?, theta_star(&eta.target)?, eta.components[e].clone())
}

/// `ε_T: θ_!θ*(T) → T`, `[x]_H ↦ T(1̃_H)(x)`. Independence of the orbit
/// representative is checked on every representative.
pub fn counit(t: &OrbitDiagram) -> Result<NatTrans> {
    let cat = &t.category;
    let free = theta_star(t)?;
    let source = theta_shriek(&free, cat)?;
    let mut components = Vec::with_capacity(cat.object_count());
    for (object, h) in cat.objects().iter().enumerate() {
        let projection = cat.projection_to(object).ok_or(Error::MissingFreeOrbit)?;
        let (quotient, p) = orbit_space(&free, h);
        let along = &t.on[projection];
        let mut levels = Vec::with_capacity(free.dim() + 1);
        for k in 0..=free.dim() {
            let mut image = vec![usize::MAX; quotient.count(k)];
            for x in 0..free.underlying().count(k) {
                let orbit = p.apply(k, x);
                let y = along.apply(k, x);
                if image[orbit] == usize::MAX {
                    image[orbit] = y;
                } else if image[orbit] != y {
                    return Err(Error::Internal(format!(
                        "counit is not well defined at {} on level {k}: representatives disagree",
                        h.label(cat.group())
                    )));
                }
            }
            levels.push(image);
        }
        components.push(SimplicialMap::new_unchecked(quotient, t.at[object].clone(), levels));
    }
    NatTrans::new(source, t.clone(), components).map_err(|e| Error::Internal(format!("counit is not natural: {e}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionReport {
    pub passed: bool,
    pub checks: Vec<AdjunctionCheck>,
}

fn first_non_identity(components: &[SimplicialMap], objects: &[Subgroup], category: &OrbitCategory) -> Option<String> {
    components.iter().zip(objects).find(|(c, _)| !c.is_identity()).map(|(c, h)| {
        if c.source() != c.target() {
            format!("component at {} changes the simplicial set", h.label(category.group()))
        } else {
            format!("component at {} moves a simplex", h.label(category.group()))
        }
    })
}

/// Unit and triangle identities for `θ_! ⊣ θ*` with identity unit.
pub fn verify_adjunction(a: &GSimplicialSet, t: &OrbitDiagram) -> AdjunctionReport {
    let cat = t.category.clone();
    let mut checks = Vec::new();
    let mut record = |name: &str, outcome: Result<Option<String>>| {
        let witness = match outcome {
            Ok(w) => w,
            Err(e) => Some(e.to_string()),
        };
        checks.push(AdjunctionCheck { name: name.to_string(), passed: witness.is_none(), witness });
    };

    let unit = theta_shriek(a, &cat).and_then(|d| theta_star(&d));
    record(
        "unit: θ*θ_!(A) = A",
        unit.map(|back| (back != *a).then(|| "θ*θ_!(A) differs from A".to_string())),
    );
    record(
        "triangle: ε_{θ_!A} ∘ θ_!(η_A) = id",
        theta_shriek(a, &cat)
            .and_then(|d| counit(&d))
            .map(|eps| first_non_identity(&eps.components, cat.objects(), &cat)),
    );
    record(
        "triangle: θ*(ε_T) ∘ η_{θ*T} = id",
        counit(t).and_then(|eps| theta_star_map(&eps)).map(|m| {
            (!m.underlying().is_identity()).then(|| "θ*(ε_T) is not the identity of T(G/e)".to_string())
        }),
    );
    record(
        "unit on maps: θ*θ_!(id_A) = id_A",
        theta_shriek_map(&GMap::identity(a), &cat)
            .and_then(|eta| theta_star_map(&eta))
            .map(|m| (m != GMap::identity(a)).then(|| "θ*θ_! does not fix the identity map".to_string())),
    );
    AdjunctionReport { passed: checks.iter().all(|c| c.passed), checks }
}

pub fn is_objectwise_injective(eta: &NatTrans) -> bool {
    eta.components.iter().all(SimplicialMap::is_levelwise_injective)
}

/// Computable proxy for objectwise weak equivalence: homology isomorphism
/// through `up_to` at each object. `None` marks a passing object.
pub fn objectwise_homology_failures(eta: &NatTrans, up_to: usize) -> Result<Vec<Option<HomologyMismatch>>> {
    eta.components.iter().map(|c| homology_iso_failure(c, up_to)).collect()
}

pub fn is_objectwise_homology_iso(eta: &NatTrans, up_to: usize) -> Result<Vec<bool>> {
    Ok(objectwise_homology_failures(eta, up_to)?.iter().map(Option::is_none).collect())
}

/// `θ_!(A × Δ[1]) → θ_!(A) × Δ[1]`, `[(a, t)]_H ↦ ([a]_H, t)`; natural and
/// objectwise an isomorphism.
pub fn cylinder_comparison(a: &GSimplicialSet, category: &Arc<OrbitCategory>) -> Result<NatTrans> {
    let interval = standard_simplex(1, a.dim());
    let cyl = a.times(&interval);
    let source = theta_shriek(&cyl, category)?;
    let target = theta_shriek(a, category)?.times(&interval);
    let mut components = Vec::with_capacity(category.object_count());
    for (object, h) in category.objects().iter().enumerate() {
        let (_, pc) = orbit_space(&cyl, h);
        let (_, pa) = orbit_space(a, h);
        let mut levels = Vec::with_capacity(a.dim() + 1);
        for k in 0..=a.dim() {
            let ci = interval.count(k);
            let mut image = vec![usize::MAX; source.at[object].count(k)];
            for x in 0..cyl.underlying().count(k) {
                image[pc.apply(k, x)] = pa.apply(k, x / ci) * ci + x % ci;
            }
            levels.push(image);
        }
        components.push(SimplicialMap::new(source.at[object].clone(), target.at[object].clone(), levels)?);
    }
    NatTrans::new(source, target, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{FiniteGroup, SubgroupFamily};
    use crate::gsset::fold;
    use crate::sset::boundary_subcomplex;

    fn category(group: &Arc<FiniteGroup>) -> Arc<OrbitCategory> {
        Arc::new(OrbitCategory::new(group.clone(), SubgroupFamily::all(group)).unwrap())
    }

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3))
    }

    #[test]
    fn point_gives_constant_diagram() {
        let g = s3();
        let cat = category(&g);
        let pt = GSimplicialSet::trivial(g, SimplicialSet::point(2));
        let d = theta_shriek(&pt, &cat).unwrap();
        assert_eq!(d, OrbitDiagram::constant(cat, &SimplicialSet::point(2)));
        assert!(counit(&d).unwrap().is_identity());
    }

    #[test]
    fn free_orbit_of_z2() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let cat = category(&g);
        let a = GSimplicialSet::homogeneous(g.clone(), &Subgroup::trivial(), 2);
        let d = theta_shriek(&a, &cat).unwrap();
        let e = cat.free_orbit().unwrap();
        let whole = 1 - e;
        assert_eq!(d.at(e).count(0), 2);
        assert_eq!(d.at(whole).count(0), 1);
        let swap = cat.morphism_id(&crate::group::OrbitMorphism { source: e, target: e, rep: 1 }).unwrap();
        assert_eq!(d.on(swap).levels()[0], vec![1, 0]);
        let collapse = cat.projection_to(whole).unwrap();
        assert_eq!(d.on(collapse).levels()[0], vec![0, 0]);
    }

    #[test]
    fn theta_star_requires_free_orbit() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        // Families are closed under subgroups, so only the empty family lacks G/e.
        let fam = SubgroupFamily::from_members(&g, Vec::new()).unwrap();
        let cat = Arc::new(OrbitCategory::new(g, fam).unwrap());
        let d = OrbitDiagram::constant(cat, &SimplicialSet::point(1));
        assert_eq!(theta_star(&d).unwrap_err(), Error::MissingFreeOrbit);
    }

    #[test]
    fn rejects_non_functor() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let cat = category(&g);
        let two = SimplicialSet::discrete(2, 1);
        let swap = SimplicialMap::new(two.clone(), two.clone(), vec![vec![1, 0], vec![1, 0]]).unwrap();
        let mut on = vec![SimplicialMap::identity(&two); cat.morphisms().len()];
        // Sending the identity to the swap breaks the identity law.
        let e = cat.free_orbit().unwrap();
        on[cat.identity(e)] = swap;
        assert!(OrbitDiagram::new(cat, vec![two.clone(), two], on).is_err());
    }

    #[test]
    fn adjunction_and_cylinder_on_small_examples() {
        let g = s3();
        let cat = category(&g);
        let (b, _) = boundary_subcomplex(2, 3);
        for h in cat.objects().to_vec() {
            let a = GSimplicialSet::homogeneous(g.clone(), &h, 3).times(&b);
            let d = theta_shriek(&a, &cat).unwrap();
            assert!(verify_adjunction(&a, &d).passed);
            assert_eq!(theta_star(&d).unwrap(), a);
            let comparison = cylinder_comparison(&a, &cat).unwrap();
            assert!(comparison.components().iter().all(SimplicialMap::is_isomorphism));
        }
    }

    #[test]
    fn fold_is_not_objectwise_injective() {
        let g = s3();
        let cat = category(&g);
        let a = GSimplicialSet::homogeneous(g, &Subgroup::trivial(), 1);
        let eta = theta_shriek_map(&fold(&a), &cat).unwrap();
        assert!(!is_objectwise_injective(&eta));
        assert!(is_objectwise_injective(&theta_shriek_map(&GMap::identity(&a), &cat).unwrap()));
    }
}
