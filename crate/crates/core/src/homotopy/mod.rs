//! Three-valued weak-equivalence verdicts with re-checkable evidence.

pub mod pi1;
pub mod search;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Subgroup, SubgroupFamily};
use crate::gsset::{fixed_map, is_g_homotopy, orbit_map, GHomotopy, GMap};
use crate::homology::{homology, homology_iso_failure, HomologyMismatch};
use crate::sset::{SimplicialMap, SimplicialSet};

pub use pi1::{component_presentation, pi1_presentation, simplify_presentation, Pi1Presentation, Simplified, Word};
pub use search::{default_targets, pi1_nontrivial_certificate, HomCertificate, SearchOutcome, Target};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    CertifiedEquivalence,
    CertifiedNonEquivalence,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Source,
    Target,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// The map is a simplicial isomorphism.
    Isomorphism,
    HomologyMismatch(HomologyMismatch),
    /// Homology iso through `up_to` and every component on both sides has a
    /// presentation that Tietze-simplifies to the trivial group.
    SimplyConnectedWhitehead {
        criterion: String,
        up_to: usize,
        /// Source component roots with their target component roots.
        components: Vec<(usize, usize)>,
        truncation: String,
    },
    /// One side's component maps nontrivially to a finite group while the
    /// matching component on the other side is provably simply connected.
    Pi1Obstruction {
        nontrivial_side: Side,
        /// Basepoint of the nontrivial component.
        basepoint: usize,
        /// Basepoint of the provably trivial component on the other side.
        trivial_basepoint: usize,
        certificate: HomCertificate,
    },
    /// A verified homotopy-equivalence certificate.
    HomotopyEquivalence { criterion: String },
    Explanation { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceVerdict {
    pub status: Status,
    pub evidence: Evidence,
}

impl EquivalenceVerdict {
    fn new(status: Status, evidence: Evidence) -> Self {
        Self { status, evidence }
    }

    pub fn is_equivalence(&self) -> bool {
        self.status == Status::CertifiedEquivalence
    }

    pub fn is_non_equivalence(&self) -> bool {
        self.status == Status::CertifiedNonEquivalence
    }

    /// Upgrades `Inconclusive` given a verified homotopy-equivalence
    /// certificate; other verdicts are kept.
    pub fn with_certificate(self, certified: bool, criterion: &str) -> Self {
        if certified && self.status == Status::Inconclusive {
            Self::new(
                Status::CertifiedEquivalence,
                Evidence::HomotopyEquivalence { criterion: criterion.to_string() },
            )
        } else {
            self
        }
    }
}

/// Per-component simple-connectivity proof attempt.
fn component_is_simply_connected(set: &SimplicialSet, root: usize) -> Result<bool> {
    let p = component_presentation(set, root)?;
    Ok(simplify_presentation(&p, pi1::DEFAULT_TIETZE_BUDGET).is_trivial())
}

fn component_certificate(set: &SimplicialSet, root: usize, targets: &[Target]) -> Result<Option<HomCertificate>> {
    let p = component_presentation(set, root)?;
    Ok(match pi1_nontrivial_certificate(p.generator_count(), &p.relators, targets) {
        SearchOutcome::Found(c) => Some(c),
        SearchOutcome::NotFound { .. } => None,
    })
}

fn truncation_note(set: &SimplicialSet, up_to: usize) -> String {
    format!(
        "valid for the simplicial sets as truncated at dimension {}; homology compared through degree {up_to}",
        set.dim()
    )
}

/// Decision pipeline: isomorphism, homology, simple connectivity, π₁
/// obstruction, in that order.
pub fn weq_verdict(f: &SimplicialMap, up_to: usize) -> Result<EquivalenceVerdict> {
    weq_verdict_with_targets(f, up_to, &default_targets())
}

pub fn weq_verdict_with_targets(f: &SimplicialMap, up_to: usize, targets: &[Target]) -> Result<EquivalenceVerdict> {
    let dim = f.source().dim();
    if up_to + 1 > dim {
        return Err(Error::TruncationInsufficient { degree: up_to, needed: up_to + 1, dim });
    }
    if f.is_isomorphism() {
        return Ok(EquivalenceVerdict::new(Status::CertifiedEquivalence, Evidence::Isomorphism));
    }
    if let Some(mismatch) = homology_iso_failure(f, up_to)? {
        return Ok(EquivalenceVerdict::new(Status::CertifiedNonEquivalence, Evidence::HomologyMismatch(mismatch)));
    }
    if dim < 2 {
        return Ok(EquivalenceVerdict::new(
            Status::Inconclusive,
            Evidence::Explanation { reason: "dimension bound below 2 leaves π₁ undetermined".into() },
        ));
    }
    // H₀ iso: f is a bijection on components.
    let (source, target) = (f.source(), f.target());
    let target_roots = target.components();
    let pairs: Vec<(usize, usize)> =
        source.component_roots().into_iter().map(|r| (r, target_roots[f.apply(0, r)])).collect();
    let mut trivial = Vec::with_capacity(pairs.len());
    for &(s, t) in &pairs {
        trivial.push((component_is_simply_connected(source, s)?, component_is_simply_connected(target, t)?));
    }
    if trivial.iter().all(|&(a, b)| a && b) {
        if up_to >= 2 {
            return Ok(EquivalenceVerdict::new(
                Status::CertifiedEquivalence,
                Evidence::SimplyConnectedWhitehead {
                    criterion: "homology isomorphism between simply connected spaces (Whitehead)".into(),
                    up_to,
                    components: pairs,
                    truncation: truncation_note(source, up_to),
                },
            ));
        }
        return Ok(EquivalenceVerdict::new(
            Status::Inconclusive,
            Evidence::Explanation {
                reason: format!("both sides simply connected but homology only compared through degree {up_to}"),
            },
        ));
    }
    for (&(s, t), &(ts, tt)) in pairs.iter().zip(&trivial) {
        let found = if tt && !ts {
            component_certificate(source, s, targets)?.map(|c| (Side::Source, s, t, c))
        } else if ts && !tt {
            component_certificate(target, t, targets)?.map(|c| (Side::Target, t, s, c))
        } else {
            None
        };
        if let Some((nontrivial_side, basepoint, trivial_basepoint, certificate)) = found {
            return Ok(EquivalenceVerdict::new(
                Status::CertifiedNonEquivalence,
                Evidence::Pi1Obstruction { nontrivial_side, basepoint, trivial_basepoint, certificate },
            ));
        }
    }
    Ok(EquivalenceVerdict::new(
        Status::Inconclusive,
        Evidence::Explanation {
            reason: "homology isomorphism, but fundamental groups could be neither proved trivial nor separated".into(),
        },
    ))
}

/// Recomputes the invariant behind a certified verdict.
pub fn reverify(f: &SimplicialMap, verdict: &EquivalenceVerdict) -> Result<bool> {
    Ok(match (&verdict.status, &verdict.evidence) {
        (Status::CertifiedEquivalence, Evidence::Isomorphism) => f.is_isomorphism(),
        (Status::CertifiedNonEquivalence, Evidence::HomologyMismatch(m)) => {
            let s = homology(f.source(), m.degree)?;
            let t = homology(f.target(), m.degree)?;
            if s != m.source || t != m.target {
                false
            } else if s != t {
                true
            } else {
                homology_iso_failure(f, m.degree)?.is_some_and(|again| again.degree == m.degree)
            }
        }
        (Status::CertifiedEquivalence, Evidence::SimplyConnectedWhitehead { up_to, components, .. }) => {
            *up_to >= 2
                && homology_iso_failure(f, *up_to)?.is_none()
                && components.len() == f.source().component_roots().len()
                && components.iter().try_fold(true, |ok, &(s, t)| -> Result<bool> {
                    Ok(ok
                        && component_is_simply_connected(f.source(), s)?
                        && component_is_simply_connected(f.target(), t)?)
                })?
        }
        (
            Status::CertifiedNonEquivalence,
            Evidence::Pi1Obstruction { nontrivial_side, basepoint, trivial_basepoint, certificate },
        ) => {
            let (nontrivial, other) = match nontrivial_side {
                Side::Source => (f.source(), f.target()),
                Side::Target => (f.target(), f.source()),
            };
            let matched = match nontrivial_side {
                Side::Source => {
                    let c = f.target().components();
                    c[f.apply(0, *basepoint)] == c[*trivial_basepoint]
                }
                Side::Target => {
                    let c = f.target().components();
                    c[f.apply(0, *trivial_basepoint)] == c[*basepoint]
                }
            };
            let p = component_presentation(nontrivial, *basepoint)?;
            matched
                && certificate.verify(p.generator_count(), &p.relators)
                && component_is_simply_connected(other, *trivial_basepoint)?
        }
        _ => false,
    })
}

/// `H1` witnesses `g∘f ≃ id_A` and `H2` witnesses `f∘g ≃ id_B`, in either
/// orientation.
pub fn verify_homotopy_equivalence(f: &GMap, g: &GMap, h1: &GHomotopy, h2: &GHomotopy) -> Result<bool> {
    if f.source() != g.target() || f.target() != g.source() {
        return Err(Error::ShapeMismatch("f and g are not opposite maps".into()));
    }
    let gf = f.then(g)?;
    let fg = g.then(f)?;
    let id_a = GMap::identity(f.source());
    let id_b = GMap::identity(f.target());
    let certifies = |h: &GHomotopy, a: &GMap, b: &GMap| -> Result<bool> {
        if h.map.target() != a.target() {
            return Ok(false);
        }
        Ok(is_g_homotopy(h.map.underlying(), h.map.source(), a, b)?.is_valid()
            || is_g_homotopy(h.map.underlying(), h.map.source(), b, a)?.is_valid())
    };
    Ok(certifies(h1, &gf, &id_a)? && certifies(h2, &fg, &id_b)?)
}

/// A G-homotopy equivalence `f` with inverse `g` and the two homotopies.
#[derive(Clone, Debug)]
pub struct HomotopyEquivalenceCertificate {
    pub inverse: GMap,
    pub left: GHomotopy,
    pub right: GHomotopy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupVerdict {
    pub subgroup: String,
    pub elements: Vec<usize>,
    pub verdict: EquivalenceVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeqReport {
    /// `"orbit"` or `"fixed"`.
    pub kind: String,
    pub up_to: usize,
    pub entries: Vec<SubgroupVerdict>,
}

impl WeqReport {
    pub fn all_equivalences(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.is_equivalence())
    }

    pub fn any_non_equivalence(&self) -> bool {
        self.entries.iter().any(|e| e.verdict.is_non_equivalence())
    }

    pub fn verdict_at(&self, h: &Subgroup) -> Option<&EquivalenceVerdict> {
        self.entries.iter().find(|e| e.elements == h.elements()).map(|e| &e.verdict)
    }
}

fn report(
    kind: &str,
    f: &GMap,
    family: &SubgroupFamily,
    up_to: usize,
    certificate: Option<&HomotopyEquivalenceCertificate>,
    restrict: impl Fn(&GMap, &Subgroup) -> SimplicialMap,
) -> Result<WeqReport> {
    let certified = match certificate {
        Some(c) => verify_homotopy_equivalence(f, &c.inverse, &c.left, &c.right)?,
        None => false,
    };
    let group = f.source().group();
    let entries = family
        .members()
        .iter()
        .map(|h| {
            let verdict = weq_verdict(&restrict(f, h), up_to)?
                .with_certificate(certified, &format!("G-homotopy equivalence restricted to {kind} data"));
            Ok(SubgroupVerdict { subgroup: h.label(group), elements: h.elements().to_vec(), verdict })
        })
        .collect::<Result<_>>()?;
    Ok(WeqReport { kind: kind.to_string(), up_to, entries })
}

/// `weq_verdict(f/H)` for each `H` in the family.
pub fn orbit_weq_report(f: &GMap, family: &SubgroupFamily, up_to: usize) -> Result<WeqReport> {
    report("orbit", f, family, up_to, None, orbit_map)
}

/// `weq_verdict(f^H)` for each `H` in the family.
pub fn fixed_weq_report(f: &GMap, family: &SubgroupFamily, up_to: usize) -> Result<WeqReport> {
    report("fixed", f, family, up_to, None, fixed_map)
}

pub fn orbit_weq_report_certified(
    f: &GMap,
    family: &SubgroupFamily,
    up_to: usize,
    certificate: &HomotopyEquivalenceCertificate,
) -> Result<WeqReport> {
    report("orbit", f, family, up_to, Some(certificate), orbit_map)
}

pub fn fixed_weq_report_certified(
    f: &GMap,
    family: &SubgroupFamily,
    up_to: usize,
    certificate: &HomotopyEquivalenceCertificate,
) -> Result<WeqReport> {
    report("fixed", f, family, up_to, Some(certificate), fixed_map)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::group::FiniteGroup;
    use crate::gsset::{cylinder, GSimplicialSet};
    use crate::sset::{boundary_subcomplex, standard_simplex};

    #[test]
    fn identity_and_collapses() {
        let (b, _) = boundary_subcomplex(2, 3);
        let v = weq_verdict(&SimplicialMap::identity(&b), 2).unwrap();
        assert!(v.is_equivalence());
        let v = weq_verdict(&SimplicialMap::to_point(&b), 2).unwrap();
        assert!(v.is_non_equivalence());
        assert!(matches!(v.evidence, Evidence::HomologyMismatch(ref m) if m.degree == 1));
        assert!(reverify(&SimplicialMap::to_point(&b), &v).unwrap());
        let d = standard_simplex(3, 4);
        let v = weq_verdict(&SimplicialMap::to_point(&d), 3).unwrap();
        assert!(matches!(v.evidence, Evidence::SimplyConnectedWhitehead { .. }));
        assert!(reverify(&SimplicialMap::to_point(&d), &v).unwrap());
    }

    #[test]
    fn truncation_is_enforced() {
        let d = standard_simplex(2, 2);
        assert!(matches!(
            weq_verdict(&SimplicialMap::to_point(&d), 2),
            Err(Error::TruncationInsufficient { .. })
        ));
    }

    #[test]
    fn verdict_json_shape() {
        let v = weq_verdict(&SimplicialMap::identity(&SimplicialSet::point(2)), 1).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        assert_eq!(json["status"], "CertifiedEquivalence");
        assert_eq!(json["evidence"]["kind"], "isomorphism");
    }

    #[test]
    fn free_orbit_collapse_reports() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let family = SubgroupFamily::all(&g);
        let a = GSimplicialSet::homogeneous(g.clone(), &Subgroup::trivial(), 3);
        let f = GMap::to_point(&a);
        let orbit = orbit_weq_report(&f, &family, 2).unwrap();
        assert!(orbit.verdict_at(&Subgroup::trivial()).unwrap().is_non_equivalence());
        assert!(orbit.verdict_at(&Subgroup::whole(&g)).unwrap().is_equivalence());
    }

    #[test]
    fn cylinder_projection_is_a_homotopy_equivalence() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let (b, _) = boundary_subcomplex(2, 3);
        let a = GSimplicialSet::homogeneous(g.clone(), &Subgroup::trivial(), 3).times(&b);
        let c = cylinder(&a);
        // w ∘ i0 = id; i0 ∘ w ≃ id through (x, t, s) ↦ (x, min(t, s)).
        let left = GHomotopy::constant(&GMap::identity(&a));
        let cyl2 = c.cylinder.times(&standard_simplex(1, 3));
        let levels: Vec<Vec<usize>> = (0..=3)
            .map(|k| {
                (0..cyl2.underlying().count(k))
                    .map(|id| {
                        let (xt, s) = (id / (k + 2), id % (k + 2));
                        let (x, t) = (xt / (k + 2), xt % (k + 2));
                        // Δ[1] at level k: id j is the tuple with k+1-j zeros.
                        x * (k + 2) + t.min(s)
                    })
                    .collect()
            })
            .collect();
        let h = GMap::from_levels(cyl2, c.cylinder.clone(), levels).unwrap();
        let right = GHomotopy::new(h, c.projection.then(&c.end0).unwrap(), GMap::identity(&c.cylinder)).unwrap();
        assert!(verify_homotopy_equivalence(&c.end0, &c.projection, &left, &right).unwrap());
        assert!(!verify_homotopy_equivalence(&c.end0, &c.projection, &left, &left).unwrap_or(false));
        let certificate = HomotopyEquivalenceCertificate { inverse: c.projection.clone(), left, right };
        let family = SubgroupFamily::all(&g);
        let report = orbit_weq_report_certified(&c.end0, &family, 2, &certificate).unwrap();
        assert!(report.all_equivalences());
    }
}
