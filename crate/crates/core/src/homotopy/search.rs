//! Homomorphisms from finitely presented groups to small finite groups.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::pi1::{generator_of, simplify, Word, DEFAULT_TIETZE_BUDGET};
use crate::group::{Elem, FiniteGroup};

/// A named finite group used as a homomorphism target.
#[derive(Clone, Debug)]
pub struct Target {
    pub name: String,
    pub group: Arc<FiniteGroup>,
}

impl Target {
    pub fn new(name: impl Into<String>, group: FiniteGroup) -> Self {
        Self { name: name.into(), group: Arc::new(group) }
    }
}

/// Built-in targets in increasing order: cyclic groups through order 24, the
/// small elementary abelian and dihedral groups, Q8, A4, S4, then A5 and S5.
pub fn default_targets() -> Vec<Target> {
    let mut targets: Vec<Target> = (2..=24).map(|n| Target::new(format!("Z/{n}"), FiniteGroup::cyclic(n))).collect();
    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    let z2z2 = FiniteGroup::direct_product(&z2, &z2);
    targets.push(Target::new("Z/2×Z/2", z2z2.clone()));
    targets.push(Target::new("Z/2×Z/2×Z/2", FiniteGroup::direct_product(&z2z2, &z2)));
    targets.push(Target::new("Z/3×Z/3", FiniteGroup::direct_product(&z3, &z3)));
    targets.push(Target::new("Z/2×Z/4", FiniteGroup::direct_product(&z2, &FiniteGroup::cyclic(4))));
    for n in 3..=12 {
        targets.push(Target::new(format!("D{n}"), FiniteGroup::dihedral(n)));
    }
    targets.push(Target::new("Q8", FiniteGroup::quaternion()));
    targets.push(Target::new("A4", FiniteGroup::alternating(4)));
    targets.push(Target::new("S4", FiniteGroup::symmetric(4)));
    targets.push(Target::new("A5", FiniteGroup::alternating(5)));
    targets.push(Target::new("S5", FiniteGroup::symmetric(5)));
    targets.sort_by_key(|t| t.group.order());
    targets
}

pub fn evaluate(group: &FiniteGroup, images: &[Elem], word: &[i32]) -> Elem {
    word.iter().fold(0, |acc, &l| {
        let g = images[generator_of(l)];
        group.mul(acc, if l > 0 { g } else { group.inv(g) })
    })
}

/// A homomorphism to `target` given by images of every generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCertificate {
    pub target: String,
    pub target_order: usize,
    pub target_table: Vec<Vec<Elem>>,
    pub images: Vec<Elem>,
    pub image_names: Vec<String>,
}

impl HomCertificate {
    /// Images satisfy every relator and at least one is nontrivial.
    pub fn verify(&self, generator_count: usize, relators: &[Word]) -> bool {
        let Ok(group) = FiniteGroup::from_table(self.target_table.clone(), None) else {
            return false;
        };
        self.images.len() == generator_count
            && self.images.iter().all(|&g| g < group.order())
            && self.images.iter().any(|&g| g != 0)
            && relators.iter().all(|r| evaluate(&group, &self.images, r) == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(HomCertificate),
    NotFound { exhausted: Vec<String>, budget_hit: Vec<String> },
}

pub const DEFAULT_NODE_BUDGET: usize = 2_000_000;

/// Backtracking search for a homomorphism with nontrivial image.
fn search_target(generators: &[usize], relators: &[Word], group: &FiniteGroup, budget: usize) -> Result<Option<Vec<Elem>>, ()> {
    let n = generators.len();
    if n == 0 {
        return Ok(None);
    }
    let position = |g: usize| generators.iter().position(|&x| x == g).expect("relators use surviving generators");
    let local: Vec<Vec<(usize, bool)>> =
        relators.iter().map(|r| r.iter().map(|&l| (position(generator_of(l)), l < 0)).collect()).collect();
    // Relators checked as soon as their last generator is assigned.
    let mut ready: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ri, r) in local.iter().enumerate() {
        if let Some(last) = r.iter().map(|&(p, _)| p).max() {
            ready[last].push(ri);
        }
    }
    // Nonidentity elements first so a nontrivial solution is met early.
    let order: Vec<Elem> = (1..group.order()).chain([0]).collect();
    let mut images = vec![0; n];
    let mut nodes = 0usize;

    fn rec(
        depth: usize,
        images: &mut Vec<Elem>,
        order: &[Elem],
        ready: &[Vec<usize>],
        local: &[Vec<(usize, bool)>],
        group: &FiniteGroup,
        nodes: &mut usize,
        budget: usize,
    ) -> Result<bool, ()> {
        if depth == images.len() {
            return Ok(images.iter().any(|&g| g != 0));
        }
        for &g in order {
            *nodes += 1;
            if *nodes > budget {
                return Err(());
            }
            images[depth] = g;
            let ok = ready[depth].iter().all(|&ri| {
                local[ri].iter().fold(0, |acc, &(p, inv)| {
                    let x = images[p];
                    group.mul(acc, if inv { group.inv(x) } else { x })
                }) == 0
            });
            if ok && rec(depth + 1, images, order, ready, local, group, nodes, budget)? {
                return Ok(true);
            }
        }
        images[depth] = 0;
        Ok(false)
    }

    match rec(0, &mut images, &order, &ready, &local, group, &mut nodes, budget) {
        Ok(true) => Ok(Some(images)),
        Ok(false) => Ok(None),
        Err(()) => Err(()),
    }
}

/// Searches each target in turn for a homomorphism with nontrivial image,
/// working on a Tietze-simplified presentation and extending back to the
/// original generators.
pub fn pi1_nontrivial_certificate(generator_count: usize, relators: &[Word], targets: &[Target]) -> SearchOutcome {
    let simplified = simplify(generator_count, relators, DEFAULT_TIETZE_BUDGET);
    let mut exhausted = Vec::new();
    let mut budget_hit = Vec::new();
    for t in targets {
        match search_target(&simplified.generators, &simplified.relators, &t.group, DEFAULT_NODE_BUDGET) {
            Ok(Some(surviving)) => {
                let group = &t.group;
                let images = simplified.back_substitute(generator_count, &surviving, 0, |imgs, w| evaluate(group, imgs, w));
                let certificate = HomCertificate {
                    target: t.name.clone(),
                    target_order: group.order(),
                    target_table: group.table().to_vec(),
                    image_names: images.iter().map(|&g| group.name(g)).collect(),
                    images,
                };
                debug_assert!(certificate.verify(generator_count, relators));
                return SearchOutcome::Found(certificate);
            }
            Ok(None) => exhausted.push(t.name.clone()),
            Err(()) => budget_hit.push(t.name.clone()),
        }
    }
    SearchOutcome::NotFound { exhausted, budget_hit }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn targets_are_ordered_with_a5_before_s5() {
        let t = default_targets();
        assert!(t.windows(2).all(|w| w[0].group.order() <= w[1].group.order()));
        let a5 = t.iter().position(|x| x.name == "A5").unwrap();
        let s5 = t.iter().position(|x| x.name == "S5").unwrap();
        assert!(a5 < s5);
    }

    #[test]
    fn trivial_presentation_has_no_certificate() {
        assert!(matches!(pi1_nontrivial_certificate(0, &[], &default_targets()), SearchOutcome::NotFound { .. }));
        // ⟨a | a⟩.
        assert!(matches!(pi1_nontrivial_certificate(1, &[vec![1]], &default_targets()), SearchOutcome::NotFound { .. }));
    }

    #[test]
    fn infinite_cyclic_maps_onto_z2() {
        match pi1_nontrivial_certificate(1, &[], &default_targets()) {
            SearchOutcome::Found(c) => {
                assert_eq!(c.target, "Z/2");
                assert!(c.verify(1, &[]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn perfect_group_needs_a5() {
        // ⟨a, b | a³ = (ab)², b⁵ = (ab)²⟩, written as a a a b⁻¹ a⁻¹ b⁻¹ a⁻¹ and
        // b b b b a⁻¹ b⁻¹ a⁻¹ after cancelling.
        let rels = vec![vec![1, 1, 1, -2, -1, -2, -1], vec![2, 2, 2, 2, -1, -2, -1]];
        match pi1_nontrivial_certificate(2, &rels, &default_targets()) {
            SearchOutcome::Found(c) => {
                assert_eq!(c.target, "A5");
                assert!(c.verify(2, &rels));
            }
            other => panic!("{other:?}"),
        }
    }
}
