//! Seeded random G-simplicial sets and equivariant maps for property runs.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::{enumerate_subgroups, FiniteGroup};
use crate::gsset::{fold, GMap, GSimplicialSet};
use crate::sset::{ordered_complex, SimplicialSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random subcomplex of the full simplex on up to four vertices, given by
/// random maximal faces of dimension at most 2.
pub fn random_complex<R: Rng>(rng: &mut R, dim: usize) -> SimplicialSet {
    let vertices = rng.gen_range(1..=4u32);
    let mut maximal: Vec<Vec<u32>> = Vec::new();
    for _ in 0..rng.gen_range(1..=3) {
        let size = rng.gen_range(1..=3.min(vertices as usize));
        let mut all: Vec<u32> = (0..vertices).collect();
        all.shuffle(rng);
        let mut face: Vec<u32> = all[..size].to_vec();
        face.sort_unstable();
        maximal.push(face);
    }
    // Every vertex is kept so the vertex count is exactly `vertices`.
    ordered_complex(vertices, dim, |s| s.len() == 1 || maximal.iter().any(|m| s.iter().all(|v| m.contains(v)))).set
}

/// Disjoint union of one or two pieces `G/H × K`, followed by up to two
/// random equivariant vertex identifications.
pub fn random_gset<R: Rng>(rng: &mut R, group: &Arc<FiniteGroup>, dim: usize) -> GSimplicialSet {
    let subgroups = enumerate_subgroups(group);
    let piece = |rng: &mut R| {
        let h = subgroups.choose(rng).expect("at least the trivial subgroup");
        GSimplicialSet::homogeneous(group.clone(), h, dim).times(&random_complex(rng, dim))
    };
    let mut a = piece(rng);
    if rng.gen_bool(0.5) {
        a = a.coproduct(&piece(rng)).expect("same group");
    }
    let identifications = rng.gen_range(0..=2);
    let vertices = a.underlying().count(0);
    let pairs: Vec<(usize, usize, usize)> =
        (0..identifications).map(|_| (0, rng.gen_range(0..vertices), rng.gen_range(0..vertices))).collect();
    if pairs.is_empty() {
        a
    } else {
        a.equivariant_quotient(&pairs).0
    }
}

pub fn random_gset_seeded(seed: u64, group: &Arc<FiniteGroup>, dim: usize) -> GSimplicialSet {
    random_gset(&mut rng(seed), group, dim)
}

/// A random equivariant map: identity, quotient projection, inclusion of an
/// invariant subcomplex, fold, collapse to a point, or an inclusion followed
/// by a projection.
pub fn random_map<R: Rng>(rng: &mut R, group: &Arc<FiniteGroup>, dim: usize) -> GMap {
    let a = random_gset(rng, group, dim);
    let random_simplex = |rng: &mut R, set: &GSimplicialSet| {
        let k = rng.gen_range(0..=dim.min(2));
        let n = set.underlying().count(k);
        (k, rng.gen_range(0..n))
    };
    let projection = |rng: &mut R, set: &GSimplicialSet| {
        let count = rng.gen_range(1..=2);
        let vertices = set.underlying().count(0);
        let pairs: Vec<(usize, usize, usize)> =
            (0..count).map(|_| (0, rng.gen_range(0..vertices), rng.gen_range(0..vertices))).collect();
        set.equivariant_quotient(&pairs).1
    };
    match rng.gen_range(0..6) {
        0 => GMap::identity(&a),
        1 => projection(rng, &a),
        2 => {
            let seeds: Vec<_> = (0..rng.gen_range(1..=2)).map(|_| random_simplex(rng, &a)).collect();
            a.generated_subcomplex(&seeds).1
        }
        3 => fold(&a),
        4 => GMap::to_point(&a),
        _ => {
            let seeds: Vec<_> = (0..rng.gen_range(1..=2)).map(|_| random_simplex(rng, &a)).collect();
            let inclusion = a.generated_subcomplex(&seeds).1;
            let p = projection(rng, &a);
            inclusion.then(&p).expect("composable")
        }
    }
}

pub fn random_map_seeded(seed: u64, group: &Arc<FiniteGroup>, dim: usize) -> GMap {
    random_map(&mut rng(seed), group, dim)
}

/// The groups used by the property runs: Z/2, Z/3 and S3.
pub fn corpus_groups() -> Vec<(&'static str, Arc<FiniteGroup>)> {
    vec![
        ("Z/2", Arc::new(FiniteGroup::cyclic(2))),
        ("Z/3", Arc::new(FiniteGroup::cyclic(3))),
        ("S3", Arc::new(FiniteGroup::symmetric(3))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gsset::validate_action;

    #[test]
    fn corpus_is_deterministic_and_valid() {
        for (_, g) in corpus_groups() {
            for seed in 0..10 {
                let a = random_gset_seeded(seed, &g, 3);
                assert_eq!(a, random_gset_seeded(seed, &g, 3));
                assert!(validate_action(&g, a.underlying(), a.action_tables()).is_ok());
                assert!(a.underlying().check_identities().is_ok());
            }
        }
    }

    #[test]
    fn maps_include_injective_and_non_injective_cases() {
        let g = Arc::new(FiniteGroup::cyclic(2));
        let injective = (0..60).filter(|&s| random_map_seeded(s, &g, 2).is_levelwise_injective()).count();
        assert!(injective > 5 && injective < 55, "{injective}");
    }
}
