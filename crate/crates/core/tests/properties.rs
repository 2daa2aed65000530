use proptest::prelude::*;
use rand::seq::SliceRandom;

use orbit_model::corpus::{corpus_groups, random_complex, random_gset_seeded, random_map_seeded, rng};
use orbit_model::group::{enumerate_subgroups, SubgroupFamily};
use orbit_model::gsset::{fixed_map, fixed_points, is_orbit_cofibration, orbit_map, orbit_space, GHomotopy, GMap};
use orbit_model::homology::homology;
use orbit_model::homotopy::{default_targets, reverify, weq_verdict, weq_verdict_with_targets, Status};
use orbit_model::io::{GSetDoc, MapDoc};

fn group(index: usize) -> std::sync::Arc<orbit_model::group::FiniteGroup> {
    corpus_groups()[index % 3].1.clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn homology_ignores_simplex_labels(seed in any::<u64>()) {
        let mut r = rng(seed);
        let set = random_complex(&mut r, 3);
        let perm: Vec<Vec<usize>> = (0..=3)
            .map(|k| {
                let mut p: Vec<usize> = (0..set.count(k)).collect();
                p.shuffle(&mut r);
                p
            })
            .collect();
        let (relabeled, iso) = set.relabel(&perm).unwrap();
        prop_assert!(iso.is_isomorphism());
        for k in 0..3 {
            prop_assert_eq!(homology(&set, k).unwrap(), homology(&relabeled, k).unwrap());
        }
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), g in 0usize..3) {
        let f = random_map_seeded(seed, &group(g), 2);
        let a = f.source().clone();
        let doc = GSetDoc::from_gset(&a);
        let text = serde_json::to_string(&doc).unwrap();
        prop_assert_eq!(serde_json::from_str::<GSetDoc>(&text).unwrap().build().unwrap(), a);
        let map_text = serde_json::to_string(&MapDoc::from_map(&f)).unwrap();
        prop_assert_eq!(serde_json::from_str::<MapDoc>(&map_text).unwrap().build().unwrap(), f);
    }

    #[test]
    fn orbits_shrink_and_fixed_points_grow_down_the_lattice(seed in any::<u64>(), g in 0usize..3) {
        let g = group(g);
        let a = random_gset_seeded(seed, &g, 2);
        let subgroups = enumerate_subgroups(&g);
        for h in &subgroups {
            for k in subgroups.iter().filter(|k| k.is_subgroup_of(h)) {
                for level in 0..=2 {
                    prop_assert!(orbit_space(&a, h).0.count(level) <= orbit_space(&a, k).0.count(level));
                    prop_assert!(fixed_points(&a, h).0.count(level) <= fixed_points(&a, k).0.count(level));
                }
            }
        }
        let e = &subgroups[0];
        prop_assert!(e.is_trivial());
        prop_assert_eq!(&orbit_space(&a, e).0, a.underlying());
        prop_assert_eq!(&fixed_points(&a, e).0, a.underlying());
    }

    #[test]
    fn verdicts_reverify(seed in any::<u64>(), g in 0usize..3) {
        let g = group(g);
        let f = random_map_seeded(seed, &g, 3);
        for h in enumerate_subgroups(&g) {
            for m in [orbit_map(&f, &h), fixed_map(&f, &h)] {
                let v = weq_verdict(&m, 2).unwrap();
                if v.status != Status::Inconclusive {
                    prop_assert!(reverify(&m, &v).unwrap(), "{:?}", v);
                }
            }
        }
    }

    #[test]
    fn more_targets_never_lose_a_certificate(seed in any::<u64>(), g in 0usize..3) {
        let g = group(g);
        let f = random_map_seeded(seed, &g, 3);
        let all = default_targets();
        let few: Vec<_> = all.iter().take(3).cloned().collect();
        for h in enumerate_subgroups(&g) {
            let m = fixed_map(&f, &h);
            let small = weq_verdict_with_targets(&m, 2, &few).unwrap();
            let large = weq_verdict_with_targets(&m, 2, &all).unwrap();
            if small.status != Status::Inconclusive {
                prop_assert_eq!(small.status, large.status);
            }
        }
    }

    #[test]
    fn composing_with_identity_keeps_cofibration_status(seed in any::<u64>(), g in 0usize..3) {
        let g = group(g);
        let family = SubgroupFamily::all(&g);
        let f = random_map_seeded(seed, &g, 2);
        let id = GMap::identity(f.target());
        let composite = f.then(&id).unwrap();
        prop_assert_eq!(
            is_orbit_cofibration(&composite, &family).is_cofibration,
            is_orbit_cofibration(&f, &family).is_cofibration
        );
        let constant = GHomotopy::constant(&f);
        prop_assert_eq!(&constant.start, &f);
        prop_assert_eq!(&constant.end, &f);
    }
}
