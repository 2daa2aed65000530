//! Horn-filling checks below the dimension bound.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::SimplicialSet;

/// A horn `Λ^missing[n] → X` with no filler: `faces[j]` is the prescribed
/// `d_j` for `j ≠ missing` (the missing slot holds `usize::MAX`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnfilledHorn {
    pub n: usize,
    pub missing: usize,
    pub faces: Vec<usize>,
}

/// First unfillable horn `Λ^i[n]` with `1 ≤ n ≤ max_n`, if any. Horns are
/// enumerated by backtracking over compatible face tuples.
pub fn unfilled_horn(set: &SimplicialSet, max_n: usize) -> Option<UnfilledHorn> {
    let max_n = max_n.min(set.dim());
    for n in 1..=max_n {
        for missing in 0..=n {
            if let Some(h) = unfilled_horn_at(set, n, missing) {
                return Some(h);
            }
        }
    }
    None
}

pub fn unfilled_horn_at(set: &SimplicialSet, n: usize, missing: usize) -> Option<UnfilledHorn> {
    let fillers: HashSet<Vec<usize>> = (0..set.count(n))
        .map(|x| (0..=n).map(|j| if j == missing { usize::MAX } else { set.face(n, j, x) }).collect())
        .collect();
    let mut faces = vec![usize::MAX; n + 1];
    search(set, n, missing, 0, &mut faces, &fillers)
}

fn search(
    set: &SimplicialSet,
    n: usize,
    missing: usize,
    slot: usize,
    faces: &mut Vec<usize>,
    fillers: &HashSet<Vec<usize>>,
) -> Option<UnfilledHorn> {
    if slot > n {
        return (!fillers.contains(faces)).then(|| UnfilledHorn { n, missing, faces: faces.clone() });
    }
    if slot == missing {
        return search(set, n, missing, slot + 1, faces, fillers);
    }
    for y in 0..set.count(n - 1) {
        // d_j y_slot = d_{slot-1} y_j for every earlier j ≠ missing.
        let compatible = n < 2
            || (0..slot)
                .filter(|&j| j != missing)
                .all(|j| set.face(n - 1, j, y) == set.face(n - 1, slot - 1, faces[j]));
        if compatible {
            faces[slot] = y;
            if let Some(h) = search(set, n, missing, slot + 1, faces, fillers) {
                return Some(h);
            }
        }
    }
    faces[slot] = usize::MAX;
    None
}
