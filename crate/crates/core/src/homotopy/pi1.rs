//! Edge-path presentations of fundamental groups and Tietze simplification.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sset::SimplicialSet;

/// Letters are `±(g + 1)` for generator `g`.
pub type Word = Vec<i32>;

pub fn letter(generator: usize, inverse: bool) -> i32 {
    let l = generator as i32 + 1;
    if inverse {
        -l
    } else {
        l
    }
}

pub fn generator_of(letter: i32) -> usize {
    letter.unsigned_abs() as usize - 1
}

pub fn invert(word: &[i32]) -> Word {
    word.iter().rev().map(|&l| -l).collect()
}

pub fn free_reduce(word: &[i32]) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for &l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub fn cyclic_reduce(word: &[i32]) -> Word {
    let mut w = free_reduce(word);
    while w.len() >= 2 && w[0] == -w[w.len() - 1] {
        w.pop();
        w.remove(0);
    }
    w
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Presentation {
    pub basepoint: usize,
    /// Edge (level-1 id) of each generator.
    pub generators: Vec<usize>,
    pub tree_edges: Vec<usize>,
    pub relators: Vec<Word>,
}

impl Pi1Presentation {
    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }
}

/// Presentation of `π₁(A, basepoint)`; `A` must be connected.
pub fn pi1_presentation(set: &SimplicialSet, basepoint: usize) -> Result<Pi1Presentation> {
    let roots = set.component_roots();
    if roots.len() > 1 {
        return Err(Error::Disconnected(roots));
    }
    component_presentation(set, basepoint)
}

/// Presentation of the fundamental group of the component of `basepoint`.
pub fn component_presentation(set: &SimplicialSet, basepoint: usize) -> Result<Pi1Presentation> {
    if set.dim() < 2 {
        return Err(Error::TruncationInsufficient { degree: 1, needed: 2, dim: set.dim() });
    }
    if basepoint >= set.count(0) {
        return Err(Error::ShapeMismatch(format!("basepoint {basepoint} is not a vertex")));
    }
    let edges = set.nondegenerate(1);
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); set.count(0)];
    for &e in &edges {
        incident[set.face(1, 1, e)].push(e);
        incident[set.face(1, 0, e)].push(e);
    }
    let mut reached = vec![false; set.count(0)];
    let mut in_tree = vec![false; set.count(1)];
    let mut tree_edges = Vec::new();
    reached[basepoint] = true;
    let mut queue = VecDeque::from([basepoint]);
    while let Some(v) = queue.pop_front() {
        for &e in &incident[v] {
            for w in [set.face(1, 0, e), set.face(1, 1, e)] {
                if !reached[w] {
                    reached[w] = true;
                    in_tree[e] = true;
                    tree_edges.push(e);
                    queue.push_back(w);
                }
            }
        }
    }
    let mut generator_of_edge = vec![usize::MAX; set.count(1)];
    let mut generators = Vec::new();
    for &e in &edges {
        if reached[set.face(1, 1, e)] && !in_tree[e] {
            generator_of_edge[e] = generators.len();
            generators.push(e);
        }
    }
    let edge_letter = |e: usize, inverse: bool| -> Option<i32> {
        let g = generator_of_edge[e];
        (g != usize::MAX).then(|| letter(g, inverse))
    };
    let mut relators = Vec::new();
    for t in set.nondegenerate(2) {
        if !reached[set.vertex(2, t, 0)] {
            continue;
        }
        let word: Word = [
            edge_letter(set.face(2, 2, t), false),
            edge_letter(set.face(2, 0, t), false),
            edge_letter(set.face(2, 1, t), true),
        ]
        .into_iter()
        .flatten()
        .collect();
        relators.push(word);
    }
    tree_edges.sort_unstable();
    Ok(Pi1Presentation { basepoint, generators, tree_edges, relators })
}

/// `generator = word`, with the word in generators still present at the time
/// of elimination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Elimination {
    pub generator: usize,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Simplified {
    pub generators: Vec<usize>,
    pub relators: Vec<Word>,
    pub eliminations: Vec<Elimination>,
    pub moves: usize,
    pub budget_exhausted: bool,
}

impl Simplified {
    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// Extends images of the surviving generators to all original ones.
    pub fn back_substitute<T: Clone>(
        &self,
        total: usize,
        surviving: &[T],
        identity: T,
        eval: impl Fn(&[T], &[i32]) -> T,
    ) -> Vec<T> {
        let mut images = vec![identity; total];
        for (g, img) in self.generators.iter().zip(surviving) {
            images[*g] = img.clone();
        }
        for el in self.eliminations.iter().rev() {
            images[el.generator] = eval(&images, &el.word);
        }
        images
    }
}

pub const DEFAULT_TIETZE_BUDGET: usize = 10_000;
const MAX_TOTAL_LENGTH: usize = 200_000;

fn substitute(word: &[i32], generator: usize, replacement: &[i32]) -> Word {
    let inverse = invert(replacement);
    let mut out = Vec::with_capacity(word.len());
    for &l in word {
        if generator_of(l) == generator {
            out.extend_from_slice(if l > 0 { replacement } else { &inverse });
        } else {
            out.push(l);
        }
    }
    cyclic_reduce(&out)
}

/// Deterministic Tietze simplification: kill generators that equal a
/// relator of length one, and eliminate generators occurring exactly once in
/// some relator (shortest relator first, then lowest generator).
pub fn simplify(generator_count: usize, relators: &[Word], budget: usize) -> Simplified {
    let mut alive = vec![true; generator_count];
    let mut rels: Vec<Word> = relators.iter().map(|r| cyclic_reduce(r)).filter(|r| !r.is_empty()).collect();
    let mut eliminations = Vec::new();
    let mut moves = 0;
    let mut budget_exhausted = false;
    loop {
        rels.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        rels.dedup();
        let mut chosen: Option<(usize, usize)> = None;
        'search: for (ri, r) in rels.iter().enumerate() {
            let mut counts: Vec<(usize, usize)> = Vec::new();
            for &l in r {
                let g = generator_of(l);
                match counts.iter_mut().find(|(h, _)| *h == g) {
                    Some(c) => c.1 += 1,
                    None => counts.push((g, 1)),
                }
            }
            counts.sort_unstable();
            if let Some(&(g, _)) = counts.iter().find(|(_, c)| *c == 1) {
                chosen = Some((ri, g));
                break 'search;
            }
        }
        let Some((ri, g)) = chosen else { break };
        if moves >= budget {
            budget_exhausted = true;
            break;
        }
        let r = rels.remove(ri);
        let pos = r.iter().position(|&l| generator_of(l) == g).expect("chosen generator occurs");
        // Rotate so the letter is first: g^ε · w = 1.
        let rotated: Word = r[pos..].iter().chain(&r[..pos]).copied().collect();
        let w = &rotated[1..];
        let word = if rotated[0] > 0 { invert(w) } else { w.to_vec() };
        let next: Vec<Word> = rels.iter().map(|x| substitute(x, g, &word)).filter(|x| !x.is_empty()).collect();
        if next.iter().map(Vec::len).sum::<usize>() > MAX_TOTAL_LENGTH {
            rels.push(r);
            budget_exhausted = true;
            break;
        }
        rels = next;
        alive[g] = false;
        eliminations.push(Elimination { generator: g, word });
        moves += 1;
    }
    let generators = (0..generator_count).filter(|&g| alive[g]).collect();
    Simplified { generators, relators: rels, eliminations, moves, budget_exhausted }
}

pub fn simplify_presentation(p: &Pi1Presentation, budget: usize) -> Simplified {
    simplify(p.generator_count(), &p.relators, budget)
}
