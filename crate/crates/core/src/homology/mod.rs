//! Normalized chains, integral homology and induced maps on homology.

pub mod snf;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sset::{SimplicialMap, SimplicialSet};
pub use snf::{smith_normal_form, IntMatrix, Snf, Track};

/// Finitely generated abelian group `Z^betti ⊕ Z/t_1 ⊕ … ⊕ Z/t_r` with
/// `t_1 | t_2 | … | t_r` and every `t_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<i128>,
}

impl HomologyGroup {
    pub fn zero() -> Self {
        Self { betti: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        Self { betti: rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Normalized chain complex: basis of `C_k` is the nondegenerate level-k
/// simplices in ascending id order.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub basis: Vec<Vec<usize>>,
    /// `boundaries[k]` is the matrix of `∂_k: C_k → C_{k-1}` (rows index
    /// `C_{k-1}`); `boundaries[0]` is the zero map to the zero group.
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn rank(&self, k: usize) -> usize {
        self.basis[k].len()
    }

    pub fn position(&self, k: usize, simplex: usize) -> Option<usize> {
        self.basis[k].binary_search(&simplex).ok()
    }
}

pub fn normalized_chains(set: &SimplicialSet) -> ChainComplex {
    let basis: Vec<Vec<usize>> = (0..=set.dim()).map(|k| set.nondegenerate(k)).collect();
    let mut boundaries = vec![IntMatrix::zeros(0, basis[0].len())];
    for k in 1..=set.dim() {
        let mut m = IntMatrix::zeros(basis[k - 1].len(), basis[k].len());
        for (col, &x) in basis[k].iter().enumerate() {
            for i in 0..=k {
                let y = set.face(k, i, x);
                if let Ok(row) = basis[k - 1].binary_search(&y) {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    m.set(row, col, m.get(row, col) + sign);
                }
            }
        }
        boundaries.push(m);
    }
    ChainComplex { basis, boundaries }
}

fn check_degree(set: &SimplicialSet, k: usize) -> Result<()> {
    if k >= set.dim() {
        return Err(Error::TruncationInsufficient { degree: k, needed: k + 1, dim: set.dim() });
    }
    Ok(())
}

pub fn homology(set: &SimplicialSet, k: usize) -> Result<HomologyGroup> {
    check_degree(set, k)?;
    let chains = normalized_chains(set);
    homology_of_complex(&chains, k)
}

/// All homology groups in degrees `0..=up_to`.
pub fn homology_through(set: &SimplicialSet, up_to: usize) -> Result<Vec<HomologyGroup>> {
    check_degree(set, up_to)?;
    let chains = normalized_chains(set);
    (0..=up_to).map(|k| homology_of_complex(&chains, k)).collect()
}

fn homology_of_complex(chains: &ChainComplex, k: usize) -> Result<HomologyGroup> {
    let rank_out = if k == 0 { 0 } else { smith_normal_form(&chains.boundaries[k], Track::default())?.rank };
    let incoming = smith_normal_form(&chains.boundaries[k + 1], Track::default())?;
    let betti = chains.rank(k) - rank_out - incoming.rank;
    let torsion = incoming.invariants.into_iter().filter(|&d| d > 1).collect();
    Ok(HomologyGroup { betti, torsion })
}

/// `H_k` presented as `Z^z / im(R)` over a basis of the cycle group `Z_k`,
/// diagonalized so that generator `i` has order `orders[i]` (0 for free).
#[derive(Clone, Debug)]
pub struct HomologyPresentation {
    pub group: HomologyGroup,
    chains_rank: usize,
    /// Rank of `∂_k`; cycle coordinates are entries `rank_out..` of `V⁻¹ c`.
    rank_out: usize,
    v_inv: IntMatrix,
    /// Representative cycles, one per generator of order ≠ 1.
    representatives: Vec<Vec<i128>>,
    /// For each kept generator: its row in `U'` and its order.
    coordinate_rows: Vec<Vec<i128>>,
    orders: Vec<i128>,
}

impl HomologyPresentation {
    pub fn new(chains: &ChainComplex, k: usize) -> Result<Self> {
        let n = chains.rank(k);
        let (rank_out, v, v_inv) = if k == 0 {
            (0, IntMatrix::identity(n), IntMatrix::identity(n))
        } else {
            let s = smith_normal_form(&chains.boundaries[k], Track { left: false, right: true })?;
            (s.rank, s.v.expect("tracked"), s.v_inv.expect("tracked"))
        };
        let z = n - rank_out;
        // Cycle basis: columns rank_out.. of V.
        let incoming = &chains.boundaries[k + 1];
        let mut relations = IntMatrix::zeros(z, incoming.cols());
        for c in 0..incoming.cols() {
            let coords = v_inv.mul_vec(&incoming.column(c))?;
            for i in 0..z {
                relations.set(i, c, coords[rank_out + i]);
            }
        }
        let s = smith_normal_form(&relations, Track { left: true, right: false })?;
        let (u, u_inv) = (s.u.expect("tracked"), s.u_inv.expect("tracked"));
        let mut orders_all: Vec<i128> = s.invariants.clone();
        orders_all.resize(z, 0);
        let mut representatives = Vec::new();
        let mut coordinate_rows = Vec::new();
        let mut orders = Vec::new();
        for (i, &order) in orders_all.iter().enumerate() {
            if order == 1 {
                continue;
            }
            // Generator i corresponds to column i of U⁻¹ in cycle coordinates.
            let cycle_coords: Vec<i128> = (0..z).map(|r| u_inv.get(r, i)).collect();
            let mut chain = vec![0i128; n];
            for (j, &a) in cycle_coords.iter().enumerate() {
                if a != 0 {
                    for (row, slot) in chain.iter_mut().enumerate() {
                        let b = v.get(row, rank_out + j);
                        if b != 0 {
                            *slot = slot.checked_add(a.checked_mul(b).ok_or(Error::Overflow)?).ok_or(Error::Overflow)?;
                        }
                    }
                }
            }
            representatives.push(chain);
            coordinate_rows.push((0..z).map(|c| u.get(i, c)).collect());
            orders.push(order);
        }
        let betti = orders.iter().filter(|&&o| o == 0).count();
        let torsion = orders.iter().copied().filter(|&o| o > 1).collect();
        Ok(Self {
            group: HomologyGroup { betti, torsion },
            chains_rank: n,
            rank_out,
            v_inv,
            representatives,
            coordinate_rows,
            orders,
        })
    }

    pub fn generator_count(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[i128] {
        &self.orders
    }

    pub fn representatives(&self) -> &[Vec<i128>] {
        &self.representatives
    }

    /// Coordinates of a cycle in the diagonal generators, reduced modulo
    /// each generator's order.
    pub fn coordinates(&self, cycle: &[i128]) -> Result<Vec<i128>> {
        assert_eq!(cycle.len(), self.chains_rank);
        let all = self.v_inv.mul_vec(cycle)?;
        if all[..self.rank_out].iter().any(|&x| x != 0) {
            return Err(Error::Internal("chain passed as a cycle has nonzero boundary".into()));
        }
        let z = &all[self.rank_out..];
        self.coordinate_rows
            .iter()
            .zip(&self.orders)
            .map(|(row, &order)| {
                let v = row.iter().zip(z).try_fold(0i128, |acc, (&a, &b)| {
                    acc.checked_add(a.checked_mul(b).ok_or(Error::Overflow)?).ok_or(Error::Overflow)
                })?;
                Ok(if order == 0 { v } else { v.rem_euclid(order) })
            })
            .collect()
    }
}

/// Matrix of the chain map induced by `f` on normalized chains in degree `k`.
pub fn chain_map(f: &SimplicialMap, source: &ChainComplex, target: &ChainComplex, k: usize) -> IntMatrix {
    let mut m = IntMatrix::zeros(target.rank(k), source.rank(k));
    for (col, &x) in source.basis[k].iter().enumerate() {
        if let Some(row) = target.position(k, f.apply(k, x)) {
            m.set(row, col, 1);
        }
    }
    m
}

/// `f_*: H_k(A) → H_k(B)` in the diagonal generators of both presentations.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub degree: usize,
    pub source: HomologyGroup,
    pub target: HomologyGroup,
    pub source_orders: Vec<i128>,
    pub target_orders: Vec<i128>,
    /// `matrix[j][i]` is the coefficient of target generator `j` in the image
    /// of source generator `i`.
    pub matrix: Vec<Vec<i128>>,
}

impl InducedMap {
    /// The cokernel `Z^b / (im M + diag(orders))`.
    pub fn cokernel(&self) -> Result<HomologyGroup> {
        let b = self.target_orders.len();
        let mut m = IntMatrix::zeros(b, self.source_orders.len() + b);
        for j in 0..b {
            for i in 0..self.source_orders.len() {
                m.set(j, i, self.matrix[j][i]);
            }
            m.set(j, self.source_orders.len() + j, self.target_orders[j]);
        }
        let s = smith_normal_form(&m, Track::default())?;
        Ok(HomologyGroup {
            betti: b - s.rank,
            torsion: s.invariants.into_iter().filter(|&d| d > 1).collect(),
        })
    }

    /// A surjection between isomorphic finitely generated abelian groups is
    /// an isomorphism, so iso ⇔ equal groups and trivial cokernel.
    pub fn is_isomorphism(&self) -> Result<bool> {
        Ok(self.source == self.target && self.cokernel()?.is_zero())
    }
}

pub fn induced_homology_map(f: &SimplicialMap, k: usize) -> Result<InducedMap> {
    check_degree(f.source(), k)?;
    let cs = normalized_chains(f.source());
    let ct = normalized_chains(f.target());
    induced_on_complexes(f, &cs, &ct, k)
}

fn induced_on_complexes(f: &SimplicialMap, cs: &ChainComplex, ct: &ChainComplex, k: usize) -> Result<InducedMap> {
    let ps = HomologyPresentation::new(cs, k)?;
    let pt = HomologyPresentation::new(ct, k)?;
    let fk = chain_map(f, cs, ct, k);
    let mut matrix = vec![vec![0i128; ps.generator_count()]; pt.generator_count()];
    for (i, rep) in ps.representatives().iter().enumerate() {
        let image = fk.mul_vec(rep)?;
        for (j, c) in pt.coordinates(&image)?.into_iter().enumerate() {
            matrix[j][i] = c;
        }
    }
    Ok(InducedMap {
        degree: k,
        source: ps.group.clone(),
        target: pt.group.clone(),
        source_orders: ps.orders().to_vec(),
        target_orders: pt.orders().to_vec(),
        matrix,
    })
}

/// Why a map fails to be a homology isomorphism in some degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyMismatch {
    pub degree: usize,
    pub source: HomologyGroup,
    pub target: HomologyGroup,
    /// Cokernel of the induced map when the groups agree abstractly.
    pub cokernel: Option<HomologyGroup>,
}

/// First degree `≤ up_to` where `f_*` is not an isomorphism.
pub fn homology_iso_failure(f: &SimplicialMap, up_to: usize) -> Result<Option<HomologyMismatch>> {
    check_degree(f.source(), up_to)?;
    let cs = normalized_chains(f.source());
    let ct = normalized_chains(f.target());
    for k in 0..=up_to {
        let hs = homology_of_complex(&cs, k)?;
        let ht = homology_of_complex(&ct, k)?;
        if hs != ht {
            return Ok(Some(HomologyMismatch { degree: k, source: hs, target: ht, cokernel: None }));
        }
        if hs.is_zero() {
            continue;
        }
        let induced = induced_on_complexes(f, &cs, &ct, k)?;
        let cokernel = induced.cokernel()?;
        if !cokernel.is_zero() {
            return Ok(Some(HomologyMismatch { degree: k, source: hs, target: ht, cokernel: Some(cokernel) }));
        }
    }
    Ok(None)
}

pub fn is_homology_iso(f: &SimplicialMap, up_to: usize) -> Result<bool> {
    Ok(homology_iso_failure(f, up_to)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{boundary_subcomplex, horn_subcomplex, standard_simplex, Builder};

    fn circle(dim: usize) -> SimplicialSet {
        let mut b = Builder::new();
        let v = b.vertex();
        b.simplex(vec![v.clone(), v]).unwrap();
        b.build(dim).unwrap()
    }

    /// Degree-2 self map of the circle given as the two-edge circle mapping
    /// onto the one-edge circle with both edges wrapping.
    fn double_cover_map() -> SimplicialMap {
        let mut b = Builder::new();
        let v0 = b.vertex();
        let v1 = b.vertex();
        b.simplex(vec![v1.clone(), v0.clone()]).unwrap();
        b.simplex(vec![v0, v1]).unwrap();
        let two = b.build(3).unwrap();
        let one = circle(3);
        let mut levels: Vec<Vec<usize>> = (0..=3).map(|k| vec![usize::MAX; two.count(k)]).collect();
        levels[0].fill(0);
        for &e in &two.nondegenerate(1) {
            levels[1][e] = one.nondegenerate(1)[0];
        }
        // Everything else is degenerate and follows the degeneracies.
        for k in 1..=3 {
            for y in 0..two.count(k - 1) {
                for i in 0..k {
                    levels[k][two.degen(k - 1, i, y)] = one.degen(k - 1, i, levels[k - 1][y]);
                }
            }
        }
        SimplicialMap::new(two, one, levels).unwrap()
    }

    #[test]
    fn contractible_simplices() {
        for n in 0..=5 {
            let d = standard_simplex(n, 4);
            assert_eq!(homology(&d, 0).unwrap(), HomologyGroup::free(1));
            for k in 1..4 {
                assert!(homology(&d, k).unwrap().is_zero(), "H_{k}(Δ[{n}])");
            }
        }
    }

    #[test]
    fn truncation_is_enforced() {
        let d = standard_simplex(2, 3);
        assert!(matches!(homology(&d, 3), Err(Error::TruncationInsufficient { .. })));
    }

    #[test]
    fn boundary_of_triangle() {
        let (b, _) = boundary_subcomplex(2, 3);
        assert_eq!(homology(&b, 1).unwrap(), HomologyGroup::free(1));
        let chains = normalized_chains(&b);
        let d1 = &chains.boundaries[1];
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        for c in 0..3 {
            assert_eq!(d1.column(c).iter().sum::<i128>(), 0);
        }
    }

    #[test]
    fn edge_boundary() {
        let d1 = standard_simplex(1, 2);
        let chains = normalized_chains(&d1);
        assert_eq!(chains.boundaries[1].column(0), vec![-1, 1]);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let d1 = standard_simplex(1, 4);
        for set in [standard_simplex(3, 4), d1.product(&d1), circle(4)] {
            let c = normalized_chains(&set);
            for k in 2..=4 {
                assert!(c.boundaries[k - 1].mul(&c.boundaries[k]).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn euler_characteristic_matches_betti_numbers() {
        let d1 = standard_simplex(1, 4);
        let (b, _) = boundary_subcomplex(2, 4);
        for set in [b, d1.product(&d1)] {
            let chi: i64 = (0..=3).map(|k| (set.nondegenerate(k).len() as i64) * if k % 2 == 0 { 1 } else { -1 }).sum();
            let betti: i64 = (0..=3).map(|k| homology(&set, k).unwrap().betti as i64 * if k % 2 == 0 { 1 } else { -1 }).sum();
            assert_eq!(chi, betti);
        }
    }

    #[test]
    fn identity_induces_identity() {
        let c = circle(3);
        let m = induced_homology_map(&SimplicialMap::identity(&c), 1).unwrap();
        assert_eq!(m.matrix, vec![vec![1]]);
        assert!(m.is_isomorphism().unwrap());
    }

    #[test]
    fn collapse_and_horn_inclusion() {
        let (b, _) = boundary_subcomplex(2, 3);
        assert!(!is_homology_iso(&SimplicialMap::to_point(&b), 2).unwrap());
        let (_, inc) = horn_subcomplex(2, 0, 3);
        assert!(is_homology_iso(&inc, 1).unwrap());
    }

    #[test]
    fn degree_two_map_is_not_iso() {
        let f = double_cover_map();
        let failure = homology_iso_failure(&f, 1).unwrap().expect("degree 2 is not an iso");
        assert_eq!(failure.degree, 1);
        assert_eq!(failure.cokernel, Some(HomologyGroup { betti: 0, torsion: vec![2] }));
    }
}
