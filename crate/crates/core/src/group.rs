//! Finite groups given by multiplication tables, their subgroups, families of
//! subgroups closed under conjugation and passage to subgroups, and the orbit
//! category of such a family.
//!
//! Elements are dense indices `0..order` with `0` the identity. Permutation
//! products compose left to right: `(g * h)(x) = h(g(x))`, so permutations act
//! on points from the right.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Elem = usize;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<Elem>>,
    inverses: Vec<Elem>,
    names: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order())
    }
}

impl FiniteGroup {
    /// Validates a multiplication table: identity at index 0, Latin square
    /// rows and columns, associativity on every triple.
    pub fn from_table(table: Vec<Vec<Elem>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        for (g, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!("row {g} has length {}, expected {n}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::InvalidGroup(format!("row {g} contains out-of-range element {bad}")));
            }
        }
        for g in 0..n {
            if table[0][g] != g || table[g][0] != g {
                return Err(Error::InvalidGroup(format!("element 0 does not act as identity on {g}")));
            }
        }
        for g in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for h in 0..n {
                row_seen[table[g][h]] = true;
                col_seen[table[h][g]] = true;
            }
            if row_seen.iter().any(|s| !s) || col_seen.iter().any(|s| !s) {
                return Err(Error::InvalidGroup(format!("row or column {g} is not a permutation")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!("associativity fails on ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let inverses = (0..n)
            .map(|g| table[g].iter().position(|&x| x == 0).expect("latin row contains identity"))
            .collect();
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::InvalidGroup(format!("{} names for {n} elements", names.len())));
            }
        }
        Ok(Self { table, inverses, names })
    }

    /// Closes a set of permutations of `0..degree` under composition. Element
    /// order is breadth-first from the identity, multiplying by generators on
    /// the right in the order given.
    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<Self> {
        for (i, p) in generators.iter().enumerate() {
            if p.len() != degree {
                return Err(Error::InvalidGroup(format!("generator {i} has length {}, expected {degree}", p.len())));
            }
            let mut seen = vec![false; degree];
            for &x in p {
                if x >= degree || seen[x] {
                    return Err(Error::InvalidGroup(format!("generator {i} is not a permutation")));
                }
                seen[x] = true;
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut perms = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, Elem> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(g) = queue.pop_front() {
            for s in generators {
                let prod = compose_perm(&perms[g], s);
                if !index.contains_key(&prod) {
                    index.insert(prod.clone(), perms.len());
                    queue.push_back(perms.len());
                    perms.push(prod);
                }
            }
        }
        let n = perms.len();
        let mut table = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                table[a][b] = index[&compose_perm(&perms[a], &perms[b])];
            }
        }
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        Self::from_table(table, Some(names))
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::from_table(table, None).expect("cyclic table is a group")
    }

    pub fn symmetric(n: usize) -> Self {
        if n < 2 {
            return Self::trivial();
        }
        let transposition: Vec<usize> = (0..n).map(|i| if i < 2 { 1 - i } else { i }).collect();
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::from_permutations(n, &[transposition, cycle]).expect("symmetric generators")
    }

    pub fn alternating(n: usize) -> Self {
        if n < 3 {
            return Self::trivial();
        }
        let gens: Vec<Vec<usize>> = (2..n)
            .map(|k| (0..n).map(|i| if i == 0 { 1 } else if i == 1 { k } else if i == k { 0 } else { i }).collect())
            .collect();
        Self::from_permutations(n, &gens).expect("alternating generators")
    }

    /// Dihedral group of order `2n`, acting on the vertices of an n-gon.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 3);
        let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(n, &[rotation, reflection]).expect("dihedral generators")
    }

    /// Quaternion group of order 8 in its regular permutation representation.
    pub fn quaternion() -> Self {
        // Elements 1,i,j,k,-1,-i,-j,-k; left multiplication by i and j.
        let i = vec![1, 4, 3, 6, 5, 0, 7, 2];
        let j = vec![2, 7, 4, 1, 6, 3, 0, 5];
        Self::from_permutations(8, &[i, j]).expect("quaternion generators")
    }

    /// Direct product, elements ordered lexicographically by `(a, b)`.
    pub fn direct_product(a: &Self, b: &Self) -> Self {
        let (na, nb) = (a.order(), b.order());
        let n = na * nb;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb))
                    .collect()
            })
            .collect();
        Self::from_table(table, None).expect("direct product is a group")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[Vec<Elem>] {
        &self.table
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, g: Elem) -> String {
        match &self.names {
            Some(names) => names[g].clone(),
            None => g.to_string(),
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order()
    }

    /// `g⁻¹ h g`.
    pub fn conjugate(&self, h: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), h), g)
    }

    pub fn element_order(&self, g: Elem) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Greedy generating set: walk elements in index order, keep those not in
    /// the subgroup generated so far.
    pub fn generators(&self) -> Vec<Elem> {
        Subgroup::whole(self).generators(self)
    }
}

fn compose_perm(p: &[usize], q: &[usize]) -> Vec<usize> {
    p.iter().map(|&x| q[x]).collect()
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Subgroup {
    elements: Vec<Elem>,
}

impl Subgroup {
    pub fn new(group: &FiniteGroup, mut elements: Vec<Elem>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::NotASubgroup("does not contain the identity".into()));
        }
        if let Some(&bad) = elements.iter().find(|&&g| g >= group.order()) {
            return Err(Error::NotASubgroup(format!("element {bad} out of range")));
        }
        let set: BTreeSet<Elem> = elements.iter().copied().collect();
        for &a in &elements {
            if !set.contains(&group.inv(a)) {
                return Err(Error::NotASubgroup(format!("not closed under inverse of {a}")));
            }
            for &b in &elements {
                if !set.contains(&group.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!("not closed under product of {a} and {b}")));
                }
            }
        }
        Ok(Self { elements })
    }

    pub fn trivial() -> Self {
        Self { elements: vec![0] }
    }

    pub fn whole(group: &FiniteGroup) -> Self {
        Self { elements: group.elements().collect() }
    }

    pub fn generated(group: &FiniteGroup, gens: &[Elem]) -> Result<Self> {
        if let Some(&bad) = gens.iter().find(|&&g| g >= group.order()) {
            return Err(Error::NotASubgroup(format!("generator {bad} out of range")));
        }
        let mut seen = vec![false; group.order()];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = group.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        Ok(Self { elements: (0..group.order()).filter(|&g| seen[g]).collect() })
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    pub fn generators(&self, group: &FiniteGroup) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = Subgroup::trivial();
        for &g in &self.elements {
            if !span.contains(g) {
                gens.push(g);
                span = Subgroup::generated(group, &gens).expect("elements in range");
            }
        }
        gens
    }

    /// `H^g = g⁻¹ H g`.
    pub fn conjugate(&self, group: &FiniteGroup, g: Elem) -> Subgroup {
        let mut elements: Vec<Elem> = self.elements.iter().map(|&h| group.conjugate(h, g)).collect();
        elements.sort_unstable();
        Subgroup { elements }
    }

    pub fn label(&self, group: &FiniteGroup) -> String {
        if self.is_trivial() {
            return "{e}".into();
        }
        if self.order() == group.order() {
            return "G".into();
        }
        let gens: Vec<String> = self.generators(group).iter().map(|&g| group.name(g)).collect();
        format!("<{}>", gens.join(", "))
    }
}

/// All subgroups, sorted by `(order, elements)`. Every subgroup is the join
/// of the cyclic subgroups it contains, so joins of cyclic subgroups are
/// closed under pairwise joins until nothing new appears.
pub fn enumerate_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut found: BTreeSet<Subgroup> = BTreeSet::new();
    for g in group.elements() {
        found.insert(Subgroup::generated(group, &[g]).expect("in range"));
    }
    let cyclic: Vec<Subgroup> = found.iter().cloned().collect();
    let mut frontier: Vec<Subgroup> = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for c in &cyclic {
                if c.is_subgroup_of(h) {
                    continue;
                }
                let mut gens = h.generators(group);
                gens.extend(c.generators(group));
                let joined = Subgroup::generated(group, &gens).expect("in range");
                if found.insert(joined.clone()) {
                    next.push(joined);
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<Subgroup> = found.into_iter().collect();
    all.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    all
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coset {
    pub rep: Elem,
    pub elements: Vec<Elem>,
}

/// Left cosets `gH`, each represented by its least element, sorted by that
/// representative.
pub fn left_cosets(group: &FiniteGroup, h: &Subgroup) -> Vec<Coset> {
    let mut seen = vec![false; group.order()];
    let mut cosets = Vec::new();
    for g in group.elements() {
        if seen[g] {
            continue;
        }
        let mut elements: Vec<Elem> = h.elements().iter().map(|&x| group.mul(g, x)).collect();
        elements.sort_unstable();
        for &x in &elements {
            seen[x] = true;
        }
        cosets.push(Coset { rep: elements[0], elements });
    }
    cosets
}

/// Least element of the left coset `gH`.
pub fn coset_rep(group: &FiniteGroup, h: &Subgroup, g: Elem) -> Elem {
    h.elements().iter().map(|&x| group.mul(g, x)).min().expect("subgroups are nonempty")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubgroupFamily {
    members: Vec<Subgroup>,
}

impl SubgroupFamily {
    /// Smallest family containing `seed` that is closed under conjugation and
    /// under passing to subgroups.
    pub fn close(group: &FiniteGroup, seed: &[Subgroup]) -> Result<Self> {
        for h in seed {
            Subgroup::new(group, h.elements().to_vec())?;
        }
        let conjugates: BTreeSet<Subgroup> = seed
            .iter()
            .flat_map(|h| group.elements().map(move |g| h.conjugate(group, g)))
            .collect();
        let members = enumerate_subgroups(group)
            .into_iter()
            .filter(|k| conjugates.iter().any(|h| k.is_subgroup_of(h)))
            .collect();
        Ok(Self { members })
    }

    pub fn all(group: &FiniteGroup) -> Self {
        Self { members: enumerate_subgroups(group) }
    }

    pub fn trivial() -> Self {
        Self { members: vec![Subgroup::trivial()] }
    }

    /// Accepts an explicit member list after checking closure.
    pub fn from_members(group: &FiniteGroup, members: Vec<Subgroup>) -> Result<Self> {
        let closed = Self::close(group, &members)?;
        let mut sorted = members;
        sorted.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
        sorted.dedup();
        if sorted != closed.members {
            return Err(Error::NotASubgroup(
                "family is not closed under conjugation and subgroups".into(),
            ));
        }
        Ok(closed)
    }

    pub fn members(&self) -> &[Subgroup] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, h: &Subgroup) -> bool {
        self.members.contains(h)
    }

    pub fn index_of(&self, h: &Subgroup) -> Option<usize> {
        self.members.iter().position(|m| m == h)
    }
}

/// Morphism `g̃: G/H → G/K`, `xH ↦ xgK`, named by the least element of `gK`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitMorphism {
    pub source: usize,
    pub target: usize,
    pub rep: Elem,
}

#[derive(Clone, Debug)]
pub struct OrbitCategory {
    group: Arc<FiniteGroup>,
    family: SubgroupFamily,
    morphisms: Vec<OrbitMorphism>,
    index: HashMap<OrbitMorphism, usize>,
    homs: Vec<Vec<Vec<usize>>>,
    compose: HashMap<(usize, usize), usize>,
}

impl OrbitCategory {
    pub fn new(group: Arc<FiniteGroup>, family: SubgroupFamily) -> Result<Self> {
        let objects = family.members();
        let n = objects.len();
        let mut morphisms = Vec::new();
        let mut index = HashMap::new();
        let mut homs = vec![vec![Vec::new(); n]; n];
        for (s, h) in objects.iter().enumerate() {
            for (t, k) in objects.iter().enumerate() {
                for coset in left_cosets(&group, k) {
                    let g = coset.rep;
                    if h.conjugate(&group, g).is_subgroup_of(k) {
                        let m = OrbitMorphism { source: s, target: t, rep: g };
                        index.insert(m, morphisms.len());
                        homs[s][t].push(morphisms.len());
                        morphisms.push(m);
                    }
                }
            }
        }
        let mut compose = HashMap::new();
        for (i, first) in morphisms.iter().enumerate() {
            for &j in homs[first.target].iter().flatten() {
                let second = morphisms[j];
                let rep = coset_rep(&group, &objects[second.target], group.mul(first.rep, second.rep));
                let composite = OrbitMorphism { source: first.source, target: second.target, rep };
                let c = *index.get(&composite).ok_or_else(|| {
                    Error::Internal(format!("composite {composite:?} is not a listed morphism"))
                })?;
                compose.insert((i, j), c);
            }
        }
        let category = Self { group, family, morphisms, index, homs, compose };
        category.check_laws()?;
        Ok(category)
    }

    fn check_laws(&self) -> Result<()> {
        for (i, m) in self.morphisms.iter().enumerate() {
            let id_s = self.identity(m.source);
            let id_t = self.identity(m.target);
            if self.compose(id_s, i) != i || self.compose(i, id_t) != i {
                return Err(Error::Internal(format!("identity law fails at {m:?}")));
            }
        }
        for (a, ma) in self.morphisms.iter().enumerate() {
            for b in self.out_of(ma.target) {
                let ab = self.compose(a, b);
                for c in self.out_of(self.morphisms[b].target) {
                    if self.compose(ab, c) != self.compose(a, self.compose(b, c)) {
                        return Err(Error::Internal(format!("associativity fails on ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn family(&self) -> &SubgroupFamily {
        &self.family
    }

    pub fn objects(&self) -> &[Subgroup] {
        self.family.members()
    }

    pub fn object_count(&self) -> usize {
        self.family.len()
    }

    pub fn morphisms(&self) -> &[OrbitMorphism] {
        &self.morphisms
    }

    pub fn morphism(&self, id: usize) -> OrbitMorphism {
        self.morphisms[id]
    }

    pub fn morphism_id(&self, m: &OrbitMorphism) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Morphism ids in `Hom(G/H, G/K)` ordered by representative.
    pub fn hom(&self, source: usize, target: usize) -> &[usize] {
        &self.homs[source][target]
    }

    /// All morphism ids with the given source.
    pub fn out_of(&self, source: usize) -> impl Iterator<Item = usize> + '_ {
        self.homs[source].iter().flatten().copied()
    }

    pub fn identity(&self, object: usize) -> usize {
        self.index[&OrbitMorphism { source: object, target: object, rep: 0 }]
    }

    /// Diagrammatic order: `first: G/H → G/K` then `second: G/K → G/L`,
    /// giving `(first.rep · second.rep)~`.
    pub fn compose(&self, first: usize, second: usize) -> usize {
        self.compose[&(first, second)]
    }

    /// Index of the trivial subgroup among the objects.
    pub fn free_orbit(&self) -> Option<usize> {
        self.family.index_of(&Subgroup::trivial())
    }

    /// `1̃_H: G/e → G/H`.
    pub fn projection_to(&self, object: usize) -> Option<usize> {
        let e = self.free_orbit()?;
        self.morphism_id(&OrbitMorphism { source: e, target: object, rep: 0 })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        // (1 2) and (1 2 3), zero-based.
        FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap()
    }

    fn find(group: &FiniteGroup, perm_name: &str) -> Elem {
        group.elements().find(|&g| group.name(g) == perm_name).unwrap()
    }

    /// Brute-force oracle: test every subset containing the identity for closure.
    fn subgroups_by_subsets(group: &FiniteGroup) -> usize {
        let n = group.order();
        (0u32..(1 << n))
            .filter(|mask| mask & 1 == 1)
            .filter(|mask| {
                let has = |g: usize| mask >> g & 1 == 1;
                (0..n).filter(|&a| has(a)).all(|a| (0..n).filter(|&b| has(b)).all(|b| has(group.mul(a, b))))
            })
            .count()
    }

    #[test]
    fn subgroup_counts_match_subset_oracle() {
        assert_eq!(enumerate_subgroups(&FiniteGroup::cyclic(2)).len(), 2);
        for group in [FiniteGroup::cyclic(4), s3(), FiniteGroup::cyclic(6), FiniteGroup::dihedral(4)] {
            assert_eq!(enumerate_subgroups(&group).len(), subgroups_by_subsets(&group));
        }
        assert_eq!(enumerate_subgroups(&FiniteGroup::cyclic(4)).len(), 3);
        assert_eq!(enumerate_subgroups(&s3()).len(), 6);
    }

    #[test]
    fn larger_groups_have_known_subgroup_counts() {
        assert_eq!(enumerate_subgroups(&FiniteGroup::symmetric(4)).len(), 30);
        assert_eq!(enumerate_subgroups(&FiniteGroup::alternating(5)).len(), 59);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], None).is_err());
        assert!(FiniteGroup::from_table(vec![vec![1, 0], vec![0, 1]], None).is_err());
        // Latin square that is not associative (a loop of order 5).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(FiniteGroup::from_table(loop5, None).is_err());
    }

    #[test]
    fn conjugation_in_s3() {
        let g = s3();
        let h = Subgroup::generated(&g, &[find(&g, "(1 2)")]).unwrap();
        let conj = h.conjugate(&g, find(&g, "(1 2 3)"));
        let expected = Subgroup::generated(&g, &[find(&g, "(2 3)")]).unwrap();
        assert_eq!(conj, expected);
        assert_eq!(h.conjugate(&g, 0), h);
        let z4 = FiniteGroup::cyclic(4);
        let k = Subgroup::generated(&z4, &[2]).unwrap();
        for x in z4.elements() {
            assert_eq!(k.conjugate(&z4, x), k);
        }
    }

    #[test]
    fn family_closure() {
        let z2 = FiniteGroup::cyclic(2);
        assert_eq!(SubgroupFamily::close(&z2, &[Subgroup::trivial()]).unwrap().len(), 1);
        let all = SubgroupFamily::close(&z2, &[Subgroup::whole(&z2)]).unwrap();
        assert_eq!(all.members(), &[Subgroup::trivial(), Subgroup::whole(&z2)]);

        let g = s3();
        let h = Subgroup::generated(&g, &[find(&g, "(1 2)")]).unwrap();
        let fam = SubgroupFamily::close(&g, &[h]).unwrap();
        assert_eq!(fam.len(), 4);
        assert!(fam.members()[1..].iter().all(|k| k.order() == 2));
        let again = SubgroupFamily::close(&g, fam.members()).unwrap();
        assert_eq!(again, fam);
        assert!(SubgroupFamily::from_members(&g, vec![Subgroup::trivial(), fam.members()[1].clone()]).is_err());
    }

    #[test]
    fn seed_must_be_subgroup() {
        let g = s3();
        let bogus = Subgroup { elements: vec![0, 1, 2] };
        assert!(SubgroupFamily::close(&g, &[bogus]).is_err());
    }

    #[test]
    fn cosets() {
        let g = s3();
        assert_eq!(left_cosets(&g, &Subgroup::whole(&g)).len(), 1);
        assert_eq!(left_cosets(&g, &Subgroup::trivial()).len(), 6);
        let h = Subgroup::generated(&g, &[find(&g, "(1 2)")]).unwrap();
        let cs = left_cosets(&g, &h);
        assert_eq!(cs.len(), 3);
        let union: BTreeSet<Elem> = cs.iter().flat_map(|c| c.elements.clone()).collect();
        assert_eq!(union.len(), 6);
    }

    #[test]
    fn orbit_category_of_z2() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let cat = OrbitCategory::new(z2.clone(), SubgroupFamily::all(&z2)).unwrap();
        let (e, g) = (0, 1);
        assert_eq!(cat.hom(e, e).len(), 2);
        assert_eq!(cat.hom(e, g).len(), 1);
        assert_eq!(cat.hom(g, e).len(), 0);
        assert_eq!(cat.hom(g, g).len(), 1);
        // g∘g = id and 1̃_G∘g = 1̃_G.
        let swap = cat.morphism_id(&OrbitMorphism { source: e, target: e, rep: 1 }).unwrap();
        let proj = cat.projection_to(g).unwrap();
        assert_eq!(cat.compose(swap, swap), cat.identity(e));
        assert_eq!(cat.compose(swap, proj), proj);
    }

    #[test]
    fn orbit_category_trivial_group() {
        let t = Arc::new(FiniteGroup::trivial());
        let cat = OrbitCategory::new(t.clone(), SubgroupFamily::all(&t)).unwrap();
        assert_eq!(cat.object_count(), 1);
        assert_eq!(cat.morphisms().len(), 1);
    }

    #[test]
    fn orbit_category_s3() {
        let g = Arc::new(s3());
        let fam = SubgroupFamily::all(&g);
        let cat = OrbitCategory::new(g.clone(), fam.clone()).unwrap();
        let e = cat.free_orbit().unwrap();
        assert_eq!(cat.hom(e, e).len(), 6);
        let c3 = fam.index_of(&Subgroup::generated(&g, &[find(&g, "(1 2 3)")]).unwrap()).unwrap();
        let c2 = fam.index_of(&Subgroup::generated(&g, &[find(&g, "(1 2)")]).unwrap()).unwrap();
        assert!(cat.hom(c3, c2).is_empty());
        // Oracle: count g with g⁻¹Hg ⊆ K directly, divided by |K|.
        for (s, h) in fam.members().iter().enumerate() {
            for (t, k) in fam.members().iter().enumerate() {
                let count = g.elements().filter(|&x| h.conjugate(&g, x).is_subgroup_of(k)).count();
                assert_eq!(cat.hom(s, t).len(), count / k.order());
            }
        }
    }

    #[test]
    fn free_orbit_automorphisms_equal_group_order() {
        for group in [FiniteGroup::cyclic(3), FiniteGroup::cyclic(4), FiniteGroup::dihedral(4), FiniteGroup::quaternion()] {
            let group = Arc::new(group);
            let cat = OrbitCategory::new(group.clone(), SubgroupFamily::all(&group)).unwrap();
            let e = cat.free_orbit().unwrap();
            assert_eq!(cat.hom(e, e).len(), group.order());
        }
    }

    #[test]
    fn builtin_orders() {
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
        assert_eq!(FiniteGroup::alternating(4).order(), 12);
        assert_eq!(FiniteGroup::alternating(5).order(), 60);
        assert_eq!(FiniteGroup::dihedral(5).order(), 10);
        assert_eq!(FiniteGroup::quaternion().order(), 8);
        assert!(!FiniteGroup::quaternion().is_abelian());
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert!(v4.elements().all(|x| v4.mul(x, x) == 0));
    }
}
