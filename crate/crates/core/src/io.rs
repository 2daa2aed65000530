//! JSON documents for groups, simplicial sets, G-simplicial sets, maps and
//! orbit diagrams.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::diagram::OrbitDiagram;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, OrbitCategory, OrbitMorphism, Subgroup, SubgroupFamily};
use crate::gsset::{GMap, GSimplicialSet};
use crate::sset::{ordered_complex, SimplicialMap, SimplicialSet};

/// Parses JSON, reporting line and column on failure.
pub fn parse<T: DeserializeOwned>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("documents serialize")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupDoc {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    /// Zero-based permutation images.
    Permutations { degree: usize, generators: Vec<Vec<usize>> },
    Named { name: String },
}

/// `Z/n` (or `Cn`), `Sn`, `An`, `Dn` (order 2n), `Q8`, `trivial`.
pub fn named_group(name: &str) -> Result<FiniteGroup> {
    let bad = || Error::Parse(format!("unknown group name '{name}'"));
    let number = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let n = name.trim();
    Ok(match n {
        "trivial" | "1" => FiniteGroup::trivial(),
        "Q8" => FiniteGroup::quaternion(),
        _ if n.starts_with("Z/") => FiniteGroup::cyclic(number(&n[2..]).and_then(|k| if k >= 1 { Ok(k) } else { Err(bad()) })?),
        _ if n.starts_with('C') => FiniteGroup::cyclic(number(&n[1..])?.max(1)),
        _ if n.starts_with('S') => FiniteGroup::symmetric(number(&n[1..])?),
        _ if n.starts_with('A') => FiniteGroup::alternating(number(&n[1..])?),
        _ if n.starts_with('D') => FiniteGroup::dihedral(number(&n[1..])?),
        _ => return Err(bad()),
    })
}

impl GroupDoc {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupDoc::Table { order, table, names } => {
                if table.len() != *order {
                    return Err(Error::InvalidGroup(format!("order {order} but the table has {} rows", table.len())));
                }
                FiniteGroup::from_table(table.clone(), names.clone())
            }
            GroupDoc::Permutations { degree, generators } => FiniteGroup::from_permutations(*degree, generators),
            GroupDoc::Named { name } => named_group(name),
        }
    }

    pub fn from_group(group: &FiniteGroup) -> Self {
        GroupDoc::Table { order: group.order(), table: group.table().to_vec(), names: group.names().map(<[String]>::to_vec) }
    }
}

/// Reads a group from a name or a JSON document.
pub fn load_group(text_or_name: &str) -> Result<FiniteGroup> {
    let t = text_or_name.trim_start();
    if t.starts_with('{') {
        parse::<GroupDoc>(text_or_name, "group")?.build()
    } else {
        named_group(text_or_name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SsetDoc {
    /// `faces["k"][i][x] = d_i x` and `degeneracies["k"][i][x] = s_i x`.
    Explicit {
        dim: usize,
        levels: Vec<usize>,
        faces: BTreeMap<String, Vec<Vec<usize>>>,
        degeneracies: BTreeMap<String, Vec<Vec<usize>>>,
    },
    /// Ordered simplicial complex generated by the listed vertex sets.
    Complex { dim: usize, vertices: u32, simplices: Vec<Vec<u32>> },
}

fn level_key(map: &BTreeMap<String, Vec<Vec<usize>>>, k: usize, field: &str) -> Result<Vec<Vec<usize>>> {
    map.get(&k.to_string())
        .cloned()
        .ok_or_else(|| Error::Parse(format!("missing {field}[\"{k}\"]")))
}

impl SsetDoc {
    pub fn build(&self) -> Result<SimplicialSet> {
        match self {
            SsetDoc::Explicit { dim, levels, faces, degeneracies } => {
                if levels.len() != dim + 1 {
                    return Err(Error::Parse(format!("levels has {} entries, expected dim + 1 = {}", levels.len(), dim + 1)));
                }
                let mut f = vec![Vec::new()];
                for k in 1..=*dim {
                    f.push(level_key(faces, k, "faces")?);
                }
                let mut s = Vec::new();
                for k in 0..*dim {
                    s.push(level_key(degeneracies, k, "degeneracies")?);
                }
                s.push(Vec::new());
                SimplicialSet::from_parts(*dim, levels.clone(), f, s)
            }
            SsetDoc::Complex { dim, vertices, simplices } => {
                for s in simplices {
                    if let Some(v) = s.iter().find(|&&v| v >= *vertices) {
                        return Err(Error::Parse(format!("simplex {s:?} uses vertex {v} of {vertices}")));
                    }
                }
                let faces: Vec<Vec<u32>> = simplices
                    .iter()
                    .map(|s| {
                        let mut s = s.clone();
                        s.sort_unstable();
                        s.dedup();
                        s
                    })
                    .collect();
                Ok(ordered_complex(*vertices, *dim, |support| {
                    support.len() == 1 || faces.iter().any(|f| support.iter().all(|v| f.contains(v)))
                })
                .set)
            }
        }
    }

    pub fn from_set(set: &SimplicialSet) -> Self {
        let dim = set.dim();
        let faces = (1..=dim)
            .map(|k| (k.to_string(), (0..=k).map(|i| (0..set.count(k)).map(|x| set.face(k, i, x)).collect()).collect()))
            .collect();
        let degeneracies = (0..dim)
            .map(|k| (k.to_string(), (0..=k).map(|i| (0..set.count(k)).map(|x| set.degen(k, i, x)).collect()).collect()))
            .collect();
        SsetDoc::Explicit { dim, levels: set.counts(), faces, degeneracies }
    }
}

/// `action["g"]["k"]` is the permutation of level-k simplices by element `g`;
/// elements not listed are generated from those that are. A missing action
/// means the trivial action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GSetDoc {
    pub group: GroupDoc,
    pub space: SsetDoc,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub action: BTreeMap<String, BTreeMap<String, Vec<usize>>>,
}

impl GSetDoc {
    pub fn build(&self) -> Result<GSimplicialSet> {
        let group = Arc::new(self.group.build()?);
        let set = self.space.build()?;
        self.build_with(group, set)
    }

    fn build_with(&self, group: Arc<FiniteGroup>, set: SimplicialSet) -> Result<GSimplicialSet> {
        if self.action.is_empty() {
            return Ok(GSimplicialSet::trivial(group, set));
        }
        let mut generators = Vec::new();
        for (g, levels) in &self.action {
            let element: usize = g.parse().map_err(|_| Error::Parse(format!("action key '{g}' is not an element index")))?;
            let tables = (0..=set.dim())
                .map(|k| {
                    levels
                        .get(&k.to_string())
                        .cloned()
                        .ok_or_else(|| Error::Parse(format!("action[\"{g}\"] is missing level \"{k}\"")))
                })
                .collect::<Result<Vec<_>>>()?;
            generators.push((element, tables));
        }
        GSimplicialSet::from_generators(group, set, &generators)
    }

    /// Lists the action of every group element.
    pub fn from_gset(a: &GSimplicialSet) -> Self {
        let action = if a.is_trivial_action() {
            BTreeMap::new()
        } else {
            a.group()
                .elements()
                .skip(1)
                .map(|g| {
                    (g.to_string(), (0..=a.dim()).map(|k| (k.to_string(), a.action_tables()[k][g].clone())).collect())
                })
                .collect()
        };
        GSetDoc { group: GroupDoc::from_group(a.group()), space: SsetDoc::from_set(a.underlying()), action }
    }
}

/// Source, target and `levels[k][x] = f(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDoc {
    pub source: GSetDoc,
    pub target: GSetDoc,
    pub levels: Vec<Vec<usize>>,
}

impl MapDoc {
    pub fn build(&self) -> Result<GMap> {
        let source = self.source.build()?;
        if self.source.group != self.target.group && self.target.group.build()? != **source.group() {
            return Err(Error::ShapeMismatch("source and target use different groups".into()));
        }
        let target = self.target.build_with(source.group().clone(), self.target.space.build()?)?;
        GMap::from_levels(source, target, self.levels.clone())
    }

    pub fn from_map(f: &GMap) -> Self {
        MapDoc {
            source: GSetDoc::from_gset(f.source()),
            target: GSetDoc::from_gset(f.target()),
            levels: f.underlying().levels().to_vec(),
        }
    }
}

/// `"all"`, `"trivial"`, or a list of generator lists whose closure is taken.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyDoc {
    Keyword(String),
    Generators(Vec<Vec<usize>>),
}

impl FamilyDoc {
    pub fn build(&self, group: &FiniteGroup) -> Result<SubgroupFamily> {
        match self {
            FamilyDoc::Keyword(k) if k == "all" => Ok(SubgroupFamily::all(group)),
            FamilyDoc::Keyword(k) if k == "trivial" => Ok(SubgroupFamily::trivial()),
            FamilyDoc::Keyword(k) => Err(Error::Parse(format!("unknown family '{k}' (expected all, trivial or a JSON list)"))),
            FamilyDoc::Generators(lists) => {
                let seed = lists.iter().map(|gens| Subgroup::generated(group, gens)).collect::<Result<Vec<_>>>()?;
                SubgroupFamily::close(group, &seed)
            }
        }
    }

    pub fn from_family(group: &FiniteGroup, family: &SubgroupFamily) -> Self {
        FamilyDoc::Generators(family.members().iter().map(|h| h.generators(group)).collect())
    }
}

pub fn parse_family(spec: &str, group: &FiniteGroup) -> Result<SubgroupFamily> {
    let t = spec.trim();
    let doc = if t.starts_with('[') { parse::<FamilyDoc>(t, "family")? } else { FamilyDoc::Keyword(t.to_string()) };
    doc.build(group)
}

/// Objects keyed by family index; morphisms keyed `"s->t:rep"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramDoc {
    pub group: GroupDoc,
    pub family: FamilyDoc,
    pub objects: BTreeMap<String, SsetDoc>,
    pub morphisms: BTreeMap<String, Vec<Vec<usize>>>,
}

fn parse_morphism_key(key: &str) -> Result<OrbitMorphism> {
    let bad = || Error::Parse(format!("morphism key '{key}' is not of the form s->t:rep"));
    let (st, rep) = key.split_once(':').ok_or_else(bad)?;
    let (s, t) = st.split_once("->").ok_or_else(bad)?;
    Ok(OrbitMorphism {
        source: s.trim().parse().map_err(|_| bad())?,
        target: t.trim().parse().map_err(|_| bad())?,
        rep: rep.trim().parse().map_err(|_| bad())?,
    })
}

impl DiagramDoc {
    pub fn build(&self) -> Result<OrbitDiagram> {
        let group = Arc::new(self.group.build()?);
        let family = self.family.build(&group)?;
        let category = Arc::new(OrbitCategory::new(group, family)?);
        let at = (0..category.object_count())
            .map(|i| {
                self.objects
                    .get(&i.to_string())
                    .ok_or_else(|| Error::Parse(format!("objects is missing \"{i}\"")))?
                    .build()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut on: Vec<Option<SimplicialMap>> = vec![None; category.morphisms().len()];
        for (key, levels) in &self.morphisms {
            let m = parse_morphism_key(key)?;
            let id = category
                .morphism_id(&m)
                .ok_or_else(|| Error::InvalidDiagram(format!("'{key}' is not a morphism of the orbit category")))?;
            on[id] = Some(SimplicialMap::new(at[m.source].clone(), at[m.target].clone(), levels.clone())?);
        }
        let on = on
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                m.ok_or_else(|| {
                    let mm = category.morphism(i);
                    Error::Parse(format!("morphisms is missing \"{}->{}:{}\"", mm.source, mm.target, mm.rep))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        OrbitDiagram::new(category, at, on)
    }

    pub fn from_diagram(d: &OrbitDiagram) -> Self {
        let cat = d.category();
        DiagramDoc {
            group: GroupDoc::from_group(cat.group()),
            family: FamilyDoc::from_family(cat.group(), cat.family()),
            objects: d.objects().iter().enumerate().map(|(i, s)| (i.to_string(), SsetDoc::from_set(s))).collect(),
            morphisms: (0..cat.morphisms().len()).map(|i| (d.label(i), d.on(i).levels().to_vec())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::theta_shriek;
    use crate::sset::{boundary_subcomplex, standard_simplex};

    #[test]
    fn simplicial_sets_round_trip() {
        for set in [standard_simplex(2, 3), boundary_subcomplex(2, 3).0, SimplicialSet::point(2)] {
            let text = to_json(&SsetDoc::from_set(&set));
            assert_eq!(parse::<SsetDoc>(&text, "space").unwrap().build().unwrap(), set);
        }
    }

    #[test]
    fn complex_form() {
        let doc: SsetDoc = parse(r#"{"dim": 3, "vertices": 3, "simplices": [[0,1,2]]}"#, "space").unwrap();
        assert_eq!(doc.build().unwrap(), standard_simplex(2, 3));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse::<SsetDoc>("{\n  \"dim\": 2,\n  \"levels\": [1, 1,\n}", "space").unwrap_err();
        assert!(err.to_string().contains("line"), "{err}");
    }

    #[test]
    fn groups_by_name_and_table() {
        assert_eq!(load_group("S3").unwrap().order(), 6);
        assert_eq!(load_group("Z/4").unwrap().order(), 4);
        assert_eq!(load_group("D4").unwrap().order(), 8);
        assert!(load_group("X9").is_err());
        let g = FiniteGroup::symmetric(3);
        assert_eq!(load_group(&to_json(&GroupDoc::from_group(&g))).unwrap(), g);
        let perms = load_group(r#"{"degree": 3, "generators": [[1,0,2],[1,2,0]]}"#).unwrap();
        assert_eq!(perms.order(), 6);
    }

    #[test]
    fn gsets_maps_and_diagrams_round_trip() {
        let g = Arc::new(FiniteGroup::symmetric(3));
        let (b, _) = boundary_subcomplex(2, 2);
        let a = GSimplicialSet::homogeneous(g.clone(), &Subgroup::trivial(), 2).times(&b);
        let text = to_json(&GSetDoc::from_gset(&a));
        assert_eq!(parse::<GSetDoc>(&text, "space").unwrap().build().unwrap(), a);
        let f = GMap::to_point(&a);
        let text = to_json(&MapDoc::from_map(&f));
        assert_eq!(parse::<MapDoc>(&text, "map").unwrap().build().unwrap(), f);
        let cat = Arc::new(OrbitCategory::new(g.clone(), SubgroupFamily::all(&g)).unwrap());
        let d = theta_shriek(&a, &cat).unwrap();
        let text = to_json(&DiagramDoc::from_diagram(&d));
        assert_eq!(parse::<DiagramDoc>(&text, "diagram").unwrap().build().unwrap(), d);
    }

    #[test]
    fn families() {
        let g = FiniteGroup::symmetric(3);
        assert_eq!(parse_family("all", &g).unwrap().len(), 6);
        assert_eq!(parse_family("trivial", &g).unwrap().len(), 1);
        // Closure of one transposition: {e} and its three conjugates.
        assert_eq!(parse_family("[[1]]", &g).unwrap().len(), 4);
        assert!(parse_family("most", &g).is_err());
    }
}
