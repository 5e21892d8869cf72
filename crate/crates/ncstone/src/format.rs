//! JSON and DOT encodings of semigroups, groupoids, morphisms and symbolic
//! elements.

use anyhow::{bail, Context, Result};
use ncstone_core::catalog::{self, Structure};
use ncstone_core::groupoid::FinGroupoid;
use ncstone_core::invsemi::FinInvSemi;
use ncstone_core::unitize::{FinSupportPB, UnitizedElem};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupJson {
    pub size: usize,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub zero: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
}

impl SemigroupJson {
    pub fn from_semigroup(s: &FinInvSemi) -> Self {
        Self { size: s.size(), mul: s.mul_table(), inv: s.inv_table(), zero: s.zero(), names: s.names().map(<[String]>::to_vec).unwrap_or_default() }
    }

    pub fn to_semigroup(&self) -> Result<FinInvSemi> {
        if self.mul.len() != self.size {
            bail!("`size` is {} but `mul` has {} rows", self.size, self.mul.len());
        }
        let s = FinInvSemi::from_tables(&self.mul, &self.inv, self.zero)?;
        Ok(if self.names.is_empty() { s } else { s.with_names(self.names.clone())? })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupoidJson {
    pub size: usize,
    pub identities: Vec<usize>,
    pub inv: Vec<usize>,
    pub mul: Vec<Vec<Option<usize>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
}

impl GroupoidJson {
    pub fn from_groupoid(g: &FinGroupoid) -> Self {
        Self {
            size: g.size(),
            identities: g.identities().to_vec(),
            inv: g.inv_table(),
            mul: g.mul_table(),
            names: g.names().map(<[String]>::to_vec).unwrap_or_default(),
        }
    }

    pub fn to_groupoid(&self) -> Result<FinGroupoid> {
        if self.mul.len() != self.size {
            bail!("`size` is {} but `mul` has {} rows", self.size, self.mul.len());
        }
        let g = FinGroupoid::from_tables(&self.mul, &self.inv, &self.identities)?;
        Ok(if self.names.is_empty() { g } else { g.with_names(self.names.clone())? })
    }
}

/// An element map between two structures given by catalog keys or files.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub source: String,
    pub target: String,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElemKind {
    Inner,
    Outer,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitizedJson {
    pub kind: ElemKind,
    pub e: Vec<u32>,
    pub graph: Vec<[u32; 2]>,
}

impl UnitizedJson {
    pub fn from_elem(x: &UnitizedElem) -> Self {
        let pairs = |s: &FinSupportPB| s.graph().iter().map(|&(a, b)| [a, b]).collect();
        match x {
            UnitizedElem::Inner(s) => Self { kind: ElemKind::Inner, e: Vec::new(), graph: pairs(s) },
            UnitizedElem::Outer { e, s } => Self { kind: ElemKind::Outer, e: e.clone(), graph: pairs(s) },
        }
    }

    pub fn to_elem(&self) -> Result<UnitizedElem> {
        let pairs: Vec<(u32, u32)> = self.graph.iter().map(|&[a, b]| (a, b)).collect();
        let s = FinSupportPB::new(&pairs)?;
        Ok(match self.kind {
            ElemKind::Inner if self.e.is_empty() => UnitizedElem::inner(s),
            ElemKind::Inner => bail!("an inner element has no `e`"),
            ElemKind::Outer => UnitizedElem::outer(&self.e, s)?,
        })
    }
}

/// A loaded structure together with a display name.
pub struct Loaded {
    pub name: String,
    pub structure: Structure,
}

/// Reads `arg` as a JSON file if such a path exists, and as a catalog key
/// otherwise.
pub fn load(arg: &str) -> Result<Loaded> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        let structure = parse_structure(&text).with_context(|| format!("parsing {arg}"))?;
        let name = path.file_stem().map_or_else(|| arg.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok(Loaded { name, structure });
    }
    let structure = catalog::build(arg).with_context(|| format!("`{arg}` is neither a file nor a catalog key"))?;
    Ok(Loaded { name: arg.to_string(), structure })
}

/// Groupoid files are recognised by their `identities` field.
pub fn parse_structure(text: &str) -> Result<Structure> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("identities").is_some() {
        let g: GroupoidJson = serde_json::from_value(value)?;
        Ok(Structure::Groupoid(g.to_groupoid()?))
    } else {
        let s: SemigroupJson = serde_json::from_value(value)?;
        Ok(Structure::Semigroup(s.to_semigroup()?))
    }
}

pub fn load_semigroup(arg: &str) -> Result<(String, FinInvSemi)> {
    match load(arg)? {
        Loaded { name, structure: Structure::Semigroup(s) } => Ok((name, s)),
        Loaded { name, .. } => bail!("`{name}` is a groupoid, expected a semigroup"),
    }
}

pub fn load_groupoid(arg: &str) -> Result<(String, FinGroupoid)> {
    match load(arg)? {
        Loaded { name, structure: Structure::Groupoid(g) } => Ok((name, g)),
        Loaded { name, .. } => bail!("`{name}` is a semigroup, expected a groupoid"),
    }
}

/// Nodes are identities; each non-identity `g` is an edge `d(g) → r(g)`.
pub fn groupoid_dot(name: &str, g: &FinGroupoid) -> String {
    let q = |s: &str| serde_json::to_string(s).expect("strings serialize");
    let mut out = format!("digraph {} {{\n", q(name));
    for &e in g.identities() {
        let _ = writeln!(out, "  n{e} [label={}];", q(&g.name(e)));
    }
    for x in (0..g.size()).filter(|&x| !g.is_identity(x)) {
        let _ = writeln!(out, "  n{} -> n{} [label={}];", g.d(x), g.r(x), q(&g.name(x)));
    }
    out.push_str("}\n");
    out
}

/// Compact JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn semigroup_json_round_trip() {
        let s = catalog::semigroup("I_2").unwrap();
        let j = SemigroupJson::from_semigroup(&s);
        let text = to_json(&j);
        let back: SemigroupJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert!(back.to_semigroup().unwrap().is_isomorphic(&s));
    }

    #[test]
    fn groupoid_json_round_trip() {
        let g = catalog::groupoid("Comp(2,Z2,2)").unwrap();
        let j = GroupoidJson::from_groupoid(&g);
        match parse_structure(&to_json(&j)).unwrap() {
            Structure::Groupoid(h) => assert!(h.is_isomorphic(&g)),
            Structure::Semigroup(_) => panic!("parsed as a semigroup"),
        }
    }

    #[test]
    fn unitized_json() {
        let x = UnitizedElem::outer(&[0, 1], FinSupportPB::new(&[(0, 1), (1, 0)]).unwrap()).unwrap();
        let j = UnitizedJson::from_elem(&x);
        assert_eq!(serde_json::to_string(&j).unwrap(), r#"{"kind":"outer","e":[0,1],"graph":[[0,1],[1,0]]}"#);
        assert_eq!(j.to_elem().unwrap(), x);
        let bad = UnitizedJson { kind: ElemKind::Inner, e: vec![3], graph: vec![] };
        assert!(bad.to_elem().is_err());
    }

    #[test]
    fn dot_has_one_edge_per_arrow() {
        let g = catalog::groupoid("Pair(2)").unwrap();
        let dot = groupoid_dot("Pair(2)", &g);
        assert_eq!(dot.matches("->").count(), 2);
        assert_eq!(dot.matches("[label=").count(), 4);
    }
}
