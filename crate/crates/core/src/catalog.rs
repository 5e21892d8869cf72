//! Named instances: a small key language for semigroups, groupoids and
//! groups, and the fixed lists of instances and morphisms that the test
//! suites and the command line share.
//!
//! Keys:
//!
//! | key | meaning |
//! |---|---|
//! | `I_n` | symmetric inverse monoid, `n ≤ 5` |
//! | `GZ(H)` | group with zero adjoined |
//! | `Rook(n,H)` | `n × n` rook matrices over `H⁰` |
//! | `Bool(k)` | Boolean algebra with `k` atoms |
//! | `Zero` | the one-element semigroup |
//! | `Sub(I_3,i)` | `i`-th seeded random subalgebra of `I_3` |
//! | `KB(G)` | local bisections of a groupoid key |
//! | `AxB` | direct product of semigroups |
//! | `Pair(n)`, `Disc(k)`, `Comp(n,H,n)` | pair groupoid, discrete space, `X × H × X` |
//! | `G+H` | disjoint union of groupoids |
//!
//! Groups `H` are `Zk` (cyclic) or `Sk` (symmetric).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::group::GroupTable;
use crate::groupoid::{kb, FinGroupoid, GroupoidFunctor, DEFAULT_KB_CAP};
use crate::invsemi::construct::*;
use crate::invsemi::{FinInvSemi, SemigroupMorphism};
use crate::{Error, Result, DEFAULT_SEED};

/// Number of random subalgebras of `I_3` addressable as `Sub(I_3,i)`.
pub const RANDOM_SUBALGEBRAS: usize = 5;

/// A structure built from a key.
#[derive(Debug, Clone)]
pub enum Structure {
    Semigroup(FinInvSemi),
    Groupoid(FinGroupoid),
}

fn bad(key: &str) -> Error {
    Error::Precondition(format!("unknown key `{key}`"))
}

/// Splits at top-level occurrences of any of `seps`.
fn split_top(key: &str, seps: &[char]) -> Vec<String> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in key.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && seps.contains(&c) {
            parts.push(core::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    parts.push(cur);
    parts.into_iter().map(|p| p.trim().to_string()).collect()
}

fn call(key: &str, head: &str) -> Option<Vec<String>> {
    let rest = key.strip_prefix(head)?.strip_prefix('(')?.strip_suffix(')')?;
    Some(split_top(rest, &[',']))
}

fn number(s: &str, key: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| bad(key))
}

pub fn group(key: &str) -> Result<GroupTable> {
    let key = key.trim();
    if let Some(k) = key.strip_prefix('Z') {
        let k = number(k, key)?;
        return if k == 0 { Err(bad(key)) } else { Ok(GroupTable::cyclic(k)) };
    }
    if let Some(k) = key.strip_prefix('S') {
        let k = number(k, key)?;
        return if k == 0 || k > 5 { Err(bad(key)) } else { Ok(GroupTable::symmetric(k)) };
    }
    Err(bad(key))
}

pub fn semigroup(key: &str) -> Result<FinInvSemi> {
    match build(key)? {
        Structure::Semigroup(s) => Ok(s),
        Structure::Groupoid(_) => Err(Error::Precondition(format!("`{key}` names a groupoid"))),
    }
}

pub fn groupoid(key: &str) -> Result<FinGroupoid> {
    match build(key)? {
        Structure::Groupoid(g) => Ok(g),
        Structure::Semigroup(_) => Err(Error::Precondition(format!("`{key}` names a semigroup"))),
    }
}

pub fn build(key: &str) -> Result<Structure> {
    let key = key.trim();
    let factors = split_top(key, &['x', '×']);
    if factors.len() > 1 {
        let mut acc = semigroup(&factors[0])?;
        for f in &factors[1..] {
            acc = direct_product(&acc, &semigroup(f)?)?;
        }
        return Ok(Structure::Semigroup(acc));
    }
    let summands = split_top(key, &['+']);
    if summands.len() > 1 {
        let mut acc = groupoid(&summands[0])?;
        for g in &summands[1..] {
            acc = acc.disjoint_union(&groupoid(g)?);
        }
        return Ok(Structure::Groupoid(acc));
    }
    use Structure::{Groupoid, Semigroup};
    if let Some(n) = key.strip_prefix("I_") {
        return Ok(Semigroup(symmetric_inverse_monoid(number(n, key)?)?));
    }
    if key == "Zero" {
        return Ok(Semigroup(zero_semigroup()));
    }
    if let Some(args) = call(key, "GZ") {
        let [h] = args.as_slice() else { return Err(bad(key)) };
        return Ok(Semigroup(group_with_zero(&group(h)?)?));
    }
    if let Some(args) = call(key, "Rook") {
        let [n, h] = args.as_slice() else { return Err(bad(key)) };
        return Ok(Semigroup(rook_matrices(number(n, key)?, &group(h)?)?));
    }
    if let Some(args) = call(key, "Bool") {
        let [k] = args.as_slice() else { return Err(bad(key)) };
        let k = u32::try_from(number(k, key)?).map_err(|_| bad(key))?;
        return Ok(Semigroup(boolean_algebra_semilattice(k)?));
    }
    if let Some(args) = call(key, "Sub") {
        let [host, i] = args.as_slice() else { return Err(bad(key)) };
        let i = number(i, key)?;
        if i >= RANDOM_SUBALGEBRAS {
            return Err(bad(key));
        }
        let subs = random_subalgebras(&semigroup(host)?, RANDOM_SUBALGEBRAS, DEFAULT_SEED)?;
        return Ok(Semigroup(subs.into_iter().nth(i).expect("index checked").0));
    }
    if let Some(args) = call(key, "KB") {
        let [g] = args.as_slice() else { return Err(bad(key)) };
        return Ok(Semigroup(kb(&groupoid(g)?, DEFAULT_KB_CAP)?.semigroup));
    }
    if let Some(args) = call(key, "Pair") {
        let [n] = args.as_slice() else { return Err(bad(key)) };
        return Ok(Groupoid(FinGroupoid::pair(number(n, key)?)?));
    }
    if let Some(args) = call(key, "Disc") {
        let [k] = args.as_slice() else { return Err(bad(key)) };
        return Ok(Groupoid(FinGroupoid::discrete(number(k, key)?)?));
    }
    if let Some(args) = call(key, "Comp") {
        let [n, h, m] = args.as_slice() else { return Err(bad(key)) };
        let (n, m) = (number(n, key)?, number(m, key)?);
        if n != m {
            return Err(Error::Precondition(format!("`{key}`: both point sets of X × H × X must agree")));
        }
        return Ok(Groupoid(FinGroupoid::from_components(&[(n, group(h)?)])?));
    }
    Err(bad(key))
}

/// Boolean inverse semigroups every suite runs over.
pub fn semigroup_keys() -> Vec<String> {
    let mut keys: Vec<String> = ["I_1", "I_2", "I_3", "GZ(Z2)", "GZ(Z3)", "Rook(2,Z2)", "I_2xI_2", "Bool(2)", "Zero"]
        .iter()
        .map(|k| k.to_string())
        .collect();
    keys.extend((0..RANDOM_SUBALGEBRAS).map(|i| format!("Sub(I_3,{i})")));
    keys
}

/// Finite groupoids every suite runs over.
pub fn groupoid_keys() -> Vec<String> {
    [
        "Pair(1)",
        "Pair(2)",
        "Pair(3)",
        "Pair(4)",
        "Comp(1,Z2,1)",
        "Comp(1,Z3,1)",
        "Comp(2,Z2,2)",
        "Comp(2,Z3,2)",
        "Disc(2)",
        "Pair(2)+Pair(2)",
        "Pair(1)+Comp(2,Z2,2)",
    ]
    .iter()
    .map(|k| k.to_string())
    .collect()
}

/// A morphism between owned hosts.
#[derive(Debug, Clone)]
pub struct CatalogMorphism {
    pub name: String,
    pub source: FinInvSemi,
    pub target: FinInvSemi,
    pub map: Vec<usize>,
}

impl CatalogMorphism {
    pub fn morphism(&self) -> Result<SemigroupMorphism<'_>> {
        SemigroupMorphism::new(&self.source, &self.target, self.map.clone())
    }
}

fn by_name(s: &FinInvSemi, t: &FinInvSemi, rename: impl Fn(&str) -> String) -> Result<Vec<usize>> {
    (0..s.size())
        .map(|a| {
            let want = rename(&s.name(a));
            (0..t.size()).find(|&b| t.name(b) == want).ok_or_else(|| Error::Precondition(format!("no image for {want}")))
        })
        .collect()
}

/// Strips `:gk` labels from a rook-matrix name.
fn forget_labels(name: &str) -> String {
    let mut out = String::new();
    let mut skipping = false;
    for c in name.chars() {
        match c {
            ':' => skipping = true,
            ',' | ']' => {
                skipping = false;
                out.push(c);
            }
            _ if !skipping => out.push(c),
            _ => {}
        }
    }
    out
}

/// Morphisms of Boolean inverse semigroups, callitic or not, including the
/// natural map onto every quotient of `I_2 × I_2` by an additive ideal.
pub fn morphism_catalog() -> Result<Vec<CatalogMorphism>> {
    let i1 = semigroup("I_1")?;
    let i2 = semigroup("I_2")?;
    let p = semigroup("I_2xI_2")?;
    let n = i2.size();
    let mut out = Vec::new();
    let mut push = |name: &str, source: &FinInvSemi, target: &FinInvSemi, map: Vec<usize>| {
        out.push(CatalogMorphism { name: name.to_string(), source: source.clone(), target: target.clone(), map });
    };
    push("identity I_2", &i2, &i2, (0..n).collect());
    push("projection I_2xI_2 -> I_2", &p, &i2, (0..p.size()).map(|x| x / n).collect());
    push("second projection I_2xI_2 -> I_2", &p, &i2, (0..p.size()).map(|x| x % n).collect());
    push("diagonal I_2 -> I_2xI_2", &i2, &p, (0..n).map(|a| a * n + a).collect());
    push("corner I_1 -> I_2", &i1, &i2, alloc::vec![0, i_n_element(2, &[(1, 1)])?]);
    let (z2, b) = (semigroup("GZ(Z2)")?, semigroup("GZ(Z1)")?);
    push("collapse GZ(Z2) -> GZ(Z1)", &z2, &b, alloc::vec![0, 1, 1]);
    let rook = semigroup("Rook(2,Z2)")?;
    push("forget labels Rook(2,Z2) -> I_2", &rook, &i2, by_name(&rook, &i2, forget_labels)?);
    for ideal in p.additive_ideals() {
        let q = crate::duality::quotient(&p, &ideal)?;
        let name = format!("quotient I_2xI_2 by ideal of size {}", ideal.len());
        push(&name, &p, &q.semigroup, q.map);
    }
    Ok(out)
}

/// A functor between owned groupoids.
#[derive(Debug, Clone)]
pub struct CatalogFunctor {
    pub name: String,
    pub source: FinGroupoid,
    pub target: FinGroupoid,
    pub map: Vec<usize>,
}

impl CatalogFunctor {
    pub fn functor(&self) -> Result<GroupoidFunctor<'_>> {
        GroupoidFunctor::new(&self.source, &self.target, self.map.clone())
    }
}

/// Groupoid functors, covering or not.
pub fn functor_catalog() -> Result<Vec<CatalogFunctor>> {
    let pair = groupoid("Pair(2)")?;
    let two = groupoid("Pair(2)+Pair(2)")?;
    let comp = groupoid("Comp(2,Z2,2)")?;
    let n = pair.size();
    let forget = (0..comp.size())
        .map(|a| {
            let name = forget_group_label(&comp.name(a));
            (0..n).find(|&b| pair.name(b) == name).ok_or_else(|| Error::Precondition(format!("no image for {name}")))
        })
        .collect::<Result<Vec<usize>>>()?;
    Ok(alloc::vec![
        CatalogFunctor { name: "identity Comp(2,Z2,2)".into(), source: comp.clone(), target: comp.clone(), map: (0..comp.size()).collect() },
        CatalogFunctor { name: "inclusion Pair(2) -> Pair(2)+Pair(2)".into(), source: pair.clone(), target: two.clone(), map: (0..n).collect() },
        CatalogFunctor { name: "fold Pair(2)+Pair(2) -> Pair(2)".into(), source: two.clone(), target: pair.clone(), map: (0..2 * n).map(|x| x % n).collect() },
        CatalogFunctor { name: "forget labels Comp(2,Z2,2) -> Pair(2)".into(), source: comp, target: pair, map: forget },
    ])
}

/// `(x,gk,y)` to `(x,g0,y)`.
fn forget_group_label(name: &str) -> String {
    let parts: Vec<&str> = name.trim_matches(|c| c == '(' || c == ')').split(',').collect();
    format!("({},g0,{})", parts[0], parts[2])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_build() {
        assert_eq!(semigroup("I_2").unwrap().size(), 7);
        assert_eq!(semigroup("Rook(2,Z2)").unwrap().size(), 17);
        assert_eq!(semigroup("I_2xI_2").unwrap().size(), 49);
        assert_eq!(semigroup("I_2 × I_1").unwrap().size(), 14);
        assert_eq!(groupoid("Pair(2)").unwrap().size(), 4);
        assert_eq!(groupoid("Comp(2,Z2,2)").unwrap().size(), 8);
        assert_eq!(groupoid("Pair(2)+Pair(1)").unwrap().size(), 5);
        assert_eq!(semigroup("KB(Pair(2))").unwrap().size(), 7);
        assert!(build("Comp(2,Z2,3)").is_err());
        assert!(build("Nope").is_err());
        assert!(semigroup("Pair(2)").is_err());
        for k in semigroup_keys() {
            assert!(semigroup(&k).unwrap().is_boolean(), "{k}");
        }
        for k in groupoid_keys() {
            groupoid(&k).unwrap();
        }
    }

    #[test]
    fn catalog_morphisms_validate() {
        for m in morphism_catalog().unwrap() {
            m.morphism().unwrap_or_else(|e| panic!("{}: {e}", m.name));
        }
        for f in functor_catalog().unwrap() {
            f.functor().unwrap_or_else(|e| panic!("{}: {e}", f.name));
        }
    }
}
