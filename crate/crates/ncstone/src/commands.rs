//! One function per subcommand. Each returns the text to print or a
//! [`Failure`] that decides the exit code.

use std::collections::BTreeMap;
use std::fmt;

use anyhow::{anyhow, Context};
use clap::ValueEnum;
use ncstone_core::catalog::Structure;
use ncstone_core::duality::{
    alpha, beta, dual_functor, dual_morphism, functor_round_trip, morphism_round_trip, quotient, stone_groupoid,
    verify_correspondences,
};
use ncstone_core::groupoid::{kb, GroupoidFunctor};
use ncstone_core::invsemi::{FinInvSemi, SemigroupMorphism};
use ncstone_core::seeded_rng;
use ncstone_core::unitize::symbolic::random_unitized;
use ncstone_core::unitize::{compose_direct, compose_formula, unitize_finite};
use serde::Serialize;

use crate::format::{
    groupoid_dot, load, load_groupoid, load_semigroup, to_json, GroupoidJson, Loaded, MorphismJson, SemigroupJson,
    UnitizedJson,
};

/// Support `{0..n-1}` of the sampled symbolic elements.
pub const SYMBOLIC_SUPPORT: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Dot,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    /// The input could not be read or does not describe a valid structure.
    Input(anyhow::Error),
    /// The input is valid but a checked property does not hold.
    Check(anyhow::Error),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Check(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(e) => write!(f, "malformed input: {e:#}"),
            Failure::Check(e) => write!(f, "check failed: {e:#}"),
        }
    }
}

pub type Outcome = Result<String, Failure>;

fn input<T>(r: anyhow::Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::Input)
}

fn check<T, E: Into<anyhow::Error>>(r: Result<T, E>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Check(e.into()))
}

fn no_dot(format: Format, what: &str) -> Result<(), Failure> {
    match format {
        Format::Json => Ok(()),
        Format::Dot => Err(Failure::Input(anyhow!("{what} has no DOT form; DOT output is for groupoids"))),
    }
}

pub fn make(key: &str, format: Format) -> Outcome {
    let Loaded { name, structure } = input(load(key))?;
    Ok(match (structure, format) {
        (Structure::Semigroup(s), f) => {
            no_dot(f, "a semigroup")?;
            to_json(&SemigroupJson::from_semigroup(&s))
        }
        (Structure::Groupoid(g), Format::Json) => to_json(&GroupoidJson::from_groupoid(&g)),
        (Structure::Groupoid(g), Format::Dot) => groupoid_dot(&name, &g),
    })
}

/// The Stone groupoid of a semigroup.
pub fn dual(arg: &str, format: Format) -> Outcome {
    let (name, s) = input(load_semigroup(arg))?;
    let g = check(stone_groupoid(&s))?.groupoid;
    Ok(match format {
        Format::Json => to_json(&GroupoidJson::from_groupoid(&g)),
        Format::Dot => groupoid_dot(&format!("G({name})"), &g),
    })
}

/// The semigroup of local bisections of a groupoid.
pub fn kb_cmd(arg: &str, cap: usize, format: Format) -> Outcome {
    no_dot(format, "a semigroup")?;
    let (_, g) = input(load_groupoid(arg))?;
    let t = check(kb(&g, cap))?;
    Ok(to_json(&SemigroupJson::from_semigroup(&t.semigroup)))
}

pub fn roundtrip(arg: &str) -> Outcome {
    let Loaded { name, structure } = input(load(arg))?;
    match structure {
        Structure::Semigroup(s) => {
            let al = check(alpha(&s).with_context(|| format!("{name}: KB(G(S)) ≇ S")))?;
            Ok(format!("pass |S|={} |KB(G(S))|={}\n", s.size(), al.kb.semigroup.size()))
        }
        Structure::Groupoid(g) => {
            let be = check(beta(&g).with_context(|| format!("{name}: G(KB(G)) ≇ G")))?;
            Ok(format!("pass |G|={} |G(KB(G))|={}\n", g.size(), be.stone.groupoid.size()))
        }
    }
}

#[derive(Serialize)]
struct CorrespondenceJson {
    lhs: &'static str,
    rhs: &'static str,
    lhs_value: bool,
    rhs_value: bool,
    holds: bool,
}

#[derive(Serialize)]
struct ClassifyReport {
    instance: String,
    predicates: BTreeMap<&'static str, bool>,
    correspondences: Vec<CorrespondenceJson>,
}

/// Predicate report; a groupoid is classified through `KB(G)`.
pub fn classify(arg: &str, cap: usize) -> Outcome {
    let Loaded { name, structure } = input(load(arg))?;
    let (name, s) = match structure {
        Structure::Semigroup(s) => (name, s),
        Structure::Groupoid(g) => (format!("KB({name})"), check(kb(&g, cap))?.semigroup),
    };
    let report = check(verify_correspondences(&s))?;
    let predicates = BTreeMap::from([
        ("boolean", s.is_boolean()),
        ("monoid", s.identity().is_some()),
        ("fundamental", s.is_fundamental()),
        ("0-simplifying", s.is_zero_simplifying()),
        ("simple", s.is_simple()),
        ("basic", s.is_basic()),
        ("semisimple", s.is_semisimple()),
        ("meet-semigroup", s.is_meet_semigroup()),
        ("purely-infinite", s.is_purely_infinite()),
    ]);
    let correspondences = report
        .rows
        .iter()
        .map(|r| CorrespondenceJson {
            lhs: r.lhs,
            rhs: r.rhs,
            lhs_value: r.lhs_value,
            rhs_value: r.rhs_value,
            holds: r.holds(),
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&ClassifyReport { instance: name, predicates, correspondences })
        .expect("plain data serializes");
    text.push('\n');
    if report.all_hold() {
        Ok(text)
    } else {
        Err(Failure::Check(anyhow!("a correspondence fails:\n{text}")))
    }
}

#[derive(Serialize)]
struct FiniteUnitizationJson {
    instance: String,
    size: usize,
    identity: usize,
    embedding: Vec<usize>,
    monoid: SemigroupJson,
}

#[derive(Serialize)]
struct SymbolicSampleJson {
    host: &'static str,
    seed: u64,
    x: UnitizedJson,
    y: UnitizedJson,
    product: UnitizedJson,
    formula_agrees: bool,
}

/// `arg` is a finite semigroup, or `Ifin` for a seeded symbolic product.
pub fn unitize(arg: &str, seed: u64, format: Format) -> Outcome {
    no_dot(format, "a unitization")?;
    if arg == "Ifin" {
        let mut rng = seeded_rng(seed);
        let x = random_unitized(&mut rng, SYMBOLIC_SUPPORT);
        let y = random_unitized(&mut rng, SYMBOLIC_SUPPORT);
        let product = compose_direct(&x, &y);
        let formula_agrees = compose_formula(&x, &y) == product;
        let sample = SymbolicSampleJson {
            host: "Ifin",
            seed,
            x: UnitizedJson::from_elem(&x),
            y: UnitizedJson::from_elem(&y),
            product: UnitizedJson::from_elem(&product),
            formula_agrees,
        };
        let text = to_json(&sample);
        return if formula_agrees { Ok(text) } else { Err(Failure::Check(anyhow!("products disagree:\n{text}"))) };
    }
    let (name, s) = input(load_semigroup(arg))?;
    let u = check(unitize_finite(&s))?;
    Ok(to_json(&FiniteUnitizationJson {
        instance: name,
        size: u.monoid.size(),
        identity: u.identity(),
        embedding: u.embedding.clone(),
        monoid: SemigroupJson::from_semigroup(&u.monoid),
    }))
}

fn resolve(s: &FinInvSemi, token: &str) -> anyhow::Result<usize> {
    let names = s.names().unwrap_or_default();
    if let Some(i) = names.iter().position(|n| n == token) {
        return Ok(i);
    }
    match token.parse::<usize>() {
        Ok(i) if i < s.size() => Ok(i),
        _ => Err(anyhow!("`{token}` is neither an element name nor an index below {}", s.size())),
    }
}

/// The quotient by the additive ideal generated by `generators`.
pub fn quotient_cmd(arg: &str, generators: &[String], format: Format) -> Outcome {
    no_dot(format, "a semigroup")?;
    let (_, s) = input(load_semigroup(arg))?;
    let gens = input(generators.iter().map(|t| resolve(&s, t)).collect::<anyhow::Result<Vec<_>>>())?;
    let ideal = s.additive_ideal_closure(&gens);
    let q = check(quotient(&s, &ideal))?;
    Ok(to_json(&SemigroupJson::from_semigroup(&q.semigroup)))
}

#[derive(Serialize)]
struct DualMorphismJson {
    source: String,
    target: String,
    map: Vec<usize>,
    round_trip: bool,
}

/// Dualizes a callitic morphism into a covering functor, or a covering
/// functor into a callitic morphism. Reverses direction.
pub fn dualmor(path: &str, cap: usize, format: Format) -> Outcome {
    no_dot(format, "a morphism")?;
    let text = input(std::fs::read_to_string(path).with_context(|| format!("reading {path}")))?;
    let m: MorphismJson = input(serde_json::from_str(&text).with_context(|| format!("parsing {path}")))?;
    let source = input(load(&m.source))?.structure;
    let target = input(load(&m.target))?.structure;
    let out = match (&source, &target) {
        (Structure::Semigroup(s), Structure::Semigroup(t)) => {
            let theta = input(SemigroupMorphism::new(s, t, m.map.clone()).map_err(Into::into))?;
            let (gs, gt) = (check(stone_groupoid(s))?, check(stone_groupoid(t))?);
            let star = check(dual_morphism(&theta, &gs, &gt))?;
            DualMorphismJson {
                source: format!("G({})", m.target),
                target: format!("G({})", m.source),
                map: star.map().to_vec(),
                round_trip: check(morphism_round_trip(&theta))?,
            }
        }
        (Structure::Groupoid(g), Structure::Groupoid(h)) => {
            let phi = input(GroupoidFunctor::new(g, h, m.map.clone()).map_err(Into::into))?;
            let (kg, kh) = (check(kb(g, cap))?, check(kb(h, cap))?);
            let star = check(dual_functor(&phi, &kh, &kg))?;
            DualMorphismJson {
                source: format!("KB({})", m.target),
                target: format!("KB({})", m.source),
                map: (0..kh.semigroup.size()).map(|x| star.apply(x)).collect(),
                round_trip: check(functor_round_trip(&phi))?,
            }
        }
        _ => return Err(Failure::Input(anyhow!("source and target must both be semigroups or both groupoids"))),
    };
    let text = to_json(&out);
    if out.round_trip {
        Ok(text)
    } else {
        Err(Failure::Check(anyhow!("the morphism round trip fails:\n{text}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(make("NoSuchThing", Format::Json).unwrap_err().exit_code(), 2);
        assert_eq!(kb_cmd("I_2", 100, Format::Json).unwrap_err().exit_code(), 2);
        assert_eq!(kb_cmd("Pair(4)", 10, Format::Json).unwrap_err().exit_code(), 1);
    }

    #[test]
    fn make_sizes() {
        let s: SemigroupJson = serde_json::from_str(&make("I_2", Format::Json).unwrap()).unwrap();
        assert_eq!(s.size, 7);
        let g: GroupoidJson = serde_json::from_str(&make("Pair(2)", Format::Json).unwrap()).unwrap();
        assert_eq!(g.size, 4);
        let r: SemigroupJson = serde_json::from_str(&make("Rook(2,Z2)", Format::Json).unwrap()).unwrap();
        assert_eq!(r.size, 17);
    }

    #[test]
    fn quotient_by_named_generators() {
        let s: SemigroupJson = serde_json::from_str(&quotient_cmd("I_2xI_2", &["0".into()], Format::Json).unwrap()).unwrap();
        assert_eq!(s.size, 49);
        let err = quotient_cmd("I_2", &["nope".into()], Format::Json).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
