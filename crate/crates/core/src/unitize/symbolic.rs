//! The unitization of `ℐ^fin(ℕ)`, the partial bijections of `ℕ` with finite
//! domain, carried out symbolically.
//!
//! An element outside the original semigroup is `s ⊕ e′` for a finite set
//! `e` and `s` with domain and range inside `e`: it acts as `s` on `e` and as
//! the identity off `e`. The canonical `e` is the set of points where the map
//! is not the identity, so equality is syntactic.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::genbool::{canonical_set, FinCofin};
use crate::{Error, Result};

/// A partial bijection of `ℕ` with finite domain, stored as a graph sorted
/// by source.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FinSupportPB {
    graph: Vec<(u32, u32)>,
}

impl FinSupportPB {
    pub fn new(pairs: &[(u32, u32)]) -> Result<Self> {
        let mut graph = pairs.to_vec();
        graph.sort_unstable();
        graph.dedup();
        let sources: BTreeSet<u32> = graph.iter().map(|p| p.0).collect();
        let targets: BTreeSet<u32> = graph.iter().map(|p| p.1).collect();
        if sources.len() != graph.len() || targets.len() != graph.len() {
            return Err(Error::Precondition(format!("{pairs:?} is not injective in both directions")));
        }
        Ok(Self { graph })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The partial identity on `set`.
    pub fn identity_on(set: &[u32]) -> Self {
        Self { graph: canonical_set(set.to_vec()).into_iter().map(|x| (x, x)).collect() }
    }

    pub fn graph(&self) -> &[(u32, u32)] {
        &self.graph
    }

    pub fn apply(&self, n: u32) -> Option<u32> {
        self.graph.binary_search_by_key(&n, |p| p.0).ok().map(|i| self.graph[i].1)
    }

    pub fn domain(&self) -> Vec<u32> {
        self.graph.iter().map(|p| p.0).collect()
    }

    pub fn range(&self) -> Vec<u32> {
        canonical_set(self.graph.iter().map(|p| p.1).collect())
    }

    /// `self · other`: apply `other` first.
    pub fn compose(&self, other: &FinSupportPB) -> FinSupportPB {
        let graph = other.graph.iter().filter_map(|&(x, y)| self.apply(y).map(|z| (x, z))).collect();
        Self { graph }
    }

    pub fn inverse(&self) -> FinSupportPB {
        let mut graph: Vec<(u32, u32)> = self.graph.iter().map(|&(x, y)| (y, x)).collect();
        graph.sort_unstable();
        Self { graph }
    }

    /// `self · id_A` for `A = {n : keep(n)}`.
    pub fn restrict_domain(&self, keep: impl Fn(u32) -> bool) -> FinSupportPB {
        Self { graph: self.graph.iter().copied().filter(|p| keep(p.0)).collect() }
    }

    /// `id_A · self` for `A = {n : keep(n)}`.
    pub fn restrict_range(&self, keep: impl Fn(u32) -> bool) -> FinSupportPB {
        Self { graph: self.graph.iter().copied().filter(|p| keep(p.1)).collect() }
    }

    /// `self ⊕ other`; `None` unless domains and ranges are disjoint.
    pub fn orthogonal_join(&self, other: &FinSupportPB) -> Option<FinSupportPB> {
        let mut pairs = self.graph.clone();
        pairs.extend_from_slice(&other.graph);
        let joined = Self::new(&pairs).ok()?;
        (joined.graph.len() == self.graph.len() + other.graph.len()).then_some(joined)
    }

    pub fn is_partial_identity(&self) -> bool {
        self.graph.iter().all(|&(x, y)| x == y)
    }

    fn points(&self) -> impl Iterator<Item = u32> + '_ {
        self.graph.iter().flat_map(|&(x, y)| [x, y])
    }
}

/// An element of the unitization of `ℐ^fin(ℕ)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UnitizedElem {
    Inner(FinSupportPB),
    Outer { e: Vec<u32>, s: FinSupportPB },
}

impl UnitizedElem {
    pub fn inner(s: FinSupportPB) -> Self {
        UnitizedElem::Inner(s)
    }

    /// `s ⊕ e′` in canonical form. Requires domain and range of `s` inside `e`.
    pub fn outer(e: &[u32], s: FinSupportPB) -> Result<Self> {
        let e = canonical_set(e.to_vec());
        if s.points().any(|x| e.binary_search(&x).is_err()) {
            return Err(Error::Precondition("domain and range must lie inside e".into()));
        }
        let e = e.into_iter().filter(|&x| s.apply(x) != Some(x)).collect();
        let s = s.restrict_domain(|x| s.apply(x) != Some(x));
        Ok(UnitizedElem::Outer { e, s })
    }

    /// The identity map of `ℕ`.
    pub fn identity() -> Self {
        UnitizedElem::Outer { e: Vec::new(), s: FinSupportPB::empty() }
    }

    pub fn apply(&self, n: u32) -> Option<u32> {
        match self {
            UnitizedElem::Inner(s) => s.apply(n),
            UnitizedElem::Outer { e, s } if e.binary_search(&n).is_ok() => s.apply(n),
            UnitizedElem::Outer { .. } => Some(n),
        }
    }

    pub fn is_inner(&self) -> bool {
        matches!(self, UnitizedElem::Inner(_))
    }

    pub fn inverse(&self) -> Self {
        match self {
            UnitizedElem::Inner(s) => UnitizedElem::Inner(s.inverse()),
            UnitizedElem::Outer { e, s } => UnitizedElem::Outer { e: e.clone(), s: s.inverse() },
        }
    }

    /// Idempotents are the partial identities, finite or cofinite.
    pub fn is_idempotent(&self) -> bool {
        match self {
            UnitizedElem::Inner(s) => s.is_partial_identity(),
            UnitizedElem::Outer { s, .. } => s.graph().is_empty(),
        }
    }

    fn points(&self) -> Vec<u32> {
        match self {
            UnitizedElem::Inner(s) => s.points().collect(),
            UnitizedElem::Outer { e, s } => e.iter().copied().chain(s.points()).collect(),
        }
    }
}

/// `xy` by composing the two maps pointwise (apply `y`, then `x`). Off the
/// finitely many points either operand mentions, both act as the identity
/// or are undefined.
pub fn compose_direct(x: &UnitizedElem, y: &UnitizedElem) -> UnitizedElem {
    let mut window = x.points();
    window.extend(y.points());
    let window = canonical_set(window);
    let graph: Vec<(u32, u32)> =
        window.iter().filter_map(|&n| y.apply(n).and_then(|m| x.apply(m)).map(|k| (n, k))).collect();
    let s = FinSupportPB::new(&graph).expect("a composite of partial bijections is one");
    if x.is_inner() || y.is_inner() {
        UnitizedElem::Inner(s)
    } else {
        UnitizedElem::outer(&window, s).expect("composite stays inside the window")
    }
}

/// `xy` by the orthogonal-join formula
/// `(s ⊕ e′)(t ⊕ f′) = (s ⊕ (e∨f)e′)(t ⊕ (e∨f)f′) ⊕ e′f′`, with the mixed
/// cases `s(t ⊕ f′) = st ⊕ s·f′` and `(s ⊕ e′)t = st ⊕ e′·t`.
pub fn compose_formula(x: &UnitizedElem, y: &UnitizedElem) -> UnitizedElem {
    use UnitizedElem::{Inner, Outer};
    let outside = |set: &[u32]| {
        let set = set.to_vec();
        move |n: u32| set.binary_search(&n).is_err()
    };
    let join = |a: &FinSupportPB, b: &FinSupportPB| a.orthogonal_join(b).expect("summands are orthogonal");
    match (x, y) {
        (Inner(s), Inner(t)) => Inner(s.compose(t)),
        (Inner(s), Outer { e: f, s: t }) => Inner(join(&s.compose(t), &s.restrict_domain(outside(f)))),
        (Outer { e, s }, Inner(t)) => Inner(join(&s.compose(t), &t.restrict_range(outside(e)))),
        (Outer { e, s }, Outer { e: f, s: t }) => {
            let big = canonical_set(e.iter().chain(f).copied().collect());
            let a = join(s, &FinSupportPB::identity_on(&big).restrict_domain(outside(e)));
            let b = join(t, &FinSupportPB::identity_on(&big).restrict_domain(outside(f)));
            UnitizedElem::outer(&big, a.compose(&b)).expect("product stays inside e ∨ f")
        }
    }
}

/// The product of the unitized semigroup.
pub fn compose_unitized(x: &UnitizedElem, y: &UnitizedElem) -> UnitizedElem {
    compose_direct(x, y)
}

/// Units are the finitary permutations: `s ⊕ e′` with `s` a bijection of `e`.
pub fn is_unit_unitized(x: &UnitizedElem) -> bool {
    match x {
        UnitizedElem::Inner(_) => false,
        UnitizedElem::Outer { e, s } => s.domain() == *e && s.range() == *e,
    }
}

/// The idempotent as a finite or cofinite subset of `ℕ`.
pub fn to_fincofin(x: &UnitizedElem) -> Option<FinCofin> {
    if !x.is_idempotent() {
        return None;
    }
    Some(match x {
        UnitizedElem::Inner(s) => FinCofin::fin(s.domain()),
        UnitizedElem::Outer { e, .. } => FinCofin::cofin(e.clone()),
    })
}

pub fn from_fincofin(f: &FinCofin) -> UnitizedElem {
    match f {
        FinCofin::Fin(xs) => UnitizedElem::Inner(FinSupportPB::identity_on(xs)),
        FinCofin::Cofin(xs) => UnitizedElem::Outer { e: xs.clone(), s: FinSupportPB::empty() },
    }
}

fn random_subset<R: Rng + ?Sized>(rng: &mut R, support: u32) -> Vec<u32> {
    (0..support).filter(|_| rng.random::<bool>()).collect()
}

/// A random partial bijection with domain and range inside `points`.
pub fn random_pb_within<R: Rng + ?Sized>(rng: &mut R, points: &[u32]) -> FinSupportPB {
    let dom: Vec<u32> = points.iter().copied().filter(|_| rng.random::<bool>()).collect();
    let mut targets = points.to_vec();
    targets.shuffle(rng);
    let pairs: Vec<(u32, u32)> = dom.into_iter().zip(targets).collect();
    FinSupportPB::new(&pairs).expect("distinct sources and targets")
}

/// A random canonical element with all points below `support`.
pub fn random_unitized<R: Rng + ?Sized>(rng: &mut R, support: u32) -> UnitizedElem {
    let e = random_subset(rng, support);
    let s = random_pb_within(rng, &e);
    if rng.random::<bool>() {
        UnitizedElem::Inner(s)
    } else {
        UnitizedElem::outer(&e, s).expect("s lives on e")
    }
}

/// A random finitary permutation with all moved points below `support`.
pub fn random_unit<R: Rng + ?Sized>(rng: &mut R, support: u32) -> UnitizedElem {
    let e = random_subset(rng, support);
    let mut images = e.clone();
    images.shuffle(rng);
    let pairs: Vec<(u32, u32)> = e.iter().copied().zip(images).collect();
    UnitizedElem::outer(&e, FinSupportPB::new(&pairs).expect("a permutation")).expect("s lives on e")
}
