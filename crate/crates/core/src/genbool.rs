//! Generalized Boolean algebras: distributive lattices with bottom in which
//! every principal order-ideal is a Boolean algebra.
//!
//! Symbolic instances ([`FiniteSets`], [`FinCofinAlg`], [`Unitization`]) keep
//! sets as sorted `Vec<u32>` so equality is syntactic. Law checks on them
//! sample supports inside a window (default `{0..15}`).

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use rand::Rng;

use crate::boolalg::FinBoolAlg;
use crate::order::FinPoset;
use crate::{Error, Result};

/// Default sampling window `{0..15}` for symbolic instances.
pub const DEFAULT_WINDOW: u32 = 16;

/// The operations of a generalized Boolean algebra.
pub trait Gba {
    type Elem: Clone + Eq + Debug;

    fn zero(&self) -> Self::Elem;
    fn meet(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn join(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// `x \ y`.
    fn relcomplement(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    /// The top element, if the algebra is unital.
    fn top(&self) -> Option<Self::Elem>;
    /// Every element, for finite instances.
    fn elements(&self) -> Option<Vec<Self::Elem>>;
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Elem;

    fn leq(&self, x: &Self::Elem, y: &Self::Elem) -> bool {
        self.meet(x, y) == *x
    }
}

/// `d` with `c ∧ d = b` and `c ∨ d = a`, namely `(a \ c) ∨ b`.
pub fn interval_complement<G: Gba>(g: &G, b: &G::Elem, c: &G::Elem, a: &G::Elem) -> Result<G::Elem> {
    if !g.leq(b, c) || !g.leq(c, a) {
        return Err(Error::Precondition(format!("need {b:?} ≤ {c:?} ≤ {a:?}")));
    }
    Ok(g.join(&g.relcomplement(a, c), b))
}

fn union(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn intersection(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

fn difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().copied().filter(|x| b.binary_search(x).is_err()).collect()
}

fn random_subset<R: Rng>(rng: &mut R, window: u32) -> Vec<u32> {
    (0..window).filter(|_| rng.random::<bool>()).collect()
}

/// Sorts and deduplicates a list of naturals into a canonical set.
pub fn canonical_set(mut xs: Vec<u32>) -> Vec<u32> {
    xs.sort_unstable();
    xs.dedup();
    xs
}

impl Gba for FinBoolAlg {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn meet(&self, x: &u64, y: &u64) -> u64 {
        x & y
    }
    fn join(&self, x: &u64, y: &u64) -> u64 {
        x | y
    }
    fn relcomplement(&self, x: &u64, y: &u64) -> u64 {
        x & !y
    }
    fn top(&self) -> Option<u64> {
        Some(FinBoolAlg::top(self))
    }
    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..=FinBoolAlg::top(self)).collect())
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> u64 {
        rng.random::<u64>() & FinBoolAlg::top(self)
    }
}

/// Finite subsets of ℕ, optionally restricted to subsets of `{0..bound-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteSets {
    bound: Option<u32>,
    window: u32,
}

impl FiniteSets {
    /// All finite subsets of ℕ: no top element.
    pub fn unbounded() -> Self {
        Self { bound: None, window: DEFAULT_WINDOW }
    }

    /// Subsets of `{0..bound-1}`, a finite Boolean algebra.
    pub fn bounded(bound: u32) -> Self {
        Self { bound: Some(bound), window: bound }
    }

    pub fn with_window(mut self, window: u32) -> Self {
        self.window = window;
        self
    }

    pub fn bound(&self) -> Option<u32> {
        self.bound
    }
}

impl Gba for FiniteSets {
    type Elem = Vec<u32>;

    fn zero(&self) -> Vec<u32> {
        Vec::new()
    }
    fn meet(&self, x: &Vec<u32>, y: &Vec<u32>) -> Vec<u32> {
        intersection(x, y)
    }
    fn join(&self, x: &Vec<u32>, y: &Vec<u32>) -> Vec<u32> {
        union(x, y)
    }
    fn relcomplement(&self, x: &Vec<u32>, y: &Vec<u32>) -> Vec<u32> {
        difference(x, y)
    }
    fn top(&self) -> Option<Vec<u32>> {
        self.bound.map(|b| (0..b).collect())
    }
    fn elements(&self) -> Option<Vec<Vec<u32>>> {
        let b = self.bound?;
        Some(
            (0u64..1 << b)
                .map(|m| (0..b).filter(|i| m & (1 << i) != 0).collect())
                .collect(),
        )
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Vec<u32> {
        random_subset(rng, self.window)
    }
}

/// A finite or cofinite subset of ℕ. `Cofin(s)` is `ℕ \ s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FinCofin {
    Fin(Vec<u32>),
    Cofin(Vec<u32>),
}

impl FinCofin {
    pub fn fin(xs: Vec<u32>) -> Self {
        Self::Fin(canonical_set(xs))
    }

    pub fn cofin(xs: Vec<u32>) -> Self {
        Self::Cofin(canonical_set(xs))
    }

    pub fn contains(&self, n: u32) -> bool {
        match self {
            Self::Fin(s) => s.binary_search(&n).is_ok(),
            Self::Cofin(s) => s.binary_search(&n).is_err(),
        }
    }

    /// The finite set that describes the value (its members or its gaps).
    pub fn support(&self) -> &[u32] {
        match self {
            Self::Fin(s) | Self::Cofin(s) => s,
        }
    }

    pub fn complement(&self) -> Self {
        match self {
            Self::Fin(s) => Self::Cofin(s.clone()),
            Self::Cofin(s) => Self::Fin(s.clone()),
        }
    }
}

/// The Boolean algebra of finite and cofinite subsets of ℕ.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FinCofinAlg {
    pub window: u32,
}

impl Default for FinCofinAlg {
    fn default() -> Self {
        Self { window: DEFAULT_WINDOW }
    }
}

impl Gba for FinCofinAlg {
    type Elem = FinCofin;

    fn zero(&self) -> FinCofin {
        FinCofin::Fin(Vec::new())
    }
    fn meet(&self, x: &FinCofin, y: &FinCofin) -> FinCofin {
        use FinCofin::*;
        match (x, y) {
            (Fin(a), Fin(b)) => Fin(intersection(a, b)),
            (Fin(a), Cofin(b)) | (Cofin(b), Fin(a)) => Fin(difference(a, b)),
            (Cofin(a), Cofin(b)) => Cofin(union(a, b)),
        }
    }
    fn join(&self, x: &FinCofin, y: &FinCofin) -> FinCofin {
        use FinCofin::*;
        match (x, y) {
            (Fin(a), Fin(b)) => Fin(union(a, b)),
            (Fin(a), Cofin(b)) | (Cofin(b), Fin(a)) => Cofin(difference(b, a)),
            (Cofin(a), Cofin(b)) => Cofin(intersection(a, b)),
        }
    }
    fn relcomplement(&self, x: &FinCofin, y: &FinCofin) -> FinCofin {
        self.meet(x, &y.complement())
    }
    fn top(&self) -> Option<FinCofin> {
        Some(FinCofin::Cofin(Vec::new()))
    }
    fn elements(&self) -> Option<Vec<FinCofin>> {
        None
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> FinCofin {
        let s = random_subset(rng, self.window);
        if rng.random::<bool>() {
            FinCofin::Fin(s)
        } else {
            FinCofin::Cofin(s)
        }
    }
}

/// An element of the unitization: `Plain(e)` is `e`, `Co(e)` is `e′`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UnitElem<E> {
    Plain(E),
    Co(E),
}

/// The Boolean algebra `C` whose elements are `e` or `e′` for `e` in `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Unitization<G> {
    pub base: G,
}

impl<G: Gba> Unitization<G> {
    pub fn embed(&self, e: G::Elem) -> UnitElem<G::Elem> {
        UnitElem::Plain(e)
    }

    pub fn complement(&self, x: &UnitElem<G::Elem>) -> UnitElem<G::Elem> {
        match x {
            UnitElem::Plain(e) => UnitElem::Co(e.clone()),
            UnitElem::Co(e) => UnitElem::Plain(e.clone()),
        }
    }
}

impl<G: Gba> Gba for Unitization<G> {
    type Elem = UnitElem<G::Elem>;

    fn zero(&self) -> Self::Elem {
        UnitElem::Plain(self.base.zero())
    }
    fn meet(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        use UnitElem::*;
        let b = &self.base;
        match (x, y) {
            (Plain(e), Plain(f)) => Plain(b.meet(e, f)),
            (Plain(e), Co(f)) | (Co(f), Plain(e)) => Plain(b.relcomplement(e, f)),
            (Co(e), Co(f)) => Co(b.join(e, f)),
        }
    }
    fn join(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        use UnitElem::*;
        let b = &self.base;
        match (x, y) {
            (Plain(e), Plain(f)) => Plain(b.join(e, f)),
            (Plain(e), Co(f)) | (Co(f), Plain(e)) => Co(b.relcomplement(f, e)),
            (Co(e), Co(f)) => Co(b.meet(e, f)),
        }
    }
    fn relcomplement(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem {
        self.meet(x, &self.complement(y))
    }
    fn top(&self) -> Option<Self::Elem> {
        Some(UnitElem::Co(self.base.zero()))
    }
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let base = self.base.elements()?;
        Some(
            base.iter()
                .cloned()
                .map(UnitElem::Plain)
                .chain(base.iter().cloned().map(UnitElem::Co))
                .collect(),
        )
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Elem {
        let e = self.base.sample(rng);
        if rng.random::<bool>() {
            UnitElem::Plain(e)
        } else {
            UnitElem::Co(e)
        }
    }
}

/// Result of [`unitize_gba`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Unitized<G> {
    /// Complements were adjoined; the embedding is `e ↦ Plain(e)`.
    Adjoined(Unitization<G>),
    /// The input already has a top; the embedding is the identity.
    AlreadyUnital { base: G, warning: String },
}

/// Embeds a generalized Boolean algebra as an ideal and subalgebra of a
/// unital one.
pub fn unitize_gba<G: Gba + Clone>(g: &G) -> Unitized<G> {
    match g.top() {
        Some(top) => Unitized::AlreadyUnital {
            base: g.clone(),
            warning: format!("already unital with top {top:?}; using the identity embedding"),
        },
        None => Unitized::Adjoined(Unitization { base: g.clone() }),
    }
}

/// Checks the unitization on element pairs of the base: the embedding
/// preserves `0, ∧, ∨, \`, its image is an order-ideal, and `C` satisfies
/// the Boolean identities.
pub fn verify_unitization<G: Gba>(u: &Unitization<G>, base_elems: &[G::Elem]) -> Result<()> {
    let all: Vec<UnitElem<G::Elem>> = base_elems
        .iter()
        .cloned()
        .map(UnitElem::Plain)
        .chain(base_elems.iter().cloned().map(UnitElem::Co))
        .collect();
    let b = &u.base;
    let top = u.top().expect("unital");
    for x in base_elems {
        for y in base_elems {
            let (ex, ey) = (u.embed(x.clone()), u.embed(y.clone()));
            if u.meet(&ex, &ey) != u.embed(b.meet(x, y))
                || u.join(&ex, &ey) != u.embed(b.join(x, y))
                || u.relcomplement(&ex, &ey) != u.embed(b.relcomplement(x, y))
            {
                return Err(Error::NotHomomorphism(format!("embedding fails at ({x:?}, {y:?})")));
            }
        }
    }
    for x in &all {
        if u.join(x, &u.complement(x)) != top || u.meet(x, &u.complement(x)) != u.zero() {
            return Err(Error::NotBoolean(format!("{x:?} is not complemented")));
        }
        for e in base_elems {
            if u.leq(x, &u.embed(e.clone())) && matches!(x, UnitElem::Co(_)) {
                return Err(Error::Precondition(format!("{x:?} lies below the image but outside it")));
            }
        }
        for y in &all {
            if let Some(msg) = identity_failure(u, x, y) {
                return Err(Error::NotBoolean(msg));
            }
        }
    }
    Ok(())
}

fn identity_failure<G: Gba>(g: &G, x: &G::Elem, y: &G::Elem) -> Option<String> {
    let d = g.relcomplement(x, y);
    if g.meet(y, &d) != g.zero() {
        return Some(format!("y ∧ (x\\y) ≠ 0 at ({x:?}, {y:?})"));
    }
    if g.join(&g.meet(x, y), &d) != *x {
        return Some(format!("x ≠ (x∧y) ∨ (x\\y) at ({x:?}, {y:?})"));
    }
    if g.meet(x, y) != g.meet(y, x) || g.join(x, y) != g.join(y, x) {
        return Some(format!("not commutative at ({x:?}, {y:?})"));
    }
    if g.join(x, &g.meet(x, y)) != *x || g.meet(x, &g.join(x, y)) != *x {
        return Some(format!("absorption fails at ({x:?}, {y:?})"));
    }
    None
}

/// A finite lattice with bottom, given by its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinPoset,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl FiniteLattice {
    pub fn from_poset(poset: FinPoset) -> Result<Self> {
        poset.bottom().ok_or(Error::NoBottom)?;
        let n = poset.size();
        let meet = poset
            .meet_table()
            .map_err(|(a, b)| Error::NotMeetSemilattice(format!("{a} ∧ {b} does not exist")))?;
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                join[a][b] = poset
                    .join(a, b)
                    .ok_or_else(|| Error::InvalidPoset(format!("{a} ∨ {b} does not exist")))?;
            }
        }
        Ok(Self { poset, meet, join })
    }

    /// Materializes a finite instance; element `i` is `g.elements()[i]`.
    pub fn from_gba<G: Gba>(g: &G) -> Result<(Self, Vec<G::Elem>)> {
        let elems = g.elements().ok_or(Error::Precondition("instance is not finite".into()))?;
        let poset = FinPoset::with_detected_bottom(elems.len(), |i, j| g.leq(&elems[i], &elems[j]))?;
        Ok((Self::from_poset(poset)?, elems))
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_poset(FinPoset::chain(n)).expect("chains are lattices")
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    pub fn size(&self) -> usize {
        self.poset.size()
    }

    pub fn bottom(&self) -> usize {
        self.poset.bottom().expect("checked at construction")
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z)))
            })
        })
    }

    /// Some `d` in `[b, a]` with `c ∧ d = b` and `c ∨ d = a`, if one exists.
    pub fn interval_complement(&self, b: usize, c: usize, a: usize) -> Option<usize> {
        (0..self.size()).find(|&d| {
            self.leq(b, d) && self.leq(d, a) && self.meet(c, d) == b && self.join(c, d) == a
        })
    }

    /// Filters of a finite lattice are principal; the generators of the
    /// prime proper ones, found by checking `x ∨ y ∈ F ⇒ x ∈ F or y ∈ F`.
    pub fn prime_filter_generators(&self) -> Vec<usize> {
        let n = self.size();
        (0..n)
            .filter(|&g| g != self.bottom())
            .filter(|&g| {
                (0..n).all(|x| {
                    (0..n).all(|y| !self.leq(g, self.join(x, y)) || self.leq(g, x) || self.leq(g, y))
                })
            })
            .collect()
    }

    /// Generators of the maximal proper filters, the atoms.
    pub fn ultrafilter_generators(&self) -> Vec<usize> {
        self.poset.atoms().expect("lattice has a bottom")
    }
}

/// Outcome of [`verify_gba_equivalences`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GbaReport {
    pub distributive: bool,
    /// Each non-zero principal order-ideal is a unital Boolean algebra.
    pub principal_ideals_boolean: bool,
    /// Every interval `[b, a]` is complemented.
    pub intervals_complemented: bool,
    pub counterexample: Option<String>,
}

impl GbaReport {
    pub fn passes(&self) -> bool {
        self.distributive && self.principal_ideals_boolean && self.intervals_complemented
    }
}

/// Checks, on a finite distributive lattice with bottom, that principal
/// ideals are Boolean and that intervals are complemented.
pub fn verify_lattice_equivalences(l: &FiniteLattice) -> GbaReport {
    let n = l.size();
    let zero = l.bottom();
    let mut report = GbaReport {
        distributive: l.is_distributive(),
        principal_ideals_boolean: true,
        intervals_complemented: true,
        counterexample: None,
    };
    'ideals: for a in (0..n).filter(|&a| a != zero) {
        for x in (0..n).filter(|&x| l.leq(x, a)) {
            if l.interval_complement(zero, x, a).is_none() {
                report.principal_ideals_boolean = false;
                report.counterexample = Some(format!("{x} has no complement in the ideal below {a}"));
                break 'ideals;
            }
        }
    }
    'intervals: for a in 0..n {
        for b in (0..n).filter(|&b| l.leq(b, a)) {
            for c in (0..n).filter(|&c| l.leq(b, c) && l.leq(c, a)) {
                if l.interval_complement(b, c, a).is_none() {
                    report.intervals_complemented = false;
                    report
                        .counterexample
                        .get_or_insert_with(|| format!("{c} has no complement in [{b}, {a}]"));
                    break 'intervals;
                }
            }
        }
    }
    report
}

/// How [`verify_gba_equivalences`] covers a symbolic instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub pairs: usize,
    pub seed: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Self { pairs: 2000, seed: crate::DEFAULT_SEED }
    }
}

/// Finite instances are checked exhaustively through their lattice;
/// symbolic ones by sampling the defining identities and the interval
/// complement formula.
pub fn verify_gba_equivalences<G: Gba>(g: &G, sampling: Sampling) -> Result<GbaReport> {
    if g.elements().is_some() {
        let (l, elems) = FiniteLattice::from_gba(g)?;
        let mut report = verify_lattice_equivalences(&l);
        for x in &elems {
            for y in &elems {
                if let Some(msg) = identity_failure(g, x, y) {
                    report.principal_ideals_boolean = false;
                    report.counterexample.get_or_insert(msg);
                }
            }
        }
        return Ok(report);
    }
    let mut rng = crate::seeded_rng(sampling.seed);
    let mut report = GbaReport {
        distributive: true,
        principal_ideals_boolean: true,
        intervals_complemented: true,
        counterexample: None,
    };
    for _ in 0..sampling.pairs {
        let (x, y, z) = (g.sample(&mut rng), g.sample(&mut rng), g.sample(&mut rng));
        if g.meet(&x, &g.join(&y, &z)) != g.join(&g.meet(&x, &y), &g.meet(&x, &z)) {
            report.distributive = false;
            report.counterexample.get_or_insert_with(|| format!("distributivity at {x:?}, {y:?}, {z:?}"));
        }
        if let Some(msg) = identity_failure(g, &x, &y) {
            report.principal_ideals_boolean = false;
            report.counterexample.get_or_insert(msg);
        }
        // b = x∧y∧z ≤ c = x∧y ≤ a = x
        let a = x.clone();
        let c = g.meet(&x, &y);
        let b = g.meet(&c, &z);
        let d = interval_complement(g, &b, &c, &a)?;
        if g.meet(&c, &d) != b || g.join(&c, &d) != a {
            report.intervals_complemented = false;
            report.counterexample.get_or_insert_with(|| format!("interval complement at {a:?}, {b:?}, {c:?}"));
        }
    }
    Ok(report)
}

/// The correspondence between filters of `a↓` and filters containing `a`,
/// recorded by generators (all filters of a finite lattice are principal).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterTransfer {
    /// Filters of `a↓` as explicit sets, indexed like `filters_above`.
    pub filters_below: Vec<Vec<usize>>,
    /// `F↑` for each `F` in `filters_below`.
    pub filters_above: Vec<Vec<usize>>,
    /// Indices of the pairs that are ultrafilters on each side.
    pub ultra_below: Vec<usize>,
    pub ultra_above: Vec<usize>,
}

impl FilterTransfer {
    pub fn ultrafilters_match(&self) -> bool {
        self.ultra_below == self.ultra_above
    }
}

/// Builds `F ↦ F↑` and `G ↦ G ∩ a↓` for a non-zero `a` and checks that they
/// are mutually inverse and match ultrafilters.
pub fn filter_transfer(l: &FiniteLattice, a: usize) -> Result<FilterTransfer> {
    if a >= l.size() {
        return Err(Error::IndexOutOfRange { index: a, size: l.size() });
    }
    if a == l.bottom() {
        return Err(Error::Precondition("a must be non-zero".into()));
    }
    let n = l.size();
    let below: Vec<usize> = (0..n).filter(|&x| l.leq(x, a)).collect();
    let p = l.poset();
    let mut out = FilterTransfer {
        filters_below: Vec::new(),
        filters_above: Vec::new(),
        ultra_below: Vec::new(),
        ultra_above: Vec::new(),
    };
    for &g in &below {
        let f_below: Vec<usize> = below.iter().copied().filter(|&x| l.leq(g, x)).collect();
        let f_above = p.closure_up(&f_below)?;
        if !p.is_filter(&f_above)? || !f_above.contains(&a) {
            return Err(Error::NotFilter(format!("{g}↑ does not transfer")));
        }
        let back: Vec<usize> = f_above.iter().copied().filter(|&x| l.leq(x, a)).collect();
        if back != f_below {
            return Err(Error::Precondition("the transfer maps are not mutually inverse".into()));
        }
        out.filters_below.push(f_below);
        out.filters_above.push(f_above);
    }
    let zero = l.bottom();
    for (i, (fb, fa)) in out.filters_below.iter().zip(&out.filters_above).enumerate() {
        // maximal proper among the filters of a↓
        let proper_b = !fb.contains(&zero);
        if proper_b
            && out
                .filters_below
                .iter()
                .all(|h| h.contains(&zero) || !fb.iter().all(|x| h.contains(x)) || h == fb)
        {
            out.ultra_below.push(i);
        }
        let proper_a = !fa.contains(&zero);
        if proper_a && p.is_maximal_proper(fa)? {
            out.ultra_above.push(i);
        }
    }
    Ok(out)
}

/// Decides `im(θ)↓ = C` over the given element lists after checking that
/// `θ` preserves `0, ∧, ∨, \` on the domain list. For symbolic domains the
/// list should contain the join of the sampled elements.
pub fn is_proper_hom<A: Gba, B: Gba>(
    a: &A,
    b: &B,
    theta: impl Fn(&A::Elem) -> B::Elem,
    domain: &[A::Elem],
    codomain: &[B::Elem],
) -> Result<bool> {
    if theta(&a.zero()) != b.zero() {
        return Err(Error::NotHomomorphism("0 is not preserved".into()));
    }
    for x in domain {
        for y in domain {
            let (tx, ty) = (theta(x), theta(y));
            if theta(&a.meet(x, y)) != b.meet(&tx, &ty) {
                return Err(Error::NotHomomorphism(format!("∧ fails at ({x:?}, {y:?})")));
            }
            if theta(&a.join(x, y)) != b.join(&tx, &ty) {
                return Err(Error::NotHomomorphism(format!("∨ fails at ({x:?}, {y:?})")));
            }
            if theta(&a.relcomplement(x, y)) != b.relcomplement(&tx, &ty) {
                return Err(Error::NotHomomorphism(format!("\\ fails at ({x:?}, {y:?})")));
            }
        }
    }
    let image: Vec<B::Elem> = domain.iter().map(&theta).collect();
    Ok(codomain.iter().all(|c| image.iter().any(|t| b.leq(c, t))))
}

/// Domain elements for [`is_proper_hom`]: every element of a finite
/// instance, otherwise `samples` draws plus their join.
pub fn element_list<G: Gba>(g: &G, samples: usize, seed: u64) -> Vec<G::Elem> {
    if let Some(all) = g.elements() {
        return all;
    }
    let mut rng = crate::seeded_rng(seed);
    let mut out: Vec<G::Elem> = (0..samples).map(|_| g.sample(&mut rng)).collect();
    let big = out.iter().fold(g.zero(), |acc, x| g.join(&acc, x));
    out.push(big);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fc() -> FinCofinAlg {
        FinCofinAlg::default()
    }

    #[test]
    fn relcomplement_examples() {
        let g = fc();
        let x = FinCofin::cofin(vec![0]);
        let y = FinCofin::fin(vec![1, 2]);
        assert_eq!(g.relcomplement(&x, &y), FinCofin::cofin(vec![0, 1, 2]));
        assert_eq!(g.relcomplement(&x, &g.zero()), x);
        assert_eq!(g.relcomplement(&x, &x), g.zero());
    }

    #[test]
    fn interval_complement_examples() {
        let s = FiniteSets::unbounded();
        assert_eq!(interval_complement(&s, &vec![], &vec![1], &vec![1, 2]).unwrap(), vec![2]);
        assert_eq!(interval_complement(&s, &vec![1], &vec![1], &vec![1, 2]).unwrap(), vec![1, 2]);
        let g = fc();
        let d = interval_complement(&g, &FinCofin::fin(vec![0]), &FinCofin::fin(vec![0, 1]), &FinCofin::cofin(vec![]))
            .unwrap();
        assert_eq!(d, FinCofin::cofin(vec![1]));
        assert!(interval_complement(&s, &vec![3], &vec![1], &vec![1, 2]).is_err());
    }

    #[test]
    fn equivalences() {
        assert!(verify_gba_equivalences(&FiniteSets::bounded(5), Sampling::default()).unwrap().passes());
        let chain = verify_lattice_equivalences(&FiniteLattice::chain(3));
        assert!(chain.distributive);
        assert!(!chain.passes());
        assert!(verify_gba_equivalences(&fc(), Sampling::default()).unwrap().passes());
        assert!(verify_gba_equivalences(&FiniteSets::unbounded(), Sampling::default()).unwrap().passes());
    }

    #[test]
    fn filter_transfer_examples() {
        let (l, elems) = FiniteLattice::from_gba(&FiniteSets::bounded(3)).unwrap();
        let idx = |s: &[u32]| elems.iter().position(|e| e.as_slice() == s).unwrap();
        let t = filter_transfer(&l, idx(&[0, 1])).unwrap();
        assert_eq!(t.ultra_below.len(), 2);
        assert!(t.ultrafilters_match());
        let t = filter_transfer(&l, idx(&[2])).unwrap();
        assert_eq!(t.ultra_below.len(), 1);
        assert!(t.ultrafilters_match());
        let t = filter_transfer(&l, idx(&[0, 1, 2])).unwrap();
        assert_eq!(t.filters_below, t.filters_above);
        assert!(filter_transfer(&l, idx(&[])).is_err());
    }

    #[test]
    fn proper_homomorphisms() {
        let small = FiniteSets::bounded(2);
        let big = FiniteSets::bounded(3);
        let dom = small.elements().unwrap();
        let cod = big.elements().unwrap();
        assert!(!is_proper_hom(&small, &big, |x| x.clone(), &dom, &cod).unwrap());
        let id = is_proper_hom(&big, &big, |x| x.clone(), &cod, &cod).unwrap();
        assert!(id);
        let fin = FiniteSets::unbounded();
        let dom = element_list(&fin, 64, 1);
        let cod = vec![FinCofin::cofin(vec![]), FinCofin::fin(vec![3])];
        assert!(!is_proper_hom(&fin, &fc(), |x| FinCofin::Fin(x.clone()), &dom, &cod).unwrap());
        let bad = is_proper_hom(&small, &big, |x| if x.is_empty() { vec![] } else { vec![0] }, &small.elements().unwrap(), &[]);
        assert!(matches!(bad, Err(Error::NotHomomorphism(_))));
    }

    #[test]
    fn unitization_of_finite_sets() {
        let Unitized::Adjoined(u) = unitize_gba(&FiniteSets::unbounded()) else {
            panic!("finite sets have no top");
        };
        assert_eq!(u.embed(vec![]), u.zero());
        assert_eq!(u.complement(&u.embed(vec![3])), UnitElem::Co(vec![3]));
        let samples = element_list(&FiniteSets::unbounded().with_window(6), 40, 7);
        verify_unitization(&u, &samples).unwrap();
        // matches the finite/cofinite algebra under Plain ↦ Fin, Co ↦ Cofin
        let to_fc = |x: &UnitElem<Vec<u32>>| match x {
            UnitElem::Plain(s) => FinCofin::Fin(s.clone()),
            UnitElem::Co(s) => FinCofin::Cofin(s.clone()),
        };
        let mut rng = crate::seeded_rng(3);
        for _ in 0..500 {
            let (x, y) = (u.sample(&mut rng), u.sample(&mut rng));
            assert_eq!(to_fc(&u.meet(&x, &y)), fc().meet(&to_fc(&x), &to_fc(&y)));
            assert_eq!(to_fc(&u.join(&x, &y)), fc().join(&to_fc(&x), &to_fc(&y)));
        }
        assert!(matches!(unitize_gba(&FiniteSets::bounded(2)), Unitized::AlreadyUnital { .. }));
    }

    #[test]
    fn prime_filters_are_ultrafilters() {
        for k in 0..=5 {
            let (l, _) = FiniteLattice::from_gba(&FiniteSets::bounded(k)).unwrap();
            assert_eq!(l.prime_filter_generators(), l.ultrafilter_generators());
        }
        let (l, elems) = FiniteLattice::from_gba(&FiniteSets::bounded(4)).unwrap();
        for g in l.ultrafilter_generators() {
            assert_eq!(elems[g].len(), 1);
        }
    }
}
