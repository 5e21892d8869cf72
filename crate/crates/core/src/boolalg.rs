//! Finite Boolean algebras in atom-canonical form, Boolean rings, and finite
//! Stone duality between homomorphisms and maps of atoms.
//!
//! A [`FinBoolAlg`] with `k` atoms has the bitmasks `0..2^k` as elements:
//! join is `|`, meet is `&`, complement flips the low `k` bits. Any other
//! finite presentation can be brought into this form with [`canonicalize`].

use alloc::format;
use alloc::vec::Vec;
use core::fmt::Debug;

use rand::Rng;

use crate::order::{FinPoset, PrincipalFilter};
use crate::{Error, Result};

/// Largest atom count accepted by [`FinBoolAlg::new`].
pub const MAX_ATOMS: u32 = 20;

/// The powerset Boolean algebra of a `k`-element set of atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FinBoolAlg {
    atoms: u32,
}

/// The operations of a Boolean algebra, `(B, ∨, ∧, ′, 0, 1)`.
pub trait BooleanStructure {
    type Elem: Copy + Eq + Debug;

    fn join(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn meet(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn complement(&self, x: Self::Elem) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Every element, for exhaustive checks.
    fn elements(&self) -> Vec<Self::Elem>;
    /// A random element, for sampled checks.
    fn sample<R: Rng>(&self, rng: &mut R) -> Self::Elem;
}

/// A unital Boolean ring `(R, +, ·, 0, 1)`.
pub trait BooleanRing {
    type Elem: Copy + Eq + Debug;

    fn add(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn elements(&self) -> Vec<Self::Elem>;
}

impl FinBoolAlg {
    pub fn new(atoms: u32) -> Result<Self> {
        if atoms > MAX_ATOMS {
            return Err(Error::CapExceeded {
                what: "Boolean algebra",
                size: 1usize << atoms.min(63),
                cap: 1usize << MAX_ATOMS,
            });
        }
        Ok(Self { atoms })
    }

    /// The two-element algebra `𝔹`.
    pub fn two() -> Self {
        Self { atoms: 1 }
    }

    pub fn atom_count(&self) -> u32 {
        self.atoms
    }

    pub fn size(&self) -> usize {
        1usize << self.atoms
    }

    pub fn top(&self) -> u64 {
        (1u64 << self.atoms) - 1
    }

    pub fn contains(&self, x: u64) -> bool {
        x <= self.top()
    }

    pub fn leq(&self, x: u64, y: u64) -> bool {
        x & !y == 0
    }

    pub fn is_atom(&self, x: u64) -> bool {
        x.count_ones() == 1 && self.contains(x)
    }

    /// The atoms in index order: atom `i` is the mask `1 << i`.
    pub fn atoms(&self) -> Vec<u64> {
        (0..self.atoms).map(|i| 1u64 << i).collect()
    }

    /// The order of the algebra as a poset whose element `m` is the mask `m`.
    pub fn poset(&self) -> FinPoset {
        FinPoset::powerset(self.atoms)
    }

    /// `𝒰_a`: the atoms below `a`.
    pub fn atoms_below(&self, a: u64) -> Vec<u64> {
        self.atoms().into_iter().filter(|&x| x & a != 0).collect()
    }

    /// The ring sum (symmetric difference) and product of `x` and `y`.
    pub fn to_ring(&self, x: u64, y: u64) -> (u64, u64) {
        let ring = RingOf(*self);
        (ring.add(x, y), ring.mul(x, y))
    }

    /// `(is_prime(a↑), is_atom(a))` for a non-zero `a`. The primality test is
    /// a direct scan over all pairs with `x ∨ y ∈ a↑`.
    pub fn prime_iff_atom(&self, a: u64) -> Result<(bool, bool)> {
        if a == 0 {
            return Err(Error::Precondition("a↑ is not proper when a = 0".into()));
        }
        if !self.contains(a) {
            return Err(Error::IndexOutOfRange { index: a as usize, size: self.size() });
        }
        let inside = |x: u64| self.leq(a, x);
        let elems = self.elements();
        let prime = elems.iter().all(|&x| {
            elems.iter().all(|&y| !inside(x | y) || inside(x) || inside(y))
        });
        Ok((prime, self.is_atom(a)))
    }

    /// `χ_F`: the homomorphism onto `𝔹` sending the members of the
    /// ultrafilter `F` to 1.
    pub fn ultrafilter_char(&self, f: PrincipalFilter) -> Result<BoolHom> {
        let g = f.generator as u64;
        if !self.is_atom(g) {
            return Err(Error::NotUltrafilter(format!("{g:#b}↑ is not generated by an atom")));
        }
        let map = (0..self.size() as u64).map(|x| self.leq(g, x) as u64).collect();
        Ok(BoolHom { source: *self, target: FinBoolAlg::two(), map })
    }

    /// The ultrafilter `θ⁻¹(1)` of a homomorphism onto `𝔹`.
    pub fn hom_to_ultrafilter(&self, theta: &BoolHom) -> Result<PrincipalFilter> {
        if theta.source != *self || theta.target != FinBoolAlg::two() {
            return Err(Error::Precondition("expected a homomorphism into 𝔹".into()));
        }
        theta.check_laws()?;
        let preimage: Vec<usize> =
            (0..self.size()).filter(|&x| theta.map[x] == 1).collect();
        let min = self.poset().filter_minimum(&preimage)?;
        Ok(PrincipalFilter::new(min))
    }
}

impl BooleanStructure for FinBoolAlg {
    type Elem = u64;

    fn join(&self, x: u64, y: u64) -> u64 {
        x | y
    }
    fn meet(&self, x: u64, y: u64) -> u64 {
        x & y
    }
    fn complement(&self, x: u64) -> u64 {
        !x & self.top()
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        self.top()
    }
    fn elements(&self) -> Vec<u64> {
        (0..=self.top()).collect()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> u64 {
        rng.random::<u64>() & self.top()
    }
}

/// Per-axiom outcome of [`verify_axioms`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult<E> {
    /// 1-based axiom number (B1..B10).
    pub axiom: u8,
    pub holds: bool,
    /// The first `(x, y, z)` that breaks the axiom; unused slots repeat `x`.
    pub counterexample: Option<(E, E, E)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport<E> {
    pub results: Vec<AxiomResult<E>>,
    pub exhaustive: bool,
}

impl<E> AxiomReport<E> {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    pub fn failing(&self) -> impl Iterator<Item = &AxiomResult<E>> {
        self.results.iter().filter(|r| !r.holds)
    }
}

/// How [`verify_axioms`] chooses its triples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { triples: usize, seed: u64 },
}

fn axiom_holds<B: BooleanStructure>(b: &B, axiom: u8, x: B::Elem, y: B::Elem, z: B::Elem) -> bool {
    let (j, m, c) = (|p, q| b.join(p, q), |p, q| b.meet(p, q), |p| b.complement(p));
    match axiom {
        1 => j(j(x, y), z) == j(x, j(y, z)),
        2 => j(x, y) == j(y, x),
        3 => j(x, b.zero()) == x,
        4 => m(m(x, y), z) == m(x, m(y, z)),
        5 => m(x, y) == m(y, x),
        6 => m(x, b.one()) == x,
        7 => m(x, j(y, z)) == j(m(x, y), m(x, z)),
        8 => j(x, m(y, z)) == m(j(x, y), j(x, z)),
        9 => j(x, c(x)) == b.one(),
        10 => m(x, c(x)) == b.zero(),
        _ => unreachable!("there are ten axioms"),
    }
}

/// Checks the ten Boolean algebra axioms B1–B10, either on every triple or on
/// a seeded sample of triples.
pub fn verify_axioms<B: BooleanStructure>(b: &B, mode: CheckMode) -> AxiomReport<B::Elem> {
    let mut results: Vec<AxiomResult<B::Elem>> =
        (1..=10).map(|axiom| AxiomResult { axiom, holds: true, counterexample: None }).collect();
    let mut record = |x, y, z| {
        for r in results.iter_mut().filter(|r| r.holds) {
            if !axiom_holds(b, r.axiom, x, y, z) {
                r.holds = false;
                r.counterexample = Some((x, y, z));
            }
        }
    };
    match mode {
        CheckMode::Exhaustive => {
            let elems = b.elements();
            for &x in &elems {
                for &y in &elems {
                    for &z in &elems {
                        record(x, y, z);
                    }
                }
            }
        }
        CheckMode::Sampled { triples, seed } => {
            let mut rng = crate::seeded_rng(seed);
            for _ in 0..triples {
                let (x, y, z) = (b.sample(&mut rng), b.sample(&mut rng), b.sample(&mut rng));
                record(x, y, z);
            }
        }
    }
    AxiomReport { results, exhaustive: mode == CheckMode::Exhaustive }
}

/// The Boolean ring of a Boolean algebra: `a + b = (a ∧ b′) ∨ (a′ ∧ b)`,
/// `a·b = a ∧ b`.
#[derive(Debug, Clone, Copy)]
pub struct RingOf<B>(pub B);

impl<B: BooleanStructure> BooleanRing for RingOf<B> {
    type Elem = B::Elem;

    fn add(&self, x: B::Elem, y: B::Elem) -> B::Elem {
        let b = &self.0;
        b.join(b.meet(x, b.complement(y)), b.meet(b.complement(x), y))
    }
    fn mul(&self, x: B::Elem, y: B::Elem) -> B::Elem {
        self.0.meet(x, y)
    }
    fn zero(&self) -> B::Elem {
        self.0.zero()
    }
    fn one(&self) -> B::Elem {
        self.0.one()
    }
    fn elements(&self) -> Vec<B::Elem> {
        self.0.elements()
    }
}

/// The Boolean algebra of a Boolean ring: `a ∨ b = a + b + ab`,
/// `a ∧ b = ab`, `a′ = 1 − a` (which is `1 + a` in characteristic 2).
#[derive(Debug, Clone, Copy)]
pub struct AlgebraOf<R>(pub R);

impl<R: BooleanRing> AlgebraOf<R> {
    /// `(join, meet, complement of x)` computed from the ring operations.
    pub fn from_ring(&self, x: R::Elem, y: R::Elem) -> (R::Elem, R::Elem, R::Elem) {
        (self.join(x, y), self.meet(x, y), self.complement(x))
    }
}

impl<R: BooleanRing> BooleanStructure for AlgebraOf<R> {
    type Elem = R::Elem;

    fn join(&self, x: R::Elem, y: R::Elem) -> R::Elem {
        let r = &self.0;
        r.add(r.add(x, y), r.mul(x, y))
    }
    fn meet(&self, x: R::Elem, y: R::Elem) -> R::Elem {
        self.0.mul(x, y)
    }
    fn complement(&self, x: R::Elem) -> R::Elem {
        self.0.add(self.0.one(), x)
    }
    fn zero(&self) -> R::Elem {
        self.0.zero()
    }
    fn one(&self) -> R::Elem {
        self.0.one()
    }
    fn elements(&self) -> Vec<R::Elem> {
        self.0.elements()
    }
    fn sample<G: Rng>(&self, rng: &mut G) -> R::Elem {
        let e = self.0.elements();
        e[rng.random_range(0..e.len())]
    }
}

/// `from_ring(to_ring(b))` reproduces `∨`, `∧`, `′` on every pair.
pub fn ring_round_trip_holds<B: BooleanStructure + Clone>(b: &B) -> bool {
    let back = AlgebraOf(RingOf(b.clone()));
    let elems = b.elements();
    elems.iter().all(|&x| {
        elems.iter().all(|&y| {
            back.from_ring(x, y) == (b.join(x, y), b.meet(x, y), b.complement(x))
        })
    })
}

/// The idempotents of `ℤ_n` with `e ∨ f = e + f − ef`, `e ∧ f = ef`, `e′ = 1 − e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentAlgebra {
    modulus: u64,
    idempotents: Vec<u64>,
}

/// Builds the Boolean algebra of idempotents of the commutative ring `ℤ_n`.
pub fn idempotent_algebra(modulus: u64) -> Result<IdempotentAlgebra> {
    if modulus < 2 {
        return Err(Error::Precondition(format!("modulus {modulus} < 2")));
    }
    let idempotents = (0..modulus).filter(|&x| (x * x) % modulus == x).collect();
    Ok(IdempotentAlgebra { modulus, idempotents })
}

impl IdempotentAlgebra {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn idempotents(&self) -> &[u64] {
        &self.idempotents
    }
}

impl BooleanStructure for IdempotentAlgebra {
    type Elem = u64;

    fn join(&self, e: u64, f: u64) -> u64 {
        let n = self.modulus;
        (e + f + n * n - (e * f) % n) % n
    }
    fn meet(&self, e: u64, f: u64) -> u64 {
        (e * f) % self.modulus
    }
    fn complement(&self, e: u64) -> u64 {
        (1 + self.modulus - e) % self.modulus
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn elements(&self) -> Vec<u64> {
        self.idempotents.clone()
    }
    fn sample<R: Rng>(&self, rng: &mut R) -> u64 {
        self.idempotents[rng.random_range(0..self.idempotents.len())]
    }
}

/// Carries a finite Boolean algebra onto the powerset of its atoms via
/// `a ↦ 𝒰_a`. Returns the canonical algebra and, for each element in
/// `b.elements()` order, its bitmask.
pub fn canonicalize<B: BooleanStructure>(b: &B) -> Result<(FinBoolAlg, Vec<(B::Elem, u64)>)> {
    let report = verify_axioms(b, CheckMode::Exhaustive);
    if let Some(r) = report.failing().next() {
        return Err(Error::Precondition(format!(
            "axiom B{} fails at {:?}",
            r.axiom, r.counterexample
        )));
    }
    let elems = b.elements();
    let leq = |x: B::Elem, y: B::Elem| b.meet(x, y) == x;
    let atoms: Vec<B::Elem> = elems
        .iter()
        .copied()
        .filter(|&a| {
            a != b.zero() && elems.iter().all(|&x| x == b.zero() || x == a || !leq(x, a))
        })
        .collect();
    let alg = FinBoolAlg::new(atoms.len() as u32)?;
    let table: Vec<(B::Elem, u64)> = elems
        .iter()
        .map(|&x| {
            let mask = atoms
                .iter()
                .enumerate()
                .filter(|(_, &a)| leq(a, x))
                .fold(0u64, |m, (i, _)| m | (1 << i));
            (x, mask)
        })
        .collect();
    let mut seen = alloc::vec![false; alg.size()];
    for &(_, m) in &table {
        if seen[m as usize] {
            return Err(Error::Precondition("a ↦ 𝒰_a is not injective".into()));
        }
        seen[m as usize] = true;
    }
    if table.len() != alg.size() {
        return Err(Error::Precondition("a ↦ 𝒰_a is not surjective".into()));
    }
    Ok((alg, table))
}

/// A map between finite Boolean algebras, stored as the image of every
/// source element. Construction checks shapes only; the homomorphism laws
/// are checked by [`BoolHom::check_laws`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoolHom {
    pub source: FinBoolAlg,
    pub target: FinBoolAlg,
    pub map: Vec<u64>,
}

impl BoolHom {
    pub fn new(source: FinBoolAlg, target: FinBoolAlg, map: Vec<u64>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::InvalidTable(format!(
                "map has {} entries, source has {} elements",
                map.len(),
                source.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| !target.contains(y)) {
            return Err(Error::IndexOutOfRange { index: bad as usize, size: target.size() });
        }
        Ok(Self { source, target, map })
    }

    /// The map determined by join-extension of the images of the source atoms.
    pub fn from_atom_images(source: FinBoolAlg, target: FinBoolAlg, images: &[u64]) -> Result<Self> {
        if images.len() != source.atom_count() as usize {
            return Err(Error::InvalidTable("one image per source atom is required".into()));
        }
        let map = (0..source.size() as u64)
            .map(|x| {
                (0..source.atom_count())
                    .filter(|i| x & (1 << i) != 0)
                    .fold(0, |acc, i| acc | images[i as usize])
            })
            .collect();
        Self::new(source, target, map)
    }

    pub fn identity(b: FinBoolAlg) -> Self {
        Self { source: b, target: b, map: (0..b.size() as u64).collect() }
    }

    pub fn apply(&self, x: u64) -> u64 {
        self.map[x as usize]
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &BoolHom) -> Result<BoolHom> {
        if first.target != self.source {
            return Err(Error::Precondition("homomorphisms are not composable".into()));
        }
        let map = first.map.iter().map(|&y| self.apply(y)).collect();
        Ok(BoolHom { source: first.source, target: self.target, map })
    }

    /// Checks preservation of 0, 1, ∧ and ∨.
    pub fn check_laws(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.apply(0) != 0 {
            return Err(Error::NotHomomorphism("0 is not sent to 0".into()));
        }
        if self.apply(s.top()) != t.top() {
            return Err(Error::NotHomomorphism("1 is not sent to 1".into()));
        }
        for x in 0..s.size() as u64 {
            for y in 0..s.size() as u64 {
                if self.apply(x & y) != self.apply(x) & self.apply(y) {
                    return Err(Error::NotHomomorphism(format!("∧ fails at ({x:#b}, {y:#b})")));
                }
                if self.apply(x | y) != self.apply(x) | self.apply(y) {
                    return Err(Error::NotHomomorphism(format!("∨ fails at ({x:#b}, {y:#b})")));
                }
            }
        }
        Ok(())
    }
}

/// A function from the atoms of `C` to the atoms of `B`, by atom index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomMap {
    /// Atom count of the domain algebra `C`.
    pub from_atoms: u32,
    /// Atom count of the codomain algebra `B`.
    pub to_atoms: u32,
    pub map: Vec<u32>,
}

impl AtomMap {
    pub fn new(from_atoms: u32, to_atoms: u32, map: Vec<u32>) -> Result<Self> {
        if map.len() != from_atoms as usize {
            return Err(Error::InvalidTable("atom map must be total".into()));
        }
        if let Some(&bad) = map.iter().find(|&&j| j >= to_atoms) {
            return Err(Error::IndexOutOfRange { index: bad as usize, size: to_atoms as usize });
        }
        if from_atoms > 0 && to_atoms == 0 {
            return Err(Error::Precondition("no function into an empty set of atoms".into()));
        }
        Ok(Self { from_atoms, to_atoms, map })
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &AtomMap) -> Result<AtomMap> {
        if first.to_atoms != self.from_atoms {
            return Err(Error::Precondition("atom maps are not composable".into()));
        }
        let map = first.map.iter().map(|&j| self.map[j as usize]).collect();
        AtomMap::new(first.from_atoms, self.to_atoms, map)
    }
}

/// `θ♯ : at(C) → at(B)`, `θ♯(f) = e` for the unique atom `e` with `f ≤ θ(e)`.
pub fn hom_to_atom_map(theta: &BoolHom) -> Result<AtomMap> {
    theta.check_laws()?;
    let (b, c) = (&theta.source, &theta.target);
    let mut map = Vec::with_capacity(c.atom_count() as usize);
    for f in c.atoms() {
        let above: Vec<u32> = (0..b.atom_count())
            .filter(|&i| c.leq(f, theta.apply(1 << i)))
            .collect();
        match above.as_slice() {
            [e] => map.push(*e),
            _ => {
                return Err(Error::NotHomomorphism(format!(
                    "atom {f:#b} lies below {} atom images",
                    above.len()
                )))
            }
        }
    }
    AtomMap::new(c.atom_count(), b.atom_count(), map)
}

/// `α♭ : B → C`, `α♭(e) = ⋁ { f : α(f) ≤ e }`.
pub fn atom_map_to_hom(alpha: &AtomMap) -> Result<BoolHom> {
    let b = FinBoolAlg::new(alpha.to_atoms)?;
    let c = FinBoolAlg::new(alpha.from_atoms)?;
    let map = (0..b.size() as u64)
        .map(|e| {
            (0..alpha.from_atoms)
                .filter(|&f| e & (1 << alpha.map[f as usize]) != 0)
                .fold(0u64, |acc, f| acc | (1 << f))
        })
        .collect();
    BoolHom::new(b, c, map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// The powerset algebra with join replaced by meet.
    struct JoinAsMeet(FinBoolAlg);

    impl BooleanStructure for JoinAsMeet {
        type Elem = u64;
        fn join(&self, x: u64, y: u64) -> u64 {
            x & y
        }
        fn meet(&self, x: u64, y: u64) -> u64 {
            x & y
        }
        fn complement(&self, x: u64) -> u64 {
            self.0.complement(x)
        }
        fn zero(&self) -> u64 {
            0
        }
        fn one(&self) -> u64 {
            self.0.top()
        }
        fn elements(&self) -> Vec<u64> {
            self.0.elements()
        }
        fn sample<R: Rng>(&self, rng: &mut R) -> u64 {
            self.0.sample(rng)
        }
    }

    #[test]
    fn axioms_hold_on_powersets() {
        for k in 1..=4 {
            let b = FinBoolAlg::new(k).unwrap();
            assert!(verify_axioms(&b, CheckMode::Exhaustive).all_pass(), "k = {k}");
        }
        let big = FinBoolAlg::new(12).unwrap();
        let rep = verify_axioms(&big, CheckMode::Sampled { triples: 2000, seed: crate::DEFAULT_SEED });
        assert!(rep.all_pass() && !rep.exhaustive);
    }

    #[test]
    fn join_as_meet_breaks_b3() {
        let rep = verify_axioms(&JoinAsMeet(FinBoolAlg::two()), CheckMode::Exhaustive);
        let b3 = &rep.results[2];
        assert_eq!(b3.axiom, 3);
        assert!(!b3.holds);
        assert_eq!(b3.counterexample.unwrap().0, 1);
        assert!(rep.results[0].holds && rep.results[1].holds);
    }

    #[test]
    fn ring_examples() {
        let b = FinBoolAlg::new(3).unwrap();
        // {1} = 0b001, {1,2} = 0b011
        assert_eq!(b.to_ring(0b001, 0b011).0, 0b010);
        for x in b.elements() {
            assert_eq!(b.to_ring(x, x).0, 0);
        }
        for k in 0..=4 {
            assert!(ring_round_trip_holds(&FinBoolAlg::new(k).unwrap()));
        }
    }

    #[test]
    fn idempotents_of_zn() {
        let z6 = idempotent_algebra(6).unwrap();
        assert_eq!(z6.idempotents(), &[0, 1, 3, 4]);
        assert_eq!(z6.join(3, 4), 1);
        assert!(verify_axioms(&z6, CheckMode::Exhaustive).all_pass());
        let z5 = idempotent_algebra(5).unwrap();
        assert_eq!(z5.idempotents(), &[0, 1]);
        assert!(idempotent_algebra(1).is_err());
        let (alg, _) = canonicalize(&z6).unwrap();
        assert_eq!(alg.atom_count(), 2);
        // ℤ_30 = ℤ_2 × ℤ_3 × ℤ_5 has 8 idempotents
        let (alg30, _) = canonicalize(&idempotent_algebra(30).unwrap()).unwrap();
        assert_eq!(alg30.atom_count(), 3);
    }

    #[test]
    fn atoms_below_examples() {
        let b = FinBoolAlg::new(3).unwrap();
        assert!(b.atoms_below(0).is_empty());
        assert_eq!(b.atoms_below(b.top()), b.atoms());
        assert_eq!(b.atoms_below(0b011), vec![0b001, 0b010]);
    }

    #[test]
    fn sharp_of_the_worked_example() {
        // θ: P({a,b}) → P({1,2,3}), θ({a}) = {1}, θ({b}) = {2,3}
        let b = FinBoolAlg::new(2).unwrap();
        let c = FinBoolAlg::new(3).unwrap();
        let theta = BoolHom::from_atom_images(b, c, &[0b001, 0b110]).unwrap();
        let sharp = hom_to_atom_map(&theta).unwrap();
        assert_eq!(sharp.map, vec![0, 1, 1]);
        assert_eq!(atom_map_to_hom(&sharp).unwrap(), theta);
    }

    #[test]
    fn identity_and_constant_atom_maps() {
        let b = FinBoolAlg::new(3).unwrap();
        let id = hom_to_atom_map(&BoolHom::identity(b)).unwrap();
        assert_eq!(id.map, vec![0, 1, 2]);
        // α: at(C) → {e}, with C having 2 atoms and B having 3, e = atom 1
        let alpha = AtomMap::new(2, 3, vec![1, 1]).unwrap();
        let flat = atom_map_to_hom(&alpha).unwrap();
        for x in 0..8u64 {
            let expected = if x & 0b010 != 0 { 0b11 } else { 0 };
            assert_eq!(flat.apply(x), expected);
        }
    }

    #[test]
    fn sharp_rejects_non_homomorphisms() {
        let b = FinBoolAlg::new(1).unwrap();
        let bad = BoolHom::new(b, b, vec![0, 0]).unwrap();
        assert!(matches!(hom_to_atom_map(&bad), Err(Error::NotHomomorphism(_))));
    }

    #[test]
    fn ultrafilter_characters() {
        let b = FinBoolAlg::new(2).unwrap();
        let chi = b.ultrafilter_char(PrincipalFilter::new(0b01)).unwrap();
        assert_eq!(chi.apply(0b01), 1);
        assert_eq!(chi.apply(0b10), 0);
        assert_eq!(chi.apply(b.top()), 1);
        assert!(b.ultrafilter_char(PrincipalFilter::new(0b11)).is_err());
        let k3 = FinBoolAlg::new(3).unwrap();
        for f in k3.poset().ultrafilters().unwrap() {
            let chi = k3.ultrafilter_char(f).unwrap();
            chi.check_laws().unwrap();
            assert_eq!(k3.hom_to_ultrafilter(&chi).unwrap(), f);
        }
    }

    #[test]
    fn prime_vs_atom() {
        let b = FinBoolAlg::new(2).unwrap();
        assert_eq!(b.prime_iff_atom(0b01).unwrap(), (true, true));
        assert_eq!(b.prime_iff_atom(0b11).unwrap(), (false, false));
        assert_eq!(FinBoolAlg::two().prime_iff_atom(1).unwrap(), (true, true));
        assert!(b.prime_iff_atom(0).is_err());
    }
}
