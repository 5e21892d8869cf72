//! Prime filters of finite Boolean inverse semigroups, the Stone groupoid
//! `G(S)`, the sets `𝒰_a`, the round trips `S ≅ KB(G(S))` and
//! `G ≅ G(KB(G))`, and transport of morphisms in both directions.
//!
//! A prime filter of a finite Boolean inverse semigroup is `a↑` for an atom
//! `a`, so filters are stored by their generator. [`filter_oracle`] checks
//! this against the definitions on small hosts.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::groupoid::{kb, FinGroupoid, GroupoidFunctor, Kb, DEFAULT_KB_CAP};
use crate::invsemi::{FinInvSemi, SemigroupMorphism};
use crate::{Error, Result};

/// Largest host for which [`filter_oracle`] enumerates all subsets.
pub const ORACLE_MAX: usize = 15;

/// The prime filter `generator↑`; the generator is an atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimeFilter {
    pub generator: usize,
}

impl PrimeFilter {
    pub fn members(&self, s: &FinInvSemi) -> Vec<usize> {
        s.up(self.generator)
    }

    pub fn contains(&self, s: &FinInvSemi, a: usize) -> bool {
        s.leq(self.generator, a)
    }
}

fn require_boolean(s: &FinInvSemi) -> Result<()> {
    let rep = s.boolean_report();
    if rep.is_boolean() {
        Ok(())
    } else {
        Err(Error::NotBoolean(rep.witness.unwrap_or_else(|| String::from("boolean check failed"))))
    }
}

/// All prime filters, ordered by generator.
pub fn prime_filters(s: &FinInvSemi) -> Result<Vec<PrimeFilter>> {
    require_boolean(s)?;
    Ok(s.atoms().into_iter().map(|generator| PrimeFilter { generator }).collect())
}

/// Filters of a small host computed straight from the definitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FilterOracle {
    /// Proper filters: non-empty, upward closed, downward directed, no zero.
    pub proper_filters: Vec<Vec<usize>>,
    pub prime: Vec<Vec<usize>>,
    /// Maximal proper filters.
    pub ultra: Vec<Vec<usize>>,
}

impl FilterOracle {
    /// Prime filters and ultrafilters coincide and both equal `{a↑ : a atom}`.
    pub fn agrees_with_atoms(&self, s: &FinInvSemi) -> bool {
        let atoms: Vec<Vec<usize>> = s.atoms().into_iter().map(|a| s.up(a)).collect();
        self.prime == self.ultra && self.prime == atoms
    }
}

/// Enumerates every subset of a host with at most [`ORACLE_MAX`] elements.
pub fn filter_oracle(s: &FinInvSemi) -> Result<FilterOracle> {
    let n = s.size();
    if n > ORACLE_MAX {
        return Err(Error::CapExceeded { what: "filter oracle host", size: n, cap: ORACLE_MAX });
    }
    let up_mask: Vec<u32> = (0..n).map(|a| s.up(a).iter().fold(0, |m, &x| m | 1 << x)).collect();
    let down_mask: Vec<u32> = (0..n).map(|a| s.down(a).iter().fold(0, |m, &x| m | 1 << x)).collect();
    let members = |m: u32| (0..n).filter(move |&x| m >> x & 1 == 1);
    let mut proper = Vec::new();
    for m in 1u32..(1 << n) {
        if m >> s.zero() & 1 == 1 {
            continue;
        }
        let upward = members(m).all(|a| up_mask[a] & !m == 0);
        let directed = upward
            && members(m).all(|a| members(m).all(|b| down_mask[a] & down_mask[b] & m != 0));
        if directed {
            proper.push(m);
        }
    }
    let is_prime = |m: u32| {
        (0..n).all(|a| {
            (0..n).all(|b| match s.join(a, b) {
                Some(j) if m >> j & 1 == 1 => m >> a & 1 == 1 || m >> b & 1 == 1,
                _ => true,
            })
        })
    };
    let to_vec = |m: u32| members(m).collect::<Vec<usize>>();
    let mut prime: Vec<Vec<usize>> = proper.iter().copied().filter(|&m| is_prime(m)).map(to_vec).collect();
    let mut ultra: Vec<Vec<usize>> = proper
        .iter()
        .copied()
        .filter(|&m| !proper.iter().any(|&k| k != m && k & m == m))
        .map(to_vec)
        .collect();
    let mut proper_filters: Vec<Vec<usize>> = proper.into_iter().map(to_vec).collect();
    for list in [&mut proper_filters, &mut prime, &mut ultra] {
        list.sort_by_key(|f| f.iter().min().copied());
    }
    Ok(FilterOracle { proper_filters, prime, ultra })
}

/// `d(A) = (A⁻¹A)↑` for a filter given as a set.
pub fn set_filter_d(s: &FinInvSemi, a: &[usize]) -> Vec<usize> {
    let prods: Vec<usize> = a.iter().flat_map(|&x| a.iter().map(move |&y| s.mul(s.inv(x), y))).collect();
    up_closure(s, &prods)
}

fn up_closure(s: &FinInvSemi, xs: &[usize]) -> Vec<usize> {
    let set: BTreeSet<usize> = xs.iter().flat_map(|&x| s.up(x)).collect();
    set.into_iter().collect()
}

/// `A = (a·d(A))↑` for every `a ∈ A`.
pub fn coset_law_holds(s: &FinInvSemi, a: &[usize]) -> bool {
    let d = set_filter_d(s, a);
    a.iter().all(|&x| {
        let prods: Vec<usize> = d.iter().map(|&e| s.mul(x, e)).collect();
        up_closure(s, &prods) == a
    })
}

/// `d(A) = (a⁻¹a)↑`.
pub fn filter_d(s: &FinInvSemi, a: PrimeFilter) -> PrimeFilter {
    PrimeFilter { generator: s.d(a.generator) }
}

/// `r(A) = (aa⁻¹)↑`.
pub fn filter_r(s: &FinInvSemi, a: PrimeFilter) -> PrimeFilter {
    PrimeFilter { generator: s.r(a.generator) }
}

pub fn filter_inv(s: &FinInvSemi, a: PrimeFilter) -> PrimeFilter {
    PrimeFilter { generator: s.inv(a.generator) }
}

/// `A·B = (AB)↑`, defined exactly when `d(A) = r(B)`.
pub fn filter_product(s: &FinInvSemi, a: PrimeFilter, b: PrimeFilter) -> Option<PrimeFilter> {
    (s.d(a.generator) == s.r(b.generator)).then(|| PrimeFilter { generator: s.mul(a.generator, b.generator) })
}

/// `G(S)` with element `i` standing for `filters[i]`.
#[derive(Debug, Clone)]
pub struct StoneGroupoid {
    pub groupoid: FinGroupoid,
    pub filters: Vec<PrimeFilter>,
}

impl StoneGroupoid {
    pub fn index_of(&self, f: PrimeFilter) -> Option<usize> {
        self.filters.binary_search(&f).ok()
    }
}

pub fn stone_groupoid(s: &FinInvSemi) -> Result<StoneGroupoid> {
    let filters = prime_filters(s)?;
    let pos = |f: PrimeFilter| filters.binary_search(&f).expect("atoms are closed under the groupoid operations");
    let identities: Vec<usize> = (0..filters.len()).filter(|&i| s.is_idempotent(filters[i].generator)).collect();
    let g = FinGroupoid::from_fn(
        filters.len(),
        |i, j| filter_product(s, filters[i], filters[j]).map(pos),
        |i| pos(filter_inv(s, filters[i])),
        &identities,
    )?;
    let names = filters.iter().map(|f| s.name(f.generator)).collect();
    Ok(StoneGroupoid { groupoid: g.with_names(names)?, filters })
}

/// `𝒰_a` as sorted indices into the Stone groupoid.
pub fn u_set(s: &FinInvSemi, g: &StoneGroupoid, a: usize) -> Vec<usize> {
    (0..g.filters.len()).filter(|&i| g.filters[i].contains(s, a)).collect()
}

/// `α: S → KB(G(S))`, `a ↦ 𝒰_a`, checked to be an isomorphism.
#[derive(Debug, Clone)]
pub struct Alpha {
    pub stone: StoneGroupoid,
    pub kb: Kb,
    pub map: Vec<usize>,
}

impl Alpha {
    /// `α⁻¹(U)` as the join of the generators in `U`.
    pub fn inverse(&self, s: &FinInvSemi, u: usize) -> Option<usize> {
        s.join_all(self.kb.bisections[u].iter().map(|&i| self.stone.filters[i].generator))
    }
}

pub fn alpha(s: &FinInvSemi) -> Result<Alpha> {
    let stone = stone_groupoid(s)?;
    let kb = kb(&stone.groupoid, DEFAULT_KB_CAP)?;
    let t = &kb.semigroup;
    let map: Vec<usize> = (0..s.size())
        .map(|a| kb.index_of(&u_set(s, &stone, a)).ok_or_else(|| Error::NotBoolean(format!("𝒰_{a} is not a local bisection"))))
        .collect::<Result<_>>()?;
    let mut hit = vec![false; t.size()];
    for &x in &map {
        hit[x] = true;
    }
    if s.size() != t.size() || hit.iter().any(|&h| !h) {
        return Err(Error::NotBoolean(format!("α is not bijective: |S| = {}, |KB(G(S))| = {}", s.size(), t.size())));
    }
    for a in 0..s.size() {
        if map[s.inv(a)] != t.inv(map[a]) {
            return Err(Error::NotHomomorphism(format!("α({}⁻¹) ≠ α({})⁻¹", s.name(a), s.name(a))));
        }
        for b in 0..s.size() {
            if map[s.mul(a, b)] != t.mul(map[a], map[b]) {
                return Err(Error::NotHomomorphism(format!("α({}·{}) ≠ α({})α({})", a, b, a, b)));
            }
        }
    }
    let m = t.size();
    let al = Alpha { stone, kb, map };
    if let Some(u) = (0..m).find(|&u| al.inverse(s, u).map(|a| al.map[a]) != Some(u)) {
        return Err(Error::NotBoolean(format!("α⁻¹ disagrees with the join of generators at {u}")));
    }
    Ok(al)
}

/// `β: G → G(KB(G))`, `g ↦ {g}↑`, checked to be an isomorphism.
#[derive(Debug, Clone)]
pub struct Beta {
    pub kb: Kb,
    pub stone: StoneGroupoid,
    pub map: Vec<usize>,
}

pub fn beta(g: &FinGroupoid) -> Result<Beta> {
    let kb = kb(g, DEFAULT_KB_CAP)?;
    let stone = stone_groupoid(&kb.semigroup)?;
    let h = &stone.groupoid;
    let map: Vec<usize> = (0..g.size())
        .map(|x| {
            let atom = kb.index_of(&[x]).expect("singletons are local bisections");
            stone.index_of(PrimeFilter { generator: atom }).ok_or_else(|| Error::NotBoolean(format!("{{{x}}} is not an atom")))
        })
        .collect::<Result<_>>()?;
    if g.size() != h.size() || (0..h.size()).any(|y| !map.contains(&y)) {
        return Err(Error::NotGroupoid("β is not bijective".into()));
    }
    GroupoidFunctor::new(g, h, map.clone())?;
    for a in 0..g.size() {
        for b in 0..g.size() {
            if g.mul(a, b).is_none() && h.mul(map[a], map[b]).is_some() {
                return Err(Error::NotFunctor(format!("β reflects no product at ({a}, {b})")));
            }
        }
    }
    Ok(Beta { kb, stone, map })
}

/// `θ⋆: G(T) → G(S)`, `B ↦ θ⁻¹(B)`. Each preimage must be `m↑` for an
/// atom `m`; when it is not, `θ` is not callitic and the witness is reported.
pub fn dual_morphism<'g>(
    theta: &SemigroupMorphism<'_>,
    gs: &'g StoneGroupoid,
    gt: &'g StoneGroupoid,
) -> Result<GroupoidFunctor<'g>> {
    let (s, t) = (theta.source, theta.target);
    if gs.filters != prime_filters(s)? || gt.filters != prime_filters(t)? {
        return Err(Error::Precondition("Stone groupoids do not belong to the morphism's hosts".into()));
    }
    let mut map = Vec::with_capacity(gt.filters.len());
    for f in &gt.filters {
        let pre: Vec<usize> = (0..s.size()).filter(|&a| f.contains(t, theta.apply(a))).collect();
        let min = pre.iter().copied().find(|&m| pre.iter().all(|&a| s.leq(m, a)));
        let Some(m) = min else {
            return Err(Error::NotCallitic(format!(
                "θ⁻¹({}↑) has no minimum",
                t.name(f.generator)
            )));
        };
        if s.up(m) != pre {
            return Err(Error::NotCallitic(format!("θ⁻¹({}↑) is not a principal filter", t.name(f.generator))));
        }
        let idx = gs
            .index_of(PrimeFilter { generator: m })
            .ok_or_else(|| Error::NotCallitic(format!("θ⁻¹({}↑) is generated by a non-atom", t.name(f.generator))))?;
        map.push(idx);
    }
    let phi = GroupoidFunctor::new(&gt.groupoid, &gs.groupoid, map)?;
    if !phi.is_covering() {
        return Err(Error::NotCovering("θ⋆ is not star-bijective".into()));
    }
    Ok(phi)
}

/// `φ⋆: KB(H) → KB(G)`, `U ↦ φ⁻¹(U)`, for a covering functor `φ: G → H`.
pub fn dual_functor<'k>(
    phi: &GroupoidFunctor<'_>,
    kb_h: &'k Kb,
    kb_g: &'k Kb,
) -> Result<SemigroupMorphism<'k>> {
    if !phi.is_covering() {
        return Err(Error::NotCovering("functor is not star-bijective".into()));
    }
    let map = kb_h
        .bisections
        .iter()
        .map(|u| {
            let pre: Vec<usize> = (0..phi.source.size()).filter(|&x| u.contains(&phi.apply(x))).collect();
            kb_g.index_of(&pre).ok_or_else(|| Error::NotCovering("a preimage is not a local bisection".into()))
        })
        .collect::<Result<Vec<usize>>>()?;
    let m = SemigroupMorphism::new(&kb_h.semigroup, &kb_g.semigroup, map)?;
    if !m.is_callitic() {
        return Err(Error::NotCallitic("φ⋆ is not callitic".into()));
    }
    Ok(m)
}

/// Checks `(θ⋆)⋆ ∘ α_S = α_T ∘ θ`.
pub fn morphism_round_trip(theta: &SemigroupMorphism<'_>) -> Result<bool> {
    let (al_s, al_t) = (alpha(theta.source)?, alpha(theta.target)?);
    let star = dual_morphism(theta, &al_s.stone, &al_t.stone)?;
    let back = dual_functor(&star, &al_s.kb, &al_t.kb)?;
    Ok((0..theta.source.size()).all(|a| back.apply(al_s.map[a]) == al_t.map[theta.apply(a)]))
}

/// Checks `(φ⋆)⋆ ∘ β_G = β_H ∘ φ`.
pub fn functor_round_trip(phi: &GroupoidFunctor<'_>) -> Result<bool> {
    let (be_g, be_h) = (beta(phi.source)?, beta(phi.target)?);
    let star = dual_functor(phi, &be_h.kb, &be_g.kb)?;
    let back = dual_morphism(&star, &be_h.stone, &be_g.stone)?;
    Ok((0..phi.source.size()).all(|x| back.apply(be_g.map[x]) == be_h.map[phi.apply(x)]))
}

/// `ε_I` for an additive ideal `I`, with each element labelled by the least
/// member of its class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceByIdeal {
    pub ideal: Vec<usize>,
    pub classes: Vec<usize>,
}

impl CongruenceByIdeal {
    pub fn related(&self, a: usize, b: usize) -> bool {
        self.classes[a] == self.classes[b]
    }

    /// The class of zero.
    pub fn kernel(&self, s: &FinInvSemi) -> Vec<usize> {
        (0..s.size()).filter(|&a| self.related(a, s.zero())).collect()
    }
}

/// `(a, b) ∈ ε_I` iff some `c ≤ a, b` has `a \ c` and `b \ c` in `I`.
pub fn ideal_congruence(s: &FinInvSemi, ideal: &[usize]) -> Result<CongruenceByIdeal> {
    let mut ideal = ideal.to_vec();
    ideal.sort_unstable();
    ideal.dedup();
    if !s.is_additive_ideal(&ideal) {
        return Err(Error::NotAdditiveIdeal(format!("{ideal:?}")));
    }
    require_boolean(s)?;
    let n = s.size();
    let mut in_ideal = vec![false; n];
    for &x in &ideal {
        in_ideal[x] = true;
    }
    let related = |a: usize, b: usize| -> Result<bool> {
        for c in s.down(a) {
            if s.leq(c, b) && in_ideal[s.complement_below(a, c)?] && in_ideal[s.complement_below(b, c)?] {
                return Ok(true);
            }
        }
        Ok(false)
    };
    let mut rel = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            rel[a * n + b] = related(a, b)?;
        }
    }
    let classes: Vec<usize> = (0..n).map(|a| (0..n).find(|&b| rel[a * n + b]).expect("reflexive")).collect();
    for a in 0..n {
        for b in 0..n {
            if rel[a * n + b] != (classes[a] == classes[b]) {
                return Err(Error::Precondition(format!("ε_I is not transitive at ({a}, {b})")));
            }
            if rel[a * n + b] {
                for c in 0..n {
                    if classes[s.mul(a, c)] != classes[s.mul(b, c)] || classes[s.mul(c, a)] != classes[s.mul(c, b)] {
                        return Err(Error::Precondition(format!("ε_I is not a congruence at ({a}, {b}, {c})")));
                    }
                }
            }
        }
    }
    Ok(CongruenceByIdeal { ideal, classes })
}

/// `S/ε_I` together with the natural map.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub semigroup: FinInvSemi,
    pub map: Vec<usize>,
    pub congruence: CongruenceByIdeal,
}

pub fn quotient(s: &FinInvSemi, ideal: &[usize]) -> Result<Quotient> {
    let congruence = ideal_congruence(s, ideal)?;
    let reps: Vec<usize> = (0..s.size()).filter(|&a| congruence.classes[a] == a).collect();
    let map: Vec<usize> = congruence
        .classes
        .iter()
        .map(|c| reps.binary_search(c).expect("labels are representatives"))
        .collect();
    let m = reps.len();
    let mul = (0..m * m).map(|k| map[s.mul(reps[k / m], reps[k % m])] as u32).collect();
    let inv = reps.iter().map(|&r| map[s.inv(r)] as u32).collect();
    let q = FinInvSemi::from_flat(m, mul, inv, map[s.zero()])?;
    let names = reps.iter().map(|&r| format!("[{}]", s.name(r))).collect();
    Ok(Quotient { semigroup: q.with_names(names)?, map, congruence })
}

/// Whether the kernel congruence of `θ` equals `ε_{θ⁻¹(0)}`.
pub fn congruence_is_ideal_induced(theta: &SemigroupMorphism<'_>) -> Result<bool> {
    let eps = ideal_congruence(theta.source, &theta.kernel())?;
    Ok(eps.classes == theta.congruence_classes())
}

/// A prime filter containing `b` and omitting `a`, for `b ≰ a`.
pub fn separation_witness(s: &FinInvSemi, a: usize, b: usize) -> Result<PrimeFilter> {
    if s.leq(b, a) {
        return Err(Error::Precondition(format!("{} ≤ {}", s.name(b), s.name(a))));
    }
    require_boolean(s)?;
    s.atoms()
        .into_iter()
        .find(|&x| s.leq(x, b) && !s.leq(x, a))
        .map(|generator| PrimeFilter { generator })
        .ok_or_else(|| Error::NotBoolean("no atom separates the pair".into()))
}

/// One row of the semigroup/groupoid dictionary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correspondence {
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub lhs_value: bool,
    pub rhs_value: bool,
    /// Both sides are constant on finite instances.
    pub trivial: bool,
}

impl Correspondence {
    pub fn holds(&self) -> bool {
        self.lhs_value == self.rhs_value
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub rows: Vec<Correspondence>,
}

impl CorrespondenceReport {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(Correspondence::holds)
    }

    pub fn row(&self, lhs: &str) -> Option<&Correspondence> {
        self.rows.iter().find(|r| r.lhs == lhs)
    }
}

pub fn verify_correspondences(s: &FinInvSemi) -> Result<CorrespondenceReport> {
    let g = stone_groupoid(s)?.groupoid;
    let row = |lhs, rhs, lhs_value, rhs_value, trivial| Correspondence { lhs, rhs, lhs_value, rhs_value, trivial };
    Ok(CorrespondenceReport {
        rows: vec![
            row("fundamental", "effective", s.is_fundamental(), g.is_effective_discrete(), false),
            row("0-simplifying", "minimal", s.is_zero_simplifying(), g.is_minimal_discrete(), false),
            row("basic", "principal", s.is_basic(), g.is_principal(), false),
            row("semisimple", "discrete", s.is_semisimple(), true, true),
            row("meet-semigroup", "hausdorff", s.is_meet_semigroup(), g.is_hausdorff_discrete(), true),
            row("countable", "second-countable", true, true, true),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::GroupTable;
    use crate::invsemi::construct::*;

    fn el(n: usize, graph: &[(usize, usize)]) -> usize {
        i_n_element(n, graph).unwrap()
    }

    #[test]
    fn prime_filter_counts() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        assert_eq!(prime_filters(&i2).unwrap().len(), 4);
        let z2 = group_with_zero(&GroupTable::cyclic(2)).unwrap();
        assert_eq!(prime_filters(&z2).unwrap().len(), 2);
        assert!(prime_filters(&zero_semigroup()).unwrap().is_empty());
        assert!(prime_filters(&chain_semilattice(3).unwrap()).is_err());
    }

    #[test]
    fn oracle_matches_atoms() {
        for s in [
            symmetric_inverse_monoid(2).unwrap(),
            group_with_zero(&GroupTable::cyclic(3)).unwrap(),
            boolean_algebra_semilattice(3).unwrap(),
        ] {
            let o = filter_oracle(&s).unwrap();
            assert!(o.agrees_with_atoms(&s));
            assert!(o.proper_filters.iter().all(|f| coset_law_holds(&s, f)));
        }
        assert!(filter_oracle(&symmetric_inverse_monoid(3).unwrap()).is_err());
    }

    #[test]
    fn filter_operations_on_i2() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let a = PrimeFilter { generator: el(2, &[(1, 2)]) };
        assert_eq!(filter_d(&i2, a).generator, el(2, &[(1, 1)]));
        assert_eq!(filter_r(&i2, a).generator, el(2, &[(2, 2)]));
        assert_eq!(filter_inv(&i2, a).generator, el(2, &[(2, 1)]));
        let b = PrimeFilter { generator: el(2, &[(2, 1)]) };
        assert_eq!(filter_product(&i2, a, b).unwrap().generator, el(2, &[(2, 2)]));
        assert_eq!(filter_product(&i2, a, filter_d(&i2, a)), Some(a));
        assert_eq!(filter_product(&i2, a, a), None);
        let e = PrimeFilter { generator: el(2, &[(1, 1)]) };
        assert_eq!((filter_d(&i2, e), filter_r(&i2, e)), (e, e));
    }

    #[test]
    fn stone_groupoids() {
        for n in 1..=4 {
            let s = symmetric_inverse_monoid(n).unwrap();
            let g = stone_groupoid(&s).unwrap().groupoid;
            assert!(g.is_isomorphic(&FinGroupoid::pair(n).unwrap()), "n = {n}");
        }
        let r = rook_matrices(2, &GroupTable::cyclic(2)).unwrap();
        let g = stone_groupoid(&r).unwrap().groupoid;
        let comp = FinGroupoid::from_components(&[(2, GroupTable::cyclic(2))]).unwrap();
        assert_eq!(g.size(), 8);
        assert!(g.is_isomorphic(&comp));
    }

    #[test]
    fn u_sets() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let g = stone_groupoid(&i2).unwrap();
        assert!(u_set(&i2, &g, i2.zero()).is_empty());
        let swap = el(2, &[(1, 2), (2, 1)]);
        let gens: Vec<usize> = u_set(&i2, &g, swap).iter().map(|&i| g.filters[i].generator).collect();
        assert_eq!(gens, {
            let mut v = vec![el(2, &[(1, 2)]), el(2, &[(2, 1)])];
            v.sort_unstable();
            v
        });
        for a in 0..i2.size() {
            let all_idem = u_set(&i2, &g, a).iter().all(|&i| g.groupoid.is_identity(i));
            assert_eq!(i2.is_idempotent(a), all_idem);
        }
    }

    #[test]
    fn round_trips() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let al = alpha(&i2).unwrap();
        assert_eq!(al.kb.semigroup.size(), 7);
        assert!(al.kb.bisections[al.map[i2.zero()]].is_empty());
        let pair = FinGroupoid::pair(2).unwrap();
        let be = beta(&pair).unwrap();
        assert_eq!(be.stone.filters.len(), 4);
        for &e in pair.identities() {
            assert!(be.stone.groupoid.is_identity(be.map[e]));
        }
    }

    #[test]
    fn projection_dualizes_to_component_inclusion() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let p = direct_product(&i2, &i2).unwrap();
        let theta = SemigroupMorphism::new(&p, &i2, (0..p.size()).map(|x| x % 7).collect()).unwrap();
        let (gp, gi) = (stone_groupoid(&p).unwrap(), stone_groupoid(&i2).unwrap());
        let star = dual_morphism(&theta, &gp, &gi).unwrap();
        assert!(star.is_covering());
        assert_eq!(gp.groupoid.connected_components().len(), 2);
        let mut image: Vec<usize> = star.map().to_vec();
        image.sort_unstable();
        image.dedup();
        assert_eq!(image.len(), 4);
        assert!(morphism_round_trip(&theta).unwrap());
        assert!(functor_round_trip(&star).unwrap());
    }

    #[test]
    fn non_callitic_morphisms_have_no_dual() {
        let z2 = group_with_zero(&GroupTable::cyclic(2)).unwrap();
        let b = group_with_zero(&GroupTable::trivial()).unwrap();
        let theta = SemigroupMorphism::new(&z2, &b, vec![0, 1, 1]).unwrap();
        let (gz, gb) = (stone_groupoid(&z2).unwrap(), stone_groupoid(&b).unwrap());
        assert!(matches!(dual_morphism(&theta, &gz, &gb), Err(Error::NotCallitic(_))));
        assert!(!congruence_is_ideal_induced(&theta).unwrap());
    }

    #[test]
    fn congruences() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let q = quotient(&i2, &[i2.zero()]).unwrap();
        assert!(q.semigroup.is_isomorphic(&i2));
        let all: Vec<usize> = (0..7).collect();
        assert_eq!(quotient(&i2, &all).unwrap().semigroup.size(), 1);
        let p = direct_product(&i2, &i2).unwrap();
        let left: Vec<usize> = (0..p.size()).filter(|x| x % 7 == 0).collect();
        let q = quotient(&p, &left).unwrap();
        assert!(q.semigroup.is_isomorphic(&i2));
        assert!(q.semigroup.is_boolean());
        let nat = SemigroupMorphism::new(&p, &q.semigroup, q.map.clone()).unwrap();
        assert!(nat.is_callitic());
        assert!(congruence_is_ideal_induced(&nat).unwrap());
        assert!(matches!(ideal_congruence(&i2, &[1]), Err(Error::NotAdditiveIdeal(_))));
    }

    #[test]
    fn separation() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let (b, a) = (el(2, &[(1, 2), (2, 1)]), el(2, &[(1, 2)]));
        let f = separation_witness(&i2, a, b).unwrap();
        assert!(f.contains(&i2, b) && !f.contains(&i2, a));
        let atom = el(2, &[(1, 1)]);
        assert_eq!(separation_witness(&i2, i2.zero(), atom).unwrap().generator, atom);
        assert!(separation_witness(&i2, b, a).is_err());
    }

    #[test]
    fn dictionary() {
        for s in [
            symmetric_inverse_monoid(3).unwrap(),
            rook_matrices(2, &GroupTable::cyclic(2)).unwrap(),
            direct_product(&symmetric_inverse_monoid(2).unwrap(), &symmetric_inverse_monoid(2).unwrap()).unwrap(),
        ] {
            let rep = verify_correspondences(&s).unwrap();
            assert!(rep.all_hold(), "{rep:?}");
        }
        let r = rook_matrices(2, &GroupTable::cyclic(2)).unwrap();
        let rep = verify_correspondences(&r).unwrap();
        let f = rep.row("fundamental").unwrap();
        assert!(!f.lhs_value && !f.rhs_value);
    }
}
