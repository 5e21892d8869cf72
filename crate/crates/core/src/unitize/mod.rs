//! Unitization of Boolean inverse semigroups and their groups of units.
//!
//! The finite route goes through groupoids: `T = KB(G(S)^∞)` contains
//! `S ≅ KB(G(S))` as an ideal and subalgebra. The [`symbolic`] submodule
//! does the same for the infinite semigroup `ℐ^fin(ℕ)`.

pub mod symbolic;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::duality::{stone_groupoid, u_set};
use crate::group::GroupTable;
use crate::groupoid::{kb, FinGroupoid, Kb, DEFAULT_KB_CAP};
use crate::invsemi::{FinInvSemi, SemigroupMorphism};
use crate::{Error, Result};

pub use symbolic::{
    compose_direct, compose_formula, compose_unitized, is_unit_unitized, FinSupportPB, UnitizedElem,
};

/// `S ⊆ T` with `T` a Boolean inverse monoid, `|T| = 2|S|`.
#[derive(Debug, Clone)]
pub struct FiniteUnitization {
    pub monoid: FinInvSemi,
    pub bisections: Vec<Vec<usize>>,
    /// `S → T`.
    pub embedding: Vec<usize>,
    /// The adjoined identity of `G(S)^∞`, as a groupoid element.
    pub infinity: usize,
}

impl FiniteUnitization {
    pub fn identity(&self) -> usize {
        self.monoid.identity().expect("KB of a groupoid with compact identity space is a monoid")
    }

    /// For `x ∉ S`, the pair `(e′, s)` with `x = e′ ⊕ s`, where `e` is the
    /// top of `E(S)` and `s ∈ eSe` is given as an element of `S`.
    pub fn normal_form(&self, s: &FinInvSemi, x: usize) -> Option<(usize, usize)> {
        if self.embedding.contains(&x) {
            return None;
        }
        let t = &self.monoid;
        let top = s.join_all(s.idempotents().iter().copied()).unwrap_or(s.zero());
        let e_prime = t.idempotent_relcomplement(self.identity(), self.embedding[top])?;
        let part = self.embedding.iter().position(|&y| t.join(e_prime, y) == Some(x) && t.orthogonal(e_prime, y))?;
        Some((e_prime, part))
    }
}

pub fn unitize_finite(s: &FinInvSemi) -> Result<FiniteUnitization> {
    let stone = stone_groupoid(s)?;
    let g_inf = stone.groupoid.adjoin_identity();
    let Kb { semigroup: t, bisections } = kb(&g_inf, DEFAULT_KB_CAP)?;
    let embedding: Vec<usize> = (0..s.size())
        .map(|a| {
            let u = u_set(s, &stone, a);
            bisections.iter().position(|b| *b == u).expect("𝒰_a is a local bisection of G ⊆ G^∞")
        })
        .collect();
    if t.size() != 2 * s.size() {
        return Err(Error::Precondition(format!("|T| = {} but |S| = {}", t.size(), s.size())));
    }
    SemigroupMorphism::new(s, &t, embedding.clone())?;
    let mut image = embedding.clone();
    image.sort_unstable();
    image.dedup();
    if image.len() != s.size() || !t.is_additive_ideal(&image) {
        return Err(Error::NotAdditiveIdeal("the image of S in T".into()));
    }
    let inside = |x: usize| image.binary_search(&x).is_ok();
    for &a in &image {
        for &b in &image {
            let rel = (t.is_idempotent(a) && t.is_idempotent(b)).then(|| t.idempotent_relcomplement(a, b)).flatten();
            if !inside(t.inv(a)) || t.join(a, b).is_some_and(|j| !inside(j)) || rel.is_some_and(|c| !inside(c)) {
                return Err(Error::Precondition("the image of S is not a subalgebra of T".into()));
            }
        }
    }
    let u = FiniteUnitization { monoid: t, bisections, embedding, infinity: g_inf.size() - 1 };
    if let Some(x) = (0..u.monoid.size()).find(|&x| !inside(x) && u.normal_form(s, x).is_none()) {
        return Err(Error::Precondition(format!("{} has no normal form e′ ⊕ s", u.monoid.name(x))));
    }
    Ok(u)
}

/// The ordinary group of units of a finite monoid, with the unit elements.
pub fn unit_group(s: &FinInvSemi) -> Result<(GroupTable, Vec<usize>)> {
    let one = s.identity().ok_or_else(|| Error::Precondition("not a monoid".into()))?;
    let units: Vec<usize> = (0..s.size()).filter(|&a| s.d(a) == one && s.r(a) == one).collect();
    let pos = |a: usize| units.binary_search(&a).expect("units are closed");
    let table: Vec<Vec<usize>> = units.iter().map(|&a| units.iter().map(|&b| pos(s.mul(a, b))).collect()).collect();
    Ok((GroupTable::from_table(&table)?, units))
}

const NONE: u32 = u32::MAX;

/// `C(S)`: the union of the local unit groups `G_e = {a : d(a) = r(a) = e}`
/// under `a ∘ b = φ^e_{e∨f}(a)·φ^f_{e∨f}(b)`, where `φ^e_f(a) = a ∨ (f \ e)`.
#[derive(Debug, Clone)]
pub struct CliffordSemigroup {
    /// Host element behind each element of `C(S)`.
    pub elements: Vec<usize>,
    table: Vec<u32>,
    index: Vec<u32>,
}

impl CliffordSemigroup {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b] as usize
    }

    /// Position in `C(S)` of a host element with `d(a) = r(a)`.
    pub fn index_of(&self, host: usize) -> Option<usize> {
        self.index.get(host).filter(|&&i| i != NONE).map(|&i| i as usize)
    }

    /// Elements that are idempotent under `∘`.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.mul(a, a) == a).collect()
    }

    pub fn inv(&self, s: &FinInvSemi, a: usize) -> usize {
        self.index_of(s.inv(self.elements[a])).expect("G_e is closed under inverses")
    }

    /// `a ~ b`: `a⁻¹∘b` and `a∘b⁻¹` are idempotent.
    pub fn compatible(&self, s: &FinInvSemi, a: usize, b: usize) -> bool {
        let idem = |x: usize| self.mul(x, x) == x;
        idem(self.mul(self.inv(s, a), b)) && idem(self.mul(a, self.inv(s, b)))
    }
}

/// `φ^e_f(a) = a ∨ (f \ e)` for `e ≤ f`.
pub fn phi(s: &FinInvSemi, e: usize, f: usize, a: usize) -> Result<usize> {
    if !s.leq(e, f) {
        return Err(Error::Precondition(format!("{} ≰ {}", s.name(e), s.name(f))));
    }
    let diff = s
        .idempotent_relcomplement(f, e)
        .ok_or_else(|| Error::NotBoolean(format!("{} \\ {} does not exist", s.name(f), s.name(e))))?;
    s.join(a, diff).ok_or(Error::Incompatible(a, diff))
}

/// Builds `C(S)` and checks the strong-semilattice laws, associativity,
/// central idempotents and `E`-unitarity.
pub fn clifford(s: &FinInvSemi) -> Result<CliffordSemigroup> {
    if s.identity().is_none() {
        return Err(Error::Precondition("C(S) is built for finite monoids".into()));
    }
    if !s.is_boolean() {
        return Err(Error::NotBoolean("C(S) needs a Boolean host".into()));
    }
    let elements: Vec<usize> = (0..s.size()).filter(|&a| s.d(a) == s.r(a)).collect();
    let mut index = vec![NONE; s.size()];
    for (i, &a) in elements.iter().enumerate() {
        index[a] = i as u32;
    }
    let idem = s.idempotents();
    for &e in idem {
        for &f in idem.iter().filter(|&&f| s.leq(e, f)) {
            for &a in elements.iter().filter(|&&a| s.d(a) == e) {
                let fa = phi(s, e, f, a)?;
                if s.d(fa) != f || s.r(fa) != f {
                    return Err(Error::Precondition(format!("φ^e_f({}) leaves G_f", s.name(a))));
                }
                if e == f && fa != a {
                    return Err(Error::Precondition("φ^e_e is not the identity".into()));
                }
                for &g in idem.iter().filter(|&&g| s.leq(f, g)) {
                    if phi(s, f, g, fa)? != phi(s, e, g, a)? {
                        return Err(Error::Precondition("φ^f_g φ^e_f ≠ φ^e_g".into()));
                    }
                }
                for &b in elements.iter().filter(|&&b| s.d(b) == e) {
                    if phi(s, e, f, s.mul(a, b))? != s.mul(fa, phi(s, e, f, b)?) {
                        return Err(Error::Precondition("φ^e_f is not a homomorphism".into()));
                    }
                }
            }
        }
    }
    let m = elements.len();
    let mut table = Vec::with_capacity(m * m);
    for &a in &elements {
        for &b in &elements {
            let (e, f) = (s.d(a), s.d(b));
            let top = s.join(e, f).ok_or(Error::Incompatible(e, f))?;
            let p = s.mul(phi(s, e, top, a)?, phi(s, f, top, b)?);
            table.push(index[p]);
        }
    }
    let c = CliffordSemigroup { elements, table, index };
    for a in 0..m {
        for b in 0..m {
            for k in 0..m {
                if c.mul(c.mul(a, b), k) != c.mul(a, c.mul(b, k)) {
                    return Err(Error::Precondition(format!("C(S) is not associative at ({a}, {b}, {k})")));
                }
            }
        }
    }
    let cidem = c.idempotents();
    for &e in &cidem {
        for a in 0..m {
            if c.mul(e, a) != c.mul(a, e) {
                return Err(Error::Precondition("idempotents of C(S) are not central".into()));
            }
            if c.mul(a, e) == e && !cidem.contains(&a) {
                return Err(Error::Precondition("C(S) is not E-unitary".into()));
            }
        }
    }
    Ok(c)
}

/// `U(S) = C(S)/σ` with `σ = ~`, and its isomorphism onto the ordinary
/// unit group via `[a] ↦ φ^e_1(a)`.
#[derive(Debug, Clone)]
pub struct GroupOfUnits {
    pub clifford: CliffordSemigroup,
    pub group: GroupTable,
    /// σ-class of each element of `C(S)`.
    pub classes: Vec<usize>,
    /// The unit of `S` matching each class.
    pub to_units: Vec<usize>,
}

pub fn group_of_units(s: &FinInvSemi) -> Result<GroupOfUnits> {
    let c = clifford(s)?;
    let m = c.size();
    let mut reps: Vec<usize> = Vec::new();
    let mut classes = vec![0; m];
    for a in 0..m {
        match reps.iter().position(|&r| c.compatible(s, a, r)) {
            Some(k) => classes[a] = k,
            None => {
                classes[a] = reps.len();
                reps.push(a);
            }
        }
    }
    for a in 0..m {
        for b in 0..m {
            if c.compatible(s, a, b) != (classes[a] == classes[b]) {
                return Err(Error::Precondition(format!("~ is not transitive on C(S) at ({a}, {b})")));
            }
        }
    }
    let table: Vec<Vec<usize>> =
        reps.iter().map(|&a| reps.iter().map(|&b| classes[c.mul(a, b)]).collect()).collect();
    let group = GroupTable::from_table(&table)?;
    let one = s.identity().expect("checked by clifford");
    let (_, units) = unit_group(s)?;
    let mut to_units = vec![usize::MAX; reps.len()];
    for a in 0..m {
        let x = c.elements[a];
        let u = phi(s, s.d(x), one, x)?;
        match to_units[classes[a]] {
            usize::MAX => to_units[classes[a]] = u,
            v if v != u => return Err(Error::Precondition("[a] ↦ φ^e_1(a) is not well defined".into())),
            _ => {}
        }
    }
    let mut sorted = to_units.clone();
    sorted.sort_unstable();
    if sorted != units {
        return Err(Error::Precondition("U(S) does not match the unit group".into()));
    }
    for i in 0..reps.len() {
        for j in 0..reps.len() {
            if to_units[group.mul(i, j)] != s.mul(to_units[i], to_units[j]) {
                return Err(Error::NotHomomorphism("U(S) → units".into()));
            }
        }
    }
    Ok(GroupOfUnits { clifford: c, group, classes, to_units })
}

/// The full group of `G^∞` against the unit groups on the semigroup side.
#[derive(Debug, Clone)]
pub struct FullGroupReport {
    /// Bisections `A` of `G^∞` with `A⁻¹A = AA⁻¹ = G^∞_o`.
    pub full_group: Vec<Vec<usize>>,
    pub group: GroupTable,
    /// Units of `KB(G^∞)`.
    pub units: GroupTable,
    /// `U(KB(G)) = C(KB(G))/σ`.
    pub sigma_units: GroupTable,
    /// `A` is the same set as a unit of `KB(G^∞)` and this is a group isomorphism.
    pub units_iso: bool,
    /// `A = B ⊕ (G^∞_o \ d(B))` with `B ⊆ G` moving every point of `d(B)`,
    /// and `A ↦ [B]_σ` is a group isomorphism.
    pub sigma_iso: bool,
}

pub fn units_vs_full_group(g: &FinGroupoid, cap: usize) -> Result<FullGroupReport> {
    let g_inf = g.adjoin_identity();
    let inf = g_inf.size() - 1;
    let t = kb(&g_inf, cap)?;
    let ids = g_inf.identities().to_vec();
    let full_group: Vec<Vec<usize>> = t
        .bisections
        .iter()
        .filter(|a| {
            let inv: Vec<usize> = a.iter().map(|&x| g_inf.inv(x)).collect();
            g_inf.subset_product(&inv, a) == ids && g_inf.subset_product(a, &inv) == ids
        })
        .cloned()
        .collect();
    let pos = |a: &[usize]| full_group.iter().position(|b| b == a).expect("full bisections form a group");
    let table: Vec<Vec<usize>> = full_group
        .iter()
        .map(|a| full_group.iter().map(|b| pos(&g_inf.subset_product(a, b))).collect())
        .collect();
    let group = GroupTable::from_table(&table)?;
    let n = full_group.len();
    let is_iso = |map: &[usize], target: &GroupTable| {
        let mut hit = vec![false; target.order()];
        map.iter().for_each(|&y| hit[y] = true);
        target.order() == n
            && hit.iter().all(|&h| h)
            && (0..n).all(|i| (0..n).all(|j| map[group.mul(i, j)] == target.mul(map[i], map[j])))
    };

    let (units, unit_elems) = unit_group(&t.semigroup)?;
    let to_units: Vec<usize> = full_group
        .iter()
        .map(|a| t.index_of(a).and_then(|k| unit_elems.binary_search(&k).ok()).unwrap_or(usize::MAX))
        .collect();
    let units_iso = !to_units.contains(&usize::MAX) && is_iso(&to_units, &units);

    let small = kb(g, cap)?;
    let sigma = group_of_units(&small.semigroup)?;
    let to_sigma: Vec<usize> = full_group
        .iter()
        .map(|a| {
            let b: Vec<usize> = a.iter().copied().filter(|&x| x != inf && !g_inf.is_identity(x)).collect();
            small
                .index_of(&b)
                .and_then(|k| sigma.clifford.index_of(k))
                .map_or(usize::MAX, |c| sigma.classes[c])
        })
        .collect();
    let sigma_iso = !to_sigma.contains(&usize::MAX) && is_iso(&to_sigma, &sigma.group);
    Ok(FullGroupReport { full_group, group, units, sigma_units: sigma.group, units_iso, sigma_iso })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invsemi::construct::*;

    #[test]
    fn finite_unitization_sizes() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let u = unitize_finite(&i2).unwrap();
        assert_eq!(u.monoid.size(), 14);
        let z = unitize_finite(&zero_semigroup()).unwrap();
        assert_eq!(z.monoid.size(), 2);
        assert_eq!(z.monoid.idempotents().len(), 2);
        // the new identity is the old top together with the point at infinity
        let one = u.identity();
        let mut expected: Vec<usize> = u.bisections[u.embedding[i2.identity().unwrap()]].clone();
        expected.push(u.infinity);
        assert_eq!(u.bisections[one], expected);
    }

    #[test]
    fn clifford_of_i2() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let c = clifford(&i2).unwrap();
        assert_eq!(c.size(), 5);
        let id1 = i_n_element(2, &[(1, 1)]).unwrap();
        let one = i2.identity().unwrap();
        assert_eq!(phi(&i2, id1, one, id1).unwrap(), one);
        let b = boolean_algebra_semilattice(2).unwrap();
        let cb = clifford(&b).unwrap();
        assert_eq!(cb.size(), 4);
        assert_eq!(cb.idempotents().len(), 4);
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(cb.elements[cb.mul(x, y)], b.join(cb.elements[x], cb.elements[y]).unwrap());
            }
        }
    }

    #[test]
    fn groups_of_units() {
        let orders = [(2, 2), (3, 6)];
        for (n, order) in orders {
            let s = symmetric_inverse_monoid(n).unwrap();
            let u = group_of_units(&s).unwrap();
            assert_eq!(u.group.order(), order);
            assert!(u.group.isomorphism_to(&GroupTable::symmetric(n)).is_some());
        }
        let b = boolean_algebra_semilattice(3).unwrap();
        assert_eq!(group_of_units(&b).unwrap().group.order(), 1);
    }

    #[test]
    fn full_groups() {
        let r = units_vs_full_group(&FinGroupoid::pair(2).unwrap(), DEFAULT_KB_CAP).unwrap();
        assert_eq!(r.group.order(), 2);
        assert!(r.units_iso && r.sigma_iso);
        let one = units_vs_full_group(&FinGroupoid::pair(1).unwrap(), DEFAULT_KB_CAP).unwrap();
        assert_eq!(one.group.order(), 1);
        let comp = FinGroupoid::from_components(&[(2, GroupTable::cyclic(2))]).unwrap();
        let r = units_vs_full_group(&comp, DEFAULT_KB_CAP).unwrap();
        assert_eq!(r.group.order(), 8);
        assert!(r.units_iso && r.sigma_iso);
    }
}
