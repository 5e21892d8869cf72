//! Finite groupoids, their local bisections and the Boolean inverse monoid
//! `KB(G)` of all local bisections under subset multiplication.
//!
//! A finite Boolean groupoid carries the discrete topology, so every subset
//! is compact-open and the topological predicates reduce to the discrete
//! ones implemented here.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::group::GroupTable;
use crate::invsemi::FinInvSemi;
use crate::iso::{self, PartialMagma};
use crate::{Error, Result};

const NONE: u32 = u32::MAX;

/// Default cap on the number of local bisections enumerated by [`kb`].
pub const DEFAULT_KB_CAP: usize = 5000;

/// A finite groupoid with partial product `ab`, defined iff `d(a) = r(b)`.
#[derive(Debug, Clone)]
pub struct FinGroupoid {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    is_id: Vec<bool>,
    identities: Vec<usize>,
    names: Option<Vec<String>>,
}

impl PartialEq for FinGroupoid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.mul == other.mul && self.inv == other.inv && self.is_id == other.is_id
    }
}

impl Eq for FinGroupoid {}

impl FinGroupoid {
    /// Validates a partial table: the listed identities are the units,
    /// `ab` is defined exactly when `d(a) = r(b)`, products are associative
    /// and identities act as units.
    pub fn from_tables(mul: &[Vec<Option<usize>>], inv: &[usize], identities: &[usize]) -> Result<Self> {
        let n = mul.len();
        if inv.len() != n {
            return Err(Error::InvalidTable(format!("{} inverses for {n} elements", inv.len())));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            for &x in row {
                flat.push(match x {
                    Some(x) if x >= n => return Err(Error::IndexOutOfRange { index: x, size: n }),
                    Some(x) => x as u32,
                    None => NONE,
                });
            }
        }
        Self::from_flat(n, flat, inv.to_vec(), identities)
    }

    pub fn from_fn(
        n: usize,
        mul: impl Fn(usize, usize) -> Option<usize>,
        inv: impl Fn(usize) -> usize,
        identities: &[usize],
    ) -> Result<Self> {
        let flat = (0..n * n).map(|k| mul(k / n, k % n).map_or(NONE, |x| x as u32)).collect();
        Self::from_flat(n, flat, (0..n).map(inv).collect(), identities)
    }

    fn from_flat(n: usize, mul: Vec<u32>, inv: Vec<usize>, identities: &[usize]) -> Result<Self> {
        if let Some(&bad) = inv.iter().chain(identities).find(|&&x| x >= n) {
            return Err(Error::IndexOutOfRange { index: bad, size: n });
        }
        if mul.iter().any(|&x| x != NONE && x as usize >= n) {
            return Err(Error::InvalidTable("product out of range".into()));
        }
        let mut is_id = vec![false; n];
        for &e in identities {
            is_id[e] = true;
        }
        let g = Self {
            n,
            mul,
            inv: inv.iter().map(|&x| x as u32).collect(),
            is_id,
            identities: (0..n).filter(|&x| identities.contains(&x)).collect(),
            names: None,
        };
        g.validate()?;
        Ok(g)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for a in 0..n {
            let (d, r) = match (self.mul(self.inv(a), a), self.mul(a, self.inv(a))) {
                (Some(d), Some(r)) => (d, r),
                _ => return Err(Error::NotGroupoid(format!("{a}⁻¹{a} or {a}{a}⁻¹ is undefined"))),
            };
            if !self.is_id[d] || !self.is_id[r] {
                return Err(Error::NotGroupoid(format!("d({a}) or r({a}) is not an identity")));
            }
            if self.mul(r, a) != Some(a) || self.mul(a, d) != Some(a) {
                return Err(Error::NotGroupoid(format!("identities do not act as units on {a}")));
            }
            if self.inv(self.inv(a)) != a {
                return Err(Error::NotGroupoid(format!("inverse of {a} is not an involution")));
            }
        }
        for &e in &self.identities {
            if self.mul(e, e) != Some(e) || self.inv(e) != e {
                return Err(Error::NotGroupoid(format!("{e} is listed as an identity but is not one")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let defined = self.mul(a, b).is_some();
                if defined != (self.d(a) == self.r(b)) {
                    return Err(Error::NotGroupoid(format!(
                        "{a}·{b} definedness disagrees with d({a}) = r({b})"
                    )));
                }
                let Some(ab) = self.mul(a, b) else { continue };
                for c in 0..n {
                    if self.d(b) != self.r(c) {
                        continue;
                    }
                    let left = self.mul(ab, c);
                    let right = self.mul(b, c).and_then(|bc| self.mul(a, bc));
                    if left.is_none() || left != right {
                        return Err(Error::NotGroupoid(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::InvalidTable(format!("{} names for {} elements", names.len(), self.n)));
        }
        self.names = Some(names);
        Ok(self)
    }

    /// The empty groupoid.
    pub fn empty() -> Self {
        Self { n: 0, mul: Vec::new(), inv: Vec::new(), is_id: Vec::new(), identities: Vec::new(), names: None }
    }

    /// Disjoint union of the groupoids `X_i × H_i × X_i` with
    /// `(x, h, y)(y, h′, z) = (x, hh′, z)`. Points are numbered globally from 1.
    pub fn from_components(components: &[(usize, GroupTable)]) -> Result<Self> {
        let mut triples: Vec<(usize, usize, usize, usize)> = Vec::new(); // (component, x, h, y)
        let mut offset = 0;
        let mut offsets = Vec::new();
        for (c, (points, h)) in components.iter().enumerate() {
            if *points == 0 {
                return Err(Error::Precondition(format!("component {c} has no points")));
            }
            offsets.push(offset);
            for x in 0..*points {
                for k in 0..h.order() {
                    for y in 0..*points {
                        triples.push((c, x, k, y));
                    }
                }
            }
            offset += points;
        }
        let index: BTreeMap<(usize, usize, usize, usize), usize> =
            triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let identities: Vec<usize> = triples
            .iter()
            .enumerate()
            .filter(|(_, &(c, x, k, y))| x == y && k == components[c].1.identity())
            .map(|(i, _)| i)
            .collect();
        let g = Self::from_fn(
            triples.len(),
            |a, b| {
                let (c1, x, h, y) = triples[a];
                let (c2, y2, h2, z) = triples[b];
                (c1 == c2 && y == y2).then(|| index[&(c1, x, components[c1].1.mul(h, h2), z)])
            },
            |a| {
                let (c, x, h, y) = triples[a];
                index[&(c, y, components[c].1.inv(h), x)]
            },
            &identities,
        )?;
        let names = triples
            .iter()
            .map(|&(c, x, h, y)| format!("({},g{h},{})", offsets[c] + x + 1, offsets[c] + y + 1))
            .collect();
        g.with_names(names)
    }

    /// The pair groupoid `X × X` on `n` points.
    pub fn pair(n: usize) -> Result<Self> {
        Self::from_components(&[(n, GroupTable::trivial())])
    }

    /// The discrete space on `k` points: `k` identities and nothing else.
    pub fn discrete(k: usize) -> Result<Self> {
        let comps: Vec<(usize, GroupTable)> = (0..k).map(|_| (1, GroupTable::trivial())).collect();
        Self::from_components(&comps)
    }

    /// `G ⊔ H`, with the elements of `H` shifted by `|G|`.
    pub fn disjoint_union(&self, other: &FinGroupoid) -> FinGroupoid {
        let n = self.n;
        let mut identities = self.identities.clone();
        identities.extend(other.identities.iter().map(|&e| e + n));
        let g = Self::from_fn(
            n + other.n,
            |a, b| match (a < n, b < n) {
                (true, true) => self.mul(a, b),
                (false, false) => other.mul(a - n, b - n).map(|x| x + n),
                _ => None,
            },
            |a| if a < n { self.inv(a) } else { other.inv(a - n) + n },
            &identities,
        )
        .expect("a disjoint union of groupoids is a groupoid");
        let names = (0..n).map(|a| self.name(a)).chain((0..other.n).map(|a| format!("{}'", other.name(a)))).collect();
        g.with_names(names).expect("sizes match")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, g: usize) -> String {
        match &self.names {
            Some(ns) => ns[g].clone(),
            None => format!("{g}"),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> Option<usize> {
        let x = self.mul[a * self.n + b];
        (x != NONE).then_some(x as usize)
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `d(g) = g⁻¹g`.
    pub fn d(&self, g: usize) -> usize {
        self.mul(self.inv(g), g).expect("validated")
    }

    /// `r(g) = gg⁻¹`.
    pub fn r(&self, g: usize) -> usize {
        self.mul(g, self.inv(g)).expect("validated")
    }

    pub fn is_identity(&self, g: usize) -> bool {
        self.is_id[g]
    }

    /// `G_o` in increasing order.
    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn mul_table(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn inv_table(&self) -> Vec<usize> {
        (0..self.n).map(|a| self.inv(a)).collect()
    }

    /// `St_e = {g : d(g) = e}`.
    pub fn star(&self, e: usize) -> Vec<usize> {
        (0..self.n).filter(|&g| self.d(g) == e).collect()
    }

    /// Connected components as sorted lists of identities, ordered by their
    /// least identity.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut label: Vec<Option<usize>> = vec![None; self.n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for &e in &self.identities {
            if label[e].is_some() {
                continue;
            }
            let members: Vec<usize> = self
                .identities
                .iter()
                .copied()
                .filter(|&f| (0..self.n).any(|g| self.d(g) == e && self.r(g) == f))
                .collect();
            for &f in &members {
                label[f] = Some(comps.len());
            }
            comps.push(members);
        }
        comps
    }

    /// The local group `G_e` and its elements in increasing order.
    pub fn local_group(&self, e: usize) -> Result<(GroupTable, Vec<usize>)> {
        if e >= self.n || !self.is_id[e] {
            return Err(Error::Precondition(format!("{e} is not an identity")));
        }
        let elems: Vec<usize> = (0..self.n).filter(|&g| self.d(g) == e && self.r(g) == e).collect();
        let pos = |g: usize| elems.iter().position(|&x| x == g).expect("closed");
        let table: Vec<Vec<usize>> = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos(self.mul(a, b).expect("same identity"))).collect())
            .collect();
        Ok((GroupTable::from_table(&table)?, elems))
    }

    /// `Iso(G)`, the union of the local groups.
    pub fn iso_part(&self) -> Vec<usize> {
        (0..self.n).filter(|&g| self.d(g) == self.r(g)).collect()
    }

    /// Decided by the uniqueness characterization: distinct elements of `A`
    /// have distinct domains and distinct ranges.
    pub fn is_local_bisection(&self, a: &[usize]) -> bool {
        a.iter().enumerate().all(|(i, &x)| {
            a[i + 1..].iter().all(|&y| x == y || (self.d(x) != self.d(y) && self.r(x) != self.r(y)))
        })
    }

    /// Decided by the definition `A⁻¹A ⊆ G_o` and `AA⁻¹ ⊆ G_o`.
    pub fn is_local_bisection_by_products(&self, a: &[usize]) -> bool {
        let inv: Vec<usize> = a.iter().map(|&x| self.inv(x)).collect();
        self.subset_product(&inv, a).iter().all(|&g| self.is_id[g])
            && self.subset_product(a, &inv).iter().all(|&g| self.is_id[g])
    }

    /// `AB = {ab : a ∈ A, b ∈ B, d(a) = r(b)}`, sorted.
    pub fn subset_product(&self, a: &[usize], b: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = a
            .iter()
            .flat_map(|&x| b.iter().filter_map(move |&y| self.mul(x, y)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// All local bisections, each sorted, ordered by size then
    /// lexicographically; the empty set comes first.
    pub fn local_bisections(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let by_domain: Vec<Vec<usize>> = self.identities.iter().map(|&e| self.star(e)).collect();
        let mut out = Vec::new();
        let mut used_range = vec![false; self.n];
        let mut cur = Vec::new();
        self.extend_bisections(0, &by_domain, &mut used_range, &mut cur, &mut out, cap)?;
        for b in out.iter_mut() {
            b.sort_unstable();
        }
        out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
        Ok(out)
    }

    fn extend_bisections(
        &self,
        i: usize,
        by_domain: &[Vec<usize>],
        used_range: &mut [bool],
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        if i == by_domain.len() {
            if out.len() >= cap {
                return Err(Error::CapExceeded { what: "local bisections", size: out.len() + 1, cap });
            }
            out.push(cur.clone());
            return Ok(());
        }
        self.extend_bisections(i + 1, by_domain, used_range, cur, out, cap)?;
        for &g in &by_domain[i] {
            let r = self.r(g);
            if !used_range[r] {
                used_range[r] = true;
                cur.push(g);
                self.extend_bisections(i + 1, by_domain, used_range, cur, out, cap)?;
                cur.pop();
                used_range[r] = false;
            }
        }
        Ok(())
    }

    /// Principal: at most one arrow between any two identities.
    pub fn is_principal(&self) -> bool {
        (0..self.n).all(|a| {
            (a + 1..self.n).all(|b| self.d(a) != self.d(b) || self.r(a) != self.r(b))
        })
    }

    /// Effective, discrete case: `Iso(G) = G_o`.
    pub fn is_effective_discrete(&self) -> bool {
        self.iso_part() == self.identities
    }

    /// Minimal, discrete case: the only invariant subsets of `G_o` are `∅`
    /// and `G_o`, i.e. exactly one connected component.
    pub fn is_minimal_discrete(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Finite groupoids are discrete, hence Hausdorff.
    pub fn is_hausdorff_discrete(&self) -> bool {
        true
    }

    /// `G^∞ = G ∪ {∞}` with a new isolated identity `∞` at index `size()`.
    pub fn adjoin_identity(&self) -> FinGroupoid {
        let n = self.n;
        let inf = n;
        let mut identities = self.identities.clone();
        identities.push(inf);
        let g = Self::from_fn(
            n + 1,
            |a, b| match (a == inf, b == inf) {
                (true, true) => Some(inf),
                (false, false) => self.mul(a, b),
                _ => None,
            },
            |a| if a == inf { inf } else { self.inv(a) },
            &identities,
        )
        .expect("adjoining an isolated identity preserves the axioms");
        let names = (0..=n).map(|a| if a == inf { String::from("inf") } else { self.name(a) }).collect();
        g.with_names(names).expect("sizes match")
    }

    /// An explicit isomorphism onto `other`, if one exists.
    pub fn isomorphism_to(&self, other: &FinGroupoid) -> Option<Vec<usize>> {
        if self.identities.len() != other.identities.len() {
            return None;
        }
        iso::find_isomorphism(self, other)
    }

    pub fn is_isomorphic(&self, other: &FinGroupoid) -> bool {
        self.isomorphism_to(other).is_some()
    }
}

impl PartialMagma for FinGroupoid {
    fn size(&self) -> usize {
        self.n
    }
    fn product(&self, a: usize, b: usize) -> Option<usize> {
        self.mul(a, b)
    }
    fn inverse(&self, a: usize) -> usize {
        self.inv(a)
    }
}

/// `KB(G)` together with the local bisection behind each element.
#[derive(Debug, Clone)]
pub struct Kb {
    pub semigroup: FinInvSemi,
    pub bisections: Vec<Vec<usize>>,
}

impl Kb {
    /// The element whose bisection is `a` (sorted).
    pub fn index_of(&self, a: &[usize]) -> Option<usize> {
        self.bisections.binary_search_by(|x| x.len().cmp(&a.len()).then_with(|| x.as_slice().cmp(a))).ok()
    }
}

/// All local bisections of `g` under subset multiplication.
pub fn kb(g: &FinGroupoid, cap: usize) -> Result<Kb> {
    let bisections = g.local_bisections(cap)?;
    let index: BTreeMap<&[usize], usize> = bisections.iter().enumerate().map(|(i, b)| (b.as_slice(), i)).collect();
    let m = bisections.len();
    let mut mul = Vec::with_capacity(m * m);
    for a in &bisections {
        for b in &bisections {
            let p = g.subset_product(a, b);
            mul.push(*index.get(p.as_slice()).ok_or_else(|| {
                Error::NotGroupoid("a product of local bisections is not a local bisection".into())
            })? as u32);
        }
    }
    let inv = bisections
        .iter()
        .map(|a| {
            let mut i: Vec<usize> = a.iter().map(|&x| g.inv(x)).collect();
            i.sort_unstable();
            index[i.as_slice()] as u32
        })
        .collect();
    let s = FinInvSemi::from_flat(m, mul, inv, 0)?;
    let names = bisections
        .iter()
        .map(|b| {
            let parts: Vec<String> = b.iter().map(|&x| g.name(x)).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    Ok(Kb { semigroup: s.with_names(names)?, bisections })
}

/// A functor between finite groupoids, as an element map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidFunctor<'a> {
    pub source: &'a FinGroupoid,
    pub target: &'a FinGroupoid,
    map: Vec<usize>,
}

impl<'a> GroupoidFunctor<'a> {
    /// Checks that `map` sends identities to identities, inverses to
    /// inverses and defined products to defined products.
    pub fn new(source: &'a FinGroupoid, target: &'a FinGroupoid, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::InvalidTable("functor map must be total".into()));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.size()) {
            return Err(Error::IndexOutOfRange { index: bad, size: target.size() });
        }
        for a in 0..source.size() {
            if source.is_identity(a) && !target.is_identity(map[a]) {
                return Err(Error::NotFunctor(format!("identity {} is not sent to an identity", source.name(a))));
            }
            if map[source.inv(a)] != target.inv(map[a]) {
                return Err(Error::NotFunctor(format!("inverse of {} is not preserved", source.name(a))));
            }
            for b in 0..source.size() {
                if let Some(ab) = source.mul(a, b) {
                    if target.mul(map[a], map[b]) != Some(map[ab]) {
                        return Err(Error::NotFunctor(format!(
                            "product {}·{} is not preserved",
                            source.name(a),
                            source.name(b)
                        )));
                    }
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(g: &'a FinGroupoid) -> Self {
        Self { source: g, target: g, map: (0..g.size()).collect() }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, g: usize) -> usize {
        self.map[g]
    }

    /// `self ∘ first`.
    pub fn after<'b>(&self, first: &GroupoidFunctor<'b>) -> Result<GroupoidFunctor<'b>>
    where
        'a: 'b,
    {
        if first.target != self.source {
            return Err(Error::Precondition("functors are not composable".into()));
        }
        let map = first.map.iter().map(|&y| self.map[y]).collect();
        Ok(GroupoidFunctor { source: first.source, target: self.target, map })
    }

    fn star_counts(&self, e: usize) -> Vec<usize> {
        let fe = self.map[e];
        let mut counts: Vec<usize> = vec![0; self.target.size()];
        for g in self.source.star(e) {
            counts[self.map[g]] += 1;
        }
        self.target.star(fe).into_iter().map(|h| counts[h]).collect()
    }

    /// `St_e → St_θ(e)` is injective for every identity `e`.
    pub fn is_star_injective(&self) -> bool {
        self.source.identities().iter().all(|&e| self.star_counts(e).iter().all(|&c| c <= 1))
            && self.source.identities().iter().all(|&e| {
                let images = self.source.star(e).len();
                let hit: usize = self.star_counts(e).iter().sum();
                images == hit
            })
    }

    /// `St_e → St_θ(e)` is surjective for every identity `e`.
    pub fn is_star_surjective(&self) -> bool {
        self.source.identities().iter().all(|&e| self.star_counts(e).iter().all(|&c| c >= 1))
    }

    /// Star-bijective.
    pub fn is_covering(&self) -> bool {
        self.is_star_injective() && self.is_star_surjective()
    }

    /// For `θ(x) = ab`, elements `u, v` with `x = uv`, `θ(u) = a`, `θ(v) = b`.
    pub fn lift_product(&self, x: usize, a: usize, b: usize) -> Result<(usize, usize)> {
        let (s, t) = (self.source, self.target);
        if t.mul(a, b) != Some(self.map[x]) {
            return Err(Error::Precondition("θ(x) is not the product ab".into()));
        }
        let v = s
            .star(s.d(x))
            .into_iter()
            .find(|&v| self.map[v] == b)
            .ok_or_else(|| Error::NotCovering(format!("no lift of {} in the star of d(x)", t.name(b))))?;
        let u = s.mul(x, s.inv(v)).expect("d(x) = d(v)");
        if s.mul(u, v) != Some(x) || self.map[u] != a {
            return Err(Error::NotCovering("lift does not factor x".into()));
        }
        Ok((u, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(points: usize, h: usize) -> FinGroupoid {
        FinGroupoid::from_components(&[(points, GroupTable::cyclic(h))]).unwrap()
    }

    #[test]
    fn components_construction() {
        let pair = FinGroupoid::pair(2).unwrap();
        assert_eq!(pair.size(), 4);
        let g = comp(2, 2);
        assert_eq!(g.size(), 8);
        for &e in g.identities() {
            let (h, _) = g.local_group(e).unwrap();
            assert!(h.isomorphism_to(&GroupTable::cyclic(2)).is_some());
        }
        let disc = FinGroupoid::discrete(2).unwrap();
        assert_eq!(disc.size(), 2);
        assert_eq!(disc.connected_components().len(), 2);
        assert_eq!(pair.connected_components().len(), 1);
        assert!(FinGroupoid::from_components(&[(0, GroupTable::trivial())]).is_err());
        assert!(pair.local_group(pair.identities()[0] + 1).is_err());
    }

    #[test]
    fn bisection_examples() {
        let pair = FinGroupoid::pair(2).unwrap();
        let id = |i: usize| pair.identities()[i];
        let arrow = |x: usize, y: usize| (0..4).find(|&g| pair.name(g) == format!("({x},g0,{y})")).unwrap();
        assert!(pair.is_local_bisection(&[id(0), id(1)]));
        // the arrow from 1 to 2 and the identity at 1 share a domain
        let a = [arrow(2, 1), arrow(1, 1)];
        assert!(!pair.is_local_bisection(&a));
        assert!(!pair.is_local_bisection_by_products(&a));
        let t = [arrow(1, 2), arrow(2, 1)];
        assert!(pair.is_local_bisection(&t));
        assert!(pair.is_local_bisection_by_products(&t));
    }

    #[test]
    fn kb_sizes() {
        let pair = FinGroupoid::pair(2).unwrap();
        let k = kb(&pair, DEFAULT_KB_CAP).unwrap();
        assert_eq!(k.semigroup.size(), 7);
        assert!(k.semigroup.is_boolean());
        assert_eq!(kb(&FinGroupoid::pair(1).unwrap(), 10).unwrap().semigroup.size(), 2);
        assert_eq!(kb(&comp(2, 2), DEFAULT_KB_CAP).unwrap().semigroup.size(), 17);
        assert!(kb(&comp(2, 2), 5).is_err());
        // idempotents are exactly the subsets of identities
        let idem: Vec<&Vec<usize>> = k.semigroup.idempotents().iter().map(|&e| &k.bisections[e]).collect();
        assert_eq!(idem.len(), 4);
        assert!(idem.iter().all(|b| b.iter().all(|&g| pair.is_identity(g))));
    }

    #[test]
    fn discrete_predicates() {
        let pair = FinGroupoid::pair(2).unwrap();
        assert!(pair.is_principal() && pair.is_effective_discrete() && pair.is_minimal_discrete());
        let g = comp(2, 2);
        assert!(!g.is_effective_discrete() && g.is_minimal_discrete() && !g.is_principal());
        assert!(!FinGroupoid::discrete(2).unwrap().is_minimal_discrete());
        assert!(g.is_hausdorff_discrete());
    }

    #[test]
    fn adjoined_identity() {
        let g = FinGroupoid::pair(2).unwrap().adjoin_identity();
        assert_eq!(g.size(), 5);
        assert_eq!(g.identities().len(), 3);
        let e = FinGroupoid::empty().adjoin_identity();
        assert_eq!(e.size(), 1);
        assert_eq!(e.identities(), &[0]);
        assert_eq!(kb(&g, DEFAULT_KB_CAP).unwrap().semigroup.size(), 14);
    }

    #[test]
    fn functors_and_lifts() {
        let g = comp(2, 2);
        let id = GroupoidFunctor::identity(&g);
        assert!(id.is_covering());
        let pair = FinGroupoid::pair(2).unwrap();
        // forget the label: (x, h, y) ↦ (x, y)
        let map: Vec<usize> = (0..g.size())
            .map(|a| {
                let name = g.name(a);
                let x = &name[1..2];
                let y = &name[name.len() - 2..name.len() - 1];
                (0..4).find(|&p| pair.name(p) == format!("({x},g0,{y})")).unwrap()
            })
            .collect();
        let forget = GroupoidFunctor::new(&g, &pair, map).unwrap();
        assert!(!forget.is_star_injective());
        assert!(forget.is_star_surjective());
        assert!(!forget.is_covering());

        let two = FinGroupoid::from_components(&[(2, GroupTable::trivial()), (2, GroupTable::trivial())]).unwrap();
        let incl = GroupoidFunctor::new(&pair, &two, (0..4).collect()).unwrap();
        assert!(incl.is_covering());
        for x in 0..pair.size() {
            for a in 0..two.size() {
                for b in 0..two.size() {
                    if two.mul(a, b) == Some(incl.apply(x)) {
                        let (u, v) = incl.lift_product(x, a, b).unwrap();
                        assert_eq!(pair.mul(u, v), Some(x));
                    }
                }
            }
        }
    }
}
