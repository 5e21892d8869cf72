//! Named constructions: symmetric inverse monoids, groups with zero, rook
//! matrices over a group with zero, products, semilattices and generated
//! subalgebras.
//!
//! Points of `I_n` are printed 1-based in element names, so `[1>2]` is the
//! partial bijection sending the first point to the second.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;
use rand::Rng;

use super::FinInvSemi;
use crate::group::GroupTable;
use crate::{Error, Result};

/// Largest `n` accepted by [`symmetric_inverse_monoid`].
pub const MAX_SYMMETRIC: usize = 5;

/// Largest table accepted by [`rook_matrices`].
pub const ROOK_CAP: usize = 400;

/// A partial bijection of `{0..ground-1}`: `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialBijection {
    ground: usize,
    images: Vec<Option<usize>>,
}

impl PartialBijection {
    /// Builds a partial bijection from its graph, checking injectivity both ways.
    pub fn from_graph(ground: usize, graph: &[(usize, usize)]) -> Result<Self> {
        let mut images = vec![None; ground];
        let mut hit = vec![false; ground];
        for &(x, y) in graph {
            if x >= ground || y >= ground {
                return Err(Error::IndexOutOfRange { index: x.max(y), size: ground });
            }
            if images[x].is_some() || hit[y] {
                return Err(Error::Precondition(format!("graph is not injective at ({x}, {y})")));
            }
            images[x] = Some(y);
            hit[y] = true;
        }
        Ok(Self { ground, images })
    }

    pub fn empty(ground: usize) -> Self {
        Self { ground, images: vec![None; ground] }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.images.get(x).copied().flatten()
    }

    /// The graph as sorted `(source, image)` pairs.
    pub fn graph(&self) -> Vec<(usize, usize)> {
        self.images.iter().enumerate().filter_map(|(x, y)| y.map(|y| (x, y))).collect()
    }

    pub fn rank(&self) -> usize {
        self.images.iter().flatten().count()
    }

    /// `self·other`: apply `other`, then `self`.
    pub fn compose(&self, other: &PartialBijection) -> PartialBijection {
        let images = other.images.iter().map(|y| y.and_then(|y| self.apply(y))).collect();
        PartialBijection { ground: self.ground, images }
    }

    pub fn inverse(&self) -> PartialBijection {
        let mut images = vec![None; self.ground];
        for (x, y) in self.graph() {
            images[y] = Some(x);
        }
        PartialBijection { ground: self.ground, images }
    }

    /// `[1>2,2>1]` style name with 1-based points; `0` for the empty map.
    pub fn name(&self) -> String {
        if self.rank() == 0 {
            return "0".into();
        }
        let parts: Vec<String> = self.graph().iter().map(|(x, y)| format!("{}>{}", x + 1, y + 1)).collect();
        format!("[{}]", parts.join(","))
    }
}

/// All partial bijections of an `n`-set, ordered by rank and then by graph;
/// the empty map comes first.
pub fn partial_bijections(n: usize) -> Vec<PartialBijection> {
    fn go(i: usize, n: usize, cur: &mut Vec<Option<usize>>, used: &mut [bool], out: &mut Vec<PartialBijection>) {
        if i == n {
            out.push(PartialBijection { ground: n, images: cur.clone() });
            return;
        }
        cur.push(None);
        go(i + 1, n, cur, used, out);
        cur.pop();
        for y in 0..n {
            if !used[y] {
                used[y] = true;
                cur.push(Some(y));
                go(i + 1, n, cur, used, out);
                cur.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out.sort_by_cached_key(|p| (p.rank(), p.graph()));
    out
}

/// The element of `I_n` with the given graph, points 1-based.
pub fn i_n_element(n: usize, graph: &[(usize, usize)]) -> Result<usize> {
    let zero_based: Vec<(usize, usize)> = graph
        .iter()
        .map(|&(x, y)| {
            if x == 0 || y == 0 {
                Err(Error::IndexOutOfRange { index: 0, size: n })
            } else {
                Ok((x - 1, y - 1))
            }
        })
        .collect::<Result<_>>()?;
    let p = PartialBijection::from_graph(n, &zero_based)?;
    Ok(partial_bijections(n).iter().position(|q| *q == p).expect("every partial bijection is listed"))
}

/// `I_n`, all partial bijections of an `n`-set under composition.
pub fn symmetric_inverse_monoid(n: usize) -> Result<FinInvSemi> {
    if n > MAX_SYMMETRIC {
        return Err(Error::CapExceeded { what: "symmetric inverse monoid", size: n, cap: MAX_SYMMETRIC });
    }
    let elems = partial_bijections(n);
    let index: BTreeMap<&PartialBijection, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let pos = |p: PartialBijection| index[&p];
    let s = FinInvSemi::from_fn(
        elems.len(),
        |a, b| pos(elems[a].compose(&elems[b])),
        |a| pos(elems[a].inverse()),
        0,
    )?;
    s.with_names(elems.iter().map(PartialBijection::name).collect())
}

/// `G⁰`: element 0 is the adjoined zero and `k + 1` is group element `k`.
pub fn group_with_zero(g: &GroupTable) -> Result<FinInvSemi> {
    let n = g.order() + 1;
    let s = FinInvSemi::from_fn(
        n,
        |a, b| if a == 0 || b == 0 { 0 } else { g.mul(a - 1, b - 1) + 1 },
        |a| if a == 0 { 0 } else { g.inv(a - 1) + 1 },
        0,
    )?;
    let names = core::iter::once(String::from("0")).chain((0..g.order()).map(|k| format!("g{k}"))).collect();
    s.with_names(names)
}

type Labelled = Vec<Option<(usize, usize)>>;

/// `R_n(G⁰)`: partial bijections of an `n`-set whose arrows carry labels from
/// `G`. The product applies the right factor first and multiplies labels as
/// `i ↦ (j, g)` then `j ↦ (k, h)` gives `i ↦ (k, hg)`.
pub fn rook_matrices(n: usize, g: &GroupTable) -> Result<FinInvSemi> {
    let mut elems: Vec<Labelled> = Vec::new();
    for p in partial_bijections(n) {
        let dom: Vec<(usize, usize)> = p.graph();
        let combos = g.order().pow(dom.len() as u32);
        if elems.len() + combos > ROOK_CAP {
            return Err(Error::CapExceeded { what: "rook matrices", size: elems.len() + combos, cap: ROOK_CAP });
        }
        for mut code in 0..combos {
            let mut m = vec![None; n];
            for &(x, y) in &dom {
                m[x] = Some((y, code % g.order()));
                code /= g.order();
            }
            elems.push(m);
        }
    }
    let find = |m: &Labelled| elems.iter().position(|q| q == m).expect("closed under products");
    let mul = |a: usize, b: usize| {
        let (x, y) = (&elems[a], &elems[b]);
        let m: Labelled = y
            .iter()
            .map(|arrow| {
                let (j, gl) = (*arrow)?;
                let (k, hl) = x[j]?;
                Some((k, g.mul(hl, gl)))
            })
            .collect();
        find(&m)
    };
    let inv = |a: usize| {
        let mut m = vec![None; n];
        for (i, arrow) in elems[a].iter().enumerate() {
            if let Some((j, gl)) = *arrow {
                m[j] = Some((i, g.inv(gl)));
            }
        }
        find(&m)
    };
    let size = elems.len();
    let flat: Vec<u32> = (0..size * size).map(|k| mul(k / size, k % size) as u32).collect();
    let inv_table = (0..size).map(|a| inv(a) as u32).collect();
    let s = FinInvSemi::from_flat(size, flat, inv_table, 0)?;
    let names = elems
        .iter()
        .map(|m| {
            let parts: Vec<String> = m
                .iter()
                .enumerate()
                .filter_map(|(i, a)| a.map(|(j, l)| format!("{}>{}:g{l}", i + 1, j + 1)))
                .collect();
            if parts.is_empty() {
                "0".into()
            } else {
                format!("[{}]", parts.join(","))
            }
        })
        .collect();
    s.with_names(names)
}

/// `S × T` with element `(a, b)` at index `a·|T| + b`.
pub fn direct_product(s: &FinInvSemi, t: &FinInvSemi) -> Result<FinInvSemi> {
    let m = t.size();
    let size = s.size() * m;
    if size > super::MAX_SIZE {
        return Err(Error::CapExceeded { what: "direct product", size, cap: super::MAX_SIZE });
    }
    let p = FinInvSemi::from_fn(
        size,
        |a, b| s.mul(a / m, b / m) * m + t.mul(a % m, b % m),
        |a| s.inv(a / m) * m + t.inv(a % m),
        s.zero() * m + t.zero(),
    )?;
    let names = (0..size).map(|a| format!("({},{})", s.name(a / m), t.name(a % m))).collect();
    p.with_names(names)
}

/// The powerset of a `k`-set as a semilattice under intersection.
pub fn boolean_algebra_semilattice(k: u32) -> Result<FinInvSemi> {
    let size = 1usize << k;
    let s = FinInvSemi::from_fn(size, |a, b| a & b, |a| a, 0)?;
    let names = (0..size)
        .map(|m| {
            let parts: Vec<String> = (0..k).filter(|i| m & (1 << i) != 0).map(|i| format!("{}", i + 1)).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    s.with_names(names)
}

/// The chain `0 < 1 < … < n-1` as a semilattice under minimum.
pub fn chain_semilattice(n: usize) -> Result<FinInvSemi> {
    FinInvSemi::from_fn(n, |a, b| a.min(b), |a| a, 0)
}

/// The one-element semigroup `{0}`.
pub fn zero_semigroup() -> FinInvSemi {
    FinInvSemi::from_fn(1, |_, _| 0, |_| 0, 0).expect("trivial table")
}

/// The subalgebra generated by `gens` and 0: closed under products,
/// inverses, compatible joins and relative complements of idempotents.
/// Returns the subalgebra and its inclusion into `s`.
pub fn subalgebra_generated(s: &FinInvSemi, gens: &[usize], cap: usize) -> Result<(FinInvSemi, Vec<usize>)> {
    let n = s.size();
    if let Some(&bad) = gens.iter().find(|&&g| g >= n) {
        return Err(Error::IndexOutOfRange { index: bad, size: n });
    }
    let mut inside = FixedBitSet::with_capacity(n);
    inside.insert(s.zero());
    for &g in gens {
        inside.insert(g);
    }
    loop {
        let members: Vec<usize> = inside.ones().collect();
        if members.len() > cap {
            return Err(Error::CapExceeded { what: "generated subalgebra", size: members.len(), cap });
        }
        let mut next = inside.clone();
        for &a in &members {
            next.insert(s.inv(a));
            for &b in &members {
                next.insert(s.mul(a, b));
                if let Some(j) = s.join(a, b) {
                    next.insert(j);
                }
                if s.is_idempotent(a) && s.is_idempotent(b) {
                    if let Some(c) = s.idempotent_relcomplement(a, b) {
                        next.insert(c);
                    }
                }
            }
        }
        if next == inside {
            break;
        }
        inside = next;
    }
    let members: Vec<usize> = inside.ones().collect();
    s.restrict(&members)
}

/// `count` subalgebras of `s`, each generated by one or two random elements.
/// Draws are repeated (up to a fixed budget) until the result is neither
/// `{0}` nor all of `s`.
pub fn random_subalgebras(s: &FinInvSemi, count: usize, seed: u64) -> Result<Vec<(FinInvSemi, Vec<usize>)>> {
    const ATTEMPTS: usize = 64;
    let mut rng = crate::seeded_rng(seed);
    (0..count)
        .map(|_| {
            let mut draw = || {
                let k = rng.random_range(1..=2);
                let gens: Vec<usize> = (0..k).map(|_| rng.random_range(0..s.size())).collect();
                subalgebra_generated(s, &gens, s.size())
            };
            let mut sub = draw()?;
            for _ in 1..ATTEMPTS {
                if (2..s.size()).contains(&sub.0.size()) {
                    break;
                }
                sub = draw()?;
            }
            Ok(sub)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_inverse_monoid_sizes() {
        assert_eq!(symmetric_inverse_monoid(1).unwrap().size(), 2);
        assert_eq!(symmetric_inverse_monoid(2).unwrap().size(), 7);
        assert_eq!(symmetric_inverse_monoid(3).unwrap().size(), 34);
        assert!(symmetric_inverse_monoid(6).is_err());
        let i2 = symmetric_inverse_monoid(2).unwrap();
        assert_eq!(i2.name(i_n_element(2, &[(1, 2), (2, 1)]).unwrap()), "[1>2,2>1]");
    }

    #[test]
    fn groups_with_zero() {
        assert_eq!(group_with_zero(&GroupTable::cyclic(2)).unwrap().size(), 3);
        assert_eq!(group_with_zero(&GroupTable::trivial()).unwrap().size(), 2);
        let z3 = group_with_zero(&GroupTable::cyclic(3)).unwrap();
        assert_eq!(z3.idempotents(), &[0, 1]);
    }

    #[test]
    fn rook_matrix_sizes() {
        let r2 = rook_matrices(2, &GroupTable::trivial()).unwrap();
        assert_eq!(r2.size(), 7);
        assert!(r2.is_isomorphic(&symmetric_inverse_monoid(2).unwrap()));
        assert_eq!(rook_matrices(2, &GroupTable::cyclic(2)).unwrap().size(), 17);
        let r1 = rook_matrices(1, &GroupTable::cyclic(2)).unwrap();
        assert!(r1.is_isomorphic(&group_with_zero(&GroupTable::cyclic(2)).unwrap()));
        assert!(rook_matrices(4, &GroupTable::cyclic(3)).is_err());
    }

    #[test]
    fn products_and_semilattices() {
        let i1 = symmetric_inverse_monoid(1).unwrap();
        let p = direct_product(&i1, &i1).unwrap();
        assert_eq!(p.size(), 4);
        assert!(p.is_isomorphic(&boolean_algebra_semilattice(2).unwrap()));
        assert_eq!(p.idempotents().len(), 4);
        assert_eq!(chain_semilattice(3).unwrap().size(), 3);
        assert_eq!(zero_semigroup().size(), 1);
    }

    #[test]
    fn generated_subalgebras() {
        let i2 = symmetric_inverse_monoid(2).unwrap();
        let swap = i_n_element(2, &[(1, 2), (2, 1)]).unwrap();
        let id = i_n_element(2, &[(1, 1), (2, 2)]).unwrap();
        let (sub, incl) = subalgebra_generated(&i2, &[swap], 10).unwrap();
        assert_eq!(incl, {
            let mut v = vec![i2.zero(), swap, id];
            v.sort_unstable();
            v
        });
        assert_eq!(sub.size(), 3);
        let (triv, _) = subalgebra_generated(&i2, &[i2.zero()], 10).unwrap();
        assert_eq!(triv.size(), 1);
        assert!(subalgebra_generated(&i2, &[swap], 2).is_err());
    }
}
