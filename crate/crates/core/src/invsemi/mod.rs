//! Finite inverse semigroups with zero, given by multiplication and inverse
//! tables, together with their order-theoretic structure.
//!
//! The natural partial order is `a ≤ b ⟺ a = b·d(a)` where `d(a) = a⁻¹a` and
//! `r(a) = aa⁻¹`. Order, compatibility, meets and compatible joins are
//! computed once at construction.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::bits::BitMatrix;
use crate::iso::{self, PartialMagma};
use crate::{Error, Result};

pub mod classify;
pub mod construct;
pub mod morphism;

pub use classify::{BooleanReport, Pencil};
pub use construct::PartialBijection;
pub use morphism::SemigroupMorphism;

/// Largest table accepted by the constructors.
pub const MAX_SIZE: usize = 5000;

/// Tables up to this size get an exhaustive associativity check.
const EXHAUSTIVE_ASSOC: usize = 60;

const NONE: u32 = u32::MAX;

/// A finite inverse semigroup with zero on `0..size`.
#[derive(Debug, Clone)]
pub struct FinInvSemi {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    zero: usize,
    names: Option<Vec<String>>,
    idem: Vec<bool>,
    idempotents: Vec<usize>,
    /// row `a` is `a↑`
    up: BitMatrix,
    /// row `a` is `a↓`
    down: BitMatrix,
    compat: BitMatrix,
    meet: Vec<u32>,
    join: Vec<u32>,
}

impl PartialEq for FinInvSemi {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.mul == other.mul && self.inv == other.inv && self.zero == other.zero
    }
}

impl Eq for FinInvSemi {}

impl FinInvSemi {
    /// Validates and builds a semigroup from a dense table and inverse map.
    pub fn from_tables(mul: &[Vec<usize>], inv: &[usize], zero: usize) -> Result<Self> {
        let n = mul.len();
        if inv.len() != n {
            return Err(Error::InvalidTable(format!("{} inverses for {n} elements", inv.len())));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            flat.extend(row.iter().map(|&x| x as u32));
        }
        Self::from_flat(n, flat, inv.iter().map(|&x| x as u32).collect(), zero)
    }

    /// Builds the table from a product and an inverse function.
    pub fn from_fn(
        n: usize,
        mul: impl Fn(usize, usize) -> usize,
        inv: impl Fn(usize) -> usize,
        zero: usize,
    ) -> Result<Self> {
        if n > MAX_SIZE {
            return Err(Error::CapExceeded { what: "inverse semigroup", size: n, cap: MAX_SIZE });
        }
        let flat = (0..n * n).map(|k| mul(k / n, k % n) as u32).collect();
        Self::from_flat(n, flat, (0..n).map(|a| inv(a) as u32).collect(), zero)
    }

    pub(crate) fn from_flat(n: usize, mul: Vec<u32>, inv: Vec<u32>, zero: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInput("inverse semigroup"));
        }
        if n > MAX_SIZE {
            return Err(Error::CapExceeded { what: "inverse semigroup", size: n, cap: MAX_SIZE });
        }
        if zero >= n {
            return Err(Error::IndexOutOfRange { index: zero, size: n });
        }
        if let Some(&bad) = mul.iter().chain(&inv).find(|&&x| x as usize >= n) {
            return Err(Error::IndexOutOfRange { index: bad as usize, size: n });
        }
        let m = |a: usize, b: usize| mul[a * n + b] as usize;
        let i = |a: usize| inv[a] as usize;
        for a in 0..n {
            if m(zero, a) != zero || m(a, zero) != zero {
                return Err(Error::NotInverseSemigroup(format!("{zero} does not absorb {a}")));
            }
            if m(m(a, i(a)), a) != a || m(m(i(a), a), i(a)) != i(a) {
                return Err(Error::NotInverseSemigroup(format!("{} is not an inverse of {a}", i(a))));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| m(m(a, b), c) == m(a, m(b, c));
        if n <= EXHAUSTIVE_ASSOC {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(Error::NotInverseSemigroup(format!(
                                "not associative at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        } else {
            use rand::Rng;
            let mut rng = crate::seeded_rng(crate::DEFAULT_SEED);
            for _ in 0..20_000 {
                let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
                if !assoc(a, b, c) {
                    return Err(Error::NotInverseSemigroup(format!("not associative at ({a}, {b}, {c})")));
                }
            }
        }
        let idem: Vec<bool> = (0..n).map(|a| m(a, a) == a).collect();
        let idempotents: Vec<usize> = (0..n).filter(|&a| idem[a]).collect();
        for &e in &idempotents {
            for &f in &idempotents {
                if m(e, f) != m(f, e) {
                    return Err(Error::NotInverseSemigroup(format!("idempotents {e} and {f} do not commute")));
                }
            }
        }
        let d = |a: usize| m(i(a), a);
        let r = |a: usize| m(a, i(a));
        let up = BitMatrix::from_fn(n, |a, b| m(b, d(a)) == a);
        for a in 0..n {
            for b in up.row(a).ones() {
                if m(r(a), b) != a {
                    return Err(Error::NotInverseSemigroup(format!(
                        "the two forms of the natural order disagree at ({a}, {b})"
                    )));
                }
            }
        }
        let down = up.transpose();
        let compat = BitMatrix::from_fn(n, |a, b| idem[m(i(a), b)] && idem[m(a, i(b))]);
        let mut s = Self {
            n,
            mul,
            inv,
            zero,
            names: None,
            idem,
            idempotents,
            up,
            down,
            compat,
            meet: Vec::new(),
            join: Vec::new(),
        };
        s.meet = s.bound_table(&s.down, |_, _| true);
        s.join = s.bound_table(&s.up, |a, b| s.compat.get(a, b));
        Ok(s)
    }

    /// Greatest element of `rel[a] ∩ rel[b]` with respect to `rel`, where
    /// `rel` is either the down-set or the up-set relation.
    fn bound_table(&self, rel: &BitMatrix, wanted: impl Fn(usize, usize) -> bool) -> Vec<u32> {
        let n = self.n;
        let sizes: Vec<usize> = (0..n).map(|a| rel.row(a).count_ones(..)).collect();
        let mut table = vec![NONE; n * n];
        let mut common = FixedBitSet::with_capacity(n);
        for a in 0..n {
            for b in a..n {
                if !wanted(a, b) {
                    continue;
                }
                common.clone_from(rel.row(a));
                common.intersect_with(rel.row(b));
                let best = common.ones().max_by_key(|&c| sizes[c]);
                if let Some(c) = best {
                    if common.is_subset(rel.row(c)) {
                        table[a * n + b] = c as u32;
                        table[b * n + a] = c as u32;
                    }
                }
            }
        }
        table
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::InvalidTable(format!("{} names for {} elements", names.len(), self.n)));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// The element's name, or its index when the semigroup is unnamed.
    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(ns) => ns[a].clone(),
            None => a.to_string(),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn inv_table(&self) -> Vec<usize> {
        (0..self.n).map(|a| self.inv(a)).collect()
    }

    /// `d(a) = a⁻¹a`.
    #[inline]
    pub fn d(&self, a: usize) -> usize {
        self.mul(self.inv(a), a)
    }

    /// `r(a) = aa⁻¹`.
    #[inline]
    pub fn r(&self, a: usize) -> usize {
        self.mul(a, self.inv(a))
    }

    #[inline]
    pub fn is_idempotent(&self, a: usize) -> bool {
        self.idem[a]
    }

    /// `E(S)` in increasing index order.
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    /// The natural partial order.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up.get(a, b)
    }

    /// `a ∼ b`: `a⁻¹b` and `ab⁻¹` are idempotent.
    #[inline]
    pub fn compatible(&self, a: usize, b: usize) -> bool {
        self.compat.get(a, b)
    }

    /// `a ⊥ b`: `d(a)d(b) = 0` and `r(a)r(b) = 0`.
    pub fn orthogonal(&self, a: usize, b: usize) -> bool {
        self.mul(self.d(a), self.d(b)) == self.zero && self.mul(self.r(a), self.r(b)) == self.zero
    }

    /// `a↓` in increasing index order.
    pub fn down(&self, a: usize) -> Vec<usize> {
        self.down.row(a).ones().collect()
    }

    /// `a↑` in increasing index order.
    pub fn up(&self, a: usize) -> Vec<usize> {
        self.up.row(a).ones().collect()
    }

    pub(crate) fn down_set(&self, a: usize) -> &FixedBitSet {
        self.down.row(a)
    }

    /// `a ∧ b`, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let m = self.meet[a * self.n + b];
        (m != NONE).then_some(m as usize)
    }

    /// The least upper bound of a compatible pair, if it exists; `None` for
    /// incompatible pairs.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let j = self.join[a * self.n + b];
        (j != NONE).then_some(j as usize)
    }

    /// As [`FinInvSemi::join`], but incompatible pairs are an error.
    pub fn compatible_join(&self, a: usize, b: usize) -> Result<Option<usize>> {
        if !self.compatible(a, b) {
            return Err(Error::Incompatible(a, b));
        }
        Ok(self.join(a, b))
    }

    /// Join of a finite compatible family; `0` for the empty family.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> Option<usize> {
        xs.into_iter().try_fold(self.zero, |acc, x| self.join(acc, x))
    }

    /// `φ(a)`, the largest idempotent below `a`.
    pub fn fixed_point(&self, a: usize) -> Option<usize> {
        let below: Vec<usize> = self.down.row(a).ones().filter(|&x| self.idem[x]).collect();
        below.iter().copied().find(|&m| below.iter().all(|&x| self.leq(x, m)))
    }

    /// The meet computed as `φ(ab⁻¹)b`.
    pub fn meet_via_fixed_point(&self, a: usize, b: usize) -> Option<usize> {
        let phi = self.fixed_point(self.mul(a, self.inv(b)))?;
        Some(self.mul(phi, b))
    }

    /// Whether every pair has a meet.
    pub fn is_meet_semigroup(&self) -> bool {
        self.meet.iter().all(|&m| m != NONE)
    }

    /// `e \ f` inside `E(S)`: the idempotent `g ≤ e` with `gf = 0` and
    /// `g ∨ ef = e`.
    pub fn idempotent_relcomplement(&self, e: usize, f: usize) -> Option<usize> {
        let ef = self.mul(e, f);
        self.down
            .row(e)
            .ones()
            .filter(|&g| self.idem[g] && self.mul(g, f) == self.zero)
            .find(|&g| self.join(g, ef) == Some(e))
    }

    /// `a \ b` for `b ≤ a`: the unique `x ≤ a` with `b ⊥ x` and `a = b ∨ x`.
    /// Computed as `a·(d(a) \ d(b))` and checked against a scan of `a↓`.
    pub fn complement_below(&self, a: usize, b: usize) -> Result<usize> {
        if !self.leq(b, a) {
            return Err(Error::Precondition(format!("{} ≰ {}", self.name(b), self.name(a))));
        }
        let e = self
            .idempotent_relcomplement(self.d(a), self.d(b))
            .ok_or_else(|| Error::NotBoolean(format!("d({}) \\ d({}) does not exist", a, b)))?;
        let x = self.mul(a, e);
        let witnesses: Vec<usize> = self
            .down
            .row(a)
            .ones()
            .filter(|&y| self.orthogonal(b, y) && self.join(b, y) == Some(a))
            .collect();
        if witnesses != [x] {
            return Err(Error::NotBoolean(format!(
                "{a} \\ {b}: formula gives {x}, scan finds {witnesses:?}"
            )));
        }
        Ok(x)
    }

    /// Minimal non-zero elements.
    pub fn atoms(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| a != self.zero && self.down.row(a).count_ones(..) == 2)
            .collect()
    }

    /// The two-sided identity, if there is one.
    pub fn identity(&self) -> Option<usize> {
        self.idempotents
            .iter()
            .copied()
            .find(|&u| (0..self.n).all(|a| self.mul(u, a) == a && self.mul(a, u) == a))
    }

    /// `∃x: d(x) = e, r(x) = f`.
    pub fn d_related(&self, e: usize, f: usize) -> bool {
        (0..self.n).any(|x| self.d(x) == e && self.r(x) == f)
    }

    /// An explicit isomorphism onto `other`, if one exists.
    pub fn isomorphism_to(&self, other: &FinInvSemi) -> Option<Vec<usize>> {
        if self.idempotents.len() != other.idempotents.len() {
            return None;
        }
        iso::find_isomorphism(self, other)
    }

    pub fn is_isomorphic(&self, other: &FinInvSemi) -> bool {
        self.isomorphism_to(other).is_some()
    }

    /// The sub-table on a subset closed under products and inverses that
    /// contains zero. Returns the semigroup and the inclusion map.
    pub fn restrict(&self, subset: &[usize]) -> Result<(FinInvSemi, Vec<usize>)> {
        let mut elems = subset.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let mut index = vec![usize::MAX; self.n];
        for (k, &x) in elems.iter().enumerate() {
            index[x] = k;
        }
        if index[self.zero] == usize::MAX {
            return Err(Error::Precondition("the subset must contain zero".into()));
        }
        let lookup = |x: usize| -> Result<usize> {
            match index[x] {
                usize::MAX => Err(Error::Precondition(format!("subset not closed: {x} escapes"))),
                k => Ok(k),
            }
        };
        let m = elems.len();
        let mut mul = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                mul.push(lookup(self.mul(a, b))? as u32);
            }
        }
        let inv = elems.iter().map(|&a| lookup(self.inv(a)).map(|k| k as u32)).collect::<Result<_>>()?;
        let mut sub = Self::from_flat(m, mul, inv, index[self.zero])?;
        if let Some(ns) = &self.names {
            sub.names = Some(elems.iter().map(|&a| ns[a].clone()).collect());
        }
        Ok((sub, elems))
    }
}

impl PartialMagma for FinInvSemi {
    fn size(&self) -> usize {
        self.n
    }
    fn product(&self, a: usize, b: usize) -> Option<usize> {
        Some(self.mul(a, b))
    }
    fn inverse(&self, a: usize) -> usize {
        self.inv(a)
    }
}
