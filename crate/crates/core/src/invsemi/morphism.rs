//! Morphisms of Boolean inverse semigroups: maps preserving products, zero
//! and compatible joins, and the proper / weakly-meet-preserving / callitic
//! conditions.

use alloc::format;
use alloc::vec::Vec;

use super::FinInvSemi;
use crate::{Error, Result};

/// A validated morphism `source → target` stored as an element map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupMorphism<'a> {
    pub source: &'a FinInvSemi,
    pub target: &'a FinInvSemi,
    map: Vec<usize>,
}

impl<'a> SemigroupMorphism<'a> {
    /// Checks that `map` preserves products, zero and compatible joins.
    pub fn new(source: &'a FinInvSemi, target: &'a FinInvSemi, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.size() {
            return Err(Error::InvalidTable(format!(
                "map has {} entries, source has {} elements",
                map.len(),
                source.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&y| y >= target.size()) {
            return Err(Error::IndexOutOfRange { index: bad, size: target.size() });
        }
        if map[source.zero()] != target.zero() {
            return Err(Error::NotHomomorphism("zero is not sent to zero".into()));
        }
        for a in 0..source.size() {
            for b in 0..source.size() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(Error::NotHomomorphism(format!(
                        "θ({}·{}) ≠ θ({})·θ({})",
                        source.name(a),
                        source.name(b),
                        source.name(a),
                        source.name(b)
                    )));
                }
                if let Some(j) = source.join(a, b) {
                    if target.join(map[a], map[b]) != Some(map[j]) {
                        return Err(Error::NotHomomorphism(format!(
                            "θ({} ∨ {}) ≠ θ({}) ∨ θ({})",
                            source.name(a),
                            source.name(b),
                            source.name(a),
                            source.name(b)
                        )));
                    }
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(s: &'a FinInvSemi) -> Self {
        Self { source: s, target: s, map: (0..s.size()).collect() }
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `self ∘ first`.
    pub fn after<'b>(&self, first: &SemigroupMorphism<'b>) -> Result<SemigroupMorphism<'b>>
    where
        'a: 'b,
    {
        if first.target != self.source {
            return Err(Error::Precondition("morphisms are not composable".into()));
        }
        let map = first.map.iter().map(|&y| self.map[y]).collect();
        Ok(SemigroupMorphism { source: first.source, target: self.target, map })
    }

    /// `θ⁻¹(0)`.
    pub fn kernel(&self) -> Vec<usize> {
        (0..self.source.size()).filter(|&a| self.map[a] == self.target.zero()).collect()
    }

    /// The first target element that is not the join of the elements below
    /// it that lie below some image.
    pub fn properness_witness(&self) -> Option<usize> {
        let t = self.target;
        let mut covered = fixedbitset::FixedBitSet::with_capacity(t.size());
        for &y in &self.map {
            covered.union_with(t.down_set(y));
        }
        (0..t.size()).find(|&x| {
            let parts = t.down_set(x).ones().filter(|&y| covered.contains(y));
            t.join_all(parts) != Some(x)
        })
    }

    /// Every target element is a finite join of elements each below an image.
    pub fn is_proper(&self) -> bool {
        self.properness_witness().is_none()
    }

    /// A triple `(a, b, t)` with `t ≤ θ(a), θ(b)` but `t ≰ θ(c)` for every
    /// `c ≤ a, b`.
    pub fn weak_meet_witness(&self) -> Option<(usize, usize, usize)> {
        let (s, t) = (self.source, self.target);
        for a in 0..s.size() {
            for b in a..s.size() {
                let mut lower = s.down_set(a).clone();
                lower.intersect_with(s.down_set(b));
                let below_images: Vec<usize> = lower.ones().map(|c| self.map[c]).collect();
                let mut common = t.down_set(self.map[a]).clone();
                common.intersect_with(t.down_set(self.map[b]));
                if let Some(x) = common.ones().find(|&x| !below_images.iter().any(|&y| t.leq(x, y))) {
                    return Some((a, b, x));
                }
            }
        }
        None
    }

    pub fn is_weakly_meet_preserving(&self) -> bool {
        self.weak_meet_witness().is_none()
    }

    /// Proper and weakly meet preserving.
    pub fn is_callitic(&self) -> bool {
        self.is_proper() && self.is_weakly_meet_preserving()
    }

    /// The kernel congruence as class labels: `a` and `b` share a label iff
    /// `θ(a) = θ(b)`. Labels are the least element of each class.
    pub fn congruence_classes(&self) -> Vec<usize> {
        let n = self.source.size();
        (0..n)
            .map(|a| (0..n).find(|&b| self.map[b] == self.map[a]).expect("a itself"))
            .collect()
    }
}
