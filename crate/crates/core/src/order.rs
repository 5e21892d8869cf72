//! Finite posets with a bottom element, their filters and ultrafilters.
//!
//! In a finite poset every filter is principal, so a filter is stored by its
//! least element and the realized up-set is recomputed when needed.

use alloc::format;
use alloc::vec::Vec;

use crate::bits::BitMatrix;
use crate::{Error, Result};

/// A finite partially ordered set on `0..size`, optionally with a bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinPoset {
    size: usize,
    leq: BitMatrix,
    bottom: Option<usize>,
}

/// The filter `generator↑`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrincipalFilter {
    pub generator: usize,
}

impl PrincipalFilter {
    pub fn new(generator: usize) -> Self {
        Self { generator }
    }

    /// The elements of `generator↑`, in increasing index order.
    pub fn realize(&self, p: &FinPoset) -> Vec<usize> {
        p.up_of(self.generator)
    }

    pub fn is_proper(&self, p: &FinPoset) -> bool {
        p.bottom != Some(self.generator)
    }

    pub fn contains(&self, p: &FinPoset, x: usize) -> bool {
        p.leq(self.generator, x)
    }
}

impl FinPoset {
    /// Builds a poset from a dense relation matrix, checking the partial order
    /// axioms and that `bottom` (if given) lies below everything.
    pub fn new(leq: &[Vec<bool>], bottom: Option<usize>) -> Result<Self> {
        let size = leq.len();
        if let Some((i, row)) = leq.iter().enumerate().find(|(_, r)| r.len() != size) {
            return Err(Error::InvalidPoset(format!(
                "row {i} has length {} but the relation is {size}x{size}",
                row.len()
            )));
        }
        Self::from_fn(size, |i, j| leq[i][j], bottom)
    }

    /// Builds a poset from an order predicate.
    pub fn from_fn(
        size: usize,
        leq: impl FnMut(usize, usize) -> bool,
        bottom: Option<usize>,
    ) -> Result<Self> {
        let leq = BitMatrix::from_fn(size, leq);
        for i in 0..size {
            if !leq.get(i, i) {
                return Err(Error::InvalidPoset(format!("not reflexive at {i}")));
            }
            for j in 0..size {
                if i != j && leq.get(i, j) && leq.get(j, i) {
                    return Err(Error::InvalidPoset(format!("not antisymmetric at ({i}, {j})")));
                }
                if leq.get(i, j) {
                    for k in 0..size {
                        if leq.get(j, k) && !leq.get(i, k) {
                            return Err(Error::InvalidPoset(format!(
                                "not transitive at ({i}, {j}, {k})"
                            )));
                        }
                    }
                }
            }
        }
        if let Some(b) = bottom {
            if b >= size {
                return Err(Error::IndexOutOfRange { index: b, size });
            }
            if let Some(x) = (0..size).find(|&x| !leq.get(b, x)) {
                return Err(Error::InvalidPoset(format!("declared bottom {b} is not below {x}")));
            }
        }
        Ok(Self { size, leq, bottom })
    }

    /// Like [`FinPoset::from_fn`] but detects the bottom element, if any.
    pub fn with_detected_bottom(size: usize, leq: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut p = Self::from_fn(size, leq, None)?;
        p.bottom = (0..size).find(|&b| (0..size).all(|x| p.leq.get(b, x)));
        Ok(p)
    }

    /// Subsets of a `k`-element set ordered by inclusion; element `m` is the bitmask `m`.
    pub fn powerset(k: u32) -> Self {
        let n = 1usize << k;
        Self::from_fn(n, |i, j| i & j == i, Some(0)).expect("inclusion is a partial order")
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_fn(n, |i, j| i <= j, if n > 0 { Some(0) } else { None })
            .expect("a chain is a partial order")
    }

    /// `0 < x, y < 1` with `0 = 0`, `x = 1`, `y = 2`, `1 = 3`.
    pub fn diamond() -> Self {
        Self::from_fn(4, |i, j| i == j || i == 0 || j == 3, Some(0)).expect("diamond is a poset")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b)
    }

    /// The relation as a dense boolean matrix.
    pub fn relation(&self) -> Vec<Vec<bool>> {
        (0..self.size).map(|i| (0..self.size).map(|j| self.leq(i, j)).collect()).collect()
    }

    fn check(&self, xs: &[usize]) -> Result<()> {
        match xs.iter().find(|&&x| x >= self.size) {
            Some(&index) => Err(Error::IndexOutOfRange { index, size: self.size }),
            None => Ok(()),
        }
    }

    pub(crate) fn up_of(&self, a: usize) -> Vec<usize> {
        self.leq.row(a).ones().collect()
    }

    pub fn down_of(&self, a: usize) -> Vec<usize> {
        (0..self.size).filter(|&x| self.leq(x, a)).collect()
    }

    /// `X↑`: the smallest upward-closed superset of `xs`.
    pub fn closure_up(&self, xs: &[usize]) -> Result<Vec<usize>> {
        self.check(xs)?;
        Ok((0..self.size).filter(|&y| xs.iter().any(|&x| self.leq(x, y))).collect())
    }

    /// `X↓`: the smallest downward-closed superset of `xs`.
    pub fn closure_down(&self, xs: &[usize]) -> Result<Vec<usize>> {
        self.check(xs)?;
        Ok((0..self.size).filter(|&y| xs.iter().any(|&x| self.leq(y, x))).collect())
    }

    /// Whether `f` is downward directed and upward closed. Filters are non-empty,
    /// so an empty `f` is a contract violation.
    pub fn is_filter(&self, f: &[usize]) -> Result<bool> {
        if f.is_empty() {
            return Err(Error::EmptyInput("filters are non-empty"));
        }
        self.check(f)?;
        let mut member = alloc::vec![false; self.size];
        for &x in f {
            member[x] = true;
        }
        let upward_closed =
            f.iter().all(|&x| self.leq.row(x).ones().all(|y| member[y]));
        if !upward_closed {
            return Ok(false);
        }
        let directed = f.iter().all(|&x| {
            f.iter().all(|&y| f.iter().any(|&z| self.leq(z, x) && self.leq(z, y)))
        });
        Ok(directed)
    }

    /// The least element of a filter; the filter is then `m↑`.
    pub fn filter_minimum(&self, f: &[usize]) -> Result<usize> {
        if !self.is_filter(f)? {
            return Err(Error::NotFilter(format!("{f:?}")));
        }
        f.iter()
            .copied()
            .find(|&m| f.iter().all(|&x| self.leq(m, x)))
            .ok_or_else(|| Error::NotFilter(format!("{f:?} has no least element")))
    }

    /// Minimal elements strictly above the bottom.
    pub fn atoms(&self) -> Result<Vec<usize>> {
        let b = self.bottom.ok_or(Error::NoBottom)?;
        Ok((0..self.size)
            .filter(|&a| a != b && (0..self.size).all(|x| x == b || x == a || !self.leq(x, a)))
            .collect())
    }

    /// All ultrafilters (maximal proper filters). In a finite poset these are
    /// `a↑` for the atoms `a`.
    pub fn ultrafilters(&self) -> Result<Vec<PrincipalFilter>> {
        Ok(self.atoms()?.into_iter().map(PrincipalFilter::new).collect())
    }

    /// Greatest lower bound of `a` and `b`, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> =
            (0..self.size).filter(|&x| self.leq(x, a) && self.leq(x, b)).collect();
        lower.iter().copied().find(|&m| lower.iter().all(|&x| self.leq(x, m)))
    }

    /// Least upper bound of `a` and `b`, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let upper: Vec<usize> =
            (0..self.size).filter(|&x| self.leq(a, x) && self.leq(b, x)).collect();
        upper.iter().copied().find(|&m| upper.iter().all(|&x| self.leq(m, x)))
    }

    /// The full meet table, or the first pair without a meet.
    pub fn meet_table(&self) -> core::result::Result<Vec<Vec<usize>>, (usize, usize)> {
        let mut t = alloc::vec![alloc::vec![0; self.size]; self.size];
        for a in 0..self.size {
            for b in a..self.size {
                let m = self.meet(a, b).ok_or((a, b))?;
                t[a][b] = m;
                t[b][a] = m;
            }
        }
        Ok(t)
    }

    /// Whether a proper filter `f` passes the test "if `x ∧ y ≠ 0` for every
    /// `x ∈ f` then `y ∈ f`". For meet semilattices with bottom this is
    /// equivalent to maximality.
    pub fn exel_criterion(&self, f: &[usize]) -> Result<bool> {
        let bottom = self.bottom.ok_or(Error::NoBottom)?;
        let meets = self.meet_table().map_err(|(a, b)| {
            Error::NotMeetSemilattice(format!("elements {a} and {b} have no meet"))
        })?;
        let min = self.filter_minimum(f)?;
        if min == bottom {
            return Err(Error::NotFilter("the filter is not proper".into()));
        }
        let member = |y: usize| self.leq(min, y);
        Ok((0..self.size)
            .filter(|&y| f.iter().all(|&x| meets[x][y] != bottom))
            .all(member))
    }

    /// Whether the proper filter `f` is contained in no strictly larger
    /// proper filter, decided by scanning the principal filters.
    pub fn is_maximal_proper(&self, f: &[usize]) -> Result<bool> {
        let bottom = self.bottom.ok_or(Error::NoBottom)?;
        let min = self.filter_minimum(f)?;
        if min == bottom {
            return Ok(false);
        }
        Ok(!(0..self.size).any(|g| g != bottom && g != min && self.leq(g, min)))
    }

    /// Whether two posets are isomorphic (backtracking search).
    pub fn is_isomorphic(&self, other: &FinPoset) -> bool {
        crate::iso::find_relation_isomorphism(self.size, other.size, |a, b| self.leq(a, b), |a, b| {
            other.leq(a, b)
        })
        .is_some()
    }
}

/// Removes posets isomorphic to an earlier one in the list.
pub fn dedup_by_isomorphism(posets: Vec<FinPoset>) -> Vec<FinPoset> {
    let mut out: Vec<FinPoset> = Vec::new();
    for p in posets {
        if !out.iter().any(|q| q.size == p.size && q.is_isomorphic(&p)) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p12() -> FinPoset {
        // ∅ = 0, {1} = 1, {2} = 2, {1,2} = 3
        FinPoset::powerset(2)
    }

    #[test]
    fn closure_up_examples() {
        let p = p12();
        assert_eq!(p.closure_up(&[1]).unwrap(), vec![1, 3]);
        assert_eq!(p.closure_up(&[]).unwrap(), Vec::<usize>::new());
        let c = FinPoset::chain(3);
        assert_eq!(c.closure_up(&[1]).unwrap(), vec![1, 2]);
        assert!(matches!(p.closure_up(&[7]), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn is_filter_examples() {
        let p = p12();
        assert!(p.is_filter(&[1, 3]).unwrap());
        assert!(!p.is_filter(&[1, 2, 3]).unwrap());
        assert!(FinPoset::chain(3).is_filter(&[2]).unwrap());
        assert_eq!(p.is_filter(&[]), Err(Error::EmptyInput("filters are non-empty")));
    }

    #[test]
    fn filter_minimum_examples() {
        let p = p12();
        assert_eq!(p.filter_minimum(&[1, 3]).unwrap(), 1);
        assert_eq!(p.filter_minimum(&[0, 1, 2, 3]).unwrap(), 0);
        assert_eq!(FinPoset::chain(3).filter_minimum(&[1, 2]).unwrap(), 1);
        assert!(matches!(p.filter_minimum(&[1, 2, 3]), Err(Error::NotFilter(_))));
    }

    #[test]
    fn ultrafilter_examples() {
        let gens = |p: &FinPoset| -> Vec<usize> {
            p.ultrafilters().unwrap().into_iter().map(|f| f.generator).collect()
        };
        assert_eq!(gens(&FinPoset::powerset(3)), vec![1, 2, 4]);
        assert_eq!(gens(&FinPoset::chain(3)), vec![1]);
        assert_eq!(gens(&FinPoset::diamond()), vec![1, 2]);
        let no_bottom = FinPoset::from_fn(2, |i, j| i == j, None).unwrap();
        assert_eq!(no_bottom.ultrafilters(), Err(Error::NoBottom));
    }

    #[test]
    fn exel_examples() {
        let p = p12();
        assert!(p.exel_criterion(&[1, 3]).unwrap());
        assert!(!p.exel_criterion(&[3]).unwrap());
        assert!(FinPoset::diamond().exel_criterion(&[1, 3]).unwrap());
        // two incomparable maximal elements above a bottom: {0 < a, b, c} with a,b < c? use
        // a "bowtie" with no meets
        let bowtie = FinPoset::from_fn(
            5,
            |i, j| i == j || i == 0 || (j >= 3 && (i == 1 || i == 2)),
            Some(0),
        )
        .unwrap();
        assert!(matches!(bowtie.exel_criterion(&[3]), Err(Error::NotMeetSemilattice(_))));
    }

    #[test]
    fn rejects_non_orders() {
        assert!(FinPoset::new(&[vec![true, true], vec![true, true]], None).is_err());
        assert!(FinPoset::new(&[vec![false]], None).is_err());
        assert!(FinPoset::new(&[vec![true, false], vec![false, true]], Some(0)).is_err());
    }

    #[test]
    fn dedup_keeps_one_per_class() {
        let a = FinPoset::from_fn(3, |i, j| i == j || (i == 0), Some(0)).unwrap();
        let b = FinPoset::from_fn(3, |i, j| i == j || (i == 2), Some(2)).unwrap();
        let c = FinPoset::chain(3);
        assert_eq!(dedup_by_isomorphism(vec![a, b, c]).len(), 2);
    }
}
