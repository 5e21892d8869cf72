//! Finite groups given by Cayley tables.

use alloc::format;
use alloc::vec::Vec;

use crate::iso::{self, PartialMagma};
use crate::{Error, Result};

/// A finite group on `0..order` with a dense multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates a Cayley table: closure, associativity, a two-sided identity
    /// and two-sided inverses.
    pub fn from_table(table: &[Vec<usize>]) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::NotGroup("a group has at least one element".into()));
        }
        let mut mul = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotGroup(format!("row {i} has the wrong length")));
            }
            for &x in row {
                if x >= order {
                    return Err(Error::NotGroup(format!("entry {x} out of range in row {i}")));
                }
                mul.push(x);
            }
        }
        let m = |a: usize, b: usize| mul[a * order + b];
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return Err(Error::NotGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| Error::NotGroup("no identity".into()))?;
        let mut inv = Vec::with_capacity(order);
        for a in 0..order {
            let b = (0..order)
                .find(|&b| m(a, b) == identity && m(b, a) == identity)
                .ok_or_else(|| Error::NotGroup(format!("{a} has no inverse")))?;
            inv.push(b);
        }
        Ok(Self { order, mul, inv, identity })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `Z_n` with element `i` standing for `i mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let mul = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        let inv = (0..n).map(|i| (n - i) % n).collect();
        Self { order: n, mul, inv, identity: 0 }
    }

    /// The symmetric group on `n` points, permutations listed in
    /// lexicographic order of their images; `p·q` applies `q` first.
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &[usize]| perms.iter().position(|q| q.as_slice() == p).expect("perm");
        let table: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let c: Vec<usize> = (0..n).map(|i| p[q[i]]).collect();
                        index(&c)
                    })
                    .collect()
            })
            .collect();
        Self::from_table(&table).expect("symmetric group table")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// An explicit isomorphism onto `other`, if one exists.
    pub fn isomorphism_to(&self, other: &GroupTable) -> Option<Vec<usize>> {
        iso::find_isomorphism(self, other)
    }
}

impl PartialMagma for GroupTable {
    fn size(&self) -> usize {
        self.order
    }
    fn product(&self, a: usize, b: usize) -> Option<usize> {
        Some(self.mul(a, b))
    }
    fn inverse(&self, a: usize) -> usize {
        self.inv(a)
    }
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut alloc::vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn small_groups() {
        assert_eq!(GroupTable::trivial().order(), 1);
        let z3 = GroupTable::cyclic(3);
        assert_eq!(z3.mul(2, 2), 1);
        assert_eq!(z3.inv(1), 2);
        let s3 = GroupTable::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert!(GroupTable::cyclic(6).isomorphism_to(&s3).is_none());
        let s2 = GroupTable::symmetric(2);
        assert!(s2.isomorphism_to(&GroupTable::cyclic(2)).is_some());
    }

    #[test]
    fn rejects_non_groups() {
        assert!(GroupTable::from_table(&[vec![0, 0], vec![0, 1]]).is_err());
        assert!(GroupTable::from_table(&[]).is_err());
        assert!(GroupTable::from_table(&[vec![0, 1], vec![1, 2]]).is_err());
    }
}
