use alloc::vec::Vec;
use fixedbitset::FixedBitSet;

/// Dense square boolean relation, one bitset per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    rows: Vec<FixedBitSet>,
}

impl BitMatrix {
    pub(crate) fn new(n: usize) -> Self {
        Self { rows: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect() }
    }

    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::new(n);
        for i in 0..n {
            for j in 0..n {
                if f(i, j) {
                    m.rows[i].insert(j);
                }
            }
        }
        m
    }

    #[inline]
    pub(crate) fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    #[inline]
    pub(crate) fn row(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    pub(crate) fn transpose(&self) -> Self {
        let n = self.rows.len();
        Self::from_fn(n, |i, j| self.get(j, i))
    }
}
