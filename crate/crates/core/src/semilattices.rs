//! Exhaustive generation of finite meet semilattices up to isomorphism.
//!
//! Removing a maximal element from a finite meet semilattice leaves a meet
//! semilattice, so every semilattice on `n + 1` elements is some semilattice
//! on `n` elements with a new maximal element `m` placed above a down-set `D`.
//! The result is again a meet semilattice iff `D ∩ ↓y` is principal for
//! every `y`. Duplicates are removed through a canonical form.
//!
//! Element `0` is the bottom and element indices always form a linear
//! extension of the order.

use alloc::vec;
use alloc::vec::Vec;

use crate::order::FinPoset;

/// Largest size supported. The canonical key of a semilattice on `n`
/// elements needs `(n - 1)(n - 2) / 2` bits.
pub const MAX_ELEMENTS: usize = 12;

/// A meet semilattice on at most [`MAX_ELEMENTS`] elements; `down[x]` is the
/// bit mask of `↓x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallSemilattice {
    n: usize,
    down: [u16; MAX_ELEMENTS],
}

impl SmallSemilattice {
    /// The one-element semilattice.
    pub fn singleton() -> Self {
        let mut down = [0; MAX_ELEMENTS];
        down[0] = 1;
        Self { n: 1, down }
    }

    /// Builds from down-set masks and checks bottom, order and meets.
    pub fn from_down_sets(down: &[u16]) -> Option<Self> {
        let n = down.len();
        if n == 0 || n > MAX_ELEMENTS {
            return None;
        }
        let mut d = [0; MAX_ELEMENTS];
        d[..n].copy_from_slice(down);
        let s = Self { n, down: d };
        s.is_valid().then_some(s)
    }

    fn is_valid(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            let dx = self.down[x];
            dx >> x & 1 == 1
                && dx & 1 == 1
                && dx >> n == 0
                && (0..n).all(|y| dx >> y & 1 == 0 || (self.down[y] & !dx == 0 && y <= x))
                && (0..n).all(|y| self.principal(dx & self.down[y]).is_some())
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn down_sets(&self) -> &[u16] {
        &self.down[..self.n]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b] >> a & 1 == 1
    }

    fn principal(&self, mask: u16) -> Option<usize> {
        (0..self.n).find(|&z| self.down[z] == mask)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.principal(self.down[a] & self.down[b]).expect("meets exist")
    }

    fn up(&self, a: usize) -> u16 {
        (0..self.n).filter(|&x| self.leq(a, x)).fold(0, |m, x| m | 1 << x)
    }

    pub fn to_poset(&self) -> FinPoset {
        FinPoset::from_fn(self.n, |a, b| self.leq(a, b), Some(0)).expect("a valid semilattice is a poset")
    }

    /// For the proper filter `g↑`: every `y` meeting each member non-trivially
    /// lies in the filter.
    pub fn exel_criterion(&self, g: usize) -> bool {
        let members = self.up(g);
        (0..self.n)
            .filter(|&y| (0..self.n).filter(|&x| members >> x & 1 == 1).all(|x| self.down[x] & self.down[y] != 1))
            .all(|y| members >> y & 1 == 1)
    }

    /// `g↑` is proper and no other proper principal filter contains it.
    pub fn is_maximal_proper(&self, g: usize) -> bool {
        g != 0 && self.down[g].count_ones() == 2
    }

    /// Down-sets `D ∋ 0` with `D ∩ ↓y` principal for every `y`.
    fn extension_sets(&self, out: &mut Vec<u16>) {
        fn go(s: &SmallSemilattice, i: usize, cur: u16, out: &mut Vec<u16>) {
            if i == s.n {
                if (0..s.n).all(|y| s.principal(cur & s.down[y]).is_some()) {
                    out.push(cur);
                }
                return;
            }
            go(s, i + 1, cur, out);
            if s.down[i] & !(1 << i) & !cur == 0 {
                go(s, i + 1, cur | 1 << i, out);
            }
        }
        go(self, 1, 1, out);
    }

    fn extend(&self, d: u16) -> Self {
        let mut next = *self;
        next.down[self.n] = d | 1 << self.n;
        next.n += 1;
        next
    }

    /// A relabelling that depends only on the isomorphism class.
    pub fn canonical(&self) -> Self {
        let n = self.n;
        let mut ups = [0u16; MAX_ELEMENTS];
        for (x, u) in ups.iter_mut().enumerate().take(n) {
            *u = self.up(x);
        }
        let strict_down: Vec<u16> = (0..n).map(|x| self.down[x] & !(1 << x)).collect();
        let strict_up: Vec<u16> = (0..n).map(|x| ups[x] & !(1 << x)).collect();

        // colour refinement, seeded with the sizes of ↓x and ↑x; colours only
        // ever split, so their order stays a linear extension, and hash
        // collisions just weaken the refinement
        let mut sig = [0u64; MAX_ELEMENTS];
        for x in 0..n {
            sig[x] = (self.down[x].count_ones() as u64) << 8 | ups[x].count_ones() as u64;
        }
        let mut color = rank(&sig[..n]);
        let mut classes = distinct(&color);
        loop {
            for x in 0..n {
                let mut h = 0u64;
                for y in 0..n {
                    if strict_down[x] >> y & 1 == 1 {
                        h = h.wrapping_add(mix(color[y] as u64 + 0x100));
                    }
                    if strict_up[x] >> y & 1 == 1 {
                        h = h.wrapping_add(mix(color[y] as u64 + 0x200));
                    }
                }
                sig[x] = (color[x] as u64) << 40 | h >> 24;
            }
            let next = rank(&sig[..n]);
            let k = distinct(&next);
            color = next;
            if k == classes {
                break;
            }
            classes = k;
        }

        let mut slots: Vec<u32> = color.clone();
        slots.sort_unstable();
        let twin_prev: Vec<Option<usize>> = (0..n)
            .map(|x| (0..x).rev().find(|&y| strict_down[y] == strict_down[x] && strict_up[y] == strict_up[x]))
            .collect();

        struct Search<'a> {
            n: usize,
            color: &'a [u32],
            slots: &'a [u32],
            strict_down: &'a [u16],
            twin_prev: &'a [Option<usize>],
            label: [usize; MAX_ELEMENTS],
            placed: u16,
            code: [u16; MAX_ELEMENTS],
            best: Option<[u16; MAX_ELEMENTS]>,
        }
        impl Search<'_> {
            fn run(&mut self, pos: usize) {
                if pos == self.n {
                    if self.best.is_none_or(|b| self.code[..self.n] < b[..self.n]) {
                        self.best = Some(self.code);
                    }
                    return;
                }
                for x in 0..self.n {
                    if self.placed >> x & 1 == 1 || self.color[x] != self.slots[pos] {
                        continue;
                    }
                    if self.twin_prev[x].is_some_and(|y| self.placed >> y & 1 == 0) {
                        continue;
                    }
                    let mut c: u16 = 1 << pos;
                    for y in 0..self.n {
                        if self.strict_down[x] >> y & 1 == 1 {
                            c |= 1 << self.label[y];
                        }
                    }
                    self.code[pos] = c;
                    if self.best.is_some_and(|b| self.code[..=pos] > b[..=pos]) {
                        continue;
                    }
                    self.label[x] = pos;
                    self.placed |= 1 << x;
                    self.run(pos + 1);
                    self.placed &= !(1 << x);
                }
            }
        }
        let mut search = Search {
            n,
            color: &color,
            slots: &slots,
            strict_down: &strict_down,
            twin_prev: &twin_prev,
            label: [0; MAX_ELEMENTS],
            placed: 0,
            code: [0; MAX_ELEMENTS],
            best: None,
        };
        search.run(0);
        Self { n, down: search.best.expect("at least one labelling") }
    }

    /// Packs the strict, non-bottom part of each down-set. Meaningful for
    /// canonical forms of one fixed size.
    pub fn key(&self) -> u64 {
        let mut key = 0u64;
        let mut shift = 0;
        for p in 2..self.n {
            let bits = (self.down[p] >> 1) as u64 & ((1u64 << (p - 1)) - 1);
            key |= bits << shift;
            shift += p - 1;
        }
        key
    }

    pub fn from_key(n: usize, key: u64) -> Self {
        let mut down = [0; MAX_ELEMENTS];
        let mut shift = 0;
        for (p, d) in down.iter_mut().enumerate().take(n) {
            *d = 1 | 1 << p;
            if p >= 2 {
                *d |= ((key >> shift) as u16 & ((1 << (p - 1)) - 1)) << 1;
                shift += p - 1;
            }
        }
        Self { n, down }
    }
}

fn rank(keys: &[u64]) -> Vec<u32> {
    let mut sorted = [0u64; MAX_ELEMENTS];
    sorted[..keys.len()].copy_from_slice(keys);
    let sorted = &mut sorted[..keys.len()];
    sorted.sort_unstable();
    keys.iter().map(|k| sorted.partition_point(|v| v < k) as u32).collect()
}

fn distinct(color: &[u32]) -> u32 {
    color.iter().fold(0u16, |m, &c| m | 1 << c).count_ones()
}

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Canonical keys of all meet semilattices on `n` elements, given those on
/// `n - 1`.
fn next_level(prev_n: usize, prev: &[u64]) -> Vec<u64> {
    let mut keys = Vec::new();
    let mut sets = Vec::new();
    for &k in prev {
        let s = SmallSemilattice::from_key(prev_n, k);
        sets.clear();
        s.extension_sets(&mut sets);
        for &d in &sets {
            keys.push(s.extend(d).canonical().key());
        }
        if keys.len() > 1 << 22 {
            keys.sort_unstable();
            keys.dedup();
        }
    }
    keys.sort_unstable();
    keys.dedup();
    keys
}

/// Calls `visit` once per isomorphism class of meet semilattices with
/// `1..=max` elements, in order of size.
pub fn for_each_meet_semilattice(max: usize, mut visit: impl FnMut(&SmallSemilattice)) {
    assert!(max <= MAX_ELEMENTS, "at most {MAX_ELEMENTS} elements");
    if max == 0 {
        return;
    }
    let mut level = vec![SmallSemilattice::singleton().key()];
    visit(&SmallSemilattice::singleton());
    for n in 2..=max {
        level = next_level(n - 1, &level);
        for &k in &level {
            visit(&SmallSemilattice::from_key(n, k));
        }
    }
}

/// Number of meet semilattices on `n` elements up to isomorphism.
pub fn count_meet_semilattices(n: usize) -> usize {
    let mut count = 0;
    for_each_meet_semilattice(n, |s| count += (s.size() == n) as usize);
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::dedup_by_isomorphism;

    // lattices on n + 1 elements, up to isomorphism
    const KNOWN: [usize; 9] = [1, 1, 2, 5, 15, 53, 222, 1078, 5994];

    #[test]
    fn counts_match_lattice_counts() {
        let mut counts = [0usize; 10];
        for_each_meet_semilattice(9, |s| {
            assert!(s.is_valid());
            counts[s.size()] += 1;
        });
        assert_eq!(&counts[1..], &KNOWN);
    }

    #[test]
    fn canonical_form_is_invariant() {
        // the chain 0 < 1 < 2 with an extra atom 3, written two ways
        let a = SmallSemilattice::from_down_sets(&[1, 0b11, 0b111, 0b1001]).unwrap();
        let b = SmallSemilattice::from_down_sets(&[1, 0b11, 0b101, 0b1101]).unwrap();
        assert_eq!(a.canonical(), b.canonical());
        let c = SmallSemilattice::from_down_sets(&[1, 0b11, 0b111, 0b1011]).unwrap();
        assert_ne!(a.canonical(), c.canonical());
        assert_eq!(SmallSemilattice::from_key(4, a.canonical().key()), a.canonical());
    }

    #[test]
    fn small_levels_are_pairwise_non_isomorphic() {
        let mut by_size: Vec<Vec<FinPoset>> = vec![Vec::new(); 7];
        for_each_meet_semilattice(6, |s| by_size[s.size()].push(s.to_poset()));
        for level in by_size {
            let n = level.len();
            assert_eq!(dedup_by_isomorphism(level).len(), n);
        }
    }

    #[test]
    fn mask_tests_agree_with_poset_filters() {
        for_each_meet_semilattice(7, |s| {
            let p = s.to_poset();
            for g in 1..s.size() {
                let f: Vec<usize> = (0..s.size()).filter(|&x| s.leq(g, x)).collect();
                assert_eq!(s.exel_criterion(g), p.exel_criterion(&f).unwrap());
                assert_eq!(s.is_maximal_proper(g), p.is_maximal_proper(&f).unwrap());
            }
        });
    }

    #[test]
    fn rejects_non_semilattices() {
        // two atoms with two incomparable upper bounds and no meet between them
        assert!(SmallSemilattice::from_down_sets(&[1, 0b11, 0b101, 0b1111, 0b10111]).is_none());
        assert!(SmallSemilattice::from_down_sets(&[0b10, 0b11]).is_none());
    }
}
