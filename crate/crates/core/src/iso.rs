//! Isomorphism search between small finite structures.
//!
//! Used to compare independently constructed objects (for example `R_2` over
//! the trivial group against `I_2`). The duality maps themselves are explicit
//! and never go through this module.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// A finite set with a partial binary product and an involution, covering
/// semigroups (total product), groupoids and groups.
pub trait PartialMagma {
    fn size(&self) -> usize;
    fn product(&self, a: usize, b: usize) -> Option<usize>;
    fn inverse(&self, a: usize) -> usize;
}

fn signature<M: PartialMagma + ?Sized>(m: &M, a: usize) -> [usize; 6] {
    let n = m.size();
    let mut defined = 0;
    let mut left_fix = 0;
    let mut right_fix = 0;
    for b in 0..n {
        if let Some(p) = m.product(a, b) {
            defined += 1;
            if p == a {
                left_fix += 1;
            }
        }
        if m.product(b, a) == Some(a) {
            right_fix += 1;
        }
    }
    // length of the power sequence a, a², a³, … until it repeats
    let mut seen = vec![false; n];
    let mut cur = Some(a);
    let mut period = 0;
    while let Some(c) = cur {
        if seen[c] {
            break;
        }
        seen[c] = true;
        period += 1;
        cur = m.product(c, a);
    }
    [
        (m.product(a, a) == Some(a)) as usize,
        (m.inverse(a) == a) as usize,
        defined,
        left_fix,
        right_fix,
        period,
    ]
}

fn closure<M: PartialMagma + ?Sized>(m: &M, gens: &[usize]) -> Vec<bool> {
    let n = m.size();
    let mut inside = vec![false; n];
    let mut members = Vec::new();
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &g in gens {
        if !inside[g] {
            inside[g] = true;
            queue.push_back(g);
        }
    }
    while let Some(x) = queue.pop_front() {
        members.push(x);
        let xi = m.inverse(x);
        if !inside[xi] {
            inside[xi] = true;
            queue.push_back(xi);
        }
        for &y in members.clone().iter() {
            for p in [m.product(x, y), m.product(y, x)].into_iter().flatten() {
                if !inside[p] {
                    inside[p] = true;
                    queue.push_back(p);
                }
            }
        }
    }
    inside
}

fn generators<M: PartialMagma + ?Sized>(m: &M) -> Vec<usize> {
    let n = m.size();
    let mut gens = Vec::new();
    let mut covered = vec![false; n];
    while covered.iter().any(|c| !c) {
        // greedily take the uncovered element whose closure adds the most
        let mut best = None;
        let mut best_gain = 0;
        for cand in (0..n).filter(|&c| !covered[c]) {
            let mut trial = gens.clone();
            trial.push(cand);
            let gain = closure(m, &trial).iter().filter(|&&c| c).count();
            if best.is_none() || gain > best_gain {
                best = Some(cand);
                best_gain = gain;
            }
        }
        let g = best.expect("an uncovered element exists");
        gens.push(g);
        covered = closure(m, &gens);
    }
    gens
}

struct Search<'a, A: ?Sized, B: ?Sized> {
    a: &'a A,
    b: &'a B,
    sig_a: Vec<[usize; 6]>,
    sig_b: Vec<[usize; 6]>,
}

impl<A: PartialMagma + ?Sized, B: PartialMagma + ?Sized> Search<'_, A, B> {
    /// Extends a partial map by forcing products and inverses. Returns false on
    /// any contradiction.
    fn propagate(&self, map: &mut [Option<usize>], rev: &mut [Option<usize>], start: &[usize]) -> bool {
        let mut queue: VecDeque<usize> = start.iter().copied().collect();
        let mut assigned: Vec<usize> = (0..map.len()).filter(|&x| map[x].is_some()).collect();
        let set = |x: usize,
                   y: usize,
                   map: &mut [Option<usize>],
                   rev: &mut [Option<usize>],
                   queue: &mut VecDeque<usize>,
                   assigned: &mut Vec<usize>|
         -> bool {
            match (map[x], rev[y]) {
                (Some(v), _) => v == y,
                (None, Some(_)) => false,
                (None, None) => {
                    if self.sig_a[x] != self.sig_b[y] {
                        return false;
                    }
                    map[x] = Some(y);
                    rev[y] = Some(x);
                    queue.push_back(x);
                    assigned.push(x);
                    true
                }
            }
        };
        while let Some(x) = queue.pop_front() {
            let fx = map[x].expect("queued elements are mapped");
            if !set(self.a.inverse(x), self.b.inverse(fx), map, rev, &mut queue, &mut assigned) {
                return false;
            }
            let snapshot = assigned.clone();
            for y in snapshot {
                let fy = map[y].expect("assigned");
                for (p, q) in [(self.a.product(x, y), self.b.product(fx, fy)), (self.a.product(y, x), self.b.product(fy, fx))] {
                    match (p, q) {
                        (None, None) => {}
                        (Some(p), Some(q)) => {
                            if !set(p, q, map, rev, &mut queue, &mut assigned) {
                                return false;
                            }
                        }
                        _ => return false,
                    }
                }
            }
        }
        true
    }

    fn run(&self, gens: &[usize], map: Vec<Option<usize>>, rev: Vec<Option<usize>>) -> Option<Vec<usize>> {
        let Some((&g, rest)) = gens.split_first() else {
            return map.into_iter().collect();
        };
        if map[g].is_some() {
            return self.run(rest, map, rev);
        }
        for cand in 0..self.b.size() {
            if rev[cand].is_some() || self.sig_a[g] != self.sig_b[cand] {
                continue;
            }
            let mut m2 = map.clone();
            let mut r2 = rev.clone();
            m2[g] = Some(cand);
            r2[cand] = Some(g);
            if self.propagate(&mut m2, &mut r2, &[g]) {
                if let Some(found) = self.run(rest, m2, r2) {
                    return Some(found);
                }
            }
        }
        None
    }
}

/// Finds a bijection `f` with `f(ab) = f(a)f(b)` (including definedness) and
/// `f(a⁻¹) = f(a)⁻¹`.
pub fn find_isomorphism<A, B>(a: &A, b: &B) -> Option<Vec<usize>>
where
    A: PartialMagma + ?Sized,
    B: PartialMagma + ?Sized,
{
    if a.size() != b.size() {
        return None;
    }
    let search = Search {
        a,
        b,
        sig_a: (0..a.size()).map(|x| signature(a, x)).collect(),
        sig_b: (0..b.size()).map(|x| signature(b, x)).collect(),
    };
    let mut sa = search.sig_a.clone();
    let mut sb = search.sig_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let gens = generators(a);
    let found = search.run(&gens, vec![None; a.size()], vec![None; b.size()])?;
    is_isomorphism(a, b, &found).then_some(found)
}

/// Checks that `map` is a bijective homomorphism of partial magmas.
pub fn is_isomorphism<A, B>(a: &A, b: &B, map: &[usize]) -> bool
where
    A: PartialMagma + ?Sized,
    B: PartialMagma + ?Sized,
{
    let n = a.size();
    if map.len() != n || b.size() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &y in map {
        if y >= n || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    (0..n).all(|x| map[a.inverse(x)] == b.inverse(map[x]))
        && (0..n).all(|x| {
            (0..n).all(|y| a.product(x, y).map(|p| map[p]) == b.product(map[x], map[y]))
        })
}

/// Order isomorphism search between two relations on `0..n` and `0..m`.
pub fn find_relation_isomorphism(
    n: usize,
    m: usize,
    ra: impl Fn(usize, usize) -> bool,
    rb: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    if n != m {
        return None;
    }
    let deg = |r: &dyn Fn(usize, usize) -> bool, x: usize| {
        let up = (0..n).filter(|&y| r(x, y)).count();
        let down = (0..n).filter(|&y| r(y, x)).count();
        (up, down)
    };
    let da: Vec<_> = (0..n).map(|x| deg(&ra, x)).collect();
    let db: Vec<_> = (0..n).map(|x| deg(&rb, x)).collect();
    fn go(
        i: usize,
        n: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        da: &[(usize, usize)],
        db: &[(usize, usize)],
        ra: &dyn Fn(usize, usize) -> bool,
        rb: &dyn Fn(usize, usize) -> bool,
    ) -> bool {
        if i == n {
            return true;
        }
        for c in 0..n {
            if used[c] || da[i] != db[c] {
                continue;
            }
            let ok = (0..i).all(|j| ra(i, j) == rb(c, map[j]) && ra(j, i) == rb(map[j], c))
                && ra(i, i) == rb(c, c);
            if ok {
                map.push(c);
                used[c] = true;
                if go(i + 1, n, map, used, da, db, ra, rb) {
                    return true;
                }
                map.pop();
                used[c] = false;
            }
        }
        false
    }
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    go(0, n, &mut map, &mut used, &da, &db, &ra, &rb).then_some(map)
}
