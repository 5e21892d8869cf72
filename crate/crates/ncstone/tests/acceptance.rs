//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails or runs past its time limit.
//!
//! Run a subset with `cargo test -p ncstone --test acceptance -- 3 9`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ncstone_core::boolalg::*;
use ncstone_core::catalog::{self, functor_catalog, groupoid_keys, morphism_catalog, semigroup_keys};
use ncstone_core::duality::*;
use ncstone_core::group::GroupTable;
use ncstone_core::groupoid::{kb, GroupoidFunctor, DEFAULT_KB_CAP};
use ncstone_core::invsemi::construct::{random_subalgebras, symmetric_inverse_monoid};
use ncstone_core::invsemi::{FinInvSemi, SemigroupMorphism};
use ncstone_core::seeded_rng;
use ncstone_core::semilattices::for_each_meet_semilattice;
use ncstone_core::unitize::symbolic::random_unitized;
use ncstone_core::unitize::*;

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(context: &str) -> impl FnOnce(E) -> String + '_ {
    move |e| format!("{context}: {e}")
}

fn semigroup(key: &str) -> Result<FinInvSemi, String> {
    catalog::semigroup(key).map_err(err(key))
}

/// Catalog hosts and KB of catalog groupoids, up to `max` elements.
fn hosts_up_to(max: usize) -> Result<Vec<(String, FinInvSemi)>, String> {
    let mut out = Vec::new();
    for key in semigroup_keys() {
        out.push((key.clone(), semigroup(&key)?));
    }
    for key in groupoid_keys() {
        let g = catalog::groupoid(&key).map_err(err(&key))?;
        if let Ok(t) = kb(&g, max) {
            out.push((format!("KB({key})"), t.semigroup));
        }
    }
    out.retain(|(_, s)| s.size() <= max);
    Ok(out)
}

fn boolean_duality() -> Check {
    for k in 1..=5 {
        let b = FinBoolAlg::new(k).map_err(err("FinBoolAlg"))?;
        let atoms = b.atoms();
        let u = |x: u64| -> u64 {
            b.atoms_below(x).iter().fold(0, |m, a| m | 1 << atoms.iter().position(|y| y == a).unwrap())
        };
        let mut seen = vec![false; b.size()];
        for x in 0..=b.top() {
            seen[u(x) as usize] = true;
            for y in 0..=b.top() {
                ensure!(u(x & y) == u(x) & u(y) && u(x | y) == u(x) | u(y), "k={k}: U does not preserve ∧/∨");
                ensure!(b.leq(x, y) == (u(x) & !u(y) == 0), "k={k}: U does not preserve order");
            }
        }
        ensure!(seen.iter().all(|&s| s), "k={k}: U is not onto the powerset of atoms");
    }
    let mut homs = 0;
    let mut maps = 0;
    for from in 1..=3u32 {
        for to in 1..=3u32 {
            let (b, c) = (FinBoolAlg::new(to).map_err(err("B"))?, FinBoolAlg::new(from).map_err(err("C"))?);
            // every function at(C) → at(B): ♯ ∘ ♭ = id
            for code in 0..(to as usize).pow(from) {
                let map: Vec<u32> = (0..from).map(|i| (code / (to as usize).pow(i) % to as usize) as u32).collect();
                let alpha = AtomMap::new(from, to, map).map_err(err("atom map"))?;
                let theta = atom_map_to_hom(&alpha).map_err(err("♭"))?;
                ensure!(hom_to_atom_map(&theta).map_err(err("♯"))? == alpha, "♯(♭(α)) ≠ α for {alpha:?}");
                maps += 1;
            }
            // every homomorphism B → C, found among all atom images: ♭ ∘ ♯ = id
            let n = c.size();
            for code in 0..n.pow(to) {
                let images: Vec<u64> = (0..to).map(|i| (code / n.pow(i) % n) as u64).collect();
                let Ok(theta) = BoolHom::from_atom_images(b, c, &images) else { continue };
                if theta.check_laws().is_ok() {
                    let sharp = hom_to_atom_map(&theta).map_err(err("♯"))?;
                    ensure!(atom_map_to_hom(&sharp).map_err(err("♭"))? == theta, "♭(♯(θ)) ≠ θ");
                    homs += 1;
                }
            }
        }
    }
    ensure!(homs == maps, "{homs} homomorphisms but {maps} atom maps");
    Ok(format!("k ≤ 5 powerset iso; {maps} atom maps and {homs} homomorphisms round trip"))
}

fn boolean_rings() -> Check {
    for k in 1..=4 {
        let b = FinBoolAlg::new(k).map_err(err("FinBoolAlg"))?;
        ensure!(ring_round_trip_holds(&b), "k={k}: ring round trip fails");
        ensure!(verify_axioms(&AlgebraOf(RingOf(b)), CheckMode::Exhaustive).all_pass(), "k={k}: B(R(B)) axioms");
        for x in 0..=b.top() {
            for y in 0..=b.top() {
                let (sum, prod) = b.to_ring(x, y);
                ensure!(sum == x ^ y && prod == x & y, "k={k}: ring operations of ({x}, {y})");
            }
        }
    }
    Ok("k ≤ 4 exhaustive".into())
}

fn semigroup_round_trip() -> Check {
    let keys = ["I_1", "I_2", "I_3", "GZ(Z2)", "GZ(Z3)", "Rook(2,Z2)", "I_2xI_2"]
        .map(String::from)
        .into_iter()
        .chain((0..catalog::RANDOM_SUBALGEBRAS).map(|i| format!("Sub(I_3,{i})")));
    let mut sizes = Vec::new();
    for key in keys {
        let s = semigroup(&key)?;
        let al = alpha(&s).map_err(err(&key))?;
        let t = &al.kb.semigroup;
        ensure!(t.size() == s.size(), "{key}: |KB(G(S))| = {} ≠ {}", t.size(), s.size());
        let mut image = al.map.clone();
        image.sort_unstable();
        image.dedup();
        ensure!(image.len() == s.size(), "{key}: α is not injective");
        for a in 0..s.size() {
            ensure!(al.map[s.inv(a)] == t.inv(al.map[a]), "{key}: α and inverses");
            for b in 0..s.size() {
                ensure!(al.map[s.mul(a, b)] == t.mul(al.map[a], al.map[b]), "{key}: α is not multiplicative");
            }
        }
        sizes.push(format!("{key}={}", s.size()));
    }
    ensure!(semigroup("I_3")?.size() == 34, "|I_3| ≠ 34");
    ensure!(semigroup("Rook(2,Z2)")?.size() == 17, "|R_2(Z_2⁰)| ≠ 17");
    Ok(sizes.join(" "))
}

fn groupoid_round_trip() -> Check {
    let mut keys: Vec<String> = (1..=4).map(|n| format!("Pair({n})")).collect();
    for n in 1..=2 {
        for h in ["Z1", "Z2", "Z3"] {
            keys.push(format!("Comp({n},{h},{n})"));
        }
    }
    keys.extend(["Pair(2)+Pair(2)", "Pair(1)+Comp(2,Z2,2)", "Pair(1)+Pair(3)", "Comp(1,Z3,1)+Pair(2)"].map(String::from));
    for key in &keys {
        let g = catalog::groupoid(key).map_err(err(key))?;
        let be = beta(&g).map_err(err(key))?;
        let h = &be.stone.groupoid;
        ensure!(h.size() == g.size(), "{key}: |G(KB(G))| ≠ |G|");
        let f = GroupoidFunctor::new(&g, h, be.map.clone()).map_err(err(key))?;
        let mut image = f.map().to_vec();
        image.sort_unstable();
        image.dedup();
        ensure!(image.len() == g.size() && f.is_covering(), "{key}: β is not an isomorphism");
        ensure!(h.is_isomorphic(&g), "{key}: not isomorphic");
    }
    Ok(format!("{} groupoids", keys.len()))
}

fn filter_oracle_check() -> Check {
    let mut hosts = hosts_up_to(ORACLE_MAX)?;
    let i3 = symmetric_inverse_monoid(3).map_err(err("I_3"))?;
    for (i, (s, _)) in random_subalgebras(&i3, 40, 99).map_err(err("subalgebras"))?.into_iter().enumerate() {
        hosts.push((format!("sub{i}"), s));
    }
    for k in 1..=3 {
        hosts.push((format!("Bool({k})"), semigroup(&format!("Bool({k})"))?));
    }
    hosts.retain(|(_, s)| s.size() <= ORACLE_MAX);
    let mut filters = 0;
    for (key, s) in &hosts {
        let o = filter_oracle(s).map_err(err(key))?;
        ensure!(o.agrees_with_atoms(s), "{key}: prime ≠ ultra ≠ atom generated");
        filters += o.proper_filters.len();
    }
    Ok(format!("{} hosts, {filters} proper filters", hosts.len()))
}

fn correspondences() -> Check {
    let hosts = hosts_up_to(usize::MAX)?;
    for (key, s) in &hosts {
        let rep = verify_correspondences(s).map_err(err(key))?;
        ensure!(rep.all_hold(), "{key}: {rep:?}");
    }
    let rook = verify_correspondences(&semigroup("Rook(2,Z2)")?).map_err(err("Rook"))?;
    let fe = rook.row("fundamental").ok_or("no fundamental row")?;
    ensure!(!fe.lhs_value && !fe.rhs_value, "Rook(2,Z2) should be neither fundamental nor effective");
    let prod = verify_correspondences(&semigroup("I_2xI_2")?).map_err(err("I_2xI_2"))?;
    let zm = prod.row("0-simplifying").ok_or("no 0-simplifying row")?;
    ensure!(!zm.lhs_value && !zm.rhs_value, "I_2xI_2 should be neither 0-simplifying nor minimal");
    Ok(format!("{} instances, contrasts present", hosts.len()))
}

fn morphism_duality() -> Check {
    let ms = morphism_catalog().map_err(err("catalog"))?;
    let proj = ms.iter().find(|m| m.name == "projection I_2xI_2 -> I_2").ok_or("no projection")?;
    let theta = proj.morphism().map_err(err(&proj.name))?;
    ensure!(theta.is_callitic(), "the quotient I_2xI_2 → I_2 is not callitic");
    let (gs, gt) = (stone_groupoid(&proj.source).map_err(err("G"))?, stone_groupoid(&proj.target).map_err(err("G"))?);
    let star = dual_morphism(&theta, &gs, &gt).map_err(err("θ⋆"))?;
    ensure!(star.is_covering(), "θ⋆ is not covering");
    let mut checked = 0;
    for m in &ms {
        let theta = m.morphism().map_err(err(&m.name))?;
        if theta.is_callitic() {
            ensure!(morphism_round_trip(&theta).map_err(err(&m.name))?, "{}: (θ⋆)⋆ ≠ α θ α⁻¹", m.name);
            checked += 1;
        }
        let ideal_induced = congruence_is_ideal_induced(&theta).map_err(err(&m.name))?;
        ensure!(ideal_induced == theta.is_weakly_meet_preserving(), "{}: ε_I vs weakly meet preserving", m.name);
    }
    for f in functor_catalog().map_err(err("catalog"))? {
        let phi = f.functor().map_err(err(&f.name))?;
        if phi.is_covering() {
            ensure!(functor_round_trip(&phi).map_err(err(&f.name))?, "{}: (φ⋆)⋆ ≠ β φ β⁻¹", f.name);
            checked += 1;
        }
    }
    let mut quotients = 0;
    for key in semigroup_keys() {
        let s = semigroup(&key)?;
        for ideal in s.additive_ideals() {
            let q = quotient(&s, &ideal).map_err(err(&key))?;
            let nat = SemigroupMorphism::new(&s, &q.semigroup, q.map.clone()).map_err(err(&key))?;
            ensure!(nat.is_weakly_meet_preserving(), "{key}: S → S/ε_I is not weakly meet preserving");
            ensure!(congruence_is_ideal_induced(&nat).map_err(err(&key))?, "{key}: ε_I not recovered");
            quotients += 1;
        }
    }
    Ok(format!("{checked} round trips, {quotients} ideal quotients"))
}

fn unitization() -> Check {
    for key in semigroup_keys() {
        let s = semigroup(&key)?;
        let u = unitize_finite(&s).map_err(err(&key))?;
        ensure!(u.monoid.size() == 2 * s.size(), "{key}: |T| ≠ 2|S|");
    }
    let mut rng = seeded_rng(2024);
    for i in 0..10_000 {
        let (x, y) = (random_unitized(&mut rng, 10), random_unitized(&mut rng, 10));
        ensure!(compose_direct(&x, &y) == compose_formula(&x, &y), "sample {i}: {x:?} · {y:?}");
    }
    for n in 1..=3 {
        let u = group_of_units(&symmetric_inverse_monoid(n).map_err(err("I_n"))?).map_err(err("U(I_n)"))?;
        ensure!(u.group.isomorphism_to(&GroupTable::symmetric(n)).is_some(), "U(I_{n}) ≇ S_{n}");
    }
    for key in ["Pair(2)", "Pair(3)", "Comp(2,Z2,2)"] {
        let g = catalog::groupoid(key).map_err(err(key))?;
        let r = units_vs_full_group(&g, DEFAULT_KB_CAP).map_err(err(key))?;
        ensure!(r.units_iso && r.sigma_iso, "{key}: full group vs units");
    }
    Ok("catalog doubled, 10⁴ samples agree, U(I_n) ≅ S_n, full groups match".into())
}

// lattices on n + 1 elements up to isomorphism, n = 1..12
const SEMILATTICE_COUNTS: [usize; 12] = [1, 1, 2, 5, 15, 53, 222, 1078, 5994, 37622, 262776, 2018305];

fn law_suites() -> Check {
    let mut counts = [0usize; 13];
    let mut failure = None;
    for_each_meet_semilattice(12, |s| {
        counts[s.size()] += 1;
        if failure.is_none() {
            if let Some(g) = (1..s.size()).find(|&g| s.exel_criterion(g) != s.is_maximal_proper(g)) {
                failure = Some(format!("{:?} at {g}", s.down_sets()));
            }
        }
    });
    if let Some(f) = failure {
        return Err(format!("criterion and maximality differ on {f}"));
    }
    ensure!(counts[1..] == SEMILATTICE_COUNTS, "semilattice counts {:?}", &counts[1..]);
    let mut hosts = hosts_up_to(40)?;
    let i3 = symmetric_inverse_monoid(3).map_err(err("I_3"))?;
    hosts.extend(random_subalgebras(&i3, 20, 7).map_err(err("subalgebras"))?.into_iter().map(|(s, _)| ("sub".into(), s)));
    for (key, s) in &hosts {
        ensure!(s.meet_join_calculus_failure().is_none(), "{key}: {:?}", s.meet_join_calculus_failure());
    }
    Ok(format!("{} semilattices, {} hosts", counts.iter().sum::<usize>(), hosts.len()))
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

const CRITERIA: [Criterion; 9] = [
    Criterion { id: 1, title: "finite Boolean algebra duality", limit: Duration::from_secs(1), run: boolean_duality },
    Criterion { id: 2, title: "Boolean ring round trip", limit: Duration::from_secs(1), run: boolean_rings },
    Criterion { id: 3, title: "semigroup round trip", limit: Duration::from_secs(10), run: semigroup_round_trip },
    Criterion { id: 4, title: "groupoid round trip", limit: Duration::from_secs(10), run: groupoid_round_trip },
    Criterion { id: 5, title: "prime = ultra oracle", limit: Duration::from_secs(30), run: filter_oracle_check },
    Criterion { id: 6, title: "correspondence suite", limit: Duration::from_secs(10), run: correspondences },
    Criterion { id: 7, title: "morphism duality", limit: Duration::from_secs(10), run: morphism_duality },
    Criterion { id: 8, title: "unitization", limit: Duration::from_secs(60), run: unitization },
    Criterion { id: 9, title: "law suites", limit: Duration::from_secs(60), run: law_suites },
];

fn main() -> ExitCode {
    let wanted: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for c in CRITERIA.iter().filter(|c| wanted.is_empty() || wanted.contains(&c.id)) {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("over the {:?} limit; {d}", c.limit)),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {}: {} {:<32} {:>9.3}s / {:>3}s  {detail}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
