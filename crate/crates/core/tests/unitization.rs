use ncstone_core::catalog::{self, semigroup_keys};
use ncstone_core::genbool::{FinCofinAlg, Gba};
use ncstone_core::group::GroupTable;
use ncstone_core::groupoid::DEFAULT_KB_CAP;
use ncstone_core::invsemi::construct::symmetric_inverse_monoid;
use ncstone_core::unitize::symbolic::{from_fincofin, random_unit, random_unitized, to_fincofin};
use ncstone_core::unitize::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn unitization_doubles_every_catalog_semigroup() {
    for key in semigroup_keys() {
        let s = catalog::semigroup(&key).unwrap();
        let u = unitize_finite(&s).unwrap_or_else(|e| panic!("{key}: {e}"));
        assert_eq!(u.monoid.size(), 2 * s.size(), "{key}");
        assert!(u.monoid.is_boolean(), "{key}");
        let mut image = u.embedding.clone();
        image.sort_unstable();
        assert!(u.monoid.is_additive_ideal(&image), "{key}");
        // the identity of T lies outside S unless S is trivial
        assert!(!u.embedding.contains(&u.identity()), "{key}");
    }
}

#[test]
fn symbolic_products_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let x = random_unitized(&mut rng, 10);
        let y = random_unitized(&mut rng, 10);
        assert_eq!(compose_direct(&x, &y), compose_formula(&x, &y), "{x:?} · {y:?}");
    }
}

#[test]
fn symbolic_multiplication_is_associative_with_inverses() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..2_000 {
        let [x, y, z] = [(); 3].map(|_| random_unitized(&mut rng, 8));
        let xy_z = compose_unitized(&compose_unitized(&x, &y), &z);
        let x_yz = compose_unitized(&x, &compose_unitized(&y, &z));
        assert_eq!(xy_z, x_yz);
        let xi = x.inverse();
        assert_eq!(compose_unitized(&compose_unitized(&x, &xi), &x), x);
    }
}

#[test]
fn finite_support_maps_form_an_ideal() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..2_000 {
        let x = random_unitized(&mut rng, 8);
        let y = random_unitized(&mut rng, 8);
        if x.is_inner() || y.is_inner() {
            assert!(compose_unitized(&x, &y).is_inner());
        }
    }
}

#[test]
fn idempotents_are_finite_cofinite_sets() {
    let alg = FinCofinAlg::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..2_000 {
        let (a, b) = (alg.sample(&mut rng), alg.sample(&mut rng));
        let (x, y) = (from_fincofin(&a), from_fincofin(&b));
        assert!(x.is_idempotent());
        assert_eq!(to_fincofin(&x).as_ref(), Some(&a));
        assert_eq!(to_fincofin(&compose_unitized(&x, &y)), Some(alg.meet(&a, &b)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..2_000 {
        let x = random_unitized(&mut rng, 8);
        assert_eq!(x.is_idempotent(), to_fincofin(&x).is_some());
    }
}

#[test]
fn units_form_a_group() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..2_000 {
        let (x, y) = (random_unit(&mut rng, 10), random_unit(&mut rng, 10));
        assert!(is_unit_unitized(&x) && is_unit_unitized(&y));
        assert!(is_unit_unitized(&compose_unitized(&x, &y)));
        assert_eq!(compose_unitized(&x, &x.inverse()), UnitizedElem::identity());
    }
}

#[test]
fn units_of_symmetric_inverse_monoids() {
    for n in 1..=3 {
        let s = symmetric_inverse_monoid(n).unwrap();
        let u = group_of_units(&s).unwrap();
        assert!(u.group.isomorphism_to(&GroupTable::symmetric(n)).is_some(), "n = {n}");
    }
}

#[test]
fn full_groups_match_units() {
    for (key, order) in [("Pair(2)", 2), ("Pair(3)", 6), ("Comp(2,Z2,2)", 8)] {
        let g = catalog::groupoid(key).unwrap();
        let r = units_vs_full_group(&g, DEFAULT_KB_CAP).unwrap();
        assert_eq!(r.group.order(), order, "{key}");
        assert!(r.units_iso && r.sigma_iso, "{key}");
    }
}
