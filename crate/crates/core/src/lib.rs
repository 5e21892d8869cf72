//! Finite Boolean inverse semigroups, finite Boolean groupoids, and the
//! non-commutative Stone duality between them.
//!
//! Everything in this crate is pure computation over finite tables, so it
//! builds without `std` (an allocator is required). File formats, the CLI and
//! rendering live in the companion `ncstone` crate.
//!
//! Module map:
//!
//! * [`catalog`]: named instances shared by tests and the command line.
//! * [`order`]: finite posets with bottom, filters and ultrafilters.
//! * [`semilattices`]: exhaustive generation of small meet semilattices.
//! * [`boolalg`]: finite Boolean algebras, Boolean rings and finite Stone duality.
//! * [`genbool`]: generalized (non-unital) Boolean algebras, symbolic finite/cofinite sets.
//! * [`invsemi`]: finite inverse semigroups and their Boolean structure.
//! * [`groupoid`]: finite groupoids, local bisections and `KB(G)`.
//! * [`duality`]: prime filters, the Stone groupoid, both round trips and morphism transport.
//! * [`unitize`]: unitization, the Clifford semigroup `C(S)` and the group of units.
//!
//! Partial maps compose right to left throughout: `x·y` means "apply `y`, then `x`".
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod boolalg;
pub mod catalog;
pub mod duality;
pub mod error;
pub mod genbool;
pub mod group;
pub mod groupoid;
pub mod invsemi;
pub mod iso;
pub mod order;
pub mod semilattices;
pub mod unitize;

mod bits;

pub use error::{Error, Result};

/// Seed used by every sampled check unless the caller supplies its own.
pub const DEFAULT_SEED: u64 = 0x5EED_2018;

/// Deterministic generator used for sampled law checks.
pub fn seeded_rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}
