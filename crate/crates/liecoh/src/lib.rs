//! Exact computational algebra for finite-dimensional Lie theory.
//!
//! Everything is computed over the Gaussian rationals with arbitrary
//! precision — no floating point, no sampling, no tolerance knobs. The crate
//! provides:
//!
//! - exact dense linear algebra with canonical echelon forms ([`linalg`]);
//! - Lie algebras by structure constants, with full axiom checking,
//!   quotients, direct sums, and fixed subalgebras of automorphisms
//!   ([`lie`]);
//! - representations and module constructions: duals, tensors, internal
//!   homs, invariants, intertwiner spaces, Burnside simplicity tests, and
//!   semisimple decomposition reports ([`rep`]);
//! - first cohomology and extension groups: spaces of derivations, inner
//!   derivations, `H¹`, `Ext¹`, explicit extension modules built from
//!   cocycles, and closed-form special cases with cross-checks
//!   ([`cohomology`]);
//! - the rank-one simple algebra, its simple modules, and Clebsch–Gordan
//!   decompositions verified against exact weight staircases ([`sl2`]);
//! - current algebras `g ⊗ S` for commutative `S`, evaluation modules,
//!   kernel-ideal structure, Ext-driven block partitions, and spectral
//!   characters ([`current`]);
//! - symbolic Laurent-polynomial and quaternion-algebra arithmetic in two
//!   variables, idempotent projector identities, and Galois descent
//!   cocycles with change-of-basis verification ([`laurent`], [`quat`],
//!   [`cocycle`]);
//! - a JSON job runner behind the thin `liecoh` binary ([`jobs`]).
//!
//! The `examples/` directory demonstrates each capability end to end; the
//! `acceptance` integration test pins the full verification suite.

pub mod cocycle;
pub mod cohomology;
pub mod current;
pub mod error;
pub mod jobs;
pub mod laurent;
pub mod lie;
pub mod linalg;
pub mod quat;
pub mod rep;
pub mod scalar;
pub mod sl2;

pub use error::{Error, Result};
