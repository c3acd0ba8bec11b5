//! Exact symbolic verification kit for Pfaffian key varieties in weighted
//! projective spaces.
//!
//! The crate builds, from first principles, two explicit families of
//! polynomial data — a codimension-4 family carried by a 𝔖₆-equivariant
//! Pfaffian ideal in ℙ(1¹⁰,2⁵), and a pair of quadric double-cover families
//! in ℙ(1⁴,2¹⁰) — and mechanically verifies every identity, ideal
//! membership, rank statement, group action, and intersection-number
//! computation those constructions rest on. All arithmetic is exact
//! (arbitrary-precision rationals); there are no tolerances anywhere.
//!
//! Layers, bottom up:
//!
//! * [`rational`], [`symbol`], [`ring`], [`parse`] — exact scalars, interned
//!   names, sparse weighted polynomial rings, substitution maps, and a small
//!   expression parser.
//! * [`linalg`] — fraction-free exact linear algebra (rank, solve,
//!   nullspace) and polynomial matrices.
//! * [`pfaffian`] — 5×5 skew-symmetric polynomial matrices, 4×4 Pfaffians,
//!   the five Plücker relations, rank-2 wedges, and line/quadric incidence
//!   profiles.
//! * [`membership`] — bounded-degree ideal-membership certificates found by
//!   exact linear algebra, re-expanded on construction.
//! * [`type_r`], [`type_ir`] — the two verification suites.
//! * [`intersection`] — intersection-number arithmetic on a rank-2 divisor
//!   lattice, including the Diophantine contradiction checks.
//! * [`report`], [`runner`] — stable check identifiers, deterministic seeded
//!   execution, text and machine reports.
//!
//! Run everything with the CLI (`qfano-verify run --all`) or see the
//! `examples/` directory for one runnable program per capability.

pub mod rational;
pub mod symbol;
pub mod ring;
pub mod linalg;
pub mod membership;
pub mod parse;
pub mod pfaffian;
pub mod report;
pub mod runner;
pub mod sample;

pub mod intersection;
pub mod type_ir;
pub mod type_r;

pub use rational::{rat, rat_i, Rat};
pub use ring::{AlgebraError, Degree, Poly, PolyMap, Ring, WeightedRing};
