//! The quadric double-cover machinery in ℙ(1⁴,2¹⁰), in its two cases —
//! branch quartic of rank 6 ("general") and of rank 5 ("special") — with the
//! identities, memberships, orbit profiles, and fiber computations that
//! verify the construction.

mod checks;
mod data;

pub use checks::*;
pub use data::{general, special, CaseTag, FiberShape, TypeIRCase};
