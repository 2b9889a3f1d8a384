//! Exact computations for 2-bridge knots `K(p,q)`.
//!
//! The crate builds Wirtinger and Schubert presentations from `p/q`,
//! computes classical and metabelian (dihedral-type) twisted Alexander
//! polynomials over cyclotomic fields, runs norm obstructions against
//! topological sliceness, and evaluates Casson-Gordon signatures of the
//! double branched cover. All arithmetic is exact.

pub mod arith;
pub mod cg;
pub mod error;
pub mod knot;
pub mod metabelian;
pub mod obstruction;
pub mod survey;
#[cfg(test)]
mod testkit;

pub use error::{Error, Result};

/// Version tag written into every JSON/CSV document.
pub const SCHEMA_VERSION: u32 = 1;
