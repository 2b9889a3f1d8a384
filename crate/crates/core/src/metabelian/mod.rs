//! Metabelian characters over `F_k` and reduced twisted Alexander
//! polynomials of 2-bridge knots.

pub mod character;
pub mod phi;
pub mod twisted;

pub use character::{solve_character, Character};
pub use phi::MonoMat;
pub use twisted::{
    galois_orbit, normalize_units, twisted_alexander_reduced, twisted_for_fraction, TwistedAlex,
};
