//! 2-bridge knots from `p/q`: continued fractions, the 4-plat diagram,
//! group presentations and Fox calculus.

pub mod alexander;
pub mod fox;
pub mod fraction;
pub mod plat;
pub mod presentation;

pub use alexander::alexander_polynomial;
pub use fox::{fox_derivative, GroupRingElement};
pub use fraction::{even_continued_fraction, EvenCF, Fraction};
pub use plat::{fourplat_diagram, fourplat_from_terms, Crossing, Diagram};
pub use presentation::{
    schubert_presentation, wirtinger_presentation, FreeWord, KnotPresentation, Letter,
};

use crate::error::Result;

/// Wirtinger presentation of `K(p,q)` via the even continued fraction and
/// the 4-plat closure.
pub fn knot_presentation(f: Fraction) -> Result<KnotPresentation> {
    let cf = even_continued_fraction(f);
    let d = fourplat_diagram(&cf)?;
    wirtinger_presentation(&d)
}
