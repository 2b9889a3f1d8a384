//! Exact arithmetic kernels.

pub mod cyclo;
pub mod det;
pub mod factor;
pub mod field;
pub mod laurent;
pub mod modp;
pub mod poly_fp;
pub mod poly_z;
pub mod realquad;

pub use cyclo::CycloNumber;
pub use factor::FactorList;
pub use field::{Field, Fp, OrderedField};
pub use laurent::LaurentPoly;
pub use poly_fp::FpPoly;
pub use poly_z::ZPoly;
pub use realquad::RealQuad;

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// `num/den`, or just `num` when the denominator is one.
pub fn fmt_rational(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
