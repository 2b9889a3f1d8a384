use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use super::norm::reciprocal_split;
use crate::arith::{LaurentPoly, ZPoly, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FoxMilnor {
    pub passes: bool,
    /// `f` with `Δ ≐ f(t)·f(t^{-1})`, when one exists.
    pub f: Option<String>,
}

/// Fox–Milnor condition for an Alexander polynomial (`Δ(1) = ±1`).
pub fn fox_milnor_test(delta: &LaurentPoly<Q>) -> Result<FoxMilnor> {
    if delta.terms().any(|(_, c)| !c.is_integer()) {
        return Err(Error::invalid("Alexander polynomial must have integer coefficients"));
    }
    let at_one = delta.eval(&Q::one());
    if at_one.abs() != Q::one() {
        return Err(Error::invalid(format!("Δ(1) = {at_one}, expected ±1")));
    }
    let (z, _, _) = ZPoly::from_laurent(delta);
    Ok(match reciprocal_split(&z) {
        Some((half, unit)) => {
            debug_assert!(unit.abs() == BigInt::one());
            FoxMilnor { passes: true, f: Some(half.to_string()) }
        }
        None => FoxMilnor { passes: false, f: None },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::laurent::qpoly;

    #[test]
    fn examples() {
        assert!(!fox_milnor_test(&qpoly(&[1, -1, 1])).unwrap().passes);
        // (2t - 1)(t - 2).
        let fm = fox_milnor_test(&qpoly(&[2, -5, 2])).unwrap();
        assert!(fm.passes);
        let d = qpoly(&[-1, 5, -6, 3]).mul(&qpoly(&[-3, 6, -5, 1]));
        assert!(fox_milnor_test(&d).unwrap().passes);
        assert!(fox_milnor_test(&qpoly(&[1, 1])).is_err());
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::arith::laurent::qpoly;

    proptest! {
        #[test]
        fn products_with_reciprocal_pass(tail in prop::collection::vec(-5i64..6, 1..4)) {
            // Coefficients summing to 1, so that h(1) = 1.
            let mut c = vec![1 - tail.iter().sum::<i64>()];
            c.extend(tail);
            prop_assume!(c[0] != 0 && *c.last().unwrap() != 0);
            let h = qpoly(&c);
            let d = h.mul(&h.reciprocal());
            let fm = fox_milnor_test(&d).unwrap();
            prop_assert!(fm.passes);
        }
    }
}
