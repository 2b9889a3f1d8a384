use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use serde::Serialize;

use crate::arith::Q;
use crate::error::{Error, Result};

/// Label `p/q` of a 2-bridge knot: `p` odd, `0 < q < p`, coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Fraction {
    pub p: u64,
    pub q: u64,
}

impl Fraction {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p < 3 {
            return Err(Error::invalid(format!("p = {p} must be at least 3")));
        }
        if p % 2 == 0 {
            return Err(Error::invalid(format!("p = {p} is even: K(p,q) is a two-component link")));
        }
        if q == 0 || q >= p {
            return Err(Error::invalid(format!("q = {q} must satisfy 0 < q < {p}")));
        }
        if p.gcd(&q) != 1 {
            return Err(Error::invalid(format!("gcd({p}, {q}) != 1")));
        }
        Ok(Fraction { p, q })
    }

    /// `K(p, p-q)`, the mirror image.
    pub fn mirror(self) -> Self {
        Fraction { p: self.p, q: self.p - self.q }
    }

    /// `m` with `p = m²`, if `p` is a perfect square.
    pub fn sqrt_p(self) -> Option<u64> {
        let m = self.p.sqrt();
        (m * m == self.p).then_some(m)
    }

    /// The values `q, q⁻¹, p - q, (p - q)⁻¹ (mod p)`, sorted and deduplicated.
    /// Each labels the same knot or its mirror.
    pub fn orbit(self) -> Vec<u64> {
        let inv = |x: u64| crate::arith::modp::inv(x, self.p).expect("q is a unit mod p");
        let mut o = vec![self.q, inv(self.q), self.p - self.q, inv(self.p - self.q)];
        o.sort_unstable();
        o.dedup();
        o
    }
}

/// Even continued fraction `c₁ + 1/(c₂ + 1/(…))` of `p/q'` where `q'` is
/// the even one of `q` and `p - q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenCF {
    pub terms: Vec<i64>,
    /// The even numerator actually expanded.
    pub q_used: u64,
    /// True when `q` was odd and replaced by `p - q`.
    pub mirrored: bool,
}

impl EvenCF {
    /// Fold back to a rational number.
    pub fn fold(&self) -> Q {
        fold(&self.terms)
    }

    pub fn crossings(&self) -> u64 {
        self.terms.iter().map(|c| c.unsigned_abs()).sum()
    }
}

pub fn fold(terms: &[i64]) -> Q {
    let mut it = terms.iter().rev();
    let mut v = Q::from_integer(BigInt::from(*it.next().expect("non-empty expansion")));
    for &c in it {
        v = Q::from_integer(BigInt::from(c)) + v.recip();
    }
    v
}

pub fn even_continued_fraction(f: Fraction) -> EvenCF {
    let mirrored = f.q % 2 == 1;
    let q = if mirrored { f.p - f.q } else { f.q };
    let (mut a, mut b) = (f.p as i128, q as i128);
    let mut terms = Vec::new();
    while b != 0 {
        // The unique even c with |a - c·b| < |b|.
        let fl = Integer::div_floor(&a, &b);
        let c = [fl - 1, fl, fl + 1, fl + 2]
            .into_iter()
            .find(|c| c % 2 == 0 && (a - c * b).abs() < b.abs())
            .expect("p odd, q even admits an even expansion");
        terms.push(c as i64);
        (a, b) = (b, a - c * b);
    }
    EvenCF { terms, q_used: q, mirrored }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(p: u64, q: u64) -> Vec<i64> {
        even_continued_fraction(Fraction::new(p, q).unwrap()).terms
    }

    #[test]
    fn known_expansions() {
        assert_eq!(cf(225, 94), vec![2, 2, 2, -6, -2, 2]);
        assert_eq!(cf(1225, 466), vec![2, 2, -2, -2, -4, 4, 2, -2]);
        assert_eq!(cf(3, 2), vec![2, -2]);
        assert_eq!(cf(9, 4), vec![2, 4]);
        assert_eq!(cf(7, 4), vec![2, -4]);
        assert_eq!(cf(5, 4), vec![2, -2, 2, -2]);
    }

    #[test]
    fn odd_q_is_replaced() {
        let e = even_continued_fraction(Fraction::new(3, 1).unwrap());
        assert!(e.mirrored);
        assert_eq!(e.q_used, 2);
        assert_eq!(e.fold(), Q::new(3.into(), 2.into()));
    }

    #[test]
    fn rejects_links_and_bad_labels() {
        assert!(Fraction::new(4, 1).is_err());
        assert!(Fraction::new(9, 3).is_err());
        assert!(Fraction::new(9, 9).is_err());
        assert!(Fraction::new(1, 0).is_err());
        // [2] folds to 2/1: even p, a link.
        assert_eq!(fold(&[2]), Q::from_integer(2.into()));
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::testkit::fraction;

    proptest! {
        #[test]
        fn expansion_folds_back(f in fraction(4001)) {
            let cf = even_continued_fraction(f);
            prop_assert!(cf.terms.iter().all(|c| c % 2 == 0 && *c != 0));
            prop_assert_eq!(cf.q_used % 2, 0);
            prop_assert_eq!(cf.q_used == f.q, !cf.mirrored);
            prop_assert_eq!(cf.fold(), Q::new(BigInt::from(f.p), BigInt::from(cf.q_used)));
        }

        #[test]
        fn orbit_is_closed(f in fraction(4001)) {
            let o = f.orbit();
            prop_assert!(o.len() <= 4 && o.contains(&f.q));
            for &q in &o {
                prop_assert_eq!(Fraction::new(f.p, q).unwrap().orbit(), o.clone());
            }
        }
    }
}
