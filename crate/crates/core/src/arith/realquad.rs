use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::field::{Field, OrderedField};
use super::{fmt_rational, Q};

/// `x + y·√d` in `Q(√d)`, `d > 1` square-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RealQuad {
    pub d: u64,
    pub x: Q,
    pub y: Q,
}

impl RealQuad {
    pub fn new(d: u64, x: Q, y: Q) -> Self {
        RealQuad { d, x, y }
    }

    pub fn rational(d: u64, x: Q) -> Self {
        RealQuad { d, x, y: Q::zero() }
    }

    pub fn from_ints(d: u64, x: i64, y: i64) -> Self {
        RealQuad {
            d,
            x: Q::from_integer(BigInt::from(x)),
            y: Q::from_integer(BigInt::from(y)),
        }
    }

    pub fn conj(&self) -> Self {
        RealQuad { d: self.d, x: self.x.clone(), y: -&self.y }
    }

    /// Field norm `x² - d·y²`.
    pub fn norm(&self) -> Q {
        &self.x * &self.x - &self.y * &self.y * Q::from_integer(BigInt::from(self.d))
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.y)
    }

    fn d_q(&self) -> Q {
        Q::from_integer(BigInt::from(self.d))
    }
}

fn sign_of(q: &Q) -> Ordering {
    if Zero::is_zero(q) {
        Ordering::Equal
    } else if q.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl Field for RealQuad {
    fn zero_like(&self) -> Self {
        RealQuad::rational(self.d, Q::zero())
    }
    fn one_like(&self) -> Self {
        RealQuad::rational(self.d, Q::one())
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(&self.x) && Zero::is_zero(&self.y)
    }
    fn plus(&self, rhs: &Self) -> Self {
        RealQuad { d: self.d, x: &self.x + &rhs.x, y: &self.y + &rhs.y }
    }
    fn minus(&self, rhs: &Self) -> Self {
        RealQuad { d: self.d, x: &self.x - &rhs.x, y: &self.y - &rhs.y }
    }
    fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.d, rhs.d, "radicand mismatch");
        RealQuad {
            d: self.d,
            x: &self.x * &rhs.x + &self.y * &rhs.y * self.d_q(),
            y: &self.x * &rhs.y + &self.y * &rhs.x,
        }
    }
    fn negate(&self) -> Self {
        RealQuad { d: self.d, x: -&self.x, y: -&self.y }
    }
    fn inverse(&self) -> Option<Self> {
        if Field::vanishes(self) {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(RealQuad { d: self.d, x: c.x / &n, y: c.y / &n })
    }
}

impl OrderedField for RealQuad {
    fn signum(&self) -> Ordering {
        let sx = sign_of(&self.x);
        let sy = sign_of(&self.y);
        if sy == Ordering::Equal || sx == sy {
            return if sx == Ordering::Equal { sy } else { sx };
        }
        if sx == Ordering::Equal {
            return sy;
        }
        // Opposite signs: compare x² with d·y².
        let lhs = &self.x * &self.x;
        let rhs = &self.y * &self.y * self.d_q();
        match lhs.cmp(&rhs) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => unreachable!("d is square-free"),
        }
    }

    fn galois_conj(&self) -> Self {
        self.conj()
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.signum() == Ordering::Less {
            return None;
        }
        if Field::vanishes(self) {
            return Some(self.clone());
        }
        if Zero::is_zero(&self.y) {
            if let Some(u) = self.x.sqrt_exact() {
                return Some(RealQuad::rational(self.d, u));
            }
            return (&self.x / self.d_q())
                .sqrt_exact()
                .map(|v| RealQuad::new(self.d, Q::zero(), v));
        }
        // (u + v√d)² = u² + d v² + 2uv√d.
        let n = self.norm().sqrt_exact()?;
        let two = Q::from_integer(BigInt::from(2));
        for cand in [(&self.x + &n) / &two, (&self.x - &n) / &two] {
            if let Some(u) = cand.sqrt_exact() {
                if Zero::is_zero(&u) {
                    continue;
                }
                let v = &self.y / (&two * &u);
                let s = RealQuad::new(self.d, u, v);
                if s.times(&s) == *self {
                    return Some(if s.signum() == Ordering::Less { s.negate() } else { s });
                }
            }
        }
        None
    }
}

impl fmt::Display for RealQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})*sqrt({})", fmt_rational(&self.x), fmt_rational(&self.y), self.d)
    }
}

impl serde::Serialize for RealQuad {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Debug for RealQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::q_frac;

    #[test]
    fn signs() {
        let r = |x, y| RealQuad::from_ints(5, x, y);
        assert_eq!(r(3, -1).signum(), Ordering::Greater);
        assert_eq!(r(2, -1).signum(), Ordering::Less);
        assert_eq!(r(-3, 1).signum(), Ordering::Less);
        assert_eq!(r(-2, 1).signum(), Ordering::Greater);
        assert_eq!(r(0, 0).signum(), Ordering::Equal);
        assert_eq!(r(0, -1).signum(), Ordering::Less);
        // 25 - 11√5 ≈ 0.403.
        assert_eq!(r(25, -11).signum(), Ordering::Greater);
    }

    #[test]
    fn square_roots() {
        let a = RealQuad::from_ints(5, 3, 1);
        let sq = a.times(&a);
        assert_eq!(sq.sqrt_exact().unwrap(), a);
        assert_eq!(RealQuad::from_ints(5, 5, 0).sqrt_exact().unwrap(), RealQuad::from_ints(5, 0, 1));
        assert!(RealQuad::from_ints(5, 2, 0).sqrt_exact().is_none());
        assert!(RealQuad::from_ints(5, -1, 0).sqrt_exact().is_none());
        let h = RealQuad::new(5, q_frac(3, 2), q_frac(1, 2));
        assert_eq!(h.times(&h).sqrt_exact().unwrap(), h);
    }

    #[test]
    fn inverse() {
        let a = RealQuad::from_ints(5, 47, 21);
        assert_eq!(a.times(&a.inverse().unwrap()), a.one_like());
    }
}
