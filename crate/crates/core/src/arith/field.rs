use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::modp;
use super::Q;

/// Minimal field interface shared by every coefficient ring of
/// [`LaurentPoly`](super::LaurentPoly).
///
/// Some fields carry a parameter (the conductor of a cyclotomic field, the
/// modulus of a prime field), so constants are produced from an existing
/// element rather than from nothing.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    /// `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn divide(&self, rhs: &Self) -> Option<Self> {
        rhs.inverse().map(|inv| self.times(&inv))
    }

    fn from_i64_like(&self, n: i64) -> Self {
        let one = self.one_like();
        let mut acc = self.zero_like();
        let mut base = one;
        let mut m = n.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.plus(&base);
            }
            base = base.plus(&base);
            m >>= 1;
        }
        if n < 0 {
            acc.negate()
        } else {
            acc
        }
    }
}

/// A subfield of the reals with exact sign determination.
pub trait OrderedField: Field {
    fn signum(&self) -> Ordering;
    /// Galois conjugate over Q (identity on Q itself).
    fn galois_conj(&self) -> Self;
    /// A square root inside the field, if one exists.
    fn sqrt_exact(&self) -> Option<Self>;
}

impl Field for Q {
    fn zero_like(&self) -> Self {
        Q::zero()
    }
    fn one_like(&self) -> Self {
        Q::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl OrderedField for Q {
    fn signum(&self) -> Ordering {
        if Zero::is_zero(self) {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    fn galois_conj(&self) -> Self {
        self.clone()
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(Q::new(n, d))
        } else {
            None
        }
    }
}

/// Element of the prime field `F_r`, `r < 2^62`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    pub v: u64,
    pub r: u64,
}

impl Fp {
    pub fn new(v: i64, r: u64) -> Self {
        Fp { v: v.rem_euclid(r as i64) as u64, r }
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Field for Fp {
    fn zero_like(&self) -> Self {
        Fp { v: 0, r: self.r }
    }
    fn one_like(&self) -> Self {
        Fp { v: 1 % self.r, r: self.r }
    }
    fn vanishes(&self) -> bool {
        self.v == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        Fp { v: modp::add(self.v, rhs.v, self.r), r: self.r }
    }
    fn minus(&self, rhs: &Self) -> Self {
        Fp { v: modp::sub(self.v, rhs.v, self.r), r: self.r }
    }
    fn times(&self, rhs: &Self) -> Self {
        Fp { v: modp::mul(self.v, rhs.v, self.r), r: self.r }
    }
    fn negate(&self) -> Self {
        Fp { v: modp::sub(0, self.v, self.r), r: self.r }
    }
    fn inverse(&self) -> Option<Self> {
        modp::inv(self.v, self.r).map(|v| Fp { v, r: self.r })
    }
}
