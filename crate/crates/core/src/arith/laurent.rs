use std::collections::BTreeMap;
use std::fmt;

use super::cyclo::CycloNumber;
use super::field::{Field, Fp};
use super::realquad::RealQuad;
use super::{fmt_rational, Q};
use crate::error::{Error, Result};

/// Canonical text form of a coefficient.
pub trait CanonText {
    fn canon(&self) -> String;
}

impl CanonText for Q {
    fn canon(&self) -> String {
        fmt_rational(self)
    }
}

impl CanonText for CycloNumber {
    fn canon(&self) -> String {
        self.to_string()
    }
}

impl CanonText for Fp {
    fn canon(&self) -> String {
        self.v.to_string()
    }
}

impl CanonText for RealQuad {
    fn canon(&self) -> String {
        format!("[{},{}]", fmt_rational(&self.x), fmt_rational(&self.y))
    }
}

/// Laurent polynomial in `t` over a field `F`. Only nonzero coefficients
/// are stored; `zero` carries the field parameters.
#[derive(Clone, PartialEq)]
pub struct LaurentPoly<F: Field> {
    zero: F,
    terms: BTreeMap<i64, F>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero(template: &F) -> Self {
        LaurentPoly { zero: template.zero_like(), terms: BTreeMap::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: F, e: i64) -> Self {
        let mut p = Self::zero(&c);
        if !c.vanishes() {
            p.terms.insert(e, c);
        }
        p
    }

    /// `t`.
    pub fn t(template: &F) -> Self {
        Self::monomial(template.one_like(), 1)
    }

    /// Dense ascending coefficients starting at `t^low`.
    pub fn from_coeffs(template: &F, low: i64, coeffs: Vec<F>) -> Self {
        let mut p = Self::zero(template);
        for (i, c) in coeffs.into_iter().enumerate() {
            if !c.vanishes() {
                p.terms.insert(low + i as i64, c);
            }
        }
        p
    }

    pub fn from_terms(template: &F, terms: impl IntoIterator<Item = (i64, F)>) -> Self {
        let mut p = Self::zero(template);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn field_zero(&self) -> &F {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> F {
        self.terms.get(&e).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn min_deg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_deg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `max_deg - min_deg`; `None` for zero.
    pub fn span(&self) -> Option<i64> {
        Some(self.max_deg()? - self.min_deg()?)
    }

    pub fn leading(&self) -> Option<&F> {
        self.terms.values().next_back()
    }

    pub fn trailing(&self) -> Option<&F> {
        self.terms.values().next()
    }

    pub fn add_term(&mut self, e: i64, c: &F) {
        if c.vanishes() {
            return;
        }
        let s = match self.terms.get(&e) {
            Some(old) => old.plus(c),
            None => c.clone(),
        };
        if s.vanishes() {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, s);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &c.negate());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negate())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(&self.zero);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a + b, &x.times(y));
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(self.zero.one_like());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, s: &F) -> Self {
        if s.vanishes() {
            return Self::zero(&self.zero);
        }
        self.map_coeffs(|c| c.times(s))
    }

    /// Multiply by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            zero: self.zero.clone(),
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Shift so the lowest exponent is 0.
    pub fn shift_to_zero(&self) -> Self {
        match self.min_deg() {
            Some(m) => self.shift(-m),
            None => self.clone(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&F) -> F) -> Self {
        let mut out = Self::zero(&self.zero);
        for (e, c) in &self.terms {
            out.add_term(*e, &f(c));
        }
        out
    }

    /// Change of coefficient ring.
    pub fn map_into<G: Field>(&self, template: &G, f: impl Fn(&F) -> G) -> LaurentPoly<G> {
        let mut out = LaurentPoly::zero(template);
        for (e, c) in &self.terms {
            out.add_term(*e, &f(c));
        }
        out
    }

    /// `p(t^{-1})`.
    pub fn reciprocal(&self) -> Self {
        LaurentPoly {
            zero: self.zero.clone(),
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = self.zero.clone();
        let xinv = x.inverse();
        for (e, c) in &self.terms {
            let base = if *e >= 0 { x.clone() } else { xinv.clone().expect("evaluation at zero") };
            let mut pw = self.zero.one_like();
            for _ in 0..e.unsigned_abs() {
                pw = pw.times(&base);
            }
            acc = acc.plus(&c.times(&pw));
        }
        acc
    }

    /// Euclidean division of polynomials, both shifted so their lowest
    /// exponent is 0. Returns `(quotient, remainder)`.
    pub fn div_rem(&self, rhs: &Self) -> Result<(Self, Self)> {
        let den = rhs.shift_to_zero();
        let lead_deg = den.max_deg().ok_or(Error::NotDivisible)?;
        let lead_inv = den.leading().unwrap().inverse().ok_or(Error::NotDivisible)?;
        let mut rem = self.shift_to_zero();
        let mut quot = Self::zero(&self.zero);
        while let Some(d) = rem.max_deg() {
            if d < lead_deg {
                break;
            }
            let c = rem.leading().unwrap().times(&lead_inv);
            let term = Self::monomial(c, d - lead_deg);
            rem = rem.sub(&term.mul(&den));
            quot = quot.add(&term);
        }
        Ok((quot, rem))
    }

    /// Ordinary polynomial division, without discarding powers of `t`.
    pub fn div_rem_poly(&self, rhs: &Self) -> Result<(Self, Self)> {
        let lead_deg = rhs.max_deg().ok_or(Error::NotDivisible)?;
        let lead_inv = rhs.leading().unwrap().inverse().ok_or(Error::NotDivisible)?;
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.zero);
        while let Some(d) = rem.max_deg() {
            if d < lead_deg {
                break;
            }
            let c = rem.leading().unwrap().times(&lead_inv);
            let term = Self::monomial(c, d - lead_deg);
            rem = rem.sub(&term.mul(rhs));
            quot = quot.add(&term);
        }
        Ok((quot, rem))
    }

    /// Exact division up to a power of `t`: `self = q · rhs · t^j`.
    pub fn div_exact(&self, rhs: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(rhs)?;
        if !r.is_zero() {
            return Err(Error::NotDivisible);
        }
        let shift = self.min_deg().unwrap_or(0) - rhs.min_deg().unwrap_or(0);
        Ok(q.shift(shift))
    }

    /// Equality up to multiplication by `λ·t^j`, `λ` a nonzero field element.
    pub fn eq_up_to_units(&self, rhs: &Self) -> bool {
        if self.is_zero() || rhs.is_zero() {
            return self.is_zero() && rhs.is_zero();
        }
        let a = self.shift_to_zero();
        let b = rhs.shift_to_zero();
        if a.max_deg() != b.max_deg() {
            return false;
        }
        a.scale(b.leading().unwrap()) == b.scale(a.leading().unwrap())
    }

    /// Dense coefficients from `min_deg` to `max_deg`.
    pub fn dense(&self) -> Vec<F> {
        let (Some(lo), Some(hi)) = (self.min_deg(), self.max_deg()) else {
            return Vec::new();
        };
        (lo..=hi).map(|e| self.coeff(e)).collect()
    }
}

impl<F: Field + CanonText> LaurentPoly<F> {
    /// `deg:coeff;deg:coeff;…` ascending; `0` for the zero polynomial.
    pub fn canonical(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(e, c)| format!("{e}:{}", c.canon()))
            .collect::<Vec<_>>()
            .join(";")
    }
}

impl<F: Field + CanonText> serde::Serialize for LaurentPoly<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.canonical())
    }
}

impl<F: Field + CanonText> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl<F: Field + CanonText> fmt::Debug for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical())
    }
}

impl LaurentPoly<CycloNumber> {
    /// `conj(p)(t^{-1})`.
    pub fn conj_reciprocal(&self) -> Self {
        self.reciprocal().map_coeffs(|c| c.conj())
    }

    pub fn galois(&self, j: i64) -> Result<Self> {
        let mut out = Self::zero(&self.zero);
        for (e, c) in &self.terms {
            out.add_term(*e, &c.galois(j)?);
        }
        Ok(out)
    }
}

/// Parse `deg:coeff;…` with a per-coefficient parser.
pub fn parse_laurent<F: Field>(
    template: &F,
    s: &str,
    coeff: impl Fn(&str) -> Result<F>,
) -> Result<LaurentPoly<F>> {
    let s = s.trim();
    let mut p = LaurentPoly::zero(template);
    if s == "0" {
        return Ok(p);
    }
    for item in s.split(';') {
        let (e, c) = item
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("bad term {item:?}")))?;
        let e: i64 = e.trim().parse().map_err(|_| Error::invalid(format!("bad exponent {e:?}")))?;
        p.add_term(e, &coeff(c.trim())?);
    }
    Ok(p)
}

/// Integer polynomial helper: dense ascending integer coefficients.
pub fn qpoly(coeffs: &[i64]) -> LaurentPoly<Q> {
    let z = Q::from_integer(0.into());
    LaurentPoly::from_coeffs(&z, 0, coeffs.iter().map(|&c| Q::from_integer(c.into())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cyclo::parse_rational;
    use crate::arith::q_int;

    #[test]
    fn multiplication_and_division() {
        let a = qpoly(&[-1, 1]);
        let b = qpoly(&[1, 1]);
        let p = a.mul(&b);
        assert_eq!(p, qpoly(&[-1, 0, 1]));
        assert_eq!(p.div_exact(&a).unwrap(), b);
        assert!(p.div_exact(&qpoly(&[2, 1])).is_err());
    }

    #[test]
    fn units() {
        let a = qpoly(&[1, -1, 1]);
        let b = a.shift(-5).scale(&q_int(-7));
        assert!(a.eq_up_to_units(&b));
        assert!(!a.eq_up_to_units(&qpoly(&[1, 1, 1])));
    }

    #[test]
    fn canonical_text() {
        let p = qpoly(&[3, 0, -1]).shift(-1);
        assert_eq!(p.canonical(), "-1:3;1:-1");
        let z = q_int(0);
        let back = parse_laurent(&z, &p.canonical(), parse_rational).unwrap();
        assert_eq!(back, p);
        let c = LaurentPoly::constant(CycloNumber::from_ints(3, &[1, 2]));
        assert_eq!(c.canonical(), "0:[1,2]");
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::arith::cyclo::parse_cyclo;

    fn poly(k: u64) -> impl Strategy<Value = LaurentPoly<CycloNumber>> {
        prop::collection::btree_map(-3i64..4, prop::collection::vec(-5i64..6, (k - 1) as usize), 1..4)
            .prop_map(move |m| {
                LaurentPoly::from_terms(&CycloNumber::zero(k), m.into_iter().map(|(e, c)| (e, CycloNumber::from_ints(k, &c))))
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn ring_laws(a in poly(5), b in poly(5), j in 1i64..5) {
            prop_assume!(!b.is_zero());
            let ab = a.mul(&b);
            prop_assert!(ab.div_exact(&b).unwrap().eq_up_to_units(&a) || a.is_zero());
            let (q, r) = ab.add(&a).div_rem(&b).unwrap();
            prop_assert!(r.is_zero() || r.max_deg().unwrap() < b.shift_to_zero().max_deg().unwrap());
            prop_assert!(q.mul(&b.shift_to_zero()).add(&r).eq_up_to_units(&ab.add(&a)) || ab.add(&a).is_zero());
            prop_assert_eq!(ab.galois(j).unwrap(), a.galois(j).unwrap().mul(&b.galois(j).unwrap()));
            prop_assert_eq!(ab.conj_reciprocal(), a.conj_reciprocal().mul(&b.conj_reciprocal()));
            let text = ab.canonical();
            prop_assert_eq!(parse_laurent(&CycloNumber::zero(5), &text, |s| parse_cyclo(5, s)).unwrap(), ab);
        }
    }
}
