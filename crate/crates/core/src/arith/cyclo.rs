use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::Field;
use super::{fmt_rational, Q};
use crate::error::{Error, Result};

/// Element of `Q(ξ_k)` for an odd prime `k`, stored in the power basis
/// `1, ξ, …, ξ^{k-2}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycloNumber {
    k: u64,
    coeffs: Vec<Q>,
}

/// Fold a coefficient vector indexed by exponent mod `k` (length `k`)
/// into the power basis, using `ξ^{k-1} = -(1 + ξ + … + ξ^{k-2})`.
fn fold_full(k: u64, mut full: Vec<Q>) -> Vec<Q> {
    let k = k as usize;
    debug_assert_eq!(full.len(), k);
    let top = full.pop().unwrap();
    if !Zero::is_zero(&top) {
        for c in full.iter_mut() {
            *c -= &top;
        }
    }
    full
}

impl CycloNumber {
    /// Build from power-basis coefficients. Vectors longer than `k-1` are
    /// read as exponents and reduced.
    pub fn new(k: u64, coeffs: Vec<Q>) -> Self {
        assert!(k >= 2, "conductor must be at least 2");
        let mut full = vec![Q::zero(); k as usize];
        for (i, c) in coeffs.into_iter().enumerate() {
            full[i % k as usize] += c;
        }
        CycloNumber { k, coeffs: fold_full(k, full) }
    }

    pub fn from_ints(k: u64, coeffs: &[i64]) -> Self {
        Self::new(k, coeffs.iter().map(|&c| Q::from_integer(BigInt::from(c))).collect())
    }

    pub fn from_rational(k: u64, x: Q) -> Self {
        let mut coeffs = vec![Q::zero(); (k - 1) as usize];
        coeffs[0] = x;
        CycloNumber { k, coeffs }
    }

    pub fn zero(k: u64) -> Self {
        Self::from_rational(k, Q::zero())
    }

    pub fn one(k: u64) -> Self {
        Self::from_rational(k, Q::one())
    }

    /// `ξ^e` for any integer exponent.
    pub fn xi_pow(k: u64, e: i64) -> Self {
        let mut full = vec![Q::zero(); k as usize];
        full[e.rem_euclid(k as i64) as usize] = Q::one();
        CycloNumber { k, coeffs: fold_full(k, full) }
    }

    pub fn conductor(&self) -> u64 {
        self.k
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer power-basis coefficients, if integral.
    pub fn int_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Least common denominator of the coefficients.
    pub fn denominator(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    pub fn scale(&self, s: &Q) -> Self {
        CycloNumber { k: self.k, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// The automorphism `ξ ↦ ξ^j`.
    pub fn galois(&self, j: i64) -> Result<Self> {
        let k = self.k as i64;
        let j = j.rem_euclid(k);
        if j.gcd(&k) != 1 {
            return Err(Error::invalid(format!("{j} is not a unit mod {k}")));
        }
        let mut full = vec![Q::zero(); self.k as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            full[(i as i64 * j % k) as usize] += c;
        }
        Ok(CycloNumber { k: self.k, coeffs: fold_full(self.k, full) })
    }

    /// Complex conjugation, `ξ ↦ ξ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(self.k as i64 - 1).expect("k-1 is a unit")
    }

    /// Product of all Galois conjugates; a rational number.
    pub fn norm(&self) -> Q {
        let mut acc = self.clone();
        for j in 2..self.k as i64 {
            acc = acc.times(&self.galois(j).expect("prime conductor"));
        }
        debug_assert!(acc.is_rational());
        acc.coeffs[0].clone()
    }

    /// The value of a conjugation-invariant element as `(x, y)` with
    /// `x + y·√5`, for conductor 5. For conductor 3 the real subfield is
    /// `Q` and `y = 0`.
    pub fn real_coords(&self) -> Result<(Q, Q)> {
        if *self != self.conj() {
            return Err(Error::invalid("element is not conjugation-invariant"));
        }
        match self.k {
            3 => Ok((self.coeffs[0].clone(), Q::zero())),
            5 => {
                // ξ + ξ⁴ = (-1 + √5)/2 and ξ² + ξ³ = (-1 - √5)/2.
                // Invariant elements have c1 = 0 and c2 = c3.
                let half = Q::new(BigInt::one(), BigInt::from(2));
                let c0 = &self.coeffs[0];
                let c2 = &self.coeffs[2];
                Ok((c0 - c2 * &half, -(c2 * &half)))
            }
            _ => Err(Error::invalid(format!(
                "real subfield of conductor {} is not quadratic",
                self.k
            ))),
        }
    }
}

/// Inverse of [`CycloNumber::real_coords`]: `x + y·√5` with
/// `√5 = -1 - 2ξ² - 2ξ³` for conductor 5, `x` alone for conductor 3.
pub fn from_real_coords(k: u64, x: &Q, y: &Q) -> Result<CycloNumber> {
    match k {
        3 if y.is_zero() => Ok(CycloNumber::from_rational(3, x.clone())),
        5 => {
            let two = Q::from_integer(BigInt::from(2));
            let c2 = -(y * &two);
            Ok(CycloNumber::new(5, vec![x - y, Q::zero(), c2.clone(), c2]))
        }
        _ => Err(Error::invalid(format!("no real quadratic coordinates for conductor {k}"))),
    }
}

/// The real subfield of `Q(ξ₅)` as `Q(√5)`.
pub fn cyclo_to_realquad(a: &CycloNumber) -> Result<super::RealQuad> {
    if a.conductor() != 5 {
        return Err(Error::invalid("only conductor 5 has real subfield Q(sqrt 5) in scope"));
    }
    let (x, y) = a.real_coords()?;
    Ok(super::RealQuad::new(5, x, y))
}

pub fn realquad_to_cyclo(a: &super::RealQuad) -> Result<CycloNumber> {
    if a.d != 5 {
        return Err(Error::invalid("only Q(sqrt 5) embeds in Q(xi_5)"));
    }
    from_real_coords(5, &a.x, &a.y)
}

impl Field for CycloNumber {
    fn zero_like(&self) -> Self {
        Self::zero(self.k)
    }

    fn one_like(&self) -> Self {
        Self::one(self.k)
    }

    fn vanishes(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn plus(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k, "conductor mismatch");
        CycloNumber {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    fn minus(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k, "conductor mismatch");
        CycloNumber {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.k, rhs.k, "conductor mismatch");
        let k = self.k as usize;
        let mut full = vec![Q::zero(); k];
        for (i, a) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !Zero::is_zero(b) {
                    full[(i + j) % k] += a * b;
                }
            }
        }
        CycloNumber { k: self.k, coeffs: fold_full(self.k, full) }
    }

    fn negate(&self) -> Self {
        CycloNumber { k: self.k, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    fn inverse(&self) -> Option<Self> {
        if Field::vanishes(self) {
            return None;
        }
        let mut cofactor = self.one_like();
        for j in 2..self.k as i64 {
            cofactor = cofactor.times(&self.galois(j).ok()?);
        }
        let n = self.times(&cofactor);
        debug_assert!(n.is_rational());
        Some(cofactor.scale(&n.coeffs[0].recip()))
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(fmt_rational).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl serde::Serialize for CycloNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parse the canonical `[c0,c1,…]` form.
pub fn parse_cyclo(k: u64, s: &str) -> Result<CycloNumber> {
    let body = s
        .trim()
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| Error::invalid(format!("bad cyclotomic literal {s:?}")))?;
    let coeffs = body
        .split(',')
        .map(|t| parse_rational(t.trim()))
        .collect::<Result<Vec<_>>>()?;
    if coeffs.len() != (k - 1) as usize {
        return Err(Error::invalid(format!("expected {} coefficients", k - 1)));
    }
    Ok(CycloNumber { k, coeffs })
}

pub fn parse_rational(s: &str) -> Result<Q> {
    let bad = || Error::invalid(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().map_err(|_| bad())?;
            let d: BigInt = d.parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Image of an integral element under `ξ ↦ b` in `F_r`.
pub fn reduce_cyclo_mod(a: &CycloNumber, r: u64, b: u64) -> Result<u64> {
    use super::modp;
    if !modp::is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    if modp::order(b, r) != a.k {
        return Err(Error::invalid(format!("{b} does not have order {} mod {r}", a.k)));
    }
    let ints = a
        .int_coeffs()
        .ok_or_else(|| Error::invalid("non-integral coefficients"))?;
    let rb = BigInt::from(r);
    let mut acc = 0u64;
    let mut pw = 1u64;
    for c in ints {
        let c = c.mod_floor(&rb);
        let c: u64 = c.try_into().expect("reduced below r");
        acc = modp::add(acc, modp::mul(c, pw, r), r);
        pw = modp::mul(pw, b, r);
    }
    Ok(acc)
}

/// Sign helper used by unit normalization: sign of the first nonzero
/// power-basis coefficient.
pub fn leading_sign(a: &CycloNumber) -> i32 {
    for c in &a.coeffs {
        if c.is_positive() {
            return 1;
        }
        if c.is_negative() {
            return -1;
        }
    }
    0
}


#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    fn elem(k: u64) -> impl Strategy<Value = CycloNumber> {
        prop::collection::vec(-20i64..21, (k - 1) as usize).prop_map(move |c| CycloNumber::from_ints(k, &c))
    }

    fn pair() -> impl Strategy<Value = (CycloNumber, CycloNumber, u64)> {
        prop::sample::select(vec![3u64, 5, 7]).prop_flat_map(|k| (elem(k), elem(k), Just(k)))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn field_laws((a, b, k) in pair(), j in 1i64..7) {
            prop_assume!(j % k as i64 != 0);
            prop_assert_eq!(a.times(&b), b.times(&a));
            let sum = a.plus(&b);
            prop_assert_eq!(sum.galois(j).unwrap(), a.galois(j).unwrap().plus(&b.galois(j).unwrap()));
            prop_assert_eq!(a.times(&b).galois(j).unwrap(), a.galois(j).unwrap().times(&b.galois(j).unwrap()));
            prop_assert_eq!(a.times(&b).norm(), a.norm() * b.norm());
            prop_assert_eq!(a.conj().conj(), a.clone());
            if !b.vanishes() {
                prop_assert_eq!(a.times(&b).divide(&b).unwrap(), a.clone());
            }
        }

        #[test]
        fn reduction_is_a_ring_map((a, b, k) in pair()) {
            let r = crate::arith::modp::primes_congruent_one(k, 200)[0];
            for beta in crate::arith::modp::elements_of_order(k, r) {
                let (x, y) = (reduce_cyclo_mod(&a, r, beta).unwrap(), reduce_cyclo_mod(&b, r, beta).unwrap());
                prop_assert_eq!(reduce_cyclo_mod(&a.times(&b), r, beta).unwrap(), crate::arith::modp::mul(x, y, r));
                prop_assert_eq!(reduce_cyclo_mod(&a.plus(&b), r, beta).unwrap(), crate::arith::modp::add(x, y, r));
            }
        }

        #[test]
        fn text_roundtrip((a, _b, k) in pair()) {
            prop_assert_eq!(parse_cyclo(k, &a.to_string()).unwrap(), a);
        }
    }
}
