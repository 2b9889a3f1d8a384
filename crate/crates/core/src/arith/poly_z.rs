//! Dense polynomials over `Z` and Zassenhaus factorization.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::factor::FactorList;
use super::laurent::LaurentPoly;
use super::modp;
use super::poly_fp::FpPoly;
use super::Q;

/// Ascending integer coefficients without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ZPoly {
    c: Vec<BigInt>,
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl ZPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        trim(&mut c);
        ZPoly { c }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        ZPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.c.last().cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.c.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        ZPoly { c: self.c.iter().map(|x| x / &g).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let z = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        ZPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        Self::new(self.c.iter().map(|x| x * s).collect())
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * BigInt::from(i))
                .collect(),
        )
    }

    /// `t^{deg} f(1/t)`.
    pub fn reverse(&self) -> Self {
        let mut v = self.c.clone();
        v.reverse();
        Self::new(v)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.c.iter().rev().fold(BigInt::zero(), |acc, a| acc * x + a)
    }

    /// Exact quotient over `Z`, or `None` if `d` does not divide.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.c.len() < d.c.len() {
            return None;
        }
        let dd = d.degree();
        let lc = d.lc();
        let mut rem = self.c.clone();
        let mut q = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let (quo, r) = rem[i + dd].div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            if !quo.is_zero() {
                for (j, b) in d.c.iter().enumerate() {
                    rem[i + j] -= &quo * b;
                }
            }
            q[i] = quo;
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// Pseudo-remainder `lc(d)^{deg a - deg d + 1} a mod d`.
    fn prem(&self, d: &Self) -> Self {
        let mut rem = self.c.clone();
        let dd = d.degree();
        let lc = d.lc();
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.last().unwrap().clone();
            let shift = rem.len() - 1 - dd;
            for x in rem.iter_mut() {
                *x *= &lc;
            }
            for (j, b) in d.c.iter().enumerate() {
                rem[shift + j] -= &top * b;
            }
            trim(&mut rem);
        }
        Self::new(rem)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), o.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b).primitive();
            a = b;
            b = r;
        }
        a.primitive()
    }

    pub fn mod_p(&self, p: u64) -> FpPoly {
        let pb = BigInt::from(p);
        FpPoly::new(
            p,
            self.c
                .iter()
                .map(|x| x.mod_floor(&pb).to_u64().unwrap())
                .collect(),
        )
    }

    pub fn to_laurent(&self) -> LaurentPoly<Q> {
        LaurentPoly::from_coeffs(
            &Q::zero(),
            0,
            self.c.iter().map(|x| Q::from_integer(x.clone())).collect(),
        )
    }

    /// Clear denominators and the lowest power of `t`: returns the
    /// integer polynomial, the exponent shift, and the scale factor, so
    /// that `p = t^shift · z / scale`.
    pub fn from_laurent(p: &LaurentPoly<Q>) -> (ZPoly, i64, BigInt) {
        let lo = p.min_deg().unwrap_or(0);
        let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let dense = p.shift(-lo).dense();
        let c = dense
            .iter()
            .map(|x| (x * Q::from_integer(den.clone())).to_integer())
            .collect();
        (ZPoly::new(c), lo, den)
    }

    /// Squarefree decomposition of the primitive part (Yun).
    pub fn squarefree(&self) -> Vec<(ZPoly, u32)> {
        let f = self.primitive();
        let mut out = Vec::new();
        if f.degree() == 0 {
            return out;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).expect("gcd divides derivative");
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree() > 0 {
            let a = b.gcd(&d);
            b = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            d = c.sub(&b.derivative());
            if a.degree() > 0 {
                out.push((a, i));
            }
            i += 1;
        }
        out
    }

    /// Irreducible factorization over `Q` with primitive factors of
    /// positive leading coefficient; the unit absorbs sign and content.
    pub fn factor(&self) -> FactorList<BigInt, ZPoly> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut unit = self.content();
        if self.lc().is_negative() {
            unit = -unit;
        }
        let mut factors = Vec::new();
        for (g, m) in self.squarefree() {
            for h in zassenhaus(&g) {
                factors.push((h, m));
            }
        }
        factors.sort_by(|a, b| cmp_z(&a.0, &b.0).then(a.1.cmp(&b.1)));
        FactorList { unit, factors }
    }
}

fn cmp_z(a: &ZPoly, b: &ZPoly) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.c.iter().rev().cmp(b.c.iter().rev()))
}

/// Factor a primitive squarefree polynomial with positive leading coefficient.
fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.degree();
    if n <= 1 {
        return vec![f.primitive()];
    }
    let lc = f.lc();
    let df = f.derivative();

    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut tried = 0;
    let mut p = 2u64;
    while tried < 5 {
        p += 1;
        if !modp::is_prime(p) || (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = f.mod_p(p);
        if fp.gcd(&df.mod_p(p)).degree() > 0 {
            continue;
        }
        tried += 1;
        let facs: Vec<FpPoly> = fp.factor().factors.into_iter().map(|(g, _)| g).collect();
        if facs.len() == 1 {
            return vec![f.primitive()];
        }
        if best.as_ref().map_or(true, |(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
    }
    let (p, local) = best.expect("some prime is good");

    // Mignotte: coefficients of lc·h for any factor h are below
    // |lc| · 2^n · ||f||₂. Lift until p^l exceeds twice that.
    let norm2: BigInt = f.c.iter().map(|x| x * x).sum();
    let bound = lc.abs() * (BigInt::one() << n) * (norm2.sqrt() + 1u32);
    let target = bound * 2u32 + 1u32;
    let mut modulus = BigInt::from(p);
    let mut steps = 0;
    while modulus < target {
        modulus = &modulus * &modulus;
        steps += 1;
    }
    let lifted = hensel_lift(f, p, steps, &local);
    recombine(f, lifted, &modulus)
}

fn vmod(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = v.iter().map(|x| x.mod_floor(m)).collect();
    trim(&mut out);
    out
}

fn vadd(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    vmod(
        &(0..n)
            .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
            .collect::<Vec<_>>(),
        m,
    )
}

fn vsub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let nb: Vec<BigInt> = b.iter().map(|x| -x).collect();
    vadd(a, &nb, m)
}

fn vmul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    vmod(&v, m)
}

/// Division by a monic polynomial modulo `m`.
fn vdivrem_monic(a: &[BigInt], h: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let dh = h.len() - 1;
    if a.len() <= dh {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dh];
    for i in (0..q.len()).rev() {
        let coef = rem[i + dh].mod_floor(m);
        if !coef.is_zero() {
            for (j, y) in h.iter().enumerate() {
                rem[i + j] = (&rem[i + j] - &coef * y).mod_floor(m);
            }
        }
        q[i] = coef;
    }
    rem.truncate(dh);
    (vmod(&q, m), vmod(&rem, m))
}

fn to_big(p: &FpPoly) -> Vec<BigInt> {
    p.coeffs().iter().map(|&x| BigInt::from(x)).collect()
}

/// Quadratic Hensel lifting of `f ≡ lc · Π hᵢ (mod p)` to modulus
/// `p^{2^steps}`; returns monic lifts.
fn hensel_lift(f: &ZPoly, p: u64, steps: u32, local: &[FpPoly]) -> Vec<Vec<BigInt>> {
    let lc = f.lc();
    let mut cur: Vec<BigInt> = f.c.clone();
    let mut out = Vec::with_capacity(local.len());
    let mut final_mod = BigInt::from(p);
    for _ in 0..steps {
        final_mod = &final_mod * &final_mod;
    }
    for i in 0..local.len() - 1 {
        let h0 = &local[i];
        let mut g0 = FpPoly::new(p, vec![lc.mod_floor(&BigInt::from(p)).to_u64().unwrap()]);
        for h in &local[i + 1..] {
            g0 = g0.mul(h);
        }
        let (one, s0, t0) = g0.ext_gcd(h0);
        debug_assert_eq!(one.degree(), 0);
        let (mut g, mut h, mut s, mut t) = (to_big(&g0), to_big(h0), to_big(&s0), to_big(&t0));
        let mut m = BigInt::from(p);
        for _ in 0..steps {
            let m2 = &m * &m;
            let e = vsub(&vmod(&cur, &m2), &vmul(&g, &h, &m2), &m2);
            let (q, r) = vdivrem_monic(&vmul(&s, &e, &m2), &h, &m2);
            let g1 = vadd(&vadd(&g, &vmul(&t, &e, &m2), &m2), &vmul(&q, &g, &m2), &m2);
            let h1 = vadd(&h, &r, &m2);
            let b = vsub(
                &vadd(&vmul(&s, &g1, &m2), &vmul(&t, &h1, &m2), &m2),
                &[BigInt::one()],
                &m2,
            );
            let (c, d) = vdivrem_monic(&vmul(&s, &b, &m2), &h1, &m2);
            let s1 = vsub(&s, &d, &m2);
            let t1 = vsub(&vsub(&t, &vmul(&t, &b, &m2), &m2), &vmul(&c, &g1, &m2), &m2);
            g = g1;
            h = h1;
            s = s1;
            t = t1;
            m = m2;
        }
        out.push(h);
        cur = g;
    }
    // The remaining cofactor is lc · h_last.
    let inv = lc.modinv(&final_mod).expect("lc is a unit mod p");
    let last: Vec<BigInt> = cur.iter().map(|x| (x * &inv).mod_floor(&final_mod)).collect();
    out.push(vmod(&last, &final_mod));
    out
}

fn symmetric(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m >> 1;
    v.iter()
        .map(|x| {
            let x = x.mod_floor(m);
            if x > half {
                x - m
            } else {
                x
            }
        })
        .collect()
}

fn recombine(f: &ZPoly, mut local: Vec<Vec<BigInt>>, m: &BigInt) -> Vec<ZPoly> {
    let mut g = f.clone();
    let mut found = Vec::new();
    let mut s = 1;
    while 2 * s <= local.len() {
        let mut hit = None;
        for subset in Combinations::new(local.len(), s) {
            let lc = g.lc();
            let mut cand = vec![lc.mod_floor(m)];
            for &i in &subset {
                cand = vmul(&cand, &local[i], m);
            }
            let cand = ZPoly::new(symmetric(&cand, m)).primitive();
            // Cheap filter on constant terms before full division.
            if let (Some(c0), Some(g0)) = (cand.c.first(), g.c.first()) {
                if !c0.is_zero() && !(g0 % c0).is_zero() {
                    continue;
                }
            }
            if let Some(q) = g.div_exact(&cand) {
                found.push(cand);
                g = q.primitive();
                hit = Some(subset);
                break;
            }
        }
        match hit {
            Some(subset) => {
                for &i in subset.iter().rev() {
                    local.remove(i);
                }
            }
            None => s += 1,
        }
    }
    if g.degree() > 0 {
        found.push(g.primitive());
    }
    found
}

/// Index combinations of size `k` from `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, a)| a.sign() != Sign::NoSign)
            .map(|(i, a)| format!("{i}:{a}"))
            .collect();
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(";"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn expand(fl: &FactorList<BigInt, ZPoly>) -> ZPoly {
        fl.factors
            .iter()
            .fold(ZPoly::new(vec![fl.unit.clone()]), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }

    #[test]
    fn alexander_sextic_refactors() {
        let f = ZPoly::from_i64(&[3, -21, 53, -71, 53, -21, 3]);
        let fl = f.factor();
        assert_eq!(fl.unit, BigInt::from(1));
        let fs: Vec<_> = fl.factors.iter().map(|(g, m)| (g.clone(), *m)).collect();
        assert_eq!(
            fs,
            vec![
                (ZPoly::from_i64(&[-3, 6, -5, 1]), 1),
                (ZPoly::from_i64(&[-1, 5, -6, 3]), 1)
            ]
        );
        assert_eq!(expand(&fl), f);
    }

    #[test]
    fn perturbed_sextic_is_irreducible() {
        // Same outer coefficients, middle ones off by two: no cubic split.
        let f = ZPoly::from_i64(&[3, -21, 55, -73, 55, -21, 3]);
        assert_eq!(f.factor().factors, vec![(f, 1)]);
    }

    #[test]
    fn difference_of_squares() {
        let fl = ZPoly::from_i64(&[-1, 0, 1]).factor();
        assert_eq!(fl.factors.len(), 2);
        assert_eq!(fl.factors[0].0, ZPoly::from_i64(&[-1, 1]));
        assert_eq!(fl.factors[1].0, ZPoly::from_i64(&[1, 1]));
    }

    #[test]
    fn swinnerton_dyer_like_stays_whole() {
        // x^4 - 10x^2 + 1 is irreducible over Q but splits modulo every prime.
        let f = ZPoly::from_i64(&[1, 0, -10, 0, 1]);
        let fl = f.factor();
        assert_eq!(fl.factors, vec![(f, 1)]);
    }

    #[test]
    fn multiplicities_and_content() {
        let a = ZPoly::from_i64(&[1, 1]);
        let b = ZPoly::from_i64(&[1, -1, 1]);
        let f = a.pow(3).mul(&b.pow(2)).scale(&BigInt::from(-6));
        let fl = f.factor();
        assert_eq!(fl.unit, BigInt::from(-6));
        assert_eq!(fl.factors, vec![(a, 3), (b, 2)]);
    }

    #[test]
    fn combinations_enumerate() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    fn small_poly() -> impl Strategy<Value = ZPoly> {
        prop::collection::vec(-9i64..10, 2..5).prop_map(|c| ZPoly::from_i64(&c))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn factorization_reconstructs(a in small_poly(), b in small_poly(), c in small_poly()) {
            let f = a.mul(&b).mul(&c);
            prop_assume!(!f.is_zero() && f.degree() > 0);
            let fl = f.factor();
            let mut prod = ZPoly::new(vec![fl.unit.clone()]);
            for (g, e) in &fl.factors {
                prop_assert!(g.degree() > 0);
                prop_assert_eq!(g.content(), BigInt::from(1));
                prod = prod.mul(&g.pow(*e));
            }
            prop_assert_eq!(prod, f);
            // At least as many factors as nonconstant primitive inputs.
            let count: u32 = fl.factors.iter().map(|(_, e)| e).sum();
            let expected = [&a, &b, &c].iter().filter(|p| p.degree() > 0).count() as u32;
            prop_assert!(count >= expected);
        }
    }
}
