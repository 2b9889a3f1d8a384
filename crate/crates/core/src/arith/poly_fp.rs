//! Dense univariate polynomials over `F_r` and their factorization.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::factor::FactorList;
use super::modp;
use crate::error::{Error, Result};

/// Ascending coefficients, no trailing zeros; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    pub r: u64,
    c: Vec<u64>,
}

impl FpPoly {
    pub fn new(r: u64, coeffs: Vec<u64>) -> Self {
        let mut p = FpPoly { r, c: coeffs.into_iter().map(|x| x % r).collect() };
        p.trim();
        p
    }

    pub fn from_i64(r: u64, coeffs: &[i64]) -> Self {
        Self::new(r, coeffs.iter().map(|&x| modp::reduce_i64(x, r)).collect())
    }

    pub fn zero(r: u64) -> Self {
        FpPoly { r, c: Vec::new() }
    }

    pub fn one(r: u64) -> Self {
        Self::new(r, vec![1])
    }

    pub fn x(r: u64) -> Self {
        Self::new(r, vec![0, 1])
    }

    fn trim(&mut self) {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lc(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                modp::add(
                    self.c.get(i).copied().unwrap_or(0),
                    o.c.get(i).copied().unwrap_or(0),
                    self.r,
                )
            })
            .collect();
        Self::new(self.r, v)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let v = (0..n)
            .map(|i| {
                modp::sub(
                    self.c.get(i).copied().unwrap_or(0),
                    o.c.get(i).copied().unwrap_or(0),
                    self.r,
                )
            })
            .collect();
        Self::new(self.r, v)
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.r);
        }
        let mut v = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                v[i + j] = modp::add(v[i + j], modp::mul(a, b, self.r), self.r);
            }
        }
        Self::new(self.r, v)
    }

    pub fn scale(&self, s: u64) -> Self {
        Self::new(self.r, self.c.iter().map(|&a| modp::mul(a, s, self.r)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(modp::inv(self.lc(), self.r).expect("prime modulus"))
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let r = self.r;
        let mut rem = self.c.clone();
        let dd = d.degree();
        if rem.len() < d.c.len() {
            return (Self::zero(r), self.clone());
        }
        let inv = modp::inv(d.lc(), r).expect("prime modulus");
        let mut q = vec![0u64; rem.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = modp::mul(rem[i + dd], inv, r);
            q[i] = coef;
            if coef != 0 {
                for (j, &b) in d.c.iter().enumerate() {
                    rem[i + j] = modp::sub(rem[i + j], modp::mul(coef, b, r), r);
                }
            }
        }
        rem.truncate(dd);
        (Self::new(r, q), Self::new(r, rem))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·o = g` monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let r = self.r;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Self::one(r), Self::zero(r));
        let (mut t0, mut t1) = (Self::zero(r), Self::one(r));
        while !r1.is_zero() {
            let (q, rem) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, rem);
            let ns = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, ns);
            let nt = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, nt);
        }
        let inv = modp::inv(r0.lc(), r).expect("nonzero gcd");
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| modp::mul(a, i as u64 % self.r, self.r))
            .collect();
        Self::new(self.r, v)
    }

    pub fn mulmod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem(m)
    }

    pub fn powmod(&self, mut e: u64, m: &Self) -> Self {
        let mut acc = Self::one(self.r).rem(m);
        let mut base = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            base = base.mulmod(&base, m);
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &a| modp::add(modp::mul(acc, x, self.r), a, self.r))
    }

    /// `f(x)^{1/r}` for a polynomial in `x^r` (coefficients are fixed by
    /// Frobenius on the prime field).
    fn pth_root(&self) -> Self {
        let r = self.r as usize;
        Self::new(self.r, self.c.iter().step_by(r).copied().collect())
    }

    /// Monic squarefree decomposition: pairs `(g, m)` with `f/lc = Π g^m`.
    pub fn squarefree(&self) -> Vec<(FpPoly, u32)> {
        let mut out = Vec::new();
        self.monic().sqf_rec(1, &mut out);
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| cmp_poly(&a.0, &b.0)));
        out
    }

    fn sqf_rec(&self, mult: u32, out: &mut Vec<(FpPoly, u32)>) {
        if self.degree() == 0 {
            return;
        }
        let d = self.derivative();
        if d.is_zero() {
            self.pth_root().sqf_rec(mult * self.r as u32, out);
            return;
        }
        let mut c = self.gcd(&d);
        let mut w = self.div_rem(&c).0;
        let mut i = 1;
        while w.degree() > 0 {
            let y = w.gcd(&c);
            let z = w.div_rem(&y).0;
            if z.degree() > 0 {
                push_factor(out, z.monic(), i * mult);
            }
            w = y;
            c = c.div_rem(&w).0;
            i += 1;
        }
        if c.degree() > 0 {
            c.pth_root().sqf_rec(mult * self.r as u32, out);
        }
    }

    /// Distinct-degree factorization of a monic squarefree polynomial.
    pub fn distinct_degree(&self) -> Vec<(FpPoly, usize)> {
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = Self::x(self.r);
        let mut h = x.rem(&f);
        let mut i = 0;
        while f.degree() >= 2 * (i + 1) {
            i += 1;
            h = h.powmod(self.r, &f);
            let g = f.gcd(&h.sub(&x));
            if g.degree() > 0 {
                f = f.div_rem(&g).0;
                h = h.rem(&f);
                out.push((g, i));
            }
        }
        if f.degree() > 0 {
            let d = f.degree();
            out.push((f, d));
        }
        out
    }

    /// Split a monic squarefree product of irreducibles of degree `d`.
    pub fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<FpPoly> {
        let n = self.degree();
        if n == d {
            return vec![self.monic()];
        }
        let r = self.r;
        loop {
            let a = FpPoly::new(r, (0..n).map(|_| rng.gen_range(0..r)).collect());
            if a.degree() == 0 {
                continue;
            }
            let g = if r == 2 {
                // Trace map a + a² + … + a^{2^{d-1}}.
                let mut t = a.rem(self);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.mulmod(&t, self);
                    acc = acc.add(&t);
                }
                self.gcd(&acc)
            } else {
                let g0 = self.gcd(&a);
                if g0.degree() > 0 && g0.degree() < n {
                    g0
                } else {
                    // a^{(r^d - 1)/2} = (a^{1 + r + … + r^{d-1}})^{(r-1)/2}.
                    let mut s = a.rem(self);
                    let mut acc = s.clone();
                    for _ in 1..d {
                        s = s.powmod(r, self);
                        acc = acc.mulmod(&s, self);
                    }
                    let b = acc.powmod((r - 1) / 2, self);
                    self.gcd(&b.sub(&Self::one(r)))
                }
            };
            if g.degree() > 0 && g.degree() < n {
                let h = self.div_rem(&g).0.monic();
                let mut out = g.equal_degree(d, rng);
                out.extend(h.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles with a leading unit.
    /// Output is sorted by degree, then coefficients.
    pub fn factor(&self) -> FactorList<u64, FpPoly> {
        let unit = self.lc();
        let mut factors = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ self.r);
        for (g, m) in self.squarefree() {
            for (part, d) in g.distinct_degree() {
                for f in part.equal_degree(d, &mut rng) {
                    push_factor(&mut factors, f, m);
                }
            }
        }
        factors.sort_by(|a, b| cmp_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
        FactorList { unit, factors }
    }

    /// Rabin-style check via distinct-degree splitting.
    pub fn is_irreducible(&self) -> bool {
        if self.degree() == 0 {
            return false;
        }
        let f = self.monic();
        if f.gcd(&f.derivative()).degree() > 0 {
            return false;
        }
        let dd = f.distinct_degree();
        dd.len() == 1 && dd[0].1 == f.degree()
    }
}

fn push_factor(out: &mut Vec<(FpPoly, u32)>, f: FpPoly, m: u32) {
    if let Some(e) = out.iter_mut().find(|(g, _)| *g == f) {
        e.1 += m;
    } else {
        out.push((f, m));
    }
}

fn cmp_poly(a: &FpPoly, b: &FpPoly) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| a.c.iter().rev().cmp(b.c.iter().rev()))
}

/// Checked constructor for callers that take `r` from user input.
pub fn factor_mod_prime(coeffs: &[i64], r: u64) -> Result<FactorList<u64, FpPoly>> {
    if !modp::is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    let f = FpPoly::from_i64(r, coeffs);
    if f.is_zero() {
        return Err(Error::invalid("zero polynomial"));
    }
    Ok(f.factor())
}

impl fmt::Debug for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} mod {}", self.c, self.r)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .c
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
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

    fn product(fl: &FactorList<u64, FpPoly>, r: u64) -> FpPoly {
        let mut acc = FpPoly::new(r, vec![fl.unit]);
        for (f, m) in &fl.factors {
            for _ in 0..*m {
                acc = acc.mul(f);
            }
        }
        acc
    }

    #[test]
    fn splits_difference_of_squares_mod_3() {
        let fl = factor_mod_prime(&[-1, 0, 1], 3).unwrap();
        assert_eq!(fl.unit, 1);
        let fs: Vec<_> = fl.factors.iter().map(|(f, _)| f.coeffs().to_vec()).collect();
        assert_eq!(fs, vec![vec![1, 1], vec![2, 1]]);
    }

    #[test]
    fn septic_image_mod_29() {
        let a = FpPoly::from_i64(29, &[1, 6, 1]);
        let b = FpPoly::from_i64(29, &[1, 16, 6, 16, 1]);
        let f = a.mul(&b).scale(20);
        let fl = f.factor();
        assert_eq!(fl.unit, 20);
        assert_eq!(fl.degree_multiset(|p| p.degree()), vec![2, 4]);
        assert!(fl.factors[1].0.is_irreducible());
        assert_eq!(product(&fl, 29), f);
    }

    #[test]
    fn repeated_and_inseparable_factors() {
        let r = 5;
        // (x^5 + 2)(x + 1)^3 has an inseparable component.
        let lin = FpPoly::from_i64(r, &[1, 1]);
        let f = FpPoly::from_i64(r, &[2, 0, 0, 0, 0, 1]).mul(&lin).mul(&lin).mul(&lin);
        let fl = f.factor();
        assert_eq!(product(&fl, r), f);
        for (g, _) in &fl.factors {
            assert!(g.is_irreducible());
        }
    }

    #[test]
    fn characteristic_two() {
        let f = FpPoly::from_i64(2, &[1, 1, 0, 0, 0, 1, 1, 1]);
        let fl = f.factor();
        assert_eq!(product(&fl, 2), f);
        for (g, _) in &fl.factors {
            assert!(g.is_irreducible());
        }
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn factorization_reconstructs(
            r in prop::sample::select(vec![2u64, 3, 11, 29, 101]),
            c in prop::collection::vec(0u64..1000, 2..10),
        ) {
            let f = FpPoly::new(r, c.iter().map(|x| x % r).collect());
            prop_assume!(!f.is_zero() && f.degree() > 0);
            let fl = f.factor();
            let mut prod = FpPoly::new(r, vec![fl.unit]);
            for (g, e) in &fl.factors {
                prop_assert!(g.is_irreducible());
                prop_assert_eq!(g.lc(), 1);
                for _ in 0..*e {
                    prod = prod.mul(g);
                }
            }
            prop_assert_eq!(prod, f);
        }
    }
}
