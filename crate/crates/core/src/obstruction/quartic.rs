//! Norm decision for palindromic quartics over a real field `F`
//! (`Q` or `Q(√d)`): is `g = λ(at² + bt + c)(ct² + bt + a)`?

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::arith::laurent::CanonText;
use crate::arith::{Field, LaurentPoly, OrderedField, RealQuad, ZPoly, Q};

/// Real fields whose polynomial roots we can enumerate exactly.
pub trait QuarticField: OrderedField + CanonText {
    fn from_q(template: &Self, x: Q) -> Self;
    /// All roots in the field of a nonzero polynomial (dense ascending).
    fn roots_in_field(p: &[Self]) -> Vec<Self>;
}

fn int_poly(coeffs: &[Q]) -> ZPoly {
    let lp = LaurentPoly::from_coeffs(&Q::zero(), 0, coeffs.to_vec());
    ZPoly::from_laurent(&lp).0
}

impl QuarticField for Q {
    fn from_q(_: &Self, x: Q) -> Self {
        x
    }

    fn roots_in_field(p: &[Self]) -> Vec<Self> {
        let z = int_poly(p);
        let mut out = Vec::new();
        if z.coeffs().first().is_some_and(Zero::is_zero) {
            out.push(Q::zero());
        }
        for (f, _) in z.factor().factors {
            if f.degree() == 1 && !f.coeffs()[0].is_zero() {
                out.push(Q::new(-f.coeffs()[0].clone(), f.coeffs()[1].clone()));
            }
        }
        out
    }
}

impl QuarticField for RealQuad {
    fn from_q(template: &Self, x: Q) -> Self {
        RealQuad::rational(template.d, x)
    }

    /// Roots of `p` are among the roots of `p · p̄ ∈ Q[s]`: rational roots
    /// come from linear factors, irrational ones from quadratic factors
    /// whose discriminant is `d` times a square.
    fn roots_in_field(p: &[Self]) -> Vec<Self> {
        let d = p[0].d;
        let zero = RealQuad::rational(d, Q::zero());
        let lp = LaurentPoly::from_coeffs(&zero, 0, p.to_vec());
        let bar = lp.map_coeffs(|c| c.conj());
        let prod = lp.mul(&bar);
        let rational: Vec<Q> = prod.dense().iter().map(|c| c.x.clone()).collect();
        let lo = prod.min_deg().unwrap_or(0);
        let z = int_poly(&rational);
        let mut cands = Vec::new();
        if lo > 0 {
            cands.push(zero.clone());
        }
        let dq = Q::from_integer(BigInt::from(d));
        for (f, _) in z.factor().factors {
            let c: Vec<Q> = f.coeffs().iter().map(|x| Q::from_integer(x.clone())).collect();
            match f.degree() {
                1 => cands.push(RealQuad::rational(d, -&c[0] / &c[1])),
                2 => {
                    let disc = &c[1] * &c[1] - Q::from_integer(4.into()) * &c[0] * &c[2];
                    if let Some(w) = (&disc / &dq).sqrt_exact() {
                        let two_a = Q::from_integer(2.into()) * &c[2];
                        let x = -&c[1] / &two_a;
                        let y = w / &two_a;
                        cands.push(RealQuad::new(d, x.clone(), y.clone()));
                        cands.push(RealQuad::new(d, x, -y));
                    }
                }
                _ => {}
            }
        }
        cands.retain(|s| lp.eval(s).vanishes());
        cands.dedup();
        cands
    }
}

/// Number of distinct real roots via a Sturm sequence.
pub fn count_real_roots<F: OrderedField>(p: &LaurentPoly<F>) -> usize {
    let p0 = p.shift_to_zero();
    if p0.max_deg().unwrap_or(0) == 0 {
        return 0;
    }
    let deriv = {
        let mut d = LaurentPoly::zero(p0.field_zero());
        for (e, c) in p0.terms() {
            if e > 0 {
                d.add_term(e - 1, &c.times(&c.from_i64_like(e)));
            }
        }
        d
    };
    let mut seq = vec![p0, deriv];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem_poly(&seq[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        seq.push(r.neg());
    }
    let changes = |signs: Vec<Ordering>| {
        let s: Vec<Ordering> = signs.into_iter().filter(|o| *o != Ordering::Equal).collect();
        s.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let at_pos = seq.iter().map(|q| q.leading().unwrap().signum()).collect();
    let at_neg = seq
        .iter()
        .map(|q| {
            let s = q.leading().unwrap().signum();
            if q.max_deg().unwrap() % 2 == 1 {
                s.reverse()
            } else {
                s
            }
        })
        .collect();
    changes(at_neg) - changes(at_pos)
}

#[derive(Clone, Debug, PartialEq)]
pub enum QuarticDecision<F> {
    Norm { lambda: F, a: F, b: F, c: F },
    NotNorm { a_ratio: F, b_ratio: F },
    Inconclusive { reason: String },
}

impl<F: CanonText> Serialize for QuarticDecision<F> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        match self {
            QuarticDecision::Norm { lambda, a, b, c } => {
                m.serialize_entry("status", "norm")?;
                m.serialize_entry("lambda", &lambda.canon())?;
                m.serialize_entry("a", &a.canon())?;
                m.serialize_entry("b", &b.canon())?;
                m.serialize_entry("c", &c.canon())?;
            }
            QuarticDecision::NotNorm { a_ratio, b_ratio } => {
                m.serialize_entry("status", "not_norm")?;
                m.serialize_entry("a_ratio", &a_ratio.canon())?;
                m.serialize_entry("b_ratio", &b_ratio.canon())?;
            }
            QuarticDecision::Inconclusive { reason } => {
                m.serialize_entry("status", "inconclusive")?;
                m.serialize_entry("reason", reason)?;
            }
        }
        m.end()
    }
}

/// `g = g₀(t⁴ + 1) + g₁(t³ + t) + g₂t²`, given as five dense coefficients.
pub fn quartic_norm_decision<F: QuarticField>(g: &[F]) -> QuarticDecision<F> {
    if g.len() != 5 || g[0] != g[4] || g[1] != g[3] {
        return QuarticDecision::Inconclusive { reason: "not a palindromic quartic".into() };
    }
    if g[0].vanishes() {
        return QuarticDecision::Inconclusive { reason: "leading coefficient vanishes".into() };
    }
    let zero = g[0].zero_like();
    let lp = LaurentPoly::from_coeffs(&zero, 0, g.to_vec());
    if count_real_roots(&lp) != 4 {
        return QuarticDecision::Inconclusive {
            reason: "fewer than four distinct real roots".into(),
        };
    }
    let one = zero.one_like();
    let a_ratio = g[1].divide(&g[0]).unwrap();
    let b_ratio = g[2].divide(&g[0]).unwrap();

    let check = |a: &F, b: &F, c: &F| -> Option<F> {
        let ac = a.times(c);
        let lambda = g[0].divide(&ac)?;
        let f1 = LaurentPoly::from_coeffs(&zero, 0, vec![c.clone(), b.clone(), a.clone()]);
        let f2 = LaurentPoly::from_coeffs(&zero, 0, vec![a.clone(), b.clone(), c.clone()]);
        (f1.mul(&f2).scale(&lambda) == lp).then_some(lambda)
    };

    // a + c = 0 forces g₁ = 0 and -B - 2 = (b/c)².
    if a_ratio.vanishes() {
        let two = one.from_i64_like(2);
        if let Some(u) = b_ratio.negate().minus(&two).sqrt_exact() {
            let a = one.negate();
            if let Some(lambda) = check(&a, &u, &one) {
                return QuarticDecision::Norm { lambda, a, b: u, c: one };
            }
        }
    }

    // s = a/c, u = b/c = A s / (1 + s):
    // P(s) = s⁴ + (2 - B)s³ + (2 + A² - 2B)s² + (2 - B)s + 1.
    let two = one.from_i64_like(2);
    let c1 = two.minus(&b_ratio);
    let c2 = two.plus(&a_ratio.times(&a_ratio)).minus(&two.times(&b_ratio));
    let resolvent = vec![one.clone(), c1.clone(), c2, c1, one.clone()];
    for s in F::roots_in_field(&resolvent) {
        if s.vanishes() || s.plus(&one).vanishes() {
            continue;
        }
        let u = a_ratio.times(&s).divide(&s.plus(&one)).unwrap();
        if let Some(lambda) = check(&s, &u, &one) {
            return QuarticDecision::Norm { lambda, a: s, b: u, c: one };
        }
    }
    QuarticDecision::NotNorm { a_ratio, b_ratio }
}
