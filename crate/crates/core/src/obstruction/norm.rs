use num_bigint::BigInt;
use serde::Serialize;

use super::modr::{Attempt, ModRWitness};
use crate::arith::{CycloNumber, Field, LaurentPoly, ZPoly, Q};

/// `poly = lambda · t^shift · f(t) · conj(f)(t^{-1})`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormCertificate {
    pub lambda: CycloNumber,
    pub shift: i64,
    pub f: LaurentPoly<CycloNumber>,
}

impl NormCertificate {
    pub fn expand(&self) -> LaurentPoly<CycloNumber> {
        self.f
            .mul(&self.f.conj_reciprocal())
            .scale(&self.lambda)
            .shift(self.shift)
    }

    /// Exact re-multiplication.
    pub fn verify(&self, poly: &LaurentPoly<CycloNumber>) -> bool {
        self.expand() == *poly
    }

    /// Fit `lambda` and `shift` so that the certificate reproduces
    /// `poly` exactly, if `poly ≐ f·conj(f)(t^{-1})`.
    pub fn fit(poly: &LaurentPoly<CycloNumber>, f: LaurentPoly<CycloNumber>) -> Option<Self> {
        let n = f.mul(&f.conj_reciprocal());
        let lambda = poly.leading()?.divide(n.leading()?)?;
        let shift = poly.min_deg()? - n.min_deg()?;
        let cert = NormCertificate { lambda, shift, f };
        cert.verify(poly).then_some(cert)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    ModR(ModRWitness),
    /// The Galois conjugate `ξ ↦ ξ^j` is a palindromic quartic with four
    /// real roots whose norm system has no solution over the real subfield.
    Quartic { conjugate: u64, a_ratio: String, b_ratio: String },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NormVerdict {
    Obstructed { witness: Witness },
    Norm { certificate: NormCertificate },
    Inconclusive { attempts: Vec<Attempt>, notes: Vec<String> },
}

impl NormVerdict {
    pub fn is_obstructed(&self) -> bool {
        matches!(self, NormVerdict::Obstructed { .. })
    }

    pub fn is_norm(&self) -> bool {
        matches!(self, NormVerdict::Norm { .. })
    }
}

/// Split an integer polynomial as `±t^j · f(t) · f(t^{-1}) · t^{deg f}` by
/// pairing each irreducible factor with its reciprocal. Returns `f` and the
/// leftover unit (sign and content), or `None` if some factor is unpaired.
pub fn reciprocal_split(z: &ZPoly) -> Option<(ZPoly, BigInt)> {
    let fl = z.factor();
    let mut remaining: Vec<(ZPoly, u32)> = fl.factors.clone();
    let mut half = ZPoly::one();
    while let Some((g, m)) = remaining.pop() {
        let rev = g.reverse().primitive();
        if rev == g {
            if m % 2 != 0 {
                return None;
            }
            half = half.mul(&g.pow(m / 2));
        } else {
            let idx = remaining.iter().position(|(h, _)| *h == rev)?;
            let (_, m2) = remaining.remove(idx);
            if m2 != m {
                return None;
            }
            half = half.mul(&g.pow(m));
        }
    }
    Some((half, fl.unit))
}

/// For a polynomial with rational coefficients: a certificate with
/// rational `f`, found by factoring over `Z`.
pub fn rational_norm_certificate(p: &LaurentPoly<CycloNumber>) -> Option<NormCertificate> {
    let k = p.field_zero().conductor();
    if !p.terms().all(|(_, c)| c.is_rational()) {
        return None;
    }
    let q: LaurentPoly<Q> = p.map_into(&Q::from_integer(0.into()), |c| c.coeffs()[0].clone());
    let (z, _, _) = ZPoly::from_laurent(&q);
    let (half, _) = reciprocal_split(&z)?;
    let zero = CycloNumber::zero(k);
    let f = LaurentPoly::from_coeffs(
        &zero,
        0,
        half.coeffs()
            .iter()
            .map(|c| CycloNumber::from_rational(k, Q::from_integer(c.clone())))
            .collect(),
    );
    NormCertificate::fit(p, f)
}


#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn rational_norms_have_certificates(
            c in prop::collection::vec(-6i64..7, 2..5),
            k in prop::sample::select(vec![3u64, 5, 7]),
            lambda in 1i64..5,
        ) {
            let h = ZPoly::from_i64(&c);
            prop_assume!(h.degree() > 0 && c[0] != 0);
            let f = LaurentPoly::from_coeffs(
                &CycloNumber::zero(k),
                0,
                c.iter().map(|&x| CycloNumber::from_ints(k, &{ let mut v = vec![0; (k - 1) as usize]; v[0] = x; v })).collect(),
            );
            let p = f.mul(&f.conj_reciprocal()).scale(&CycloNumber::from_ints(k, &{ let mut v = vec![0; (k - 1) as usize]; v[0] = lambda; v }));
            let cert = rational_norm_certificate(&p);
            prop_assert!(cert.as_ref().is_some_and(|c| c.verify(&p)));
            prop_assert!(NormCertificate::fit(&p, f).is_some());
        }
    }
}
