use serde::Serialize;

use super::foxmilnor::{fox_milnor_test, FoxMilnor};
use super::modr::mod_r_scan;
use super::norm::{rational_norm_certificate, NormCertificate, NormVerdict, Witness};
use super::quartic::{quartic_norm_decision, QuarticDecision, QuarticField};
use crate::arith::cyclo::{cyclo_to_realquad, from_real_coords};
use crate::arith::laurent::CanonText;
use crate::arith::{modp, CycloNumber, LaurentPoly, RealQuad, Q};
use crate::error::{Error, Result};
use crate::knot::{
    alexander_polynomial, even_continued_fraction, fourplat_from_terms, knot_presentation,
    wirtinger_presentation, Fraction,
};
use crate::metabelian::{normalize_units, solve_character, twisted_alexander_reduced};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuarticAttempt {
    /// Galois conjugate `ξ ↦ ξ^j` examined.
    pub conjugate: u64,
    pub field: String,
    pub decision: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KReport {
    pub k: u64,
    pub character: Vec<u64>,
    pub delta_tilde: LaurentPoly<CycloNumber>,
    /// Present only when the mirror diagram gives a different polynomial.
    pub mirror_delta_tilde: Option<LaurentPoly<CycloNumber>>,
    pub mod_r: NormVerdict,
    pub mirror_mod_r: Option<NormVerdict>,
    pub quartic: Vec<QuarticAttempt>,
    pub rational_certificate: Option<NormCertificate>,
    pub verdict: NormVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Verdict {
    NotAlgebraicallySlice { summary: String },
    NotTopologicallySlice { k: u64, method: String, summary: String },
    Inconclusive { summary: String },
}

impl Verdict {
    pub fn summary(&self) -> &str {
        match self {
            Verdict::NotAlgebraicallySlice { summary }
            | Verdict::NotTopologicallySlice { summary, .. }
            | Verdict::Inconclusive { summary } => summary,
        }
    }

    pub fn is_obstructed(&self) -> bool {
        !matches!(self, Verdict::Inconclusive { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SlicenessReport {
    pub p: u64,
    pub q: u64,
    pub alexander: LaurentPoly<Q>,
    pub fox_milnor: FoxMilnor,
    pub per_k: Vec<KReport>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
}

/// Odd prime divisors of `n`, ascending.
pub fn odd_prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out.retain(|&x| x != 2);
    out
}

fn quartic_attempt<F>(
    j: u64,
    field: &str,
    coeffs: Vec<F>,
    lift: impl Fn(&F) -> Result<CycloNumber>,
) -> Result<(QuarticAttempt, Option<(bool, Option<Vec<CycloNumber>>)>)>
where
    F: QuarticField + CanonText,
{
    let decision = quartic_norm_decision(&coeffs);
    let outcome = match &decision {
        QuarticDecision::Norm { lambda: _, a, b, c } => {
            Some((false, Some(vec![lift(c)?, lift(b)?, lift(a)?])))
        }
        QuarticDecision::NotNorm { .. } => Some((true, None)),
        QuarticDecision::Inconclusive { .. } => None,
    };
    let value = serde_json::to_value(&decision).expect("serializable");
    Ok((QuarticAttempt { conjugate: j, field: field.to_string(), decision: value }, outcome))
}

/// Real-subfield quartic decisions over the Galois orbit of `delta`.
fn quartic_route(
    delta: &LaurentPoly<CycloNumber>,
    k: u64,
) -> Result<(Vec<QuarticAttempt>, Option<Witness>, Option<NormCertificate>)> {
    let mut attempts = Vec::new();
    if delta.span() != Some(4) || !(k == 3 || k == 5) {
        return Ok((attempts, None, None));
    }
    for j in 1..=(k - 1) / 2 {
        let (g, _) = normalize_units(&delta.galois(j as i64)?);
        if !g.terms().all(|(_, c)| *c == c.conj()) {
            continue;
        }
        let (attempt, outcome) = if k == 5 {
            let coeffs: Vec<RealQuad> =
                g.dense().iter().map(cyclo_to_realquad).collect::<Result<_>>()?;
            quartic_attempt(j, "Q(sqrt 5)", coeffs, |x: &RealQuad| {
                from_real_coords(5, &x.x, &x.y)
            })?
        } else {
            let coeffs: Vec<Q> = g.dense().iter().map(|c| c.coeffs()[0].clone()).collect();
            quartic_attempt(j, "Q", coeffs, |x: &Q| Ok(CycloNumber::from_rational(3, x.clone())))?
        };
        let ratios = (
            attempt.decision.get("a_ratio").cloned(),
            attempt.decision.get("b_ratio").cloned(),
        );
        attempts.push(attempt);
        match outcome {
            Some((true, _)) => {
                let s = |v: Option<serde_json::Value>| {
                    v.and_then(|x| x.as_str().map(str::to_string)).unwrap_or_default()
                };
                let w = Witness::Quartic { conjugate: j, a_ratio: s(ratios.0), b_ratio: s(ratios.1) };
                return Ok((attempts, Some(w), None));
            }
            Some((false, Some(f_conj))) => {
                // Pull the certificate back along ξ ↦ ξ^{j⁻¹}.
                let jinv = modp::inv(j, k).expect("unit") as i64;
                let zero = CycloNumber::zero(k);
                let f = LaurentPoly::from_coeffs(&zero, 0, f_conj)
                    .galois(jinv)?;
                let cert = NormCertificate::fit(delta, f).ok_or_else(|| {
                    Error::inconsistency("quartic certificate does not pull back to Δ̃")
                })?;
                return Ok((attempts, None, Some(cert)));
            }
            _ => {}
        }
    }
    Ok((attempts, None, None))
}

fn k_report(f: Fraction, k: u64, r_bound: u64) -> Result<KReport> {
    let pres = knot_presentation(f)?;
    let ch = solve_character(&pres, k)?;
    let ta = twisted_alexander_reduced(&pres, &ch)?;
    let delta = ta.poly.clone();

    let cf = even_continued_fraction(f);
    let mpres = wirtinger_presentation(&fourplat_from_terms(&cf.terms, !cf.mirrored)?)?;
    let mch = solve_character(&mpres, k)?;
    let mirror = twisted_alexander_reduced(&mpres, &mch)?.poly;
    let mirror_differs = !mirror.eq_up_to_units(&delta)
        && !(1..k as i64).any(|j| mirror.galois(j).is_ok_and(|m| m.eq_up_to_units(&delta)));

    let mod_r = mod_r_scan(&delta, r_bound);
    let mirror_mod_r = mirror_differs.then(|| mod_r_scan(&mirror, r_bound));
    let (quartic, quartic_witness, quartic_cert) = quartic_route(&delta, k)?;
    let rational_certificate = rational_norm_certificate(&delta);

    let obstruction = match (&mod_r, &mirror_mod_r, quartic_witness) {
        (NormVerdict::Obstructed { witness }, _, _) => Some(witness.clone()),
        (_, Some(NormVerdict::Obstructed { witness }), _) => Some(witness.clone()),
        (_, _, Some(w)) => Some(w),
        _ => None,
    };
    let certificate = rational_certificate.clone().or(quartic_cert);
    let verdict = match (obstruction, certificate) {
        (Some(_), Some(_)) => {
            return Err(Error::inconsistency(format!(
                "k = {k}: an obstruction fired for a polynomial with a norm certificate"
            )))
        }
        (Some(witness), None) => NormVerdict::Obstructed { witness },
        (None, Some(certificate)) => NormVerdict::Norm { certificate },
        (None, None) => {
            let attempts = match &mod_r {
                NormVerdict::Inconclusive { attempts, .. } => attempts.clone(),
                _ => Vec::new(),
            };
            let mut notes = vec![format!("mod-r scan up to {r_bound} found no obstruction")];
            if quartic.is_empty() {
                notes.push("no real-subfield quartic in the Galois orbit".into());
            } else {
                notes.push("quartic decision did not fire".into());
            }
            NormVerdict::Inconclusive { attempts, notes }
        }
    };
    Ok(KReport {
        k,
        character: ch.values.clone(),
        delta_tilde: delta,
        mirror_delta_tilde: mirror_differs.then_some(mirror),
        mod_r,
        mirror_mod_r,
        quartic,
        rational_certificate,
        verdict,
    })
}

/// Fox–Milnor, then for each `k` the twisted polynomial with the mod-r
/// scan and the quartic decision. `ks` defaults to the odd prime divisors
/// of `p`.
pub fn sliceness_verdict(f: Fraction, ks: Option<&[u64]>, r_bound: u64) -> Result<SlicenessReport> {
    let pres = knot_presentation(f)?;
    let alexander = alexander_polynomial(&pres)?;
    let fox_milnor = fox_milnor_test(&alexander)?;
    let mut notes = Vec::new();
    if f.sqrt_p().is_none() {
        notes.push(format!("p = {} is not a perfect square", f.p));
    }
    let ks: Vec<u64> = match ks {
        Some(ks) => ks.to_vec(),
        None => odd_prime_divisors(f.p),
    };
    let mut per_k = Vec::new();
    for &k in &ks {
        if f.p % k != 0 {
            notes.push(format!("k = {k} does not divide p; no character"));
            continue;
        }
        match k_report(f, k, r_bound) {
            Ok(r) => per_k.push(r),
            Err(Error::ZeroDeterminant) => {
                notes.push(format!("k = {k}: twisted determinant vanishes"));
            }
            Err(e) => return Err(e),
        }
    }
    let verdict = if !fox_milnor.passes {
        Verdict::NotAlgebraicallySlice {
            summary: "not algebraically slice (Fox-Milnor)".into(),
        }
    } else if let Some((k, w)) = per_k.iter().find_map(|r| match &r.verdict {
        NormVerdict::Obstructed { witness } => Some((r.k, witness.clone())),
        _ => None,
    }) {
        match w {
            Witness::ModR(m) => Verdict::NotTopologicallySlice {
                k,
                method: "mod_r".into(),
                summary: format!("not topologically slice (mod-{} test, k={k})", m.r),
            },
            Witness::Quartic { .. } => Verdict::NotTopologicallySlice {
                k,
                method: "quartic".into(),
                summary: format!("not topologically slice (twisted Alexander, k={k})"),
            },
        }
    } else {
        Verdict::Inconclusive { summary: "inconclusive: no obstruction fired".into() }
    };
    Ok(SlicenessReport { p: f.p, q: f.q, alexander, fox_milnor, per_k, notes, verdict })
}

