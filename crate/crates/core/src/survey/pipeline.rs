use serde::Serialize;

use super::{canonical_class, Config, KnotClass};
use crate::cg::{cg_report, ribbon_family_member, CGReport};
use crate::error::{Error, Result};
use crate::knot::{
    alexander_polynomial, even_continued_fraction, knot_presentation, schubert_presentation,
    EvenCF, Fraction,
};
use crate::obstruction::{sliceness_verdict, SlicenessReport};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PipelineReport {
    pub schema_version: u32,
    pub p: u64,
    pub q: u64,
    pub class: KnotClass,
    pub continued_fraction: EvenCF,
    pub wirtinger: String,
    pub schubert: String,
    pub alexander: String,
    pub casson_gordon: Option<CGReport>,
    pub ribbon_family: bool,
    pub sliceness: SlicenessReport,
    pub verdict: String,
}

/// Every stage for one knot, ending in a one-line classification.
pub fn run_pipeline(f: Fraction, config: &Config) -> Result<PipelineReport> {
    let wirtinger = knot_presentation(f)?;
    let schubert = schubert_presentation(f);
    let alexander = alexander_polynomial(&wirtinger)?;
    let from_schubert = alexander_polynomial(&schubert)?;
    if !alexander.eq_up_to_units(&from_schubert) {
        return Err(Error::inconsistency("Wirtinger and Schubert Alexander polynomials differ"));
    }
    let casson_gordon = match f.sqrt_p() {
        Some(_) => Some(cg_report(f)?),
        None => None,
    };
    let ribbon_family = ribbon_family_member(f)?;
    let sliceness = sliceness_verdict(f, config.k_list.as_deref(), config.r_bound)?;

    let verdict = if ribbon_family {
        if sliceness.verdict.is_obstructed() {
            return Err(Error::inconsistency(format!(
                "K({}/{}) is in R but {}",
                f.p,
                f.q,
                sliceness.verdict.summary()
            )));
        }
        "in ribbon family R; no obstruction".to_string()
    } else if sliceness.verdict.is_obstructed() {
        sliceness.verdict.summary().to_string()
    } else if let Some(e) = casson_gordon
        .as_ref()
        .and_then(|c| c.entries.iter().find(|e| e.prime_power && !e.vanishes))
    {
        format!("not slice (Casson-Gordon, k={}, r={})", e.k, e.r)
    } else {
        "inconclusive".to_string()
    };
    Ok(PipelineReport {
        schema_version: crate::SCHEMA_VERSION,
        p: f.p,
        q: f.q,
        class: canonical_class(f),
        continued_fraction: even_continued_fraction(f),
        wirtinger: wirtinger.to_text(),
        schubert: schubert.to_text(),
        alexander: alexander.canonical(),
        casson_gordon,
        ribbon_family,
        sliceness,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdicts() {
        let c = Config::default();
        let v = |p, q| run_pipeline(Fraction::new(p, q).unwrap(), &c).unwrap().verdict;
        assert_eq!(v(225, 94), "not topologically slice (twisted Alexander, k=5)");
        assert_eq!(v(1225, 466), "not topologically slice (mod-29 test, k=7)");
        assert_eq!(v(9, 4), "in ribbon family R; no obstruction");
        assert_eq!(v(3, 1), "not algebraically slice (Fox-Milnor)");
    }
}
