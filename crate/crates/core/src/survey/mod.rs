//! Enumeration of 2-bridge knots with square determinant, the per-knot
//! pipeline and table output.

pub mod config;
pub mod output;
pub mod pipeline;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::cg::{prime_power_vanishing, ribbon_family_member};
use crate::error::{Error, Result};
use crate::knot::{alexander_polynomial, schubert_presentation, Fraction};
use crate::obstruction::{fox_milnor_test, sliceness_verdict, SlicenessReport};

pub use config::Config;
pub use output::{survey_csv, survey_json};
pub use pipeline::{run_pipeline, PipelineReport};

/// A knot up to mirror image, as the orbit of `q` under inversion and
/// `q ↦ p − q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotClass {
    pub p: u64,
    pub canonical: u64,
    pub orbit: Vec<u64>,
}

pub fn canonical_class(f: Fraction) -> KnotClass {
    let orbit = f.orbit();
    KnotClass { p: f.p, canonical: orbit[0], orbit }
}

/// Canonical representatives of all classes with determinant `p`, ascending.
pub fn classes(p: u64) -> Vec<u64> {
    let mut seen = vec![false; p as usize];
    let mut out = Vec::new();
    for q in 1..p {
        if seen[q as usize] || q.gcd(&p) != 1 {
            continue;
        }
        let orbit = Fraction { p, q }.orbit();
        for &x in &orbit {
            seen[x as usize] = true;
        }
        out.push(orbit[0]);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyDetail {
    pub q: u64,
    pub orbit: Vec<u64>,
    pub alexander: String,
    pub alexander_is_norm: bool,
    /// Some composite-order signature is nonzero, the alternative
    /// definition of CG-fake.
    pub composite_nonzero: bool,
    /// Twisted obstructions, run on classes whose Alexander polynomial is a
    /// norm.
    pub sliceness: Option<SlicenessReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyRow {
    pub schema_version: u32,
    pub m: u64,
    pub classes: usize,
    pub cg_fake: usize,
    pub alexander_norm: usize,
    /// CG-fake classes where the composite-signature definition disagrees.
    pub definition_mismatches: Vec<u64>,
    pub details: Vec<SurveyDetail>,
}

fn survey_class(p: u64, q: u64, r_bound: u64, ks: Option<&[u64]>) -> Result<Option<SurveyDetail>> {
    let f = Fraction::new(p, q)?;
    let (ppv, report) = prime_power_vanishing(f)?;
    if !ppv || ribbon_family_member(f)? {
        return Ok(None);
    }
    let delta = alexander_polynomial(&schubert_presentation(f))?;
    let alexander_is_norm = fox_milnor_test(&delta)?.passes;
    let sliceness = if alexander_is_norm {
        Some(sliceness_verdict(f, ks, r_bound)?)
    } else {
        None
    };
    Ok(Some(SurveyDetail {
        q,
        orbit: f.orbit(),
        alexander: delta.canonical(),
        alexander_is_norm,
        composite_nonzero: report.some_composite_nonzero,
        sliceness,
    }))
}

/// Count CG-fake classes (all prime-power signatures vanish, not in `R`)
/// and those among them whose Alexander polynomial is a norm.
pub fn survey(m: u64, config: &Config) -> Result<SurveyRow> {
    if m < 3 || m % 2 == 0 {
        return Err(Error::invalid(format!("m = {m} must be odd and at least 3")));
    }
    let p = m.checked_mul(m).ok_or_else(|| Error::invalid("m too large"))?;
    let reps = classes(p);
    let ks = config.k_list.as_deref();
    let run = || {
        reps.par_iter()
            .map(|&q| survey_class(p, q, config.r_bound, ks))
            .collect::<Result<Vec<_>>>()
    };
    let found = match config.jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::invalid(format!("thread pool: {e}")))?
            .install(run)?,
        None => run()?,
    };
    let details: Vec<SurveyDetail> = found.into_iter().flatten().collect();
    Ok(SurveyRow {
        schema_version: crate::SCHEMA_VERSION,
        m,
        classes: reps.len(),
        cg_fake: details.len(),
        alexander_norm: details.iter().filter(|d| d.alexander_is_norm).count(),
        definition_mismatches: details.iter().filter(|d| !d.composite_nonzero).map(|d| d.q).collect(),
        details,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples() {
        let c = canonical_class(Fraction::new(9, 2).unwrap());
        assert_eq!(c.orbit, [2, 4, 5, 7]);
        assert_eq!(c.canonical, 2);
        let c = canonical_class(Fraction::new(225, 94).unwrap());
        assert_eq!(c.orbit, [79, 94, 131, 146]);
        assert_eq!(c.canonical, 79);
        let again = canonical_class(Fraction::new(225, c.canonical).unwrap());
        assert_eq!(again, c);
    }

    #[test]
    fn class_counts() {
        assert_eq!(classes(9), [1, 2]);
        assert_eq!(classes(25).len(), 6);
    }

    #[test]
    fn row_15() {
        let row = survey(15, &Config::default()).unwrap();
        assert_eq!((row.cg_fake, row.alexander_norm), (2, 1));
        let norm = row.details.iter().find(|d| d.alexander_is_norm).unwrap();
        assert_eq!(norm.q, 79);
        assert!(norm.sliceness.as_ref().unwrap().verdict.is_obstructed());
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #[test]
        fn canonical_class_is_idempotent(f in crate::testkit::fraction(3001)) {
            let c = canonical_class(f);
            prop_assert_eq!(c.canonical, *c.orbit.iter().min().unwrap());
            prop_assert_eq!(canonical_class(Fraction::new(f.p, c.canonical).unwrap()), c.clone());
            prop_assert!(classes(f.p).binary_search(&c.canonical).is_ok());
        }
    }
}
