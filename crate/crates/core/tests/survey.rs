use rk_core::knot::Fraction;
use rk_core::metabelian::twisted_for_fraction;
use rk_core::obstruction::{mod_r_norm_test, sliceness_verdict, ModROutcome, NormVerdict, Witness};
use rk_core::survey::{survey, survey_json, Config};

fn rows(ms: &[u64], jobs: usize) -> String {
    let config = Config { jobs: Some(jobs), ..Config::default() };
    let rows: Vec<_> = ms.iter().map(|&m| survey(m, &config).unwrap()).collect();
    survey_json(&rows)
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let ms = [15, 21, 35];
    let one = rows(&ms, 1);
    assert_eq!(one, rows(&ms, 4));
    assert_eq!(one, rows(&ms, 7));
}

#[test]
fn obstruction_witnesses_reverify_in_isolation() {
    let mut checked = 0;
    for m in [15, 21, 33, 35] {
        let row = survey(m, &Config::default()).unwrap();
        for detail in &row.details {
            let Some(report) = &detail.sliceness else { continue };
            let f = Fraction::new(m * m, detail.q).unwrap();
            let again = sliceness_verdict(f, None, 200).unwrap();
            assert_eq!(again.verdict, report.verdict, "{}/{}", m * m, detail.q);
            for kr in &report.per_k {
                let fresh = twisted_for_fraction(f, kr.k).unwrap().poly;
                assert!(fresh.eq_up_to_units(&kr.delta_tilde) || {
                    (1..kr.k as i64).any(|j| fresh.galois(j).is_ok_and(|g| g.eq_up_to_units(&kr.delta_tilde)))
                });
                match &kr.verdict {
                    NormVerdict::Obstructed { witness: Witness::ModR(w) } => {
                        let poly = if kr.mod_r.is_obstructed() {
                            &kr.delta_tilde
                        } else {
                            kr.mirror_delta_tilde.as_ref().unwrap()
                        };
                        match mod_r_norm_test(poly, w.r, w.b).unwrap() {
                            ModROutcome::Obstructed(w2) => assert_eq!(&w2, w),
                            other => panic!("{}/{}: witness did not reproduce: {other:?}", m * m, detail.q),
                        }
                        checked += 1;
                    }
                    NormVerdict::Obstructed { witness: Witness::Quartic { conjugate, .. } } => {
                        assert!(kr.quartic.iter().any(|a| a.conjugate == *conjugate
                            && a.decision["status"] == "not_norm"));
                        checked += 1;
                    }
                    _ => {}
                }
            }
        }
    }
    assert!(checked > 0);
}
