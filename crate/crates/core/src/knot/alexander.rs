use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::fox::abelian_fox_row;
use super::presentation::KnotPresentation;
use crate::arith::det::{det_laurent, ZEntry};
use crate::arith::{LaurentPoly, Q};
use crate::error::{Error, Result};

/// Classical Alexander polynomial: the minor of the abelianized Fox
/// matrix omitting the meridian column, normalized to lowest degree 0
/// and positive leading coefficient.
pub fn alexander_polynomial(pres: &KnotPresentation) -> Result<LaurentPoly<Q>> {
    let cols: Vec<usize> = (0..pres.generators).filter(|&g| g != pres.meridian).collect();
    let m: Vec<Vec<ZEntry>> = pres
        .relators
        .iter()
        .map(|r| {
            let row = abelian_fox_row(r, pres.generators);
            cols.iter()
                .map(|&g| row[g].iter().map(|(&e, &c)| (e, vec![c])).collect())
                .collect()
        })
        .collect();
    let det = det_laurent(1, &m);
    if det.is_empty() {
        return Err(Error::ZeroDeterminant);
    }
    Ok(normalize_int(&det))
}

fn normalize_int(det: &BTreeMap<i64, Vec<BigInt>>) -> LaurentPoly<Q> {
    let zero = Q::from_integer(BigInt::from(0));
    let p = LaurentPoly::from_terms(
        &zero,
        det.iter().map(|(&e, v)| (e, Q::from_integer(v[0].clone()))),
    )
    .shift_to_zero();
    let lc = p.leading().cloned().unwrap();
    if lc < zero {
        p.neg()
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use crate::arith::laurent::qpoly;
    use crate::knot::{knot_presentation, schubert_presentation, Fraction};

    fn alex(p: u64, q: u64) -> LaurentPoly<Q> {
        alexander_polynomial(&knot_presentation(Fraction::new(p, q).unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn trefoil() {
        assert!(alex(3, 1).eq_up_to_units(&qpoly(&[1, -1, 1])));
        let s = schubert_presentation(Fraction::new(3, 1).unwrap());
        assert!(alexander_polynomial(&s).unwrap().eq_up_to_units(&qpoly(&[1, -1, 1])));
    }

    #[test]
    fn example_225() {
        let want = qpoly(&[-1, 5, -6, 3]).mul(&qpoly(&[-3, 6, -5, 1]));
        let d = alex(225, 94);
        assert!(d.eq_up_to_units(&want), "{d}");
        assert_eq!(d.eval(&Q::from_integer((-1).into())).abs(), Q::from_integer(225.into()));
    }

    #[test]
    fn stevedore_from_both_presentations() {
        let w = alex(9, 4);
        let s = alexander_polynomial(&schubert_presentation(Fraction::new(9, 4).unwrap())).unwrap();
        assert!(w.eq_up_to_units(&s));
        assert!(w.eq_up_to_units(&qpoly(&[2, -5, 2])));
    }
}
