//! Lisca's family `R` of ribbon 2-bridge knots with `p = m²`.

use num_integer::Integer;

use super::cg_report;
use crate::error::{Error, Result};
use crate::knot::{alexander_polynomial, schubert_presentation, Fraction};
use crate::obstruction::fox_milnor_test;

/// Membership of the label `q` itself (no orbit):
/// `q = mk ± 1` with `0 < k < m`, `gcd(m, k) = 1`;
/// `q = d(m ± 1)` with `d > 1`, `d | 2m ∓ 1`;
/// `q = d(m ± 1)` with `d > 1` odd, `d | m ± 1`.
pub fn in_family_r(m: u64, q: u64) -> bool {
    let p = m * m;
    if q == 0 || q >= p {
        return false;
    }
    for k in 1..m {
        if m.gcd(&k) == 1 && (q == m * k + 1 || q == m * k - 1) {
            return true;
        }
    }
    for (base, other) in [(m + 1, 2 * m - 1), (m - 1, 2 * m + 1)] {
        if base == 0 || q % base != 0 {
            continue;
        }
        let d = q / base;
        if d > 1 && (other % d == 0 || (d % 2 == 1 && base % d == 0)) {
            return true;
        }
    }
    false
}

/// Whether some label in the orbit of `f` lies in `R`. A positive answer is
/// checked against Fox–Milnor and the vanishing of every Casson–Gordon
/// signature; a failed check is an internal error.
pub fn ribbon_family_member(f: Fraction) -> Result<bool> {
    let Some(m) = f.sqrt_p() else {
        return Ok(false);
    };
    if !f.orbit().into_iter().any(|q| in_family_r(m, q)) {
        return Ok(false);
    }
    let delta = alexander_polynomial(&schubert_presentation(f))?;
    if !fox_milnor_test(&delta)?.passes {
        return Err(Error::inconsistency(format!(
            "K({}/{}) lies in R but fails Fox–Milnor",
            f.p, f.q
        )));
    }
    if !cg_report(f)?.all_vanish {
        return Err(Error::inconsistency(format!(
            "K({}/{}) lies in R but has a nonvanishing signature",
            f.p, f.q
        )));
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(ribbon_family_member(Fraction::new(9, 4).unwrap()).unwrap());
        assert!(!ribbon_family_member(Fraction::new(225, 94).unwrap()).unwrap());
        assert!(!ribbon_family_member(Fraction::new(1225, 466).unwrap()).unwrap());
        assert!(!ribbon_family_member(Fraction::new(7, 2).unwrap()).unwrap());
    }

    #[test]
    fn small_members() {
        // m = 3: 2, 4 from mk ± 1 (k = 1) and 5, 7 (k = 2).
        let r: Vec<u64> = (1..9).filter(|&q| in_family_r(3, q)).collect();
        assert_eq!(r, [2, 4, 5, 7]);
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn members_pass_cross_checks(h in 1u64..8, pick in any::<prop::sample::Index>()) {
            let m = 2 * h + 1;
            let members: Vec<u64> = (1..m * m).filter(|&q| in_family_r(m, q) && num_integer::gcd(q, m) == 1).collect();
            prop_assume!(!members.is_empty());
            let q = members[pick.index(members.len())];
            prop_assert!(ribbon_family_member(Fraction::new(m * m, q).unwrap()).unwrap());
        }
    }
}
