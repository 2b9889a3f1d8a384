use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use super::norm::{NormVerdict, Witness};
use crate::arith::cyclo::reduce_cyclo_mod;
use crate::arith::{modp, CycloNumber, FpPoly, LaurentPoly, Q};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModRWitness {
    pub r: u64,
    pub b: u64,
    /// Irreducible factor degrees with multiplicity.
    pub degrees: Vec<usize>,
    /// Leading unit of the factorization over `F_r`.
    pub unit: u64,
    pub factors: Vec<String>,
    /// Image of the cleared polynomial, `deg:coeff;…`.
    pub image: String,
    /// Scale applied to clear denominators before reduction.
    pub cleared_by: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum ModROutcome {
    Obstructed(ModRWitness),
    Consistent { r: u64, b: u64, degrees: Vec<usize> },
    /// The leading coefficient vanishes under `ξ ↦ b`.
    Skipped { r: u64, b: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Attempt {
    pub r: u64,
    pub b: u64,
    pub status: &'static str,
    pub degrees: Vec<usize>,
}

/// Scale by the common denominator and shift to lowest degree 0.
pub fn integral_form(p: &LaurentPoly<CycloNumber>) -> (Vec<CycloNumber>, BigInt) {
    let den = p
        .terms()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(&c.denominator()));
    let s = Q::from_integer(den.clone());
    (p.shift_to_zero().dense().iter().map(|c| c.scale(&s)).collect(), den)
}

/// Is there a sub-multiset of `degrees` summing to `target`?
pub fn has_split(degrees: &[usize], target: usize) -> bool {
    let mut reach = vec![false; target + 1];
    reach[0] = true;
    for &d in degrees {
        for s in (d..=target).rev() {
            reach[s] |= reach[s - d];
        }
    }
    reach[target]
}

/// Reduce `p` under `ξ ↦ b` in `F_r` and look for a factorization into
/// two halves of equal degree.
pub fn mod_r_norm_test(p: &LaurentPoly<CycloNumber>, r: u64, b: u64) -> Result<ModROutcome> {
    if p.is_zero() {
        return Err(Error::invalid("zero polynomial"));
    }
    let k = p.field_zero().conductor();
    if !modp::is_prime(r) {
        return Err(Error::NotPrime(r));
    }
    if r % k != 1 || modp::order(b, r) != k {
        return Err(Error::invalid(format!("{b} does not have order {k} modulo {r}")));
    }
    let (coeffs, den) = integral_form(p);
    let image: Vec<u64> = coeffs
        .iter()
        .map(|c| reduce_cyclo_mod(c, r, b))
        .collect::<Result<_>>()?;
    if *image.last().unwrap() == 0 {
        return Ok(ModROutcome::Skipped { r, b });
    }
    let poly = FpPoly::new(r, image);
    let n = poly.degree();
    let fl = poly.factor();
    let degrees = fl.degree_multiset(|f| f.degree());
    let split = n % 2 == 0 && has_split(&degrees, n / 2);
    if split {
        Ok(ModROutcome::Consistent { r, b, degrees })
    } else {
        Ok(ModROutcome::Obstructed(ModRWitness {
            r,
            b,
            degrees,
            unit: fl.unit,
            factors: fl.factors.iter().map(|(f, m)| format!("({f})^{m}")).collect(),
            image: poly.to_string(),
            cleared_by: den.to_string(),
        }))
    }
}

/// Every prime `r ≡ 1 (mod k)` up to `r_bound` and every `b` of order `k`,
/// ascending; the first obstruction wins.
pub fn mod_r_scan(p: &LaurentPoly<CycloNumber>, r_bound: u64) -> NormVerdict {
    let k = p.field_zero().conductor();
    let mut attempts = Vec::new();
    for r in modp::primes_congruent_one(k, r_bound) {
        for b in modp::elements_of_order(k, r) {
            match mod_r_norm_test(p, r, b) {
                Ok(ModROutcome::Obstructed(w)) => {
                    return NormVerdict::Obstructed { witness: Witness::ModR(w) };
                }
                Ok(ModROutcome::Consistent { degrees, .. }) => {
                    attempts.push(Attempt { r, b, status: "consistent", degrees });
                }
                Ok(ModROutcome::Skipped { .. }) => {
                    attempts.push(Attempt { r, b, status: "skipped", degrees: Vec::new() });
                }
                Err(_) => attempts.push(Attempt { r, b, status: "error", degrees: Vec::new() }),
            }
        }
    }
    NormVerdict::Inconclusive {
        attempts,
        notes: vec![format!("no (r, b) with r <= {r_bound} obstructs")],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_sums() {
        assert!(!has_split(&[2, 4], 3));
        assert!(has_split(&[1, 2, 3], 3));
        assert!(has_split(&[1, 1, 1, 1, 1, 1], 3));
        assert!(!has_split(&[6], 3));
    }

    #[test]
    fn constructed_norm_is_consistent() {
        let k = 7;
        let z = CycloNumber::zero(k);
        let h = LaurentPoly::from_coeffs(
            &z,
            0,
            vec![
                CycloNumber::from_ints(k, &[1, 0, 2, 0, 0, 0]),
                CycloNumber::from_ints(k, &[0, -1, 0, 3, 0, 0]),
                CycloNumber::from_ints(k, &[4, 0, 0, 0, 0, 1]),
            ],
        );
        let p = h.mul(&h.conj_reciprocal());
        assert!(!mod_r_scan(&p, 100).is_obstructed());
        assert!(mod_r_norm_test(&p, 29, 2).is_err());
        assert!(mod_r_norm_test(&p, 30, 16).is_err());
    }
}
