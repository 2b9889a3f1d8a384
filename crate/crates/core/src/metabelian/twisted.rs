use serde::Serialize;

use super::character::{solve_character, Character};
use super::phi::{entry_to_z, fox_row_image};
use crate::arith::cyclo::leading_sign;
use crate::arith::det::{det_laurent, ZEntry};
use crate::arith::{CycloNumber, Field, LaurentPoly, Q};
use crate::error::{Error, Result};
use crate::knot::{knot_presentation, Fraction, KnotPresentation};

/// How the raw quotient was turned into the reported representative:
/// `poly = sign · ξ^xi_power · t^{-shift} · raw`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UnitRecord {
    pub shift: i64,
    pub xi_power: u64,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwistedAlex {
    pub k: u64,
    pub character: Character,
    /// FNV-1a hash of the presentation's text form.
    #[serde(serialize_with = "hex_u64")]
    pub presentation_hash: u64,
    pub poly: LaurentPoly<CycloNumber>,
    pub unit: UnitRecord,
}

fn hex_u64<S: serde::Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{v:016x}"))
}

pub fn presentation_hash(pres: &KnotPresentation) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in pres.to_text().bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// `det Φ(Fox matrix minus the meridian block column) / (t-1)²`.
pub fn twisted_alexander_reduced(pres: &KnotPresentation, ch: &Character) -> Result<TwistedAlex> {
    let raw = twisted_quotient(pres, ch, 2)?;
    let (poly, unit) = normalize_units(&raw);
    Ok(TwistedAlex {
        k: ch.k,
        character: ch.clone(),
        presentation_hash: presentation_hash(pres),
        poly,
        unit,
    })
}

/// The block determinant divided by `(t-1)^power`.
pub fn twisted_quotient(
    pres: &KnotPresentation,
    ch: &Character,
    power: u32,
) -> Result<LaurentPoly<CycloNumber>> {
    let det = twisted_block_det(pres, ch)?;
    let k = ch.k;
    let one = CycloNumber::one(k);
    let t_minus_1 = LaurentPoly::from_coeffs(&one, 0, vec![one.negate(), one.clone()]);
    det.div_exact(&t_minus_1.pow(power))
}

/// Determinant of the `2s × 2s` matrix over `Z[ξ_k][t^{±1}]`.
pub fn twisted_block_det(pres: &KnotPresentation, ch: &Character) -> Result<LaurentPoly<CycloNumber>> {
    let k = ch.k;
    if ch.values.len() != pres.generators {
        return Err(Error::invalid("character does not match the presentation"));
    }
    let cols: Vec<usize> = (0..pres.generators).filter(|&g| g != pres.meridian).collect();
    let mut m: Vec<Vec<ZEntry>> = Vec::with_capacity(2 * pres.relators.len());
    for r in &pres.relators {
        let row = fox_row_image(ch, r, pres.generators);
        for i in 0..2 {
            let mut line = Vec::with_capacity(2 * cols.len());
            for &g in &cols {
                for j in 0..2 {
                    line.push(entry_to_z(&row[g][i][j], k));
                }
            }
            m.push(line);
        }
    }
    let det = det_laurent(k, &m);
    if det.is_empty() {
        return Err(Error::ZeroDeterminant);
    }
    let zero = CycloNumber::zero(k);
    Ok(LaurentPoly::from_terms(
        &zero,
        det.into_iter().map(|(e, v)| {
            (e, CycloNumber::new(k, v.into_iter().map(Q::from_integer).collect()))
        }),
    ))
}

/// Shift to lowest degree 0, multiply by the first `ξ^j` that makes every
/// coefficient conjugation-invariant (if any), and fix the sign so the
/// leading coefficient's first nonzero power-basis entry is positive.
pub fn normalize_units(p: &LaurentPoly<CycloNumber>) -> (LaurentPoly<CycloNumber>, UnitRecord) {
    let shift = p.min_deg().unwrap_or(0);
    let base = p.shift(-shift);
    let Some(lc) = base.leading() else {
        return (base, UnitRecord { shift, xi_power: 0, sign: 1 });
    };
    let k = lc.conductor();
    let mut chosen = (base.clone(), 0);
    for j in 0..k {
        let u = CycloNumber::xi_pow(k, j as i64);
        let q = base.scale(&u);
        if q.terms().all(|(_, c)| *c == c.conj()) {
            chosen = (q, j);
            break;
        }
    }
    let (q, xi_power) = chosen;
    let sign = if leading_sign(q.leading().unwrap()) < 0 { -1 } else { 1 };
    let q = if sign < 0 { q.neg() } else { q };
    (q, UnitRecord { shift, xi_power, sign })
}

/// All `k-1` Galois conjugates, `ξ ↦ ξʲ` for `j = 1 … k-1`.
pub fn galois_orbit(ta: &TwistedAlex) -> Vec<LaurentPoly<CycloNumber>> {
    (1..ta.k as i64)
        .map(|j| ta.poly.galois(j).expect("j is a unit mod prime k"))
        .collect()
}

/// Wirtinger pipeline for `K(p,q)` and an odd prime `k`.
pub fn twisted_for_fraction(f: Fraction, k: u64) -> Result<TwistedAlex> {
    let pres = knot_presentation(f)?;
    let ch = solve_character(&pres, k)?;
    twisted_alexander_reduced(&pres, &ch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::Fraction;

    #[test]
    fn meridian_block_has_unit_determinant_shift() {
        // det(Φ(x) - I) = 1 - t for any value.
        let ch = Character { k: 5, values: vec![3], pinned: 0 };
        let m = super::super::phi::MonoMat::generator(&ch, 0, 1);
        assert_eq!(m.e, [(2, 0), (3, 1)]);
        // [[-1, ξ^2], [tξ^3, -1]]: det = 1 - t ξ^5 = 1 - t.
        assert_eq!((m.e[0].0 + m.e[1].0) % 5, 0);
        assert_eq!(m.e[0].1 + m.e[1].1, 1);
    }

    #[test]
    fn trefoil_k3_is_defined() {
        let ta = twisted_for_fraction(Fraction::new(3, 1).unwrap(), 3).unwrap();
        assert!(!ta.poly.is_zero());
    }
}
