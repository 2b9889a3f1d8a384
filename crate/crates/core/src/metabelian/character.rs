use serde::Serialize;

use crate::arith::modp;
use crate::error::{Error, Result};
use crate::knot::KnotPresentation;

/// Metabelian character: one `F_k` value per generator, pinned to 0 at
/// the preferred meridian.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Character {
    pub k: u64,
    pub values: Vec<u64>,
    pub pinned: usize,
}

impl Character {
    /// Multiply every value by `c`.
    pub fn scaled(&self, c: u64) -> Character {
        Character {
            k: self.k,
            values: self.values.iter().map(|&v| modp::mul(v, c, self.k)).collect(),
            pinned: self.pinned,
        }
    }

    /// Check every relator: reading letters left to right with
    /// `V ← v_g - V`, the relator forces `V = 0`.
    pub fn satisfies(&self, pres: &KnotPresentation) -> bool {
        pres.relators.iter().all(|r| {
            let coeffs = relator_equation(r.letters().iter().map(|l| l.gen), pres.generators);
            let mut acc = 0i64;
            for (g, c) in coeffs.iter().enumerate() {
                acc += c * self.values[g] as i64;
            }
            acc.rem_euclid(self.k as i64) == 0
        })
    }
}

/// Integer coefficients of the linear form a relator imposes on `v`.
fn relator_equation(gens: impl Iterator<Item = usize>, n: usize) -> Vec<i64> {
    let mut coef = vec![0i64; n];
    for g in gens {
        for c in coef.iter_mut() {
            *c = -*c;
        }
        coef[g] += 1;
    }
    coef
}

/// Solve for the character over `F_k` with `v_μ = 0`, normalized so
/// that the first nonzero value (by generator index) is 1.
pub fn solve_character(pres: &KnotPresentation, k: u64) -> Result<Character> {
    if k < 3 || !modp::is_prime(k) {
        return Err(Error::invalid(format!("k = {k} must be an odd prime")));
    }
    let n = pres.generators;
    let mu = pres.meridian;
    let cols: Vec<usize> = (0..n).filter(|&g| g != mu).collect();
    let mut rows: Vec<Vec<u64>> = pres
        .relators
        .iter()
        .map(|r| {
            let eq = relator_equation(r.letters().iter().map(|l| l.gen), n);
            cols.iter().map(|&g| modp::reduce_i64(eq[g], k)).collect()
        })
        .collect();

    // Reduced row echelon form over F_k.
    let width = cols.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = modp::inv(rows[r][c], k).unwrap();
        for x in rows[r].iter_mut() {
            *x = modp::mul(*x, inv, k);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in 0..width {
                    let s = modp::mul(f, rows[r][j], k);
                    rows[i][j] = modp::sub(rows[i][j], s, k);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    match free.len() {
        0 => return Err(Error::NoCharacter { k }),
        1 => {}
        d => {
            return Err(Error::inconsistency(format!(
                "character space over F_{k} has dimension {d}, expected 1"
            )))
        }
    }
    let f = free[0];
    let mut sol = vec![0u64; width];
    sol[f] = 1;
    for (row, &pc) in rows.iter().zip(&pivots) {
        sol[pc] = modp::sub(0, row[f], k);
    }
    let mut values = vec![0u64; n];
    for (i, &g) in cols.iter().enumerate() {
        values[g] = sol[i];
    }
    let first = values.iter().copied().find(|&v| v != 0).expect("nontrivial");
    let ch = Character { k, values, pinned: mu }.scaled(modp::inv(first, k).unwrap());
    debug_assert!(ch.satisfies(pres));
    Ok(ch)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::{knot_presentation, schubert_presentation, Fraction};

    #[test]
    fn wirtinger_relation() {
        // x_j x_i x_j⁻¹ x_l⁻¹ gives v_i + v_l - 2 v_j.
        let eq = relator_equation([0usize, 1, 0, 2].into_iter(), 3);
        assert_eq!(eq, vec![-2, 1, 1]);
    }

    #[test]
    fn characters_exist_iff_k_divides_p() {
        let f = Fraction::new(225, 94).unwrap();
        let pres = knot_presentation(f).unwrap();
        for k in [3, 5] {
            let ch = solve_character(&pres, k).unwrap();
            assert!(ch.satisfies(&pres));
            assert_eq!(ch.values[pres.meridian], 0);
            assert!(ch.values.iter().any(|&v| v != 0));
            for c in 1..k {
                assert!(ch.scaled(c).satisfies(&pres));
            }
        }
        assert!(matches!(solve_character(&pres, 7), Err(Error::NoCharacter { .. })));
        let s = schubert_presentation(f);
        assert!(solve_character(&s, 5).unwrap().satisfies(&s));
        assert!(solve_character(&pres, 4).is_err());
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;
    use crate::knot::{knot_presentation, schubert_presentation};
    use crate::testkit::fraction_with_factor;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn solutions_satisfy_relators(
            (k, f) in prop::sample::select(vec![3u64, 5, 7]).prop_flat_map(|k| (Just(k), fraction_with_factor(k, 400)))
        ) {
            for pres in [knot_presentation(f).unwrap(), schubert_presentation(f)] {
                let ch = solve_character(&pres, k).unwrap();
                prop_assert!(ch.satisfies(&pres));
                prop_assert_eq!(ch.values[pres.meridian], 0);
                let first = ch.values.iter().copied().find(|&v| v != 0);
                prop_assert_eq!(first, Some(1));
                for c in 1..k {
                    prop_assert!(ch.scaled(c).satisfies(&pres));
                }
            }
        }
    }
}
