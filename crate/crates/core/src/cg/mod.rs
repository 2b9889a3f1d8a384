//! Casson–Gordon signatures of 2-bridge knots from the double branched
//! cover `L(p, q)`, and Lisca's ribbon family.
//!
//! For `p = m²` and `k | m` the character of order `k` indexed by `r` is
//! `c = (p/k)·r`. The signature reported is the lens-space defect
//! `ρ(L(p, q), c)`; it is an odd integer, and it counts as vanishing when
//! `|ρ| ≤ 1`, the bound a slice knot must satisfy.

pub mod lens;
pub mod ribbon;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::knot::Fraction;

pub use lens::{rho, rho_dedekind, rho_lattice};
pub use ribbon::{in_family_r, ribbon_family_member};

/// Divisors `k > 1` of `m`, ascending.
pub fn divisors_above_one(m: u64) -> Vec<u64> {
    (2..=m).filter(|k| m % k == 0).collect()
}

pub fn is_prime_power(k: u64) -> bool {
    if k < 2 {
        return false;
    }
    let p = (2..=k).find(|d| k % d == 0).unwrap();
    let mut n = k;
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

fn square_root(f: Fraction) -> Result<u64> {
    f.sqrt_p()
        .ok_or_else(|| Error::invalid(format!("p = {} is not a perfect square", f.p)))
}

/// `σ(K(p, q); k, r)` as an exact integer.
pub fn cg_signature(f: Fraction, k: u64, r: u64) -> Result<i64> {
    let m = square_root(f)?;
    if k < 2 || m % k != 0 {
        return Err(Error::invalid(format!("k = {k} does not divide m = {m}")));
    }
    if r == 0 || r >= k {
        return Err(Error::invalid(format!("r = {r} must satisfy 1 ≤ r ≤ {}", k - 1)));
    }
    match rho(f.p, f.q, f.p / k * r)? {
        (n, 1) => Ok(n),
        (n, d) => Err(Error::inconsistency(format!("non-integral signature {n}/{d}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CGEntry {
    pub k: u64,
    pub r: u64,
    pub signature: i64,
    pub prime_power: bool,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CGReport {
    pub p: u64,
    pub q: u64,
    pub m: u64,
    pub entries: Vec<CGEntry>,
    pub all_prime_power_vanish: bool,
    pub all_vanish: bool,
    pub some_composite_nonzero: bool,
    /// `σ(k, r) = σ(k, k − r)` on every entry.
    pub conjugate_symmetric: bool,
}

impl CGReport {
    pub fn get(&self, k: u64, r: u64) -> Option<i64> {
        self.entries.iter().find(|e| e.k == k && e.r == r).map(|e| e.signature)
    }
}

/// Every `σ(k, r)` for `1 < k | m`, `1 ≤ r < k`.
pub fn cg_report(f: Fraction) -> Result<CGReport> {
    let m = square_root(f)?;
    let chars: Vec<(u64, u64)> = divisors_above_one(m)
        .into_iter()
        .flat_map(|k| (1..k).map(move |r| (k, r)))
        .collect();
    let entries = chars
        .par_iter()
        .map(|&(k, r)| {
            let signature = cg_signature(f, k, r)?;
            Ok(CGEntry {
                k,
                r,
                signature,
                prime_power: is_prime_power(k),
                vanishes: signature.abs() <= 1,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let conjugate_symmetric = entries
        .iter()
        .all(|e| entries.iter().any(|o| o.k == e.k && o.r == e.k - e.r && o.signature == e.signature));
    Ok(CGReport {
        p: f.p,
        q: f.q,
        m,
        all_prime_power_vanish: entries.iter().filter(|e| e.prime_power).all(|e| e.vanishes),
        all_vanish: entries.iter().all(|e| e.vanishes),
        some_composite_nonzero: entries.iter().any(|e| !e.prime_power && !e.vanishes),
        conjugate_symmetric,
        entries,
    })
}

/// Whether every prime-power signature vanishes.
pub fn prime_power_vanishing(f: Fraction) -> Result<(bool, CGReport)> {
    let report = cg_report(f)?;
    Ok((report.all_prime_power_vanish, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fr(p: u64, q: u64) -> Fraction {
        Fraction::new(p, q).unwrap()
    }

    #[test]
    fn examples() {
        let r = cg_report(fr(225, 94)).unwrap();
        assert!(r.all_prime_power_vanish);
        assert!(r.some_composite_nonzero);
        assert!(r.conjugate_symmetric);
        assert_eq!(r.entries.len(), 2 + 4 + 14);
        assert!(prime_power_vanishing(fr(1225, 466)).unwrap().0);
        assert!(matches!(cg_report(fr(3, 1)), Err(Error::InvalidInput(_))));
        assert!(cg_signature(fr(225, 94), 7, 1).is_err());
        assert!(cg_signature(fr(225, 94), 5, 5).is_err());
    }

    #[test]
    fn prime_powers() {
        let pp: Vec<u64> = (1..30).filter(|&k| is_prime_power(k)).collect();
        assert_eq!(pp, [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]);
    }
}
