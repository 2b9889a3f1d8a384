//! Signature defects `ρ(L(p, q), c)` of lens spaces, computed two ways.

use crate::error::{Error, Result};

/// Twice `p` times the sawtooth `((x/p))`, which is `2x - p` off multiples of
/// `p` and `0` on them.
fn saw2p(x: i64, p: i64) -> i64 {
    let r = x.rem_euclid(p);
    if r == 0 {
        0
    } else {
        2 * r - p
    }
}

/// `4p² · Σ_{a=1}^{p-1} ((a/p))((qa + c)/p))`.
fn dedekind_rademacher_scaled(p: i64, q: i64, c: i64) -> i64 {
    (1..p).map(|a| saw2p(a, p) * saw2p(q * a + c, p)).sum()
}

/// `ρ = 4(S(q, c) − S(q, 0))` with `S` the Dedekind–Rademacher sum.
/// Returns `(numerator, denominator)` in lowest terms.
pub fn rho_dedekind(p: u64, q: u64, c: u64) -> (i64, i64) {
    let (pi, qi, ci) = (p as i64, q as i64, c as i64);
    let num = dedekind_rademacher_scaled(pi, qi, ci) - dedekind_rademacher_scaled(pi, qi, 0);
    reduce(num, pi * pi)
}

/// Lattice-point form:
/// `ρ = 1 − 2c + 2q'c(c−1)/p + 2(q'c mod p)/p − 4·#{(x, y): 0 < x < c, 0 < y ≤ q'x/p}`
/// with `q' = q⁻¹ mod p`, for `0 < c < p`.
pub fn rho_lattice(p: u64, q: u64, c: u64) -> (i64, i64) {
    if c % p == 0 {
        return (0, 1);
    }
    let c = c % p;
    let qi = crate::arith::modp::inv(q, p).expect("q is a unit mod p") as i128;
    let (p, c) = (p as i128, c as i128);
    let count: i128 = (1..c).map(|x| qi * x / p).sum();
    let num = p * (1 - 2 * c - 4 * count) + 2 * qi * c * (c - 1) + 2 * ((qi * c) % p);
    reduce(num as i64, p as i64)
}

fn reduce(num: i64, den: i64) -> (i64, i64) {
    let g = num_integer::gcd(num, den);
    (num / g, den / g)
}

/// `ρ(L(p, q), c)` by both routes; disagreement is an internal error.
pub fn rho(p: u64, q: u64, c: u64) -> Result<(i64, i64)> {
    let a = rho_dedekind(p, q, c);
    let b = rho_lattice(p, q, c);
    if a != b {
        return Err(Error::inconsistency(format!(
            "ρ(L({p},{q}), {c}): Dedekind sum gives {}/{}, lattice count gives {}/{}",
            a.0, a.1, b.0, b.1
        )));
    }
    Ok(a)
}


#[cfg(test)]
mod props {
    use num_integer::Integer;
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #[test]
        fn routes_agree(p in 3u64..600, q in 1u64..600, c in 0u64..600) {
            prop_assume!(q < p && p.gcd(&q) == 1);
            let c = c % p;
            prop_assert_eq!(rho_dedekind(p, q, c), rho_lattice(p, q, c));
            prop_assert_eq!(rho_dedekind(p, q, c), rho_dedekind(p, q, (p - c) % p));
            let (n, d) = rho_dedekind(p, q, c);
            prop_assert_eq!(rho_dedekind(p, p - q, c), (-n, d));
        }
    }
}
