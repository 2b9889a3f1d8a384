//! Determinants of matrices over `Z[ξ_k][t^{±1}]` by evaluation and
//! interpolation modulo word-sized primes, recombined with CRT.
//!
//! Each prime `ℓ ≡ 1 (mod 2k)` carries a primitive `k`-th root `ω`, so
//! every embedding `ξ ↦ ωʲ` and every point `t = τ` gives a determinant
//! in `F_ℓ`. Interpolating in `t` and inverting the Vandermonde in `ξ`
//! recovers the power-basis coefficients modulo `ℓ`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp;

/// Sparse Laurent polynomial with power-basis integer coefficients:
/// exponent of `t` ↦ coefficient vector of length `dim`.
pub type ZEntry = BTreeMap<i64, Vec<i64>>;

/// Result coefficients, same layout with arbitrary precision.
pub type ZDet = BTreeMap<i64, Vec<BigInt>>;

/// `dim` is `k - 1` for a cyclotomic ring and 1 for the integers (`k = 1`).
pub fn dim_of(k: u64) -> usize {
    if k == 1 {
        1
    } else {
        (k - 1) as usize
    }
}

fn l1(e: &ZEntry) -> u128 {
    e.values().flat_map(|v| v.iter()).map(|c| c.unsigned_abs() as u128).sum()
}

/// Determinant of a square matrix of entries over `Z[ξ_k][t^{±1}]`.
/// `k` is 1 or an odd prime.
pub fn det_laurent(k: u64, m: &[Vec<ZEntry>]) -> ZDet {
    let n = m.len();
    let dim = dim_of(k);
    if n == 0 {
        let mut one = vec![BigInt::zero(); dim];
        one[0] = BigInt::one();
        return BTreeMap::from([(0, one)]);
    }
    assert!(m.iter().all(|row| row.len() == n), "matrix must be square");

    // Row shifts make every entry a polynomial; D bounds the degree.
    let mut lows = Vec::with_capacity(n);
    let mut degree_bound = 0i64;
    for row in m {
        let lo = row.iter().filter_map(|e| e.keys().next()).min().copied();
        let hi = row.iter().filter_map(|e| e.keys().next_back()).max().copied();
        match (lo, hi) {
            (Some(lo), Some(hi)) => {
                lows.push(lo);
                degree_bound += hi - lo;
            }
            _ => return BTreeMap::new(),
        }
    }
    let total_shift: i64 = lows.iter().sum();
    let npts = degree_bound as usize + 1;

    // Coefficient bound: every power-basis coefficient is below 2H.
    let mut h = BigInt::one();
    for row in m {
        let s: u128 = row.iter().map(|e| l1(e) * l1(e)).sum();
        h *= BigInt::from(s).sqrt() + 1u32;
    }
    let need: BigInt = h * 4u32 + 2u32;

    let mut primes = Vec::new();
    let mut prod = BigInt::one();
    let mut batch = 0usize;
    while prod <= need {
        batch += 4;
        primes = modp::large_primes(k, batch);
        prod = primes.iter().fold(BigInt::one(), |a, &p| a * p);
    }
    // One extra prime beyond the bound as a margin.
    primes = modp::large_primes(k, primes.len() + 1);

    let residues: Vec<Vec<Vec<u64>>> = {
        use rayon::prelude::*;
        primes
            .par_iter()
            .map(|&l| det_mod_prime(k, m, &lows, npts, l))
            .collect()
    };

    let mut out = BTreeMap::new();
    for d in 0..npts {
        let mut coeffs = Vec::with_capacity(dim);
        let mut any = false;
        for i in 0..dim {
            let rs: Vec<u64> = residues.iter().map(|r| r[d][i]).collect();
            let c = crt_symmetric(&rs, &primes);
            any |= !c.is_zero();
            coeffs.push(c);
        }
        if any {
            out.insert(d as i64 + total_shift, coeffs);
        }
    }
    out
}

/// Per-prime: power-basis coefficients mod `l` for `t^0 … t^{npts-1}`.
fn det_mod_prime(k: u64, m: &[Vec<ZEntry>], lows: &[i64], npts: usize, l: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let dim = dim_of(k);
    let omega = modp::primitive_root_of_unity(k, l).expect("l ≡ 1 mod k");
    let embeds: Vec<u64> = if k == 1 {
        vec![1]
    } else {
        (1..k).map(|j| modp::pow(omega, j, l)).collect()
    };

    // values[j][d] = σ_j(det) evaluated at t = d.
    let mut per_embedding = Vec::with_capacity(embeds.len());
    for &w in &embeds {
        let wp: Vec<u64> = (0..dim as u64).map(|i| modp::pow(w, i, l)).collect();
        // Entry polynomials in t with coefficients already embedded.
        let polys: Vec<Vec<Vec<u64>>> = m
            .iter()
            .zip(lows)
            .map(|(row, &lo)| {
                row.iter()
                    .map(|e| {
                        let top = e.keys().next_back().map_or(0, |&h| (h - lo) as usize + 1);
                        let mut p = vec![0u64; top];
                        for (&ex, cs) in e {
                            let mut acc = 0u64;
                            for (c, &w) in cs.iter().zip(&wp) {
                                acc = modp::add(acc, modp::mul(modp::reduce_i64(*c, l), w, l), l);
                            }
                            p[(ex - lo) as usize] = acc;
                        }
                        p
                    })
                    .collect()
            })
            .collect();
        let mut vals = Vec::with_capacity(npts);
        let mut mat = vec![0u64; n * n];
        for tau in 0..npts as u64 {
            for i in 0..n {
                for j in 0..n {
                    let p = &polys[i][j];
                    mat[i * n + j] = p
                        .iter()
                        .rev()
                        .fold(0, |acc, &c| modp::add(modp::mul(acc, tau, l), c, l));
                }
            }
            vals.push(det_fp(&mut mat, n, l));
        }
        per_embedding.push(interpolate(&vals, l));
    }

    // Undo the embeddings: V[j][i] = embeds[j]^i.
    let vinv = if k == 1 {
        vec![vec![1u64]]
    } else {
        let v: Vec<Vec<u64>> = embeds
            .iter()
            .map(|&w| (0..dim as u64).map(|i| modp::pow(w, i, l)).collect())
            .collect();
        invert_fp(v, l)
    };
    (0..npts)
        .map(|d| {
            (0..dim)
                .map(|i| {
                    let mut acc = 0u64;
                    for (j, row) in per_embedding.iter().enumerate() {
                        acc = modp::add(acc, modp::mul(vinv[i][j], row[d], l), l);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Determinant mod `l` by Gaussian elimination; clobbers `a`.
pub fn det_fp(a: &mut [u64], n: usize, l: u64) -> u64 {
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| a[r * n + col] != 0) else {
            return 0;
        };
        if piv != col {
            for j in 0..n {
                a.swap(piv * n + j, col * n + j);
            }
            det = modp::sub(0, det, l);
        }
        let p = a[col * n + col];
        det = modp::mul(det, p, l);
        let inv = modp::inv(p, l).expect("prime modulus");
        for r in col + 1..n {
            let f = modp::mul(a[r * n + col], inv, l);
            if f == 0 {
                continue;
            }
            for j in col..n {
                let v = modp::mul(f, a[col * n + j], l);
                a[r * n + j] = modp::sub(a[r * n + j], v, l);
            }
        }
    }
    det
}

/// Coefficients of the polynomial taking `vals[i]` at `t = i`.
fn interpolate(vals: &[u64], l: u64) -> Vec<u64> {
    let n = vals.len();
    // Newton divided differences on nodes 0..n.
    let mut dd = vals.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = modp::sub(dd[i], dd[i - 1], l);
            let den = modp::inv(j as u64 % l, l).expect("small node gap");
            dd[i] = modp::mul(num, den, l);
        }
    }
    // Expand Σ dd[j] Π_{i<j} (t - i).
    let mut out = vec![0u64; n];
    let mut basis = vec![1u64];
    for (j, &c) in dd.iter().enumerate() {
        for (i, &b) in basis.iter().enumerate() {
            out[i] = modp::add(out[i], modp::mul(c, b, l), l);
        }
        let node = modp::sub(0, j as u64 % l, l);
        let mut next = vec![0u64; basis.len() + 1];
        for (i, &b) in basis.iter().enumerate() {
            next[i + 1] = modp::add(next[i + 1], b, l);
            next[i] = modp::add(next[i], modp::mul(b, node, l), l);
        }
        basis = next;
    }
    out
}

fn invert_fp(mut a: Vec<Vec<u64>>, l: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut inv: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0).expect("Vandermonde is invertible");
        a.swap(piv, col);
        inv.swap(piv, col);
        let p = modp::inv(a[col][col], l).unwrap();
        for j in 0..n {
            a[col][j] = modp::mul(a[col][j], p, l);
            inv[col][j] = modp::mul(inv[col][j], p, l);
        }
        for r in 0..n {
            if r == col || a[r][col] == 0 {
                continue;
            }
            let f = a[r][col];
            for j in 0..n {
                let x = modp::mul(f, a[col][j], l);
                a[r][j] = modp::sub(a[r][j], x, l);
                let y = modp::mul(f, inv[col][j], l);
                inv[r][j] = modp::sub(inv[r][j], y, l);
            }
        }
    }
    inv
}

/// Garner reconstruction followed by the symmetric lift.
pub fn crt_symmetric(res: &[u64], primes: &[u64]) -> BigInt {
    let mut x = BigInt::zero();
    let mut m = BigInt::one();
    for (&r, &p) in res.iter().zip(primes) {
        let pb = BigInt::from(p);
        let xm: u64 = x.mod_floor(&pb).try_into().unwrap();
        let mm: u64 = m.mod_floor(&pb).try_into().unwrap();
        let delta = modp::mul(modp::sub(r, xm, p), modp::inv(mm, p).unwrap(), p);
        x += &m * delta;
        m *= pb;
    }
    let half: BigInt = &m >> 1;
    if x > half {
        x -= &m;
    }
    debug_assert!(x.abs() <= half);
    x
}
