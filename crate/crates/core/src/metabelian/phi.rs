//! The representation `x ↦ [[0, ξ^{-v}], [t ξ^{v}, 0]]` on monomial
//! matrices, and Fox derivatives pushed through it.

use std::collections::BTreeMap;

use super::character::Character;
use crate::arith::det::ZEntry;
use crate::knot::FreeWord;

/// 2×2 matrix with one entry `ξ^a t^b` per row: row `r` has its entry in
/// column `r` (diagonal) or `1 - r` (anti-diagonal).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonoMat {
    pub anti: bool,
    /// `(ξ exponent mod k, t exponent)` per row.
    pub e: [(u64, i64); 2],
}

impl MonoMat {
    pub fn identity() -> Self {
        MonoMat { anti: false, e: [(0, 0), (0, 0)] }
    }

    pub fn col(&self, row: usize) -> usize {
        if self.anti {
            1 - row
        } else {
            row
        }
    }

    pub fn mul(&self, o: &Self, k: u64) -> Self {
        let mut e = [(0, 0); 2];
        for (r, slot) in e.iter_mut().enumerate() {
            let mid = self.col(r);
            let (a1, b1) = self.e[r];
            let (a2, b2) = o.e[mid];
            *slot = ((a1 + a2) % k, b1 + b2);
        }
        MonoMat { anti: self.anti != o.anti, e }
    }

    /// `Φ(x_g^{±1})` for the character.
    pub fn generator(ch: &Character, g: usize, exp: i8) -> Self {
        let k = ch.k;
        let v = ch.values[g] % k;
        let neg = (k - v) % k;
        if exp > 0 {
            MonoMat { anti: true, e: [(neg, 0), (v, 1)] }
        } else {
            MonoMat { anti: true, e: [(neg, -1), (v, 0)] }
        }
    }

    pub fn of_word(ch: &Character, w: &FreeWord) -> Self {
        w.letters()
            .iter()
            .fold(Self::identity(), |acc, l| acc.mul(&Self::generator(ch, l.gen, l.exp), ch.k))
    }
}

/// Sparse 2×2 block: `(row, col) ↦ (t exponent, ξ exponent) ↦ count`.
pub type Block = [[BTreeMap<(i64, u64), i64>; 2]; 2];

fn empty_block() -> Block {
    Default::default()
}

fn add_mono(b: &mut Block, m: &MonoMat, c: i64) {
    for r in 0..2 {
        let (a, t) = m.e[r];
        let slot = b[r][m.col(r)].entry((t, a)).or_insert(0);
        *slot += c;
    }
}

/// Images under `Φ` of all Fox derivatives of `w`, one running prefix
/// product for the whole word.
pub fn fox_row_image(ch: &Character, w: &FreeWord, generators: usize) -> Vec<Block> {
    let mut row: Vec<Block> = (0..generators).map(|_| empty_block()).collect();
    let mut prefix = MonoMat::identity();
    for l in w.letters() {
        let step = MonoMat::generator(ch, l.gen, l.exp);
        if l.exp > 0 {
            add_mono(&mut row[l.gen], &prefix, 1);
            prefix = prefix.mul(&step, ch.k);
        } else {
            prefix = prefix.mul(&step, ch.k);
            add_mono(&mut row[l.gen], &prefix, -1);
        }
    }
    row
}

/// Power-basis integer coefficients of a block entry.
pub fn entry_to_z(e: &BTreeMap<(i64, u64), i64>, k: u64) -> ZEntry {
    let dim = (k - 1) as usize;
    let mut out: ZEntry = BTreeMap::new();
    for (&(t, a), &c) in e {
        if c == 0 {
            continue;
        }
        let v = out.entry(t).or_insert_with(|| vec![0; dim]);
        if (a as usize) < dim {
            v[a as usize] += c;
        } else {
            // ξ^{k-1} = -(1 + ξ + … + ξ^{k-2}).
            for x in v.iter_mut() {
                *x -= c;
            }
        }
    }
    out.retain(|_, v| v.iter().any(|&c| c != 0));
    out
}
