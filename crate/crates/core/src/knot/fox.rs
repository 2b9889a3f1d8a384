use std::collections::BTreeMap;
use std::fmt;

use super::presentation::{FreeWord, Letter};

/// Finite `Z`-linear combination of reduced words in the free group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement(BTreeMap<FreeWord, i64>);

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: &FreeWord, c: i64) -> Self {
        let mut out = Self::zero();
        out.add_word(w, c);
        out
    }

    pub fn one() -> Self {
        Self::word(&FreeWord::empty(), 1)
    }

    pub fn add_word(&mut self, w: &FreeWord, c: i64) {
        if c == 0 {
            return;
        }
        let w = w.reduced();
        let e = self.0.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.0.remove(&w);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, i64)> {
        self.0.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (w, &c) in &o.0 {
            out.add_word(w, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElement(self.0.iter().map(|(w, &c)| (w.clone(), -c)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (u, &a) in &self.0 {
            for (v, &b) in &o.0 {
                out.add_word(&u.concat(v), a * b);
            }
        }
        out
    }

    /// Left multiplication by a group element.
    pub fn left_mul(&self, w: &FreeWord) -> Self {
        let mut out = Self::zero();
        for (v, &c) in &self.0 {
            out.add_word(&w.concat(v), c);
        }
        out
    }

    /// Image under the abelianization sending every generator to `t`:
    /// exponent ↦ coefficient.
    pub fn abelianize(&self) -> BTreeMap<i64, i64> {
        let mut out = BTreeMap::new();
        for (w, &c) in &self.0 {
            *out.entry(w.exponent_sum()).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.0.iter().map(|(w, c)| format!("{c}*[{w}]")).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `∂w/∂x_g`: each occurrence `x_g` contributes its prefix, each
/// `x_g⁻¹` contributes minus its prefix times `x_g⁻¹`.
pub fn fox_derivative(w: &FreeWord, g: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let letters = w.letters();
    for (i, l) in letters.iter().enumerate() {
        if l.gen != g {
            continue;
        }
        if l.exp > 0 {
            out.add_word(&FreeWord(letters[..i].to_vec()), 1);
        } else {
            out.add_word(&FreeWord(letters[..=i].to_vec()), -1);
        }
    }
    out
}

/// Abelianized Fox derivatives of `w` with respect to every generator
/// in one pass; entry `g` maps exponent ↦ coefficient.
pub fn abelian_fox_row(w: &FreeWord, generators: usize) -> Vec<BTreeMap<i64, i64>> {
    let mut row = vec![BTreeMap::new(); generators];
    let mut deg = 0i64;
    for &Letter { gen, exp } in w.letters() {
        if exp > 0 {
            *row[gen].entry(deg).or_insert(0) += 1;
            deg += 1;
        } else {
            deg -= 1;
            *row[gen].entry(deg).or_insert(0) -= 1;
        }
    }
    for e in &mut row {
        e.retain(|_, c| *c != 0);
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[i64]) -> FreeWord {
        FreeWord::from_signed(s)
    }

    #[test]
    fn defining_identities() {
        assert_eq!(fox_derivative(&w(&[1]), 0), GroupRingElement::one());
        assert_eq!(fox_derivative(&w(&[-1]), 0), GroupRingElement::word(&w(&[-1]), -1));
        assert!(fox_derivative(&w(&[2]), 0).is_zero());
    }

    #[test]
    fn commutator() {
        let d = fox_derivative(&w(&[1, 2, -1, -2]), 0);
        let mut expect = GroupRingElement::one();
        expect.add_word(&w(&[1, 2, -1]), -1);
        assert_eq!(d, expect);
    }

    #[test]
    fn product_rule() {
        let u = w(&[1, 2, -1, 3, 1]);
        let v = w(&[-2, 1, 1, -3]);
        for g in 0..3 {
            let lhs = fox_derivative(&u.concat(&v), g);
            let rhs = fox_derivative(&u, g).add(&fox_derivative(&v, g).left_mul(&u));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn fused_row_matches_symbolic() {
        let r = w(&[1, 2, -1, -3, 2, 2, -1]);
        let row = abelian_fox_row(&r, 3);
        for g in 0..3 {
            assert_eq!(row[g], fox_derivative(&r, g).abelianize());
        }
    }
}
