use std::fmt;

use serde::Serialize;

use super::fraction::Fraction;
use super::plat::Diagram;
use crate::error::{Error, Result};

/// A generator with exponent ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Letter {
    pub gen: usize,
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: usize, exp: i8) -> Self {
        debug_assert!(exp == 1 || exp == -1);
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, exp: -self.exp }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FreeWord(pub Vec<Letter>);

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn from_signed(letters: &[i64]) -> Self {
        FreeWord(
            letters
                .iter()
                .map(|&s| Letter::new(s.unsigned_abs() as usize - 1, s.signum() as i8))
                .collect(),
        )
    }

    pub fn gen(g: usize) -> Self {
        FreeWord(vec![Letter::new(g, 1)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Free reduction.
    pub fn reduced(&self) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[0] != w[1].inverse())
    }

    pub fn concat(&self, o: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        FreeWord(v)
    }

    pub fn inverse(&self) -> Self {
        FreeWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.0.iter().map(|l| l.exp as i64).sum()
    }

    /// Signed 1-based indices.
    pub fn to_signed(&self) -> Vec<i64> {
        self.0.iter().map(|l| (l.gen as i64 + 1) * l.exp as i64).collect()
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_signed().iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Deficiency-one presentation of a knot group in which every generator
/// is a meridian (so abelianization sends each generator to `t`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotPresentation {
    pub generators: usize,
    pub relators: Vec<FreeWord>,
    /// Preferred meridian (0-based).
    pub meridian: usize,
}

impl KnotPresentation {
    pub fn new(generators: usize, relators: Vec<FreeWord>, meridian: usize) -> Result<Self> {
        if meridian >= generators {
            return Err(Error::invalid("meridian index out of range"));
        }
        if relators.len() + 1 != generators {
            return Err(Error::invalid(format!(
                "{} relators for {} generators is not deficiency one",
                relators.len(),
                generators
            )));
        }
        for r in &relators {
            if r.0.iter().any(|l| l.gen >= generators) {
                return Err(Error::invalid("relator uses an unknown generator"));
            }
            if r.exponent_sum() != 0 {
                return Err(Error::invalid("relator does not abelianize to zero"));
            }
        }
        Ok(KnotPresentation { generators, relators, meridian })
    }

    pub fn with_meridian(&self, meridian: usize) -> Result<Self> {
        Self::new(self.generators, self.relators.clone(), meridian)
    }

    /// Plain text: header `generators meridian` (meridian 1-based), then
    /// one relator per line as signed 1-based generator indices.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.generators, self.meridian + 1);
        for r in &self.relators {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::invalid("empty presentation"))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::invalid(format!("bad header {header:?}"))))
            .collect::<Result<_>>()?;
        let [g, mu] = nums[..] else {
            return Err(Error::invalid("header needs generator count and meridian"));
        };
        if mu == 0 {
            return Err(Error::invalid("meridian index is 1-based"));
        }
        let mut rels = Vec::new();
        for line in lines {
            let signed: Vec<i64> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::invalid(format!("bad letter {t:?}"))))
                .collect::<Result<_>>()?;
            if signed.contains(&0) {
                return Err(Error::invalid("generator indices are 1-based"));
            }
            rels.push(FreeWord::from_signed(&signed));
        }
        Self::new(g, rels, mu - 1)
    }
}

/// `x_j x_a x_j⁻¹ x_b⁻¹`.
fn wirtinger_word(j: usize, a: usize, b: usize) -> FreeWord {
    FreeWord(vec![Letter::new(j, 1), Letter::new(a, 1), Letter::new(j, -1), Letter::new(b, -1)])
}

/// One generator per arc, one relator per crossing, the last crossing's
/// relator dropped. Arc 0 is the preferred meridian.
pub fn wirtinger_presentation(d: &Diagram) -> Result<KnotPresentation> {
    wirtinger_dropping(d, d.crossings.len() - 1)
}

/// As [`wirtinger_presentation`], dropping the relator of crossing `drop`.
pub fn wirtinger_dropping(d: &Diagram, drop: usize) -> Result<KnotPresentation> {
    if drop >= d.crossings.len() {
        return Err(Error::invalid("no such crossing"));
    }
    let rels = d
        .crossings
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != drop)
        .map(|(_, c)| {
            // Positive crossing: x_out = x_over x_in x_over⁻¹.
            if c.sign > 0 {
                wirtinger_word(c.over, c.under_in, c.under_out)
            } else {
                wirtinger_word(c.over, c.under_out, c.under_in)
            }
        })
        .collect();
    KnotPresentation::new(d.arcs, rels, 0)
}

/// `⟨a, b | a w b⁻¹ w⁻¹⟩` with `w = b^{ε₁} a^{ε₂} b^{ε₃} …`,
/// `εᵢ = (-1)^{⌊iq/p⌋}` for odd `q` (even `q` is replaced by `q - p`).
pub fn schubert_presentation(f: Fraction) -> KnotPresentation {
    let p = f.p as i64;
    let q = if f.q % 2 == 0 { f.q as i64 - p } else { f.q as i64 };
    let mut w = Vec::with_capacity(f.p as usize - 1);
    for i in 1..p {
        let e = if (i * q).div_euclid(p) % 2 == 0 { 1 } else { -1 };
        let gen = if i % 2 == 1 { 1 } else { 0 };
        w.push(Letter::new(gen, e));
    }
    let w = FreeWord(w);
    let rel = FreeWord::gen(0)
        .concat(&w)
        .concat(&FreeWord(vec![Letter::new(1, -1)]))
        .concat(&w.inverse());
    KnotPresentation::new(2, vec![rel], 0).expect("Schubert relator is balanced")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::knot_presentation;

    #[test]
    fn wirtinger_shapes() {
        let pres = knot_presentation(Fraction::new(225, 94).unwrap()).unwrap();
        assert_eq!(pres.generators, 16);
        assert_eq!(pres.relators.len(), 15);
        for r in &pres.relators {
            let l = r.letters();
            assert_eq!(l.len(), 4);
            assert_eq!(l[0].gen, l[2].gen);
            assert_eq!((l[0].exp, l[1].exp, l[2].exp, l[3].exp), (1, 1, -1, -1));
            assert_eq!(r.exponent_sum(), 0);
        }
    }

    #[test]
    fn schubert_lengths() {
        let s = schubert_presentation(Fraction::new(225, 94).unwrap());
        assert_eq!(s.relators[0].len(), 450);
        let t = schubert_presentation(Fraction::new(3, 1).unwrap());
        // a·(b a⁻¹)… for 3/1: w = b a, relator a b a b⁻¹ a⁻¹ b⁻¹.
        assert_eq!(t.relators[0].to_signed(), vec![1, 2, 1, -2, -1, -2]);
    }

    #[test]
    fn text_round_trip() {
        let pres = knot_presentation(Fraction::new(9, 4).unwrap()).unwrap();
        let txt = pres.to_text();
        assert!(txt.starts_with("6 1\n"));
        assert_eq!(KnotPresentation::from_text(&txt).unwrap(), pres);
        assert!(KnotPresentation::from_text("3 1\n1 2 -1 -3\n").is_err());
    }

    #[test]
    fn reduction() {
        let w = FreeWord::from_signed(&[1, 2, -2, -1, 3]);
        assert!(!w.is_reduced());
        assert_eq!(w.reduced(), FreeWord::from_signed(&[3]));
    }
}
