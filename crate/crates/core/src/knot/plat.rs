//! Plat closure of the 4-braid `σ₂^{c₁} σ₁^{-c₂} σ₂^{c₃} …`.
//!
//! Strand positions are 0..4 left to right; level `l` is the slice between
//! crossing `l-1` and crossing `l`, read top to bottom. The top is capped
//! `(0,1),(2,3)`; the bottom likewise for an odd number of blocks and
//! `(1,2),(0,3)` for an even number.

use serde::Serialize;

use super::fraction::EvenCF;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Crossing {
    /// Left position of the two strands that cross.
    pub pos: usize,
    /// Braid exponent sign (before mirroring).
    pub twist: i8,
    pub over: usize,
    pub under_in: usize,
    pub under_out: usize,
    /// Oriented crossing sign.
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Diagram {
    pub terms: Vec<i64>,
    pub mirrored: bool,
    pub arcs: usize,
    /// Crossings top to bottom.
    pub crossings: Vec<Crossing>,
}

struct Passage {
    level: usize,
    from: usize,
    to: usize,
    down: bool,
}

pub fn fourplat_diagram(cf: &EvenCF) -> Result<Diagram> {
    fourplat_from_terms(&cf.terms, cf.mirrored)
}

pub fn fourplat_from_terms(terms: &[i64], mirrored: bool) -> Result<Diagram> {
    if terms.is_empty() || terms.iter().any(|&c| c == 0) {
        return Err(Error::invalid("continued fraction terms must be nonzero"));
    }
    let mut levels: Vec<(usize, i8)> = Vec::new();
    for (i, &c) in terms.iter().enumerate() {
        let (pos, e) = if i % 2 == 0 { (1, c) } else { (0, -c) };
        let s = if e > 0 { 1 } else { -1 };
        levels.extend(std::iter::repeat((pos, s)).take(e.unsigned_abs() as usize));
    }
    let top = [(0usize, 1usize), (2, 3)];
    let bottom = if terms.len() % 2 == 1 { [(0, 1), (2, 3)] } else { [(1, 2), (0, 3)] };
    let partner = |caps: &[(usize, usize); 2], x: usize| {
        caps.iter()
            .find_map(|&(a, b)| if a == x { Some(b) } else if b == x { Some(a) } else { None })
            .unwrap()
    };

    let nl = levels.len();
    let mut visited = vec![[false; 4]; nl + 1];
    let mut seq: Vec<Passage> = Vec::new();
    let (mut l, mut x, mut down) = (0usize, 0usize, true);
    loop {
        visited[l][x] = true;
        if down {
            if l == nl {
                x = partner(&bottom, x);
                down = false;
            } else {
                let (pos, _) = levels[l];
                let y = if x == pos { pos + 1 } else if x == pos + 1 { pos } else { x };
                if y != x {
                    seq.push(Passage { level: l, from: x, to: y, down });
                }
                l += 1;
                x = y;
            }
        } else if l == 0 {
            x = partner(&top, x);
            down = true;
        } else {
            let (pos, _) = levels[l - 1];
            let y = if x == pos { pos + 1 } else if x == pos + 1 { pos } else { x };
            if y != x {
                seq.push(Passage { level: l - 1, from: x, to: y, down });
            }
            l -= 1;
            x = y;
        }
        if (l, x, down) == (0, 0, true) {
            break;
        }
    }
    if visited.iter().flatten().any(|v| !v) {
        return Err(Error::invalid("plat closure has more than one component"));
    }

    let n = seq.len();
    let is_over: Vec<bool> = seq
        .iter()
        .map(|ps| {
            let (pos, s) = levels[ps.level];
            let s = if mirrored { -s } else { s };
            let top_pos = if ps.down { ps.from } else { ps.to };
            (top_pos == pos) == (s == 1)
        })
        .collect();
    let unders: Vec<usize> = (0..n).filter(|&i| !is_over[i]).collect();
    let narcs = unders.len();
    let mut arc_of = vec![0usize; n];
    let mut in_arc = vec![0usize; n];
    let mut out_arc = vec![0usize; n];
    let start = (unders[0] + 1) % n;
    let mut a = 0usize;
    for off in 0..n {
        let i = (start + off) % n;
        arc_of[i] = a;
        if !is_over[i] {
            in_arc[i] = a;
            a += 1;
            out_arc[i] = a % narcs;
        }
    }

    let mut at_level: Vec<Vec<usize>> = vec![Vec::new(); nl];
    for (i, ps) in seq.iter().enumerate() {
        at_level[ps.level].push(i);
    }
    let dir = |ps: &Passage| (ps.to as i64 - ps.from as i64, if ps.down { -1 } else { 1 });
    let crossings = at_level
        .iter()
        .enumerate()
        .map(|(lvl, ids)| {
            let (io, iu) = if is_over[ids[0]] { (ids[0], ids[1]) } else { (ids[1], ids[0]) };
            let (vo, vu) = (dir(&seq[io]), dir(&seq[iu]));
            let z = vo.0 * vu.1 - vo.1 * vu.0;
            Crossing {
                pos: levels[lvl].0,
                twist: levels[lvl].1,
                over: arc_of[io],
                under_in: in_arc[iu],
                under_out: out_arc[iu],
                sign: if z > 0 { 1 } else { -1 },
            }
        })
        .collect();
    Ok(Diagram { terms: terms.to_vec(), mirrored, arcs: narcs, crossings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::fraction::{even_continued_fraction, Fraction};

    #[test]
    fn crossing_counts() {
        let d = fourplat_from_terms(&[2, -2], false).unwrap();
        assert_eq!(d.crossings.len(), 4);
        assert_eq!(d.arcs, 4);
        let cf = even_continued_fraction(Fraction::new(225, 94).unwrap());
        let d = fourplat_diagram(&cf).unwrap();
        assert_eq!(d.crossings.len(), 16);
        assert_eq!(d.arcs, 16);
    }

    #[test]
    fn single_term_closure_is_a_link() {
        assert!(fourplat_from_terms(&[2], false).is_err());
    }

    #[test]
    fn every_arc_ends_once() {
        let cf = even_continued_fraction(Fraction::new(1225, 466).unwrap());
        let d = fourplat_diagram(&cf).unwrap();
        let mut ends: Vec<usize> = d.crossings.iter().map(|c| c.under_in).collect();
        ends.sort();
        assert_eq!(ends, (0..d.arcs).collect::<Vec<_>>());
    }
}
