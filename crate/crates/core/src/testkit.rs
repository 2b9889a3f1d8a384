//! Shared proptest strategies.

use num_integer::Integer;
use proptest::prelude::*;

use crate::knot::Fraction;

/// `K(p/q)` with `p` odd in `3..=max_p`.
pub fn fraction(max_p: u64) -> impl Strategy<Value = Fraction> {
    (1..=(max_p - 1) / 2)
        .prop_flat_map(|h| {
            let p = 2 * h + 1;
            (Just(p), 1..p)
        })
        .prop_filter_map("q must be a unit", |(p, q)| (p.gcd(&q) == 1).then_some(Fraction { p, q }))
}

/// `K(p/q)` with `k | p`.
pub fn fraction_with_factor(k: u64, max_p: u64) -> impl Strategy<Value = Fraction> {
    (0..=(max_p / k - 1) / 2)
        .prop_flat_map(move |h| {
            let p = k * (2 * h + 1);
            (Just(p), 1..p)
        })
        .prop_filter_map("q must be a unit", |(p, q)| (p.gcd(&q) == 1).then_some(Fraction { p, q }))
}
