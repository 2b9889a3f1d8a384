//! Word-sized modular arithmetic: moduli below `2^62`, products in `u128`.

#[inline]
pub fn add(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base, m);
        }
        base = mul(base, base, m);
        e >>= 1;
    }
    acc
}

/// Inverse modulo any `m` via the extended Euclidean algorithm.
pub fn inv(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u64)
}

/// Reduce a signed integer into `[0, m)`.
#[inline]
pub fn reduce_i64(x: i64, m: u64) -> u64 {
    (x as i128).rem_euclid(m as i128) as u64
}

/// Deterministic Miller-Rabin, exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Multiplicative order of `a` modulo the prime `r`.
pub fn order(a: u64, r: u64) -> u64 {
    let a = a % r;
    if a == 0 {
        return 0;
    }
    let mut n = r - 1;
    let mut ord = n;
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            while n % f == 0 {
                n /= f;
            }
            while ord % f == 0 && pow(a, ord / f, r) == 1 {
                ord /= f;
            }
        }
        f += 1;
    }
    if n > 1 && pow(a, ord / n, r) == 1 {
        ord /= n;
    }
    ord
}

/// All elements of exact order `k` in `F_r^*`, ascending. Empty unless
/// `k | r - 1`.
pub fn elements_of_order(k: u64, r: u64) -> Vec<u64> {
    if k == 0 || (r - 1) % k != 0 {
        return Vec::new();
    }
    (1..r).filter(|&b| order(b, r) == k).collect()
}

/// A primitive `k`-th root of unity modulo the prime `l`, `k` prime and
/// `k | l - 1`.
pub fn primitive_root_of_unity(k: u64, l: u64) -> Option<u64> {
    if k == 1 {
        return Some(1);
    }
    if (l - 1) % k != 0 {
        return None;
    }
    (2..l).map(|g| pow(g, (l - 1) / k, l)).find(|&w| w != 1)
}

/// Primes `r <= bound` with `r ≡ 1 (mod k)`, ascending.
pub fn primes_congruent_one(k: u64, bound: u64) -> Vec<u64> {
    (2..=bound).filter(|&r| r % k == 1 % k && is_prime(r)).collect()
}

/// Word-sized primes `l ≡ 1 (mod 2k)` counting down from `2^62`; used
/// for multimodular reconstruction.
pub fn large_primes(k: u64, count: usize) -> Vec<u64> {
    let step = 2 * k.max(1);
    let top = (1u64 << 62) - 1;
    let mut l = top - (top % step) + 1;
    if l > top {
        l -= step;
    }
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        if is_prime(l) {
            out.push(l);
        }
        l -= step;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixteen_has_order_seven_mod_29() {
        assert_eq!(pow(16, 7, 29), 1);
        assert_eq!(order(16, 29), 7);
        assert!(elements_of_order(7, 29).contains(&16));
        assert_eq!(elements_of_order(7, 29).len(), 6);
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(!is_prime(3215031751));
        assert!(is_prime((1u64 << 61) - 1));
    }

    #[test]
    fn large_primes_are_congruent() {
        for l in large_primes(7, 3) {
            assert!(is_prime(l));
            assert_eq!(l % 14, 1);
            let w = primitive_root_of_unity(7, l).unwrap();
            assert_eq!(pow(w, 7, l), 1);
            assert_ne!(w, 1);
        }
    }

    #[test]
    fn inverse_roundtrip() {
        for a in 1..29 {
            assert_eq!(mul(a, inv(a, 29).unwrap(), 29), 1);
        }
        assert_eq!(inv(6, 9), None);
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #[test]
        fn inverse_and_primality(a in 1u64..10_000, n in 2u64..20_000) {
            let trial = (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0);
            prop_assert_eq!(is_prime(n), trial);
            if let Some(i) = inv(a, n) {
                prop_assert_eq!(mul(a % n, i, n), 1 % n);
            } else {
                prop_assert!(num_integer::gcd(a, n) != 1);
            }
        }

        #[test]
        fn roots_of_unity(k in prop::sample::select(vec![3u64, 5, 7, 11]), bound in 50u64..400) {
            for r in primes_congruent_one(k, bound) {
                for b in elements_of_order(k, r) {
                    prop_assert_eq!(pow(b, k, r), 1);
                    prop_assert_eq!(order(b, r), k);
                }
                prop_assert_eq!(elements_of_order(k, r).len() as u64, k - 1);
            }
        }
    }
}
