//! Integer utilities for divisor posets: totients, divisor lists and the
//! prime-quotient cover relation.

use std::collections::BTreeSet;

use super::LatticeError;

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            return false;
        }
        p += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending. Empty for `n <= 1`.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All positive divisors of `n`, ascending. Empty for `n = 0`.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient. Zero is rejected.
pub fn totient(d: usize) -> Result<usize, LatticeError> {
    if d == 0 {
        return Err(LatticeError::InvalidParameter(
            "totient is undefined at 0".into(),
        ));
    }
    Ok(phi(d))
}

/// Totient for arguments already known to be positive.
pub(crate) fn phi(d: usize) -> usize {
    debug_assert!(d > 0);
    prime_divisors(d)
        .into_iter()
        .fold(d, |acc, p| acc / p * (p - 1))
}

/// Cover pairs `(d, d')` of the divisor poset of `n`: both divide `n` and
/// `d'/d` is prime.
pub fn divisor_cover_pairs(n: usize) -> BTreeSet<(usize, usize)> {
    let divs = divisors(n);
    let mut out = BTreeSet::new();
    for &d in &divs {
        for p in prime_divisors(n / d) {
            out.insert((d, d * p));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_phi(n: usize) -> usize {
        (1..=n).filter(|&k| gcd(k, n) == 1).count()
    }

    #[test]
    fn totient_values() {
        assert_eq!(totient(1).unwrap(), 1);
        assert_eq!(totient(6).unwrap(), 2);
        assert_eq!(totient(12).unwrap(), 4);
        assert!(totient(0).is_err());
        for n in 1..300 {
            assert_eq!(phi(n), brute_phi(n), "phi({n})");
        }
    }

    #[test]
    fn covers_of_twelve() {
        let expected: BTreeSet<_> = [(1, 2), (1, 3), (2, 4), (2, 6), (3, 6), (4, 12), (6, 12)]
            .into_iter()
            .collect();
        assert_eq!(divisor_cover_pairs(12), expected);
        assert!(divisor_cover_pairs(1).is_empty());
        assert_eq!(divisor_cover_pairs(7), [(1, 7)].into_iter().collect());
    }

    #[test]
    fn covers_match_brute_force() {
        for n in 1..200 {
            let mut brute = BTreeSet::new();
            for d in 1..=n {
                for e in 1..=n {
                    if n % d == 0 && n % e == 0 && e % d == 0 && is_prime(e / d) {
                        brute.insert((d, e));
                    }
                }
            }
            assert_eq!(divisor_cover_pairs(n), brute, "n = {n}");
        }
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(lcm(4, 6), 12);
    }
}
