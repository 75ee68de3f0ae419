//! Small integer number theory used by the cyclotomic and trinomial code.

use num_integer::Integer;

/// Divisors of `n` in ascending order.
pub fn divisors(n: usize) -> Vec<usize> {
    assert!(n >= 1);
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn euler_phi(n: usize) -> usize {
    assert!(n >= 1);
    factorize(n)
        .into_iter()
        .fold(n, |acc, (p, _)| acc / p * (p - 1))
}

/// Largest power of two dividing `n`.
pub fn largest_even_part(n: usize) -> usize {
    assert!(n >= 1);
    1 << n.trailing_zeros()
}

/// Splits `n = p^k * rest` with `p` not dividing `rest`.
pub fn split_prime(mut n: usize, p: usize) -> (u32, usize) {
    assert!(n >= 1 && p >= 2);
    let mut k = 0;
    while n.is_multiple_of(p) {
        n /= p;
        k += 1;
    }
    (k, n)
}

pub fn gcd(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

pub fn lcm(a: usize, b: usize) -> usize {
    a.lcm(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, ascending primes.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let (k, rest) = split_prime(n, p);
            out.push((p, k));
            n = rest;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, k))` with `c = p^k`, `k >= 1`, when `c` is a prime power.
pub fn prime_power(c: u64) -> Option<(u64, u32)> {
    if c < 2 {
        return None;
    }
    match factorize(c as usize).as_slice() {
        [(p, k)] => Some((*p as u64, *k)),
        _ => None,
    }
}

/// Primes in `[lo, hi]`.
pub fn primes_in(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&n| is_prime(n))
}

/// Binomial coefficient as an arbitrary-precision integer.
pub fn binomial(n: usize, k: usize) -> num_bigint::BigInt {
    if k > n {
        return 0.into();
    }
    let k = k.min(n - k);
    let mut acc = num_bigint::BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_values() {
        assert_eq!(largest_even_part(12), 4);
        assert_eq!(largest_even_part(7), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(1), 1);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(split_prime(42, 2), (1, 21));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(binomial(10, 5), 252.into());
    }

    #[test]
    fn phi_matches_gcd_count() {
        for n in 1..300 {
            let count = (1..=n).filter(|&k| gcd(k, n) == 1).count();
            assert_eq!(euler_phi(n), count, "n = {n}");
        }
    }

    #[test]
    fn divisors_match_brute_force() {
        for n in 1..500 {
            let brute: Vec<_> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(divisors(n), brute);
        }
    }
}
