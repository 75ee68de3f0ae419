//! Cyclotomic polynomials, the index sets `D(n, m) = { d : lcm(m, d) = m*n }`
//! that split `Phi_n(x^m)`, and executable checks of the classical product
//! identities.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::arith::{divisors, euler_phi, gcd, is_prime, lcm};
use crate::error::{Error, Result};
use crate::IntPoly;

type Cache = RwLock<HashMap<usize, Arc<IntPoly>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `x^n - 1`.
pub fn x_pow_minus_one(n: usize) -> IntPoly {
    IntPoly::trinomial(n, 0, BigInt::from(0), BigInt::from(-1))
}

/// `x^n + 1`.
pub fn x_pow_plus_one(n: usize) -> IntPoly {
    IntPoly::trinomial(n, 0, BigInt::from(0), BigInt::from(1))
}

/// The `n`-th cyclotomic polynomial, memoized.
///
/// Computed as `(x^n - 1) / prod(Phi_d : d | n, d < n)`; every division is
/// by a monic polynomial and therefore exact over the integers.
pub fn cyclotomic(n: usize) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic index must be positive");
    if let Some(p) = cache().read().expect("cache poisoned").get(&n) {
        return Arc::clone(p);
    }
    let mut acc = x_pow_minus_one(n);
    for d in divisors(n) {
        if d == n {
            break;
        }
        acc = acc
            .div_exact(&cyclotomic(d))
            .expect("Phi_d divides x^n - 1");
    }
    let mut guard = cache().write().expect("cache poisoned");
    // first writer wins; later computations of the same key are identical
    Arc::clone(guard.entry(n).or_insert_with(|| Arc::new(acc)))
}

/// `Phi_n(x^m)`.
pub fn cyclotomic_of_power(n: usize, m: usize) -> IntPoly {
    cyclotomic(n).compose_power(m)
}

/// The indices `d` with `lcm(m, d) = m*n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicIndexSet {
    pub n: usize,
    pub m: usize,
    /// Ascending.
    pub indices: Vec<usize>,
}

impl CyclotomicIndexSet {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// `sum(phi(d))`, which must equal `m * phi(n)`.
    pub fn total_degree(&self) -> usize {
        self.indices.iter().map(|&d| euler_phi(d)).sum()
    }
}

pub fn index_set(n: usize, m: usize) -> CyclotomicIndexSet {
    assert!(n >= 1 && m >= 1);
    let target = m * n;
    let indices = divisors(target)
        .into_iter()
        .filter(|&d| lcm(m, d) == target)
        .collect();
    CyclotomicIndexSet { n, m, indices }
}

/// `Phi_n(x^m)` expanded as the product of `Phi_d` over [`index_set`],
/// checked against direct composition.
pub fn expand_phi_of_power(n: usize, m: usize) -> Result<(CyclotomicIndexSet, IntPoly)> {
    let set = index_set(n, m);
    let product: IntPoly = set
        .indices
        .iter()
        .map(|&d| (*cyclotomic(d)).clone())
        .product();
    if product != cyclotomic_of_power(n, m) {
        return Err(Error::IdentityViolation(format!(
            "Phi_{n}(x^{m}) differs from the product over D({n}, {m}) = {:?}",
            set.indices
        )));
    }
    Ok((set, product))
}

fn require_prime(p: usize) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{p} is not prime")))
    }
}

/// `Phi_{pn} = Phi_n(x^p)` when `p | n`, and `Phi_n(x^p) / Phi_n` otherwise.
pub fn verify_identity_a(p: usize, n: usize) -> Result<bool> {
    require_prime(p)?;
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let lhs = cyclotomic(p * n);
    let composed = cyclotomic_of_power(n, p);
    let rhs = if n.is_multiple_of(p) {
        Some(composed)
    } else {
        composed.div_exact(&cyclotomic(n))
    };
    Ok(rhs.as_ref() == Some(&*lhs))
}

/// For `gcd(p, n) = 1`:
/// `prod(Phi_d : d | p^gamma n) = prod_{i <= gamma} prod(Phi_{p^i d} : d | n)`,
/// and both sides equal `x^(p^gamma n) - 1`.
pub fn verify_identity_c(p: usize, gamma: u32, n: usize) -> Result<bool> {
    require_prime(p)?;
    if n == 0 || gcd(p, n) != 1 {
        return Err(Error::Precondition(format!("need gcd({p}, {n}) = 1")));
    }
    let big = p.pow(gamma) * n;
    let lhs: IntPoly = divisors(big)
        .into_iter()
        .map(|d| (*cyclotomic(d)).clone())
        .product();
    let rhs: IntPoly = (0..=gamma)
        .flat_map(|i| divisors(n).into_iter().map(move |d| p.pow(i) * d))
        .map(|d| (*cyclotomic(d)).clone())
        .product();
    Ok(lhs == rhs && lhs == x_pow_minus_one(big))
}

/// `x^n + 1 = prod(Phi_d : d | 2n, d does not divide n)`; for odd `n` this
/// is also `prod(Phi_{2d} : d | n)`.
pub fn verify_x_pow_plus_one(n: usize) -> bool {
    assert!(n >= 1);
    let target = x_pow_plus_one(n);
    let general: IntPoly = divisors(2 * n)
        .into_iter()
        .filter(|d| !n.is_multiple_of(*d))
        .map(|d| (*cyclotomic(d)).clone())
        .product();
    if general != target {
        return false;
    }
    if n % 2 == 1 {
        let doubled: IntPoly = divisors(n)
            .into_iter()
            .map(|d| (*cyclotomic(2 * d)).clone())
            .product();
        return doubled == target;
    }
    true
}

/// `gcd(prod_{d|n} Phi_d, prod_{d|m} Phi_d) = prod_{d|(n,m)} Phi_d`,
/// i.e. `gcd(x^n - 1, x^m - 1) = x^(n,m) - 1`.
pub fn verify_identity_d(n: usize, m: usize) -> Result<bool> {
    if n == 0 || m == 0 {
        return Err(Error::Precondition("n and m must be positive".into()));
    }
    let prod = |k: usize| -> IntPoly {
        divisors(k)
            .into_iter()
            .map(|d| (*cyclotomic(d)).clone())
            .product()
    };
    let g = gcd(n, m);
    let lhs = prod(n).gcd_primitive(&prod(m));
    Ok(lhs == prod(g) && lhs == x_pow_minus_one(g))
}

/// Returns `n` if `f = Phi_n`.
///
/// Candidates are the `n` with `phi(n) = deg f`; `phi(n) >= sqrt(n/2)`
/// bounds them by `2 deg(f)^2`.
pub fn recognize_cyclotomic(f: &IntPoly) -> Option<usize> {
    let k = f.degree().filter(|&k| k >= 1)?;
    let one = BigInt::from(1);
    if f.leading_coeff() != Some(&one) {
        return None;
    }
    let c0 = f.constant_term();
    if c0 != one && c0 != -one.clone() {
        return None;
    }
    let bound = (2 * k * k).max(2);
    (1..=bound).find(|&n| euler_phi(n) == k && *cyclotomic(n) == *f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_slice(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), p(&[-1, 1]));
        assert_eq!(*cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(*cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(*cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        // first cyclotomic polynomial with a coefficient of absolute value 2
        assert_eq!(cyclotomic(105).max_norm(), BigInt::from(2));
    }

    #[test]
    fn index_sets() {
        assert_eq!(index_set(3, 2).indices, vec![3, 6]);
        assert_eq!(index_set(7, 1).indices, vec![7]);
        let brute: Vec<usize> = (1..=12).filter(|&d| lcm(2, d) == 12).collect();
        assert_eq!(index_set(6, 2).indices, brute);
        assert_eq!(brute, vec![12]);
    }

    #[test]
    fn expansions() {
        let (set, prod) = expand_phi_of_power(3, 2).unwrap();
        assert_eq!(set.indices, vec![3, 6]);
        assert_eq!(prod, p(&[1, 0, 1, 0, 1]));
        let (set, prod) = expand_phi_of_power(6, 2).unwrap();
        assert_eq!(set.indices, vec![12]);
        assert_eq!(prod, p(&[1, 0, -1, 0, 1]));
        let (_, prod) = expand_phi_of_power(10, 1).unwrap();
        assert_eq!(prod, *cyclotomic(10));
    }

    #[test]
    fn identity_examples() {
        assert!(verify_identity_a(2, 2).unwrap());
        assert!(verify_identity_a(3, 5).unwrap());
        assert!(verify_identity_c(2, 1, 3).unwrap());
        assert!(verify_x_pow_plus_one(3));
        assert!(verify_identity_d(6, 4).unwrap());
        assert!(verify_identity_a(4, 3).is_err());
        assert!(verify_identity_c(3, 1, 6).is_err());
    }

    #[test]
    fn recognition() {
        assert_eq!(recognize_cyclotomic(&p(&[1, -1, 1])), Some(6));
        assert_eq!(recognize_cyclotomic(&p(&[2, 1, 1])), None);
        assert_eq!(recognize_cyclotomic(&p(&[-1, 1])), Some(1));
        assert_eq!(recognize_cyclotomic(&p(&[1, 1])), Some(2));
        assert_eq!(recognize_cyclotomic(&p(&[1, 1, 0, 1])), None);
    }

    #[test]
    fn concurrent_cache_access_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|t| {
                std::thread::spawn(move || {
                    (1..80)
                        .map(|n| cyclotomic(n + t).degree())
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let degs = h.join().unwrap();
            for (i, d) in degs.into_iter().enumerate() {
                assert_eq!(d, Some(euler_phi(i + 1 + t)));
            }
        }
    }
}
