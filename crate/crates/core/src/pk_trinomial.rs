//! Trinomials `x^n + e1*x^m + e2*p^k` with a prime-power constant term.
//!
//! None of their roots lies in the closed unit disk once `k >= 2`, so every
//! irreducible factor has constant term divisible by `p`; together with
//! separability this caps the factorization at `k` distinct non-reciprocal
//! factors. For `m = 1` and `k >= 2` the trinomial is irreducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::trinomial::{Sign, TrinomialSpec};
use crate::unit_disk;
use crate::IntPoly;

fn sign_pow(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Closed-form discriminant of `x^n + a x^m + b`:
///
/// ```text
/// (-1)^(n(n-1)/2) b^(m-1) [ n^(n/d) b^((n-m)/d) - (-1)^(n/d) (n-m)^((n-m)/d) m^(m/d) a^(n/d) ]^d
/// ```
///
/// with `d = gcd(n, m)`.
pub fn trinomial_discriminant(n: usize, m: usize, a: &BigInt, b: &BigInt) -> Result<BigInt> {
    if m == 0 || m >= n {
        return Err(Error::InvalidSpec(format!(
            "need 1 <= m < n, got m = {m}, n = {n}"
        )));
    }
    if b.is_zero() {
        return Err(Error::ZeroConstant);
    }
    let d = n.gcd(&m);
    let pw = |base: &BigInt, e: usize| num_traits::pow(base.clone(), e);
    let nb = BigInt::from(n);
    let nm = BigInt::from(n - m);
    let mb = BigInt::from(m);
    let first = pw(&nb, n / d) * pw(b, (n - m) / d);
    let second = sign_pow(n / d) * pw(&nm, (n - m) / d) * pw(&mb, m / d) * pw(a, n / d);
    let bracket = first - second;
    Ok(sign_pow(n * (n - 1) / 2) * pw(b, m - 1) * pw(&bracket, d))
}

/// `(-1)^(n(n-1)/2) res(f, f') / lc(f)`.
pub fn discriminant_via_resultant(f: &IntPoly) -> Result<BigInt> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::Precondition("discriminant needs degree >= 1".into()));
    }
    let lc = f.leading_coeff().expect("non-zero").clone();
    let res = f.resultant(&f.derivative())?;
    let (q, r) = res.div_rem(&lc);
    debug_assert!(r.is_zero());
    Ok(sign_pow(n * (n - 1) / 2) * q)
}

/// `(p, k)` with `c = p^k`.
pub fn constant_prime_power(t: &TrinomialSpec) -> Result<(u64, u32)> {
    prime_power(t.c).ok_or_else(|| Error::InvalidConstant(t.c.to_string()))
}

/// The constant coefficient `e2 * c`.
fn constant(t: &TrinomialSpec) -> BigInt {
    BigInt::from(t.eps2.value()) * BigInt::from(t.c)
}

/// Discriminant of the trinomial from the closed form.
pub fn discriminant(t: &TrinomialSpec) -> Result<BigInt> {
    trinomial_discriminant(t.n, t.m, &BigInt::from(t.eps1.value()), &constant(t))
}

/// Non-vanishing of the closed-form discriminant.
pub fn is_separable(t: &TrinomialSpec) -> Result<bool> {
    constant_prime_power(t)?;
    Ok(!discriminant(t)?.is_zero())
}

/// Exact test that the trinomial has no root with `|z| <= 1`.
pub fn roots_outside_unit_disk(f: &IntPoly) -> Result<bool> {
    unit_disk::roots_outside_unit_disk(f)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PkStatus {
    IrreducibleByTheorem,
    KnownReducibleFamily,
    BoundedFactorCount,
}

/// Why a [`PkVerdict`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Justification {
    /// `m = 1`, `k >= 2`.
    LinearMiddleTerm,
    /// `k = 1` with `p` odd.
    OddPrimeFirstPower,
    /// `x^(3t) + e*x^(2t) + 4e = (x^t + 2e)(x^(2t) - e*x^t + 2)`.
    ExplicitFamily,
    /// At most `k` distinct, non-reciprocal irreducible factors (`k >= 2`).
    FactorCountBound,
    /// `k = 1`, `p = 2`: cyclotomic factors may occur and no bound is claimed.
    NoBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PkVerdict {
    pub spec: TrinomialSpec,
    pub prime: u64,
    pub exponent: u32,
    pub status: PkStatus,
    pub justification: Justification,
    /// Upper bound on the number of irreducible factors, when one is proven.
    pub bound: Option<u32>,
    pub explicit_factors: Option<Vec<IntPoly>>,
}

/// `Some(t)` when the spec is `x^(3t) + e*x^(2t) + 4e`.
pub fn known_family_parameter(t: &TrinomialSpec) -> Option<usize> {
    (t.c == 4 && t.eps1 == t.eps2 && t.n.is_multiple_of(3) && t.m * 3 == 2 * t.n).then_some(t.n / 3)
}

/// `(x^t + 2e, x^(2t) - e*x^t + 2)`.
pub fn known_family_factors(t: usize, eps: Sign) -> (IntPoly, IntPoly) {
    let e = BigInt::from(eps.value());
    let first = IntPoly::trinomial(t, 0, BigInt::zero(), &e * 2);
    let second = IntPoly::trinomial(2 * t, t, -e, BigInt::from(2));
    (first, second)
}

pub fn classify_pk(t: &TrinomialSpec) -> Result<PkVerdict> {
    let (p, k) = constant_prime_power(t)?;
    let base = PkVerdict {
        spec: *t,
        prime: p,
        exponent: k,
        status: PkStatus::BoundedFactorCount,
        justification: Justification::FactorCountBound,
        bound: Some(k),
        explicit_factors: None,
    };
    if t.m == 1 && k >= 2 {
        return Ok(PkVerdict {
            status: PkStatus::IrreducibleByTheorem,
            justification: Justification::LinearMiddleTerm,
            bound: Some(1),
            ..base
        });
    }
    if k == 1 && p != 2 {
        return Ok(PkVerdict {
            status: PkStatus::IrreducibleByTheorem,
            justification: Justification::OddPrimeFirstPower,
            bound: Some(1),
            ..base
        });
    }
    if let Some(s) = known_family_parameter(t) {
        let (a, b) = known_family_factors(s, t.eps1);
        debug_assert_eq!(&a * &b, t.poly());
        return Ok(PkVerdict {
            status: PkStatus::KnownReducibleFamily,
            justification: Justification::ExplicitFamily,
            bound: Some(2),
            explicit_factors: Some(vec![a, b]),
            ..base
        });
    }
    if k == 1 {
        return Ok(PkVerdict {
            justification: Justification::NoBound,
            bound: None,
            ..base
        });
    }
    Ok(base)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::*;

    fn spec(n: usize, m: usize, e1: Sign, e2: Sign, c: u64) -> TrinomialSpec {
        TrinomialSpec::new(n, m, e1, e2, c).unwrap()
    }

    #[test]
    fn discriminant_values() {
        let one = BigInt::one();
        assert_eq!(
            trinomial_discriminant(3, 1, &one, &BigInt::from(4)).unwrap(),
            BigInt::from(-436)
        );
        assert_eq!(
            trinomial_discriminant(2, 1, &one, &one).unwrap(),
            BigInt::from(-3)
        );
        assert_eq!(
            discriminant_via_resultant(&IntPoly::from_slice(&[1, 1, 1])).unwrap(),
            BigInt::from(-3)
        );
        assert_eq!(
            discriminant_via_resultant(&IntPoly::from_slice(&[4, 1, 0, 1])).unwrap(),
            BigInt::from(-436)
        );
        assert_eq!(
            discriminant_via_resultant(&IntPoly::from_slice(&[1, -2, 1])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            trinomial_discriminant(3, 1, &one, &BigInt::zero()),
            Err(Error::ZeroConstant)
        );
    }

    #[test]
    fn separability() {
        assert!(is_separable(&spec(5, 2, Minus, Plus, 4)).unwrap());
        assert!(is_separable(&spec(7, 3, Plus, Minus, 9)).unwrap());
        assert!(is_separable(&spec(7, 3, Plus, Minus, 6)).is_err());
    }

    #[test]
    fn verdicts() {
        let v = classify_pk(&spec(9, 6, Plus, Plus, 4)).unwrap();
        assert_eq!(v.status, PkStatus::KnownReducibleFamily);
        let f = v.explicit_factors.unwrap();
        assert_eq!(f[0], IntPoly::from_slice(&[2, 0, 0, 1]));
        assert_eq!(f[1], IntPoly::from_slice(&[2, 0, 0, -1, 0, 0, 1]));
        let v = classify_pk(&spec(5, 1, Minus, Plus, 9)).unwrap();
        assert_eq!(
            (v.status, v.prime, v.exponent),
            (PkStatus::IrreducibleByTheorem, 3, 2)
        );
        let v = classify_pk(&spec(5, 2, Minus, Plus, 4)).unwrap();
        assert_eq!((v.status, v.bound), (PkStatus::BoundedFactorCount, Some(2)));
        let v = classify_pk(&spec(5, 2, Minus, Plus, 2)).unwrap();
        assert_eq!((v.status, v.bound), (PkStatus::BoundedFactorCount, None));
        assert_eq!(
            classify_pk(&spec(5, 2, Minus, Plus, 7))
                .unwrap()
                .justification,
            Justification::OddPrimeFirstPower
        );
        assert!(matches!(
            classify_pk(&spec(5, 2, Minus, Plus, 12)),
            Err(Error::InvalidConstant(_))
        ));
    }

    #[test]
    fn family_product_reconstructs() {
        for s in 1..=8 {
            for e in Sign::BOTH {
                let t = spec(3 * s, 2 * s, e, e, 4);
                let (a, b) = known_family_factors(s, e);
                assert_eq!(&a * &b, t.poly());
                assert_eq!(known_family_parameter(&t), Some(s));
            }
        }
        assert_eq!(known_family_parameter(&spec(9, 6, Plus, Minus, 4)), None);
    }
}
