//! Exact location of roots relative to the unit circle.
//!
//! The decision procedure is the Schur-Cohn reduction carried out in exact
//! arithmetic: with `P*(z) = z^n P(1/z)` and `|P(0)| < |lc P|`, the
//! polynomial `(lc(P) P - P(0) P*) / z` has degree `n - 1` and all its roots
//! in the open unit disk exactly when `P` does. Any root on the circle makes
//! the chain fail, so the test is strict.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::IntegerScalar;
use crate::{IntPoly, Poly, RatPoly};

/// True iff every root of `f` satisfies `|z| < 1`. Constants count as stable.
pub fn is_schur_stable<T: IntegerScalar>(f: &Poly<T>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut cur = f.primitive_part();
    while let Some(n) = cur.degree().filter(|&n| n > 0) {
        let lead = cur.coeff(n);
        let c0 = cur.coeff(0);
        if c0.abs() >= lead.abs() {
            return Ok(false);
        }
        // full reversal, keeping low zeros of P as high zeros of P*
        let rev = Poly::new(cur.coeffs().iter().rev().cloned().collect());
        let combo = &cur.scale(&lead) - &rev.scale(&c0);
        debug_assert!(combo.coeff(0).is_zero());
        let shifted = Poly::new(combo.coeffs()[1..].to_vec());
        debug_assert_eq!(shifted.degree(), Some(n - 1));
        cur = shifted.primitive_part();
    }
    Ok(true)
}

/// Rational-coefficient entry point: clears denominators and runs the
/// integer reduction.
pub fn is_schur_stable_rational(f: &RatPoly) -> Result<bool> {
    is_schur_stable(&clear_denominators(f))
}

/// A positive integer multiple of `f` with integer coefficients.
pub fn clear_denominators(f: &RatPoly) -> IntPoly {
    let den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect(),
    )
}

/// True iff no root of `f` lies in the closed unit disk `|z| <= 1`.
///
/// Equivalent to Schur stability of the reversal, whose roots are the
/// reciprocals of the roots of `f`.
pub fn roots_outside_unit_disk<T: IntegerScalar>(f: &Poly<T>) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    is_schur_stable(&f.reversal()?)
}

/// Certificate that `f` has no root on `|z| = 1`.
///
/// A real polynomial with a root `z` on the circle also vanishes at
/// `1/z = conj(z)`, so such a root is shared with the reversal. A trivial
/// `gcd(f, reversal(f))` therefore rules the circle out; `false` means the
/// check is inconclusive, not that a circle root exists.
pub fn unit_circle_free_certificate(f: &IntPoly) -> Result<bool> {
    let rev = f.reversal()?;
    Ok(f.gcd_primitive(&rev).is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SmallIntPoly;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_slice(c)
    }

    /// Product of `(den*x - num)` over rational roots `num/den`.
    fn from_roots(roots: &[(i64, i64)]) -> IntPoly {
        roots.iter().map(|&(num, den)| p(&[-num, den])).product()
    }

    #[test]
    fn documented_examples() {
        assert!(roots_outside_unit_disk(&p(&[4, 1, 0, 1])).unwrap());
        assert!(!roots_outside_unit_disk(&p(&[-1, -1, 1])).unwrap());
        assert!(roots_outside_unit_disk(&p(&[-2, 1])).unwrap());
        assert_eq!(
            roots_outside_unit_disk(&p(&[0, 1])),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn boundary_roots_are_rejected() {
        // roots +-i, on the circle
        assert!(!roots_outside_unit_disk(&p(&[1, 0, 1])).unwrap());
        assert!(!is_schur_stable(&p(&[1, 0, 1])).unwrap());
        // (x - 3) * Phi_6: two roots on the circle, one outside
        let f = &p(&[-3, 1]) * &p(&[1, -1, 1]);
        assert!(!roots_outside_unit_disk(&f).unwrap());
        assert!(!unit_circle_free_certificate(&f).unwrap());
        assert!(unit_circle_free_certificate(&p(&[4, 1, 0, 1])).unwrap());
    }

    #[test]
    fn rational_root_oracle() {
        let cases: &[(&[(i64, i64)], bool)] = &[
            (&[(1, 2), (-1, 3), (2, 5)], true),
            (&[(1, 2), (-1, 1)], false),
            (&[(3, 2), (1, 3)], false),
            (&[(9, 10), (-9, 10), (0, 1)], true),
            (&[(11, 10)], false),
        ];
        for (roots, inside) in cases {
            let f = from_roots(roots);
            assert_eq!(is_schur_stable(&f).unwrap(), *inside, "{roots:?}");
        }
        let outside = from_roots(&[(3, 2), (-5, 2), (7, 3), (-11, 10)]);
        assert!(roots_outside_unit_disk(&outside).unwrap());
    }

    #[test]
    fn generic_over_integer_types() {
        assert!(is_schur_stable(&SmallIntPoly::new(vec![1, 3])).unwrap());
        assert!(!is_schur_stable(&SmallIntPoly::new(vec![3, 1])).unwrap());
        let r = RatPoly::new(vec![
            BigRational::new(1.into(), 3.into()),
            BigRational::new(1.into(), 1.into()),
        ]);
        assert!(is_schur_stable_rational(&r).unwrap());
    }
}
