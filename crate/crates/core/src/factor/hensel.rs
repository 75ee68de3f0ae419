//! Quadratic Hensel lifting of a modular factorization along a binary
//! factor tree.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::modp::{self, FpPoly};
use crate::error::{Error, Result};
use crate::IntPoly;

/// Reduces every coefficient into `[0, modulus)`.
pub fn reduce(f: &IntPoly, modulus: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(modulus)).collect())
}

/// Reduces every coefficient into the symmetric range `(-modulus/2, modulus/2]`.
pub fn reduce_symmetric(f: &IntPoly, modulus: &BigInt) -> IntPoly {
    let half = modulus >> 1;
    IntPoly::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(modulus);
                if r > half {
                    r - modulus
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Division by a monic divisor followed by reduction.
fn div_rem_mod(a: &IntPoly, monic: &IntPoly, modulus: &BigInt) -> (IntPoly, IntPoly) {
    let (q, r) = a.divmod_exact(monic).expect("monic divisor");
    (reduce(&q, modulus), reduce(&r, modulus))
}

fn inverse_mod(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(modulus).extended_gcd(modulus);
    e.gcd.is_one().then(|| e.x.mod_floor(modulus))
}

/// Makes `f` monic modulo `modulus`; its leading coefficient must be a unit.
fn make_monic(f: &IntPoly, modulus: &BigInt) -> Result<IntPoly> {
    let lc = f.leading_coeff().ok_or(Error::ZeroPolynomial)?;
    let inv = inverse_mod(lc, modulus)
        .ok_or_else(|| Error::LiftFailure("leading coefficient is not a unit".into()))?;
    Ok(reduce(&f.scale(&inv), modulus))
}

struct Lifted {
    g: IntPoly,
    h: IntPoly,
    s: IntPoly,
    t: IntPoly,
}

/// One step `m -> m^2`: from `f = g h (mod m)`, `s g + t h = 1 (mod m)`,
/// `h` monic, produce the same relations modulo `m^2`.
fn hensel_step(f: &IntPoly, cur: Lifted, m2: &BigInt) -> Lifted {
    let Lifted { g, h, s, t } = cur;
    let e = reduce(&(f - &(&g * &h)), m2);
    let (q, r) = div_rem_mod(&(&s * &e), &h, m2);
    let g_new = reduce(&(&(&g + &(&t * &e)) + &(&q * &g)), m2);
    let h_new = reduce(&(&h + &r), m2);
    let b = reduce(&(&(&(&s * &g_new) + &(&t * &h_new)) - &IntPoly::one()), m2);
    let (c, d) = div_rem_mod(&(&s * &b), &h_new, m2);
    let s_new = reduce(&(&s - &d), m2);
    let t_new = reduce(&(&(&t - &(&t * &b)) - &(&c * &g_new)), m2);
    Lifted {
        g: g_new,
        h: h_new,
        s: s_new,
        t: t_new,
    }
}

/// Lifts the monic, pairwise coprime factorization `factors` of `f`
/// modulo `p` to monic factors modulo `p^exponent`.
///
/// The product of the result times `lc(f)` is congruent to `f` modulo
/// `p^exponent`, and each lifted factor reduces to its input modulo `p`.
pub fn hensel_lift(f: &IntPoly, factors: &[FpPoly], p: u64, exponent: u32) -> Result<Vec<IntPoly>> {
    if factors.is_empty() {
        return Ok(Vec::new());
    }
    let mut levels = 0u32;
    while (1u32 << levels) < exponent {
        levels += 1;
    }
    let pb = BigInt::from(p);
    let target = num_traits::pow(pb.clone(), exponent as usize);
    let mut out = Vec::with_capacity(factors.len());
    lift_node(f, factors, &pb, levels, &mut out)?;
    out.iter()
        .map(|g| make_monic(&reduce(g, &target), &target))
        .collect()
}

fn lift_node(
    f: &IntPoly,
    factors: &[FpPoly],
    p: &BigInt,
    levels: u32,
    out: &mut Vec<IntPoly>,
) -> Result<()> {
    let modulus = num_traits::pow(p.clone(), 1usize << levels);
    if factors.len() == 1 {
        out.push(make_monic(&reduce(f, &modulus), &modulus)?);
        return Ok(());
    }
    let prime = u64::try_from(p).expect("small prime");
    let (left, right) = factors.split_at(factors.len() / 2);
    let lc = f.leading_coeff().ok_or(Error::ZeroPolynomial)?;
    let g0 = modp::product(prime, left).to_int().scale(lc);
    let g0 = reduce(&g0, p);
    let h0 = modp::product(prime, right);
    let (gcd, s0, t0) = FpPoly::from_int(&g0, prime).ext_gcd(&h0);
    if gcd.degree() != Some(0) {
        return Err(Error::LiftFailure("modular factors are not coprime".into()));
    }
    let mut cur = Lifted {
        g: g0,
        h: h0.to_int(),
        s: s0.to_int(),
        t: t0.to_int(),
    };
    let mut m = p.clone();
    for _ in 0..levels {
        m = &m * &m;
        cur = hensel_step(f, cur, &m);
    }
    let check = reduce(&(f - &(&cur.g * &cur.h)), &modulus);
    if !check.is_zero() {
        return Err(Error::LiftFailure("lifted product does not match".into()));
    }
    lift_node(&cur.g, left, p, levels, out)?;
    lift_node(&cur.h, right, p, levels, out)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::modp::factor_mod_p;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_slice(c)
    }

    fn mul_mod(a: &IntPoly, b: &IntPoly, modulus: &BigInt) -> IntPoly {
        reduce(&(a * b), modulus)
    }

    #[test]
    fn linear_factors_of_x_squared_minus_one() {
        let f = p(&[-1, 0, 1]);
        let mods = factor_mod_p(&f, 3).unwrap();
        let lifted = hensel_lift(&f, &mods, 3, 4).unwrap();
        let m = BigInt::from(81);
        let sym: Vec<_> = lifted.iter().map(|g| reduce_symmetric(g, &m)).collect();
        assert!(sym.contains(&p(&[-1, 1])));
        assert!(sym.contains(&p(&[1, 1])));
    }

    #[test]
    fn lifted_product_matches() {
        let f = p(&[1, 0, 1, 0, 1]);
        let mods = factor_mod_p(&f, 5).unwrap();
        assert!(mods.len() >= 2);
        let lifted = hensel_lift(&f, &mods, 5, 6).unwrap();
        let m = num_traits::pow(BigInt::from(5), 6);
        let prod = lifted
            .iter()
            .fold(IntPoly::one(), |acc, g| mul_mod(&acc, g, &m));
        assert_eq!(reduce(&prod, &m), reduce(&f, &m));
        for (g, g0) in lifted.iter().zip(&mods) {
            assert_eq!(FpPoly::from_int(g, 5), *g0);
        }
    }

    #[test]
    fn non_monic_input() {
        // (2x + 1)(3x^2 + x + 5)(x - 4)
        let f = &(&p(&[1, 2]) * &p(&[5, 1, 3])) * &p(&[-4, 1]);
        let prime = 11;
        let mods = factor_mod_p(&f, prime).unwrap();
        let lifted = hensel_lift(&f, &mods, prime, 5).unwrap();
        let m = num_traits::pow(BigInt::from(prime), 5);
        let lc = f.leading_coeff().unwrap().clone();
        let prod = lifted
            .iter()
            .fold(IntPoly::constant(lc), |acc, g| mul_mod(&acc, g, &m));
        assert_eq!(reduce(&prod, &m), reduce(&f, &m));
    }
}
