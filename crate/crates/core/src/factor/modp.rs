//! Polynomials over a small prime field and their factorization
//! (distinct-degree, then Cantor-Zassenhaus equal-degree splitting).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::IntPoly;

/// Dense polynomial over `Z/pZ`, ascending coefficients in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut out = Self {
            p,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        };
        out.trim();
        out
    }

    pub fn from_int(f: &IntPoly, p: u64) -> Self {
        let modulus = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(&modulus);
                u64::try_from(r).expect("reduced residue fits u64")
            })
            .collect();
        Self::new(p, coeffs)
    }

    /// Lift to `Z[x]` with coefficients in `[0, p)`.
    pub fn to_int(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn zero_like(&self) -> Self {
        Self {
            p: self.p,
            coeffs: Vec::new(),
        }
    }

    fn one_like(&self) -> Self {
        Self {
            p: self.p,
            coeffs: vec![1],
        }
    }

    fn x_like(&self) -> Self {
        Self {
            p: self.p,
            coeffs: vec![0, 1],
        }
    }

    fn mul_mod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        let mut result = 1u64;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul_mod(result, base);
            }
            base = self.mul_mod(base, base);
            e >>= 1;
        }
        result
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Self::new(self.p, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = other.coeffs.get(i).copied().unwrap_or(0);
                (a + self.p - b) % self.p
            })
            .collect();
        Self::new(self.p, coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return self.zero_like();
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        Self::new(self.p, acc.into_iter().map(|c| c as u64).collect())
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(
            self.p,
            self.coeffs.iter().map(|&a| self.mul_mod(a, c)).collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            Some(&lc) => self.scale(self.inv(lc)),
            None => self.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul_mod(c, i as u64 % self.p))
            .collect();
        Self::new(self.p, coeffs)
    }

    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let db = divisor.degree().expect("division by zero polynomial");
        let inv_lc = self.inv(divisor.coeffs[db]);
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return (self.zero_like(), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - db];
        for i in (0..quot.len()).rev() {
            let q = self.mul_mod(rem[i + db], inv_lc);
            if q == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = (rem[i + j] + self.p - self.mul_mod(q, b)) % self.p;
            }
            quot[i] = q;
        }
        rem.truncate(db);
        (Self::new(self.p, quot), Self::new(self.p, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (self.one_like(), self.zero_like());
        let (mut t0, mut t1) = (self.zero_like(), self.one_like());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        match r0.coeffs.last() {
            Some(&lc) => {
                let inv = self.inv(lc);
                (r0.scale(inv), s0.scale(inv), t0.scale(inv))
            }
            None => (r0, s0, t0),
        }
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, e: &BigUint, modulus: &Self) -> Self {
        let mut result = self.one_like().rem(modulus);
        let base = self.rem(modulus);
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).rem(modulus);
            if e.bit(i) {
                result = result.mul(&base).rem(modulus);
            }
        }
        result
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }
}

/// Complete factorization of `f` modulo `p` into monic irreducibles,
/// sorted ascending.
///
/// `p` must be an odd prime not dividing the leading coefficient, and `f`
/// must stay squarefree modulo `p`.
pub fn factor_mod_p(f: &IntPoly, p: u64) -> Result<Vec<FpPoly>> {
    if p < 3 || !crate::arith::is_prime(p) {
        return Err(Error::Precondition(format!("{p} is not an odd prime")));
    }
    let fp = FpPoly::from_int(f, p);
    if fp.degree() != f.degree() {
        return Err(Error::Precondition(format!(
            "{p} divides the leading coefficient"
        )));
    }
    if fp.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    if !fp.is_squarefree() {
        return Err(Error::NotSquarefreeModP(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x7269_6e6f_6d69_616c ^ p);
    let mut out = Vec::new();
    for (block, d) in distinct_degree(&fp.monic()) {
        equal_degree(&block, d, &mut rng, &mut out);
    }
    out.sort();
    Ok(out)
}

/// Splits a squarefree monic polynomial into products of irreducibles of
/// equal degree `d`.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = BigUint::from(f.p);
    let x = f.x_like();
    let mut rest = f.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(&p, &rest);
        let g = rest.gcd(&h.sub(&x));
        if g.degree().unwrap_or(0) > 0 {
            rest = rest.div_rem(&g).0;
            h = h.rem(&rest);
            out.push((g, d));
        }
        d += 1;
    }
    if let Some(deg) = rest.degree().filter(|&k| k > 0) {
        out.push((rest, deg));
    }
    out
}

fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = f.degree().expect("non-zero");
    if n == d {
        out.push(f.monic());
        return;
    }
    let exponent = (BigUint::from(f.p).pow(d as u32) - BigUint::one()) >> 1;
    loop {
        let a = FpPoly::new(f.p, (0..n).map(|_| rng.gen_range(0..f.p)).collect());
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = a.pow_mod(&exponent, f).sub(&f.one_like());
        if b.is_zero() {
            continue;
        }
        let g = f.gcd(&b);
        let k = g.degree().unwrap_or(0);
        if k > 0 && k < n {
            let h = f.div_rem(&g).0;
            equal_degree(&g, d, rng, out);
            equal_degree(&h, d, rng, out);
            return;
        }
    }
}

/// Product of the given factors modulo `p`.
pub fn product(p: u64, factors: &[FpPoly]) -> FpPoly {
    factors
        .iter()
        .fold(FpPoly::new(p, vec![1]), |acc, g| acc.mul(g))
}
