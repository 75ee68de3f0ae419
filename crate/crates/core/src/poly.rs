//! Dense univariate polynomials over a coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{IntegerScalar, Scalar};

/// Dense polynomial; `coeffs[i]` is the coefficient of `x^i`.
///
/// The stored vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    /// Builds a polynomial from coefficients in ascending degree order.
    pub fn new(coeffs: Vec<T>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn from_slice<U: Clone + Into<T>>(coeffs: &[U]) -> Self {
        Self::new(coeffs.iter().cloned().map(Into::into).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    /// `x^n + a*x^m + b`; `m` may be zero or equal to `n`.
    pub fn trinomial(n: usize, m: usize, a: T, b: T) -> Self {
        let mut coeffs = vec![T::zero(); n + 1];
        coeffs[n] = T::one();
        coeffs[m] = coeffs[m].clone() + a;
        coeffs[0] = coeffs[0].clone() + b;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> T {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// `a(x^m)`.
    pub fn compose_power(&self, m: usize) -> Self {
        assert!(m >= 1, "compose_power needs m >= 1");
        if m == 1 || self.is_constant() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * m] = c.clone();
        }
        Self { coeffs }
    }

    /// `x^deg(a) * a(1/x)`: the coefficient sequence reversed.
    pub fn reversal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.coeffs[0].is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(Self {
            coeffs: self.coeffs.iter().rev().cloned().collect(),
        })
    }

    /// True iff `reversal(a) = ±a`.
    pub fn is_reciprocal(&self) -> Result<bool> {
        let rev = self.reversal()?;
        Ok(rev == *self || rev == -self)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i).expect("degree fits the scalar type"))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Converts every coefficient into another scalar type.
    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: IntegerScalar> Poly<T> {
    /// Gcd of the coefficients, signed so the primitive part has a positive
    /// leading coefficient, together with that primitive part.
    pub fn content_and_primitive(&self) -> Result<(T, Self)> {
        let lc = self.leading_coeff().ok_or(Error::ZeroPolynomial)?;
        let mut g = T::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if lc.is_negative() {
            g = -g;
        }
        let prim = Self {
            coeffs: self.coeffs.iter().map(|c| c.clone() / g.clone()).collect(),
        };
        Ok((g, prim))
    }

    /// Primitive part with positive leading coefficient; zero maps to zero.
    pub fn primitive_part(&self) -> Self {
        match self.content_and_primitive() {
            Ok((_, p)) => p,
            Err(_) => Self::zero(),
        }
    }

    /// Divides every coefficient by `c`, which must divide them all.
    fn div_scalar_exact(&self, c: &T) -> Self {
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    debug_assert!(r.is_zero(), "inexact scalar division");
                    q
                })
                .collect(),
        }
    }

    /// Division with remainder that stays in the integers.
    ///
    /// Succeeds whenever the divisor's leading coefficient divides every
    /// intermediate leading coefficient, in particular for monic divisors.
    pub fn divmod_exact(&self, b: &Self) -> Result<(Self, Self)> {
        let lc = b.leading_coeff().ok_or(Error::DivisionByZero)?.clone();
        let db = b.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); rem.len() - db];
        for i in (0..quot.len()).rev() {
            let top = rem[i + db].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return Err(Error::NonExactDivision);
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - q.clone() * bj.clone();
            }
            quot[i] = q;
        }
        rem.truncate(db);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact quotient `self / b`, or `None` if `b` does not divide `self`
    /// in `Z[x]`.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        match self.divmod_exact(b) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.div_exact(self).is_some()
    }

    /// Classical pseudo-division: `scale * a = q*b + r` with `deg r < deg b`
    /// and `scale = lc(b)^(deg a - deg b + 1)`, or `scale = 1` when
    /// `deg a < deg b`.
    pub fn pseudo_divmod(&self, b: &Self) -> Result<(Self, Self, T)> {
        let lc = b.leading_coeff().ok_or(Error::DivisionByZero)?.clone();
        let db = b.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((Self::zero(), self.clone(), T::one()));
        }
        let mut steps = self.coeffs.len() - db;
        let mut scale = T::one();
        for _ in 0..steps {
            scale = scale * lc.clone();
        }
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let s = Self::monomial(r.coeffs[dr].clone(), dr - db);
            q = &q.scale(&lc) + &s;
            r = &r.scale(&lc) - &(&s * b);
            steps -= 1;
        }
        let rest = num_traits::pow(lc, steps);
        Ok((q.scale(&rest), r.scale(&rest), scale))
    }

    /// Pseudo-remainder only.
    fn prem(&self, b: &Self) -> Self {
        self.pseudo_divmod(b).expect("non-zero divisor").1
    }

    /// Greatest common divisor over `Q[x]`, returned as a primitive integer
    /// polynomial with positive leading coefficient (subresultant PRS).
    pub fn gcd_primitive(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.coeffs.len() >= other.coeffs.len() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        if b.is_zero() {
            return a;
        }
        let mut g = T::one();
        let mut h = T::one();
        loop {
            let delta = a.coeffs.len() - b.coeffs.len();
            let r = a.prem(&b);
            if r.is_zero() {
                break;
            }
            if r.is_constant() {
                return Self::one();
            }
            a = b;
            let divisor = g.clone() * num_traits::pow(h.clone(), delta);
            b = r.div_scalar_exact(&divisor);
            g = a.leading_coeff().expect("non-zero").clone();
            h = subres_h(&h, &g, delta);
        }
        b.primitive_part()
    }

    /// Resultant computed with the subresultant sequence.
    pub fn resultant(&self, other: &Self) -> Result<T> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (ca, mut a) = self.content_and_primitive()?;
        let (cb, mut b) = other.content_and_primitive()?;
        let da = a.coeffs.len() - 1;
        let db = b.coeffs.len() - 1;
        let t = num_traits::pow(ca, db) * num_traits::pow(cb, da);
        let mut s = T::one();
        if da < db {
            std::mem::swap(&mut a, &mut b);
            if da % 2 == 1 && db % 2 == 1 {
                s = -s;
            }
        }
        let mut g = T::one();
        let mut h = T::one();
        loop {
            let (dega, degb) = (a.coeffs.len() - 1, b.coeffs.len() - 1);
            if degb == 0 {
                // h <- lc(B)^deg(A) / h^(deg(A) - 1)
                let lb = b.coeffs[0].clone();
                let h_final = if dega == 0 {
                    T::one()
                } else {
                    let num = num_traits::pow(lb, dega);
                    let den = num_traits::pow(h, dega - 1);
                    num / den
                };
                return Ok(s * t * h_final);
            }
            let delta = dega - degb;
            if dega % 2 == 1 && degb % 2 == 1 {
                s = -s;
            }
            let r = a.prem(&b);
            if r.is_zero() {
                return Ok(T::zero());
            }
            a = b;
            let divisor = g.clone() * num_traits::pow(h.clone(), delta);
            b = r.div_scalar_exact(&divisor);
            g = a.leading_coeff().expect("non-zero").clone();
            h = subres_h(&h, &g, delta);
        }
    }

    /// Maximum absolute coefficient.
    pub fn max_norm(&self) -> T {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .fold(T::zero(), |m, c| if c > m { c } else { m })
    }
}

/// `h^(1-delta) * g^delta`, exact in the subresultant recurrence.
fn subres_h<T: IntegerScalar>(h: &T, g: &T, delta: usize) -> T {
    match delta {
        0 => h.clone(),
        _ => num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1),
    }
}

impl<T: Scalar> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Scalar> Zero for Poly<T> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Scalar> One for Poly<T> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<T: Scalar> Add<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.clone() + s.clone();
        }
        Poly::new(coeffs)
    }
}

impl<T: Scalar> Sub<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul<&Poly<T>> for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(coeffs)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident :: $f:ident),*) => {$(
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $f(self, rhs: Poly<T>) -> Poly<T> {
                $tr::$f(&self, &rhs)
            }
        }
        impl<T: Scalar> $tr<&Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $f(self, rhs: &Poly<T>) -> Poly<T> {
                $tr::$f(&self, rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl<T: Scalar> std::iter::Product for Poly<T> {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

impl<'a, T: Scalar> std::iter::Product<&'a Poly<T>> for Poly<T> {
    fn product<I: Iterator<Item = &'a Self>>(iter: I) -> Self {
        iter.fold(Poly::one(), |acc, p| &acc * p)
    }
}

impl<T: Scalar + fmt::Display + PartialOrd> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < T::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}
