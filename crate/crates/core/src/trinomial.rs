//! The trinomial parameter tuple shared by the unit and prime-power analyzers.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::IntPoly;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            -1 => Some(Sign::Minus),
            1 => Some(Sign::Plus),
            _ => None,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Minus => "-",
            Sign::Plus => "+",
        })
    }
}

/// `x^n + eps1*x^m + eps2*c` with `n > m >= 1` and `c >= 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TrinomialSpec {
    pub n: usize,
    pub m: usize,
    pub eps1: Sign,
    pub eps2: Sign,
    /// Magnitude of the constant term: 1 for unit trinomials, `p^k` otherwise.
    pub c: u64,
}

impl TrinomialSpec {
    pub fn new(n: usize, m: usize, eps1: Sign, eps2: Sign, c: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSpec(format!(
                "degree n = {n} must be at least 2"
            )));
        }
        if m == 0 || m >= n {
            return Err(Error::InvalidSpec(format!(
                "need 1 <= m < n, got m = {m}, n = {n}"
            )));
        }
        if c == 0 {
            return Err(Error::ZeroConstant);
        }
        Ok(Self {
            n,
            m,
            eps1,
            eps2,
            c,
        })
    }

    pub fn unit(n: usize, m: usize, eps1: Sign, eps2: Sign) -> Result<Self> {
        Self::new(n, m, eps1, eps2, 1)
    }

    pub fn is_unit(&self) -> bool {
        self.c == 1
    }

    pub fn poly(&self) -> IntPoly {
        IntPoly::trinomial(
            self.n,
            self.m,
            BigInt::from(self.eps1.value()),
            BigInt::from(self.eps2.value()) * BigInt::from(self.c),
        )
    }

    /// All unit trinomials of degree `n`, ordered by `(m, eps1, eps2)`.
    pub fn all_unit(n: usize) -> impl Iterator<Item = TrinomialSpec> {
        (1..n).flat_map(move |m| {
            Sign::BOTH.into_iter().flat_map(move |e1| {
                Sign::BOTH.into_iter().map(move |e2| TrinomialSpec {
                    n,
                    m,
                    eps1: e1,
                    eps2: e2,
                    c: 1,
                })
            })
        })
    }
}

impl fmt::Display for TrinomialSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly())
    }
}
