use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_traits::{FromPrimitive, Num, Signed};

/// Coefficient ring for [`crate::Poly`].
///
/// `Div`/`Rem` come along with [`Num`] but ring-only code never relies on
/// them; integer-specific algorithms ask for [`IntegerScalar`] instead.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive {}

/// A Euclidean integer ring: exact division, gcd, and a sign.
pub trait IntegerScalar: Scalar + Integer + Signed {}

impl<T> IntegerScalar for T where T: Scalar + Integer + Signed {}
