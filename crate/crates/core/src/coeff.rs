//! Scalar bound for the generic numeric kernels.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_traits::Num;

/// Any exact-enough ring scalar: rationals, big integers, or plain floats.
///
/// `Num` supplies ring ops plus `Zero`/`One`; `Neg` is required because the
/// extended recurrences subtract freely. Implemented via blanket impl, so
/// `BigRational`, `f64`, and friends all qualify.
pub trait Coeff: Num + Clone + Neg<Output = Self> + Display + Debug {}

impl<T> Coeff for T where T: Num + Clone + Neg<Output = T> + Display + Debug {}

/// Small-integer constant lifted into any scalar.
pub fn small<T: Coeff>(k: i64) -> T {
    let mut acc = T::zero();
    for _ in 0..k.unsigned_abs() {
        acc = acc + T::one();
    }
    if k < 0 {
        -acc
    } else {
        acc
    }
}
