//! Scalar abstraction for the real-valued thresholds that appear in degree
//! conditions (`(2/3 - a)n`, `(1/6 + a/2)n + 2`, `ceil(fraction * n)`).
//!
//! Integer-valued graph quantities are compared against these thresholds.
//! Floating-point instantiations snap values within a relative `1e-9` of an
//! integer before rounding; the exact rational instantiation never rounds.

use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, ToPrimitive};
use std::fmt::Debug;

pub trait Scalar: Num + Copy + PartialOrd + FromPrimitive + ToPrimitive + Debug + Send + Sync {
    fn ceil_to_i64(self) -> i64;
    fn floor_to_i64(self) -> i64;

    fn from_usize(n: usize) -> Self {
        <Self as FromPrimitive>::from_usize(n).expect("vertex counts fit every scalar type")
    }

    fn ratio(num: i64, den: i64) -> Self {
        let num = <Self as FromPrimitive>::from_i64(num).expect("small integer");
        let den = <Self as FromPrimitive>::from_i64(den).expect("small integer");
        num / den
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn ceil_to_i64(self) -> i64 {
                let r = self.round();
                if (self - r).abs() <= 1e-9 * r.abs().max(1.0) {
                    r as i64
                } else {
                    self.ceil() as i64
                }
            }

            fn floor_to_i64(self) -> i64 {
                let r = self.round();
                if (self - r).abs() <= 1e-9 * r.abs().max(1.0) {
                    r as i64
                } else {
                    self.floor() as i64
                }
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

macro_rules! ratio_scalar {
    ($t:ty) => {
        impl Scalar for Ratio<$t> {
            fn ceil_to_i64(self) -> i64 {
                self.ceil().to_integer() as i64
            }

            fn floor_to_i64(self) -> i64 {
                self.floor().to_integer() as i64
            }
        }
    };
}

ratio_scalar!(i64);
ratio_scalar!(i128);

/// `true` when the integer `value` is at least the real `bound`.
pub fn int_at_least<S: Scalar>(value: usize, bound: S) -> bool {
    <S as Scalar>::from_usize(value) >= bound
}

/// `true` when the integer `value` is at most the real `bound`.
pub fn int_at_most<S: Scalar>(value: usize, bound: S) -> bool {
    <S as Scalar>::from_usize(value) <= bound
}
