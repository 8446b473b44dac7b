//! Scalar abstraction over the floating-point types the library runs on.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssignOps};
use rand::Rng;
use rand_distr::{Distribution, Open01, StandardNormal};

/// Floating-point scalar the whole crate is generic over.
///
/// `f32` and `f64` implement it. The two extra methods tie the scalar to the
/// random-number layer so samplers never hard-code a precision.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + NumAssignOps
    + Sum<Self>
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Draw from the standard normal distribution N(0, 1).
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Draw uniformly from the open interval (0, 1).
    fn open01<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Convert an `f64` constant. Panics only if the value is not
    /// representable, which never happens for the literals used here.
    #[inline]
    fn val(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in scalar type")
    }

    /// Lossy view as `f64`, for diagnostics and error payloads.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    #[inline]
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    #[inline]
    fn open01<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Open01.sample(rng)
    }
}

impl Scalar for f32 {
    #[inline]
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
        StandardNormal.sample(rng)
    }

    #[inline]
    fn open01<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Open01.sample(rng)
    }
}

/// Euler-Mascheroni constant.
pub fn euler_gamma<T: Scalar>() -> T {
    T::val(0.577_215_664_901_532_9)
}

/// Upper edge `2e` of the asymptotic rescaled-eigenvalue support.
pub fn two_e<T: Scalar>() -> T {
    T::E() + T::E()
}
