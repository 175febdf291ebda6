//! Scalar abstraction for the numeric kernels.
//!
//! Grid interpolation, quadrature, curve metrics and the Laplacian
//! observables are generic over [`Real`] so they run in `f32` or `f64`.
//! Graph topology and the Monte-Carlo engines stay concrete: node math is
//! integral and the stochastic engines pin `f64` so event streams are
//! identical regardless of the scalar used downstream.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar usable by the generic numeric kernels.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Sum<Self> + Debug + Display + Default + Send + Sync + 'static
{
    /// Conversion from `f64`, for constants and RNG output.
    #[inline]
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 conversion")
    }

    /// Conversion from a count.
    #[inline]
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize conversion")
    }

    /// Lossy view as `f64`, for reporting.
    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().expect("f64 conversion")
    }
}

impl Real for f32 {}
impl Real for f64 {}
