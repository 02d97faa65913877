//! Scalar abstraction for the simulation math.
//!
//! Everything numeric in this crate is generic over [`Scalar`] so the same
//! model can run in `f32` or `f64`. Concrete `f64` aliases for the main
//! types live at the crate root.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar used by the engine and model: `f32` or `f64`.
pub trait Scalar: Float + FromPrimitive + Debug + Display + 'static {
    /// Lift an `f64` constant into the scalar type.
    fn c(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }

    /// Convenience: `2` as a scalar.
    fn two() -> Self {
        Self::one() + Self::one()
    }

    /// Convenience: `3` as a scalar.
    fn three() -> Self {
        Self::two() + Self::one()
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
