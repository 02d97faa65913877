//! Piecewise-linear table functions with clamped extrapolation.

use serde::{Deserialize, Serialize};

use super::error::EngineError;
use crate::scalar::Scalar;

/// Piecewise-linear lookup over an ordered set of `(x, y)` points.
///
/// Evaluation interpolates linearly between the two bracketing points and
/// clamps to the endpoint `y` outside `[x_min, x_max]`. Construction
/// validates the point set, so evaluation is total.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    try_from = "Vec<(F, F)>",
    into = "Vec<(F, F)>",
    bound(
        serialize = "F: serde::Serialize + Clone",
        deserialize = "F: serde::de::DeserializeOwned"
    )
)]
pub struct TableFunction<F> {
    points: Vec<(F, F)>,
}

impl<F: Scalar> TableFunction<F> {
    /// Build a table from `(x, y)` pairs; x must be strictly increasing and
    /// at least two points are required.
    pub fn new(points: Vec<(F, F)>) -> Result<Self, EngineError> {
        if points.len() < 2 {
            return Err(EngineError::TableTooShort(points.len()));
        }
        for (i, (x, y)) in points.iter().enumerate() {
            if !x.is_finite() || !y.is_finite() {
                return Err(EngineError::TableNotFinite(i));
            }
            if i > 0 && *x <= points[i - 1].0 {
                return Err(EngineError::TableNotIncreasing(i));
            }
        }
        Ok(Self { points })
    }

    /// Shorthand for building a table from `f64` literals.
    pub fn from_f64(points: &[(f64, f64)]) -> Result<Self, EngineError> {
        Self::new(points.iter().map(|&(x, y)| (F::c(x), F::c(y))).collect())
    }

    /// Linear interpolation with clamped ends.
    pub fn lookup(&self, x: F) -> F {
        let pts = &self.points;
        if x <= pts[0].0 {
            return pts[0].1;
        }
        let last = pts.len() - 1;
        if x >= pts[last].0 {
            return pts[last].1;
        }
        // Index of the first point with x_i > x; the bracket is [hi-1, hi].
        let hi = pts.partition_point(|&(px, _)| px <= x);
        let (x0, y0) = pts[hi - 1];
        let (x1, y1) = pts[hi];
        y0 + (x - x0) * (y1 - y0) / (x1 - x0)
    }

    pub fn points(&self) -> &[(F, F)] {
        &self.points
    }
}

impl<F: Scalar> TryFrom<Vec<(F, F)>> for TableFunction<F> {
    type Error = EngineError;

    fn try_from(points: Vec<(F, F)>) -> Result<Self, Self::Error> {
        Self::new(points)
    }
}

impl<F: Clone> From<TableFunction<F>> for Vec<(F, F)> {
    fn from(table: TableFunction<F>) -> Self {
        table.points
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(points: &[(f64, f64)]) -> TableFunction<f64> {
        TableFunction::from_f64(points).unwrap()
    }

    #[test]
    fn interpolates_on_the_identity_segment() {
        let t = table(&[(0.0, 0.0), (1.0, 1.0)]);
        assert_eq!(t.lookup(0.5), 0.5);
    }

    #[test]
    fn clamps_outside_the_domain() {
        let t = table(&[(0.0, 0.0), (1.0, 1.0)]);
        assert_eq!(t.lookup(-3.0), 0.0);
        assert_eq!(t.lookup(7.0), 1.0);
    }

    #[test]
    fn interpolates_between_interior_points() {
        let t = table(&[(0.0, 0.9), (0.5, 1.0), (1.0, 1.25)]);
        assert!((t.lookup(0.75) - 1.125).abs() < 1e-12);
    }

    #[test]
    fn hits_knots_exactly() {
        let t = table(&[(0.0, 0.9), (0.5, 1.0), (1.0, 1.25)]);
        assert_eq!(t.lookup(0.5), 1.0);
        assert_eq!(t.lookup(1.0), 1.25);
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(TableFunction::<f64>::from_f64(&[(0.0, 1.0)]).is_err());
        assert!(TableFunction::<f64>::from_f64(&[(0.0, 1.0), (0.0, 2.0)]).is_err());
        assert!(TableFunction::<f64>::from_f64(&[(1.0, 1.0), (0.0, 2.0)]).is_err());
        assert!(TableFunction::<f64>::new(vec![(0.0, f64::NAN), (1.0, 2.0)]).is_err());
    }
}
