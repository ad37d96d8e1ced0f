use serde::{Deserialize, Serialize};

use crate::error::GeometryError;

/// A base point together with a unit direction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ray {
    pub point: Vec<f64>,
    pub direction: Vec<f64>,
}

impl Ray {
    /// Builds a ray, normalizing `direction` (which must be nonzero and
    /// finite).
    pub fn new(point: &[f64], direction: &[f64]) -> Result<Self, GeometryError> {
        if point.iter().chain(direction.iter()).any(|v| !v.is_finite()) {
            return Err(GeometryError::NonfiniteInput);
        }
        if point.len() != direction.len() {
            return Err(GeometryError::DimensionMismatch {
                expected: point.len(),
                got: direction.len(),
            });
        }
        let norm = direction.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 {
            return Err(GeometryError::ZeroDirection);
        }
        Ok(Ray {
            point: point.to_vec(),
            direction: direction.iter().map(|v| v / norm).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.point.len()
    }

    /// Point at parameter `t` along the ray.
    pub fn at(&self, t: f64) -> Vec<f64> {
        self.point
            .iter()
            .zip(&self.direction)
            .map(|(&p, &v)| p + t * v)
            .collect()
    }

    /// Checks `| |direction| − 1 | <= tol`.
    pub fn check_unit(&self, tol: f64) -> Result<(), GeometryError> {
        let norm = self.direction.iter().map(|v| v * v).sum::<f64>().sqrt();
        let err = (norm - 1.0).abs();
        if err > tol {
            return Err(GeometryError::NotUnitDirection(err));
        }
        Ok(())
    }
}

/// Euclidean norm.
pub fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Dot product.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Normalizes a vector in place; returns the original norm.
pub fn normalize(v: &mut [f64]) -> f64 {
    let n = norm(v);
    if n > 0.0 {
        for x in v.iter_mut() {
            *x /= n;
        }
    }
    n
}
