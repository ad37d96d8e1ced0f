use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::tolerance::ToleranceProfile;

/// A confocal family of quadrics in `ℝ^d`, fixed by its semi-axis
/// parameters `a₁ > a₂ > ⋯ > a_d > 0` (units of length²).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfocalFamily {
    axes: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    tolerances: Option<ToleranceProfile>,
}

impl ConfocalFamily {
    /// Builds a family from strictly decreasing positive axis parameters.
    pub fn new(axes: &[f64]) -> Result<Self, GeometryError> {
        if axes.iter().any(|a| !a.is_finite()) {
            return Err(GeometryError::NonfiniteInput);
        }
        let decreasing = axes.windows(2).all(|w| w[0] > w[1]);
        if axes.len() < 2 || !decreasing || *axes.last().unwrap() <= 0.0 {
            return Err(GeometryError::InvalidFamily(axes.to_vec()));
        }
        Ok(ConfocalFamily {
            axes: axes.to_vec(),
            tolerances: None,
        })
    }

    pub fn with_tolerances(mut self, tol: ToleranceProfile) -> Self {
        self.tolerances = Some(tol);
        self
    }

    pub fn tolerances(&self) -> ToleranceProfile {
        self.tolerances.unwrap_or_default()
    }

    /// Ambient dimension `d`.
    pub fn dim(&self) -> usize {
        self.axes.len()
    }

    /// The axis parameters `a₁ > ⋯ > a_d`.
    pub fn axes(&self) -> &[f64] {
        &self.axes
    }

    /// Largest axis `a₁`; the natural length² scale of the scene.
    pub fn scale(&self) -> f64 {
        self.axes[0]
    }

    /// `Q_λ(x) = Σ xᵢ²/(aᵢ−λ)`.
    pub fn quadric_form(&self, lambda: f64, x: &[f64]) -> f64 {
        self.axes
            .iter()
            .zip(x)
            .map(|(&a, &xi)| xi * xi / (a - lambda))
            .sum()
    }

    /// The symmetric bilinear version `Q_λ(x, y) = Σ xᵢyᵢ/(aᵢ−λ)`.
    pub fn quadric_bilinear(&self, lambda: f64, x: &[f64], y: &[f64]) -> f64 {
        self.axes
            .iter()
            .zip(x.iter().zip(y))
            .map(|(&a, (&xi, &yi))| xi * yi / (a - lambda))
            .sum()
    }

    /// Gradient of `Q_λ` at `x`: components `2xᵢ/(aᵢ−λ)`.
    pub fn quadric_gradient(&self, lambda: f64, x: &[f64]) -> Vec<f64> {
        self.axes
            .iter()
            .zip(x)
            .map(|(&a, &xi)| 2.0 * xi / (a - lambda))
            .collect()
    }

    /// Residual `|Q_λ(p) − 1|` guarded against the degenerate case.
    pub fn on_quadric_residual(&self, lambda: f64, p: &[f64]) -> f64 {
        (self.quadric_form(lambda, p) - 1.0).abs()
    }

    /// Checks that `p` lies on `Q_λ` within the profile tolerance
    /// (relative to `a₁`).
    pub fn check_on_quadric(&self, lambda: f64, p: &[f64]) -> Result<(), GeometryError> {
        let tol = self.tolerances().on_quadric * self.scale().max(1.0);
        let residual = self.on_quadric_residual(lambda, p);
        if residual > tol {
            return Err(GeometryError::NotOnQuadric { residual, tol });
        }
        Ok(())
    }

    /// True when `λ` equals one of the axis parameters exactly.
    pub fn is_degenerate(&self, lambda: f64) -> bool {
        self.axes.contains(&lambda)
    }
}

/// Type of a member quadric `Q_λ` of a confocal family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum QuadricKind {
    /// `λ < a_d`: an ellipsoid.
    Ellipsoid,
    /// `λ ∈ (a_{s+1}, a_s)`: a hyperboloid of index `s` (s of the d
    /// denominators are negative). Index 0 means `λ > a₁`: empty real locus.
    Hyperboloid { index: usize },
    /// `λ = a_s` exactly: the quadric degenerates to the coordinate
    /// hyperplane `x_s = 0`.
    DegenerateHyperplane { s: usize },
}

/// A quadric parameter with its classification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadricParam {
    pub lambda: f64,
    pub kind: QuadricKind,
}

/// Classifies `Q_λ` by the interval of `λ` among the axis parameters.
/// Exact equality `λ = a_s` yields the degenerate hyperplane.
pub fn classify(family: &ConfocalFamily, lambda: f64) -> QuadricParam {
    let axes = family.axes();
    let kind = if let Some(pos) = axes.iter().position(|&a| a == lambda) {
        QuadricKind::DegenerateHyperplane { s: pos + 1 }
    } else if lambda < axes[axes.len() - 1] {
        QuadricKind::Ellipsoid
    } else {
        // a_{s+1} < lambda < a_s, with a_{d+1} = -inf and a_0 = +inf.
        let index = axes.iter().position(|&a| a < lambda).unwrap_or(axes.len());
        QuadricKind::Hyperboloid { index }
    };
    QuadricParam { lambda, kind }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_rejects_bad_axes() {
        assert!(ConfocalFamily::new(&[1.0]).is_err());
        assert!(ConfocalFamily::new(&[1.0, 2.0]).is_err());
        assert!(ConfocalFamily::new(&[2.0, 2.0]).is_err());
        assert!(ConfocalFamily::new(&[2.0, -1.0]).is_err());
        assert!(ConfocalFamily::new(&[2.0, 1.0]).is_ok());
    }

    #[test]
    fn classify_intervals() {
        let fam = ConfocalFamily::new(&[2.0, 1.0]).unwrap();
        assert_eq!(classify(&fam, 0.5).kind, QuadricKind::Ellipsoid);
        assert_eq!(
            classify(&fam, 1.5).kind,
            QuadricKind::Hyperboloid { index: 1 }
        );
        assert_eq!(
            classify(&fam, 1.0).kind,
            QuadricKind::DegenerateHyperplane { s: 2 }
        );
        assert_eq!(
            classify(&fam, 3.0).kind,
            QuadricKind::Hyperboloid { index: 0 }
        );
    }
}
