use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::family::ConfocalFamily;
use crate::poly::{eval, from_roots_descending_factors, real_roots};
use crate::ray::Ray;

/// The `d−1` parameters of the quadrics tangent to a line (Chasles).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CausticSet {
    alphas: Vec<f64>,
    /// Flags for caustics that coincide with an axis value `a_s`
    /// (line through a focal degeneration; value kept by continuity).
    #[serde(default)]
    degenerate: Vec<bool>,
}

impl CausticSet {
    /// Builds a caustic set, validating the interval-count rule:
    /// at most one value below `a_d`, at most two in each interval
    /// `(a_{s+1}, a_s)` for `2 ≤ s ≤ d−1`, none above `a₁`.
    pub fn new(family: &ConfocalFamily, alphas: Vec<f64>) -> Result<Self, GeometryError> {
        let axes = family.axes();
        let d = axes.len();
        if alphas.len() != d - 1 {
            return Err(GeometryError::DimensionMismatch {
                expected: d - 1,
                got: alphas.len(),
            });
        }
        let degenerate: Vec<bool> = alphas
            .iter()
            .map(|&al| axes.iter().any(|&a| a == al))
            .collect();
        let strict: Vec<f64> = alphas
            .iter()
            .zip(&degenerate)
            .filter(|&(_, &dg)| !dg)
            .map(|(&al, _)| al)
            .collect();
        if strict.iter().any(|&al| al > axes[0]) {
            return Err(GeometryError::CausticIntervalRule(format!(
                "caustic above a1 = {}",
                axes[0]
            )));
        }
        let below = strict.iter().filter(|&&al| al < axes[d - 1]).count();
        if below > 1 {
            return Err(GeometryError::CausticIntervalRule(format!(
                "{below} caustics below a_d"
            )));
        }
        for s in 2..d {
            let (lo, hi) = (axes[s], axes[s - 1]);
            let inside = strict.iter().filter(|&&al| al > lo && al < hi).count();
            if inside > 2 {
                return Err(GeometryError::CausticIntervalRule(format!(
                    "{inside} caustics in ({lo}, {hi})"
                )));
            }
        }
        let mut sorted: Vec<(f64, bool)> = alphas.into_iter().zip(degenerate).collect();
        sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        Ok(CausticSet {
            alphas: sorted.iter().map(|&(a, _)| a).collect(),
            degenerate: sorted.iter().map(|&(_, d)| d).collect(),
        })
    }

    /// Builds without validation (test fixtures, trusted values).
    pub fn new_unchecked(mut alphas: Vec<f64>) -> Self {
        alphas.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let n = alphas.len();
        CausticSet {
            alphas,
            degenerate: vec![false; n],
        }
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn degenerate_flags(&self) -> &[bool] {
        &self.degenerate
    }

    pub fn has_degenerate(&self) -> bool {
        self.degenerate.iter().any(|&d| d)
    }

    /// Largest relative deviation between two caustic sets.
    pub fn relative_distance(&self, other: &CausticSet, scale: f64) -> f64 {
        self.alphas
            .iter()
            .zip(other.alphas())
            .map(|(&a, &b)| (a - b).abs() / scale.max(1e-300))
            .fold(0.0, f64::max)
    }
}

/// The numerator polynomial `N(λ) = Φ_λ(x,y)·∏(a_j−λ)` of the intersection
/// discriminant, expanded in the wedge form
///
/// `N(λ) = Σ_i y_i² ∏_{j≠i}(a_j−λ) − Σ_{i<j} (x_i y_j − x_j y_i)² ∏_{k∉{i,j}}(a_k−λ)`.
///
/// For a unit direction `N(λ) = (α₁−λ)⋯(α_{d−1}−λ)`, so its roots are the
/// caustic parameters of the line.
fn caustic_polynomial(family: &ConfocalFamily, x: &[f64], y: &[f64]) -> Vec<f64> {
    let axes = family.axes();
    let d = axes.len();
    let mut n = vec![0.0; d];
    for i in 0..d {
        let others: Vec<f64> = (0..d).filter(|&j| j != i).map(|j| axes[j]).collect();
        let p = from_roots_descending_factors(&others);
        for (k, &pk) in p.iter().enumerate() {
            n[k] += y[i] * y[i] * pk;
        }
    }
    for i in 0..d {
        for j in (i + 1)..d {
            let wedge = x[i] * y[j] - x[j] * y[i];
            if wedge == 0.0 {
                continue;
            }
            let others: Vec<f64> = (0..d)
                .filter(|&k| k != i && k != j)
                .map(|k| axes[k])
                .collect();
            let p = from_roots_descending_factors(&others);
            for (k, &pk) in p.iter().enumerate() {
                n[k] -= wedge * wedge * pk;
            }
        }
    }
    n
}

/// Caustic parameters of the line carried by `ray` (Chasles: exactly `d−1`
/// of them, with multiplicity). Independent of the base point on the line.
pub fn caustics_of_line(family: &ConfocalFamily, ray: &Ray) -> Result<CausticSet, GeometryError> {
    ray.check_unit(family.tolerances().unit_direction)?;
    if ray.dim() != family.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: family.dim(),
            got: ray.dim(),
        });
    }
    let d = family.dim();
    let n = caustic_polynomial(family, &ray.point, &ray.direction);
    let mut roots = real_roots(&n);

    // A real-rooted degree-(d-1) polynomial must yield d-1 roots; collapsed
    // double roots are re-expanded by multiplicity.
    if roots.len() < d - 1 {
        let mut expanded = Vec::with_capacity(d - 1);
        for &r in &roots {
            expanded.push(r);
            if expanded.len() < d - 1 {
                // Double root iff N' also vanishes there (relative check).
                let dp = crate::poly::derivative(&n);
                let scale: f64 = n.iter().map(|c| c.abs()).sum::<f64>().max(1.0);
                if eval(&dp, r).abs() < 1e-6 * scale {
                    expanded.push(r);
                }
            }
        }
        roots = expanded;
    }
    if roots.len() != d - 1 {
        return Err(GeometryError::DegenerateLine(0));
    }

    // Snap roots within tolerance of an axis value onto it and flag them.
    let tol = family.tolerances().caustic_match * family.scale();
    let axes = family.axes();
    let mut flags = vec![false; roots.len()];
    for (r, flag) in roots.iter_mut().zip(&mut flags) {
        if let Some(&a) = axes.iter().find(|&&a| (a - *r).abs() <= tol) {
            *r = a;
            *flag = true;
        }
    }
    Ok(CausticSet {
        alphas: roots,
        degenerate: flags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axis_line_degenerate_caustic() {
        let fam = ConfocalFamily::new(&[2.0, 1.0]).unwrap();
        let ray = Ray::new(&[0.3, 0.0], &[1.0, 0.0]).unwrap();
        let cs = caustics_of_line(&fam, &ray).unwrap();
        assert_eq!(cs.alphas().len(), 1);
        assert!((cs.alphas()[0] - 1.0).abs() < 1e-12);
        assert!(cs.degenerate_flags()[0]);
    }

    #[test]
    fn tangent_line_self_consistent() {
        let fam = ConfocalFamily::new(&[2.0, 1.0]).unwrap();
        // Tangent to Q_{1/2} at (0, sqrt(1/2)): horizontal line.
        let y0 = 0.5_f64.sqrt();
        let ray = Ray::new(&[0.7, y0], &[1.0, 0.0]).unwrap();
        let cs = caustics_of_line(&fam, &ray).unwrap();
        assert!((cs.alphas()[0] - 0.5).abs() < 1e-10);
    }

    #[test]
    fn interval_rule_enforced() {
        let fam = ConfocalFamily::new(&[4.0, 2.0, 1.0]).unwrap();
        assert!(CausticSet::new(&fam, vec![0.2, 0.5]).is_err());
        assert!(CausticSet::new(&fam, vec![0.5, 1.5]).is_ok());
        assert!(CausticSet::new(&fam, vec![0.5, 5.0]).is_err());
    }
}
