use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::family::ConfocalFamily;

/// Jacobian elliptic coordinates of a point, ordered `λ₁ > λ₂ > ⋯ > λ_d`.
///
/// When all coordinates of the point are nonzero the values interlace the
/// axes: `λ_d < a_d < λ_{d−1} < ⋯ < λ₁ < a₁`. A zero coordinate `x_s = 0`
/// degenerates one of the roots to `a_s`; such entries are flagged.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EllipticCoords {
    pub lambdas: Vec<f64>,
    /// `degenerate[i]` is true when `lambdas[i]` equals an axis value `a_s`
    /// assigned by continuity because `x_s = 0`.
    pub degenerate: Vec<bool>,
}

impl EllipticCoords {
    pub fn is_generic(&self) -> bool {
        self.degenerate.iter().all(|&d| !d)
    }
}

/// Solves `Q_λ(x) = 1` for the `d` elliptic coordinates of `point`.
///
/// The cleared polynomial `F(λ) = ∏(a_j−λ)·(1 − Q_λ(x))` has exactly one
/// root in each interlacing interval, so every root is bracketed and found
/// by bisection with a Newton polish. Zero point-coordinates reduce the
/// problem to the confocal family of the corresponding coordinate
/// hyperplane section; the removed axes re-enter as flagged degenerate
/// values.
pub fn elliptic_coordinates(
    family: &ConfocalFamily,
    point: &[f64],
) -> Result<EllipticCoords, GeometryError> {
    if point.iter().any(|v| !v.is_finite()) {
        return Err(GeometryError::NonfiniteInput);
    }
    if point.len() != family.dim() {
        return Err(GeometryError::DimensionMismatch {
            expected: family.dim(),
            got: point.len(),
        });
    }
    let axes = family.axes();
    let active: Vec<usize> = (0..axes.len()).filter(|&i| point[i] != 0.0).collect();
    let sub_axes: Vec<f64> = active.iter().map(|&i| axes[i]).collect();
    let sub_point: Vec<f64> = active.iter().map(|&i| point[i]).collect();

    let mut found: Vec<(f64, bool)> = (0..axes.len())
        .filter(|i| !active.contains(i))
        .map(|i| (axes[i], true))
        .collect();

    for root in generic_roots(&sub_axes, &sub_point) {
        found.push((root, false));
    }
    found.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    Ok(EllipticCoords {
        lambdas: found.iter().map(|&(l, _)| l).collect(),
        degenerate: found.iter().map(|&(_, d)| d).collect(),
    })
}

/// `F(λ) = ∏(a_j−λ) − Σ_j x_j² ∏_{k≠j}(a_k−λ)`, the cleared form of
/// `Q_λ(x) = 1`. Evaluated in product form for stability.
fn cleared_poly(axes: &[f64], x: &[f64], lambda: f64) -> f64 {
    let full: f64 = axes.iter().map(|&a| a - lambda).product();
    let mut f = full;
    for (j, &xj) in x.iter().enumerate() {
        let partial: f64 = axes
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .map(|(_, &a)| a - lambda)
            .product();
        f -= xj * xj * partial;
    }
    f
}

/// Roots for the case of all-nonzero coordinates: one root per interval
/// `(a_{s+1}, a_s)` with `a_{d+1} = a_d − |x|² − 1` as a safe lower bound.
fn generic_roots(axes: &[f64], x: &[f64]) -> Vec<f64> {
    let d = axes.len();
    if d == 0 {
        return vec![];
    }
    let norm2: f64 = x.iter().map(|v| v * v).sum();
    let mut roots = Vec::with_capacity(d);
    for s in 0..d {
        let hi = axes[s];
        let lo = if s + 1 < d {
            axes[s + 1]
        } else {
            axes[d - 1] - norm2 - 1.0
        };
        roots.push(bracketed_root(axes, x, lo, hi));
    }
    roots
}

fn bracketed_root(axes: &[f64], x: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    // F has opposite signs just inside the endpoints; nudge off the poles
    // of Q by staying strictly inside.
    let span = hi - lo;
    let mut a = lo + 1e-300;
    let mut b = hi - 1e-300;
    let fa = cleared_poly(axes, x, a);
    let fb = cleared_poly(axes, x, b);
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    if fa * fb > 0.0 {
        // Fall back to widening: the root is still inside (lo, hi) in exact
        // arithmetic; scan for a sign change.
        let n = 64;
        let mut prev = a;
        let mut fprev = fa;
        for k in 1..=n {
            let t = lo + span * (k as f64) / (n as f64 + 1.0);
            let ft = cleared_poly(axes, x, t);
            if fprev * ft <= 0.0 {
                a = prev;
                b = t;
                break;
            }
            prev = t;
            fprev = ft;
        }
    }
    lo = a;
    hi = b;
    let sign_lo = cleared_poly(axes, x, lo) > 0.0;
    for _ in 0..120 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = cleared_poly(axes, x, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn on_axis_point_degenerates() {
        let fam = ConfocalFamily::new(&[2.0, 1.0]).unwrap();
        let c = elliptic_coordinates(&fam, &[2.0_f64.sqrt(), 0.0]).unwrap();
        assert!((c.lambdas[0] - 1.0).abs() < 1e-14);
        assert!(c.lambdas[1].abs() < 1e-12);
        assert!(c.degenerate[0]);
        assert!(!c.degenerate[1]);
    }

    #[test]
    fn quadratic_example() {
        let fam = ConfocalFamily::new(&[2.0, 1.0]).unwrap();
        let c = elliptic_coordinates(&fam, &[1.0, 0.5]).unwrap();
        // Roots of lambda^2 - 1.75 lambda + 0.5; each satisfies Q_l(x)=1.
        for &l in &c.lambdas {
            assert!((fam.quadric_form(l, &[1.0, 0.5]) - 1.0).abs() < 1e-12);
            assert!((l * l - 1.75 * l + 0.5).abs() < 1e-12);
        }
        assert!(c.lambdas[0] > 1.0 && c.lambdas[0] < 2.0);
        assert!(c.lambdas[1] > 0.0 && c.lambdas[1] < 1.0);
    }
}
