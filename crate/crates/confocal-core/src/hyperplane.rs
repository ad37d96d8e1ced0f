use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::exact::rational_rank;
use crate::family::ConfocalFamily;
use crate::ray::dot;

/// A hyperplane `⟨n, x⟩ = c`, stored as the `(d+1)`-vector `(n₁…n_d, c)`
/// normalized so that its first nonzero coefficient is `1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Hyperplane {
    pub coefficients: Vec<f64>,
}

impl Hyperplane {
    pub fn new(normal: &[f64], offset: f64) -> Result<Self, GeometryError> {
        let mut coefficients: Vec<f64> = normal.to_vec();
        coefficients.push(offset);
        if coefficients.iter().any(|v| !v.is_finite()) {
            return Err(GeometryError::NonfiniteInput);
        }
        let Some(&first) = coefficients.iter().find(|&&v| v != 0.0) else {
            return Err(GeometryError::ZeroDirection);
        };
        for c in coefficients.iter_mut() {
            *c /= first;
        }
        Ok(Hyperplane { coefficients })
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn normal(&self) -> &[f64] {
        &self.coefficients[..self.coefficients.len() - 1]
    }

    pub fn offset(&self) -> f64 {
        *self.coefficients.last().unwrap()
    }

    /// Signed residual `⟨n, x⟩ − c`.
    pub fn residual(&self, x: &[f64]) -> f64 {
        dot(self.normal(), x) - self.offset()
    }
}

/// Tangent hyperplane of `Q_λ` at a point of the quadric:
/// `⟨grad Q_λ(p), x⟩ = ⟨grad Q_λ(p), p⟩`.
pub fn tangent_hyperplane(
    family: &ConfocalFamily,
    lambda: f64,
    p: &[f64],
) -> Result<Hyperplane, GeometryError> {
    family.check_on_quadric(lambda, p)?;
    let n = family.quadric_gradient(lambda, p);
    let c = dot(&n, p);
    Hyperplane::new(&n, c)
}

/// True iff the planes belong to a pencil: the matrix of coefficient
/// vectors has rank ≤ 2, tested as `σ₃/σ₁ <` the profile threshold.
pub fn in_pencil(planes: &[Hyperplane], rank_tol: f64) -> bool {
    assert!(planes.len() >= 2, "a pencil test needs at least two planes");
    let rows: Vec<&[f64]> = planes.iter().map(|p| p.coefficients.as_slice()).collect();
    let svs = singular_values(&rows);
    if svs.len() < 3 || svs[0] == 0.0 {
        return true;
    }
    svs[2] / svs[0] < rank_tol
}

/// Exact-rank variant for rational coefficient vectors.
pub fn in_pencil_exact(planes: &[Vec<BigRational>]) -> bool {
    rational_rank(planes) <= 2
}

/// Singular values (descending) by one-sided Jacobi: rotate column pairs
/// until mutually orthogonal; the column norms are then the singular
/// values. Unlike a Gram-matrix eigensolve, this resolves singular values
/// far below `√ε·σ₁`. Matrices here are tiny.
pub(crate) fn singular_values(rows: &[&[f64]]) -> Vec<f64> {
    let nrows = rows.len();
    let ncols = rows[0].len();
    // Work on columns of the taller orientation.
    let (m, n, mut a) = if nrows >= ncols {
        let mut a = vec![vec![0.0; ncols]; nrows];
        for (i, r) in rows.iter().enumerate() {
            a[i].copy_from_slice(r);
        }
        (nrows, ncols, a)
    } else {
        let mut a = vec![vec![0.0; nrows]; ncols];
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                a[j][i] = v;
            }
        }
        (ncols, nrows, a)
    };
    for _ in 0..60 {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut apq = 0.0;
                for row in a.iter() {
                    app += row[p] * row[p];
                    aqq += row[q] * row[q];
                    apq += row[p] * row[q];
                }
                if apq.abs() <= 1e-30 * (app * aqq).sqrt().max(1e-300) {
                    continue;
                }
                rotated = true;
                let theta = 0.5 * (aqq - app) / apq;
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut svs: Vec<f64> = (0..n)
        .map(|j| (0..m).map(|i| a[i][j] * a[i][j]).sum::<f64>().sqrt())
        .collect();
    svs.sort_by(|x, y| y.partial_cmp(x).unwrap());
    svs
}

/// The (0, 1 or 2) hyperplanes of the pencil spanned by `base` and `second`
/// that are tangent to `Q_λ`, with their tangency points.
///
/// Tangency of `⟨n,x⟩ = c` to `Q_λ` is `Σ (aᵢ−λ) nᵢ² = c²`; on the pencil
/// `(n₀ + t n₁, c₀ + t c₁)` that is a quadratic in `t`. The tangency point
/// is `xᵢ = (aᵢ−λ) nᵢ / c`.
pub fn tangent_planes_in_pencil(
    family: &ConfocalFamily,
    lambda: f64,
    base: &Hyperplane,
    second: &Hyperplane,
) -> Vec<(Hyperplane, Vec<f64>)> {
    let axes = family.axes();
    let d = axes.len();
    let n0 = base.normal();
    let n1 = second.normal();
    let c0 = base.offset();
    let c1 = second.offset();
    let dual = |u: &[f64], v: &[f64]| -> f64 {
        (0..d).map(|i| (axes[i] - lambda) * u[i] * v[i]).sum::<f64>()
    };
    let a = dual(n1, n1) - c1 * c1;
    let b = 2.0 * (dual(n0, n1) - c0 * c1);
    let c = dual(n0, n0) - c0 * c0;
    let ts: Vec<f64> = if a.abs() < 1e-14 * (b.abs() + c.abs()).max(1.0) {
        if b == 0.0 {
            vec![]
        } else {
            vec![-c / b]
        }
    } else {
        let disc = b * b - 4.0 * a * c;
        if disc < 0.0 {
            vec![]
        } else {
            let sq = disc.sqrt();
            vec![(-b - sq) / (2.0 * a), (-b + sq) / (2.0 * a)]
        }
    };
    let mut out = Vec::new();
    for t in ts {
        let n: Vec<f64> = (0..d).map(|i| n0[i] + t * n1[i]).collect();
        let cc = c0 + t * c1;
        if cc.abs() < 1e-300 {
            continue;
        }
        let point: Vec<f64> = (0..d).map(|i| (axes[i] - lambda) * n[i] / cc).collect();
        if let Ok(plane) = Hyperplane::new(&n, cc) {
            out.push((plane, point));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn axis_point_tangent_plane() {
        let fam = ConfocalFamily::new(&[2.0, 1.0]).unwrap();
        let s = 2.0_f64.sqrt();
        let h = tangent_hyperplane(&fam, 0.0, &[s, 0.0]).unwrap();
        // x1 = sqrt(2): coefficients (1, 0, sqrt 2).
        assert!((h.coefficients[0] - 1.0).abs() < 1e-12);
        assert!(h.coefficients[1].abs() < 1e-12);
        assert!((h.coefficients[2] - s).abs() < 1e-12);
        assert!(h.residual(&[s, 0.0]).abs() < 1e-12);
    }

    #[test]
    fn two_planes_always_pencil() {
        let h1 = Hyperplane::new(&[1.0, 0.0], 1.0).unwrap();
        let h2 = Hyperplane::new(&[0.0, 1.0], 2.0).unwrap();
        assert!(in_pencil(&[h1, h2], 1e-9));
    }

    #[test]
    fn generic_three_planes_not_pencil() {
        let h1 = Hyperplane::new(&[1.0, 0.3, 0.2], 1.0).unwrap();
        let h2 = Hyperplane::new(&[0.1, 1.0, -0.4], 2.0).unwrap();
        let h3 = Hyperplane::new(&[-0.3, 0.2, 1.0], -1.0).unwrap();
        assert!(!in_pencil(&[h1, h2, h3], 1e-9));
        let exact = vec![
            vec![rat(1, 1), rat(3, 10), rat(1, 5), rat(1, 1)],
            vec![rat(1, 10), rat(1, 1), rat(-2, 5), rat(2, 1)],
            vec![rat(-3, 10), rat(1, 5), rat(1, 1), rat(-1, 1)],
        ];
        assert!(!in_pencil_exact(&exact));
    }

    #[test]
    fn three_planes_through_common_flat() {
        let h1 = Hyperplane::new(&[1.0, 1.0, 0.0], 1.0).unwrap();
        let h2 = Hyperplane::new(&[1.0, -1.0, 0.5], 1.0).unwrap();
        // Combination 0.25*h1 + 0.75*h2 (coefficientwise) stays in the pencil.
        let mix: Vec<f64> = h1
            .coefficients
            .iter()
            .zip(&h2.coefficients)
            .map(|(a, b)| 0.25 * a + 0.75 * b)
            .collect();
        let h3 = Hyperplane::new(&mix[..3], mix[3]).unwrap();
        assert!(in_pencil(&[h1, h2, h3], 1e-9));
    }

    #[test]
    fn pencil_tangency_touches_quadric() {
        let fam = ConfocalFamily::new(&[3.0, 2.0, 1.0]).unwrap();
        let base = Hyperplane::new(&[1.0, 0.2, -0.1], 4.0).unwrap();
        let second = Hyperplane::new(&[-0.2, 1.0, 0.3], 5.0).unwrap();
        let tangents = tangent_planes_in_pencil(&fam, 0.5, &base, &second);
        for (plane, point) in tangents {
            assert!(fam.on_quadric_residual(0.5, &point) < 1e-9);
            assert!(plane.residual(&point).abs() < 1e-9 * 10.0);
        }
    }
}
