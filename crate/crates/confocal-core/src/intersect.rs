use crate::error::GeometryError;
use crate::family::ConfocalFamily;
use crate::ray::Ray;

/// Real intersection parameters of a line with `Q_λ`, sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct LineQuadricHits {
    pub ts: Vec<f64>,
    /// True when the line is tangent: the quadratic has a double root,
    /// returned once in `ts`.
    pub tangent: bool,
    /// Discriminant `Φ_λ(x, y)` of the intersection quadratic.
    pub discriminant: f64,
}

/// Solves `Q_λ(x + t y) = 1`, a quadratic in `t`:
/// `Q_λ(y) t² + 2 Q_λ(x,y) t + (Q_λ(x) − 1) = 0`.
pub fn intersect(
    family: &ConfocalFamily,
    lambda: f64,
    ray: &Ray,
) -> Result<LineQuadricHits, GeometryError> {
    if family.is_degenerate(lambda) {
        return Err(GeometryError::DegenerateQuadric(lambda));
    }
    let a = family.quadric_form(lambda, &ray.direction);
    let b = family.quadric_bilinear(lambda, &ray.point, &ray.direction);
    let c = family.quadric_form(lambda, &ray.point) - 1.0;
    let disc = b * b - a * c;
    let scale = (b * b).abs().max((a * c).abs()).max(f64::MIN_POSITIVE);
    let tol = family.tolerances().tangency;

    // Asymptotic direction: the quadratic degenerates to a linear equation.
    if a.abs() <= 1e-14 * (b.abs().max(c.abs()).max(1.0)) {
        if b.abs() <= 1e-300 {
            return Ok(LineQuadricHits {
                ts: vec![],
                tangent: false,
                discriminant: disc,
            });
        }
        return Ok(LineQuadricHits {
            ts: vec![-c / (2.0 * b)],
            tangent: false,
            discriminant: disc,
        });
    }

    if disc.abs() <= tol * scale {
        return Ok(LineQuadricHits {
            ts: vec![-b / a],
            tangent: true,
            discriminant: disc,
        });
    }
    if disc < 0.0 {
        return Ok(LineQuadricHits {
            ts: vec![],
            tangent: false,
            discriminant: disc,
        });
    }
    // Stable quadratic roots.
    let sq = disc.sqrt();
    let q = -(b + b.signum() * sq);
    let (t1, t2) = if b == 0.0 {
        (-sq / a, sq / a)
    } else {
        (q / a, c / q)
    };
    let mut ts = vec![t1, t2];
    ts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(LineQuadricHits {
        ts,
        tangent: false,
        discriminant: disc,
    })
}
