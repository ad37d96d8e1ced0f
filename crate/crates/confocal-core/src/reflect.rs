use serde::{Deserialize, Serialize};

use crate::error::GeometryError;
use crate::family::ConfocalFamily;
use crate::ray::{dot, normalize};

/// Real reflection is the mirror law about the tangent hyperplane; virtual
/// reflection is its complementary ray (the negation of the real output).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReflectionMode {
    Real,
    Virtual,
}

/// Reflects `incoming` at the point `p` of `Q_λ`, using the normal
/// `grad Q_λ(p)`. The output is unit-normalized.
pub fn reflect(
    family: &ConfocalFamily,
    lambda: f64,
    p: &[f64],
    incoming: &[f64],
    mode: ReflectionMode,
) -> Result<Vec<f64>, GeometryError> {
    family.check_on_quadric(lambda, p)?;
    let n = family.quadric_gradient(lambda, p);
    let nn = dot(&n, &n);
    let vn = dot(incoming, &n);
    let mut out: Vec<f64> = incoming
        .iter()
        .zip(&n)
        .map(|(&v, &ni)| v - 2.0 * vn / nn * ni)
        .collect();
    if mode == ReflectionMode::Virtual {
        for o in out.iter_mut() {
            *o = -*o;
        }
    }
    normalize(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ray::norm;

    #[test]
    fn normal_incidence_reverses() {
        let fam = ConfocalFamily::new(&[2.0, 1.0]).unwrap();
        let p = [2.0_f64.sqrt(), 0.0];
        let out = reflect(&fam, 0.0, &p, &[1.0, 0.0], ReflectionMode::Real).unwrap();
        assert!((out[0] + 1.0).abs() < 1e-12 && out[1].abs() < 1e-12);
    }

    #[test]
    fn grazing_passes_through() {
        let fam = ConfocalFamily::new(&[2.0, 1.0]).unwrap();
        let p = [2.0_f64.sqrt(), 0.0];
        let out = reflect(&fam, 0.0, &p, &[0.0, 1.0], ReflectionMode::Real).unwrap();
        assert!((out[1] - 1.0).abs() < 1e-12 && out[0].abs() < 1e-12);
    }

    #[test]
    fn virtual_is_negated_real() {
        let fam = ConfocalFamily::new(&[2.0, 1.0]).unwrap();
        let p = [1.0, (1.0 - 0.5_f64).sqrt() * 1.0];
        let p = [p[0], (1.0 - p[0] * p[0] / 2.0).sqrt()];
        let v = {
            let mut v = vec![0.3, -0.7];
            normalize(&mut v);
            v
        };
        let real = reflect(&fam, 0.0, &p, &v, ReflectionMode::Real).unwrap();
        let virt = reflect(&fam, 0.0, &p, &v, ReflectionMode::Virtual).unwrap();
        for (r, w) in real.iter().zip(&virt) {
            assert!((r + w).abs() < 1e-12);
        }
        assert!((norm(&real) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn off_quadric_rejected() {
        let fam = ConfocalFamily::new(&[2.0, 1.0]).unwrap();
        assert!(matches!(
            reflect(&fam, 0.0, &[5.0, 5.0], &[1.0, 0.0], ReflectionMode::Real),
            Err(GeometryError::NotOnQuadric { .. })
        ));
    }
}
