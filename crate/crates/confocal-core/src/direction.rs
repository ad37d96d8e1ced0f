use crate::coords::elliptic_coordinates;
use crate::error::GeometryError;
use crate::family::ConfocalFamily;
use crate::poly::{eval, from_roots_descending_factors};
use crate::ray::normalize;

/// Unit direction at `point` whose line is tangent to the quadrics
/// `Q_{α}` for every `α` in `alphas` (one of the `2^{d−1}` such lines,
/// selected by the `signs` of `√𝒫(λ_s)`).
///
/// Built from the separated velocity relations along a line tangent to the
/// caustics:
///
/// ```text
/// dλ_s/dℓ = 2 ε_s √𝒫(λ_s) / ∏_{u≠s}(λ_s−λ_u),
/// dx_i/dλ_s = −∏_{t≠s}(a_i−λ_t) / (2 x_i ∏_{j≠i}(a_i−a_j)),
/// ```
///
/// with `𝒫(x) = ∏(aᵢ−x)·∏(α−x)`. Requires `𝒫(λ_s) ≥ 0` for every elliptic
/// coordinate of the point (otherwise no real tangent line exists) and a
/// point off the coordinate hyperplanes except where `λ_s` equals an axis
/// by construction (e.g. points on a quadric of the family used as one of
/// the `alphas`).
pub fn direction_for_caustics(
    family: &ConfocalFamily,
    point: &[f64],
    alphas: &[f64],
    signs: &[i8],
) -> Result<Vec<f64>, GeometryError> {
    let d = family.dim();
    if signs.len() != d {
        return Err(GeometryError::DimensionMismatch {
            expected: d,
            got: signs.len(),
        });
    }
    let axes = family.axes();
    let coords = elliptic_coordinates(family, point)?;
    let lambdas = &coords.lambdas;

    let mut roots: Vec<f64> = axes.to_vec();
    roots.extend(alphas.iter().copied());
    let p = from_roots_descending_factors(&roots);
    let scale: f64 = p.iter().map(|c| c.abs()).sum::<f64>().max(1.0);

    let mut sqrt_p = vec![0.0; d];
    for (s, &l) in lambdas.iter().enumerate() {
        let v = eval(&p, l);
        if v < -1e-9 * scale {
            return Err(GeometryError::NoTangentDirection);
        }
        sqrt_p[s] = v.max(0.0).sqrt() * signs[s] as f64;
    }

    let mut dir = vec![0.0; d];
    for i in 0..d {
        if point[i] == 0.0 {
            // Allowed only if the corresponding factor vanishes anyway.
            let contributes = (0..d).any(|s| {
                sqrt_p[s] != 0.0
                    && (0..d)
                        .filter(|&t| t != s)
                        .map(|t| axes[i] - lambdas[t])
                        .product::<f64>()
                        != 0.0
            });
            if contributes {
                return Err(GeometryError::NoTangentDirection);
            }
            continue;
        }
        let denom_i: f64 = (0..d)
            .filter(|&j| j != i)
            .map(|j| axes[i] - axes[j])
            .product();
        let mut sum = 0.0;
        for s in 0..d {
            if sqrt_p[s] == 0.0 {
                continue;
            }
            let num: f64 = (0..d)
                .filter(|&t| t != s)
                .map(|t| axes[i] - lambdas[t])
                .product();
            let den: f64 = (0..d)
                .filter(|&u| u != s)
                .map(|u| lambdas[s] - lambdas[u])
                .product();
            sum += sqrt_p[s] * num / den;
        }
        dir[i] = -sum / (point[i] * denom_i);
    }
    let n = normalize(&mut dir);
    if n == 0.0 || dir.iter().any(|v| !v.is_finite()) {
        return Err(GeometryError::NoTangentDirection);
    }
    Ok(dir)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caustics::caustics_of_line;
    use crate::ray::Ray;

    #[test]
    fn recovers_prescribed_caustic_d2() {
        let fam = ConfocalFamily::new(&[2.0, 1.0]).unwrap();
        let p = [0.4, 0.8];
        let dir = direction_for_caustics(&fam, &p, &[0.5], &[1, 1]).unwrap();
        let ray = Ray::new(&p, &dir).unwrap();
        let cs = caustics_of_line(&fam, &ray).unwrap();
        assert!((cs.alphas()[0] - 0.5).abs() < 1e-9);
    }

    #[test]
    fn recovers_prescribed_caustics_d3() {
        let axes = [4.0, 2.0, 1.0];
        let fam = ConfocalFamily::new(&axes).unwrap();
        // Point compatible with caustics (0.6, 1.5): built from elliptic
        // coordinates (3.0, 1.2, 0.3), which keep P(lambda_s) >= 0.
        let lambdas = [3.0, 1.2, 0.3];
        let p: Vec<f64> = (0..3)
            .map(|i| {
                let num: f64 = lambdas.iter().map(|&l| axes[i] - l).product();
                let den: f64 = (0..3)
                    .filter(|&j| j != i)
                    .map(|j| axes[i] - axes[j])
                    .product();
                (num / den).sqrt()
            })
            .collect();
        let dir = direction_for_caustics(&fam, &p, &[0.6, 1.5], &[1, -1, 1]).unwrap();
        let ray = Ray::new(&p, &dir).unwrap();
        let cs = caustics_of_line(&fam, &ray).unwrap();
        assert!((cs.alphas()[0] - 0.6).abs() < 1e-8);
        assert!((cs.alphas()[1] - 1.5).abs() < 1e-8);
    }
}
