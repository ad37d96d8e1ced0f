use num_rational::BigRational;

use crate::caustics::CausticSet;
use crate::exact::ratpoly_from_descending_factors;
use crate::family::ConfocalFamily;
use crate::poly::{from_roots_descending_factors, Coeffs};

/// The degree-`2d−1` polynomial
/// `𝒫(x) = (a₁−x)⋯(a_d−x)(α₁−x)⋯(α_{d−1}−x)`
/// attached to a family and a caustic set, in ascending monomial
/// coefficients. Its leading coefficient is always `(−1)^{2d−1} = −1`.
pub fn pencil_polynomial(family: &ConfocalFamily, caustics: &CausticSet) -> Coeffs {
    let mut roots: Vec<f64> = family.axes().to_vec();
    roots.extend(caustics.alphas().iter().copied());
    from_roots_descending_factors(&roots)
}

/// Exact variant over rationals: `∏(aᵢ − x)·∏(αⱼ − x)` with rational inputs.
pub fn pencil_polynomial_exact(axes: &[BigRational], alphas: &[BigRational]) -> Vec<BigRational> {
    let mut roots: Vec<BigRational> = axes.to_vec();
    roots.extend(alphas.iter().cloned());
    ratpoly_from_descending_factors(&roots)
}
