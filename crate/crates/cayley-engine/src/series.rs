//! Exact truncated expansions of `√𝒫` around a non-branch point.
//!
//! With `s = 𝒫(x₀) ≠ 0`, every coefficient of
//! `√𝒫(x₀+t) = B₀ + B₁ t + B₂ t² + …` is a rational multiple of `√s`;
//! the series is stored as those rational multipliers, so all downstream
//! determinant and rank conditions reduce to exact rational linear algebra.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::CayleyError;
use crate::rational::{rat_to_f64, series_mul, taylor_shift, Rat};

#[derive(Debug, Clone, PartialEq)]
pub struct SqrtSeries {
    pub center: Rat,
    /// `s = 𝒫(center)`, the square of the surd.
    pub surd_square: Rat,
    pub sign: i8,
    /// `r_k` with `B_k = r_k · √s`.
    pub coeffs: Vec<Rat>,
}

/// Branch of the square root at the expansion point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> i8 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }
}

/// Coefficients of `√𝒫` around `x₀` up to order `K`, on the chosen branch.
///
/// Squaring the series recovers `𝒫(x₀+t) mod t^{K+1}` exactly; the
/// recurrence below is that identity solved coefficient by coefficient:
/// `Σ_{i+j=k} r_i r_j = q_k / s` with `q = 𝒫(x₀ + t)`.
pub fn sqrt_series(
    p: &[Rat],
    x0: &Rat,
    branch: Branch,
    order: usize,
) -> Result<SqrtSeries, CayleyError> {
    let q = taylor_shift(p, x0);
    let s = q[0].clone();
    if s.is_zero() {
        return Err(CayleyError::BranchPoint);
    }
    let sign = branch.sign();
    let mut r = Vec::with_capacity(order + 1);
    let r0 = if sign > 0 { Rat::one() } else { -Rat::one() };
    r.push(r0.clone());
    let two_r0 = &r0 + &r0;
    for k in 1..=order {
        let qk = q.get(k).cloned().unwrap_or_else(Rat::zero);
        let mut acc = qk / &s;
        for i in 1..k {
            acc -= &r[i] * &r[k - i];
        }
        r.push(acc / &two_r0);
    }
    Ok(SqrtSeries {
        center: x0.clone(),
        surd_square: s,
        sign,
        coeffs: r,
    })
}

impl SqrtSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `B_k` as a float: `r_k √s`.
    pub fn coeff_f64(&self, k: usize) -> f64 {
        rat_to_f64(&self.coeffs[k]) * rat_to_f64(&self.surd_square).sqrt()
    }

    /// Exact identity check: `(Σ B_k t^k)² ≡ 𝒫(x₀+t) mod t^{K+1}`.
    pub fn verify_against(&self, p: &[Rat]) -> bool {
        let q = taylor_shift(p, &self.center);
        let order = self.order();
        let sq = series_mul(&self.coeffs, &self.coeffs, order);
        for k in 0..=order {
            let qk = q.get(k).cloned().unwrap_or_else(Rat::zero);
            if &sq[k] * &self.surd_square != qk {
                return false;
            }
        }
        true
    }
}
