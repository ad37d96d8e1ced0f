//! The planar Cayley condition for an `n`-periodic billiard trajectory in
//! a conic pencil with cubic discriminant `D`.
//!
//! With `√D(x) = C₀ + C₁x + C₂x² + ⋯` around `x = 0`, the condition is
//!
//! ```text
//! n = 2p:    det [ C₃   C₄   …  C_{p+1} ]      n = 2p+1:  det [ C₂ … C_{p+1} ]
//!                [ C₄   C₅   …  C_{p+2} ]  = 0            [ …          …    ]  = 0
//!                [ …             …      ]                 [ C_{p+1} … C_{2p} ]
//!                [ C_{p+1} … C_{2p−1}   ]
//! ```
//!
//! Every `C_k` is a rational multiple of `√D(0)`, so after factoring the
//! common surd the determinant is an exact rational number.

use num_traits::Zero;

use crate::error::CayleyError;
use crate::rational::{rat_to_f64, rational_det, Rat};
use crate::report::{ConditionKind, ConditionReport, ReportEntry};
use crate::series::{sqrt_series, Branch};

/// Hankel block `[C_{start+i+j}]` for `i, j = 0..size`, as the rational
/// multipliers of `√D(0)`.
fn hankel(coeffs: &[Rat], start: usize, size: usize) -> Vec<Vec<Rat>> {
    (0..size)
        .map(|i| (0..size).map(|j| coeffs[start + i + j].clone()).collect())
        .collect()
}

/// Index layout of the planar condition for period `n`: `(start, size)` of
/// the Hankel block in the `C` coefficients.
pub fn planar_block(n: usize) -> (usize, usize) {
    if n % 2 == 0 {
        let p = n / 2;
        (3, p - 1)
    } else {
        let p = (n - 1) / 2;
        (2, p)
    }
}

/// Exact planar Cayley condition: `D` is the cubic (ascending
/// coefficients), `n ≥ 3` the sought period.
pub fn cayley_planar(d: &[Rat], n: usize) -> Result<ConditionReport, CayleyError> {
    if n < 3 {
        return Err(CayleyError::PeriodTooSmall(n));
    }
    let (start, size) = planar_block(n);
    let order = start + 2 * size.saturating_sub(1).max(0);
    let series = sqrt_series(d, &Rat::zero(), Branch::Plus, order.max(2))?;
    let m = hankel(&series.coeffs, start, size);
    let det = rational_det(&m);
    let surd = rat_to_f64(&series.surd_square).sqrt();
    Ok(ConditionReport {
        kind: ConditionKind::PlanarCayley,
        exact: true,
        matrix: m
            .iter()
            .map(|row| row.iter().map(ReportEntry::from_rat).collect())
            .collect(),
        verdict: rat_to_f64(&det) * surd.powi(size as i32),
        rank: None,
        rank_bound: None,
        satisfied: det.is_zero(),
        tolerance: None,
        note: format!(
            "entries are the rational multipliers r_k of C_k = r_k*sqrt(D(0)); \
             block starts at C_{start}, size {size}"
        ),
    })
}

/// Signed value of the planar determinant (float embedding), for sign
/// bisection in a caustic parameter.
pub fn planar_det_value(d: &[Rat], n: usize) -> Result<f64, CayleyError> {
    Ok(cayley_planar(d, n)?.verdict)
}
