//! Rank condition for an inside-ellipsoid billiard trajectory in `ℝ^d` to
//! be periodic, up to the central symmetry, with period `n ≥ d`:
//!
//! ```text
//! rank [ B_{n+1}   B_n     …  B_{d+1}   ]
//!      [ B_{n+2}   B_{n+1} …  B_{d+2}   ]   <   n − d + 1,
//!      [ …                               ]
//!      [ B_{2n−1}  B_{2n−2} … B_{n+d−1} ]
//! ```
//!
//! where `√𝒫(x) = B₀ + B₁x + ⋯` around `x = 0` and `𝒫` is the degree
//! `2d−1` pencil polynomial of axes and caustics. The common surd factors
//! out, so the rank is computed exactly over `ℚ`.

use num_traits::Zero;

use crate::error::CayleyError;
use crate::rational::{rational_rank, Rat};
use crate::report::{ConditionKind, ConditionReport, ReportEntry};
use crate::series::{sqrt_series, Branch};

pub fn period_condition_ddim(
    p: &[Rat],
    n: usize,
    d: usize,
) -> Result<ConditionReport, CayleyError> {
    if p.len() != 2 * d {
        return Err(CayleyError::WrongDegree {
            expected: 2 * d - 1,
            got: p.len().saturating_sub(1),
        });
    }
    if n < d {
        return Err(CayleyError::PeriodTooShort { n, d });
    }
    let order = 2 * n - 1;
    let series = sqrt_series(p, &Rat::zero(), Branch::Plus, order)?;
    let rows = n - 1;
    let cols = n - d + 1;
    let m: Vec<Vec<Rat>> = (1..=rows)
        .map(|i| {
            (0..cols)
                .map(|j| series.coeffs[n + i - j].clone())
                .collect()
        })
        .collect();
    let rank = rational_rank(&m);
    let bound = n - d + 1;
    Ok(ConditionReport {
        kind: ConditionKind::DDimPeriod,
        exact: true,
        matrix: m
            .iter()
            .map(|row| row.iter().map(ReportEntry::from_rat).collect())
            .collect(),
        verdict: (bound as f64) - (rank as f64),
        rank: Some(rank),
        rank_bound: Some(bound),
        satisfied: rank < bound,
        tolerance: None,
        note: format!(
            "entries are rational multipliers of B_k = r_k*sqrt(P(0)); \
             {rows}x{cols} block, satisfied iff rank < {bound}"
        ),
    })
}

/// Float embedding of the leading maximal minor of the rank block, for
/// sign bisection in caustic parameters: rows `1..=n−d+1` of the
/// `(n−1)×(n−d+1)` block.
pub fn ddim_leading_minor_value(p: &[Rat], n: usize, d: usize) -> Result<f64, CayleyError> {
    if n < d {
        return Err(CayleyError::PeriodTooShort { n, d });
    }
    let order = 2 * n - 1;
    let series = sqrt_series(p, &Rat::zero(), Branch::Plus, order)?;
    let cols = n - d + 1;
    let mm: Vec<Vec<Rat>> = (1..=cols)
        .map(|i| {
            (0..cols)
                .map(|j| series.coeffs[n + i - j].clone())
                .collect()
        })
        .collect();
    Ok(crate::rational::rat_to_f64(&crate::rational::rational_det(
        &mm,
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::cayley_planar;
    use crate::rational::{rat, ratpoly_from_descending_factors};

    #[test]
    fn d2_agrees_with_planar_on_exact_instances() {
        // n=3 instance
        let p = ratpoly_from_descending_factors(&[rat(9, 1), rat(4, 1), rat(36, 25)]);
        assert!(period_condition_ddim(&p, 3, 2).unwrap().satisfied);
        assert!(cayley_planar(&p, 3).unwrap().satisfied);
        // n=4 instance
        let q = ratpoly_from_descending_factors(&[rat(4, 1), rat(1, 1), rat(4, 5)]);
        assert!(period_condition_ddim(&q, 4, 2).unwrap().satisfied);
        assert!(!period_condition_ddim(&q, 3, 2).unwrap().satisfied);
    }

    #[test]
    fn d2_agreement_over_random_rational_pencils() {
        // Deterministic small corpus: verdicts of the two engines coincide
        // for n = 3..=8.
        let mut corpus = Vec::new();
        for k in 1..=20_i64 {
            let a1 = rat(20 + k, 10);
            let a2 = rat(10 + (k * 7) % 9, 10);
            let al = rat(1 + (k * 3) % 7, 10);
            corpus.push(vec![a1, a2, al]);
        }
        for roots in corpus {
            let p = ratpoly_from_descending_factors(&roots);
            for n in 3..=8 {
                let a = cayley_planar(&p, n).unwrap().satisfied;
                let b = period_condition_ddim(&p, n, 2).unwrap().satisfied;
                assert_eq!(a, b, "engines disagree at n={n} for {roots:?}");
            }
        }
    }

    #[test]
    fn short_period_reports_symmetry_plane_regime() {
        let p = ratpoly_from_descending_factors(&[
            rat(4, 1),
            rat(2, 1),
            rat(1, 1),
            rat(1, 2),
            rat(3, 2),
        ]);
        assert!(matches!(
            period_condition_ddim(&p, 2, 3),
            Err(CayleyError::PeriodTooShort { n: 2, d: 3 })
        ));
    }

    #[test]
    fn d3_n3_generic_not_satisfied() {
        let p = ratpoly_from_descending_factors(&[
            rat(4, 1),
            rat(2, 1),
            rat(1, 1),
            rat(1, 2),
            rat(3, 2),
        ]);
        let rep = period_condition_ddim(&p, 3, 3).unwrap();
        assert!(!rep.satisfied);
        // 2x1 block: rank must be 0 for satisfaction.
        assert_eq!(rep.matrix.len(), 2);
        assert_eq!(rep.matrix[0].len(), 1);
    }
}
