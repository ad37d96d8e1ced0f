//! Exact counterparts over arbitrary-precision rationals for the polynomial
//! and rank operations whose float versions live elsewhere in this crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Shorthand constructor for a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Best-effort conversion of a float into an exact rational (the float's
/// binary value, exactly).
pub fn rat_from_f64(x: f64) -> Option<BigRational> {
    BigRational::from_float(x)
}

pub fn rat_to_f64(x: &BigRational) -> f64 {
    let num = x.numer();
    let den = x.denom();
    // Scale down to avoid overflow for very long integers.
    let bits = num.bits().max(den.bits());
    if bits <= 1023 {
        big_to_f64(num) / big_to_f64(den)
    } else {
        let shift = bits - 1000;
        big_to_f64(&(num >> shift)) / big_to_f64(&(den >> shift))
    }
}

fn big_to_f64(x: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

/// Expands `∏ (rᵢ − x)` into ascending rational coefficients.
pub fn ratpoly_from_descending_factors(roots: &[BigRational]) -> Vec<BigRational> {
    let mut c = vec![BigRational::one()];
    for r in roots {
        let mut next = vec![BigRational::zero(); c.len() + 1];
        for (k, ck) in c.iter().enumerate() {
            next[k] += r * ck;
            next[k + 1] -= ck;
        }
        c = next;
    }
    c
}

pub fn ratpoly_eval(c: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for ck in c.iter().rev() {
        acc = acc * x + ck;
    }
    acc
}

/// Rank of a rational matrix by Gaussian elimination with exact pivots.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        // Largest pivot by absolute value keeps the numbers smaller.
        let pivot = (row..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
        let Some(p) = pivot else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for r in (row + 1)..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..ncols {
                let sub = &factor * &m[row][c];
                m[r][c] -= sub;
            }
        }
        rank += 1;
        row += 1;
    }
    rank
}

/// Determinant of a square rational matrix (Bareiss-free plain elimination;
/// sizes here are small).
pub fn rational_det(rows: &[Vec<BigRational>]) -> BigRational {
    let n = rows.len();
    let mut m = rows.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return BigRational::zero();
        };
        if p != col {
            m.swap(col, p);
            det = -det;
        }
        det *= m[col][col].clone();
        let inv = m[col][col].recip();
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![rat(1, 1), rat(2, 1), rat(3, 1)],
            vec![rat(2, 1), rat(4, 1), rat(6, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
        ];
        assert_eq!(rational_rank(&rows), 2);
    }

    #[test]
    fn det_small() {
        let rows = vec![vec![rat(2, 1), rat(1, 1)], vec![rat(1, 1), rat(1, 1)]];
        assert_eq!(rational_det(&rows), rat(1, 1));
    }
}
