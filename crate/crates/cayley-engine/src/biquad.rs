//! Exact arithmetic in the biquadratic extension `ℚ(√s₁, √s₂)`, the field
//! the two-point conditions live in: entries mix the surds of `𝒫` at the
//! two expansion points. Elements are stored on the basis
//! `{1, u, v, uv}` with `u² = s₁`, `v² = s₂`.

use num_traits::Zero;
use std::fmt;

use crate::error::CayleyError;
use crate::rational::{rat_to_f64, Rat};

#[derive(Debug, Clone, PartialEq)]
pub struct BiquadCtx {
    pub s1: Rat,
    pub s2: Rat,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Biquad {
    pub a: Rat, // 1-part
    pub b: Rat, // u-part
    pub c: Rat, // v-part
    pub d: Rat, // uv-part
}

impl Biquad {
    pub fn zero() -> Self {
        Biquad {
            a: Rat::zero(),
            b: Rat::zero(),
            c: Rat::zero(),
            d: Rat::zero(),
        }
    }

    pub fn from_rat(a: Rat) -> Self {
        Biquad {
            a,
            ..Biquad::zero()
        }
    }

    pub fn from_u(b: Rat) -> Self {
        Biquad {
            b,
            ..Biquad::zero()
        }
    }

    pub fn from_v(c: Rat) -> Self {
        Biquad {
            c,
            ..Biquad::zero()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn add(&self, other: &Biquad) -> Biquad {
        Biquad {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            c: &self.c + &other.c,
            d: &self.d + &other.d,
        }
    }

    pub fn sub(&self, other: &Biquad) -> Biquad {
        Biquad {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            c: &self.c - &other.c,
            d: &self.d - &other.d,
        }
    }

    pub fn neg(&self) -> Biquad {
        Biquad {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }

    pub fn scale(&self, k: &Rat) -> Biquad {
        Biquad {
            a: &self.a * k,
            b: &self.b * k,
            c: &self.c * k,
            d: &self.d * k,
        }
    }

    pub fn mul(&self, other: &Biquad, ctx: &BiquadCtx) -> Biquad {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&other.a, &other.b, &other.c, &other.d);
        let s1 = &ctx.s1;
        let s2 = &ctx.s2;
        Biquad {
            a: a1 * a2 + b1 * b2 * s1 + c1 * c2 * s2 + d1 * d2 * s1 * s2,
            b: a1 * b2 + b1 * a2 + (c1 * d2 + d1 * c2) * s2,
            c: a1 * c2 + c1 * a2 + (b1 * d2 + d1 * b2) * s1,
            d: a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        }
    }

    /// Field inverse via the two conjugations:
    /// `z · z̄ᵘ = A + Bv` with rational `A, B`, and `(A+Bv)(A−Bv) = A²−B²s₂`.
    pub fn inv(&self, ctx: &BiquadCtx) -> Result<Biquad, CayleyError> {
        if self.is_zero() {
            return Err(CayleyError::DegenerateExtension);
        }
        let conj_u = Biquad {
            a: self.a.clone(),
            b: -self.b.clone(),
            c: self.c.clone(),
            d: -self.d.clone(),
        };
        let z = self.mul(&conj_u, ctx);
        debug_assert!(z.b.is_zero() && z.d.is_zero());
        let (aa, bb) = (z.a, z.c);
        let norm = &aa * &aa - &bb * &bb * &ctx.s2;
        if norm.is_zero() {
            return Err(CayleyError::DegenerateExtension);
        }
        let conj_v = Biquad {
            a: aa,
            b: Rat::zero(),
            c: -bb,
            d: Rat::zero(),
        };
        Ok(conj_u.mul(&conj_v, ctx).scale(&norm.recip()))
    }

    /// Embedding with `u = +√s₁`, `v = +√s₂` as a float.
    pub fn value_f64(&self, ctx: &BiquadCtx) -> f64 {
        let su = rat_to_f64(&ctx.s1).max(0.0).sqrt();
        let sv = rat_to_f64(&ctx.s2).max(0.0).sqrt();
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * su + rat_to_f64(&self.c) * sv
            + rat_to_f64(&self.d) * su * sv
    }
}

impl fmt::Display for Biquad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·u + {}·v + {}·uv", self.a, self.b, self.c, self.d)
    }
}

/// Determinant of a square matrix over the biquadratic field by Gaussian
/// elimination with exact inverses.
pub fn biquad_det(m: &[Vec<Biquad>], ctx: &BiquadCtx) -> Result<Biquad, CayleyError> {
    let n = m.len();
    let mut m: Vec<Vec<Biquad>> = m.to_vec();
    let mut det = Biquad::from_rat(Rat::from_integer(1.into()));
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(Biquad::zero());
        };
        if p != col {
            m.swap(col, p);
            det = det.neg();
        }
        det = det.mul(&m[col][col], ctx);
        let inv = m[col][col].inv(ctx)?;
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].mul(&inv, ctx);
            for c in col..n {
                let sub = factor.mul(&m[col][c], ctx);
                m[r][c] = m[r][c].sub(&sub);
            }
        }
    }
    Ok(det)
}

/// Rank of a rectangular matrix over the biquadratic field.
pub fn biquad_rank(m: &[Vec<Biquad>], ctx: &BiquadCtx) -> Result<usize, CayleyError> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Biquad>> = m.to_vec();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        if row >= nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv(ctx)?;
        for r in (row + 1)..nrows {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].mul(&inv, ctx);
            for c in col..ncols {
                let sub = factor.mul(&m[row][c], ctx);
                m[r][c] = m[r][c].sub(&sub);
            }
        }
        rank += 1;
        row += 1;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn ctx() -> BiquadCtx {
        BiquadCtx {
            s1: rat(2, 1),
            s2: rat(3, 1),
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let ctx = ctx();
        let z = Biquad {
            a: rat(1, 2),
            b: rat(-3, 1),
            c: rat(5, 7),
            d: rat(2, 3),
        };
        let w = z.inv(&ctx).unwrap();
        let one = z.mul(&w, &ctx);
        assert_eq!(one.a, rat(1, 1));
        assert!(one.b.is_zero() && one.c.is_zero() && one.d.is_zero());
    }

    #[test]
    fn value_embedding() {
        let ctx = ctx();
        let z = Biquad {
            a: rat(1, 1),
            b: rat(1, 1),
            c: rat(1, 1),
            d: rat(1, 1),
        };
        let expect = 1.0 + 2.0_f64.sqrt() + 3.0_f64.sqrt() + 6.0_f64.sqrt();
        assert!((z.value_f64(&ctx) - expect).abs() < 1e-12);
    }

    #[test]
    fn det_of_singular_matrix_is_zero() {
        let ctx = ctx();
        let r1 = vec![Biquad::from_u(rat(1, 1)), Biquad::from_v(rat(2, 1))];
        let r2 = vec![Biquad::from_u(rat(3, 1)), Biquad::from_v(rat(6, 1))];
        let det = biquad_det(&[r1, r2], &ctx).unwrap();
        assert!(det.is_zero());
    }

    #[test]
    fn rank_counts_independent_rows() {
        let ctx = ctx();
        let r1 = vec![Biquad::from_u(rat(1, 1)), Biquad::from_v(rat(2, 1))];
        let r2 = vec![Biquad::from_v(rat(1, 1)), Biquad::from_u(rat(1, 1))];
        let r3 = r1.iter().zip(&r2).map(|(a, b)| a.add(b)).collect();
        assert_eq!(biquad_rank(&[r1, r2, r3], &ctx).unwrap(), 2);
    }
}
