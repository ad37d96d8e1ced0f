//! Exact polynomial and power-series helpers over `BigRational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use confocal_core::exact::{
    rat, rat_from_f64, rat_to_f64, ratpoly_eval, ratpoly_from_descending_factors, rational_det,
    rational_rank,
};

pub type Rat = BigRational;

/// `C(n, k)` as a big integer.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Taylor shift: coefficients of `q(t) = p(x0 + t)`.
pub fn taylor_shift(p: &[Rat], x0: &Rat) -> Vec<Rat> {
    let n = p.len();
    let mut q = vec![Rat::zero(); n];
    // Powers of x0.
    let mut pows = Vec::with_capacity(n);
    let mut acc = Rat::one();
    for _ in 0..n {
        pows.push(acc.clone());
        acc *= x0;
    }
    for (j, pj) in p.iter().enumerate() {
        if pj.is_zero() {
            continue;
        }
        for k in 0..=j {
            let c = Rat::from(binomial(j, k));
            q[k] += pj * c * &pows[j - k];
        }
    }
    q
}

pub fn poly_derivative(p: &[Rat]) -> Vec<Rat> {
    if p.len() <= 1 {
        return vec![Rat::zero()];
    }
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rat::from(BigInt::from(k)))
        .collect()
}

/// Truncated product of two series (ascending coefficients).
pub fn series_mul(a: &[Rat], b: &[Rat], order: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Series of `(x0 + t)^{-k}` in `t` up to `order`:
/// `Σ_j (-1)^j C(k+j-1, j) x0^{-k-j} t^j`.
pub fn inv_power_series(x0: &Rat, k: usize, order: usize) -> Vec<Rat> {
    assert!(!x0.is_zero());
    let inv = x0.recip();
    let mut base = Rat::one();
    for _ in 0..k {
        base *= &inv;
    }
    let mut out = Vec::with_capacity(order + 1);
    let mut acc = base;
    for j in 0..=order {
        let c = Rat::from(binomial(k + j - 1, j));
        let term = if j % 2 == 0 { &acc * c } else { -(&acc * c) };
        out.push(term);
        acc *= &inv;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_quadratic() {
        // p = 1 + x^2, q(t) = p(2+t) = 5 + 4t + t^2
        let p = vec![rat(1, 1), rat(0, 1), rat(1, 1)];
        let q = taylor_shift(&p, &rat(2, 1));
        assert_eq!(q, vec![rat(5, 1), rat(4, 1), rat(1, 1)]);
    }

    #[test]
    fn inverse_power() {
        // (2+t)^{-1} = 1/2 - t/4 + t^2/8 - ...
        let s = inv_power_series(&rat(2, 1), 1, 3);
        assert_eq!(s, vec![rat(1, 2), rat(-1, 4), rat(1, 8), rat(-1, 16)]);
    }
}
