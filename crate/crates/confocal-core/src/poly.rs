//! Small real-polynomial helpers: expansion from roots, evaluation, and a
//! root finder specialised to real-rooted polynomials (all the polynomials
//! arising from confocal geometry are real-rooted).

/// Coefficients in the monomial basis, ascending: `c[0] + c[1] x + …`.
pub type Coeffs = Vec<f64>;

/// Expands `∏ (r_i − x)` into monomial coefficients.
pub fn from_roots_descending_factors(roots: &[f64]) -> Coeffs {
    // (r - x) factors; multiply iteratively.
    let mut c = vec![1.0];
    for &r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (k, &ck) in c.iter().enumerate() {
            next[k] += r * ck; // r * x^k
            next[k + 1] -= ck; // -x * x^k
        }
        c = next;
    }
    c
}

pub fn eval(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &ck| acc * x + ck)
}

pub fn derivative(c: &[f64]) -> Coeffs {
    if c.len() <= 1 {
        return vec![0.0];
    }
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(k, &ck)| k as f64 * ck)
        .collect()
}

fn leading(c: &[f64]) -> (usize, f64) {
    for (k, &ck) in c.iter().enumerate().rev() {
        if ck != 0.0 {
            return (k, ck);
        }
    }
    (0, 0.0)
}

/// Cauchy bound on the absolute value of any root.
fn root_bound(c: &[f64]) -> f64 {
    let (deg, lead) = leading(c);
    if deg == 0 {
        return 1.0;
    }
    1.0 + c[..deg]
        .iter()
        .map(|ck| (ck / lead).abs())
        .fold(0.0, f64::max)
}

fn bisect(c: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let flo = eval(c, lo);
    if flo == 0.0 {
        return lo;
    }
    let sign_lo = flo > 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = eval(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All real roots of a real-rooted polynomial, ascending.
///
/// Roots of the derivative interlace the roots, so the derivative's roots
/// (found recursively) plus the Cauchy bound bracket every root; each
/// bracket is resolved by bisection. Multiple roots collapse to one entry.
pub fn real_roots(c: &[f64]) -> Vec<f64> {
    let (deg, _) = leading(c);
    match deg {
        0 => vec![],
        1 => vec![-c[0] / c[1]],
        2 => {
            let (a, b, cc) = (c[2], c[1], c[0]);
            let disc = b * b - 4.0 * a * cc;
            if disc < 0.0 {
                return vec![];
            }
            let sq = disc.sqrt();
            // Stable quadratic formula.
            let q = -0.5 * (b + b.signum() * sq);
            let mut r = if b == 0.0 {
                vec![-sq / (2.0 * a), sq / (2.0 * a)]
            } else {
                vec![q / a, cc / q]
            };
            r.sort_by(|x, y| x.partial_cmp(y).unwrap());
            r
        }
        _ => {
            let trimmed: Vec<f64> = c[..=deg].to_vec();
            let crit = real_roots(&derivative(&trimmed));
            let bound = root_bound(&trimmed);
            let mut cuts = vec![-bound];
            cuts.extend(crit.iter().filter(|r| r.abs() < bound));
            cuts.push(bound);
            let mut roots = Vec::new();
            for w in cuts.windows(2) {
                let (lo, hi) = (w[0], w[1]);
                let (flo, fhi) = (eval(&trimmed, lo), eval(&trimmed, hi));
                if flo == 0.0 {
                    push_root(&mut roots, lo);
                }
                if flo * fhi < 0.0 {
                    push_root(&mut roots, bisect(&trimmed, lo, hi));
                }
            }
            let (_, fb) = (bound, eval(&trimmed, bound));
            if fb == 0.0 {
                push_root(&mut roots, bound);
            }
            // A critical point sitting exactly on the axis is a multiple root.
            for r in crit {
                if eval(&trimmed, r).abs() <= f64::EPSILON * scale_at(&trimmed, r) {
                    push_root(&mut roots, r);
                }
            }
            roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
            roots
        }
    }
}

fn scale_at(c: &[f64], x: f64) -> f64 {
    c.iter()
        .enumerate()
        .map(|(k, &ck)| (ck * x.powi(k as i32)).abs())
        .sum::<f64>()
        .max(1.0)
}

fn push_root(roots: &mut Vec<f64>, r: f64) {
    let dup = roots
        .iter()
        .any(|&x| (x - r).abs() <= 1e-12 * (1.0 + x.abs().max(r.abs())));
    if !dup {
        roots.push(r);
    }
}
