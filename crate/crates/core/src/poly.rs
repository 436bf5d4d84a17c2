//! Real polynomials in f64 with a robust largest-real-root finder.
//!
//! Coefficients are stored highest degree first: `[a_d, ..., a_1, a_0]`.

use crate::error::{Error, Result};

/// Horner evaluation, highest-degree coefficient first.
pub fn eval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().fold(0.0, |acc, &c| acc * x + c)
}

fn trim(coeffs: &[f64]) -> &[f64] {
    let start = coeffs.iter().position(|&c| c != 0.0).unwrap_or(coeffs.len());
    &coeffs[start..]
}

pub fn derivative(coeffs: &[f64]) -> Vec<f64> {
    let c = trim(coeffs);
    let d = c.len().saturating_sub(1);
    c[..d]
        .iter()
        .enumerate()
        .map(|(i, &a)| a * (d - i) as f64)
        .collect()
}

/// Cauchy bound: every root z satisfies |z| < bound.
pub fn root_bound(coeffs: &[f64]) -> f64 {
    let c = trim(coeffs);
    if c.len() < 2 {
        return 1.0;
    }
    let lead = c[0].abs();
    1.0 + c[1..].iter().map(|a| a.abs() / lead).fold(0.0, f64::max)
}

fn bisect(coeffs: &[f64], mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = eval(coeffs, lo);
    if flo == 0.0 {
        return lo;
    }
    if eval(coeffs, hi) == 0.0 {
        return hi;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = eval(coeffs, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All real roots (including even-multiplicity ones) in increasing order,
/// found by splitting the line at the critical points and bisecting each
/// monotone piece.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let c = trim(coeffs);
    match c.len() {
        0 | 1 => return Vec::new(),
        2 => return vec![-c[1] / c[0]],
        _ => {}
    }
    let bound = root_bound(c);
    let crit = real_roots(&derivative(c));
    let mut knots = Vec::with_capacity(crit.len() + 2);
    knots.push(-bound);
    knots.extend(crit.iter().copied().filter(|x| x.abs() < bound));
    knots.push(bound);
    let scale = c.iter().map(|a| a.abs()).fold(0.0, f64::max) * bound.powi(c.len() as i32 - 1);
    let touch = 1e-12 * scale.max(1.0);
    let mut roots: Vec<f64> = Vec::new();
    for w in knots.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (eval(c, a), eval(c, b));
        if fa == 0.0 {
            roots.push(a);
        } else if (fa > 0.0) != (fb > 0.0) && fb != 0.0 {
            roots.push(bisect(c, a, b));
        }
    }
    if eval(c, bound) == 0.0 {
        roots.push(bound);
    }
    // Critical points where the polynomial touches zero are double roots.
    for &x in &crit {
        if eval(c, x).abs() <= touch && !roots.iter().any(|r| (r - x).abs() < 1e-9) {
            roots.push(x);
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots.dedup_by(|a, b| (*a - *b).abs() < 1e-14 * a.abs().max(1.0));
    roots
}

/// Largest real root not below `low`, polished by Newton steps.
pub fn largest_real_root(coeffs: &[f64], low: Option<f64>) -> Result<f64> {
    let c = trim(coeffs);
    let roots = real_roots(c);
    let r = *roots.last().ok_or(Error::NoRoot)?;
    if let Some(lo) = low {
        if r < lo {
            return Err(Error::NoRoot);
        }
    }
    let d = derivative(c);
    let mut x = r;
    for _ in 0..4 {
        let fd = eval(&d, x);
        if fd == 0.0 {
            break;
        }
        let step = eval(c, x) / fd;
        if !step.is_finite() || step.abs() > 1e-6 * x.abs().max(1.0) {
            break;
        }
        x -= step;
    }
    Ok(x)
}

/// Characteristic polynomial of a small dense matrix by Faddeev–LeVerrier,
/// highest-degree coefficient first.
pub fn char_poly_f64(m: &[Vec<f64>]) -> Vec<f64> {
    let k = m.len();
    let mut coeffs = vec![0.0; k + 1];
    coeffs[0] = 1.0;
    let mut mk = vec![vec![0.0; k]; k];
    for step in 1..=k {
        // M_step = A M_{step-1} + c_{step-1} I
        let mut next = vec![vec![0.0; k]; k];
        for i in 0..k {
            for j in 0..k {
                let mut s = 0.0;
                for l in 0..k {
                    s += m[i][l] * mk[l][j];
                }
                next[i][j] = s;
            }
            next[i][i] += coeffs[step - 1];
        }
        let mut tr = 0.0;
        for i in 0..k {
            for l in 0..k {
                tr += m[i][l] * next[l][i];
            }
        }
        coeffs[step] = -tr / step as f64;
        mk = next;
    }
    coeffs
}

/// Exact characteristic polynomial det(xI - M) of a small integer matrix.
pub fn char_poly_i64(m: &[Vec<i64>]) -> Vec<i64> {
    let k = m.len();
    let mut coeffs = vec![0i128; k + 1];
    coeffs[0] = 1;
    let mut mk = vec![vec![0i128; k]; k];
    for step in 1..=k {
        let mut next = vec![vec![0i128; k]; k];
        for i in 0..k {
            for j in 0..k {
                next[i][j] = (0..k).map(|l| m[i][l] as i128 * mk[l][j]).sum();
            }
            next[i][i] += coeffs[step - 1];
        }
        let tr: i128 = (0..k).flat_map(|i| (0..k).map(move |l| (i, l))).map(|(i, l)| m[i][l] as i128 * next[l][i]).sum();
        debug_assert_eq!(tr % step as i128, 0);
        coeffs[step] = -tr / step as i128;
        mk = next;
    }
    coeffs.into_iter().map(|c| c as i64).collect()
}
