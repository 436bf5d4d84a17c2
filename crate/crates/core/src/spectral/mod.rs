//! Spectral radius, exact characteristic polynomials, quotient matrices and
//! degree means.

mod charpoly;
mod means;
mod partition;

pub use charpoly::{char_poly, CharPoly};
pub use means::{char_rho, p_mean, rho_lower_bound, MeanOrder};
pub use partition::{quotient_matrix, quotient_spectral_radius, Partition, QuotientMatrix};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};

/// Default residual tolerance for [`spectral_radius`].
pub const DEFAULT_TOL: f64 = 1e-12;
/// Iteration cap for power iteration.
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Spectral radius with its principal eigenvector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Unit 2-norm, non-negative; strictly positive for connected graphs.
    pub eigenvector: Vec<f64>,
    /// ‖Ax − ρx‖∞ at termination.
    pub residual: f64,
    /// Some eigenvalue of A lies within this distance of `rho` (‖Ax − ρx‖₂).
    pub error_bound: f64,
    pub iterations: usize,
}

/// ρ(G) by power iteration on A + I. Requires a connected graph.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    power_iteration(g, tol)
}

/// ρ(G) for any graph: the maximum over components. The eigenvector is the
/// Perron vector of a maximizing component padded with zeros.
pub fn spectral_radius_any(g: &Graph, tol: f64) -> Result<SpectralResult> {
    if g.is_connected() {
        return power_iteration(g, tol);
    }
    let n = g.order();
    let mut remaining = crate::graph::full_mask(n);
    let mut best: Option<SpectralResult> = None;
    while remaining != 0 {
        let v = remaining.trailing_zeros() as usize;
        let comp = g.component_mask(v);
        remaining &= !comp;
        let verts: Vec<usize> = BitIter(comp).collect();
        let sub = g.induced(&verts)?;
        let r = power_iteration(&sub, tol)?;
        if best.as_ref().is_none_or(|b| r.rho > b.rho) {
            let mut x = vec![0.0; n];
            for (i, &v) in verts.iter().enumerate() {
                x[v] = r.eigenvector[i];
            }
            best = Some(SpectralResult { eigenvector: x, ..r });
        }
    }
    Ok(best.expect("graph has at least one vertex"))
}

/// Just the value ρ(G), any graph.
pub fn rho(g: &Graph) -> Result<f64> {
    spectral_radius_any(g, DEFAULT_TOL).map(|r| r.rho)
}

fn mul_adj(g: &Graph, x: &[f64], y: &mut [f64]) {
    for (v, yv) in y.iter_mut().enumerate() {
        *yv = BitIter(g.neighbor_mask(v)).map(|u| x[u]).sum();
    }
}

fn power_iteration(g: &Graph, tol: f64) -> Result<SpectralResult> {
    if !(tol > 0.0) {
        return Err(Error::Infeasible(format!("tolerance must be positive, got {tol}")));
    }
    let n = g.order();
    if n == 1 {
        return Ok(SpectralResult {
            rho: 0.0,
            eigenvector: vec![1.0],
            residual: 0.0,
            error_bound: 0.0,
            iterations: 0,
        });
    }
    // Start from sqrt(d+1), a decent approximation of the Perron vector.
    let mut x: Vec<f64> = (0..n).map(|v| ((g.degree(v) + 1) as f64).sqrt()).collect();
    normalize(&mut x);
    let mut ax = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for it in 1..=MAX_ITERATIONS {
        mul_adj(g, &x, &mut ax);
        let rho = dot(&x, &ax);
        residual = x
            .iter()
            .zip(&ax)
            .map(|(xi, yi)| (yi - rho * xi).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            let error_bound = x
                .iter()
                .zip(&ax)
                .map(|(xi, yi)| (yi - rho * xi).powi(2))
                .sum::<f64>()
                .sqrt();
            return Ok(SpectralResult {
                rho,
                eigenvector: x,
                residual,
                error_bound,
                iterations: it,
            });
        }
        // x <- (A + I) x
        for (xi, yi) in x.iter_mut().zip(&ax) {
            *xi += yi;
        }
        normalize(&mut x);
    }
    Err(Error::NoConvergence { iterations: MAX_ITERATIONS, residual })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(x: &mut [f64]) {
    let norm = dot(x, x).sqrt();
    for xi in x.iter_mut() {
        *xi /= norm;
    }
}
