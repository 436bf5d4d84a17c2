//! Power means of degree sequences and the p at which they meet ρ(G).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};

/// Order of a power mean: a finite p ≥ 1 or infinity (the maximum).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum MeanOrder {
    Finite(f64),
    Infinity,
}

impl fmt::Display for MeanOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanOrder::Finite(p) => write!(f, "{p}"),
            MeanOrder::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for MeanOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(MeanOrder::Infinity),
            t => t
                .parse::<f64>()
                .map(MeanOrder::Finite)
                .map_err(|_| Error::Parse(format!("bad mean order {t:?}"))),
        }
    }
}

/// (1/n Σ d_i^p)^(1/p), or the maximum degree for p = ∞.
pub fn p_mean(d: &DegreeSequence, p: MeanOrder) -> Result<f64> {
    let ds = d.as_slice();
    if ds.is_empty() {
        return Err(Error::Infeasible("empty degree sequence".into()));
    }
    let max = d.max() as f64;
    match p {
        MeanOrder::Infinity => Ok(max),
        MeanOrder::Finite(p) if !(p >= 1.0) => {
            Err(Error::Infeasible(format!("mean order must be >= 1, got {p}")))
        }
        MeanOrder::Finite(_) if max == 0.0 => Ok(0.0),
        MeanOrder::Finite(p) if p.is_infinite() => Ok(max),
        MeanOrder::Finite(p) => {
            // Scale by the maximum so large p cannot overflow.
            let s: f64 = ds.iter().map(|&x| (x as f64 / max).powf(p)).sum::<f64>() / ds.len() as f64;
            Ok(max * s.powf(1.0 / p))
        }
    }
}

/// Lower bound 2e/n on ρ(G).
pub fn rho_lower_bound(g: &Graph) -> f64 {
    2.0 * g.edge_count() as f64 / g.order() as f64
}

/// The unique p in [1, ∞] with p_mean(degrees, p) = ρ(G), to within `tol` in p.
/// Regular graphs give 1.
pub fn char_rho(g: &Graph, tol: f64) -> Result<f64> {
    if !(tol > 0.0) {
        return Err(Error::Infeasible(format!("tolerance must be positive, got {tol}")));
    }
    let rho = super::spectral_radius(g, super::DEFAULT_TOL)?.rho;
    let d = g.degrees();
    if d.is_constant() {
        let deg = d.max() as f64;
        if (rho - deg).abs() > 1e-9 * deg.max(1.0) {
            return Err(Error::Inconsistent(format!(
                "regular graph of degree {deg} has spectral radius {rho}"
            )));
        }
        return Ok(1.0);
    }
    let f = |p: f64| p_mean(&d, MeanOrder::Finite(p)).map(|m| m - rho);
    let mut lo = 1.0;
    let mut hi = 2.0;
    while f(hi)? < 0.0 {
        lo = hi;
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::Inconsistent("no bracket for the spectral mean order".into()));
        }
    }
    while hi - lo > tol * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if f(mid)? < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
