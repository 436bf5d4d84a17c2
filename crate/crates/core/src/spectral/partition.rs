//! Vertex partitions and their quotient matrices.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Ordered list of disjoint, nonempty blocks covering 0..n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n];
        for (i, b) in blocks.iter().enumerate() {
            if b.is_empty() {
                return Err(Error::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in b {
                if v >= n {
                    return Err(Error::InvalidPartition(format!("vertex {v} out of range for n = {n}")));
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("vertex {v} not covered")));
        }
        Ok(Partition { blocks })
    }

    pub fn singletons(n: usize) -> Self {
        Partition { blocks: (0..n).map(|v| vec![v]).collect() }
    }

    pub fn whole(n: usize) -> Self {
        Partition { blocks: vec![(0..n).collect()] }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    fn order(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

/// Entry (i, j) is the average number of neighbours in block j of a vertex
/// in block i.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuotientMatrix {
    pub entries: Vec<Vec<f64>>,
    /// Every vertex of block i has the same number of neighbours in block j.
    pub equitable: bool,
}

impl QuotientMatrix {
    /// Wraps an explicit non-negative square matrix, e.g. one written down
    /// for a family of graphs rather than computed from a partition.
    pub fn from_entries(entries: Vec<Vec<f64>>) -> Result<Self> {
        let k = entries.len();
        if k == 0 || entries.iter().any(|r| r.len() != k) {
            return Err(Error::Infeasible("quotient matrix must be square and nonempty".into()));
        }
        if entries.iter().flatten().any(|&x| !(x >= 0.0) || !x.is_finite()) {
            return Err(Error::Infeasible("quotient matrix entries must be finite and non-negative".into()));
        }
        let equitable = entries.iter().flatten().all(|x| x.fract() == 0.0);
        Ok(QuotientMatrix { entries, equitable })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

pub fn quotient_matrix(g: &Graph, pi: &Partition) -> Result<QuotientMatrix> {
    if pi.order() != g.order() {
        return Err(Error::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            pi.order(),
            g.order()
        )));
    }
    let masks: Vec<u64> = pi.blocks.iter().map(|b| b.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
    let mut equitable = true;
    let entries = pi
        .blocks
        .iter()
        .map(|bi| {
            masks
                .iter()
                .map(|&mj| {
                    let counts: Vec<u32> = bi.iter().map(|&v| (g.neighbor_mask(v) & mj).count_ones()).collect();
                    equitable &= counts.iter().all(|&c| c == counts[0]);
                    counts.iter().sum::<u32>() as f64 / bi.len() as f64
                })
                .collect()
        })
        .collect();
    Ok(QuotientMatrix { entries, equitable })
}

const QUOTIENT_MAX_ITERATIONS: usize = 1_000_000;

/// Largest real eigenvalue of a non-negative matrix. Power iteration on Q + I
/// with Collatz–Wielandt bounds; for k ≤ 3 the result is cross-checked
/// against the largest root of the characteristic polynomial.
pub fn quotient_spectral_radius(q: &QuotientMatrix) -> Result<f64> {
    let m = &q.entries;
    let k = m.len();
    if k == 0 || m.iter().any(|r| r.len() != k) || m.iter().flatten().any(|&x| !(x >= 0.0)) {
        return Err(Error::Infeasible("quotient matrix must be square, nonempty and non-negative".into()));
    }
    if k == 1 {
        return Ok(m[0][0]);
    }
    let power = power_nonneg(m)?;
    if k <= 3 {
        let root = crate::poly::largest_real_root(&crate::poly::char_poly_f64(m), None)?;
        if (root - power).abs() > 1e-6 * root.abs().max(1.0) {
            return Err(Error::Inconsistent(format!(
                "quotient radius by iteration {power} vs characteristic root {root}"
            )));
        }
        return Ok(root);
    }
    Ok(power)
}

fn power_nonneg(m: &[Vec<f64>]) -> Result<f64> {
    let k = m.len();
    let mut x = vec![1.0; k];
    let mut y = vec![0.0; k];
    let mut prev = f64::INFINITY;
    let mut gap = f64::INFINITY;
    for _ in 0..QUOTIENT_MAX_ITERATIONS {
        for i in 0..k {
            y[i] = x[i] + m[i].iter().zip(&x).map(|(a, b)| a * b).sum::<f64>();
        }
        // Collatz–Wielandt: min y_i/x_i <= rho + 1 <= max y_i/x_i for x > 0.
        let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
        for i in 0..k {
            if x[i] > 0.0 {
                let r = y[i] / x[i];
                lo = lo.min(r);
                hi = hi.max(r);
            }
        }
        let norm = y.iter().cloned().fold(0.0, f64::max);
        if norm == 0.0 {
            return Ok(0.0);
        }
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
        gap = hi - lo;
        if gap <= 1e-13 * hi.max(1.0) {
            return Ok(0.5 * (hi + lo) - 1.0);
        }
        // Reducible matrices can leave a zero block; fall back to the norm ratio.
        if (norm - prev).abs() <= 1e-15 * norm && x.iter().any(|&v| v < 1e-300) {
            return Ok(norm - 1.0);
        }
        prev = norm;
    }
    Err(Error::NoConvergence { iterations: QUOTIENT_MAX_ITERATIONS, residual: gap })
}
