//! Isomorphism-free generation of graphs by adding one edge at a time.
//!
//! Level k holds one canonical representative of every graph on n vertices
//! with k edges. Level k+1 is obtained by adding each non-edge to each
//! representative and keeping the distinct canonical forms. Dense edge counts
//! are served from the complementary level.

use std::time::Instant;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{CanonicalForm, Graph};
use crate::spectral::{spectral_radius_any, DEFAULT_TOL};

/// Largest order accepted by the enumerator.
pub const MAX_ENUM_N: usize = 10;

fn binom2(n: usize) -> usize {
    n * (n - 1) / 2
}

fn check_range(n: usize, e: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::Infeasible(format!("enumeration needs 1 <= n <= {MAX_ENUM_N}, got {n}")));
    }
    if e + 1 < n || e > binom2(n) {
        return Err(Error::Infeasible(format!(
            "no connected graph with n = {n} and e = {e} (need {} <= e <= {})",
            n - 1,
            binom2(n)
        )));
    }
    Ok(())
}

/// Wall-clock limit shared by long-running searches.
#[derive(Debug, Clone, Copy)]
pub struct Deadline {
    start: Instant,
    limit_secs: Option<u64>,
}

impl Deadline {
    pub fn new(limit_secs: Option<u64>) -> Self {
        Deadline { start: Instant::now(), limit_secs }
    }

    pub fn none() -> Self {
        Deadline::new(None)
    }

    pub fn check(&self) -> Result<()> {
        match self.limit_secs {
            Some(s) if self.start.elapsed().as_secs_f64() > s as f64 => Err(Error::Budget(s)),
            _ => Ok(()),
        }
    }

    pub fn elapsed_secs(&self) -> f64 {
        self.start.elapsed().as_secs_f64()
    }
}

/// All non-isomorphic children of a level, sorted.
fn augment(parents: &[CanonicalForm], keep: impl Fn(&Graph) -> bool + Sync) -> Vec<CanonicalForm> {
    let mut next: Vec<CanonicalForm> = parents
        .par_iter()
        .flat_map_iter(|cf| {
            let g = cf.to_graph();
            let n = g.order();
            let mut kids = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if !g.has_edge(i, j) {
                        let h = g.with_edge(i, j).expect("in range");
                        kids.push(h.canonical_form().expect("n <= 16"));
                    }
                }
            }
            kids.sort_unstable();
            kids.dedup();
            kids
        })
        .collect();
    next.par_sort_unstable();
    next.dedup();
    if next.is_empty() {
        return next;
    }
    next.into_par_iter().filter(|cf| keep(&cf.to_graph())).collect()
}

/// Caches the levels for one order so that sweeps over e share work.
#[derive(Debug, Clone)]
pub struct Enumerator {
    n: usize,
    levels: Vec<Vec<CanonicalForm>>,
}

impl Enumerator {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ENUM_N {
            return Err(Error::Infeasible(format!("enumeration needs 1 <= n <= {MAX_ENUM_N}, got {n}")));
        }
        let empty = Graph::empty(n)?.canonical_form()?;
        Ok(Enumerator { n, levels: vec![vec![empty]] })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Representatives of all graphs (connected or not) with k edges.
    pub fn level(&mut self, k: usize, deadline: &Deadline) -> Result<&[CanonicalForm]> {
        if k > binom2(self.n) {
            return Err(Error::Infeasible(format!("at most {} edges on {} vertices", binom2(self.n), self.n)));
        }
        while self.levels.len() <= k {
            deadline.check()?;
            let next = augment(self.levels.last().unwrap(), |_| true);
            self.levels.push(next);
        }
        Ok(&self.levels[k])
    }

    /// One representative per isomorphism class of connected graphs with
    /// e edges, in a fixed order.
    pub fn connected(&mut self, e: usize, deadline: &Deadline) -> Result<Vec<Graph>> {
        let n = self.n;
        check_range(n, e)?;
        let total = binom2(n);
        if 2 * e <= total {
            Ok(self.level(e, deadline)?.iter().map(CanonicalForm::to_graph).filter(Graph::is_connected).collect())
        } else {
            Ok(self
                .level(total - e, deadline)?
                .iter()
                .map(|cf| cf.to_graph().complement())
                .filter(Graph::is_connected)
                .collect())
        }
    }

    /// Number of connected classes with e edges.
    pub fn count_connected(&mut self, e: usize, deadline: &Deadline) -> Result<usize> {
        Ok(self.connected(e, deadline)?.len())
    }
}

/// One representative per isomorphism class of connected (n, e) graphs.
pub fn enumerate_connected(n: usize, e: usize) -> Result<Vec<Graph>> {
    Enumerator::new(n)?.connected(e, &Deadline::none())
}

/// Lower bound on Σ d_i² over all ways to add `extra` edges to a graph with
/// degrees `d` (each edge adds one to two different vertices). Degree units go
/// to the currently smallest degrees.
fn min_square_sum(d: &[usize], extra: usize, n: usize) -> u64 {
    let mut d: Vec<u64> = d.iter().map(|&x| x as u64).collect();
    d.sort_unstable();
    let cap = n as u64 - 1;
    let mut units = 2 * extra as u64;
    // Water-fill: raise the lowest level until the units run out.
    while units > 0 {
        let lvl = d[0];
        let mut j = 0;
        while j < d.len() && d[j] == lvl {
            j += 1;
        }
        let target = if j < d.len() { d[j] } else { cap };
        let room = (target - lvl) * j as u64;
        if target == lvl || room == 0 {
            break;
        }
        if units >= room {
            for x in d.iter_mut().take(j) {
                *x = target;
            }
            units -= room;
        } else {
            let each = units / j as u64;
            let rem = units % j as u64;
            for (k, x) in d.iter_mut().take(j).enumerate() {
                *x += each + (k < rem as usize) as u64;
            }
            units = 0;
        }
    }
    d.iter().map(|x| x * x).sum()
}

/// Connected (n, e) graphs with ρ ≤ `rho_max`, one per isomorphism class.
///
/// Adding an edge never decreases ρ, and ρ² ≥ Σ d_i² / n, so a partial graph
/// that already violates either bound (for its best possible completion) can
/// be dropped together with everything generated from it.
pub fn enumerate_connected_bounded(n: usize, e: usize, rho_max: f64, deadline: &Deadline) -> Result<Vec<Graph>> {
    check_range(n, e)?;
    if !(rho_max >= 0.0) {
        return Err(Error::Infeasible(format!("bound must be non-negative, got {rho_max}")));
    }
    let slack = 1e-9 * rho_max.max(1.0);
    let square_cap = n as f64 * (rho_max + slack).powi(2);
    let mut level = vec![Graph::empty(n)?.canonical_form()?];
    for k in 1..=e {
        deadline.check()?;
        let remaining = e - k;
        level = augment(&level, |g| {
            let d = g.degrees();
            if (d.max() as f64) > (rho_max + slack).powi(2) {
                return false;
            }
            if min_square_sum(d.as_slice(), remaining, n) as f64 > square_cap {
                return false;
            }
            spectral_radius_any(g, DEFAULT_TOL).map(|r| r.rho <= rho_max + slack).unwrap_or(true)
        });
    }
    Ok(level.iter().map(CanonicalForm::to_graph).filter(Graph::is_connected).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_connected(4, 3).unwrap().len(), 2);
        assert_eq!(enumerate_connected(5, 10).unwrap().len(), 1);
        assert_eq!(enumerate_connected(1, 0).unwrap().len(), 1);
        assert!(enumerate_connected(4, 2).is_err());
        assert!(enumerate_connected(4, 7).is_err());
        assert!(enumerate_connected(11, 12).is_err());
    }

    #[test]
    fn totals_for_small_orders() {
        // Connected graphs by order: 1, 1, 2, 6, 21, 112.
        for (n, expected) in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)] {
            let mut en = Enumerator::new(n).unwrap();
            let total: usize = (n - 1..=binom2(n)).map(|e| en.count_connected(e, &Deadline::none()).unwrap()).sum();
            assert_eq!(total, expected, "n = {n}");
        }
    }

    #[test]
    fn water_fill() {
        assert_eq!(min_square_sum(&[0, 0, 0], 0, 3), 0);
        // One edge among three isolated vertices: 1 + 1 + 0.
        assert_eq!(min_square_sum(&[0, 0, 0], 1, 3), 2);
        assert_eq!(min_square_sum(&[2, 0, 0, 0], 2, 4), 10);
        // Capped at n - 1.
        assert_eq!(min_square_sum(&[1, 1], 5, 2), 2);
    }

    #[test]
    fn bounded_matches_full() {
        for (n, e) in [(6, 8), (7, 8), (7, 12)] {
            let all = enumerate_connected(n, e).unwrap();
            let rhos: Vec<f64> = all.iter().map(|g| crate::spectral::rho(g).unwrap()).collect();
            let min = rhos.iter().cloned().fold(f64::INFINITY, f64::min);
            let bound = min + 0.05;
            let expected = rhos.iter().filter(|&&r| r <= bound + 1e-9).count();
            let got = enumerate_connected_bounded(n, e, bound, &Deadline::none()).unwrap();
            assert_eq!(got.len(), expected, "({n},{e})");
        }
    }
}
