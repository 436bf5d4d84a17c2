//! Named graph families and the extremal constructions built from them.

mod family;

pub use family::{alon_pair, family_minimizer, FamilySpec, Split};

use crate::error::{Error, Result};
use crate::graph::Graph;

fn infeasible<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Infeasible(msg.into()))
}

/// P_n: 0 - 1 - ... - (n-1).
pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// C_n, n >= 3.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return infeasible(format!("cycle needs n >= 3, got {n}"));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    Ok(Graph::empty(n)?.complement())
}

/// K_{a,b} with parts 0..a and a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return infeasible(format!("complete bipartite parts must be nonempty, got ({a}, {b})"));
    }
    Graph::empty(a)?.join(&Graph::empty(b)?)
}

/// CP_n: complement of the perfect matching {2i, 2i+1}.
pub fn cocktail_party(n: usize) -> Result<Graph> {
    if n < 2 || !n.is_multiple_of(2) {
        return infeasible(format!("cocktail party graph needs even order >= 2, got {n}"));
    }
    let matching: Vec<_> = (0..n / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    Ok(Graph::new(n, &matching)?.complement())
}

/// B(p, q, r): cycles of lengths p and r joined by a path with q edges.
/// p + q + r - 1 vertices, p + q + r edges.
pub fn b_graph(p: usize, q: usize, r: usize) -> Result<Graph> {
    if p < 3 || r < 3 || q < 1 {
        return infeasible(format!("B(p,q,r) needs p, r >= 3 and q >= 1, got ({p},{q},{r})"));
    }
    let n = p + q + r - 1;
    let mut edges = Vec::with_capacity(n + 1);
    // First cycle on 0..p, branch vertex p-1.
    edges.extend((0..p).map(|i| (i, (i + 1) % p)));
    // Connecting path p-1, p, ..., p+q-1; its last vertex starts the second cycle.
    edges.extend((p - 1..p + q - 1).map(|i| (i, i + 1)));
    let s = p + q - 1;
    edges.extend((0..r).map(|i| (s + i, s + (i + 1) % r)));
    Graph::new(n, &edges)
}

/// P(p, q, r): three internally disjoint paths with p, q and r edges between
/// two branch vertices. p + q + r - 1 vertices, p + q + r edges.
pub fn p_graph(p: usize, q: usize, r: usize) -> Result<Graph> {
    let lens = [p, q, r];
    if lens.contains(&0) || lens.iter().filter(|&&l| l == 1).count() > 1 {
        return infeasible(format!(
            "P(p,q,r) needs positive lengths with at most one equal to 1, got ({p},{q},{r})"
        ));
    }
    let n = p + q + r - 1;
    let (a, b) = (0, 1);
    let mut next = 2;
    let mut edges = Vec::with_capacity(n + 1);
    for len in lens {
        let mut prev = a;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, b));
    }
    Graph::new(n, &edges)
}

/// Deterministic d-regular graph on n vertices: the circulant with offsets
/// 1..=d/2, plus n/2 when d is odd.
pub fn regular_graph(n: usize, d: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::VertexCount(0));
    }
    if d >= n {
        return infeasible(format!("degree {d} too large for {n} vertices"));
    }
    if !(n * d).is_multiple_of(2) {
        return infeasible(format!("{n} vertices of degree {d}: degree sum is odd"));
    }
    let mut edges = Vec::with_capacity(n * d / 2);
    for i in 0..n {
        for o in 1..=d / 2 {
            edges.push((i, (i + o) % n));
        }
        if d % 2 == 1 {
            edges.push((i, (i + n / 2) % n));
        }
    }
    let g = Graph::new(n, &edges)?;
    debug_assert!(g.is_regular() && g.max_degree() == d);
    Ok(g)
}

/// K_{n-2p} ∨ CP_{2p}: n vertices, C(n,2) - p edges.
pub fn dense_minimizer(n: usize, p: usize) -> Result<Graph> {
    if p == 0 || 2 * p > n {
        return infeasible(format!("dense minimizer needs 1 <= p <= n/2, got n = {n}, p = {p}"));
    }
    let cp = cocktail_party(2 * p)?;
    if 2 * p == n {
        return Ok(cp);
    }
    complete(n - 2 * p)?.join(&cp)
}

/// Simple graph with the given degrees, by Havel–Hakimi (largest residual
/// degree first, ties by lowest index).
pub fn realize_degree_sequence(degrees: &[usize]) -> Result<Graph> {
    let n = degrees.len();
    let mut g = Graph::empty(n)?;
    let mut residual: Vec<usize> = degrees.to_vec();
    loop {
        let mut order: Vec<usize> = (0..n).filter(|&v| residual[v] > 0).collect();
        if order.is_empty() {
            return Ok(g);
        }
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let v = order[0];
        let d = residual[v];
        if d > order.len() - 1 {
            return infeasible(format!("degree sequence {degrees:?} is not graphic"));
        }
        residual[v] = 0;
        for &u in &order[1..=d] {
            g = g.with_edge(v, u)?;
            residual[u] -= 1;
        }
    }
}
