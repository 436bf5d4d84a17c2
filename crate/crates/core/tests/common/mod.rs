//! Shared helpers for integration tests: fixture loading and brute-force
//! oracles that do not touch the library's canonical labelling.

#![allow(dead_code)]

use std::path::PathBuf;

use spectramin::Graph;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(format!("{name}.g6"))
}

/// First graph6 line of `tests/fixtures/<name>.g6`.
pub fn fixture(name: &str) -> Graph {
    let path = fixture_path(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .expect("fixture has a graph line");
    Graph::from_graph6(line).unwrap()
}

pub fn binom2(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Connectivity of a graph given as adjacency bit rows.
fn rows_connected(rows: &[u32]) -> bool {
    let n = rows.len();
    if n <= 1 {
        return true;
    }
    let full = (1u32 << n) - 1;
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

/// Number of labelled connected graphs on `n` vertices with exactly `e`
/// edges, for every e, by filtering all edge subsets. Feasible for n <= 7.
pub fn labelled_connected_by_edges(n: usize) -> Vec<u64> {
    assert!(n <= 7);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let m = pairs.len();
    let mut counts = vec![0u64; m + 1];
    let mut rows = vec![0u32; n];
    for mask in 0u32..(1u32 << m) {
        rows.iter_mut().for_each(|r| *r = 0);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        if rows_connected(&rows) {
            counts[mask.count_ones() as usize] += 1;
        }
    }
    counts
}

/// Labelled connected graphs with `n` vertices and `e` edges, enumerated as
/// subsets of non-edges when that is the smaller side.
pub fn labelled_connected_count(n: usize, e: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let m = pairs.len();
    let missing = m - e;
    let (k, present) = if missing < e { (missing, false) } else { (e, true) };
    let mut count = 0;
    let mut idx: Vec<usize> = (0..k).collect();
    let mut rows = vec![0u32; n];
    loop {
        let mut chosen = vec![false; m];
        for &i in &idx {
            chosen[i] = true;
        }
        rows.iter_mut().for_each(|r| *r = 0);
        for (p, &(i, j)) in pairs.iter().enumerate() {
            if chosen[p] == present {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        if rows_connected(&rows) {
            count += 1;
        }
        // Advance to the next k-combination of 0..m.
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + m - k {
            i -= 1;
        }
        if i == 0 {
            return count;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Calls `f` on every permutation of 0..n (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&p);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn permuted_key(g: &Graph, p: &[usize]) -> u64 {
    let n = g.order();
    let mut key = 0u64;
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(p[i], p[j]) {
                key |= 1 << bit;
            }
            bit += 1;
        }
    }
    key
}

/// Smallest upper-triangle bit string over all relabellings. n <= 8.
pub fn brute_canonical(g: &Graph) -> u64 {
    assert!(g.order() <= 8);
    let mut best = u64::MAX;
    for_each_permutation(g.order(), |p| best = best.min(permuted_key(g, p)));
    best
}

/// Order of the automorphism group by trying every permutation.
pub fn automorphism_count(g: &Graph) -> u64 {
    let n = g.order();
    let edges = g.edges();
    let mut count = 0;
    for_each_permutation(n, |p| {
        if edges.iter().all(|&(u, v)| g.has_edge(p[u], p[v])) {
            count += 1;
        }
    });
    count
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Random connected graph on `lo..=hi` vertices: a random spanning tree plus
/// each remaining pair with probability `density`.
pub fn connected_graph(lo: usize, hi: usize, density: f64) -> impl proptest::strategy::Strategy<Value = Graph> {
    use proptest::prelude::*;
    (lo..=hi).prop_flat_map(move |n| {
        (
            proptest::collection::vec(any::<proptest::sample::Index>(), n.saturating_sub(1)),
            proptest::collection::vec(proptest::bool::weighted(density), binom2(n)),
        )
            .prop_map(move |(parents, extra)| {
                let mut edges = Vec::new();
                for v in 1..n {
                    edges.push((parents[v - 1].index(v), v));
                }
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if extra[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                edges.sort_unstable();
                edges.dedup();
                Graph::new(n, &edges).unwrap()
            })
    })
}

/// Coarsest equitable partition by colour refinement, blocks ordered by
/// their smallest vertex.
pub fn colour_refinement(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut colour = vec![0usize; n];
    loop {
        let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).map(|w| colour[w]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs.iter_mut().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = colour.iter().collect::<std::collections::HashSet<_>>().len();
        colour = next;
        if distinct.len() == before {
            break;
        }
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for v in 0..n {
        let b = *seen.entry(colour[v]).or_insert_with(|| {
            blocks.push(Vec::new());
            blocks.len() - 1
        });
        blocks[b].push(v);
    }
    blocks
}
