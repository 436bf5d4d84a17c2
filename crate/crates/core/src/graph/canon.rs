//! Exact canonical labelling by individualization-refinement.
//!
//! Colour refinement produces an isomorphism-invariant ordered partition; the
//! search individualizes each vertex of the first non-singleton cell in turn and
//! keeps the largest relabelled upper-triangle bit string over all leaves.
//! Automorphisms discovered at equal leaves prune sibling branches whose vertex
//! lies in an already-explored orbit of the prefix stabilizer.

use std::fmt;

use super::{BitIter, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by [`CanonicalForm::of`].
pub const MAX_CANON_N: usize = 16;

/// Isomorphism-class key: the order plus the upper-triangle adjacency bits of
/// the canonically relabelled graph (graph6 column order, first bit most
/// significant). Equal keys hold exactly for isomorphic graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    bits: u128,
}

type Colors = [u8; MAX_CANON_N];

impl CanonicalForm {
    pub fn of(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n > MAX_CANON_N {
            return Err(Error::CanonicalTooLarge { n, max: MAX_CANON_N });
        }
        let mut search = Search::new(g);
        let mut colors = [0u8; MAX_CANON_N];
        let mut prefix = Vec::with_capacity(n);
        search.descend(&mut colors, 1, &mut prefix);
        Ok(CanonicalForm { n: n as u8, bits: search.best.expect("at least one leaf") })
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    pub fn edge_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// The canonical representative itself.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut rows = vec![0u64; n];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if self.bits >> (127 - k) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    pub fn to_graph6(&self) -> String {
        self.to_graph().to_graph6()
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.to_graph6())
    }
}

fn pack(rows: &[u64]) -> u128 {
    let n = rows.len();
    let mut bits = 0u128;
    let mut k = 0;
    for (j, &row) in rows.iter().enumerate().take(n).skip(1) {
        for i in 0..j {
            if row >> i & 1 == 1 {
                bits |= 1u128 << (127 - k);
            }
            k += 1;
        }
    }
    bits
}

/// Canonical key by exhaustive search over all n! labellings. Exponential;
/// reference implementation for small orders only.
pub fn brute_force_canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.order();
    if n > 9 {
        return Err(Error::CanonicalTooLarge { n, max: 9 });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = 0u128;
    let mut rows = vec![0u64; n];
    loop {
        rows.iter_mut().for_each(|r| *r = 0);
        for u in 0..n {
            for v in BitIter(g.rows()[u]) {
                rows[perm[u]] |= 1 << perm[v];
            }
        }
        best = best.max(pack(&rows));
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(CanonicalForm { n: n as u8, bits: best })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    best: Option<u128>,
    /// position -> vertex for the best leaf.
    best_inv: Colors,
    automorphisms: Vec<Colors>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph) -> Self {
        Search {
            g,
            n: g.order(),
            best: None,
            best_inv: [0; MAX_CANON_N],
            automorphisms: Vec::new(),
        }
    }

    /// Colour refinement to the coarsest equitable refinement. Colours stay
    /// ordered by an isomorphism-invariant signature.
    fn refine(&self, colors: &mut Colors, mut k: usize) -> usize {
        let n = self.n;
        let rows = self.g.rows();
        loop {
            let mut masks = [0u64; MAX_CANON_N];
            for v in 0..n {
                masks[colors[v] as usize] |= 1 << v;
            }
            let mut sigs = [0u128; MAX_CANON_N];
            for v in 0..n {
                let mut s = (colors[v] as u128) << 64;
                for (c, &m) in masks.iter().enumerate().take(k) {
                    let cnt = (rows[v] & m).count_ones() as u128;
                    s |= cnt << (4 * (15 - c));
                }
                sigs[v] = s;
            }
            let mut sorted: Vec<u128> = sigs[..n].to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            let new_k = sorted.len();
            for v in 0..n {
                colors[v] = sorted.binary_search(&sigs[v]).unwrap() as u8;
            }
            if new_k == k {
                return k;
            }
            k = new_k;
        }
    }

    fn descend(&mut self, colors: &mut Colors, k: usize, prefix: &mut Vec<usize>) {
        let n = self.n;
        let k = self.refine(colors, k);
        if k == n {
            self.leaf(colors);
            return;
        }
        // First non-singleton cell in colour order.
        let mut sizes = [0u8; MAX_CANON_N];
        for &c in &colors[..n] {
            sizes[c as usize] += 1;
        }
        let target = (0..k).find(|&c| sizes[c] > 1).unwrap() as u8;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();

        let mut explored: Vec<usize> = Vec::with_capacity(cell.len());
        for &v in &cell {
            if !explored.is_empty() && self.same_orbit_as_any(v, &explored, prefix) {
                continue;
            }
            let mut child = *colors;
            for c in child[..n].iter_mut() {
                if *c > target {
                    *c += 1;
                }
            }
            for &w in &cell {
                if w != v {
                    child[w] = target + 1;
                }
            }
            prefix.push(v);
            self.descend(&mut child, k + 1, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    fn same_orbit_as_any(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let n = self.n;
        let mut parent: Colors = [0; MAX_CANON_N];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        fn find(parent: &mut Colors, mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut any = false;
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] as usize == p) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x] as usize));
                    if a != b {
                        parent[a] = b as u8;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }

    fn leaf(&mut self, colors: &Colors) {
        let n = self.n;
        let rows = self.g.rows();
        let mut relabelled = [0u64; MAX_CANON_N];
        for u in 0..n {
            let pu = colors[u] as usize;
            for v in BitIter(rows[u]) {
                relabelled[pu] |= 1 << colors[v];
            }
        }
        let key = pack(&relabelled[..n]);
        match self.best {
            Some(b) if key < b => {}
            Some(b) if key == b => {
                // gamma maps this leaf's labelling onto the best one.
                let mut gamma = [0u8; MAX_CANON_N];
                let mut identity = true;
                for v in 0..n {
                    gamma[v] = self.best_inv[colors[v] as usize];
                    identity &= gamma[v] as usize == v;
                }
                if !identity {
                    self.automorphisms.push(gamma);
                }
            }
            _ => {
                self.best = Some(key);
                for v in 0..n {
                    self.best_inv[colors[v] as usize] = v as u8;
                }
            }
        }
    }
}
