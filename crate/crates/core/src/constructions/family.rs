//! Family specifications with a `tag:key=value,...` text form.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{
    b_graph, cocktail_party, complete, complete_bipartite, cycle, dense_minimizer, infeasible, p_graph,
    path, realize_degree_sequence, regular_graph,
};
use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};

/// How the host graph of a two-apex construction is cut into halves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Split {
    /// First half of the vertex labels against the second half.
    Contiguous,
    /// Even labels against odd labels.
    Interleaved,
}

impl fmt::Display for Split {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Split::Contiguous => "contiguous",
            Split::Interleaved => "interleaved",
        })
    }
}

impl FromStr for Split {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "contiguous" => Ok(Split::Contiguous),
            "interleaved" => Ok(Split::Interleaved),
            _ => Err(Error::Parse(format!("unknown split {s:?} (contiguous|interleaved)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    CocktailParty { n: usize },
    BGraph { p: usize, q: usize, r: usize },
    PGraph { p: usize, q: usize, r: usize },
    /// The circulant d-regular graph on n vertices.
    Circulant { n: usize, d: usize },
    /// K_{n-2p} ∨ CP_{2p}.
    DenseMinimizer { n: usize, p: usize },
    /// Complement of C_{n-2}, joined with two isolated vertices.
    NMinus1Choose2Minimizer { n: usize },
    /// (n-5)-regular graph on n-3 vertices joined with K2 ∪ K1; n odd.
    JoinK2K1 { n: usize },
    /// (n-6)-regular graph on n-4 vertices joined with P4; n even.
    JoinP4 { n: usize },
    /// (n-2p-4)-regular on n-2p-2 vertices joined with a (2p-1)-regular graph on 2p+2.
    G2JoinG3Even { n: usize, p: usize },
    /// (n-2p-3)-regular on n-2p-1 vertices joined with a (2p-2)-regular graph on 2p+1.
    G2JoinG3Odd { n: usize, p: usize },
    /// One of the two 6-vertex two-apex graphs joined with an (n-9)-regular graph on n-6.
    NMinus3MinusEdge { n: usize, variant: u8 },
    /// Two apices over the halves of an (n/2-1)-regular graph on n-2 vertices.
    HalfSquareTwoApex { n: usize, split: Split },
    /// n/3 independent vertices joined with a two-apex graph over an
    /// (n/3-1)-regular graph on 2n/3-2 vertices.
    ThirdSquareApex { n: usize, split: Split },
    /// Member 1 or 2 of the pair built from a t-regular graph.
    AlonPair { t: usize, n: usize, member: u8 },
}

impl FamilySpec {
    pub fn tag(&self) -> &'static str {
        use FamilySpec::*;
        match self {
            Path { .. } => "path",
            Cycle { .. } => "cycle",
            Complete { .. } => "complete",
            CompleteBipartite { .. } => "bipartite",
            CocktailParty { .. } => "cocktail",
            BGraph { .. } => "b",
            PGraph { .. } => "p",
            Circulant { .. } => "circulant",
            DenseMinimizer { .. } => "dense",
            NMinus1Choose2Minimizer { .. } => "nminus1choose2",
            JoinK2K1 { .. } => "joink2k1",
            JoinP4 { .. } => "joinp4",
            G2JoinG3Even { .. } => "g2g3even",
            G2JoinG3Odd { .. } => "g2g3odd",
            NMinus3MinusEdge { .. } => "nminus3minusedge",
            HalfSquareTwoApex { .. } => "halfsquare",
            ThirdSquareApex { .. } => "thirdsquare",
            AlonPair { .. } => "alon",
        }
    }

    pub fn build(&self) -> Result<Graph> {
        family_minimizer(self)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        write!(f, "{}:", self.tag())?;
        match *self {
            Path { n }
            | Cycle { n }
            | Complete { n }
            | CocktailParty { n }
            | NMinus1Choose2Minimizer { n }
            | JoinK2K1 { n }
            | JoinP4 { n } => write!(f, "n={n}"),
            CompleteBipartite { a, b } => write!(f, "a={a},b={b}"),
            BGraph { p, q, r } | PGraph { p, q, r } => write!(f, "p={p},q={q},r={r}"),
            Circulant { n, d } => write!(f, "n={n},d={d}"),
            DenseMinimizer { n, p } | G2JoinG3Even { n, p } | G2JoinG3Odd { n, p } => {
                write!(f, "n={n},p={p}")
            }
            NMinus3MinusEdge { n, variant } => write!(f, "n={n},variant={variant}"),
            HalfSquareTwoApex { n, split } | ThirdSquareApex { n, split } => write!(f, "n={n},split={split}"),
            AlonPair { t, n, member } => write!(f, "t={t},n={n},member={member}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected tag:key=value,... in {s:?}")))?;
        let mut kv: BTreeMap<&str, &str> = BTreeMap::new();
        for item in rest.split(',').filter(|t| !t.trim().is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, found {item:?}")))?;
            if kv.insert(k.trim(), v.trim()).is_some() {
                return Err(Error::Parse(format!("duplicate key {k:?}")));
            }
        }
        let mut take = |key: &str| -> Result<&str> {
            kv.remove(key).ok_or_else(|| Error::Parse(format!("{tag}: missing parameter {key}")))
        };
        fn num<T: FromStr>(key: &str, v: &str) -> Result<T> {
            v.parse().map_err(|_| Error::Parse(format!("bad value {v:?} for {key}")))
        }
        let mut int = |key: &str| -> Result<usize> { num(key, take(key)?) };
        use FamilySpec::*;
        let spec = match tag.trim() {
            "path" => Path { n: int("n")? },
            "cycle" => Cycle { n: int("n")? },
            "complete" => Complete { n: int("n")? },
            "bipartite" => CompleteBipartite { a: int("a")?, b: int("b")? },
            "cocktail" => CocktailParty { n: int("n")? },
            "b" => BGraph { p: int("p")?, q: int("q")?, r: int("r")? },
            "p" => PGraph { p: int("p")?, q: int("q")?, r: int("r")? },
            "circulant" => Circulant { n: int("n")?, d: int("d")? },
            "dense" => DenseMinimizer { n: int("n")?, p: int("p")? },
            "nminus1choose2" => NMinus1Choose2Minimizer { n: int("n")? },
            "joink2k1" => JoinK2K1 { n: int("n")? },
            "joinp4" => JoinP4 { n: int("n")? },
            "g2g3even" => G2JoinG3Even { n: int("n")?, p: int("p")? },
            "g2g3odd" => G2JoinG3Odd { n: int("n")?, p: int("p")? },
            "nminus3minusedge" => NMinus3MinusEdge { n: int("n")?, variant: int("variant")? as u8 },
            "halfsquare" | "thirdsquare" => {
                let n = int("n")?;
                let split = match kv.remove("split") {
                    Some(v) => v.parse()?,
                    None => Split::Contiguous,
                };
                if tag.trim() == "halfsquare" {
                    HalfSquareTwoApex { n, split }
                } else {
                    ThirdSquareApex { n, split }
                }
            }
            "alon" => AlonPair { t: int("t")?, n: int("n")?, member: int("member")? as u8 },
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        if let Some(k) = kv.keys().next() {
            return Err(Error::Parse(format!("{tag}: unexpected parameter {k}")));
        }
        Ok(spec)
    }
}

/// The two 6-vertex, 8-edge graphs made of two apices over the halves of C4.
/// Variant 1 splits C4 into adjacent pairs, variant 2 into opposite pairs.
fn six_vertex_two_apex(variant: u8) -> Result<Graph> {
    let split = match variant {
        1 => Split::Contiguous,
        2 => Split::Interleaved,
        v => return infeasible(format!("variant must be 1 or 2, got {v}")),
    };
    two_apex(&regular_graph(4, 2)?, split)
}

/// Adds apex u (joined to one half of `h`) and apex v (joined to the other).
/// `h` keeps labels 0..m, the apices become m and m+1.
fn two_apex(h: &Graph, split: Split) -> Result<Graph> {
    let m = h.order();
    if !m.is_multiple_of(2) {
        return infeasible(format!("two-apex host needs an even order, got {m}"));
    }
    let first: Vec<usize> = match split {
        Split::Contiguous => (0..m / 2).collect(),
        Split::Interleaved => (0..m).step_by(2).collect(),
    };
    let mut edges = h.edges();
    for w in 0..m {
        let apex = if first.contains(&w) { m } else { m + 1 };
        edges.push((w, apex));
    }
    Graph::new(m + 2, &edges)
}

/// Builds the graph described by `spec`, checking its parameters.
pub fn family_minimizer(spec: &FamilySpec) -> Result<Graph> {
    use FamilySpec::*;
    match *spec {
        Path { n } => path(n),
        Cycle { n } => cycle(n),
        Complete { n } => complete(n),
        CompleteBipartite { a, b } => complete_bipartite(a, b),
        CocktailParty { n } => cocktail_party(n),
        BGraph { p, q, r } => b_graph(p, q, r),
        PGraph { p, q, r } => p_graph(p, q, r),
        Circulant { n, d } => regular_graph(n, d),
        DenseMinimizer { n, p } => dense_minimizer(n, p),
        NMinus1Choose2Minimizer { n } => {
            if n < 5 {
                return infeasible(format!("needs n >= 5, got {n}"));
            }
            Graph::empty(2)?.join(&cycle(n - 2)?.complement())
        }
        JoinK2K1 { n } => {
            if n < 5 || n % 2 == 0 {
                return infeasible(format!("needs odd n >= 5, got {n}"));
            }
            let k2k1 = Graph::new(3, &[(0, 1)])?;
            regular_graph(n - 3, n - 5)?.join(&k2k1)
        }
        JoinP4 { n } => {
            if n < 6 || n % 2 != 0 {
                return infeasible(format!("needs even n >= 6, got {n}"));
            }
            regular_graph(n - 4, n - 6)?.join(&path(4)?)
        }
        G2JoinG3Even { n, p } => {
            if n % 2 != 0 || n < 6 || p < 1 || 2 * p + 4 > n {
                return infeasible(format!("needs even n >= 6 and 1 <= p <= (n-4)/2, got n = {n}, p = {p}"));
            }
            regular_graph(n - 2 * p - 2, n - 2 * p - 4)?.join(&regular_graph(2 * p + 2, 2 * p - 1)?)
        }
        G2JoinG3Odd { n, p } => {
            if n % 2 == 0 || n < 5 || p < 1 || 2 * p + 3 > n {
                return infeasible(format!("needs odd n >= 5 and 1 <= p <= (n-3)/2, got n = {n}, p = {p}"));
            }
            regular_graph(n - 2 * p - 1, n - 2 * p - 3)?.join(&regular_graph(2 * p + 1, 2 * p - 2)?)
        }
        NMinus3MinusEdge { n, variant } => {
            if n < 9 {
                return infeasible(format!("needs n >= 9, got {n}"));
            }
            six_vertex_two_apex(variant)?.join(&regular_graph(n - 6, n - 9)?)
        }
        HalfSquareTwoApex { n, split } => {
            if n < 4 || n % 2 != 0 {
                return infeasible(format!("needs even n >= 4, got {n}"));
            }
            two_apex(&regular_graph(n - 2, n / 2 - 1)?, split)
        }
        ThirdSquareApex { n, split } => {
            if n < 6 || n % 3 != 0 {
                return infeasible(format!("needs n >= 6 divisible by 3, got {n}"));
            }
            let k = n / 3;
            let hat = two_apex(&regular_graph(2 * k - 2, k - 1)?, split)?;
            Graph::empty(k)?.join(&hat)
        }
        AlonPair { t, n, member } => {
            let (g1, g2) = alon_pair(t, n)?;
            match member {
                1 => Ok(g1),
                2 => Ok(g2),
                m => infeasible(format!("member must be 1 or 2, got {m}")),
            }
        }
    }
}

/// Two connected graphs with the same order and size:
/// G1 is a t-regular graph on n-t-2 vertices plus K_{t+2} plus one bridge;
/// G2 has one vertex of degree 2t+4 and all others of degree t.
pub fn alon_pair(t: usize, n: usize) -> Result<(Graph, Graph)> {
    if t < 2 {
        return infeasible(format!("needs t >= 2, got {t}"));
    }
    if n < 2 * t + 5 {
        return infeasible(format!("needs n >= 2t + 5 = {}, got {n}", 2 * t + 5));
    }
    if !(t * (n + 1)).is_multiple_of(2) {
        return infeasible(format!("t(n+1) must be even, got t = {t}, n = {n}"));
    }
    let h = regular_graph(n - t - 2, t)?;
    if !h.is_connected() {
        return infeasible("regular part is disconnected");
    }
    let mut g1 = h.disjoint_union(&complete(t + 2)?)?;
    g1 = g1.with_edge(0, n - t - 2)?;

    let mut degrees = vec![t; n];
    degrees[0] = 2 * t + 4;
    let g2 = connect_by_swaps(realize_degree_sequence(&degrees)?)?;
    debug_assert_eq!(g1.edge_count(), g2.edge_count());
    Ok((g1, g2))
}

/// Merges components with degree-preserving 2-swaps: an edge ab lying on a
/// cycle in one component and any edge cd in another become ac and bd.
fn connect_by_swaps(mut g: Graph) -> Result<Graph> {
    while !g.is_connected() {
        let c1 = g.component_mask(0);
        let other = (0..g.order()).find(|&v| c1 & 1 << v == 0).expect("disconnected");
        let c2 = g.component_mask(other);
        let cyc = find_cycle_edge(&g, c1)
            .map(|e| (e, c2))
            .or_else(|| find_cycle_edge(&g, c2).map(|e| (e, c1)));
        let Some(((a, b), rest)) = cyc else {
            return infeasible("both components are trees; cannot merge by swaps");
        };
        let c = BitIter(rest).find(|&v| g.degree(v) > 0).ok_or_else(|| {
            Error::Infeasible("component without edges cannot be merged by swaps".into())
        })?;
        let d = g.neighbors(c).next().expect("c has a neighbour");
        g = g.without_edge(a, b)?.without_edge(c, d)?.with_edge(a, c)?.with_edge(b, d)?;
    }
    Ok(g)
}

fn find_cycle_edge(g: &Graph, comp: u64) -> Option<(usize, usize)> {
    for u in BitIter(comp) {
        for v in g.neighbors(u).filter(|&v| v > u) {
            let h = g.without_edge(u, v).ok()?;
            if h.component_mask(u) & 1 << v != 0 {
                return Some((u, v));
            }
        }
    }
    None
}
