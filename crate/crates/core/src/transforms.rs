//! Edge rotation, local switching, the Kelmans transformation and
//! subdivision of internal paths, with their eigenvector hypotheses.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};
use crate::spectral::{spectral_radius, DEFAULT_TOL};

/// Slack used when comparing Perron-vector entries.
pub const HYPOTHESIS_TOL: f64 = 1e-12;

fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidTransform(msg.into()))
}

/// Delete rs, add rt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSpec {
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

/// Replace st and uv by sv and tu.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchSpec {
    pub s: usize,
    pub t: usize,
    pub u: usize,
    pub v: usize,
}

impl RotationSpec {
    fn check(&self, g: &Graph) -> Result<()> {
        let RotationSpec { r, s, t } = *self;
        g.check_pair(r, s)?;
        g.check_pair(r, t)?;
        if s == t {
            return invalid("rotation needs s != t");
        }
        if !g.has_edge(r, s) {
            return invalid(format!("rotation needs edge {r}-{s}"));
        }
        if g.has_edge(r, t) {
            return invalid(format!("rotation needs {r}-{t} to be a non-edge"));
        }
        Ok(())
    }
}

impl SwitchSpec {
    fn check(&self, g: &Graph) -> Result<()> {
        let SwitchSpec { s, t, u, v } = *self;
        let all = [s, t, u, v];
        for (i, &a) in all.iter().enumerate() {
            if a >= g.order() {
                return Err(Error::VertexOutOfRange { vertex: a, n: g.order() });
            }
            if all[..i].contains(&a) {
                return invalid("switch needs four distinct vertices");
            }
        }
        if !g.has_edge(s, t) || !g.has_edge(u, v) {
            return invalid(format!("switch needs edges {s}-{t} and {u}-{v}"));
        }
        if g.has_edge(s, v) || g.has_edge(t, u) {
            return invalid(format!("switch needs non-edges {s}-{v} and {t}-{u}"));
        }
        Ok(())
    }
}

/// G - rs + rt.
pub fn rotate_edge(g: &Graph, spec: RotationSpec) -> Result<Graph> {
    spec.check(g)?;
    g.without_edge(spec.r, spec.s)?.with_edge(spec.r, spec.t)
}

/// G - st - uv + sv + tu. Degrees are unchanged; connectivity may not be.
pub fn local_switch(g: &Graph, spec: SwitchSpec) -> Result<Graph> {
    spec.check(g)?;
    let SwitchSpec { s, t, u, v } = spec;
    g.without_edge(s, t)?.without_edge(u, v)?.with_edge(s, v)?.with_edge(t, u)
}

/// Moves every neighbour w of v outside N(u) ∪ {u} from v to u. Adjacency
/// between u and v is kept.
pub fn kelmans(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    g.check_pair(u, v)?;
    let moving = g.neighbor_mask(v) & !g.neighbor_mask(u) & !(1u64 << u);
    let mut h = g.clone();
    for w in BitIter(moving) {
        h = h.without_edge(v, w)?.with_edge(u, w)?;
    }
    Ok(h)
}

/// All maximal internal paths: walks v0 v1 ... vk whose interior vertices have
/// degree 2 and whose ends have degree at least 3, including closed ones
/// (v0 = vk) through a vertex of degree 3. Each path is listed once, starting
/// from its smaller end (or in the smaller of the two directions when the ends
/// agree).
pub fn find_internal_paths(g: &Graph) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for a in 0..g.order() {
        if g.degree(a) < 3 {
            continue;
        }
        for first in g.neighbors(a) {
            let mut walk = vec![a, first];
            let mut prev = a;
            let mut cur = first;
            while g.degree(cur) == 2 {
                let next = g.neighbors(cur).find(|&w| w != prev).expect("degree 2");
                prev = cur;
                cur = next;
                walk.push(cur);
                if cur == a {
                    break;
                }
            }
            let end = *walk.last().unwrap();
            if g.degree(end) < 3 {
                continue;
            }
            if end == a && g.degree(a) != 3 {
                continue;
            }
            let rev: Vec<usize> = walk.iter().rev().copied().collect();
            if walk <= rev && !out.contains(&walk) {
                out.push(walk);
            }
        }
    }
    out
}

/// Replaces the edge vw, which must lie on an internal path, by v-z-w with a
/// new vertex z = n.
pub fn subdivide_internal(g: &Graph, v: usize, w: usize) -> Result<Graph> {
    g.check_pair(v, w)?;
    if !g.has_edge(v, w) {
        return invalid(format!("no edge {v}-{w}"));
    }
    let on_path = find_internal_paths(g)
        .iter()
        .any(|p| p.windows(2).any(|e| (e[0], e[1]) == (v, w) || (e[0], e[1]) == (w, v)));
    if !on_path {
        return invalid(format!("edge {v}-{w} is not on an internal path"));
    }
    let n = g.order();
    let mut edges: Vec<_> = g.edges().into_iter().filter(|&e| e != (v.min(w), v.max(w))).collect();
    edges.push((v, n));
    edges.push((n, w));
    Graph::new(n + 1, &edges)
}

/// x_t >= x_s for the Perron vector of G.
pub fn hypothesis_rotation(g: &Graph, spec: RotationSpec) -> Result<bool> {
    spec.check(g)?;
    let x = spectral_radius(g, DEFAULT_TOL)?.eigenvector;
    Ok(x[spec.t] >= x[spec.s] - HYPOTHESIS_TOL)
}

/// (x_s - x_u)(x_v - x_t) >= 0 for the Perron vector of G.
pub fn hypothesis_switch(g: &Graph, spec: SwitchSpec) -> Result<bool> {
    spec.check(g)?;
    let x = spectral_radius(g, DEFAULT_TOL)?.eigenvector;
    Ok((x[spec.s] - x[spec.u]) * (x[spec.v] - x[spec.t]) >= -HYPOTHESIS_TOL)
}

/// A transformation with its parameters, text form e.g. `rotate:r=1,s=0,t=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "transform", rename_all = "snake_case")]
pub enum TransformSpec {
    Rotate(RotationSpec),
    Switch(SwitchSpec),
    Kelmans { u: usize, v: usize },
    Subdivide { v: usize, w: usize },
}

impl TransformSpec {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match *self {
            TransformSpec::Rotate(s) => rotate_edge(g, s),
            TransformSpec::Switch(s) => local_switch(g, s),
            TransformSpec::Kelmans { u, v } => kelmans(g, u, v),
            TransformSpec::Subdivide { v, w } => subdivide_internal(g, v, w),
        }
    }

    /// The eigenvector hypothesis, where the transformation has one.
    pub fn hypothesis(&self, g: &Graph) -> Result<Option<bool>> {
        match *self {
            TransformSpec::Rotate(s) => hypothesis_rotation(g, s).map(Some),
            TransformSpec::Switch(s) => hypothesis_switch(g, s).map(Some),
            _ => Ok(None),
        }
    }
}

impl fmt::Display for TransformSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TransformSpec::Rotate(RotationSpec { r, s, t }) => write!(f, "rotate:r={r},s={s},t={t}"),
            TransformSpec::Switch(SwitchSpec { s, t, u, v }) => write!(f, "switch:s={s},t={t},u={u},v={v}"),
            TransformSpec::Kelmans { u, v } => write!(f, "kelmans:u={u},v={v}"),
            TransformSpec::Subdivide { v, w } => write!(f, "subdivide:v={v},w={w}"),
        }
    }
}

impl FromStr for TransformSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (tag, rest) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected name:key=value,... in {s:?}")))?;
        let mut params: Vec<(String, usize)> = Vec::new();
        for item in rest.split(',').filter(|t| !t.trim().is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, found {item:?}")))?;
            let v = v.trim().parse().map_err(|_| Error::Parse(format!("bad vertex {v:?}")))?;
            params.push((k.trim().to_string(), v));
        }
        let keys: &[&str] = match tag.trim() {
            "rotate" => &["r", "s", "t"],
            "switch" => &["s", "t", "u", "v"],
            "kelmans" => &["u", "v"],
            "subdivide" => &["v", "w"],
            other => return Err(Error::Parse(format!("unknown transform {other:?}"))),
        };
        if params.len() != keys.len() {
            return Err(Error::Parse(format!("{tag} takes parameters {}", keys.join(","))));
        }
        let get = |k: &str| {
            params
                .iter()
                .find(|(name, _)| name == k)
                .map(|&(_, v)| v)
                .ok_or_else(|| Error::Parse(format!("{tag}: missing parameter {k}")))
        };
        Ok(match tag.trim() {
            "rotate" => TransformSpec::Rotate(RotationSpec { r: get("r")?, s: get("s")?, t: get("t")? }),
            "switch" => TransformSpec::Switch(SwitchSpec { s: get("s")?, t: get("t")?, u: get("u")?, v: get("v")? }),
            "kelmans" => TransformSpec::Kelmans { u: get("u")?, v: get("v")? },
            _ => TransformSpec::Subdivide { v: get("v")?, w: get("w")? },
        })
    }
}
