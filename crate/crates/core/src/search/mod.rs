//! Exhaustive search for spectral-radius minimizers.

mod enumerate;

pub use enumerate::{enumerate_connected, enumerate_connected_bounded, Deadline, Enumerator, MAX_ENUM_N};

use std::collections::{BTreeMap, HashMap};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formulas::{is_predicted_minimizer, predict, Regime, CONSISTENCY_TOL};
use crate::graph::Graph;
use crate::spectral::{char_poly, spectral_radius, CharPoly, DEFAULT_TOL};

/// Graphs within this distance of the smallest computed ρ are candidates;
/// exact characteristic-polynomial comparison then decides true ties.
pub const TIE_BAND: f64 = 1e-9;

/// Orders from which `minimizers` switches to bounded enumeration.
pub const BOUNDED_FROM_N: usize = 10;

/// Dense classes whose complements have at most this many edges are always
/// enumerated in full; the complement levels are small.
pub const FULL_COMPLEMENT_EDGES: usize = 12;

/// Comparison of a search result against the closed-form predictions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormulaCheck {
    pub regimes: Vec<Regime>,
    pub predicted: f64,
    /// Every prediction is within 1e-8 of the computed minimum.
    pub value_match: bool,
    /// Every minimizer belongs to a family predicted by some regime.
    pub family_match: bool,
}

impl FormulaCheck {
    pub fn matches(&self) -> bool {
        self.value_match && self.family_match
    }
}

/// Result of an exhaustive search at one (n, e).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MinimizerReport {
    pub n: usize,
    pub e: usize,
    pub rho_min: f64,
    /// Largest residual-based eigenvalue error among the minimizers.
    pub error_bound: f64,
    /// Canonical graph6 strings, sorted.
    pub minimizers: Vec<String>,
    /// Δ - δ of each minimizer, aligned with `minimizers`.
    pub degree_spread: Vec<usize>,
    pub formula_check: Option<FormulaCheck>,
    /// Connected classes examined (only those below `rho_bound` when set).
    pub graphs_enumerated: usize,
    /// Graphs inside the tie band whose ρ is provably different.
    pub near_misses: usize,
    /// Upper bound used to prune the enumeration, if any.
    pub rho_bound: Option<f64>,
    /// Seconds spent; not serialized so reports are reproducible byte for byte.
    #[serde(skip)]
    pub wall_time: f64,
}

impl MinimizerReport {
    pub fn minimizer_graphs(&self) -> Result<Vec<Graph>> {
        self.minimizers.iter().map(|s| Graph::from_graph6(s)).collect()
    }

    pub fn max_irregularity(&self) -> usize {
        self.degree_spread.iter().copied().max().unwrap_or(0)
    }

    pub fn hong_holds(&self) -> bool {
        self.max_irregularity() <= 1
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    /// Fixed CSV row: n, e, rho_min, n_minimizers, max_irregularity,
    /// formula_regime, formula_match.
    pub fn csv_row(&self) -> String {
        let (regime, matched) = match &self.formula_check {
            Some(fc) => (
                fc.regimes.iter().map(Regime::to_string).collect::<Vec<_>>().join("+"),
                fc.matches().to_string(),
            ),
            None => (String::new(), String::new()),
        };
        format!(
            "{},{},{:.12},{},{},{},{}",
            self.n,
            self.e,
            self.rho_min,
            self.minimizers.len(),
            self.max_irregularity(),
            regime,
            matched
        )
    }
}

pub const CSV_HEADER: &str = "n,e,rho_min,n_minimizers,max_irregularity,formula_regime,formula_match";

/// Hong's question at one (n, e): is every minimizer almost regular?
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HongVerdict {
    pub n: usize,
    pub e: usize,
    pub holds: bool,
    /// Minimizers with Δ - δ > 1.
    pub witnesses: Vec<String>,
}

impl HongVerdict {
    pub fn from_report(r: &MinimizerReport) -> Self {
        let witnesses = r
            .minimizers
            .iter()
            .zip(&r.degree_spread)
            .filter(|(_, &s)| s > 1)
            .map(|(g, _)| g.clone())
            .collect::<Vec<_>>();
        HongVerdict { n: r.n, e: r.e, holds: witnesses.is_empty(), witnesses }
    }
}

/// Reports in (n, e) order plus whether the sweep finished.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub reports: Vec<MinimizerReport>,
    pub complete: bool,
}

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Wall-clock budget in seconds.
    pub budget_secs: Option<u64>,
}

/// Runs searches, caching the enumeration levels per order.
pub struct Searcher {
    pool: Option<rayon::ThreadPool>,
    deadline: Deadline,
    enumerators: HashMap<usize, Enumerator>,
}

impl Searcher {
    pub fn new(opts: &SearchOptions) -> Result<Self> {
        let pool = match opts.workers {
            Some(0) => return Err(Error::Infeasible("worker count must be at least 1".into())),
            Some(w) => Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(w)
                    .build()
                    .map_err(|e| Error::Inconsistent(e.to_string()))?,
            ),
            None => None,
        };
        Ok(Searcher { pool, deadline: Deadline::new(opts.budget_secs), enumerators: HashMap::new() })
    }

    fn run<T: Send>(&mut self, f: impl FnOnce(&mut Self) -> T + Send) -> T {
        match self.pool.take() {
            Some(pool) => {
                let out = pool.install(|| f(self));
                self.pool = Some(pool);
                out
            }
            None => f(self),
        }
    }

    /// All connected (n, e) graphs, from the cached levels.
    pub fn enumerate(&mut self, n: usize, e: usize) -> Result<Vec<Graph>> {
        let deadline = self.deadline;
        self.run(|s| {
            if let std::collections::hash_map::Entry::Vacant(e) = s.enumerators.entry(n) {
                e.insert(Enumerator::new(n)?);
            }
            s.enumerators.get_mut(&n).unwrap().connected(e, &deadline)
        })
    }

    /// The minimum spectral radius over connected (n, e) graphs and every
    /// graph attaining it.
    pub fn minimizers(&mut self, n: usize, e: usize) -> Result<MinimizerReport> {
        let deadline = self.deadline;
        let start = Deadline::none();
        let predictions = predict(n, e)?;
        let (graphs, bound) = if n >= BOUNDED_FROM_N && n * (n - 1) / 2 > e + FULL_COMPLEMENT_EDGES {
            // Any predicted construction is a member of the class, so its ρ
            // bounds the minimum from above.
            let mut bound: Option<f64> = None;
            for p in &predictions {
                for f in &p.families {
                    let g = f.build()?;
                    if g.is_connected() && (g.order(), g.edge_count()) == (n, e) {
                        let r = spectral_radius(&g, DEFAULT_TOL)?.rho;
                        bound = Some(bound.map_or(r, |b: f64| b.min(r)));
                    }
                }
            }
            match bound {
                Some(b) => {
                    let b = b + TIE_BAND;
                    (self.run(|_| enumerate_connected_bounded(n, e, b, &deadline))?, Some(b))
                }
                None => (self.enumerate(n, e)?, None),
            }
        } else {
            (self.enumerate(n, e)?, None)
        };
        deadline.check()?;
        let mut report = self.run(|_| report_from_graphs(n, e, &graphs))?;
        report.rho_bound = bound;
        if !predictions.is_empty() {
            let value_match = predictions.iter().all(|p| (p.rho_min - report.rho_min).abs() <= CONSISTENCY_TOL);
            let mut family_match = true;
            for g in report.minimizer_graphs()? {
                let mut ok = false;
                for p in &predictions {
                    ok |= is_predicted_minimizer(&g, p)?;
                }
                family_match &= ok;
            }
            report.formula_check = Some(FormulaCheck {
                regimes: predictions.iter().map(|p| p.regime).collect(),
                predicted: predictions[0].rho_min,
                value_match,
                family_match,
            });
        }
        report.wall_time = start.elapsed_secs();
        Ok(report)
    }

    pub fn verify_hong(&mut self, n: usize, e: usize) -> Result<HongVerdict> {
        Ok(HongVerdict::from_report(&self.minimizers(n, e)?))
    }

    /// One report per feasible (n, e) with n <= `n_max` (and e in `e_filter`
    /// when given). Completed rows are appended to `checkpoint` as they finish
    /// and rows already present there are not recomputed. Running out of
    /// budget returns the rows finished so far with `complete = false`.
    pub fn table(
        &mut self,
        n_max: usize,
        e_filter: Option<RangeInclusive<usize>>,
        checkpoint: Option<&Path>,
    ) -> Result<Table> {
        if n_max == 0 || n_max > MAX_ENUM_N {
            return Err(Error::Infeasible(format!("n_max must be in 1..={MAX_ENUM_N}, got {n_max}")));
        }
        let mut done: BTreeMap<(usize, usize), MinimizerReport> = BTreeMap::new();
        if let Some(path) = checkpoint {
            if path.exists() {
                for r in read_reports(path)? {
                    done.insert((r.n, r.e), r);
                }
            }
        }
        let mut sink = match checkpoint {
            Some(path) => Some(OpenOptions::new().create(true).append(true).open(path)?),
            None => None,
        };
        let mut complete = true;
        'outer: for n in 1..=n_max {
            let lo = n - 1;
            let hi = n * (n - 1) / 2;
            for e in lo..=hi {
                if e_filter.as_ref().is_some_and(|r| !r.contains(&e)) || done.contains_key(&(n, e)) {
                    continue;
                }
                match self.minimizers(n, e) {
                    Ok(r) => {
                        if let Some(f) = sink.as_mut() {
                            writeln!(f, "{}", r.to_json_line())?;
                            f.flush()?;
                        }
                        done.insert((n, e), r);
                    }
                    Err(Error::Budget(_)) => {
                        complete = false;
                        break 'outer;
                    }
                    Err(err) => return Err(err),
                }
            }
            // Levels of finished orders are not needed again.
            self.enumerators.remove(&n);
        }
        let reports = done
            .into_values()
            .filter(|r| r.n <= n_max && e_filter.as_ref().is_none_or(|f| f.contains(&r.e)))
            .collect();
        Ok(Table { reports, complete })
    }
}

/// Reads a JSON-lines report file.
pub fn read_reports(path: &Path) -> Result<Vec<MinimizerReport>> {
    let mut out = Vec::new();
    for (i, line) in BufReader::new(File::open(path)?).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let r: MinimizerReport = serde_json::from_str(&line)
            .map_err(|e| Error::Parse(format!("{}:{}: {e}", path.display(), i + 1)))?;
        out.push(r);
    }
    Ok(out)
}

/// Minimum ρ over `graphs` (all connected with the given n and e), with
/// exact resolution of near ties.
pub fn report_from_graphs(n: usize, e: usize, graphs: &[Graph]) -> Result<MinimizerReport> {
    if graphs.is_empty() {
        return Err(Error::Infeasible(format!("no connected graphs with n = {n}, e = {e}")));
    }
    let spectra: Vec<(f64, f64)> = graphs
        .par_iter()
        .map(|g| spectral_radius(g, DEFAULT_TOL).map(|r| (r.rho, r.error_bound)))
        .collect::<Result<_>>()?;
    let min = spectra.iter().map(|s| s.0).fold(f64::INFINITY, f64::min);
    let mut band: Vec<usize> = (0..graphs.len()).filter(|&i| spectra[i].0 <= min + TIE_BAND).collect();
    band.sort_by(|&a, &b| spectra[a].0.total_cmp(&spectra[b].0));

    // Partition the band into classes of exactly equal ρ, keep the lowest.
    let polys: Vec<CharPoly> = band.iter().map(|&i| char_poly(&graphs[i])).collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for (k, _) in band.iter().enumerate() {
        match classes.iter_mut().find(|c| polys[c[0]].same_largest_root(&polys[k])) {
            Some(c) => c.push(k),
            None => classes.push(vec![k]),
        }
    }
    let winners = &classes[0];
    let near_misses = band.len() - winners.len();

    let mut rows: Vec<(String, usize, f64, f64)> = winners
        .iter()
        .map(|&k| {
            let g = &graphs[band[k]];
            let cf = g.canonical_form()?;
            Ok((cf.to_graph6(), g.irregularity(), spectra[band[k]].0, spectra[band[k]].1))
        })
        .collect::<Result<_>>()?;
    rows.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(MinimizerReport {
        n,
        e,
        rho_min: rows.iter().map(|r| r.2).fold(f64::INFINITY, f64::min),
        error_bound: rows.iter().map(|r| r.3).fold(0.0, f64::max),
        degree_spread: rows.iter().map(|r| r.1).collect(),
        minimizers: rows.into_iter().map(|r| r.0).collect(),
        formula_check: None,
        graphs_enumerated: graphs.len(),
        near_misses,
        rho_bound: None,
        wall_time: 0.0,
    })
}

/// Minimizer report with default options.
pub fn minimizers(n: usize, e: usize) -> Result<MinimizerReport> {
    Searcher::new(&SearchOptions::default())?.minimizers(n, e)
}

pub fn verify_hong(n: usize, e: usize) -> Result<HongVerdict> {
    Searcher::new(&SearchOptions::default())?.verify_hong(n, e)
}

pub fn rho_min_table(n_max: usize, e_filter: Option<RangeInclusive<usize>>, opts: &SearchOptions) -> Result<Table> {
    Searcher::new(opts)?.table(n_max, e_filter, None)
}
