//! Acceptance criteria. Prints one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` are evaluated in full and reported
//! as FAIL; the test asserts that they still fail so that a change in their
//! status is noticed.

mod common;

use std::collections::BTreeSet;
use std::process::Command;

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use spectramin::constructions::{alon_pair, b_graph, complete_bipartite, p_graph, path, FamilySpec};
use spectramin::search::{Deadline, Enumerator, MinimizerReport, SearchOptions, Searcher};
use spectramin::spectral::{
    char_poly, char_rho, p_mean, quotient_matrix, quotient_spectral_radius, rho_lower_bound, spectral_radius,
    spectral_radius_any, MeanOrder, Partition, DEFAULT_TOL,
};
use spectramin::transforms::{
    find_internal_paths, hypothesis_rotation, hypothesis_switch, kelmans, local_switch, rotate_edge,
    subdivide_internal, RotationSpec, SwitchSpec,
};
use spectramin::{DegreeSequence, Graph};

const VALUE_TOL: f64 = 1e-8;
const THREE_DECIMAL_TOL: f64 = 2e-3;
const FIGURE_TOL: f64 = 1e-3;
const MONOTONE_TOL: f64 = 1e-9;
const RANDOM_CASES: usize = 1000;

const KNOWN_UNATTAINABLE: &[&str] = &["1e"];

struct Outcome {
    id: &'static str,
    pass: bool,
}

struct Harness {
    outcomes: Vec<Outcome>,
}

impl Harness {
    fn record(&mut self, id: &'static str, name: &str, result: Result<String, String>) {
        let (pass, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        let tag = if pass { "PASS" } else { "FAIL" };
        let note = if !pass && KNOWN_UNATTAINABLE.contains(&id) { " [known unattainable]" } else { "" };
        println!("{tag} {id:<3} {name}: {detail}{note}");
        self.outcomes.push(Outcome { id, pass });
    }
}

fn check(cond: bool, ok: impl Into<String>, bad: impl Into<String>) -> Result<String, String> {
    if cond {
        Ok(ok.into())
    } else {
        Err(bad.into())
    }
}

fn rho_any(g: &Graph) -> f64 {
    spectral_radius_any(g, DEFAULT_TOL).unwrap().rho
}

fn canon_set(graphs: &[Graph]) -> BTreeSet<String> {
    graphs.iter().map(|g| g.canonical_form().unwrap().to_graph().to_graph6()).collect()
}

fn report_set(r: &MinimizerReport) -> BTreeSet<String> {
    r.minimizers.iter().cloned().collect()
}

fn budget() -> Option<u64> {
    std::env::var(spectramin::cli::BUDGET_ENV).ok().and_then(|v| v.trim().parse().ok())
}

fn random_connected(rng: &mut StdRng, lo: usize, hi: usize, density: f64) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(density) {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(n, &edges).unwrap()
}

/// Runs `f` on random connected graphs until it has accepted `RANDOM_CASES`
/// of them (`f` returns None to skip a graph that has no eligible input).
fn random_suite(
    seed: u64,
    lo: usize,
    hi: usize,
    density: f64,
    mut f: impl FnMut(&Graph, &mut StdRng) -> Option<Result<(), String>>,
) -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut accepted = 0;
    let mut tried = 0;
    while accepted < RANDOM_CASES {
        tried += 1;
        if tried > 50 * RANDOM_CASES {
            return Err(format!("only {accepted} eligible cases"));
        }
        let g = random_connected(&mut rng, lo, hi, density);
        match f(&g, &mut rng) {
            None => continue,
            Some(Ok(())) => accepted += 1,
            Some(Err(e)) => return Err(format!("{}: {e}", g.to_graph6())),
        }
    }
    Ok(format!("{accepted} cases"))
}

#[test]
fn acceptance() {
    let mut h = Harness { outcomes: Vec::new() };
    let mut searcher = Searcher::new(&SearchOptions { workers: None, budget_secs: budget() }).unwrap();

    let table8 = searcher.table(8, None, None).unwrap();
    assert!(table8.complete);
    let report = |n: usize, e: usize| table8.reports.iter().find(|r| r.n == n && r.e == e).unwrap();

    // 1. Reproduction of individual values.
    let r = report(6, 8);
    let target = 1.0 + 3f64.sqrt();
    let figs = canon_set(&[fixture("n6e8_a"), fixture("n6e8_b")]);
    h.record(
        "1a",
        "rho_min(6,8) = 1+sqrt3 with 2 minimizers, equal to the fixtures",
        check(
            (r.rho_min - target).abs() <= VALUE_TOL && r.minimizers.len() == 2 && report_set(r) == figs,
            format!("rho_min = {:.12}, {} minimizers", r.rho_min, r.minimizers.len()),
            format!("rho_min = {:.12}, minimizers {:?}", r.rho_min, r.minimizers),
        ),
    );

    let r = report(8, 15);
    let target = (6.0 + 84f64.sqrt()) / 4.0;
    let figs = canon_set(&(1..=5).map(|i| fixture(&format!("n8e15_{i}"))).collect::<Vec<_>>());
    h.record(
        "1b",
        "rho_min(8,15) = (6+sqrt84)/4 with 5 minimizers",
        check(
            (r.rho_min - target).abs() <= VALUE_TOL && r.minimizers.len() == 5 && report_set(r) == figs,
            format!("rho_min = {:.12}, {} minimizers", r.rho_min, r.minimizers.len()),
            format!("rho_min = {:.12}, minimizers {:?}", r.rho_min, r.minimizers),
        ),
    );

    let r = report(8, 17);
    let k44e = complete_bipartite(4, 4).unwrap().with_edge(0, 1).unwrap();
    let rk = rho_any(&k44e);
    let fig4 = fixture("n8e17");
    let rf = rho_any(&fig4);
    let fig4_canon = fig4.canonical_form().unwrap().to_graph().to_graph6();
    h.record(
        "1c",
        "rho_min(8,17) ~ 4.281 < rho(K44+e) ~ 4.293; fixture attains it",
        check(
            (r.rho_min - 4.281).abs() <= THREE_DECIMAL_TOL
                && (rk - 4.293).abs() <= THREE_DECIMAL_TOL
                && r.rho_min < rk
                && (rf - r.rho_min).abs() <= VALUE_TOL
                && r.minimizers.contains(&fig4_canon),
            format!("rho_min = {:.6}, K44+e = {:.6}, fixture = {:.6}", r.rho_min, rk, rf),
            format!("rho_min = {:.6}, K44+e = {:.6}, fixture = {:.6}, minimizers {:?}", r.rho_min, rk, rf, r.minimizers),
        ),
    );

    let (g1, g2) = (fixture("irregular_g1"), fixture("irregular_g2"));
    let (r1, r2) = (rho_any(&g1), rho_any(&g2));
    h.record(
        "1d",
        "irregularity 4 graph has rho 2.677 below the irregularity 3 graph's 2.852",
        check(
            (r1 - 2.677).abs() <= FIGURE_TOL
                && (r2 - 2.852).abs() <= FIGURE_TOL
                && g1.irregularity() == 4
                && g2.irregularity() == 3
                && r1 < r2,
            format!("rho = {r1:.6} (Ir {}), {r2:.6} (Ir {})", g1.irregularity(), g2.irregularity()),
            format!("rho = {r1:.6} (Ir {}), {r2:.6} (Ir {})", g1.irregularity(), g2.irregularity()),
        ),
    );

    let r = report(7, 7);
    let bp = canon_set(&[b_graph(3, 2, 3).unwrap(), p_graph(3, 2, 3).unwrap()]);
    h.record(
        "1e",
        "(7,7) minimizers are exactly B(3,2,3) and P(3,2,3)",
        check(
            report_set(r) == bp,
            "matches",
            format!(
                "minimizers {:?} (rho {:.6}); B/P have {} edges",
                r.minimizers,
                r.rho_min,
                b_graph(3, 2, 3).unwrap().edge_count()
            ),
        ),
    );

    let bad: Vec<usize> = (2..=8)
        .filter(|&n| {
            let r = report(n, n - 1);
            report_set(r) != canon_set(&[path(n).unwrap()])
        })
        .collect();
    h.record(
        "1f",
        "(n, n-1), n <= 8: unique minimizer P_n",
        check(bad.is_empty(), "n = 2..8", format!("fails at n = {bad:?}")),
    );

    let r = report(7, 8);
    let figs = canon_set(&[fixture("n7e8_a"), fixture("n7e8_b")]);
    h.record(
        "1g",
        "(7,8) minimizers are exactly the two bicyclic fixtures (= B(3,2,3), P(3,2,3))",
        check(
            report_set(r) == figs && figs == bp,
            format!("{} minimizers, rho_min = {:.9}", r.minimizers.len(), r.rho_min),
            format!("minimizers {:?}", r.minimizers),
        ),
    );

    // 2. Formula against search.
    let mut covered = 0;
    let mut mismatches = Vec::new();
    for r in table8.reports.iter().filter(|r| r.n >= 5) {
        if let Some(f) = &r.formula_check {
            covered += 1;
            if !((f.predicted - r.rho_min).abs() <= VALUE_TOL && f.family_match) {
                mismatches.push((r.n, r.e));
            }
        }
    }
    h.record(
        "2a",
        "closed forms equal exhaustive rho_min and families, 5 <= n <= 8",
        check(mismatches.is_empty() && covered > 0, format!("{covered} pairs"), format!("mismatch at {mismatches:?}")),
    );

    let table9 = searcher.table(9, Some(8..=36), None);
    let (total9, n9_mismatch, n9_hong, n9_complete) = match &table9 {
        Ok(t) => {
            let rows: Vec<_> = t.reports.iter().filter(|r| r.n == 9).collect();
            let total: usize = rows.iter().map(|r| r.graphs_enumerated).sum();
            let mism: Vec<_> = rows
                .iter()
                .filter(|r| r.formula_check.as_ref().is_some_and(|f| !((f.predicted - r.rho_min).abs() <= VALUE_TOL && f.family_match)))
                .map(|r| r.e)
                .collect();
            let hong: Vec<_> = rows.iter().filter(|r| r.max_irregularity() > 1).map(|r| r.e).collect();
            (total, mism, hong, t.complete && rows.len() == 29)
        }
        Err(_) => (0, vec![], vec![], false),
    };
    h.record(
        "2b",
        "n = 9 sweep: closed forms match",
        check(n9_complete && n9_mismatch.is_empty(), "29 edge counts", format!("complete = {n9_complete}, mismatch at e = {n9_mismatch:?}")),
    );

    let mut dense = Vec::new();
    for (e, regime) in [(38, "R5"), (37, "R5"), (36, "R5"), (34, "R7"), (24, "R9")] {
        match searcher.minimizers(10, e) {
            Ok(r) => {
                let f = r.formula_check.clone();
                let ok = f.as_ref().is_some_and(|f| {
                    f.regimes.iter().any(|x| x.to_string() == regime)
                        && (f.predicted - r.rho_min).abs() <= VALUE_TOL
                        && f.family_match
                });
                dense.push((e, regime, ok, r.rho_min, r.minimizers.len(), r.max_irregularity()));
            }
            Err(err) => {
                println!("     (10,{e}) error: {err}");
                dense.push((e, regime, false, f64::NAN, 0, 0));
            }
        }
    }
    h.record(
        "2c",
        "n = 10: R5 at e = 36..38, R7 at 34, R9 at 24",
        check(
            dense.iter().all(|d| d.2),
            dense.iter().map(|d| format!("({},{}) {} {:.9}", 10, d.0, d.1, d.3)).collect::<Vec<_>>().join("; "),
            format!("{:?}", dense.iter().filter(|d| !d.2).map(|d| d.0).collect::<Vec<_>>()),
        ),
    );

    // 3. Hong.
    let hong8: Vec<_> = table8.reports.iter().filter(|r| r.max_irregularity() > 1).map(|r| (r.n, r.e)).collect();
    let cli = Command::new(env!("CARGO_BIN_EXE_spectramin"))
        .env_remove(spectramin::cli::BUDGET_ENV)
        .args(["verify", "--nmax", "8"])
        .output()
        .unwrap();
    h.record(
        "3a",
        "every minimizer with n <= 8 has max - min degree <= 1 (verify exits 0)",
        check(
            hong8.is_empty() && cli.status.code() == Some(0),
            format!("{} pairs", table8.reports.len()),
            format!("violations {hong8:?}, exit {:?}", cli.status.code()),
        ),
    );
    h.record(
        "3b",
        "same at n = 9",
        check(n9_complete && n9_hong.is_empty(), "29 pairs", format!("complete = {n9_complete}, violations at e = {n9_hong:?}")),
    );

    // 4. Property suites.
    h.record(
        "4a",
        "Kelmans transformation never lowers rho",
        random_suite(1, 2, 8, 0.3, |g, rng| {
            let n = g.order();
            let u = rng.gen_range(0..n);
            let v = (u + rng.gen_range(1..n)) % n;
            let k = kelmans(g, u, v).unwrap();
            Some(check(rho_any(&k) >= rho_any(g) - MONOTONE_TOL && k.edge_count() == g.edge_count(), "", "rho dropped").map(|_| ()))
        }),
    );
    h.record(
        "4b",
        "rotation under x_t >= x_s strictly raises rho",
        random_suite(2, 3, 8, 0.3, |g, rng| {
            let n = g.order();
            let cands: Vec<RotationSpec> = (0..n)
                .flat_map(|r| g.neighbors(r).flat_map(move |s| (0..n).map(move |t| RotationSpec { r, s, t })))
                .filter(|sp| sp.t != sp.r && sp.t != sp.s && !g.has_edge(sp.r, sp.t))
                .filter(|&sp| hypothesis_rotation(g, sp).unwrap())
                .collect();
            if cands.is_empty() {
                return None;
            }
            let sp = cands[rng.gen_range(0..cands.len())];
            let k = rotate_edge(g, sp).unwrap();
            let (a, b) = (rho_any(g), rho_any(&k));
            let strict = b > a + 1e-10 || (!char_poly(g).same_largest_root(&char_poly(&k)) && b >= a - MONOTONE_TOL);
            Some(check(strict, "", format!("{sp:?}: {a} -> {b}")).map(|_| ()))
        }),
    );
    h.record(
        "4c",
        "local switching under (x_s-x_u)(x_v-x_t) >= 0 does not lower rho; ties need x_s=x_u, x_v=x_t",
        random_suite(3, 4, 8, 0.35, |g, rng| {
            let edges = g.edges();
            let mut cands = Vec::new();
            for &(a, b) in &edges {
                for &(c, d) in &edges {
                    for (s, t) in [(a, b), (b, a)] {
                        for (u, v) in [(c, d), (d, c)] {
                            let sp = SwitchSpec { s, t, u, v };
                            if s != u && s != v && t != u && t != v && !g.has_edge(s, v) && !g.has_edge(t, u) && hypothesis_switch(g, sp).unwrap() {
                                cands.push(sp);
                            }
                        }
                    }
                }
            }
            if cands.is_empty() {
                return None;
            }
            let sp = cands[rng.gen_range(0..cands.len())];
            let k = local_switch(g, sp).unwrap();
            let (a, b) = (rho_any(g), rho_any(&k));
            if b < a - MONOTONE_TOL {
                return Some(Err(format!("{sp:?}: {a} -> {b}")));
            }
            if char_poly(g).same_largest_root(&char_poly(&k)) {
                let x = spectral_radius(g, DEFAULT_TOL).unwrap().eigenvector;
                if (x[sp.s] - x[sp.u]).abs() > 1e-8 || (x[sp.v] - x[sp.t]).abs() > 1e-8 {
                    return Some(Err(format!("{sp:?}: tie without the equality condition")));
                }
            }
            Some(Ok(()))
        }),
    );
    let mut subdivided = 0;
    let mut sub_err = None;
    'outer: for n in 3..=8 {
        let mut en = Enumerator::new(n).unwrap();
        for e in n - 1..=binom2(n) {
            for g in en.connected(e, &Deadline::none()).unwrap() {
                let rho = rho_any(&g);
                let mut seen = BTreeSet::new();
                for p in find_internal_paths(&g) {
                    for w in p.windows(2) {
                        if seen.insert((w[0].min(w[1]), w[0].max(w[1]))) {
                            let s = subdivide_internal(&g, w[0], w[1]).unwrap();
                            subdivided += 1;
                            if rho_any(&s) > rho + MONOTONE_TOL {
                                sub_err = Some(format!("{} edge {}-{}", g.to_graph6(), w[0], w[1]));
                                break 'outer;
                            }
                        }
                    }
                }
            }
        }
    }
    h.record(
        "4d",
        "subdividing an internal-path edge never raises rho (all graphs n <= 8)",
        check(sub_err.is_none() && subdivided >= RANDOM_CASES, format!("{subdivided} edges"), sub_err.unwrap_or_default()),
    );
    h.record(
        "4e",
        "quotient matrices interlace: rho(Q) <= rho(G)",
        random_suite(5, 1, 8, 0.3, |g, rng| {
            let n = g.order();
            let k = rng.gen_range(1..=n.min(4));
            let mut blocks = vec![Vec::new(); k];
            for v in 0..n {
                blocks[if v < k { v } else { rng.gen_range(0..k) }].push(v);
            }
            let q = quotient_matrix(g, &Partition::new(n, blocks).unwrap()).unwrap();
            let rq = quotient_spectral_radius(&q).unwrap();
            Some(check(rq <= rho_any(g) + MONOTONE_TOL, "", format!("{rq} > rho")).map(|_| ()))
        }),
    );
    h.record(
        "4f",
        "equitable quotients keep rho",
        random_suite(6, 1, 8, 0.4, |g, _| {
            let q = quotient_matrix(g, &Partition::new(g.order(), colour_refinement(g)).unwrap()).unwrap();
            let d = (quotient_spectral_radius(&q).unwrap() - rho_any(g)).abs();
            Some(check(q.equitable && d <= MONOTONE_TOL, "", format!("equitable = {}, diff {d:e}", q.equitable)).map(|_| ()))
        }),
    );
    let mut rng = StdRng::seed_from_u64(7);
    let mut pm_err = None;
    for _ in 0..RANDOM_CASES {
        let len = rng.gen_range(1..10);
        let d: Vec<usize> = (0..len).map(|_| rng.gen_range(1..12)).collect();
        let seq = DegreeSequence(d.clone());
        let mut vals: Vec<f64> = [1.0, 1.5, 2.0, 3.0, 10.0].iter().map(|&p| p_mean(&seq, MeanOrder::Finite(p)).unwrap()).collect();
        vals.push(p_mean(&seq, MeanOrder::Infinity).unwrap());
        let constant = d.iter().all(|&x| x == d[0]);
        let ok = vals.windows(2).all(|w| if constant { (w[1] - w[0]).abs() <= 1e-12 } else { w[1] > w[0] });
        if !ok {
            pm_err = Some(format!("{d:?}: {vals:?}"));
            break;
        }
    }
    h.record(
        "4g",
        "p-means strictly increase in p unless constant",
        check(pm_err.is_none(), format!("{RANDOM_CASES} sequences"), pm_err.unwrap_or_default()),
    );
    h.record(
        "4h",
        "char_rho is 1 on regular graphs and >= 2 otherwise; 2 on semiregular",
        random_suite(8, 2, 8, 0.3, |g, _| {
            let p = char_rho(g, 1e-10).unwrap();
            Some(check(if g.is_regular() { p == 1.0 } else { p >= 2.0 - 1e-6 }, "", format!("char_rho {p}")).map(|_| ()))
        })
        .and_then(|s| {
            let semi = [complete_bipartite(3, 4).unwrap(), complete_bipartite(2, 5).unwrap()];
            let ps: Vec<f64> = semi.iter().map(|g| char_rho(g, 1e-10).unwrap()).collect();
            check(ps.iter().all(|p| (p - 2.0).abs() <= 1e-6), s, format!("semiregular {ps:?}"))
        }),
    );
    h.record(
        "4i",
        "rho >= 2e/n with equality iff regular",
        random_suite(9, 1, 8, 0.3, |g, _| {
            let (r, b) = (rho_any(g), rho_lower_bound(g));
            Some(check(b <= r + 1e-12 && ((r - b).abs() <= 1e-9) == g.is_regular(), "", format!("rho {r}, 2e/n {b}")).map(|_| ()))
        }),
    );
    let lemma_fail: Vec<String> = table8
        .reports
        .iter()
        .flat_map(|r| {
            let (n, e) = (r.n, r.e);
            r.minimizer_graphs().unwrap().into_iter().filter_map(move |g| {
                let deg = |v: usize| g.degree(v);
                let pendant = e >= n && n >= 2 && g.min_degree() == 1;
                let far = n >= 4
                    && (0..n).any(|v| deg(v) == n - 2 && (0..n).any(|u| u != v && !g.has_edge(u, v) && deg(u) + 4 <= n));
                let full = n >= 3 && 2 * e < 2 * binom2(n) - n && g.max_degree() == n - 1;
                let one = n >= 3 && e + n < binom2(n) && (0..n).filter(|&v| deg(v) == n - 2).count() == 1;
                (pendant || far || full || one).then(|| format!("({n},{e}) {}", g.to_graph6()))
            })
        })
        .collect();
    h.record(
        "4j",
        "minimizer structure: no pendant vertex, n-2 vs n-4, no n-1 vertex, not exactly one n-2",
        check(lemma_fail.is_empty(), format!("{} pairs", table8.reports.len()), format!("{lemma_fail:?}")),
    );

    // 5. Enumeration oracle.
    let mut oracle_bad = Vec::new();
    for n in 1..=7 {
        let labelled = labelled_connected_by_edges(n);
        let mut en = Enumerator::new(n).unwrap();
        for e in n - 1..=binom2(n) {
            let reps = en.connected(e, &Deadline::none()).unwrap();
            let orbit: u64 = reps.iter().map(|g| factorial(n) / automorphism_count(g)).sum();
            if orbit != labelled[e] {
                oracle_bad.push((n, e));
            }
        }
    }
    let mut totals: Vec<usize> = [7usize, 8]
        .iter()
        .map(|&n| {
            let mut en = Enumerator::new(n).unwrap();
            (n - 1..=binom2(n)).map(|e| en.count_connected(e, &Deadline::none()).unwrap()).sum()
        })
        .collect();
    // The n = 9 sweep above covers every feasible e.
    totals.push(total9);
    h.record(
        "5",
        "enumeration matches the labelled oracle (n <= 7); totals 853 / 11117 / 261080",
        check(
            oracle_bad.is_empty() && totals == [853, 11117, 261080],
            format!("totals {totals:?}"),
            format!("oracle mismatch {oracle_bad:?}, totals {totals:?}"),
        ),
    );

    // 6. Determinism.
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_spectramin"))
            .env_remove(spectramin::cli::BUDGET_ENV)
            .args(["table", "--nmax", "7"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    h.record(
        "6",
        "table --nmax 7 is byte-identical across runs",
        check(
            a.status.success() && a.stdout == b.stdout && !a.stdout.is_empty(),
            format!("{} bytes", a.stdout.len()),
            "outputs differ",
        ),
    );

    // Alon pair at small sizes.
    let mut alon = Vec::new();
    let mut alon_ok = true;
    for t in 2..=4usize {
        for n in 2 * t + 5..=2 * t + 9 {
            if t * (n + 1) % 2 != 0 {
                continue;
            }
            match alon_pair(t, n) {
                Ok((g1, g2)) => {
                    let ok = rho_any(&g1) >= (t + 1) as f64 - MONOTONE_TOL
                        && g1.irregularity() == 2
                        && g2.irregularity() == t + 4
                        && g1.irregularity() < g2.irregularity()
                        && (g1.order(), g1.edge_count()) == (g2.order(), g2.edge_count())
                        && g1.is_connected()
                        && g2.is_connected();
                    alon_ok &= ok;
                    alon.push(format!("({t},{n}){}", if ok { "" } else { "!" }));
                }
                Err(e) => {
                    alon_ok = false;
                    alon.push(format!("({t},{n}) {e}"));
                }
            }
        }
    }
    let spec_ok = "alon:t=2,n=9,member=1".parse::<FamilySpec>().is_ok();
    h.record(
        "7",
        "Alon pair: rho(G1) >= t+1 and Ir(G1) = 2 < Ir(G2) = t+4",
        check(alon_ok && spec_ok, alon.join(" "), alon.join(" ")),
    );

    let failed: Vec<&str> = h.outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    println!("failed: {failed:?}; known unattainable: {KNOWN_UNATTAINABLE:?}");
    assert_eq!(failed, KNOWN_UNATTAINABLE, "acceptance outcome changed");
}
