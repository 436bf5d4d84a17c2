//! Command-line front end.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::constructions::FamilySpec;
use crate::error::{Error, Result};
use crate::formulas::predict;
use crate::graph::Graph;
use crate::search::{HongVerdict, MinimizerReport, SearchOptions, Searcher, CSV_HEADER};
use crate::spectral::{char_rho, rho_lower_bound, spectral_radius_any, DEFAULT_TOL};
use crate::transforms::TransformSpec;

/// Environment variable holding the wall-clock budget for long sweeps.
pub const BUDGET_ENV: &str = "SPECTRAMIN_BUDGET_SECS";

pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const INFEASIBLE: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const VERIFICATION: i32 = 4;
}

#[derive(Debug, Parser)]
#[command(name = "spectramin", version, about = "Minimum spectral radius of connected graphs")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Residual tolerance for the spectral radius.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    /// Worker threads for searches.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: Option<u64>,
    /// JSON-lines checkpoint file for `table` and `verify`.
    #[arg(long, global = true)]
    pub checkpoint: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectral radius, Perron vector, spectral mean order and 2e/n bound.
    Rho {
        /// graph6 string or @file.
        graph: String,
    },
    /// Build a graph from a family spec such as `g2g3even:n=8,p=1`.
    Construct { spec: String },
    /// Apply a transformation such as `rotate:r=1,s=0,t=3`.
    Transform { graph: String, spec: String },
    /// All minimizers for one (n, e).
    Minimize {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        e: usize,
    },
    /// Minimizer reports for every (n, e) up to nmax.
    Table {
        #[arg(long)]
        nmax: usize,
        /// Inclusive edge range `lo..hi`, `lo-hi` or a single value.
        #[arg(long)]
        e: Option<String>,
        /// Also write the CSV summary here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Hong's almost-regularity question and formula cross-checks up to nmax.
    Verify {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        e: Option<String>,
    },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::Graph6(_) | Error::Io(_) => exit::USAGE,
        Error::Budget(_) => exit::BUDGET,
        Error::Inconsistent(_) => exit::VERIFICATION,
        _ => exit::INFEASIBLE,
    }
}

/// Parses a graph6 argument; `@path` reads the first graph line of a file
/// (blank lines and `#` comments are skipped).
pub fn read_graph_arg(arg: &str) -> Result<Graph> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = fs::read_to_string(path)?;
            let line = text
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty() && !l.starts_with('#'))
                .ok_or_else(|| Error::Parse(format!("{path}: no graph found")))?;
            Graph::from_graph6(line)
        }
        None => Graph::from_graph6(arg.trim()),
    }
}

/// `lo..hi`, `lo-hi`, `lo..=hi` or a single number.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Parse(format!("bad range {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    for sep in ["..=", "..", "-"] {
        if let Some((a, b)) = s.split_once(sep) {
            return Ok(num(a)?..=num(b)?);
        }
    }
    let v = num(s)?;
    Ok(v..=v)
}

fn budget_from_env() -> Result<Option<u64>> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse(format!("{BUDGET_ENV} must be a whole number of seconds, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

/// Parses `args`, runs the command writing to `out`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn json_line(out: &mut dyn Write, v: &serde_json::Value) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("json"))?;
    Ok(())
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let g = &cli.global;
    if !(g.tol > 0.0) {
        return Err(Error::Parse(format!("--tol must be positive, got {}", g.tol)));
    }
    let opts = SearchOptions { workers: g.workers.map(|w| w as usize), budget_secs: budget_from_env()? };
    match &cli.command {
        Command::Rho { graph } => {
            let graph = read_graph_arg(graph)?;
            let r = spectral_radius_any(&graph, g.tol)?;
            let mean_order = if graph.is_connected() { Some(char_rho(&graph, 1e-10)?) } else { None };
            let bound = rho_lower_bound(&graph);
            match g.format {
                Format::Text => {
                    writeln!(out, "rho {:.12}", r.rho)?;
                    writeln!(out, "error_bound {:e}", r.error_bound)?;
                    writeln!(out, "lower_bound_2e_over_n {:.12}", bound)?;
                    if let Some(p) = mean_order {
                        writeln!(out, "char_rho {:.9}", p)?;
                    }
                    let x: Vec<String> = r.eigenvector.iter().map(|v| format!("{v:.9}")).collect();
                    writeln!(out, "eigenvector {}", x.join(" "))?;
                }
                Format::Json => json_line(
                    out,
                    &json!({
                        "graph6": graph.to_graph6(),
                        "n": graph.order(),
                        "e": graph.edge_count(),
                        "rho": r.rho,
                        "error_bound": r.error_bound,
                        "residual": r.residual,
                        "iterations": r.iterations,
                        "eigenvector": r.eigenvector,
                        "char_rho": mean_order,
                        "lower_bound": bound,
                        "irregularity": graph.irregularity(),
                    }),
                )?,
                Format::Csv => {
                    writeln!(out, "graph6,n,e,rho,char_rho,lower_bound")?;
                    writeln!(
                        out,
                        "{},{},{},{:.12},{},{:.12}",
                        graph.to_graph6(),
                        graph.order(),
                        graph.edge_count(),
                        r.rho,
                        mean_order.map(|p| format!("{p:.9}")).unwrap_or_default(),
                        bound
                    )?;
                }
            }
            Ok(exit::OK)
        }
        Command::Construct { spec } => {
            let spec: FamilySpec = spec.parse()?;
            let graph = spec.build()?;
            match g.format {
                Format::Json => json_line(
                    out,
                    &json!({
                        "spec": spec.to_string(),
                        "graph6": graph.to_graph6(),
                        "n": graph.order(),
                        "e": graph.edge_count(),
                        "rho": spectral_radius_any(&graph, g.tol)?.rho,
                    }),
                )?,
                _ => writeln!(out, "{}", graph.to_graph6())?,
            }
            Ok(exit::OK)
        }
        Command::Transform { graph, spec } => {
            let graph = read_graph_arg(graph)?;
            let spec: TransformSpec = spec.parse()?;
            let hypothesis = spec.hypothesis(&graph).ok().flatten();
            let after = spec.apply(&graph)?;
            let before_rho = spectral_radius_any(&graph, g.tol)?.rho;
            let after_rho = spectral_radius_any(&after, g.tol)?.rho;
            match g.format {
                Format::Json => json_line(
                    out,
                    &json!({
                        "transform": spec.to_string(),
                        "before": graph.to_graph6(),
                        "after": after.to_graph6(),
                        "rho_before": before_rho,
                        "rho_after": after_rho,
                        "hypothesis": hypothesis,
                        "connected_after": after.is_connected(),
                    }),
                )?,
                _ => {
                    writeln!(out, "{}", after.to_graph6())?;
                    writeln!(out, "rho {before_rho:.12} -> {after_rho:.12}")?;
                }
            }
            Ok(exit::OK)
        }
        Command::Minimize { n, e } => {
            let mut searcher = Searcher::new(&opts)?;
            let r = searcher.minimizers(*n, *e)?;
            write_reports(out, g.format, std::slice::from_ref(&r))?;
            Ok(exit::OK)
        }
        Command::Table { nmax, e, csv } => {
            let filter = e.as_deref().map(parse_range).transpose()?;
            let mut searcher = Searcher::new(&opts)?;
            let table = searcher.table(*nmax, filter, g.checkpoint.as_deref())?;
            write_reports(out, g.format, &table.reports)?;
            if let Some(path) = csv {
                let mut f = fs::File::create(path)?;
                write_reports(&mut f, Format::Csv, &table.reports)?;
            }
            Ok(if table.complete { exit::OK } else { exit::BUDGET })
        }
        Command::Verify { nmax, e } => {
            let filter = e.as_deref().map(parse_range).transpose()?;
            let mut searcher = Searcher::new(&opts)?;
            let table = searcher.table(*nmax, filter, g.checkpoint.as_deref())?;
            let mut failed = false;
            for r in &table.reports {
                let hong = HongVerdict::from_report(r);
                let formula = r.formula_check.as_ref().map(|f| f.matches());
                failed |= !hong.holds || formula == Some(false);
                match g.format {
                    Format::Json => json_line(
                        out,
                        &json!({
                            "n": r.n,
                            "e": r.e,
                            "hong": hong.holds,
                            "witnesses": hong.witnesses,
                            "formula": r.formula_check,
                        }),
                    )?,
                    Format::Csv | Format::Text => writeln!(
                        out,
                        "{},{},hong={},formula={}",
                        r.n,
                        r.e,
                        hong.holds,
                        match formula {
                            Some(true) => "match",
                            Some(false) => "MISMATCH",
                            None => "-",
                        }
                    )?,
                }
            }
            Ok(if !table.complete {
                exit::BUDGET
            } else if failed {
                exit::VERIFICATION
            } else {
                exit::OK
            })
        }
    }
}

fn write_reports(out: &mut dyn Write, format: Format, reports: &[MinimizerReport]) -> Result<()> {
    match format {
        Format::Json => {
            for r in reports {
                writeln!(out, "{}", r.to_json_line())?;
            }
        }
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in reports {
                writeln!(out, "{}", r.csv_row())?;
            }
        }
        Format::Text => {
            for r in reports {
                let regimes = predict(r.n, r.e)?.iter().map(|p| p.regime.to_string()).collect::<Vec<_>>();
                writeln!(
                    out,
                    "n={} e={} rho_min={:.12} minimizers={} max_ir={} regimes=[{}]",
                    r.n,
                    r.e,
                    r.rho_min,
                    r.minimizers.len(),
                    r.max_irregularity(),
                    regimes.join(",")
                )?;
                for (s, ir) in r.minimizers.iter().zip(&r.degree_spread) {
                    writeln!(out, "  {s} ir={ir}")?;
                }
            }
        }
    }
    Ok(())
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
