use std::fs::File;
use std::io::{self, BufRead, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use welldom::corpus::{
    all_graphs_up_to_iso, connected_graphs_up_to_iso, decode_graph6, encode_graph6, write_graph6_lines,
};
use welldom::domination::{
    enumerate_maximal_independent_sets, enumerate_minimal_dominating_sets, is_well_covered,
    is_well_dominated,
};
use welldom::families::{complete, complete_bipartite, cycle, family_f1, family_f2, path, LeafCounts};
use welldom::harness::{run_all, run_claim, SweepConfig, SweepReport};
use welldom::{cartesian_product, Error, Graph, VertexSet};

#[derive(Parser)]
#[command(name = "welldom", version, about = "Exact domination toolkit for small graphs")]
struct Cli {
    /// Worker threads for sweeps.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether a graph is well-dominated (or well-covered).
    Check {
        /// graph6 record, or `-` to read one from stdin.
        #[arg(default_value = "-")]
        graph: String,
        #[arg(long)]
        well_covered: bool,
    },
    /// List the minimal dominating sets, one JSON array per line.
    EnumMds {
        graph: String,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// List the maximal independent sets, one JSON array per line.
    EnumMis {
        graph: String,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Cartesian product of two graphs, with its coordinate map.
    Product { g: String, h: String },
    /// Build a named graph: complete N, path N, cycle N, bipartite R,S,
    /// f1 A,B,C or f2 A,B,C.
    Gen { family: Family, params: String },
    /// Connected graphs of one order up to isomorphism, as graph6 lines.
    Corpus {
        #[arg(long)]
        order: usize,
        /// Include disconnected graphs.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one claim verifier, or `all`.
    Verify {
        claim: String,
        #[arg(long)]
        max_order: Option<usize>,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Path,
    Cycle,
    Bipartite,
    F1,
    F2,
}

/// Failure modes mapped to exit codes.
enum Failure {
    Library(Error),
    Io(io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Library(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            match f {
                Failure::Library(e) => eprintln!("error: {e}"),
                Failure::Io(e) => eprintln!("error: {e}"),
                Failure::Usage(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let cfg = SweepConfig::new(cli.workers);
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Check { graph, well_covered } => {
            let g = read_graph(&graph)?;
            let report = if well_covered {
                is_well_covered(&g)?
            } else {
                is_well_dominated(&g)?
            };
            let property = if well_covered { "well-covered" } else { "well-dominated" };
            #[derive(Serialize)]
            struct Check<'a> {
                graph6: String,
                order: usize,
                property: &'a str,
                verdict: bool,
                common_size: Option<usize>,
                witnesses: Option<[VertexSet; 2]>,
            }
            let check = Check {
                graph6: encode_graph6(&g)?.into_string(),
                order: g.order(),
                property,
                verdict: report.verdict,
                common_size: report.common_size,
                witnesses: report.witnesses().map(|(a, b)| [a, b]),
            };
            writeln!(out, "{}", serde_json::to_string(&check)?)?;
        }
        Command::EnumMds { graph, limit } => {
            let g = read_graph(&graph)?;
            for s in enumerate_minimal_dominating_sets(&g)?.take(limit.unwrap_or(usize::MAX)) {
                writeln!(out, "{}", serde_json::to_string(&s)?)?;
            }
        }
        Command::EnumMis { graph, limit } => {
            let g = read_graph(&graph)?;
            for s in enumerate_maximal_independent_sets(&g)?.take(limit.unwrap_or(usize::MAX)) {
                writeln!(out, "{}", serde_json::to_string(&s)?)?;
            }
        }
        Command::Product { g, h } => {
            let (g, h) = (read_graph(&g)?, read_graph(&h)?);
            let (p, map) = cartesian_product(&g, &h)?;
            #[derive(Serialize)]
            struct Product {
                graph6: String,
                order: usize,
                g_order: usize,
                h_order: usize,
                coordinates: Vec<(usize, usize)>,
            }
            let product = Product {
                graph6: encode_graph6(&p)?.into_string(),
                order: p.order(),
                g_order: map.g_order,
                h_order: map.h_order,
                coordinates: (0..p.order()).map(|v| map.decode(v)).collect(),
            };
            writeln!(out, "{}", serde_json::to_string(&product)?)?;
        }
        Command::Gen { family, params } => {
            let g = generate(family, &params)?;
            writeln!(out, "{}", encode_graph6(&g)?)?;
        }
        Command::Corpus { order, all, out: path } => {
            let gs = if all {
                all_graphs_up_to_iso(order)?
            } else {
                connected_graphs_up_to_iso(order)?
            };
            match path {
                Some(p) => write_graph6_lines(&gs, BufWriter::new(File::create(p)?))?,
                None => write_graph6_lines(&gs, &mut out)?,
            }
        }
        Command::Verify { claim, max_order, json } => {
            let reports = if claim == "all" {
                run_all(max_order, &cfg)?
            } else {
                vec![run_claim(&claim, max_order, &cfg)?]
            };
            for r in &reports {
                summarise(r);
            }
            let body = if claim == "all" {
                serde_json::to_string_pretty(&reports)?
            } else {
                serde_json::to_string_pretty(&reports[0])?
            };
            match json {
                Some(p) => {
                    let mut f = BufWriter::new(File::create(p)?);
                    writeln!(f, "{body}")?;
                    f.flush()?;
                }
                None => writeln!(out, "{body}")?,
            }
            out.flush()?;
            return Ok(if reports.iter().all(|r| r.conforming) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            });
        }
    }
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

/// One status line per claim on stderr, plus every non-conforming instance.
fn summarise(r: &SweepReport) {
    let status = if r.conforming { "conforming" } else { "NON-CONFORMING" };
    eprintln!(
        "{}: {status} ({} instances, {} ms)",
        r.claim_id,
        r.instances.len(),
        r.elapsed_ms
    );
    for i in r.failures() {
        eprintln!("  {} [{}]: verdict {}, expected {}", i.label, i.check, i.verdict, i.expected);
    }
}

fn read_graph(arg: &str) -> Result<Graph, Failure> {
    if arg != "-" {
        return Ok(decode_graph6(arg)?);
    }
    for line in io::stdin().lock().lines() {
        let line = line?;
        if !line.trim().is_empty() {
            return Ok(decode_graph6(&line)?);
        }
    }
    Err(Failure::Usage("no graph6 record on stdin".into()))
}

fn numbers(params: &str, want: usize) -> Result<Vec<usize>, Failure> {
    let parsed: Result<Vec<usize>, _> = params.split(',').map(|p| p.trim().parse::<usize>()).collect();
    match parsed {
        Ok(v) if v.len() == want => Ok(v),
        _ => Err(Failure::Usage(format!(
            "expected {want} comma-separated non-negative integers, got {params:?}"
        ))),
    }
}

fn generate(family: Family, params: &str) -> Result<Graph, Failure> {
    Ok(match family {
        Family::Complete => complete(numbers(params, 1)?[0])?,
        Family::Path => path(numbers(params, 1)?[0])?,
        Family::Cycle => cycle(numbers(params, 1)?[0])?,
        Family::Bipartite => {
            let v = numbers(params, 2)?;
            complete_bipartite(v[0], v[1])?
        }
        Family::F1 | Family::F2 => {
            let v = numbers(params, 3)?;
            let c = LeafCounts::new(v[0], v[1], v[2]);
            if matches!(family, Family::F1) {
                family_f1(c)?
            } else {
                family_f2(c)?
            }
        }
    })
}
