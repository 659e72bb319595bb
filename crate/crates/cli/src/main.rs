use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use spectral_chi::bounds::full_report_with_tol;
use spectral_chi::compose::{edge_disjoint_union, join, one_sum};
use spectral_chi::exec::Execution;
use spectral_chi::families::Family;
use spectral_chi::search::{search_with_tol, Predicate, SEARCH_CAP};
use spectral_chi::verify::{render_table, run_suite, Suite, VerifyConfig};
use spectral_chi::Graph;

#[derive(Parser)]
#[command(name = "spectral-chi", version, about = "Normalized-Laplacian spectra and chromatic bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Eigenvalue grouping and comparison tolerance.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    /// Seed for the random corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Order cap: largest random graph for `verify`, largest scanned graph for `search`.
    #[arg(long, global = true)]
    max_n: Option<usize>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Run on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a family graph.
    Gen { spec: String },
    /// Spectrum, chromatic number and every bound for a graph.
    Report {
        /// Edge-list file or family spec.
        input: String,
    },
    /// Run the verification suites.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Build a composite graph and report on it.
    Compose {
        #[command(subcommand)]
        op: ComposeOp,
    },
    /// Scan all small connected graphs for sharp instances.
    Search {
        /// `sharp`, `sharp-mult=K` or `sharp-mult=N-K`.
        #[arg(default_value = "sharp")]
        predicate: String,
    },
}

#[derive(Subcommand)]
enum ComposeOp {
    /// 1-sum gluing `x1` of the first graph to `x2` of the second.
    Onesum { g1: String, x1: usize, g2: String, x2: usize },
    /// Join: disjoint union plus all edges between the sides.
    Join { g1: String, g2: String },
    /// Union on a common vertex set; the inputs must share no edge.
    Edu { g1: String, g2: String },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
    Edgelist,
}

enum Failure {
    Usage(anyhow::Error),
    Verification(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<spectral_chi::Error> for Failure {
    fn from(e: spectral_chi::Error) -> Self {
        Failure::Usage(e.into())
    }
}

fn read_graph(input: &str) -> anyhow::Result<Graph> {
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {input}"))?;
        return Graph::parse_edge_list(&text).with_context(|| format!("parsing {input}"));
    }
    let family = Family::parse(input)?;
    Ok(family.graph()?)
}

fn graph_json(g: &Graph) -> String {
    let edges: Vec<[usize; 2]> = g.edges().map(|(a, b)| [a, b]).collect();
    serde_json::to_string_pretty(&json!({ "n": g.n(), "edges": edges })).expect("serializable") + "\n"
}

fn render_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Json => graph_json(g),
        Format::Dot => g.to_dot(),
        Format::Text | Format::Edgelist => g.to_edge_list_string(),
    }
}

fn render_report(g: &Graph, format: Format, tol: f64) -> Result<String, Failure> {
    Ok(match format {
        Format::Dot | Format::Edgelist => render_graph(g, format),
        Format::Json => full_report_with_tol(g, tol)?.to_json() + "\n",
        Format::Text => full_report_with_tol(g, tol)?.to_text(),
    })
}

fn run(cli: &Cli) -> Result<String, Failure> {
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        return Err(anyhow!("--tol must be positive").into());
    }
    if cli.max_n == Some(0) {
        return Err(anyhow!("--max-n must be at least 1").into());
    }
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    match &cli.command {
        Command::Gen { spec } => {
            let g = Family::parse(spec)?.graph()?;
            Ok(render_graph(&g, cli.format.unwrap_or(Format::Edgelist)))
        }
        Command::Report { input } => render_report(&read_graph(input)?, cli.format.unwrap_or(Format::Text), cli.tol),
        Command::Compose { op } => {
            let (g, what) = match op {
                ComposeOp::Onesum { g1, x1, g2, x2 } => {
                    let glued = one_sum(&read_graph(g1)?, *x1, &read_graph(g2)?, *x2)?;
                    (glued.result, format!("{g1}[{x1}] (+) {g2}[{x2}]"))
                }
                ComposeOp::Join { g1, g2 } => (join(&read_graph(g1)?, &read_graph(g2)?), format!("{g1} v {g2}")),
                ComposeOp::Edu { g1, g2 } => {
                    let glued = edge_disjoint_union(&read_graph(g1)?, &read_graph(g2)?)?;
                    (glued.result, format!("{g1} u {g2}"))
                }
            };
            let format = cli.format.unwrap_or(Format::Text);
            let body = render_report(&g, format, cli.tol)?;
            Ok(if format == Format::Text { format!("composite {what}\n{body}") } else { body })
        }
        Command::Verify { suite } => {
            let Some(suite) = Suite::parse(suite) else {
                return Err(anyhow!("unknown suite {suite:?}; expected families, sharp, onesum, bounds or all").into());
            };
            let max_n = cli.max_n.unwrap_or(10);
            if max_n < 3 {
                return Err(anyhow!("verify needs --max-n >= 3").into());
            }
            let cfg = VerifyConfig { seed: cli.seed, tol: cli.tol, max_n, exec, ..VerifyConfig::default() };
            let checks = run_suite(suite, &cfg)?;
            let passed = checks.iter().all(|c| c.passed());
            let out = match cli.format.unwrap_or(Format::Text) {
                Format::Json => {
                    let doc =
                        json!({ "seed": cli.seed, "tol": cli.tol, "max_n": max_n, "passed": passed, "checks": checks });
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
                Format::Text => render_table(&checks),
                other => return Err(anyhow!("verify cannot emit {}", format_name(other)).into()),
            };
            if passed {
                Ok(out)
            } else {
                Err(Failure::Verification(out))
            }
        }
        Command::Search { predicate } => {
            let max_n = cli.max_n.unwrap_or(6);
            if max_n > SEARCH_CAP {
                return Err(anyhow!("search is capped at --max-n {SEARCH_CAP}, got {max_n}").into());
            }
            let result = search_with_tol(max_n, Predicate::parse(predicate)?, cli.tol, exec)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => Ok(result.to_json() + "\n"),
                Format::Text => Ok(result.to_text()),
                other => Err(anyhow!("search cannot emit {}", format_name(other)).into()),
            }
        }
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Json => "json",
        Format::Text => "text",
        Format::Dot => "dot",
        Format::Edgelist => "edgelist",
    }
}

fn emit(cli: &Cli, text: &str) -> anyhow::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(Failure::Verification(text)) => (text, 1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
