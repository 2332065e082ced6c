use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::{CliError, Report};

/// Decide path-bipartite, path-complete, proximinal and path-proximinal
/// properties of graphs with a vertex partition, and build witness spaces.
///
/// The first line on stdout is always a machine-readable verdict. Exit status
/// is 0 for true or success, 1 for false, 2 for usage or input errors.
#[derive(Debug, Parser)]
#[command(name = "proxigraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print Semimetric, Metric or Ultrametric for a space file.
    Classify { space: PathBuf },
    /// Decide one property of a graph with a partition.
    Check {
        kind: CheckKind,
        graph: PathBuf,
        partition: PathBuf,
        /// Space file, required for the proximinal kinds.
        #[arg(long)]
        space: Option<PathBuf>,
    },
    /// List the pairs of A x B joined by a be-path.
    Bpath {
        graph: PathBuf,
        partition: PathBuf,
        /// Print one be-path joining A-vertex `a` to B-vertex `b`.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        witness: Option<Vec<String>>,
        /// Also print the graph of part components in DOT.
        #[arg(long)]
        quotient: bool,
    },
    /// Build a space realizing the graph, re-verify it, and write the certificate.
    Witness {
        kind: WitnessKind,
        graph: PathBuf,
        /// Partition file, required for `metric` and `proximinal-metric`.
        partition: Option<PathBuf>,
        /// Directory for graph.json, partition.json, space.json and certificate.json;
        /// without it the certificate is printed.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Sweep an equivalence over exhaustive and seeded instance families.
    Verify {
        /// One of t3.4, t3.6, t3.9, t3.16, t2.1, t3.10, c2.9, c3.10, c3.12, p3.22, p3.9, t3.5.
        theorem: String,
        /// Largest labeled graph size (hard cap 7); defaults to PROXIGRAPH_MAX_N or a per-sweep value.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        /// Seeds for randomized families (qualifying instances for t3.10).
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Rebuild a worked example, re-check its claims, and optionally write its files.
    Example {
        name: String,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 2)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Print a graph file in DOT; with a partition, print its component quotient instead.
    ExportDot {
        graph: PathBuf,
        #[arg(long)]
        quotient: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CheckKind {
    PathBipartite,
    PathComplete,
    PathProximinal,
    Proximinal,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum WitnessKind {
    Metric,
    Ultrametric,
    ProximinalMetric,
}

fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Classify { space } => commands::classify(&space),
        Command::Check {
            kind,
            graph,
            partition,
            space,
        } => commands::check(kind, &graph, &partition, space.as_deref()),
        Command::Bpath {
            graph,
            partition,
            witness,
            quotient,
        } => commands::bpath(&graph, &partition, witness.as_deref(), quotient),
        Command::Witness {
            kind,
            graph,
            partition,
            out_dir,
        } => commands::witness(kind, &graph, partition.as_deref(), out_dir.as_deref()),
        Command::Verify {
            theorem,
            max_n,
            min_n,
            instances,
            seed,
            jobs,
        } => commands::verify(&theorem, max_n, min_n, instances, seed, jobs),
        Command::Example {
            name,
            n,
            m,
            k,
            out_dir,
        } => commands::example(&name, (n, m, k), out_dir.as_deref()),
        Command::ExportDot { graph, quotient } => commands::export_dot(&graph, quotient.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            println!("error usage");
            eprint!("{e}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(report) => {
            for line in &report.lines {
                println!("{line}");
            }
            ExitCode::from(if report.success { 0 } else { 1 })
        }
        Err(e) => {
            println!("error {}", e.kind);
            eprintln!("proxigraph: {}", e.message);
            ExitCode::from(2)
        }
    }
}
