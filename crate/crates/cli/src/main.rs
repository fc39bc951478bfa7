use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use burnlab_core::bench::{run_bench, to_csv, to_json, Algorithm, BenchConfig};
use burnlab_core::gen::{fixture_path, generate, GenSpec, GraphClass};
use burnlab_core::graph::{read_graph, write_graph, AnyGraph};
use burnlab_core::oracle::{exact_burning_number_with, oracle_cap, DEFAULT_BUDGET, ORACLE_CAP_ENV};
use burnlab_core::{validate, BurnError, BurningSchedule, Verdict};
use clap::{Parser, Subcommand, ValueEnum};

const EXIT_REJECT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "burnlab", version, about = "Graph burning: approximations, exact search, verification and benchmarks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write seeded random instances as `<out>/<class>/n<n>_s<seed>.graph`.
    Generate {
        #[arg(long, value_parser = parse_class)]
        class: GraphClass,
        /// Vertex count.
        #[arg(long, required_unless_present = "n_list", conflicts_with = "n_list")]
        n: Option<usize>,
        /// Comma-separated vertex counts.
        #[arg(long, value_delimiter = ',')]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
        #[arg(long, default_value_t = GenSpec::DEFAULT_CYCLE_FRACTION)]
        cycle_fraction: f64,
        #[arg(long, default_value_t = GenSpec::DEFAULT_MAX_OUT_DEGREE)]
        max_out_degree: usize,
    },
    /// Run an approximation algorithm and print the validated schedule.
    Burn {
        graph: PathBuf,
        #[arg(long, value_parser = parse_alg)]
        alg: Algorithm,
    },
    /// Exact burning number by exhaustive search (small graphs only).
    Exact { graph: PathBuf },
    /// Check a schedule file (whitespace-separated vertex ids) against a graph.
    Verify { graph: PathBuf, schedule: PathBuf },
    /// Benchmark algorithms on generated instances.
    Bench {
        #[arg(long, value_delimiter = ',', value_parser = parse_class, default_value = "cactus,polytree,arborescence")]
        classes: Vec<GraphClass>,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1")]
        seeds: Vec<u64>,
        #[arg(long, value_delimiter = ',', value_parser = parse_alg, default_value = "cactus275,baseline3,poly3,arb2,arb1905")]
        algs: Vec<Algorithm>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        workers: usize,
        /// Fill the `ms` column with wall time.
        #[arg(long)]
        timing: bool,
        /// Write the table here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn parse_class(s: &str) -> Result<GraphClass, String> {
    s.parse().map_err(|e: BurnError| e.to_string())
}

fn parse_alg(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: BurnError| e.to_string())
}

/// A failure with its exit code.
struct Failure(u8, String);

impl From<BurnError> for Failure {
    fn from(e: BurnError) -> Self {
        let code = match e {
            BurnError::Io(_) | BurnError::Parse { .. } => EXIT_IO,
            BurnError::InvalidSchedule(_) => EXIT_REJECT,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(EXIT_IO, format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<AnyGraph, Failure> {
    read_graph(&read_file(path)?).map_err(|e| Failure(EXIT_IO, format!("{}: {e}", path.display())))
}

fn check(g: &AnyGraph, s: &BurningSchedule) -> Verdict {
    match g {
        AnyGraph::Undirected(u) => validate(u, s),
        AnyGraph::Directed(t) => validate(t, s),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate {
            class,
            n,
            n_list,
            seed,
            out,
            cycle_fraction,
            max_out_degree,
        } => {
            let sizes = n.map_or(n_list, |n| vec![n]);
            for n in sizes {
                let spec = GenSpec {
                    class,
                    n,
                    seed,
                    cycle_fraction,
                    max_out_degree,
                };
                let g = generate(&spec)?;
                let path = fixture_path(&out, class, n, seed);
                if let Some(dir) = path.parent() {
                    fs::create_dir_all(dir).map_err(|e| Failure(EXIT_IO, format!("{}: {e}", dir.display())))?;
                }
                fs::write(&path, write_graph(&g)).map_err(|e| Failure(EXIT_IO, format!("{}: {e}", path.display())))?;
                println!("{}\t{class}\tV={}\tE={}", path.display(), g.n(), g.edge_count());
            }
        }
        Command::Burn { graph, alg } => {
            let g = load_graph(&graph)?;
            let a = alg.run(&g)?;
            if let Verdict::Reject(v) = check(&g, &a.schedule) {
                return Err(Failure(EXIT_REJECT, format!("{alg} produced an invalid schedule: {v}")));
            }
            println!("alg: {alg}");
            println!("b_star: {}", a.b_star);
            println!("length: {}", a.schedule.len());
            println!("schedule: {}", a.schedule);
        }
        Command::Exact { graph } => {
            let g = load_graph(&graph)?;
            let cap = oracle_cap();
            let r = match &g {
                AnyGraph::Undirected(u) => exact_burning_number_with(u, cap, DEFAULT_BUDGET),
                AnyGraph::Directed(t) => exact_burning_number_with(t, cap, DEFAULT_BUDGET),
            };
            let r = r.map_err(|e| match e {
                BurnError::TooLarge { .. } => Failure(EXIT_USAGE, format!("{e} (raise it with {ORACLE_CAP_ENV})")),
                e => e.into(),
            })?;
            println!("b: {}", r.b);
            println!("witness: {}", r.witness);
        }
        Command::Verify { graph, schedule } => {
            let g = load_graph(&graph)?;
            let s: BurningSchedule = read_file(&schedule)?
                .parse()
                .map_err(|e: BurnError| Failure(EXIT_IO, format!("{}: {e}", schedule.display())))?;
            match check(&g, &s) {
                Verdict::Accept => println!("accept"),
                Verdict::Reject(v) => {
                    println!("reject: {v}");
                    return Err(Failure(EXIT_REJECT, String::new()));
                }
            }
        }
        Command::Bench {
            classes,
            sizes,
            seeds,
            algs,
            format,
            workers,
            timing,
            out,
        } => {
            let cfg = BenchConfig {
                classes,
                sizes,
                seeds,
                algs,
                workers,
                timing,
                oracle_cap: oracle_cap(),
            };
            let rows = run_bench(&cfg)?;
            let text = match format {
                Format::Csv => to_csv(&rows)?,
                Format::Json => to_json(&rows)? + "\n",
            };
            match out {
                Some(path) => fs::write(&path, text).map_err(|e| Failure(EXIT_IO, format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            let bad: Vec<_> = rows.iter().filter(|r| !r.is_ok()).collect();
            if !bad.is_empty() {
                for r in &bad {
                    eprintln!("{} {}: {}", r.name, r.alg, r.status);
                }
                return Err(Failure(EXIT_REJECT, format!("{} rows failed", bad.len())));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
