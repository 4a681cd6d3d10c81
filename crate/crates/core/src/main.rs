use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fivevalued::cli::{
    analyze, export_plot_data, parse_list, parse_n_range, run_experiment, ExperimentSpec,
};
use fivevalued::engine::EaConfig;
use fivevalued::{Error, Result};

/// Evolutionary search for balanced Boolean functions with five-valued
/// Walsh spectra.
#[derive(Parser)]
#[command(name = "fivevalued", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every (n, encoding, fitness) cell of a grid and write results.
    Search(Box<SearchArgs>),
    /// Report the cryptographic properties of a hex truth table.
    Analyze {
        /// Truth table, f(0) first, four values per hex digit.
        hex: String,
        /// Number of variables; derived from the hex length when omitted.
        #[arg(long)]
        n: Option<u32>,
        /// Print JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Turn a results directory into violin and convergence plot inputs.
    Export {
        /// Directory written by `search`.
        results: PathBuf,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Variable counts, e.g. `7`, `5,6,8` or `5-8`.
    #[arg(long, default_value = "5")]
    n: String,
    /// Encodings: tt, anf, gp (comma separated).
    #[arg(long, default_value = "gp")]
    encoding: String,
    /// Fitness functions: f1, f2 (comma separated).
    #[arg(long, default_value = "f1")]
    fitness: String,
    /// Base configuration as JSON; flags given explicitly override it.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    pop: Option<usize>,
    /// Fitness evaluations per run.
    #[arg(long)]
    evals: Option<u64>,
    /// Independent runs per cell.
    #[arg(long)]
    reps: Option<usize>,
    /// Master seed; run seeds are derived from it.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value = "results")]
    out: PathBuf,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Depth limit for GP offspring.
    #[arg(long)]
    max_depth: Option<u32>,
    /// Crossover operators to draw from (comma separated).
    #[arg(long)]
    crossovers: Option<String>,
    /// Mutation operators to draw from (comma separated).
    #[arg(long)]
    mutations: Option<String>,
    #[arg(long)]
    checkpoint_interval: Option<u64>,
}

fn names(s: &str) -> Vec<String> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(String::from)
        .collect()
}

fn search_spec(args: SearchArgs) -> Result<ExperimentSpec> {
    let mut base = match &args.config {
        Some(path) => {
            let bytes = std::fs::read(path)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            serde_json::from_slice::<EaConfig>(&bytes)?
        }
        None => EaConfig::default(),
    };
    if let Some(v) = args.pop {
        base.population_size = v;
    }
    if let Some(v) = args.evals {
        base.evaluation_budget = v;
    }
    if let Some(v) = args.reps {
        base.repetitions = v;
    }
    if let Some(v) = args.seed {
        base.master_seed = v;
    }
    if let Some(v) = args.max_depth {
        base.max_depth = v;
    }
    if let Some(v) = &args.crossovers {
        base.crossovers = names(v);
    }
    if let Some(v) = &args.mutations {
        base.mutations = names(v);
    }
    if let Some(v) = args.checkpoint_interval {
        base.checkpoint_interval = v;
    }
    Ok(ExperimentSpec {
        ns: parse_n_range(&args.n)?,
        encodings: parse_list(&args.encoding)?,
        fitnesses: parse_list(&args.fitness)?,
        base,
        out: args.out,
        jobs: args.jobs,
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Search(args) => {
            let spec = search_spec(*args)?;
            let report = run_experiment(&spec)?;
            println!("size encoding fitness       avg     stdev       max best_nl five_valued");
            for c in &report.cells {
                println!(
                    "{:>4} {:>8} {:>7} {:>9.4} {:>9.4} {:>9.4} {:>7} {:>11.2}",
                    c.size,
                    c.encoding,
                    c.fitness,
                    c.avg,
                    c.stdev,
                    c.max,
                    c.best_nl,
                    c.five_valued_rate
                );
            }
            println!(
                "wrote {} files under {}",
                report.files.len(),
                spec.out.display()
            );
        }
        Command::Analyze { hex, n, json } => {
            let a = analyze(&hex, n)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&a)?);
            } else {
                print!("{a}");
            }
        }
        Command::Export { results } => {
            let report = export_plot_data(&results)?;
            for f in &report.files {
                println!("{}", f.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
