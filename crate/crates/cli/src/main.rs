//! `netshrink`: reduce networks by degree-ordered node removal plus edge
//! pruning, and measure how well the reduced subgraphs preserve epidemic
//! dynamics and Laplacian information flow.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use netshrink::config::ExperimentConfig;
use netshrink::experiment::run_experiment;
use netshrink::formats;
use netshrink::manifest::{dataset_manifest, manifest_to_csv};
use netshrink_core::error::{Error, Result};
use netshrink_core::generate::{generate, GeneratorSpec};
use netshrink_core::io::{read_edge_list_file, write_edge_list_file};
use netshrink_core::metrics::{f_overlap, linspace, logspace};
use netshrink_core::reduce::{nrdc, nrdc_prime, ReductionParams};
use netshrink_core::sample::{sample, SamplerMethod, SamplerSpec};
use netshrink_core::sir::{adaptive_time_grid, ensemble_curve, spreading_profile, SirParams};
use netshrink_core::spectral::{spectral_summary, stochastic_spectral_summary, StochasticTraceParams};

#[derive(Parser)]
#[command(name = "netshrink", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Er,
    Ba,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReduceMethodArg {
    Nrdc,
    NrdcPrime,
}

#[derive(Clone, Copy, ValueEnum)]
enum SampleMethodArg {
    Rdn,
    Mhrw,
    Cnarw,
}

#[derive(Clone, Copy, ValueEnum)]
enum EstimatorArg {
    Dense,
    Stochastic,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic network and write it as an edge list.
    Generate(GenerateArgs),
    /// Reduce a network by node removal (optionally plus edge pruning).
    Reduce(ReduceArgs),
    /// Extract a subgraph with a baseline sampler.
    Sample(SampleArgs),
    /// Ensemble-averaged SIR curves i(t), r(t), s(t).
    Sir(SirArgs),
    /// Saturation recovered fraction across an infection-rate grid.
    Profile(ProfileArgs),
    /// Laplacian partition function, entropy and free energy on a tau grid.
    Spectral(SpectralArgs),
    /// Overlap score between two spreading-ability profiles.
    Overlap(OverlapArgs),
    /// Run a full multi-level experiment from a JSON config.
    Experiment(ExperimentArgs),
    /// Summarize every edge-list file in a directory.
    Manifest(ManifestArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long)]
    n: usize,
    /// Target average degree (ER).
    #[arg(long)]
    avg_degree: Option<f64>,
    /// Edges attached per new node (BA).
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    method: ReduceMethodArg,
    /// Node removal ratio in [0, 1).
    #[arg(long, conflicts_with = "level")]
    q: Option<f64>,
    /// Reduction level l, meaning q = 1 - 1/2^l.
    #[arg(long)]
    level: Option<u32>,
    #[arg(long, default_value_t = 2)]
    k_min: usize,
    #[arg(long, default_value_t = 0.1)]
    degree_tolerance: f64,
    /// Replace a disconnected result by its largest connected component.
    #[arg(long)]
    lcc_fallback: bool,
    #[arg(long)]
    out: PathBuf,
    /// Optional JSON audit trace of the reduction.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct SampleArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_enum)]
    method: SampleMethodArg,
    /// Node sampling rate in (0, 1].
    #[arg(long)]
    sr: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0)]
    burn_in: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SirArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    beta: f64,
    #[arg(long, default_value_t = 1.0)]
    gamma: f64,
    #[arg(long, default_value_t = 0.1)]
    init_frac: f64,
    #[arg(long, default_value_t = 100)]
    runs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of points of the adaptive time grid.
    #[arg(long, default_value_t = 101)]
    grid: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ProfileArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 0.0)]
    beta_min: f64,
    #[arg(long, default_value_t = 2.0)]
    beta_max: f64,
    #[arg(long, default_value_t = 21)]
    beta_steps: usize,
    #[arg(long, default_value_t = 1.0)]
    gamma: f64,
    #[arg(long, default_value_t = 0.1)]
    init_frac: f64,
    #[arg(long, default_value_t = 100)]
    runs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SpectralArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 1e-2)]
    tau_min: f64,
    #[arg(long, default_value_t = 1e3)]
    tau_max: f64,
    #[arg(long, default_value_t = 60)]
    tau_steps: usize,
    #[arg(long, value_enum, default_value_t = EstimatorArg::Dense)]
    estimator: EstimatorArg,
    /// Hutchinson probes (stochastic estimator).
    #[arg(long, default_value_t = 200)]
    probes: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct OverlapArgs {
    /// Baseline profile CSV (beta,rho_r).
    #[arg(long)]
    base: PathBuf,
    /// Comparison profile CSV.
    #[arg(long)]
    other: PathBuf,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ExperimentArgs {
    #[arg(long)]
    config: PathBuf,
}

#[derive(Args)]
struct ManifestArgs {
    #[arg(long)]
    dir: PathBuf,
    /// Optional CSV output path (the table always prints to stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate(args) => {
            let spec = match args.model {
                ModelArg::Er => GeneratorSpec::erdos_renyi(
                    args.n,
                    args.avg_degree
                        .ok_or_else(|| Error::Config("--avg-degree is required for --model er".into()))?,
                    args.seed,
                ),
                ModelArg::Ba => GeneratorSpec::barabasi_albert(
                    args.n,
                    args.m
                        .ok_or_else(|| Error::Config("--m is required for --model ba".into()))?,
                    args.seed,
                ),
            };
            let g = generate(&spec)?;
            write_edge_list_file(&g, &args.out)?;
            eprintln!("wrote {} nodes, {} edges to {}", g.n(), g.m(), args.out.display());
        }
        Command::Reduce(args) => {
            let g = read_edge_list_file(&args.input)?;
            let q = match (args.q, args.level) {
                (Some(q), None) => q,
                (None, Some(l)) => 1.0 - 0.5f64.powi(l as i32),
                (None, None) => return Err(Error::Config("pass either --q or --level".into())),
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            };
            let params = ReductionParams {
                q,
                k_min: args.k_min,
                degree_tolerance: args.degree_tolerance,
                lcc_fallback: args.lcc_fallback,
            };
            let (sub, trace) = match args.method {
                ReduceMethodArg::Nrdc => nrdc(&g, &params)?,
                ReduceMethodArg::NrdcPrime => nrdc_prime(&g, &params)?,
            };
            write_edge_list_file(&sub, &args.out)?;
            if let Some(trace_path) = args.trace {
                let json = serde_json::json!({
                    "removed_nodes": trace.removed_nodes,
                    "pruned_edges": trace.pruned_edges,
                    "avg_degree_before": trace.avg_degree_before,
                    "avg_degree_after": trace.avg_degree_after,
                    "connected_after": trace.connected_after,
                    "stalled": trace.stalled,
                });
                formats::write_string(&trace_path, &format!("{:#}\n", json))?;
            }
            eprintln!(
                "reduced {} -> {} nodes (avg degree {:.4} -> {:.4})",
                g.n(),
                sub.n(),
                trace.avg_degree_before,
                trace.avg_degree_after
            );
        }
        Command::Sample(args) => {
            let g = read_edge_list_file(&args.input)?;
            let method = match args.method {
                SampleMethodArg::Rdn => SamplerMethod::Rdn,
                SampleMethodArg::Mhrw => SamplerMethod::Mhrw,
                SampleMethodArg::Cnarw => SamplerMethod::Cnarw,
            };
            let spec = SamplerSpec {
                method,
                sr: args.sr,
                seed: args.seed,
                burn_in: args.burn_in,
            };
            let sub = sample(&g, &spec)?;
            write_edge_list_file(&sub, &args.out)?;
            eprintln!("sampled {} of {} nodes", sub.n(), g.n());
        }
        Command::Sir(args) => {
            let g = read_edge_list_file(&args.input)?;
            let params = SirParams {
                beta: args.beta,
                gamma: args.gamma,
                init_top_degree_frac: args.init_frac,
                runs: args.runs,
                seed: args.seed,
                time_grid: Vec::new(),
            };
            let grid = adaptive_time_grid(&g, &params, args.grid)?;
            let params = SirParams { time_grid: grid, ..params };
            let curve = ensemble_curve(&g, &params)?;
            formats::write_string(&args.out, &formats::curve_to_csv(&curve))?;
        }
        Command::Profile(args) => {
            let g = read_edge_list_file(&args.input)?;
            if args.beta_steps < 2 || args.beta_max <= args.beta_min {
                return Err(Error::Config("profile needs an increasing beta grid with >= 2 steps".into()));
            }
            let params = SirParams {
                beta: 0.0,
                gamma: args.gamma,
                init_top_degree_frac: args.init_frac,
                runs: args.runs,
                seed: args.seed,
                time_grid: Vec::new(),
            };
            let grid = linspace(args.beta_min, args.beta_max, args.beta_steps);
            let profile = spreading_profile(&g, &grid, &params)?;
            formats::write_string(&args.out, &formats::profile_to_csv(&profile))?;
        }
        Command::Spectral(args) => {
            let g = read_edge_list_file(&args.input)?;
            if args.tau_steps < 2 || args.tau_min <= 0.0 || args.tau_max <= args.tau_min {
                return Err(Error::Config("spectral needs a positive increasing tau grid".into()));
            }
            let grid = logspace(args.tau_min, args.tau_max, args.tau_steps);
            let summary = match args.estimator {
                EstimatorArg::Dense => spectral_summary(&g, &grid)?,
                EstimatorArg::Stochastic => stochastic_spectral_summary(
                    &g,
                    &grid,
                    &StochasticTraceParams {
                        probes: args.probes,
                        seed: args.seed,
                        ..StochasticTraceParams::default()
                    },
                )?,
            };
            formats::write_string(&args.out, &formats::spectral_to_csv(&summary))?;
        }
        Command::Overlap(args) => {
            let base = formats::profile_from_csv(&std::fs::read_to_string(&args.base)?)?;
            let other = formats::profile_from_csv(&std::fs::read_to_string(&args.other)?)?;
            if base.beta_grid != other.beta_grid {
                return Err(Error::Usage("profiles must share the same beta grid".into()));
            }
            let report = f_overlap(&base.beta_grid, &base.rho_r, &other.rho_r)?;
            let json = serde_json::json!({
                "f_overlap": report.f_overlap,
                "s_delta": report.s_delta,
                "fine_grid_points": report.fine_grid_points,
            });
            formats::write_string(&args.out, &format!("{:#}\n", json))?;
            println!("f_overlap = {}", report.f_overlap);
        }
        Command::Experiment(args) => {
            let config = ExperimentConfig::load(&args.config)?;
            let result = run_experiment(&config)?;
            println!(
                "experiment `{}` ({}) finished: {} levels, {} stage errors",
                result.network,
                result.method,
                result.levels.len(),
                result.stage_errors.len()
            );
            for level in &result.levels {
                if let Some(f) = level.f_overlap {
                    println!("  level {}: f_overlap = {f}", level.level);
                }
            }
        }
        Command::Manifest(args) => {
            let rows = dataset_manifest(&args.dir)?;
            let csv = manifest_to_csv(&rows);
            print!("{csv}");
            if let Some(out) = args.out {
                formats::write_string(&out, &csv)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // NETSHRINK_THREADS caps the rayon pool used for ensembles/probes.
    if let Ok(threads) = std::env::var("NETSHRINK_THREADS") {
        match threads.parse::<usize>() {
            Ok(t) if t >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
            }
            _ => {
                eprintln!("error: NETSHRINK_THREADS must be a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(netshrink::exit_code(&err) as u8)
        }
    }
}
