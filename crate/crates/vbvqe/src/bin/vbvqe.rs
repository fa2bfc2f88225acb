//! Command-line driver: Ising sweeps, molecular runs, energy curves and
//! ledger reports.  Thin wrapper over [`vbvqe::driver`].

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use vbvqe::driver::{self, Mapping, RunOptions, SweepOutcome, SweepRecord};
use vbvqe::models::Topology;
use vbvqe::vqe::Strategy;
use vbvqe::{builtin_template, ClusterTemplate};

#[derive(Parser)]
#[command(name = "vbvqe", version, about = "Valence-bond cluster-circuit VQE driver")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the transverse-field Ising model over the a-grid (h=a, J=a-1).
    Ising(IsingArgs),
    /// Run one molecular Hamiltonian file.
    Molecule(MoleculeArgs),
    /// Run an energy curve over a directory of Hamiltonian files.
    Curve(CurveArgs),
    /// Render a CSV of sweep records as an aligned ledger.
    Report(ReportArgs),
}

#[derive(Args)]
struct VqeFlags {
    /// Cluster template: unit2, 4q, A, B, C, or a template file path.
    #[arg(long, default_value = "C")]
    cluster: String,
    /// Rotation+entangler blocks.
    #[arg(long, default_value_t = 2)]
    reps: usize,
    /// Independent random restarts per point.
    #[arg(long, default_value_t = 10)]
    restarts: usize,
    /// RNG seed; identical seeds reproduce runs bit for bit.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Optimizer iteration budget.
    #[arg(long = "max-iter", default_value_t = 200)]
    max_iter: usize,
    /// Start strategy: default (random restarts) or adiabatic (threaded).
    #[arg(long, default_value = "default")]
    strategy: String,
    /// Anchor model parameter for the adiabatic strategy.
    #[arg(long)]
    anchor: Option<f64>,
    /// Estimate energies from this many shots instead of exactly.
    #[arg(long)]
    shots: Option<u64>,
    /// Write records to this path instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format: csv or json.
    #[arg(long, default_value = "csv")]
    format: String,
}

impl VqeFlags {
    fn options(&self) -> Result<RunOptions, vbvqe::Error> {
        Ok(RunOptions {
            restarts: self.restarts,
            seed: self.seed,
            max_iterations: self.max_iter,
            strategy: self.strategy.parse::<Strategy>()?,
            anchor: self.anchor,
            shots: self.shots,
        })
    }

    fn template(&self, n_qubits: usize) -> Result<ClusterTemplate, vbvqe::Error> {
        match self.cluster.as_str() {
            "unit2" | "4q" | "A" | "B" | "C" => builtin_template(&self.cluster, n_qubits),
            path => ClusterTemplate::from_path(n_qubits, path),
        }
    }
}

#[derive(Args)]
struct IsingArgs {
    /// Number of lattice sites (= qubits).
    #[arg(long, default_value_t = 6)]
    sites: usize,
    /// Lattice topology: ring or chain.
    #[arg(long, default_value = "ring")]
    topology: String,
    /// Sweep grid as start:stop:step over the parameter a.
    #[arg(long, default_value = "0.0:1.0:0.1")]
    grid: String,
    #[command(flatten)]
    vqe: VqeFlags,
}

#[derive(Args)]
struct MoleculeArgs {
    /// FCIDUMP or Pauli-sum file, named `<system>_<param>.<ext>`.
    path: PathBuf,
    /// Mapping: jw, parity, parity_reduced or pauli_file.
    #[arg(long, default_value = "jw")]
    mapping: String,
    #[command(flatten)]
    vqe: VqeFlags,
}

#[derive(Args)]
struct CurveArgs {
    /// Directory of Hamiltonian files sharing one extension.
    dir: PathBuf,
    /// File extension to scan for (fcidump or pauli).
    #[arg(long, default_value = "fcidump")]
    extension: String,
    /// Mapping: jw, parity, parity_reduced or pauli_file.
    #[arg(long, default_value = "jw")]
    mapping: String,
    #[command(flatten)]
    vqe: VqeFlags,
}

#[derive(Args)]
struct ReportArgs {
    /// CSV file of sweep records (as written by the other subcommands).
    path: PathBuf,
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, vbvqe::Error> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [start, stop, step] = parts[..] else {
        return Err(vbvqe::Error::Invalid(format!(
            "grid '{spec}' is not start:stop:step"
        )));
    };
    let parse = |s: &str| {
        s.parse::<f64>()
            .map_err(|_| vbvqe::Error::Invalid(format!("bad grid number '{s}'")))
    };
    let (start, stop, step) = (parse(start)?, parse(stop)?, parse(step)?);
    if step <= 0.0 || stop < start {
        return Err(vbvqe::Error::Invalid(format!(
            "grid '{spec}' must ascend with positive step"
        )));
    }
    let count = ((stop - start) / step).round() as usize + 1;
    Ok((0..count)
        .map(|k| (start + k as f64 * step).min(stop))
        .collect())
}

fn emit(records: &[SweepRecord], flags: &VqeFlags) -> Result<(), vbvqe::Error> {
    let text = match flags.format.as_str() {
        "csv" => driver::to_csv(records)?,
        "json" => driver::to_json(records)?,
        other => {
            return Err(vbvqe::Error::Invalid(format!(
                "unknown format '{other}' (expected csv or json)"
            )))
        }
    };
    match &flags.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn finish(outcome: SweepOutcome, flags: &VqeFlags) -> Result<bool, vbvqe::Error> {
    for failure in &outcome.failures {
        eprintln!(
            "point {} failed: {}",
            failure.model_param, failure.message
        );
    }
    emit(&outcome.records, flags)?;
    Ok(outcome.all_ok())
}

fn run() -> Result<bool, vbvqe::Error> {
    match Cli::parse().command {
        Command::Ising(args) => {
            let topology = args.topology.parse::<Topology>()?;
            let grid = parse_grid(&args.grid)?;
            let template = args.vqe.template(args.sites)?;
            let options = args.vqe.options()?;
            let outcome = driver::ising_sweep(
                args.sites,
                topology,
                &template,
                args.vqe.reps,
                &grid,
                &options,
            );
            finish(outcome, &args.vqe)
        }
        Command::Molecule(args) => {
            let mapping = args.mapping.parse::<Mapping>()?;
            let options = args.vqe.options()?;
            let hamiltonian = driver::load_molecule(&args.path, mapping)?;
            let template = args.vqe.template(hamiltonian.n_qubits())?;
            let record =
                driver::molecule_run(&args.path, mapping, &template, args.vqe.reps, &options)?;
            emit(&[record], &args.vqe)?;
            Ok(true)
        }
        Command::Curve(args) => {
            let mapping = args.mapping.parse::<Mapping>()?;
            let options = args.vqe.options()?;
            let files = driver::scan_curve_dir(&args.dir, &args.extension)?;
            let first = files.first().ok_or_else(|| {
                vbvqe::Error::Invalid(format!(
                    "no .{} files in {}",
                    args.extension,
                    args.dir.display()
                ))
            })?;
            let hamiltonian = driver::load_molecule(&first.0, mapping)?;
            let template = args.vqe.template(hamiltonian.n_qubits())?;
            let outcome = driver::curve_run(
                &args.dir,
                &args.extension,
                mapping,
                &template,
                args.vqe.reps,
                &options,
            )?;
            finish(outcome, &args.vqe)
        }
        Command::Report(args) => {
            let text = std::fs::read_to_string(&args.path)?;
            let records = driver::from_csv(&text)?;
            print!("{}", driver::report_table(&records));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
