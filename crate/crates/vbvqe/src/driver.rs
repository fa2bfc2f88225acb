//! Experiment drivers and reporting: model sweeps, molecular runs,
//! depth/accuracy ledgers and CSV/JSON output.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ansatz::{build, AnsatzSpec, ClusterTemplate};
use crate::error::{Error, Result};
use crate::fermion;
use crate::models::{build_ising, IsingSpec, SweepParam, Topology};
use crate::pauli::Observable;
use crate::solver;
use crate::vqe::{Strategy, VqeProblem};

/// One row of an experiment sweep.
///
/// `model_param` is the Ising sweep parameter a or a geometry key in Å;
/// energies are total energies (a.u. for models, Hartree for molecules).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub system: String,
    pub model_param: f64,
    pub cluster: String,
    pub reps: usize,
    pub depth: usize,
    pub n_params: usize,
    #[serde(rename = "E_vqe")]
    pub e_vqe: f64,
    #[serde(rename = "E_exact")]
    pub e_exact: f64,
    #[serde(rename = "delta_Ec")]
    pub delta_ec: f64,
    pub restarts: usize,
    pub seed: u64,
    pub strategy: String,
}

/// A grid point that failed, with the error it produced.
#[derive(Debug, Clone)]
pub struct SweepFailure {
    pub model_param: f64,
    pub message: String,
}

/// Records plus failure markers; a failed point never aborts a sweep.
#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    pub records: Vec<SweepRecord>,
    pub failures: Vec<SweepFailure>,
}

impl SweepOutcome {
    pub fn all_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Common optimizer knobs for every driver.
#[derive(Debug, Clone, Copy)]
pub struct RunOptions {
    pub restarts: usize,
    pub seed: u64,
    pub max_iterations: usize,
    pub strategy: Strategy,
    /// Model-parameter value whose grid point anchors an adiabatic sweep.
    pub anchor: Option<f64>,
    /// Shot-sampled objective (demonstration only).
    pub shots: Option<u64>,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            restarts: 10,
            seed: 1,
            max_iterations: 200,
            strategy: Strategy::Default,
            anchor: None,
            shots: None,
        }
    }
}

impl RunOptions {
    fn strategy_label(&self) -> String {
        match self.strategy {
            Strategy::Default => "default".into(),
            Strategy::Adiabatic => "adiabatic".into(),
        }
    }

    fn problem(&self, hamiltonian: Observable, spec: AnsatzSpec) -> Result<VqeProblem> {
        Ok(VqeProblem::new(hamiltonian, spec)?
            .with_seed(self.seed)
            .with_restarts(self.restarts)
            .with_max_iterations(self.max_iterations)
            .with_shots(self.shots))
    }
}

fn make_record(
    system: &str,
    model_param: f64,
    template: &ClusterTemplate,
    reps: usize,
    e_vqe: f64,
    e_exact: f64,
    options: &RunOptions,
) -> Result<SweepRecord> {
    let circuit = build(&AnsatzSpec::new(template.clone(), reps))?;
    Ok(SweepRecord {
        system: system.to_string(),
        model_param,
        cluster: template.name().to_string(),
        reps,
        depth: circuit.depth(),
        n_params: circuit.n_parameters(),
        e_vqe,
        e_exact,
        delta_ec: (e_exact - e_vqe).abs(),
        restarts: options.restarts,
        seed: options.seed,
        strategy: options.strategy_label(),
    })
}

/// Solve one Hamiltonian/ansatz pair and produce a record.
fn run_point(
    system: &str,
    model_param: f64,
    hamiltonian: &Observable,
    template: &ClusterTemplate,
    reps: usize,
    options: &RunOptions,
    warm_start: Option<&[f64]>,
) -> Result<(SweepRecord, Vec<f64>)> {
    let spec = AnsatzSpec::new(template.clone(), reps);
    let problem = options.problem(hamiltonian.clone(), spec)?;
    let result = match warm_start {
        Some(start) => problem.minimize(start)?,
        None => problem.solve()?,
    };
    let e_exact = solver::ground_energy(hamiltonian)?;
    let record = make_record(
        system,
        model_param,
        template,
        reps,
        result.energy,
        e_exact,
        options,
    )?;
    Ok((record, result.parameters))
}

/// Ising model sweep over the a-grid (h = a, J = a − 1).
///
/// The default strategy treats every grid point independently (restarts in
/// parallel); the adiabatic strategy solves the anchor point first and
/// threads converged parameters outward in both directions, one
/// minimization per step.
pub fn ising_sweep(
    n_sites: usize,
    topology: Topology,
    template: &ClusterTemplate,
    reps: usize,
    a_grid: &[f64],
    options: &RunOptions,
) -> SweepOutcome {
    let system = format!("{n_sites}-site IM");
    let hamiltonian_at = |a: f64| -> Result<Observable> {
        let p = SweepParam::new(a)?;
        build_ising(&IsingSpec::new(n_sites, topology, p.coupling(), p.field())?)
    };
    sweep_grid(&system, a_grid, hamiltonian_at, template, reps, options)
}

/// Shared sweep machinery over any parameterized Hamiltonian family.
fn sweep_grid(
    system: &str,
    grid: &[f64],
    hamiltonian_at: impl Fn(f64) -> Result<Observable> + Sync,
    template: &ClusterTemplate,
    reps: usize,
    options: &RunOptions,
) -> SweepOutcome {
    let mut outcome = SweepOutcome::default();
    match options.strategy {
        Strategy::Default => {
            let runs: Vec<(f64, Result<(SweepRecord, Vec<f64>)>)> = grid
                .par_iter()
                .map(|&param| {
                    let run = hamiltonian_at(param).and_then(|h| {
                        run_point(system, param, &h, template, reps, options, None)
                    });
                    (param, run)
                })
                .collect();
            for (param, run) in runs {
                match run {
                    Ok((record, _)) => outcome.records.push(record),
                    Err(e) => outcome.failures.push(SweepFailure {
                        model_param: param,
                        message: e.to_string(),
                    }),
                }
            }
        }
        Strategy::Adiabatic => {
            if grid.is_empty() {
                return outcome;
            }
            let anchor_value = options.anchor.unwrap_or(grid[grid.len() / 2]);
            let anchor_idx = (0..grid.len())
                .min_by(|&a, &b| {
                    (grid[a] - anchor_value)
                        .abs()
                        .total_cmp(&(grid[b] - anchor_value).abs())
                })
                .expect("non-empty grid");
            // anchor point: full multi-restart solve
            let anchor_run = hamiltonian_at(grid[anchor_idx]).and_then(|h| {
                run_point(system, grid[anchor_idx], &h, template, reps, options, None)
            });
            let anchor_params = match anchor_run {
                Ok((record, params)) => {
                    outcome.records.push(record);
                    params
                }
                Err(e) => {
                    // without an anchor nothing can be threaded
                    outcome.failures.push(SweepFailure {
                        model_param: grid[anchor_idx],
                        message: e.to_string(),
                    });
                    return outcome;
                }
            };
            for direction in [1i64, -1i64] {
                let mut previous = anchor_params.clone();
                let mut idx = anchor_idx as i64 + direction;
                while idx >= 0 && (idx as usize) < grid.len() {
                    let param = grid[idx as usize];
                    let run = hamiltonian_at(param).and_then(|h| {
                        run_point(system, param, &h, template, reps, options, Some(&previous))
                    });
                    match run {
                        Ok((record, params)) => {
                            outcome.records.push(record);
                            previous = params;
                        }
                        Err(e) => outcome.failures.push(SweepFailure {
                            model_param: param,
                            message: e.to_string(),
                        }),
                    }
                    idx += direction;
                }
            }
            outcome
                .records
                .sort_by(|a, b| a.model_param.total_cmp(&b.model_param));
        }
    }
    outcome
}

/// Fermion-to-qubit mapping selector for molecule runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mapping {
    Jw,
    Parity,
    ParityReduced,
    /// The file already holds a qubit Hamiltonian in Pauli-sum text form.
    PauliFile,
}

impl std::str::FromStr for Mapping {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "jw" => Ok(Mapping::Jw),
            "parity" => Ok(Mapping::Parity),
            "parity_reduced" | "parity-reduced" => Ok(Mapping::ParityReduced),
            "pauli_file" | "pauli-file" | "pauli" => Ok(Mapping::PauliFile),
            other => Err(Error::Invalid(format!("unknown mapping '{other}'"))),
        }
    }
}

/// Parse `<system>_<param>` geometry keys from a Hamiltonian file name.
pub fn parse_geometry_key(path: &Path) -> Result<(String, f64)> {
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .ok_or_else(|| Error::Invalid(format!("no file name in {}", path.display())))?;
    let (system, param) = stem.rsplit_once('_').ok_or_else(|| {
        Error::Invalid(format!(
            "file name '{stem}' does not match '<system>_<param>'"
        ))
    })?;
    let value: f64 = param.parse().map_err(|_| {
        Error::Invalid(format!("geometry key '{param}' in '{stem}' is not a number"))
    })?;
    Ok((system.to_string(), value))
}

/// Load a molecular Hamiltonian from disk under the requested mapping.
pub fn load_molecule(path: &Path, mapping: Mapping) -> Result<Observable> {
    match mapping {
        Mapping::PauliFile => Observable::from_path(path),
        _ => {
            let data = fermion::parse_fcidump_path(path)?;
            let op = fermion::to_fermion_hamiltonian(&data);
            let n_modes = data.n_modes();
            match mapping {
                Mapping::Jw => fermion::jordan_wigner(&op, n_modes),
                Mapping::Parity => fermion::parity_map(&op, n_modes),
                Mapping::ParityReduced => {
                    fermion::parity_map_reduced(&op, n_modes, data.n_electrons, data.ms2)
                }
                Mapping::PauliFile => unreachable!(),
            }
        }
    }
}

/// Single molecular point: load, map, solve, compare against the exact
/// ground energy of the same mapped observable.
pub fn molecule_run(
    path: &Path,
    mapping: Mapping,
    template: &ClusterTemplate,
    reps: usize,
    options: &RunOptions,
) -> Result<SweepRecord> {
    let (system, param) = parse_geometry_key(path)?;
    let hamiltonian = load_molecule(path, mapping)?;
    let (record, _) = run_point(&system, param, &hamiltonian, template, reps, options, None)?;
    Ok(record)
}

/// All Hamiltonian files of one extension in a directory, sorted by their
/// geometry key.
pub fn scan_curve_dir(dir: &Path, extension: &str) -> Result<Vec<(PathBuf, String, f64)>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().map(|e| e.to_string_lossy().to_string())
            != Some(extension.to_string())
        {
            continue;
        }
        let (system, param) = parse_geometry_key(&path)?;
        files.push((path, system, param));
    }
    files.sort_by(|a, b| a.2.total_cmp(&b.2));
    Ok(files)
}

/// Energy curve over a directory of Hamiltonian files keyed by geometry.
///
/// Adiabatic sweeps start at the grid point nearest `options.anchor`
/// (typically the equilibrium geometry) and thread parameters outward in
/// both directions.
pub fn curve_run(
    dir: &Path,
    extension: &str,
    mapping: Mapping,
    template: &ClusterTemplate,
    reps: usize,
    options: &RunOptions,
) -> Result<SweepOutcome> {
    let files = scan_curve_dir(dir, extension)?;
    if files.is_empty() {
        return Err(Error::Invalid(format!(
            "no .{extension} files found in {}",
            dir.display()
        )));
    }
    let system = files[0].1.clone();
    let grid: Vec<f64> = files.iter().map(|(_, _, p)| *p).collect();
    let by_param: std::collections::HashMap<u64, PathBuf> = files
        .iter()
        .map(|(path, _, p)| (p.to_bits(), path.clone()))
        .collect();
    let hamiltonian_at = |param: f64| -> Result<Observable> {
        let path = by_param
            .get(&param.to_bits())
            .ok_or_else(|| Error::Invalid(format!("no file for geometry {param}")))?;
        load_molecule(path, mapping)
    };
    Ok(sweep_grid(
        &system,
        &grid,
        hamiltonian_at,
        template,
        reps,
        options,
    ))
}

/// Render records as CSV with the fixed column set.
pub fn to_csv(records: &[SweepRecord]) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for r in records {
        writer
            .serialize(r)
            .map_err(|e| Error::Invalid(format!("csv serialization: {e}")))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Invalid(format!("csv flush: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Parse records back from CSV text.
pub fn from_csv(text: &str) -> Result<Vec<SweepRecord>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .deserialize()
        .map(|row| row.map_err(|e| Error::Invalid(format!("csv parse: {e}"))))
        .collect()
}

/// Render records as pretty JSON.
pub fn to_json(records: &[SweepRecord]) -> Result<String> {
    serde_json::to_string_pretty(records).map_err(|e| Error::Invalid(format!("json: {e}")))
}

/// Aligned-text ledger in the style of a depth/accuracy table: one block
/// per (system, cluster), rows of (param, reps, depth, ΔE_c).
pub fn report_table(records: &[SweepRecord]) -> String {
    let mut sorted: Vec<&SweepRecord> = records.iter().collect();
    sorted.sort_by(|a, b| {
        (&a.system, &a.cluster, a.reps, a.model_param)
            .partial_cmp(&(&b.system, &b.cluster, b.reps, b.model_param))
            .expect("record ordering")
    });
    let mut out = String::new();
    let mut current_block: Option<(String, String)> = None;
    for r in sorted {
        let block = (r.system.clone(), r.cluster.clone());
        if current_block.as_ref() != Some(&block) {
            if current_block.is_some() {
                out.push('\n');
            }
            let _ = writeln!(out, "{} (cluster {})", r.system, r.cluster);
            let _ = writeln!(
                out,
                "{:>10} {:>5} {:>6} {:>14} {:>14} {:>10}",
                "param", "reps", "depth", "E_vqe", "E_exact", "delta_Ec"
            );
            current_block = Some(block);
        }
        let _ = writeln!(
            out,
            "{:>10.4} {:>5} {:>6} {:>14.8} {:>14.8} {:>10.5}",
            r.model_param, r.reps, r.depth, r.e_vqe, r.e_exact, r.delta_ec
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ansatz::builtin_template;

    fn sample_records() -> Vec<SweepRecord> {
        vec![
            SweepRecord {
                system: "6-site IM".into(),
                model_param: 0.5,
                cluster: "A".into(),
                reps: 2,
                depth: 5,
                n_params: 18,
                e_vqe: -3.4211,
                e_exact: -3.4931,
                delta_ec: 0.072,
                restarts: 10,
                seed: 1,
                strategy: "default".into(),
            },
            SweepRecord {
                system: "lih".into(),
                model_param: 1.55,
                cluster: "C".into(),
                reps: 8,
                depth: 17,
                n_params: 54,
                e_vqe: -7.8822,
                e_exact: -7.88223,
                delta_ec: 3e-5,
                restarts: 10,
                seed: 1,
                strategy: "default".into(),
            },
        ]
    }

    #[test]
    fn csv_round_trips_exactly() {
        let records = sample_records();
        let text = to_csv(&records).unwrap();
        let parsed = from_csv(&text).unwrap();
        assert_eq!(records, parsed);
        let header = text.lines().next().unwrap();
        assert_eq!(
            header,
            "system,model_param,cluster,reps,depth,n_params,E_vqe,E_exact,delta_Ec,restarts,seed,strategy"
        );
    }

    #[test]
    fn csv_round_trips_awkward_floats() {
        let mut records = sample_records();
        records[0].model_param = 0.1 + 0.2; // not exactly 0.3
        records[0].e_vqe = -1.0 / 3.0;
        records[1].e_exact = f64::MIN_POSITIVE;
        let parsed = from_csv(&to_csv(&records).unwrap()).unwrap();
        assert_eq!(records, parsed);
    }

    #[test]
    fn report_groups_by_system_and_cluster() {
        let table = report_table(&sample_records());
        assert!(table.contains("6-site IM (cluster A)"));
        assert!(table.contains("lih (cluster C)"));
        assert!(table.contains("17"));
    }

    #[test]
    fn empty_report_is_empty() {
        assert_eq!(report_table(&[]), "");
    }

    #[test]
    fn geometry_keys_parse() {
        let (system, param) = parse_geometry_key(Path::new("data/h2_0.735.fcidump")).unwrap();
        assert_eq!(system, "h2");
        assert_eq!(param, 0.735);
        assert!(parse_geometry_key(Path::new("nounderscore.fcidump")).is_err());
        assert!(parse_geometry_key(Path::new("h2_xyz.fcidump")).is_err());
    }

    #[test]
    fn two_site_sweep_hits_closed_forms() {
        let template = builtin_template("unit2", 2).unwrap();
        let grid = [0.0, 0.25, 0.5, 0.75, 1.0];
        let options = RunOptions {
            restarts: 4,
            seed: 3,
            ..Default::default()
        };
        let outcome = ising_sweep(2, Topology::Chain, &template, 1, &grid, &options);
        assert!(outcome.all_ok());
        assert_eq!(outcome.records.len(), grid.len());
        for r in &outcome.records {
            assert!(r.delta_ec <= 1e-8, "a = {}: delta {}", r.model_param, r.delta_ec);
            assert_eq!(r.depth, 3);
            assert_eq!(r.n_params, 4);
            assert_eq!(r.system, "2-site IM");
        }
    }

    #[test]
    fn adiabatic_sweep_produces_sorted_records() {
        let template = builtin_template("unit2", 2).unwrap();
        let grid = [0.2, 0.4, 0.6, 0.8];
        let options = RunOptions {
            restarts: 3,
            seed: 5,
            strategy: Strategy::Adiabatic,
            anchor: Some(0.6),
            ..Default::default()
        };
        let outcome = ising_sweep(2, Topology::Chain, &template, 1, &grid, &options);
        assert!(outcome.all_ok());
        let params: Vec<f64> = outcome.records.iter().map(|r| r.model_param).collect();
        assert_eq!(params, grid);
        for r in &outcome.records {
            assert!(r.delta_ec <= 1e-7, "a = {}", r.model_param);
            assert_eq!(r.strategy, "adiabatic");
        }
    }

    #[test]
    fn sweep_records_failures_and_continues() {
        // a = 2.0 violates the sweep-parameter domain; others succeed
        let template = builtin_template("unit2", 2).unwrap();
        let options = RunOptions {
            restarts: 2,
            ..Default::default()
        };
        let outcome = ising_sweep(2, Topology::Chain, &template, 1, &[0.5, 2.0], &options);
        assert_eq!(outcome.records.len(), 1);
        assert_eq!(outcome.failures.len(), 1);
        assert_eq!(outcome.failures[0].model_param, 2.0);
    }
}
