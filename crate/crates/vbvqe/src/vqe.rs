//! The variational loop: energy objective, parameter-shift gradients,
//! quasi-Newton local minimization and multi-restart global search.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::ansatz::{self, AnsatzSpec};
use crate::error::{Error, Result};
use crate::optimize::{bfgs, MinimizeOptions, MinimizeOutcome};
use crate::pauli::Observable;
use crate::simulator::{sampled_expectation, Circuit};

/// How gradients are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradientMode {
    /// Exact for R_Y generators: ∂E/∂θ = (E(θ+π/2) − E(θ−π/2)) / 2.
    ParameterShift,
    /// Central differences with step 1e-5.
    FiniteDifference,
}

/// Start-selection strategy.  `Default` draws every start uniformly from
/// [0, 2π]; `Adiabatic` warm-starts each sweep point from its neighbor,
/// which the sweep drivers orchestrate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Default,
    Adiabatic,
}

impl std::str::FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "default" => Ok(Strategy::Default),
            "adiabatic" => Ok(Strategy::Adiabatic),
            other => Err(Error::Invalid(format!("unknown strategy '{other}'"))),
        }
    }
}

/// A ready-to-run variational problem: Hamiltonian, ansatz and budget.
#[derive(Debug, Clone)]
pub struct VqeProblem {
    pub hamiltonian: Observable,
    pub spec: AnsatzSpec,
    pub max_iterations: usize,
    pub restarts: usize,
    pub seed: u64,
    pub gradient_mode: GradientMode,
    /// Shot-based objective for demonstration; `None` (exact expectation)
    /// everywhere accuracy matters.
    pub shots: Option<u64>,
    circuit: Circuit,
}

/// Optimization outcome.
#[derive(Debug, Clone)]
pub struct VqeResult {
    pub energy: f64,
    pub parameters: Vec<f64>,
    pub iterations_used: usize,
    pub restart_index: usize,
    pub converged: bool,
    /// |E_exact − E_vqe| when the caller supplied the exact energy.
    pub delta_ec: Option<f64>,
}

impl VqeProblem {
    /// Build a problem with the crate defaults: 200 iterations, 10 restarts,
    /// exact expectation, parameter-shift gradients.
    pub fn new(hamiltonian: Observable, spec: AnsatzSpec) -> Result<Self> {
        if hamiltonian.n_qubits() != spec.n_qubits() {
            return Err(Error::QubitMismatch {
                left: hamiltonian.n_qubits(),
                right: spec.n_qubits(),
            });
        }
        let circuit = ansatz::build(&spec)?;
        Ok(Self {
            hamiltonian,
            spec,
            max_iterations: 200,
            restarts: 10,
            seed: 1,
            gradient_mode: GradientMode::ParameterShift,
            shots: None,
            circuit,
        })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn with_max_iterations(mut self, max_iterations: usize) -> Self {
        self.max_iterations = max_iterations;
        self
    }

    pub fn with_gradient_mode(mut self, mode: GradientMode) -> Self {
        self.gradient_mode = mode;
        self
    }

    pub fn with_shots(mut self, shots: Option<u64>) -> Self {
        self.shots = shots;
        self
    }

    pub fn n_parameters(&self) -> usize {
        self.circuit.n_parameters()
    }

    pub fn circuit(&self) -> &Circuit {
        &self.circuit
    }

    /// Energy of the trial state at the given angles.
    pub fn objective(&self, parameters: &[f64]) -> Result<f64> {
        let state = self.circuit.run(parameters)?;
        match self.shots {
            None => self.hamiltonian.expectation(&state),
            Some(n_shots) => sampled_expectation(&state, &self.hamiltonian, n_shots, self.seed),
        }
    }

    /// Gradient of the objective in the configured mode.
    pub fn gradient(&self, parameters: &[f64]) -> Result<Vec<f64>> {
        if parameters.len() != self.n_parameters() {
            return Err(Error::ParameterCount {
                expected: self.n_parameters(),
                got: parameters.len(),
            });
        }
        let mut shifted = parameters.to_vec();
        let mut grad = Vec::with_capacity(parameters.len());
        let (step, scale) = match self.gradient_mode {
            GradientMode::ParameterShift => (std::f64::consts::FRAC_PI_2, 0.5),
            GradientMode::FiniteDifference => (1e-5, 0.5 / 1e-5),
        };
        for k in 0..parameters.len() {
            shifted[k] = parameters[k] + step;
            let plus = self.objective(&shifted)?;
            shifted[k] = parameters[k] - step;
            let minus = self.objective(&shifted)?;
            shifted[k] = parameters[k];
            grad.push((plus - minus) * scale);
        }
        Ok(grad)
    }

    /// Local quasi-Newton minimization from an explicit start.
    ///
    /// Stops on gradient norm ≤ 1e-8, step ≤ 1e-10 or the iteration budget;
    /// the returned energy never exceeds the start's energy.
    pub fn minimize(&self, initial: &[f64]) -> Result<VqeResult> {
        if initial.len() != self.n_parameters() {
            return Err(Error::ParameterCount {
                expected: self.n_parameters(),
                got: initial.len(),
            });
        }
        let options = MinimizeOptions {
            max_iterations: self.max_iterations,
            ..Default::default()
        };
        let f = |x: &[f64]| self.objective(x).expect("objective evaluation");
        let g = |x: &[f64]| self.gradient(x).expect("gradient evaluation");
        let MinimizeOutcome {
            x,
            value,
            iterations,
            converged,
        } = bfgs(f, g, initial, &options);
        Ok(VqeResult {
            energy: value,
            parameters: x,
            iterations_used: iterations,
            restart_index: 0,
            converged,
            delta_ec: None,
        })
    }

    /// Random start for one restart, uniform in [0, 2π] per angle.
    ///
    /// Streams are derived from (seed, restart index), so parallel and
    /// serial execution draw identical numbers.
    pub fn random_start(&self, restart_index: usize) -> Vec<f64> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(restart_index as u64);
        (0..self.n_parameters())
            .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
            .collect()
    }

    /// Best of `restarts` independent minimizations from random starts.
    pub fn solve(&self) -> Result<VqeResult> {
        let indices: Vec<usize> = (0..self.restarts.max(1)).collect();
        let runs: Vec<Result<VqeResult>> = indices
            .par_iter()
            .map(|&r| {
                let start = self.random_start(r);
                let mut result = self.minimize(&start)?;
                result.restart_index = r;
                Ok(result)
            })
            .collect();
        let mut best: Option<VqeResult> = None;
        for run in runs {
            let run = run?;
            let better = match &best {
                None => true,
                Some(b) => run
                    .energy
                    .total_cmp(&b.energy)
                    .then(run.restart_index.cmp(&b.restart_index))
                    .is_lt(),
            };
            if better {
                best = Some(run);
            }
        }
        Ok(best.expect("at least one restart"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ansatz::{builtin_template, AnsatzSpec};
    use crate::models::{self, IsingSpec, Topology};
    use crate::pauli::PauliString;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn objective_on_cluster_unit_matches_closed_form_angle() {
        // params (π/2, 2θ, 0, 0) with θ from the closed form reproduce the
        // exact 2-site energy through the circuit path.
        let (j, h) = (-0.5, 0.5);
        let obs = models::build_ising(&IsingSpec::new(2, Topology::Chain, j, h).unwrap()).unwrap();
        let spec = AnsatzSpec::new(builtin_template("unit2", 2).unwrap(), 1);
        let problem = VqeProblem::new(obs, spec).unwrap();
        let theta = models::exact_2site_angle(j, h);
        let e = problem
            .objective(&[FRAC_PI_2, 2.0 * theta, 0.0, 0.0])
            .unwrap();
        assert!((e - models::exact_2site_energy(j, h)).abs() < 1e-12);
    }

    #[test]
    fn all_zero_parameters_give_the_vacuum_energy() {
        let obs = models::build_ising(&IsingSpec::new(4, Topology::Ring, -0.5, 0.5).unwrap())
            .unwrap();
        let spec = AnsatzSpec::new(builtin_template("4q", 4).unwrap(), 2);
        let problem = VqeProblem::new(obs.clone(), spec).unwrap();
        let zeros = vec![0.0; problem.n_parameters()];
        let e = problem.objective(&zeros).unwrap();
        let vacuum = crate::simulator::StateVector::zero(4);
        assert!((e - obs.expectation(&vacuum).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn gradient_of_single_ry_on_z_is_minus_sine() {
        // E(θ) = cos θ for RY(θ) on |0⟩ measured in Z
        let h = Observable::from_terms(1, vec![(1.0, PauliString::parse("Z").unwrap())]).unwrap();
        let circuit = crate::simulator::Circuit::new(
            1,
            vec![crate::simulator::Gate::RyParam {
                qubit: 0,
                parameter_index: 0,
            }],
            1,
        )
        .unwrap();
        for theta in [0.0, 0.4, FRAC_PI_2, 2.2] {
            let state = circuit.run(&[theta]).unwrap();
            let e = h.expectation(&state).unwrap();
            assert!((e - theta.cos()).abs() < 1e-14);
            // parameter-shift by hand
            let plus = h
                .expectation(&circuit.run(&[theta + FRAC_PI_2]).unwrap())
                .unwrap();
            let minus = h
                .expectation(&circuit.run(&[theta - FRAC_PI_2]).unwrap())
                .unwrap();
            let shift = (plus - minus) / 2.0;
            assert!((shift + theta.sin()).abs() < 1e-13);
        }
    }

    #[test]
    fn parameter_shift_agrees_with_finite_differences() {
        let obs = models::build_ising(&IsingSpec::new(4, Topology::Ring, -0.6, 0.4).unwrap())
            .unwrap();
        let spec = AnsatzSpec::new(builtin_template("4q", 4).unwrap(), 2);
        let problem = VqeProblem::new(obs, spec).unwrap();
        let fd = problem
            .clone()
            .with_gradient_mode(GradientMode::FiniteDifference);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let point: Vec<f64> = (0..problem.n_parameters())
                .map(|_| rng.gen_range(0.0..std::f64::consts::TAU))
                .collect();
            let a = problem.gradient(&point).unwrap();
            let b = fd.gradient(&point).unwrap();
            for (x, y) in a.iter().zip(&b) {
                assert!((x - y).abs() < 1e-6, "{x} vs {y}");
            }
        }
    }

    #[test]
    fn two_site_vqe_reaches_the_closed_form() {
        for a in [0.1, 0.35, 0.5, 0.8] {
            let (j, h) = (a - 1.0, a);
            let obs =
                models::build_ising(&IsingSpec::new(2, Topology::Chain, j, h).unwrap()).unwrap();
            let spec = AnsatzSpec::new(builtin_template("unit2", 2).unwrap(), 1);
            let problem = VqeProblem::new(obs, spec).unwrap().with_seed(11);
            let result = problem.solve().unwrap();
            let exact = models::exact_2site_energy(j, h);
            assert!(
                (result.energy - exact).abs() < 1e-8,
                "a = {a}: {} vs {exact}",
                result.energy
            );
        }
    }

    #[test]
    fn reps_zero_vqe_reaches_the_meanfield_branch() {
        for a in [0.2, 0.5, 0.85] {
            let (j, h) = (a - 1.0, a);
            let obs =
                models::build_ising(&IsingSpec::new(2, Topology::Chain, j, h).unwrap()).unwrap();
            let spec = AnsatzSpec::new(builtin_template("unit2", 2).unwrap(), 0);
            let problem = VqeProblem::new(obs, spec).unwrap().with_seed(7);
            let result = problem.solve().unwrap();
            let expect = models::meanfield_2site_energy(j, h);
            assert!(
                (result.energy - expect).abs() < 1e-8,
                "a = {a}: {} vs {expect}",
                result.energy
            );
        }
    }

    #[test]
    fn gradient_norm_is_small_at_a_converged_optimum() {
        let obs = models::build_ising(&IsingSpec::new(2, Topology::Chain, -0.5, 0.5).unwrap())
            .unwrap();
        let spec = AnsatzSpec::new(builtin_template("unit2", 2).unwrap(), 1);
        let problem = VqeProblem::new(obs, spec).unwrap().with_seed(3);
        let result = problem.solve().unwrap();
        assert!(result.converged);
        let g = problem.gradient(&result.parameters).unwrap();
        let norm: f64 = g.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!(norm <= 1e-5, "gradient norm {norm}");
    }

    #[test]
    fn solve_is_deterministic_and_monotone_in_restarts() {
        let obs = models::build_ising(&IsingSpec::new(4, Topology::Ring, -0.5, 0.5).unwrap())
            .unwrap();
        let spec = AnsatzSpec::new(builtin_template("4q", 4).unwrap(), 1);
        let base = VqeProblem::new(obs, spec).unwrap().with_seed(21);
        let once = base.clone().with_restarts(4).solve().unwrap();
        let again = base.clone().with_restarts(4).solve().unwrap();
        assert_eq!(once.energy.to_bits(), again.energy.to_bits());
        assert_eq!(once.parameters, again.parameters);
        let mut previous = f64::INFINITY;
        for k in [1usize, 2, 4, 8] {
            let best = base.clone().with_restarts(k).solve().unwrap();
            assert!(best.energy <= previous + 1e-15, "k = {k}");
            previous = best.energy;
        }
    }

    #[test]
    fn minimize_never_worsens_the_start() {
        let obs = models::build_ising(&IsingSpec::new(2, Topology::Chain, -0.3, 0.7).unwrap())
            .unwrap();
        let spec = AnsatzSpec::new(builtin_template("unit2", 2).unwrap(), 1);
        let problem = VqeProblem::new(obs, spec).unwrap();
        for r in 0..5 {
            let start = problem.random_start(r);
            let initial = problem.objective(&start).unwrap();
            let result = problem.minimize(&start).unwrap();
            assert!(result.energy <= initial + 1e-15);
        }
    }

    #[test]
    fn mismatched_register_is_rejected() {
        let obs = models::build_ising(&IsingSpec::new(4, Topology::Ring, -0.5, 0.5).unwrap())
            .unwrap();
        let spec = AnsatzSpec::new(builtin_template("unit2", 2).unwrap(), 1);
        assert!(VqeProblem::new(obs, spec).is_err());
    }
}
