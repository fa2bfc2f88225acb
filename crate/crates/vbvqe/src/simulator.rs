//! Dense statevector simulation over the gate set {R_Y, X, CNOT, CZ}.
//!
//! Gates are applied in place with stride arithmetic over the amplitude
//! array, so a gate costs O(2^n) and no gate matrix is ever built.  Qubit 0
//! is the most significant bit of a basis-state index (see [`crate::pauli`]).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use rand::distributions::{Distribution, WeightedIndex};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// 2^n complex amplitudes of an n-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// The |0…0⟩ state.
    pub fn zero(n_qubits: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        Self {
            n_qubits,
            amplitudes,
        }
    }

    /// A computational basis state |b⟩ given as a bit index.
    pub fn basis(n_qubits: usize, index: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << n_qubits];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Self {
            n_qubits,
            amplitudes,
        }
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Replace the amplitude vector; the length must stay 2^n.
    pub fn set_amplitudes(&mut self, amplitudes: Vec<Complex64>) {
        assert_eq!(amplitudes.len(), 1 << self.n_qubits);
        self.amplitudes = amplitudes;
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// |⟨self|other⟩|².
    pub fn overlap_sq(&self, other: &StateVector) -> f64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (a, b) in self.amplitudes.iter().zip(&other.amplitudes) {
            acc += a.conj() * b;
        }
        acc.norm_sqr()
    }

    fn stride_of(&self, qubit: usize) -> usize {
        1 << (self.n_qubits - 1 - qubit)
    }

    /// Apply an arbitrary single-qubit matrix [[a, b], [c, d]].
    ///
    /// Internal helper; circuit execution goes through [`Gate`], which is
    /// restricted to the published gate set.
    pub(crate) fn apply_1q(&mut self, qubit: usize, m: [[Complex64; 2]; 2]) {
        let stride = self.stride_of(qubit);
        let dim = self.amplitudes.len();
        let mut base = 0;
        while base < dim {
            for i in base..base + stride {
                let a0 = self.amplitudes[i];
                let a1 = self.amplitudes[i + stride];
                self.amplitudes[i] = m[0][0] * a0 + m[0][1] * a1;
                self.amplitudes[i + stride] = m[1][0] * a0 + m[1][1] * a1;
            }
            base += 2 * stride;
        }
    }
}

/// Circuit gate: a rotation, a bit flip or one of the two entanglers.
#[derive(Debug, Clone, PartialEq)]
pub enum Gate {
    /// Rotation around the y-axis by a fixed angle.
    Ry { qubit: usize, angle: f64 },
    /// Rotation around the y-axis whose angle is read from a parameter slot.
    RyParam { qubit: usize, parameter_index: usize },
    X { qubit: usize },
    Cnot { control: usize, target: usize },
    Cz { a: usize, b: usize },
}

impl Gate {
    /// Qubits touched by the gate.
    pub fn qubits(&self) -> Vec<usize> {
        match *self {
            Gate::Ry { qubit, .. } | Gate::RyParam { qubit, .. } | Gate::X { qubit } => {
                vec![qubit]
            }
            Gate::Cnot { control, target } => vec![control, target],
            Gate::Cz { a, b } => vec![a, b],
        }
    }

    fn check(&self, n_qubits: usize) -> Result<()> {
        let qs = self.qubits();
        for &q in &qs {
            if q >= n_qubits {
                return Err(Error::QubitOutOfRange {
                    index: q,
                    n_qubits,
                });
            }
        }
        if qs.len() == 2 && qs[0] == qs[1] {
            return Err(Error::Invalid(format!(
                "two-qubit gate with identical qubits {}",
                qs[0]
            )));
        }
        Ok(())
    }
}

/// Apply a single gate to a state.  Angles for `RyParam` gates are looked up
/// in `parameters`.
pub fn apply_gate(state: &mut StateVector, gate: &Gate, parameters: &[f64]) -> Result<()> {
    gate.check(state.n_qubits())?;
    match *gate {
        Gate::Ry { qubit, angle } => apply_ry(state, qubit, angle),
        Gate::RyParam {
            qubit,
            parameter_index,
        } => {
            let angle = *parameters
                .get(parameter_index)
                .ok_or(Error::ParameterCount {
                    expected: parameter_index + 1,
                    got: parameters.len(),
                })?;
            apply_ry(state, qubit, angle);
        }
        Gate::X { qubit } => {
            let stride = state.stride_of(qubit);
            let dim = state.amplitudes.len();
            let mut base = 0;
            while base < dim {
                for i in base..base + stride {
                    state.amplitudes.swap(i, i + stride);
                }
                base += 2 * stride;
            }
        }
        Gate::Cnot { control, target } => {
            let cbit = state.stride_of(control);
            let tbit = state.stride_of(target);
            for i in 0..state.amplitudes.len() {
                // visit each swapped pair once, from its target-0 member
                if i & cbit != 0 && i & tbit == 0 {
                    state.amplitudes.swap(i, i | tbit);
                }
            }
        }
        Gate::Cz { a, b } => {
            let abit = state.stride_of(a);
            let bbit = state.stride_of(b);
            for (i, amp) in state.amplitudes.iter_mut().enumerate() {
                if i & abit != 0 && i & bbit != 0 {
                    *amp = -*amp;
                }
            }
        }
    }
    Ok(())
}

/// R_Y(θ) = [[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]].
fn apply_ry(state: &mut StateVector, qubit: usize, angle: f64) {
    let c = (angle / 2.0).cos();
    let s = (angle / 2.0).sin();
    let stride = state.stride_of(qubit);
    let dim = state.amplitudes.len();
    let mut base = 0;
    while base < dim {
        for i in base..base + stride {
            let a0 = state.amplitudes[i];
            let a1 = state.amplitudes[i + stride];
            state.amplitudes[i] = a0 * c - a1 * s;
            state.amplitudes[i + stride] = a0 * s + a1 * c;
        }
        base += 2 * stride;
    }
}

/// An ordered gate list over a fixed register with a declared number of
/// variational parameter slots.
#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    n_qubits: usize,
    gates: Vec<Gate>,
    n_parameters: usize,
}

impl Circuit {
    /// Validate gate indices and the parameter-slot invariant: slot indices,
    /// where present, must be exactly {0, …, n_parameters−1} with every slot
    /// used at least once.
    pub fn new(n_qubits: usize, gates: Vec<Gate>, n_parameters: usize) -> Result<Self> {
        let mut used = vec![false; n_parameters];
        for g in &gates {
            g.check(n_qubits)?;
            if let Gate::RyParam {
                parameter_index, ..
            } = *g
            {
                if parameter_index >= n_parameters {
                    return Err(Error::Invalid(format!(
                        "parameter slot {parameter_index} out of range for {n_parameters} slots"
                    )));
                }
                used[parameter_index] = true;
            }
        }
        if let Some(unused) = used.iter().position(|u| !u) {
            return Err(Error::Invalid(format!(
                "parameter slot {unused} is never used"
            )));
        }
        Ok(Self {
            n_qubits,
            gates,
            n_parameters,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn n_parameters(&self) -> usize {
        self.n_parameters
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// Run the circuit on |0…0⟩ with the given parameter vector.
    pub fn run(&self, parameters: &[f64]) -> Result<StateVector> {
        if parameters.len() != self.n_parameters {
            return Err(Error::ParameterCount {
                expected: self.n_parameters,
                got: parameters.len(),
            });
        }
        let mut state = StateVector::zero(self.n_qubits);
        for g in &self.gates {
            apply_gate(&mut state, g, parameters)?;
        }
        Ok(state)
    }

    /// Greedy ASAP layering: each gate goes to the earliest layer where none
    /// of its qubits is busy.  Returns the per-gate layer assignment.
    fn layers(&self) -> Vec<usize> {
        let mut next_free = vec![0usize; self.n_qubits];
        let mut assignment = Vec::with_capacity(self.gates.len());
        for g in &self.gates {
            let layer = g.qubits().iter().map(|&q| next_free[q]).max().unwrap_or(0);
            for q in g.qubits() {
                next_free[q] = layer + 1;
            }
            assignment.push(layer);
        }
        assignment
    }

    /// Circuit depth: the number of greedy ASAP layers.
    pub fn depth(&self) -> usize {
        self.layers().iter().map(|l| l + 1).max().unwrap_or(0)
    }

    /// Human-readable layer listing, one layer per line:
    /// `layer k: GATE(qubits)[θ or param #]`.
    pub fn layered_dump(&self) -> String {
        let assignment = self.layers();
        let depth = self.depth();
        let mut out = String::new();
        for layer in 0..depth {
            let mut entries = Vec::new();
            for (g, &l) in self.gates.iter().zip(&assignment) {
                if l != layer {
                    continue;
                }
                entries.push(match g {
                    Gate::Ry { qubit, angle } => format!("RY({qubit})[{angle:.4}]"),
                    Gate::RyParam {
                        qubit,
                        parameter_index,
                    } => format!("RY({qubit})[#{parameter_index}]"),
                    Gate::X { qubit } => format!("X({qubit})"),
                    Gate::Cnot { control, target } => format!("CNOT({control},{target})"),
                    Gate::Cz { a, b } => format!("CZ({a},{b})"),
                });
            }
            let _ = writeln!(out, "layer {layer}: {}", entries.join(" "));
        }
        out
    }
}

/// Multinomial sample of basis states from |amplitude|².  Deterministic for
/// a fixed seed.  Keys are bitstrings with qubit 0 first.
pub fn sample(state: &StateVector, n_shots: u64, seed: u64) -> BTreeMap<String, u64> {
    assert!(n_shots >= 1);
    let weights: Vec<f64> = state.amplitudes.iter().map(|a| a.norm_sqr()).collect();
    let dist = WeightedIndex::new(&weights).expect("state has no weight");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hist: BTreeMap<String, u64> = BTreeMap::new();
    let n = state.n_qubits;
    for _ in 0..n_shots {
        let idx = dist.sample(&mut rng);
        let key: String = (0..n)
            .map(|q| {
                if idx & (1 << (n - 1 - q)) != 0 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect();
        *hist.entry(key).or_insert(0) += 1;
    }
    hist
}

/// Shot-based estimate of `⟨ψ|H|ψ⟩`.
///
/// Each Pauli term is measured in its own basis: the state is rotated so the
/// term becomes diagonal, sampled, and the ±1 parities averaged.  This mimics
/// a shot-limited backend; exact expectation remains the default everywhere
/// else.
pub fn sampled_expectation(
    state: &StateVector,
    obs: &crate::pauli::Observable,
    n_shots: u64,
    seed: u64,
) -> Result<f64> {
    use crate::pauli::Pauli;
    if state.n_qubits() != obs.n_qubits() {
        return Err(Error::QubitMismatch {
            left: state.n_qubits(),
            right: obs.n_qubits(),
        });
    }
    let inv = std::f64::consts::FRAC_1_SQRT_2;
    // V with V† X V = Z
    let to_z_from_x = [
        [Complex64::new(inv, 0.0), Complex64::new(inv, 0.0)],
        [Complex64::new(-inv, 0.0), Complex64::new(inv, 0.0)],
    ];
    // W with W† Y W = Z
    let to_z_from_y = [
        [Complex64::new(inv, 0.0), Complex64::new(0.0, -inv)],
        [Complex64::new(0.0, -inv), Complex64::new(inv, 0.0)],
    ];
    let n = state.n_qubits();
    let mut energy = 0.0;
    for (term_idx, (c, p)) in obs.terms().iter().enumerate() {
        if p.is_identity() {
            energy += c;
            continue;
        }
        let mut rotated = state.clone();
        let mut zmask = 0usize;
        for (q, &letter) in p.letters().iter().enumerate() {
            match letter {
                Pauli::I => {}
                Pauli::Z => zmask |= 1 << (n - 1 - q),
                Pauli::X => {
                    rotated.apply_1q(q, to_z_from_x);
                    zmask |= 1 << (n - 1 - q);
                }
                Pauli::Y => {
                    rotated.apply_1q(q, to_z_from_y);
                    zmask |= 1 << (n - 1 - q);
                }
            }
        }
        let weights: Vec<f64> = rotated.amplitudes.iter().map(|a| a.norm_sqr()).collect();
        let dist = WeightedIndex::new(&weights).expect("state has no weight");
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(term_idx as u64));
        let mut acc: i64 = 0;
        for _ in 0..n_shots {
            let idx = dist.sample(&mut rng);
            acc += if (idx & zmask).count_ones() % 2 == 0 {
                1
            } else {
                -1
            };
        }
        energy += c * acc as f64 / n_shots as f64;
    }
    Ok(energy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn ry_pi_flips_zero_to_one() {
        let mut s = StateVector::zero(1);
        apply_gate(&mut s, &Gate::Ry { qubit: 0, angle: PI }, &[]).unwrap();
        assert_close(s.amplitudes()[0].norm(), 0.0, 1e-15);
        assert_close(s.amplitudes()[1].re, 1.0, 1e-15);
    }

    #[test]
    fn cnot_flips_target_when_control_set() {
        // |10⟩ → |11⟩
        let mut s = StateVector::basis(2, 0b10);
        apply_gate(
            &mut s,
            &Gate::Cnot {
                control: 0,
                target: 1,
            },
            &[],
        )
        .unwrap();
        assert_close(s.amplitudes()[0b11].re, 1.0, 1e-15);
        // control clear: |01⟩ stays
        let mut s = StateVector::basis(2, 0b01);
        apply_gate(
            &mut s,
            &Gate::Cnot {
                control: 0,
                target: 1,
            },
            &[],
        )
        .unwrap();
        assert_close(s.amplitudes()[0b01].re, 1.0, 1e-15);
    }

    #[test]
    fn cz_phases_only_the_11_component() {
        let mut s = StateVector::basis(2, 0b11);
        apply_gate(&mut s, &Gate::Cz { a: 0, b: 1 }, &[]).unwrap();
        assert_close(s.amplitudes()[0b11].re, -1.0, 1e-15);
    }

    #[test]
    fn cluster_unit_state_matches_closed_form() {
        // RY(θ₀) on q0, RY(π) on q1, CNOT(0→1) on |00⟩
        //   → cos(θ₀/2)|01⟩ + sin(θ₀/2)|10⟩
        let theta0 = 0.81;
        let c = Circuit::new(
            2,
            vec![
                Gate::Ry {
                    qubit: 0,
                    angle: theta0,
                },
                Gate::Ry { qubit: 1, angle: PI },
                Gate::Cnot {
                    control: 0,
                    target: 1,
                },
            ],
            0,
        )
        .unwrap();
        let s = c.run(&[]).unwrap();
        assert_close(s.amplitudes()[0b01].re, (theta0 / 2.0).cos(), 1e-14);
        assert_close(s.amplitudes()[0b10].re, (theta0 / 2.0).sin(), 1e-14);
        assert_close(s.amplitudes()[0b00].norm(), 0.0, 1e-14);
        assert_close(s.amplitudes()[0b11].norm(), 0.0, 1e-14);
    }

    #[test]
    fn cluster_unit_with_half_pi_produces_bell_mixture() {
        // θ₀ = π/2, θ₁ = 2θ → cos θ (|00⟩+|11⟩)/√2 + sin θ (|01⟩+|10⟩)/√2
        let theta = 0.37;
        let c = Circuit::new(
            2,
            vec![
                Gate::RyParam {
                    qubit: 0,
                    parameter_index: 0,
                },
                Gate::RyParam {
                    qubit: 1,
                    parameter_index: 1,
                },
                Gate::Cnot {
                    control: 0,
                    target: 1,
                },
            ],
            2,
        )
        .unwrap();
        let s = c.run(&[PI / 2.0, 2.0 * theta]).unwrap();
        let inv = std::f64::consts::FRAC_1_SQRT_2;
        assert_close(s.amplitudes()[0b00].re, theta.cos() * inv, 1e-14);
        assert_close(s.amplitudes()[0b11].re, theta.cos() * inv, 1e-14);
        assert_close(s.amplitudes()[0b01].re, theta.sin() * inv, 1e-14);
        assert_close(s.amplitudes()[0b10].re, theta.sin() * inv, 1e-14);
    }

    #[test]
    fn empty_circuit_leaves_vacuum() {
        let c = Circuit::new(3, vec![], 0).unwrap();
        let s = c.run(&[]).unwrap();
        assert_eq!(s, StateVector::zero(3));
    }

    #[test]
    fn parallel_ry_layer_is_a_product_state() {
        let (t0, t1) = (0.9, -1.3);
        let c = Circuit::new(
            2,
            vec![
                Gate::Ry { qubit: 0, angle: t0 },
                Gate::Ry { qubit: 1, angle: t1 },
            ],
            0,
        )
        .unwrap();
        let s = c.run(&[]).unwrap();
        let q0 = [(t0 / 2.0).cos(), (t0 / 2.0).sin()];
        let q1 = [(t1 / 2.0).cos(), (t1 / 2.0).sin()];
        for b in 0..4 {
            let expect = q0[b >> 1] * q1[b & 1];
            assert_close(s.amplitudes()[b].re, expect, 1e-14);
        }
    }

    #[test]
    fn depth_of_templates() {
        let unit = Circuit::new(
            2,
            vec![
                Gate::Ry { qubit: 0, angle: 0.1 },
                Gate::Ry { qubit: 1, angle: 0.2 },
                Gate::Cnot {
                    control: 0,
                    target: 1,
                },
            ],
            0,
        )
        .unwrap();
        assert_eq!(unit.depth(), 2);

        let meanfield = Circuit::new(
            4,
            (0..4).map(|q| Gate::Ry { qubit: q, angle: 0.3 }).collect(),
            0,
        )
        .unwrap();
        assert_eq!(meanfield.depth(), 1);
    }

    #[test]
    fn gate_involutions() {
        let mut s = StateVector::zero(3);
        apply_gate(&mut s, &Gate::Ry { qubit: 0, angle: 1.1 }, &[]).unwrap();
        apply_gate(&mut s, &Gate::Ry { qubit: 2, angle: 0.4 }, &[]).unwrap();
        let reference = s.clone();
        for g in [
            Gate::Cnot {
                control: 0,
                target: 2,
            },
            Gate::Cz { a: 1, b: 2 },
            Gate::X { qubit: 1 },
        ] {
            apply_gate(&mut s, &g, &[]).unwrap();
            apply_gate(&mut s, &g, &[]).unwrap();
            for (a, b) in s.amplitudes().iter().zip(reference.amplitudes()) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn ry_inverse_restores_state() {
        let mut s = StateVector::zero(2);
        apply_gate(&mut s, &Gate::Ry { qubit: 0, angle: 0.7 }, &[]).unwrap();
        let reference = s.clone();
        apply_gate(&mut s, &Gate::Ry { qubit: 1, angle: 2.3 }, &[]).unwrap();
        apply_gate(&mut s, &Gate::Ry { qubit: 1, angle: -2.3 }, &[]).unwrap();
        for (a, b) in s.amplitudes().iter().zip(reference.amplitudes()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn out_of_range_qubit_is_rejected() {
        let mut s = StateVector::zero(2);
        assert!(apply_gate(&mut s, &Gate::X { qubit: 2 }, &[]).is_err());
        assert!(Circuit::new(
            2,
            vec![Gate::Cnot {
                control: 1,
                target: 1
            }],
            0
        )
        .is_err());
    }

    #[test]
    fn unused_parameter_slot_is_rejected() {
        let gates = vec![Gate::RyParam {
            qubit: 0,
            parameter_index: 1,
        }];
        assert!(Circuit::new(1, gates, 2).is_err());
    }

    #[test]
    fn run_rejects_wrong_parameter_count() {
        let c = Circuit::new(
            1,
            vec![Gate::RyParam {
                qubit: 0,
                parameter_index: 0,
            }],
            1,
        )
        .unwrap();
        assert!(c.run(&[]).is_err());
        assert!(c.run(&[0.1, 0.2]).is_err());
    }

    #[test]
    fn sample_is_deterministic_and_concentrated() {
        let mut s = StateVector::zero(1);
        apply_gate(&mut s, &Gate::X { qubit: 0 }, &[]).unwrap();
        let hist = sample(&s, 100, 7);
        assert_eq!(hist.get("1"), Some(&100));
        assert_eq!(sample(&s, 100, 7), hist);
    }

    #[test]
    fn sample_binomial_within_five_sigma() {
        let mut s = StateVector::zero(1);
        apply_gate(&mut s, &Gate::Ry { qubit: 0, angle: PI / 2.0 }, &[]).unwrap();
        let n = 100_000u64;
        let hist = sample(&s, n, 13);
        let sigma = (n as f64 * 0.25).sqrt();
        for key in ["0", "1"] {
            let count = *hist.get(key).unwrap() as f64;
            assert!((count - n as f64 / 2.0).abs() < 5.0 * sigma);
        }
    }

    #[test]
    fn sampled_expectation_approaches_exact() {
        use crate::pauli::{Observable, PauliString};
        let c = Circuit::new(
            2,
            vec![
                Gate::Ry { qubit: 0, angle: 0.83 },
                Gate::Ry { qubit: 1, angle: 1.91 },
                Gate::Cnot {
                    control: 0,
                    target: 1,
                },
            ],
            0,
        )
        .unwrap();
        let s = c.run(&[]).unwrap();
        let h = Observable::from_terms(
            2,
            vec![
                (0.5, PauliString::parse("ZZ").unwrap()),
                (-0.5, PauliString::parse("XI").unwrap()),
                (-0.5, PauliString::parse("IX").unwrap()),
                (0.25, PauliString::parse("YY").unwrap()),
            ],
        )
        .unwrap();
        let exact = h.expectation(&s).unwrap();
        let estimate = sampled_expectation(&s, &h, 200_000, 3).unwrap();
        assert!((estimate - exact).abs() < 0.02, "{estimate} vs {exact}");
    }

    #[test]
    fn layered_dump_lists_layers() {
        let c = Circuit::new(
            2,
            vec![
                Gate::RyParam {
                    qubit: 0,
                    parameter_index: 0,
                },
                Gate::RyParam {
                    qubit: 1,
                    parameter_index: 1,
                },
                Gate::Cnot {
                    control: 0,
                    target: 1,
                },
            ],
            2,
        )
        .unwrap();
        let dump = c.layered_dump();
        assert_eq!(dump, "layer 0: RY(0)[#0] RY(1)[#1]\nlayer 1: CNOT(0,1)\n");
    }

    #[test]
    fn norm_preserved_over_long_random_sequences() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let n = 5;
        let mut s = StateVector::zero(n);
        for _ in 0..10_000 {
            let kind = rng.gen_range(0..4);
            let q = rng.gen_range(0..n);
            let gate = match kind {
                0 => Gate::Ry {
                    qubit: q,
                    angle: rng.gen_range(-6.3..6.3),
                },
                1 => Gate::X { qubit: q },
                _ => {
                    let mut p = rng.gen_range(0..n);
                    while p == q {
                        p = rng.gen_range(0..n);
                    }
                    if kind == 2 {
                        Gate::Cnot {
                            control: q,
                            target: p,
                        }
                    } else {
                        Gate::Cz { a: q, b: p }
                    }
                }
            };
            apply_gate(&mut s, &gate, &[]).unwrap();
        }
        assert!((s.norm() - 1.0).abs() <= 1e-9);
    }
}
