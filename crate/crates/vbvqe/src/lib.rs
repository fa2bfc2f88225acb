//! Valence-bond cluster circuits for the variational quantum eigensolver.
//!
//! The building block is a 2-qubit cluster unit — two R_Y rotations and one
//! CNOT entangler — which prepares the bonding/antibonding resonance of a
//! minimal H₂ model exactly and generalizes to larger registers through
//! pairing layers: perfect matchings of the qubits, each matched pair
//! realized as one unit.  Stacking pairing layers (Kekulé and Dewar
//! resonance schemes on six qubits, nearest-neighbor/crossed pairs on four)
//! gives shallow circuits whose depth grows as 2·reps + 1 while the
//! parameter count grows as n·(reps + 1).
//!
//! The crate bundles everything needed to run such circuits end to end at
//! desk scale:
//!
//! * [`pauli`] — Pauli strings, Hermitian observables, exact expectation
//!   values and a plain-text Hamiltonian exchange format;
//! * [`simulator`] — dense statevector simulation of {R_Y, X, CNOT, CZ}
//!   circuits, circuit depth and optional shot sampling;
//! * [`ansatz`] — cluster templates and the reps mechanism;
//! * [`models`] — transverse-field Ising builders and the 2-site closed
//!   forms (exact, mean-field, optimal angles);
//! * [`fermion`] — FCIDUMP ingestion, Jordan-Wigner and parity mappings
//!   with the two-qubit symmetry reduction;
//! * [`solver`] — an exact dense-diagonalization oracle;
//! * [`vqe`] — parameter-shift gradients, BFGS local optimization and
//!   multi-restart search;
//! * [`driver`] — sweep orchestration, CSV/JSON records and ledgers.
//!
//! The `examples/` directory walks through each capability; `vbvqe` is the
//! companion command-line driver.
//!
//! # Conventions
//!
//! Qubit 0 is the leftmost letter of a Pauli string and the most
//! significant bit of a basis-state index.  R_Y(θ) follows
//! [[cos θ/2, −sin θ/2], [sin θ/2, cos θ/2]].  Spin orbitals are in block
//! order (all spin-up, then all spin-down).

pub mod ansatz;
pub mod driver;
pub mod error;
pub mod fermion;
pub mod matrix;
pub mod models;
pub mod optimize;
pub mod pauli;
pub mod simulator;
pub mod solver;
pub mod vqe;

pub use ansatz::{build, builtin_template, custom_template, AnsatzSpec, ClusterTemplate, PairingLayer};
pub use driver::{Mapping, RunOptions, SweepOutcome, SweepRecord};
pub use error::{Error, Result};
pub use pauli::{Observable, Pauli, PauliString};
pub use simulator::{apply_gate, sample, Circuit, Gate, StateVector};
pub use solver::{full_spectrum, ground_energy, SpectrumResult};
pub use vqe::{GradientMode, Strategy, VqeProblem, VqeResult};
