//! Transverse-field Ising Hamiltonians and the 2-site closed-form solutions.
//!
//! The model is
//!
//! ```text
//!   H = -J Σ_{⟨i,j⟩} Z_i Z_j  -  h Σ_i X_i
//! ```
//!
//! with uniform nearest-neighbor coupling J along z and transverse field h
//! along x; antiferromagnetic problems use J < 0.  The one-parameter family
//! h = a, J = a − 1 with a ∈ [0, 1] sweeps from the classical Néel limit to
//! the free-spin limit.

use crate::error::{Error, Result};
use crate::pauli::{Observable, Pauli, PauliString};

/// Lattice topology for the uniform-coupling builder.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    Chain,
    Ring,
}

impl std::str::FromStr for Topology {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "chain" => Ok(Topology::Chain),
            "ring" => Ok(Topology::Ring),
            other => Err(Error::Invalid(format!("unknown topology '{other}'"))),
        }
    }
}

/// Uniform transverse-field Ising specification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IsingSpec {
    pub n_sites: usize,
    pub topology: Topology,
    pub coupling: f64,
    pub field: f64,
}

impl IsingSpec {
    pub fn new(n_sites: usize, topology: Topology, coupling: f64, field: f64) -> Result<Self> {
        if n_sites < 2 {
            return Err(Error::Invalid(format!(
                "Ising model needs at least 2 sites, got {n_sites}"
            )));
        }
        Ok(Self {
            n_sites,
            topology,
            coupling,
            field,
        })
    }

    /// Nearest-neighbor bonds for the topology.  A 2-site ring is the single
    /// bond (not doubled).
    pub fn bonds(&self) -> Vec<(usize, usize)> {
        let mut bonds: Vec<(usize, usize)> = (0..self.n_sites - 1).map(|i| (i, i + 1)).collect();
        if self.topology == Topology::Ring && self.n_sites >= 3 {
            bonds.push((self.n_sites - 1, 0));
        }
        bonds
    }
}

/// Sweep parameterization a ∈ [0, 1] with h = a and J = a − 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepParam {
    pub a: f64,
}

impl SweepParam {
    pub fn new(a: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a) {
            return Err(Error::Invalid(format!("sweep parameter a={a} not in [0,1]")));
        }
        Ok(Self { a })
    }

    pub fn field(&self) -> f64 {
        self.a
    }

    pub fn coupling(&self) -> f64 {
        self.a - 1.0
    }
}

/// Build `-J Σ Z_i Z_j - h Σ X_i` for the uniform spec.
pub fn build_ising(spec: &IsingSpec) -> Result<Observable> {
    let n = spec.n_sites;
    let mut obs = Observable::new(n);
    for (i, j) in spec.bonds() {
        obs.add_term(
            -spec.coupling,
            PauliString::from_ops(n, &[(i, Pauli::Z), (j, Pauli::Z)])?,
        )?;
    }
    for i in 0..n {
        obs.add_term(-spec.field, PauliString::single(n, i, Pauli::X)?)?;
    }
    Ok(obs.normalize())
}

/// Build `-Σ J_ij Z_i Z_j - h Σ X_i` from an explicit bond list.
pub fn build_ising_bonds(n_sites: usize, bonds: &[(usize, usize, f64)], field: f64) -> Result<Observable> {
    if n_sites < 2 {
        return Err(Error::Invalid(format!(
            "Ising model needs at least 2 sites, got {n_sites}"
        )));
    }
    let mut obs = Observable::new(n_sites);
    for &(i, j, coupling) in bonds {
        if i == j {
            return Err(Error::Invalid(format!("self-bond on site {i}")));
        }
        obs.add_term(
            -coupling,
            PauliString::from_ops(n_sites, &[(i, Pauli::Z), (j, Pauli::Z)])?,
        )?;
    }
    for i in 0..n_sites {
        obs.add_term(-field, PauliString::single(n_sites, i, Pauli::X)?)?;
    }
    Ok(obs.normalize())
}

/// Exact 2-site ground energy `-√(J² + 4h²)`.
pub fn exact_2site_energy(coupling: f64, field: f64) -> f64 {
    -(coupling * coupling + 4.0 * field * field).sqrt()
}

/// Mixing angle θ of the 2-site ground state
/// cos θ (|00⟩+|11⟩)/√2 + sin θ (|01⟩+|10⟩)/√2.
///
/// θ = atan2(√(J²+4h²) − J, 2h), the ground-eigenvector angle of the
/// Hamiltonian restricted to the two symmetric Bell components.  The h = 0
/// limits are θ = π/2 for J < 0 (pure antiferromagnetic resonance) and
/// θ = 0 for J > 0.
pub fn exact_2site_angle(coupling: f64, field: f64) -> f64 {
    let radical = (coupling * coupling + 4.0 * field * field).sqrt();
    (radical - coupling).atan2(2.0 * field)
}

/// Mean-field (product-state) 2-site energy, Eq.-of-motion optimum of
/// `E[θ₀,θ₁] = -J cos θ₀ cos θ₁ - h (sin θ₀ + sin θ₁)`:
/// `h²/J + J` in the broken branch `(-h/J) < 1`, else `-2h`.
pub fn meanfield_2site_energy(coupling: f64, field: f64) -> f64 {
    if coupling != 0.0 && -field / coupling < 1.0 {
        field * field / coupling + coupling
    } else {
        -2.0 * field
    }
}

/// Optimal mean-field angles: `(arcsin(-h/J), π − θ₀)` in the broken branch,
/// `(π/2, π/2)` otherwise.  The mirror solution `(π − θ₀, θ₀)` is degenerate.
pub fn meanfield_2site_angles(coupling: f64, field: f64) -> (f64, f64) {
    if coupling != 0.0 && -field / coupling < 1.0 {
        let theta0 = (-field / coupling).asin();
        (theta0, std::f64::consts::PI - theta0)
    } else {
        (std::f64::consts::FRAC_PI_2, std::f64::consts::FRAC_PI_2)
    }
}

/// Missing/plain correlation energy `|E_exact − E_approx|`.
pub fn correlation_energy(e_exact: f64, e_approx: f64) -> f64 {
    (e_exact - e_approx).abs()
}
