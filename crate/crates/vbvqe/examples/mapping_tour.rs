//! Fermion-to-qubit mapping tour on the bundled H2/STO-3G integrals:
//! Jordan-Wigner vs parity spectra, the two-qubit symmetry reduction, and
//! the number-operator identity.
//!
//! ```bash
//! cargo run --release -p vbvqe --example mapping_tour
//! ```

use std::path::Path;

use vbvqe::fermion::{
    jordan_wigner, parity_map, parity_map_reduced, parse_fcidump_path, to_fermion_hamiltonian,
    FermionOperator,
};
use vbvqe::solver;

fn main() -> vbvqe::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/h2_sto3g/h2_0.735.fcidump");
    let data = parse_fcidump_path(&path)?;
    println!(
        "H2/STO-3G at 0.735 A: {} orbitals, {} electrons, core {:.6}",
        data.n_orbitals, data.n_electrons, data.core_energy
    );
    let op = to_fermion_hamiltonian(&data);
    let n = data.n_modes();

    let jw = jordan_wigner(&op, n)?;
    let parity = parity_map(&op, n)?;
    let reduced = parity_map_reduced(&op, n, data.n_electrons, data.ms2)?;
    println!(
        "JW: {} qubits / {} Pauli words; parity: {} words; reduced: {} qubits / {} words",
        jw.n_qubits(),
        jw.term_count(),
        parity.term_count(),
        reduced.n_qubits(),
        reduced.term_count()
    );

    let s_jw = solver::full_spectrum(&jw, false)?;
    let s_parity = solver::full_spectrum(&parity, false)?;
    let worst = s_jw
        .eigenvalues
        .iter()
        .zip(&s_parity.eigenvalues)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    println!("JW vs parity: max eigenvalue deviation {worst:.2e} (isospectral)");

    let e_reduced = solver::ground_energy(&reduced)?;
    println!(
        "ground energy: JW {:.10}, two-qubit reduced {:.10}",
        s_jw.ground_energy, e_reduced
    );

    let mut number = FermionOperator::new();
    number.add(1.0, vec![(0, true), (0, false)]);
    let mapped = jordan_wigner(&number, 1)?;
    println!("\na^dag_0 a_0 maps to:\n{}", mapped.to_text());
    Ok(())
}
