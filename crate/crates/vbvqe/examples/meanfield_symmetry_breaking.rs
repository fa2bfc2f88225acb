//! Spontaneous spin-symmetry breaking on the H2 parity-reduced 2-qubit
//! model: the optimized reps=0 (mean-field) energy tracks the fixed
//! reference determinant up to the Coulson-Fischer point and drops below
//! it for stretched bonds, while the full cluster unit stays exact.
//!
//! ```bash
//! cargo run --release -p vbvqe --example meanfield_symmetry_breaking
//! ```

use std::f64::consts::PI;
use std::path::Path;

use vbvqe::ansatz::{builtin_template, AnsatzSpec};
use vbvqe::driver::{load_molecule, scan_curve_dir, Mapping};
use vbvqe::solver;
use vbvqe::vqe::VqeProblem;

fn main() -> vbvqe::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/h2_sto3g");
    let template = builtin_template("unit2", 2)?;
    println!(
        "{:>7} {:>13} {:>13} {:>13} {:>13}",
        "R (A)", "E_exact", "reference", "reps=0", "reps=1"
    );
    for (path, _, param) in scan_curve_dir(&dir, "fcidump")? {
        let h = load_molecule(&path, Mapping::ParityReduced)?;
        let exact = solver::ground_energy(&h)?;

        // |sigma sigma-bar> reference: theta0 = pi, theta1 = 0
        let meanfield = VqeProblem::new(h.clone(), AnsatzSpec::new(template.clone(), 0))?
            .with_seed(13);
        let reference = meanfield.objective(&[PI, 0.0])?;
        let relaxed = meanfield.solve()?;

        let full = VqeProblem::new(h, AnsatzSpec::new(template.clone(), 1))?
            .with_seed(13)
            .solve()?;

        let marker = if relaxed.energy < reference - 1e-6 {
            "  <- symmetry broken"
        } else {
            ""
        };
        println!(
            "{:>7.3} {:>13.8} {:>13.8} {:>13.8} {:>13.8}{marker}",
            param, exact, reference, relaxed.energy, full.energy
        );
    }
    println!("\nthe Coulson-Fischer point sits near R = 1.19 A");
    Ok(())
}
