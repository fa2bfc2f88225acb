//! Sweep the 4-site transverse-field Ising ring with the two-layer 4-qubit
//! template at reps=4 and reps=0, printing the missing correlation energy
//! per grid point.
//!
//! ```bash
//! cargo run --release -p vbvqe --example ising_sweep
//! ```

use vbvqe::ansatz::builtin_template;
use vbvqe::driver::{ising_sweep, RunOptions};
use vbvqe::models::Topology;

fn main() -> vbvqe::Result<()> {
    let template = builtin_template("4q", 4)?;
    let grid: Vec<f64> = (0..=10).map(|k| k as f64 / 10.0).collect();
    let options = RunOptions {
        seed: 11,
        ..Default::default()
    };

    for reps in [0, 4] {
        let outcome = ising_sweep(4, Topology::Ring, &template, reps, &grid, &options);
        for failure in &outcome.failures {
            eprintln!("a = {}: {}", failure.model_param, failure.message);
        }
        println!("reps = {reps}:");
        println!(
            "{:>5} {:>14} {:>14} {:>12}",
            "a", "E_vqe", "E_exact", "delta_Ec"
        );
        let mut worst = 0.0f64;
        for r in &outcome.records {
            println!(
                "{:>5.2} {:>14.9} {:>14.9} {:>12.3e}",
                r.model_param, r.e_vqe, r.e_exact, r.delta_ec
            );
            worst = worst.max(r.delta_ec);
        }
        println!("max delta_Ec = {worst:.3e}\n");
    }
    Ok(())
}
