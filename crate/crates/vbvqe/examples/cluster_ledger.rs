//! Depth/accuracy ledger for the 6-site Ising ring at a=0.5: Kekulé (A),
//! Dewar (B) and reduced-Dewar (C) templates at reps 2, 4, 6, 8.
//!
//! ```bash
//! cargo run --release -p vbvqe --example cluster_ledger
//! ```

use vbvqe::ansatz::builtin_template;
use vbvqe::driver::{ising_sweep, report_table, RunOptions};
use vbvqe::models::Topology;

fn main() -> vbvqe::Result<()> {
    let options = RunOptions {
        seed: 2,
        ..Default::default()
    };
    let mut records = Vec::new();
    for cluster in ["A", "B", "C"] {
        let template = builtin_template(cluster, 6)?;
        for reps in [2, 4, 6, 8] {
            let outcome = ising_sweep(6, Topology::Ring, &template, reps, &[0.5], &options);
            assert!(outcome.all_ok());
            records.extend(outcome.records);
            let last = records.last().unwrap();
            eprintln!(
                "cluster {cluster} reps {reps}: depth {} delta_Ec {:.5}",
                last.depth, last.delta_ec
            );
        }
    }
    println!("{}", report_table(&records));
    Ok(())
}
