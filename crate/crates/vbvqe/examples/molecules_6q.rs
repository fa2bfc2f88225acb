//! Six-qubit molecular benchmarks from the bundled pre-mapped Pauli files:
//! H4 (square, reduced Dewar C), (H2)2 (linear, Dewar B) and LiH (frozen
//! core + Z2 tapering, reduced Dewar C) at increasing reps.
//!
//! ```bash
//! cargo run --release -p vbvqe --example molecules_6q
//! ```

use std::path::Path;

use vbvqe::ansatz::builtin_template;
use vbvqe::driver::{molecule_run, report_table, Mapping, RunOptions};

fn main() -> vbvqe::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let runs = [
        ("h4/h4_0.740.pauli", "C", vec![0, 2, 4, 6]),
        ("h2x2/h2x2_1.500.pauli", "B", vec![2, 4, 6]),
        ("lih/lih_1.55.pauli", "C", vec![0, 2, 4, 6, 8]),
    ];
    let options = RunOptions {
        seed: 1,
        ..Default::default()
    };
    let mut records = Vec::new();
    for (file, cluster, reps_list) in runs {
        let template = builtin_template(cluster, 6)?;
        for reps in reps_list {
            let record =
                molecule_run(&data.join(file), Mapping::PauliFile, &template, reps, &options)?;
            eprintln!(
                "{} cluster {cluster} reps {reps}: E = {:.6}, delta_Ec = {:.5}",
                record.system, record.e_vqe, record.delta_ec
            );
            records.push(record);
        }
    }
    println!("{}", report_table(&records));
    Ok(())
}
