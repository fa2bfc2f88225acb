//! Build a custom pairing template, inspect the generated circuit layer by
//! layer, and check the depth and parameter-count laws.
//!
//! ```bash
//! cargo run --release -p vbvqe --example custom_template
//! ```

use vbvqe::ansatz::{build, custom_template, pairing_count, AnsatzSpec, ClusterTemplate};

fn main() -> vbvqe::Result<()> {
    for n in [2usize, 4, 6, 8] {
        println!("{n} qubits admit {} perfect pairings", pairing_count(n)?);
    }

    // a 4-qubit scheme pairing next-nearest neighbors first
    let template = custom_template(4, vec![vec![(0, 2), (1, 3)], vec![(0, 1), (2, 3)]], "nnn")?;
    println!("\ntemplate '{}' in file form:\n{}", template.name(), template.to_text());

    let round_trip = ClusterTemplate::from_text(4, &template.to_text(), "nnn")?;
    assert_eq!(template, round_trip);

    for reps in [0, 1, 2, 3] {
        let circuit = build(&AnsatzSpec::new(template.clone(), reps))?;
        println!(
            "reps = {reps}: depth {} (= 2*reps+1), {} parameters (= 4*(reps+1))",
            circuit.depth(),
            circuit.n_parameters()
        );
    }

    let circuit = build(&AnsatzSpec::new(template, 2))?;
    println!("\nreps = 2 circuit, layer by layer:\n{}", circuit.layered_dump());
    Ok(())
}
