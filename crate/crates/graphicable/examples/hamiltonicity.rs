//! Hamiltonian search on the generalized Petersen families: Desargues is
//! Hamiltonian, Tietze is maximally non-Hamiltonian (no spanning cycle,
//! but a spanning path between every pair of non-adjacent vertices).
//!
//! ```bash
//! cargo run --example hamiltonicity
//! ```

use graphicable::analysis::{
    find_hamiltonian_cycle, find_hamiltonian_path, is_maximally_nonhamiltonian,
};
use graphicable::families::{generate_graph, FamilySpec};

fn main() {
    let desargues = generate_graph(&FamilySpec::desargues()).unwrap();
    let cycle = find_hamiltonian_cycle(&desargues).unwrap().expect("Desargues is Hamiltonian");
    println!("desargues: Hamiltonian cycle found");
    println!(
        "  {}",
        cycle.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" -> ")
    );

    let tietze = generate_graph(&FamilySpec::Tietze).unwrap();
    assert!(find_hamiltonian_cycle(&tietze).unwrap().is_none());
    println!("\ntietze: no Hamiltonian cycle (search exhausted)");

    let mut checked = 0;
    for u in 1..=12 {
        for v in (u + 1)..=12 {
            if !tietze.has_edge(u, v) {
                let path = find_hamiltonian_path(&tietze, u, v).unwrap();
                assert!(path.is_some(), "pair ({u},{v}) must be joined");
                checked += 1;
            }
        }
    }
    println!("tietze: Hamiltonian path exists for all {checked} non-adjacent pairs");
    let sample = find_hamiltonian_path(&tietze, 1, 6).unwrap().unwrap();
    println!(
        "  e.g. 1 to 6: {}",
        sample.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" -> ")
    );
    println!(
        "tietze: is_maximally_nonhamiltonian = {}",
        is_maximally_nonhamiltonian(&tietze).unwrap()
    );
}
