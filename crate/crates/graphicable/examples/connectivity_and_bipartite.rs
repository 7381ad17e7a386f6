//! Connectivity via all-pairs unit-capacity max-flow, and BFS
//! bipartiteness checks on the even generalized Petersen graphs.
//!
//! ```bash
//! cargo run --example connectivity_and_bipartite
//! ```

use graphicable::analysis::{connectivity, is_bipartite};
use graphicable::families::{generate_graph, FamilySpec};

fn main() {
    for spec in [
        FamilySpec::desargues(),
        FamilySpec::nauru(),
        FamilySpec::Star(4),
        FamilySpec::Complete(5),
    ] {
        let graph = generate_graph(&spec).unwrap();
        let (vertex_conn, edge_conn) = connectivity(&graph).unwrap();
        println!("{spec}: vertex connectivity {vertex_conn}, edge connectivity {edge_conn}");
    }

    println!();
    for spec in [FamilySpec::mobius_kantor(), FamilySpec::nauru(), FamilySpec::petersen()] {
        let graph = generate_graph(&spec).unwrap();
        match is_bipartite(&graph) {
            Some((left, right)) => {
                println!("{spec}: bipartite with parts of size {} and {}", left.len(), right.len())
            }
            None => println!("{spec}: not bipartite (odd cycle present)"),
        }
    }
}
