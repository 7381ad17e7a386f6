//! The law-built graphs certified against independent constructions:
//! the flower law graph against the hub/cycle flower snark, and the
//! Tietze law graph against Petersen with one vertex expanded into a
//! triangle. Witness maps are verified in both directions.
//!
//! ```bash
//! cargo run --example isomorphism_oracles
//! ```

use graphicable::families::{
    expand_vertex_to_triangle, generate_graph, gp_conventional_labeling, standard_flower_snark,
    FamilySpec,
};
use graphicable::graph::{is_isomorphic, is_subgraph_embedding};

fn main() {
    let flower_law = generate_graph(&FamilySpec::FlowerJ5).unwrap();
    let flower_oracle = standard_flower_snark(5).unwrap();
    let witness = is_isomorphic(&flower_law, &flower_oracle)
        .unwrap()
        .expect("the law graph is the flower snark");
    assert!(is_subgraph_embedding(&flower_law, &flower_oracle, &witness).unwrap());
    assert!(is_subgraph_embedding(&flower_oracle, &flower_law, &witness.inverse().unwrap()).unwrap());
    println!("j5 law graph == standard flower snark, witness images:");
    println!("  {:?}", witness.images());

    let tietze_law = generate_graph(&FamilySpec::Tietze).unwrap();
    let petersen = generate_graph(&FamilySpec::petersen()).unwrap();
    let tietze_oracle = expand_vertex_to_triangle(&petersen, 1);
    let witness = is_isomorphic(&tietze_law, &tietze_oracle)
        .unwrap()
        .expect("the law graph is the expanded Petersen graph");
    println!("\ntietze law graph == petersen with vertex 1 expanded, witness images:");
    println!("  {:?}", witness.images());

    // The interleaved GP labeling (outer odd, inner even) against the
    // conventional one (outer first, inner second).
    let map = gp_conventional_labeling(10);
    println!("\ndesargues interleaved -> conventional labels:");
    println!("  {:?}", map.images());
    let non_isomorphic = is_isomorphic(
        &generate_graph(&FamilySpec::desargues()).unwrap(),
        &generate_graph(&FamilySpec::GeneralizedPetersen(10, 2)).unwrap(),
    )
    .unwrap();
    println!("desargues vs gp:10,2 isomorphic: {}", non_isomorphic.is_some());
}
