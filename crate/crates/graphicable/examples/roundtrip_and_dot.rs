//! Conversions and formats: graph -> algebra -> graph is the identity on
//! S-graphicable inputs, algebra documents round-trip through JSON with
//! normalized rational strings, and graphs export to deterministic DOT.
//!
//! ```bash
//! cargo run --example roundtrip_and_dot
//! ```

use graphicable::algebra::EvolutionAlgebra;
use graphicable::families::{generate_graph, FamilySpec};
use graphicable::io::{
    deserialize_document, export_dot, serialize_document, AlgebraDocument, SCHEMA_VERSION,
};

fn main() {
    let graph = generate_graph(&FamilySpec::Friendship(2)).unwrap();
    let algebra = EvolutionAlgebra::from_graph(&graph);
    assert_eq!(algebra.to_graph().unwrap(), graph);
    println!("friendship:2 survives graph -> algebra -> graph unchanged");

    let document = AlgebraDocument::from_algebra(&algebra, Some("friendship:2".into()));
    let text = serialize_document(&document);
    let back = deserialize_document(&text).unwrap();
    assert_eq!(back, document);
    println!("algebra document round-trips through {} bytes of JSON", text.len());

    // Rational entries normalize on read: 2/4 is stored back as 1/2.
    let raw = AlgebraDocument {
        schema_version: SCHEMA_VERSION,
        dimension: 1,
        structure: vec!["2/4".into()],
        family: None,
    };
    let normalized = AlgebraDocument::from_algebra(&raw.to_algebra().unwrap(), None);
    println!("entry \"2/4\" normalizes to \"{}\"", normalized.structure[0]);

    // A non-symmetric matrix is rejected with the offending entry.
    let bad = AlgebraDocument {
        schema_version: SCHEMA_VERSION,
        dimension: 2,
        structure: vec!["0".into(), "1".into(), "0".into(), "0".into()],
        family: None,
    };
    let err = bad.to_algebra().unwrap().to_graph().unwrap_err();
    println!("asymmetric matrix rejected: {err}");

    println!("\nDOT export of star:3:");
    print!("{}", export_dot(&generate_graph(&FamilySpec::Star(3)).unwrap()));
}
