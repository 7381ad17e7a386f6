//! Exact-arithmetic evolution algebras built from graphs and back.
//!
//! A graphicable algebra attaches to each vertex of a graph a generator
//! whose square is the sum of its neighbors, while distinct generators
//! multiply to zero. This crate builds those algebras over exact
//! rationals, generates the classical graph families together with their
//! closed-form laws (stars, friendship graphs, wheels, complete
//! multipartite graphs, the flower snark, the Tietze graph, generalized
//! Petersen graphs), and audits every structural claim about them with
//! brute-force oracles: law/adjacency agreement, snark certificates,
//! Hamiltonicity, connectivity, and the star-in-friendship-in-wheel
//! subalgebra chain.
//!
//! ```
//! use graphicable::families::{family_law, FamilySpec};
//! use graphicable::io::render_law;
//!
//! let law = family_law(&FamilySpec::Star(3)).unwrap();
//! assert!(render_law(&law).ends_with("e_4^2 = e_1 + e_2 + e_3\n"));
//! ```
//!
//! Start from the runnable examples (`cargo run --example law_gallery`)
//! or the `graphicable` binary (`graphicable verify friendship:3`).

pub mod algebra;
pub mod analysis;
pub mod cli;
pub mod embeddings;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;

pub use algebra::{AlgebraElement, EvolutionAlgebra, Rational};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{Digraph, GeneratorMap, Graph};
