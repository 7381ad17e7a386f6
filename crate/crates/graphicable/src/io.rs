//! On-disk formats and text rendering.
//!
//! Algebras travel as JSON documents whose entries are rational strings
//! ("0", "1", "1/2") — never floats — so exactness survives every tool
//! boundary. Graphs use `{ "n": .., "edges": [[u,v], ..] }` with `u < v`
//! ascending. All exports are byte-deterministic for a given value.

use num::traits::Zero;
use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraElement, EvolutionAlgebra, Rational};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Version written by this build; anything else is rejected on read.
pub const SCHEMA_VERSION: u32 = 1;

/// Parses "a/b" or "a" into an exact rational, normalizing the result
/// ("2/4" becomes 1/2). `None` for malformed input or a zero denominator.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let trimmed = text.trim();
    let (numer_text, denom_text) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (trimmed, "1"),
    };
    let numer: BigInt = numer_text.parse().ok()?;
    let denom: BigInt = denom_text.parse().ok()?;
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Serialized form of an [`EvolutionAlgebra`]: the structure matrix in
/// row-major order as rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub schema_version: u32,
    pub dimension: usize,
    pub structure: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
}

impl AlgebraDocument {
    pub fn from_algebra(algebra: &EvolutionAlgebra, family: Option<String>) -> Self {
        let structure = algebra
            .structure_rows()
            .iter()
            .flat_map(|row| row.iter().map(|entry| entry.to_string()))
            .collect();
        AlgebraDocument {
            schema_version: SCHEMA_VERSION,
            dimension: algebra.dimension(),
            structure,
            family,
        }
    }

    /// Validates every invariant (schema version, matrix length, exact
    /// rational entries) and builds the algebra.
    pub fn to_algebra(&self) -> Result<EvolutionAlgebra> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::UnsupportedSchemaVersion {
                found: self.schema_version,
                supported: SCHEMA_VERSION,
            });
        }
        if self.dimension == 0 {
            return Err(Error::EmptyMatrix);
        }
        let expected = self.dimension * self.dimension;
        if self.structure.len() != expected {
            return Err(Error::MatrixLengthMismatch {
                len: self.structure.len(),
                expected,
                dim: self.dimension,
            });
        }
        let mut rows = Vec::with_capacity(self.dimension);
        for j in 0..self.dimension {
            let mut row = Vec::with_capacity(self.dimension);
            for i in 0..self.dimension {
                let index = j * self.dimension + i;
                let text = &self.structure[index];
                let value = parse_rational(text)
                    .ok_or_else(|| Error::InvalidRational { index, value: text.clone() })?;
                row.push(value);
            }
            rows.push(row);
        }
        EvolutionAlgebra::from_structure_matrix(rows)
    }
}

/// Serialized form of a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDocument { n: g.vertex_count(), edges: g.edges().collect() }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::new(self.n, &self.edges)
    }
}

/// Pretty JSON plus trailing newline; field order is fixed by the struct,
/// so equal documents serialize to equal bytes.
pub fn serialize_document(document: &AlgebraDocument) -> String {
    let mut text = serde_json::to_string_pretty(document).expect("document serializes");
    text.push('\n');
    text
}

/// Parses and fully validates an algebra document. Syntax errors carry
/// the line/column from the JSON parser; semantic errors name the field
/// or entry index.
pub fn deserialize_document(text: &str) -> Result<AlgebraDocument> {
    let document: AlgebraDocument =
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    document.to_algebra()?;
    Ok(document)
}

fn render_linear_combination(coefficients: &[Rational]) -> String {
    use num::traits::One;
    let mut text = String::new();
    for (idx, coefficient) in coefficients.iter().enumerate() {
        if coefficient.is_zero() {
            continue;
        }
        let negative = coefficient < &Rational::zero();
        let magnitude = if negative { -coefficient.clone() } else { coefficient.clone() };
        if text.is_empty() {
            if negative {
                text.push('-');
            }
        } else {
            text.push_str(if negative { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            text.push_str(&magnitude.to_string());
            text.push(' ');
        }
        text.push_str(&format!("e_{}", idx + 1));
    }
    if text.is_empty() {
        text.push('0');
    }
    text
}

/// One line per generator, `e_i^2 = e_j + e_k + ...` with ascending term
/// indices; zero squares print `e_i^2 = 0`. Cross products are implied
/// zero and not listed.
pub fn render_law(algebra: &EvolutionAlgebra) -> String {
    let mut out = String::new();
    for i in 1..=algebra.dimension() {
        let square = algebra.generator_square(i).expect("index in range");
        out.push_str(&format!("e_{i}^2 = {}\n", render_linear_combination(square.coefficients())));
    }
    out
}

/// An element as a signed sum over the generator basis.
pub fn render_element(element: &AlgebraElement) -> String {
    render_linear_combination(element.coefficients())
}

/// Undirected DOT with vertices labeled `e1..en` and edges ascending.
pub fn export_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 1..=g.vertex_count() {
        out.push_str(&format!("  e{v};\n"));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  e{u} -- e{v};\n"));
    }
    out.push_str("}\n");
    out
}
