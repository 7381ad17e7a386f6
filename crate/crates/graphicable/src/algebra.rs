//! Evolution-algebra arithmetic over exact rationals.
//!
//! An evolution algebra on generators `e_1..e_n` multiplies by
//! `e_i * e_j = 0` for `i != j` and `e_i * e_i = sum_j a_ji e_j`. The
//! whole layer works in arbitrary-precision rationals; there is no
//! tolerance parameter anywhere, every comparison is exact.
//!
//! The structure matrix stores `a_ji` at row `j`, column `i`, so column
//! `i` spells out `e_i^2`. The S-graphicable test (0/1 entries, symmetric,
//! zero diagonal) then reads the matrix directly, and a graphicable
//! algebra's matrix coincides with the adjacency matrix of its graph.

use num::traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result, SGraphicabilityViolation};
use crate::graph::{Digraph, Graph};

/// Exact rational scalar used throughout the algebra layer.
pub type Rational = num::BigRational;

fn rational_int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// An element written over the generator basis `{e_1, .., e_n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    coefficients: Vec<Rational>,
}

impl AlgebraElement {
    pub fn new(coefficients: Vec<Rational>) -> Self {
        AlgebraElement { coefficients }
    }

    pub fn zero(dimension: usize) -> Self {
        AlgebraElement { coefficients: vec![Rational::zero(); dimension] }
    }

    /// The basis generator `e_i` (1-based). Panics if `i` is out of range.
    pub fn basis(dimension: usize, i: usize) -> Self {
        assert!((1..=dimension).contains(&i), "basis index {i} out of 1..={dimension}");
        let mut coefficients = vec![Rational::zero(); dimension];
        coefficients[i - 1] = Rational::one();
        AlgebraElement { coefficients }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        AlgebraElement { coefficients: values.iter().map(|&v| rational_int(v)).collect() }
    }

    pub fn dimension(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Coefficient of `e_i` (1-based). Panics if out of range.
    pub fn coefficient(&self, i: usize) -> &Rational {
        &self.coefficients[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(|c| c.is_zero())
    }

    /// Componentwise sum. Panics on dimension mismatch.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dimension(), other.dimension(), "element dimensions differ");
        AlgebraElement {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise difference. Panics on dimension mismatch.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dimension(), other.dimension(), "element dimensions differ");
        AlgebraElement {
            coefficients: self
                .coefficients
                .iter()
                .zip(&other.coefficients)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, scalar: &Rational) -> Self {
        AlgebraElement { coefficients: self.coefficients.iter().map(|c| c * scalar).collect() }
    }
}

/// A finite-dimensional evolution algebra given by its structure matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvolutionAlgebra {
    dimension: usize,
    structure: Vec<Vec<Rational>>,
    graphicable: bool,
}

impl EvolutionAlgebra {
    /// Wraps a square matrix of structure constants; the graphicable flag
    /// (all entries 0 or 1) is computed once here.
    pub fn from_structure_matrix(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let dimension = rows.len();
        if dimension == 0 {
            return Err(Error::EmptyMatrix);
        }
        for (idx, row) in rows.iter().enumerate() {
            if row.len() != dimension {
                return Err(Error::NonSquareMatrix { row: idx + 1, len: row.len(), dim: dimension });
            }
        }
        let graphicable = rows
            .iter()
            .flatten()
            .all(|entry| entry.is_zero() || entry.is_one());
        Ok(EvolutionAlgebra { dimension, structure: rows, graphicable })
    }

    /// The algebra associated with a simple graph: `e_i^2` sums the
    /// neighbors of vertex `i`, so the structure matrix is exactly the
    /// adjacency matrix.
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.vertex_count();
        let adj = g.adjacency_matrix();
        let structure = (0..n)
            .map(|j| (0..n).map(|i| rational_int(adj[j][i] as i64)).collect())
            .collect();
        EvolutionAlgebra { dimension: n, structure, graphicable: true }
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// `a_ji`: the coefficient of `e_j` in `e_i^2` (1-based). Panics if
    /// either index is out of range.
    pub fn coefficient(&self, j: usize, i: usize) -> &Rational {
        &self.structure[j - 1][i - 1]
    }

    pub fn structure_rows(&self) -> &[Vec<Rational>] {
        &self.structure
    }

    /// True iff every structure constant is 0 or 1.
    pub fn is_graphicable(&self) -> bool {
        self.graphicable
    }

    /// The directed graph on the generators with an arc `(i, j)` exactly
    /// when `e_j` appears in `e_i^2`. Requires a graphicable algebra.
    pub fn to_digraph(&self) -> Result<Digraph> {
        if !self.graphicable {
            let (j, i, value) = self
                .first_non_binary()
                .expect("non-graphicable algebra has a non-binary entry");
            return Err(Error::NotGraphicable { row: j, col: i, value });
        }
        let mut arcs = Vec::new();
        for i in 1..=self.dimension {
            for j in 1..=self.dimension {
                if self.coefficient(j, i).is_one() {
                    arcs.push((i, j));
                }
            }
        }
        Digraph::new(self.dimension, &arcs)
    }

    pub(crate) fn first_non_binary(&self) -> Option<(usize, usize, String)> {
        for j in 1..=self.dimension {
            for i in 1..=self.dimension {
                let entry = self.coefficient(j, i);
                if !entry.is_zero() && !entry.is_one() {
                    return Some((j, i, entry.to_string()));
                }
            }
        }
        None
    }

    /// First violation of the S-graphicability conditions in scan order:
    /// non-binary entries (row-major), then the diagonal, then symmetry on
    /// the upper triangle. `None` means the algebra is S-graphicable.
    pub fn s_graphicability_violation(&self) -> Option<SGraphicabilityViolation> {
        if let Some((row, col, value)) = self.first_non_binary() {
            return Some(SGraphicabilityViolation::NonBinary { row, col, value });
        }
        for i in 1..=self.dimension {
            if !self.coefficient(i, i).is_zero() {
                return Some(SGraphicabilityViolation::NonzeroDiagonal { i });
            }
        }
        for i in 1..=self.dimension {
            for j in (i + 1)..=self.dimension {
                if self.coefficient(i, j) != self.coefficient(j, i) {
                    return Some(SGraphicabilityViolation::Asymmetric { i, j });
                }
            }
        }
        None
    }

    /// True iff the structure matrix is 0/1, symmetric, with zero
    /// diagonal — exactly the algebras arising from simple graphs.
    pub fn is_s_graphicable(&self) -> bool {
        self.s_graphicability_violation().is_none()
    }

    /// The simple graph whose adjacency matrix equals the structure
    /// matrix; inverse of [`EvolutionAlgebra::from_graph`]. Fails with the
    /// first violated condition and its location.
    pub fn to_graph(&self) -> Result<Graph> {
        if let Some(violation) = self.s_graphicability_violation() {
            return Err(Error::NotSGraphicable(violation));
        }
        let mut edges = Vec::new();
        for i in 1..=self.dimension {
            for j in (i + 1)..=self.dimension {
                if self.coefficient(j, i).is_one() {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(self.dimension, &edges)
    }

    /// Bilinear product: `x * y = sum_i x_i y_i e_i^2`, since distinct
    /// generators multiply to zero.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        for e in [x, y] {
            if e.dimension() != self.dimension {
                return Err(Error::DimensionMismatch { left: self.dimension, right: e.dimension() });
            }
        }
        let mut result = vec![Rational::zero(); self.dimension];
        for i in 0..self.dimension {
            let w = &x.coefficients[i] * &y.coefficients[i];
            if w.is_zero() {
                continue;
            }
            for (j, row) in self.structure.iter().enumerate() {
                if !row[i].is_zero() {
                    result[j] += &row[i] * &w;
                }
            }
        }
        Ok(AlgebraElement::new(result))
    }

    /// `e_i^2` as an element: column `i` of the structure matrix.
    pub fn generator_square(&self, i: usize) -> Result<AlgebraElement> {
        if i < 1 || i > self.dimension {
            return Err(Error::GeneratorOutOfRange { index: i, dim: self.dimension });
        }
        Ok(AlgebraElement::new(self.structure.iter().map(|row| row[i - 1].clone()).collect()))
    }

    /// Exercises commutativity (`x*y = y*x`) and flexibility
    /// (`(x*y)*x = x*(y*x)`) on `trials` pseudorandom integer-coefficient
    /// pairs drawn from a seeded generator. Comparisons are exact; any
    /// violation is reported with its witness pair.
    pub fn check_identities(&self, trials: usize, coefficient_range: i64, seed: u64) -> IdentityReport {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut report = IdentityReport {
            trials,
            coefficient_range,
            seed,
            commutativity_violations: Vec::new(),
            flexibility_violations: Vec::new(),
        };
        let range = coefficient_range.abs();
        for _ in 0..trials {
            let draw = |rng: &mut ChaCha8Rng| {
                AlgebraElement::new(
                    (0..self.dimension)
                        .map(|_| rational_int(rng.random_range(-range..=range)))
                        .collect(),
                )
            };
            let x = draw(&mut rng);
            let y = draw(&mut rng);
            let xy = self.multiply(&x, &y).expect("dimensions match");
            let yx = self.multiply(&y, &x).expect("dimensions match");
            if xy != yx {
                report.commutativity_violations.push(IdentityViolation {
                    x: x.clone(),
                    y: y.clone(),
                    left: xy.clone(),
                    right: yx.clone(),
                });
            }
            let left = self.multiply(&xy, &x).expect("dimensions match");
            let right = self.multiply(&x, &yx).expect("dimensions match");
            if left != right {
                report.flexibility_violations.push(IdentityViolation { x, y, left, right });
            }
        }
        report
    }

    /// Searches for elements with `(x*y)*z != x*(y*z)`.
    ///
    /// The grid is fixed and documented so an "absent" answer is
    /// reproducible: first all generator triples `(e_i, e_j, e_k)` in
    /// ascending index order, then all triples of 0/1-coefficient vectors
    /// of support at most 2, ordered by support size and then by support
    /// indices, in odometer order. A zero structure matrix short-circuits
    /// to `None` (every product already vanishes).
    pub fn find_nonassociative_witness(&self) -> Option<NonassociativityWitness> {
        if self.structure.iter().flatten().all(|c| c.is_zero()) {
            return None;
        }
        let n = self.dimension;
        let basis: Vec<AlgebraElement> = (1..=n).map(|i| AlgebraElement::basis(n, i)).collect();
        if let Some(witness) = self.associator_scan(&basis) {
            return Some(witness);
        }
        let mut candidates: Vec<AlgebraElement> = basis;
        candidates.push(AlgebraElement::zero(n));
        for i in 1..=n {
            for j in (i + 1)..=n {
                candidates.push(AlgebraElement::basis(n, i).add(&AlgebraElement::basis(n, j)));
            }
        }
        self.associator_scan(&candidates)
    }

    fn associator_scan(&self, candidates: &[AlgebraElement]) -> Option<NonassociativityWitness> {
        for x in candidates {
            for y in candidates {
                let xy = self.multiply(x, y).expect("dimensions match");
                for z in candidates {
                    let left = self.multiply(&xy, z).expect("dimensions match");
                    let yz = self.multiply(y, z).expect("dimensions match");
                    let right = self.multiply(x, &yz).expect("dimensions match");
                    if left != right {
                        return Some(NonassociativityWitness {
                            x: x.clone(),
                            y: y.clone(),
                            z: z.clone(),
                            left,
                            right,
                        });
                    }
                }
            }
        }
        None
    }
}

/// One failed identity instance, with both sides evaluated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityViolation {
    pub x: AlgebraElement,
    pub y: AlgebraElement,
    pub left: AlgebraElement,
    pub right: AlgebraElement,
}

/// Outcome of a randomized commutativity/flexibility audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub trials: usize,
    pub coefficient_range: i64,
    pub seed: u64,
    pub commutativity_violations: Vec<IdentityViolation>,
    pub flexibility_violations: Vec<IdentityViolation>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.commutativity_violations.is_empty() && self.flexibility_violations.is_empty()
    }
}

/// Elements certifying `(x*y)*z != x*(y*z)`, with both sides included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonassociativityWitness {
    pub x: AlgebraElement,
    pub y: AlgebraElement,
    pub z: AlgebraElement,
    pub left: AlgebraElement,
    pub right: AlgebraElement,
}
