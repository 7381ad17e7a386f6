//! Simple-graph data model and structural maps.
//!
//! Vertices are 1-based throughout, matching the generator subscripts
//! `e_1..e_n` used by the algebra layer. Graphs are immutable after
//! construction and every operation here is a pure function, so values can
//! be shared freely across threads.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Largest graph accepted by the isomorphism search. Larger inputs get a
/// resource error, never a silent wrong answer.
pub const MAX_ISO_VERTICES: usize = 32;

/// A finite simple undirected graph on vertices `1..=vertex_count`.
///
/// Edges are stored canonically as `(min, max)` pairs in a sorted set, so
/// iteration order is deterministic and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from an edge list, canonicalizing each pair with the
    /// smaller endpoint first.
    ///
    /// Loops, endpoints out of range, and duplicate edges (in either
    /// orientation) are reported as errors rather than silently dropped.
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::ZeroVertices);
        }
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if u < 1 || v < 1 || u > vertex_count || v > vertex_count {
                return Err(Error::EdgeOutOfRange { u, v, n: vertex_count });
            }
            let pair = (u.min(v), u.max(v));
            if !set.insert(pair) {
                return Err(Error::DuplicateEdge { u: pair.0, v: pair.1 });
            }
        }
        Ok(Graph { vertex_count, edges: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in ascending `(u, v)` order with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        (1..=self.vertex_count).contains(&v)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if self.contains_vertex(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { v, n: self.vertex_count })
        }
    }

    /// The vertices adjacent to `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut out: Vec<usize> = (1..=self.vertex_count).filter(|&u| self.has_edge(u, v)).collect();
        out.sort_unstable();
        Ok(out)
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    /// The symmetric 0/1 adjacency matrix, `matrix[i-1][j-1] = 1` iff
    /// `{i,j}` is an edge.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.vertex_count;
        let mut m = vec![vec![0u8; n]; n];
        for (u, v) in self.edges() {
            m[u - 1][v - 1] = 1;
            m[v - 1][u - 1] = 1;
        }
        m
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (1..=self.vertex_count).all(|v| self.neighbors(v).map(|ns| ns.len() == k).unwrap_or(false))
    }

    /// Adjacency lists for the whole graph, index 0 unused.
    pub(crate) fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count + 1];
        for (u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

/// A directed graph on vertices `1..=vertex_count`. Loops are permitted:
/// a general evolution law may let a generator square reference itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    vertex_count: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::ZeroVertices);
        }
        let mut set = BTreeSet::new();
        for &(u, v) in arcs {
            if u < 1 || v < 1 || u > vertex_count || v > vertex_count {
                return Err(Error::ArcOutOfRange { u, v, n: vertex_count });
            }
            if !set.insert((u, v)) {
                return Err(Error::DuplicateArc { u, v });
            }
        }
        Ok(Digraph { vertex_count, arcs: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }
}

/// An injective map of generator (vertex) indices, one image per source
/// vertex. Image range is checked when the map is applied to a target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMap {
    images: Vec<usize>,
}

impl GeneratorMap {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &im in &images {
            if im == 0 {
                return Err(Error::MapImageOutOfRange { image: 0, n: 0 });
            }
            if !seen.insert(im) {
                return Err(Error::MapNotInjective { image: im });
            }
        }
        Ok(GeneratorMap { images })
    }

    pub fn identity(n: usize) -> Self {
        GeneratorMap { images: (1..=n).collect() }
    }

    pub fn source_size(&self) -> usize {
        self.images.len()
    }

    /// Image of source vertex `v` (1-based). Panics if `v` is outside the
    /// source range; use [`GeneratorMap::source_size`] to check first.
    pub fn image(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// The inverse map, when the images are exactly a permutation of
    /// `1..=source_size`.
    pub fn inverse(&self) -> Option<GeneratorMap> {
        let n = self.images.len();
        let mut inv = vec![0usize; n];
        for (i, &im) in self.images.iter().enumerate() {
            if im < 1 || im > n || inv[im - 1] != 0 {
                return None;
            }
            inv[im - 1] = i + 1;
        }
        Some(GeneratorMap { images: inv })
    }

    fn check_against(&self, sub: &Graph, sup: &Graph) -> Result<()> {
        if self.images.len() != sub.vertex_count() {
            return Err(Error::MapSizeMismatch { have: self.images.len(), want: sub.vertex_count() });
        }
        for &im in &self.images {
            if !sup.contains_vertex(im) {
                return Err(Error::MapImageOutOfRange { image: im, n: sup.vertex_count() });
            }
        }
        Ok(())
    }
}

/// True iff `map` injects `sub`'s vertices into `sup` and every `sub` edge
/// lands on a `sup` edge.
pub fn is_subgraph_embedding(sub: &Graph, sup: &Graph, map: &GeneratorMap) -> Result<bool> {
    map.check_against(sub, sup)?;
    Ok(sub.edges().all(|(u, v)| sup.has_edge(map.image(u), map.image(v))))
}

/// Adjacency-preserving map check; injectivity is not required, so vertex
/// images may collide as long as no edge collapses onto a missing edge.
pub fn is_graph_morphism(g1: &Graph, g2: &Graph, images: &[usize]) -> Result<bool> {
    if images.len() != g1.vertex_count() {
        return Err(Error::MapSizeMismatch { have: images.len(), want: g1.vertex_count() });
    }
    for &im in images {
        if !g2.contains_vertex(im) {
            return Err(Error::MapImageOutOfRange { image: im, n: g2.vertex_count() });
        }
    }
    Ok(g1.edges().all(|(u, v)| g2.has_edge(images[u - 1], images[v - 1])))
}

/// Searches for an isomorphism `g1 -> g2` by iterated degree-partition
/// refinement plus backtracking. Candidates are tried by refinement class
/// and then by ascending index, so the returned witness is deterministic.
///
/// `None` means the search space was exhausted: the graphs are certifiably
/// non-isomorphic. Graphs above [`MAX_ISO_VERTICES`] are refused.
pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<GeneratorMap>> {
    let n = g1.vertex_count();
    for g in [g1, g2] {
        if g.vertex_count() > MAX_ISO_VERTICES {
            return Err(Error::ResourceBound {
                operation: "isomorphism search",
                unit: "vertices",
                limit: MAX_ISO_VERTICES,
                actual: g.vertex_count(),
            });
        }
    }
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }

    let (colors1, colors2) = match joint_refinement(g1, g2) {
        Some(pair) => pair,
        None => return Ok(None),
    };

    let adj1 = g1.adjacency_lists();

    // Order g1's vertices so each one (after the first in its component)
    // already has a mapped neighbor; that anchors the candidate set.
    let order = anchored_order(&adj1, n);

    let mut search = IsoSearch {
        g1,
        g2,
        order,
        colors1,
        colors2,
        mapping: vec![0usize; n + 1],
        used: vec![false; n + 1],
    };
    if search.backtrack(0) {
        let images: Vec<usize> = (1..=n).map(|v| search.mapping[v]).collect();
        Ok(Some(GeneratorMap::new(images).expect("backtracking produces an injective map")))
    } else {
        Ok(None)
    }
}

struct IsoSearch<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    order: Vec<usize>,
    colors1: Vec<usize>,
    colors2: Vec<usize>,
    mapping: Vec<usize>, // g1 -> g2, 0 = unmapped
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn backtrack(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let v = self.order[pos];
        for w in 1..=self.g2.vertex_count() {
            if self.used[w] || self.colors2[w] != self.colors1[v] {
                continue;
            }
            // Adjacency must agree in both directions with everything
            // already mapped.
            let consistent = (1..=self.g1.vertex_count()).all(|u| {
                let mu = self.mapping[u];
                mu == 0 || self.g1.has_edge(v, u) == self.g2.has_edge(w, mu)
            });
            if !consistent {
                continue;
            }
            self.mapping[v] = w;
            self.used[w] = true;
            if self.backtrack(pos + 1) {
                return true;
            }
            self.mapping[v] = 0;
            self.used[w] = false;
        }
        false
    }
}

/// Iterated neighbor-color refinement run jointly on both graphs so class
/// ids are comparable. Returns `None` as soon as the color histograms
/// diverge (a cheap non-isomorphism certificate).
fn joint_refinement(g1: &Graph, g2: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    use std::collections::BTreeMap;

    let n = g1.vertex_count();
    let adj1 = g1.adjacency_lists();
    let adj2 = g2.adjacency_lists();

    let mut c1: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { adj1[v].len() }).collect();
    let mut c2: Vec<usize> = (0..=n).map(|v| if v == 0 { 0 } else { adj2[v].len() }).collect();

    for _ in 0..n {
        let sig = |adj: &Vec<Vec<usize>>, colors: &[usize], v: usize| {
            let mut ns: Vec<usize> = adj[v].iter().map(|&u| colors[u]).collect();
            ns.sort_unstable();
            (colors[v], ns)
        };
        let mut table: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        let next = |t: &mut BTreeMap<(usize, Vec<usize>), usize>, key: (usize, Vec<usize>)| {
            let id = t.len();
            *t.entry(key).or_insert(id)
        };
        let mut n1 = vec![0usize; n + 1];
        let mut n2 = vec![0usize; n + 1];
        #[allow(clippy::needless_range_loop)] // index 0 is a sentinel
        for v in 1..=n {
            n1[v] = next(&mut table, sig(&adj1, &c1, v));
            n2[v] = next(&mut table, sig(&adj2, &c2, v));
        }
        let mut h1 = n1[1..].to_vec();
        let mut h2 = n2[1..].to_vec();
        h1.sort_unstable();
        h2.sort_unstable();
        if h1 != h2 {
            return None;
        }
        let stable = n1 == c1 && n2 == c2;
        c1 = n1;
        c2 = n2;
        if stable {
            break;
        }
    }
    Some((c1, c2))
}

fn anchored_order(adj: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n + 1];
    while order.len() < n {
        // Prefer the unplaced vertex with the most placed neighbors,
        // breaking ties by index; seeds a new component when none qualify.
        let mut best: Option<(usize, usize)> = None;
        for v in 1..=n {
            if placed[v] {
                continue;
            }
            let anchors = adj[v].iter().filter(|&&u| placed[u]).count();
            let better = match best {
                None => true,
                Some((b_anchors, _)) => anchors > b_anchors,
            };
            if better {
                best = Some((anchors, v));
            }
        }
        let (_, v) = best.expect("some vertex is unplaced");
        placed[v] = true;
        order.push(v);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn star3() -> Graph {
        Graph::new(4, &[(1, 4), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn builds_star_with_canonical_edges() {
        let g = Graph::new(4, &[(4, 1), (2, 4), (3, 4)]).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn single_isolated_vertex() {
        let g = Graph::new(1, &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.neighbors(1).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn rejects_duplicate_edge_in_either_orientation() {
        let err = Graph::new(3, &[(1, 2), (2, 1)]).unwrap_err();
        assert_eq!(err, Error::DuplicateEdge { u: 1, v: 2 });
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(Graph::new(3, &[(2, 2)]).unwrap_err(), Error::LoopEdge(2));
        assert!(matches!(Graph::new(3, &[(1, 4)]).unwrap_err(), Error::EdgeOutOfRange { .. }));
        assert_eq!(Graph::new(0, &[]).unwrap_err(), Error::ZeroVertices);
    }

    #[test]
    fn neighbors_of_star_center_and_leaf() {
        let g = star3();
        assert_eq!(g.neighbors(4).unwrap(), vec![1, 2, 3]);
        assert_eq!(g.neighbors(1).unwrap(), vec![4]);
        assert!(matches!(g.neighbors(5).unwrap_err(), Error::VertexOutOfRange { .. }));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn adjacency_matrix_of_star_and_triangle() {
        let m = star3().adjacency_matrix();
        for i in 0..4 {
            assert_eq!(m[i][i], 0);
            for j in 0..4 {
                assert_eq!(m[i][j], m[j][i]);
                let expected = (i == 3 && j < 3) || (j == 3 && i < 3);
                assert_eq!(m[i][j] == 1, expected);
            }
        }
        // C_3, edges enumerated by hand: {1,2},{2,3},{1,3}.
        let c3 = Graph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(c3.adjacency_matrix(), vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let empty = Graph::new(3, &[]).unwrap();
        assert_eq!(empty.adjacency_matrix(), vec![vec![0; 3]; 3]);
    }

    #[test]
    fn generator_map_rejects_repeats() {
        assert!(matches!(
            GeneratorMap::new(vec![1, 2, 2]).unwrap_err(),
            Error::MapNotInjective { image: 2 }
        ));
        let id = GeneratorMap::identity(3);
        assert_eq!(id.images(), &[1, 2, 3]);
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn subgraph_embedding_examples() {
        // S_4 (leaves 1..4, center 5) sits inside the butterfly F_2 under
        // the identity.
        let s4 = Graph::new(5, &[(1, 5), (2, 5), (3, 5), (4, 5)]).unwrap();
        let f2 = Graph::new(5, &[(1, 5), (2, 5), (3, 5), (4, 5), (2, 3), (1, 4)]).unwrap();
        let id5 = GeneratorMap::identity(5);
        assert!(is_subgraph_embedding(&s4, &f2, &id5).unwrap());

        // F_2 sits inside the wheel W_5 (rim 1..4, hub 5): the rim pairs
        // {2,3} and {4,1} are rim edges of the wheel.
        let w5 = Graph::new(
            5,
            &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5)],
        )
        .unwrap();
        assert!(is_subgraph_embedding(&f2, &w5, &id5).unwrap());

        // C_3 does not embed in the path P_3.
        let c3 = Graph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        let p3 = Graph::new(3, &[(1, 2), (2, 3)]).unwrap();
        assert!(!is_subgraph_embedding(&c3, &p3, &GeneratorMap::identity(3)).unwrap());

        let short = GeneratorMap::new(vec![1, 2]).unwrap();
        assert!(matches!(
            is_subgraph_embedding(&c3, &p3, &short).unwrap_err(),
            Error::MapSizeMismatch { .. }
        ));
    }

    #[test]
    fn morphism_examples() {
        let c4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let k2 = Graph::new(2, &[(1, 2)]).unwrap();
        assert!(is_graph_morphism(&c4, &k2, &[1, 2, 1, 2]).unwrap());

        let g = star3();
        assert!(is_graph_morphism(&g, &g, &[1, 2, 3, 4]).unwrap());

        // K_3 -> K_2 always collapses an edge onto a single vertex.
        let k3 = Graph::new(3, &[(1, 2), (2, 3), (1, 3)]).unwrap();
        for a in 1..=2usize {
            for b in 1..=2usize {
                for c in 1..=2usize {
                    assert!(!is_graph_morphism(&k3, &k2, &[a, b, c]).unwrap());
                }
            }
        }

        assert!(matches!(
            is_graph_morphism(&c4, &k2, &[1, 2, 1, 3]).unwrap_err(),
            Error::MapImageOutOfRange { .. }
        ));
    }

    #[test]
    fn isomorphism_finds_cycle_relabeling() {
        let c5 = Graph::new(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        let relabeled = Graph::new(5, &[(3, 5), (5, 2), (2, 4), (4, 1), (3, 1)]).unwrap();
        let witness = is_isomorphic(&c5, &relabeled).unwrap().expect("cycles are isomorphic");
        assert!(is_subgraph_embedding(&c5, &relabeled, &witness).unwrap());
        let inv = witness.inverse().unwrap();
        assert!(is_subgraph_embedding(&relabeled, &c5, &inv).unwrap());
    }

    #[test]
    fn isomorphism_rejects_k33_vs_c6() {
        // Edge counts alone separate them: 9 vs 6.
        let k33 = Graph::new(
            6,
            &[(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)],
        )
        .unwrap();
        let c6 = Graph::new(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]).unwrap();
        assert_ne!(k33.edge_count(), c6.edge_count());
        assert!(is_isomorphic(&k33, &c6).unwrap().is_none());
    }

    #[test]
    fn isomorphism_respects_size_limit() {
        let big = Graph::new(33, &[]).unwrap();
        assert!(is_isomorphic(&big, &big).unwrap_err().is_resource_bound());
    }

    #[test]
    fn isomorphism_distinguishes_same_degree_sequence() {
        // Two cubic graphs on 6 vertices: K_{3,3} and the triangular prism.
        let k33 = Graph::new(
            6,
            &[(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)],
        )
        .unwrap();
        let prism =
            Graph::new(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)])
                .unwrap();
        assert!(is_isomorphic(&k33, &prism).unwrap().is_none());
    }

    #[test]
    fn digraph_allows_loops_rejects_duplicates() {
        let d = Digraph::new(2, &[(1, 1), (1, 2)]).unwrap();
        assert!(d.has_arc(1, 1));
        assert_eq!(Digraph::new(2, &[(1, 2), (1, 2)]).unwrap_err(), Error::DuplicateArc { u: 1, v: 2 });
    }
}
