//! Bipartite graphs and multigraphs with `n` nodes per layer, and face graphs.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Deref;

use crate::bitset::{bits, low_mask};
use crate::matching;

/// Largest supported number of nodes per layer (one `u64` row per upper node).
pub const MAX_NODES: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    Upper,
    Lower,
}

impl Layer {
    pub fn opposite(self) -> Layer {
        match self {
            Layer::Upper => Layer::Lower,
            Layer::Lower => Layer::Upper,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LayeredNode {
    pub layer: Layer,
    pub index: usize,
}

impl LayeredNode {
    pub fn upper(index: usize) -> Self {
        LayeredNode { layer: Layer::Upper, index }
    }

    pub fn lower(index: usize) -> Self {
        LayeredNode { layer: Layer::Lower, index }
    }
}

impl fmt::Display for LayeredNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.layer {
            Layer::Upper => write!(f, "u{}", self.index),
            Layer::Lower => write!(f, "v{}", self.index),
        }
    }
}

/// An edge `(u, v)` between upper node `u` and lower node `v`.
pub type Edge = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    EmptyGraph,
    TooManyNodes { n: usize },
    NodeOutOfRange { edge: Edge, n: usize },
    NoPerfectMatching,
    NotElementary { edge: Edge },
    InvalidPermutation { index: usize },
    PermutationLength { expected: usize, found: usize },
    EmptyPermutationSet,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyGraph => write!(f, "graph has no nodes"),
            GraphError::TooManyNodes { n } => {
                write!(f, "{n} nodes per layer exceeds the supported maximum of {MAX_NODES}")
            }
            GraphError::NodeOutOfRange { edge, n } => {
                write!(f, "edge ({}, {}) refers to a node outside 0..{n}", edge.0, edge.1)
            }
            GraphError::NoPerfectMatching => write!(f, "graph has no perfect matching"),
            GraphError::NotElementary { edge } => {
                write!(f, "edge ({}, {}) lies in no perfect matching", edge.0, edge.1)
            }
            GraphError::InvalidPermutation { index } => {
                write!(f, "permutation {index} is not a bijection")
            }
            GraphError::PermutationLength { expected, found } => {
                write!(f, "permutation of length {found}, expected {expected}")
            }
            GraphError::EmptyPermutationSet => write!(f, "empty permutation set"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A connected component as masks of its upper and lower nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Component {
    pub upper: u64,
    pub lower: u64,
}

impl Component {
    pub fn upper_nodes(&self) -> Vec<usize> {
        bits(self.upper).collect()
    }

    pub fn lower_nodes(&self) -> Vec<usize> {
        bits(self.lower).collect()
    }
}

/// A simple bipartite graph; `rows[u]` is the bitset of lower neighbours of upper node `u`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if n > MAX_NODES {
            return Err(GraphError::TooManyNodes { n });
        }
        Ok(Graph { n, rows: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::NodeOutOfRange { edge: (u, v), n });
            }
            g.rows[u] |= 1 << v;
        }
        Ok(g)
    }

    /// Builds a graph from bitset rows. Panics if `rows` is empty, too long, or has bits at `>= n`.
    pub fn from_rows(rows: Vec<u64>) -> Graph {
        let n = rows.len();
        assert!(n >= 1 && n <= MAX_NODES);
        assert!(rows.iter().all(|&r| r & !low_mask(n) == 0));
        Graph { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row(&self, u: usize) -> u64 {
        self.rows[u]
    }

    /// Bitset of the upper neighbours of lower node `v`.
    pub fn column(&self, v: usize) -> u64 {
        let mut c = 0;
        for (u, &r) in self.rows.iter().enumerate() {
            c |= (r >> v & 1) << u;
        }
        c
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.rows[u] |= 1 << v;
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.rows[u] &= !(1 << v);
        g
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, &r) in self.rows.iter().enumerate() {
            out.extend(bits(r).map(|v| (u, v)));
        }
        out
    }

    pub fn neighbors(&self, node: LayeredNode) -> u64 {
        match node.layer {
            Layer::Upper => self.rows[node.index],
            Layer::Lower => self.column(node.index),
        }
    }

    pub fn degree(&self, node: LayeredNode) -> usize {
        self.neighbors(node).count_ones() as usize
    }

    pub fn upper_degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn lower_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &r in &self.rows {
            for v in bits(r) {
                d[v] += 1;
            }
        }
        d
    }

    /// The graph with the two layers exchanged.
    pub fn transpose(&self) -> Graph {
        let rows = (0..self.n).map(|v| self.column(v)).collect();
        Graph { n: self.n, rows }
    }

    /// Relabels nodes: upper `u` becomes `pu[u]`, lower `v` becomes `pv[v]`.
    pub fn relabel(&self, pu: &[usize], pv: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for (u, &r) in self.rows.iter().enumerate() {
            for v in bits(r) {
                rows[pu[u]] |= 1 << pv[v];
            }
        }
        Graph { n: self.n, rows }
    }

    /// Block-diagonal disjoint union; the nodes of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_NODES {
            return Err(GraphError::TooManyNodes { n });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|&r| r << self.n));
        Ok(Graph { n, rows })
    }

    /// Connected components, ordered by their smallest upper node (components without
    /// upper nodes, i.e. isolated lower nodes, come last in index order).
    pub fn components(&self) -> Vec<Component> {
        let mut out = Vec::new();
        let mut seen_u = 0u64;
        let mut seen_v = 0u64;
        let cols: Vec<u64> = (0..self.n).map(|v| self.column(v)).collect();
        for start in 0..self.n {
            if seen_u >> start & 1 == 1 {
                continue;
            }
            let mut cu = 1u64 << start;
            let mut cv = 0u64;
            let mut fu = cu;
            while fu != 0 {
                let mut nv = 0;
                for u in bits(fu) {
                    nv |= self.rows[u];
                }
                nv &= !cv;
                cv |= nv;
                let mut nu = 0;
                for v in bits(nv) {
                    nu |= cols[v];
                }
                fu = nu & !cu;
                cu |= nu;
            }
            seen_u |= cu;
            seen_v |= cv;
            out.push(Component { upper: cu, lower: cv });
        }
        for v in bits(low_mask(self.n) & !seen_v) {
            out.push(Component { upper: 0, lower: 1 << v });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn has_perfect_matching(&self) -> bool {
        matching::has_perfect_matching(&self.rows, low_mask(self.n), low_mask(self.n))
    }

    /// True iff some perfect matching uses `e`; a maximum-matching test on the graph
    /// with both endpoints removed. `false` if `e` is not an edge.
    pub fn has_pm_containing(&self, e: Edge) -> bool {
        self.has_edge(e.0, e.1) && matching::edge_in_perfect_matching(&self.rows, self.n, e.0, e.1)
    }

    /// The first edge (lexicographically) that lies in no perfect matching.
    pub fn first_non_elementary_edge(&self) -> Option<Edge> {
        self.edges().into_iter().find(|&e| !self.has_pm_containing(e))
    }

    /// Every node has an edge, a perfect matching exists and every edge lies in one.
    pub fn is_elementary(&self) -> bool {
        self.validate_elementary().is_ok()
    }

    fn validate_elementary(&self) -> Result<(), GraphError> {
        if !self.has_perfect_matching() {
            return Err(GraphError::NoPerfectMatching);
        }
        match self.first_non_elementary_edge() {
            Some(edge) => Err(GraphError::NotElementary { edge }),
            None => Ok(()),
        }
    }

    /// All perfect matchings, duplicate-free, in lexicographic order of the map array.
    pub fn perfect_matchings(&self) -> Vec<PerfectMatching> {
        let mut out = Vec::new();
        matching::for_each_perfect_matching(&self.rows, self.n, |m| {
            out.push(PerfectMatching { map: m.to_vec() });
            true
        });
        out
    }

    pub fn count_perfect_matchings_up_to(&self, limit: usize) -> usize {
        matching::count_perfect_matchings_up_to(&self.rows, self.n, limit)
    }
}

/// A perfect matching: `map[u]` is the lower node matched to upper node `u`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PerfectMatching {
    pub map: Vec<usize>,
}

impl PerfectMatching {
    pub fn contains(&self, e: Edge) -> bool {
        self.map[e.0] == e.1
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.map.iter().enumerate().map(|(u, &v)| (u, v))
    }

    /// The matching as bitset rows.
    pub fn rows(&self) -> Vec<u64> {
        self.map.iter().map(|&v| 1u64 << v).collect()
    }
}

/// A non-empty set of permutations of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationSet {
    n: usize,
    perms: BTreeSet<Vec<usize>>,
}

impl PermutationSet {
    pub fn new(perms: impl IntoIterator<Item = Vec<usize>>) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        let mut n = None;
        for (i, p) in perms.into_iter().enumerate() {
            let len = *n.get_or_insert(p.len());
            if p.len() != len {
                return Err(GraphError::PermutationLength { expected: len, found: p.len() });
            }
            let mut seen = vec![false; len];
            for &x in &p {
                if x >= len || seen[x] {
                    return Err(GraphError::InvalidPermutation { index: i });
                }
                seen[x] = true;
            }
            set.insert(p);
        }
        match n {
            None => Err(GraphError::EmptyPermutationSet),
            Some(n) => Ok(PermutationSet { n, perms: set }),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.perms.iter()
    }
}

/// The graph with an edge `(i, sigma(i))` for every permutation `sigma` in the set.
pub fn graph_from_permutations(sigma: &PermutationSet) -> Result<FaceGraph, GraphError> {
    let mut g = Graph::empty(sigma.n())?;
    for p in sigma.iter() {
        for (u, &v) in p.iter().enumerate() {
            g.rows[u] |= 1 << v;
        }
    }
    FaceGraph::new(g)
}

/// An elementary bipartite graph. Immutable once validated.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceGraph {
    graph: Graph,
    components: usize,
}

impl FaceGraph {
    pub fn new(graph: Graph) -> Result<FaceGraph, GraphError> {
        graph.validate_elementary()?;
        let components = graph.components().len();
        Ok(FaceGraph { graph, components })
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<FaceGraph, GraphError> {
        FaceGraph::new(Graph::from_edges(n, edges)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// `m - 2n + k`.
    pub fn dimension(&self) -> usize {
        self.graph.edge_count() + self.components - 2 * self.graph.n
    }

    /// Number of ears over all components: each component with `n_i` nodes per layer
    /// and `m_i` edges has `m_i - 2n_i + 1`, which sums to `m - 2n + k`. A single-edge
    /// component has none.
    pub fn ear_count(&self) -> usize {
        self.dimension()
    }

    /// Components as stand-alone face graphs, in component order.
    pub fn component_graphs(&self) -> Vec<FaceGraph> {
        self.graph
            .components()
            .iter()
            .map(|c| {
                let us = c.upper_nodes();
                let vs = c.lower_nodes();
                let mut pos = [usize::MAX; MAX_NODES];
                for (i, &v) in vs.iter().enumerate() {
                    pos[v] = i;
                }
                let rows = us
                    .iter()
                    .map(|&u| bits(self.graph.rows[u]).fold(0u64, |acc, v| acc | 1 << pos[v]))
                    .collect();
                FaceGraph::new(Graph::from_rows(rows)).expect("component of a face graph is a face graph")
            })
            .collect()
    }

    pub fn product(&self, other: &FaceGraph) -> Result<FaceGraph, GraphError> {
        FaceGraph::new(self.graph.disjoint_union(&other.graph)?)
    }

    pub fn transpose(&self) -> FaceGraph {
        FaceGraph { graph: self.graph.transpose(), components: self.components }
    }
}

impl Deref for FaceGraph {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.graph
    }
}

/// A bipartite multigraph; `mult[u * n + v]` parallel edges join upper `u` and lower `v`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiGraph {
    n: usize,
    mult: Vec<u32>,
}

impl MultiGraph {
    pub fn new(n: usize, mult: Vec<u32>) -> Result<MultiGraph, GraphError> {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        if n > MAX_NODES {
            return Err(GraphError::TooManyNodes { n });
        }
        assert_eq!(mult.len(), n * n, "multiplicity matrix must be n x n");
        Ok(MultiGraph { n, mult })
    }

    pub fn from_entries(n: usize, entries: &[(usize, usize, u32)]) -> Result<MultiGraph, GraphError> {
        let mut g = MultiGraph::new(n, vec![0; n * n])?;
        for &(u, v, c) in entries {
            if u >= n || v >= n {
                return Err(GraphError::NodeOutOfRange { edge: (u, v), n });
            }
            g.mult[u * n + v] += c;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    pub fn edge_count(&self) -> usize {
        self.mult.iter().map(|&c| c as usize).sum()
    }

    /// Entries `(u, v, count)` with `count >= 1`, lexicographic.
    pub fn entries(&self) -> Vec<(usize, usize, u32)> {
        let n = self.n;
        (0..n * n).filter(|&i| self.mult[i] > 0).map(|i| (i / n, i % n, self.mult[i])).collect()
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&c| c <= 1)
    }

    /// The underlying simple graph.
    pub fn support(&self) -> Graph {
        let n = self.n;
        let rows = (0..n)
            .map(|u| (0..n).filter(|&v| self.mult(u, v) > 0).fold(0u64, |acc, v| acc | 1 << v))
            .collect();
        Graph { n, rows }
    }

    /// Degree counting multiplicities.
    pub fn degree(&self, node: LayeredNode) -> usize {
        let n = self.n;
        match node.layer {
            Layer::Upper => (0..n).map(|v| self.mult(node.index, v) as usize).sum(),
            Layer::Lower => (0..n).map(|u| self.mult(u, node.index) as usize).sum(),
        }
    }

    pub fn transpose(&self) -> MultiGraph {
        let n = self.n;
        let mut mult = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                mult[v * n + u] = self.mult[u * n + v];
            }
        }
        MultiGraph { n, mult }
    }

    /// Elementary iff the support is: multiplicities do not affect which node pairs can be matched.
    pub fn is_elementary(&self) -> bool {
        self.support().is_elementary()
    }

    /// `m - 2n + k`, with `m` counting multiplicities.
    pub fn dimension(&self) -> Result<usize, GraphError> {
        let s = self.support();
        s.validate_elementary()?;
        Ok(self.edge_count() + s.components().len() - 2 * self.n)
    }

    /// Number of perfect matchings counting parallel edges as distinct.
    pub fn count_perfect_matchings(&self) -> u64 {
        let s = self.support();
        let mut total = 0u64;
        matching::for_each_perfect_matching(s.rows(), self.n, |m| {
            total += m.iter().enumerate().map(|(u, &v)| self.mult(u, v) as u64).product::<u64>();
            true
        });
        total
    }

    /// Replaces all but one edge of every parallel bundle `(u, v)` by a path
    /// `u - v' - u' - v` through two new nodes. Bundles are processed in lexicographic
    /// order and new nodes are appended in that order.
    pub fn resolution(&self) -> Result<FaceGraph, GraphError> {
        let extra: usize = self.mult.iter().map(|&c| c.saturating_sub(1) as usize).sum();
        let n2 = self.n + extra;
        if n2 > MAX_NODES {
            return Err(GraphError::TooManyNodes { n: n2 });
        }
        let mut rows = vec![0u64; n2];
        let mut next = self.n;
        for (u, v, c) in self.entries() {
            rows[u] |= 1 << v;
            for _ in 1..c {
                let (u2, v2) = (next, next);
                next += 1;
                rows[u] |= 1 << v2;
                rows[u2] |= 1 << v2 | 1 << v;
            }
        }
        FaceGraph::new(Graph { n: n2, rows })
    }
}

impl From<&Graph> for MultiGraph {
    fn from(g: &Graph) -> MultiGraph {
        let n = g.n;
        let mut mult = vec![0; n * n];
        for u in 0..n {
            for v in bits(g.rows[u]) {
                mult[u * n + v] = 1;
            }
        }
        MultiGraph { n, mult }
    }
}

impl From<&FaceGraph> for MultiGraph {
    fn from(g: &FaceGraph) -> MultiGraph {
        MultiGraph::from(&g.graph)
    }
}
