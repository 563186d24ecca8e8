//! Constructions of new faces from old: products, circular connections, pyramids, wedges
//! over facets and their complements, and (reduced) joined products.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::low_mask;
use crate::faces::{self, FacetDefiningSet};
use crate::graph::{Edge, FaceGraph, Graph, GraphError, MAX_NODES};
use crate::matching;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    InvalidPyramidal { reason: String },
    Precondition { reason: String },
    Graph(GraphError),
}

impl fmt::Display for ConstructionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionError::InvalidPyramidal { reason } => write!(f, "invalid pyramidal set: {reason}"),
            ConstructionError::Precondition { reason } => write!(f, "precondition failed: {reason}"),
            ConstructionError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ConstructionError {}

impl From<GraphError> for ConstructionError {
    fn from(e: GraphError) -> Self {
        ConstructionError::Graph(e)
    }
}

fn precondition(reason: impl Into<String>) -> ConstructionError {
    ConstructionError::Precondition { reason: reason.into() }
}

fn invalid(reason: impl Into<String>) -> ConstructionError {
    ConstructionError::InvalidPyramidal { reason: reason.into() }
}

/// The `d`-cube: `d` disjoint 4-cycles. The 0-cube is a single edge.
pub fn cube(d: usize) -> FaceGraph {
    if d == 0 {
        return point();
    }
    let edges: Vec<Edge> =
        (0..d).flat_map(|i| [(2 * i, 2 * i), (2 * i, 2 * i + 1), (2 * i + 1, 2 * i), (2 * i + 1, 2 * i + 1)]).collect();
    FaceGraph::from_edges(2 * d, &edges).expect("disjoint 4-cycles form a face graph")
}

pub fn point() -> FaceGraph {
    FaceGraph::from_edges(1, &[(0, 0)]).expect("single edge")
}

pub fn segment() -> FaceGraph {
    cube(1)
}

/// The triangle: `K_{3,3}` without two disjoint edges.
pub fn triangle() -> FaceGraph {
    FaceGraph::from_edges(3, &[(0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2)]).expect("triangle graph")
}

/// Face of the product: the disjoint union.
pub fn product(g1: &FaceGraph, g2: &FaceGraph) -> Result<FaceGraph, GraphError> {
    g1.product(g2)
}

/// Disjoint union of `parts` (in order) plus the edges `(u^{i+1}, v^i)`, indices modulo `k`.
/// `choices[i]` is an (upper, lower) pair of `parts[i]`. The result need not be elementary.
pub fn circular_connection(parts: &[Graph], choices: &[(usize, usize)]) -> Result<Graph, GraphError> {
    if parts.is_empty() {
        return Err(GraphError::EmptyGraph);
    }
    if parts.len() != choices.len() {
        return Err(GraphError::PermutationLength { expected: parts.len(), found: choices.len() });
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut total = 0;
    for (p, &(u, v)) in parts.iter().zip(choices) {
        if u >= p.n() || v >= p.n() {
            return Err(GraphError::NodeOutOfRange { edge: (u, v), n: p.n() });
        }
        offsets.push(total);
        total += p.n();
    }
    let mut g = parts[0].clone();
    for p in &parts[1..] {
        g = g.disjoint_union(p)?;
    }
    let k = parts.len();
    for i in 0..k {
        let j = (i + 1) % k;
        g = g.with_edge(offsets[j] + choices[j].0, offsets[i] + choices[i].1);
    }
    Ok(g)
}

/// One (upper, lower) node pair per connected component, in component order, such that
/// removing all of them leaves a graph with a unique perfect matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PyramidalSet {
    pub host: FaceGraph,
    pub pairs: Vec<(usize, usize)>,
}

impl PyramidalSet {
    /// Validates `pairs` against `host`.
    pub fn new(host: &FaceGraph, pairs: Vec<(usize, usize)>) -> Result<PyramidalSet, ConstructionError> {
        let comps = host.components();
        if pairs.len() != comps.len() {
            return Err(invalid("need exactly one node pair per component"));
        }
        for (c, &(u, v)) in comps.iter().zip(&pairs) {
            if u >= host.n() || v >= host.n() || c.upper >> u & 1 == 0 || c.lower >> v & 1 == 0 {
                return Err(invalid("node pair does not lie in its component"));
            }
        }
        if !unique_matching_without(host, &pairs) {
            return Err(invalid("residual graph does not have a unique perfect matching"));
        }
        Ok(PyramidalSet { host: host.clone(), pairs })
    }
}

fn unique_matching_without(g: &Graph, pairs: &[(usize, usize)]) -> bool {
    let (mut us, mut vs) = (0u64, 0u64);
    for &(u, v) in pairs {
        us |= 1 << u;
        vs |= 1 << v;
    }
    let keep_u: Vec<usize> = (0..g.n()).filter(|&u| us >> u & 1 == 0).collect();
    let keep_v: Vec<usize> = (0..g.n()).filter(|&v| vs >> v & 1 == 0).collect();
    if keep_u.len() != keep_v.len() {
        return false;
    }
    let mut pos = [0usize; MAX_NODES];
    for (i, &v) in keep_v.iter().enumerate() {
        pos[v] = i;
    }
    let rows: Vec<u64> = keep_u
        .iter()
        .map(|&u| crate::bitset::bits(g.row(u) & !vs).fold(0u64, |a, v| a | 1 << pos[v]))
        .collect();
    matching::count_perfect_matchings_up_to(&rows, rows.len(), 2) == 1
}

/// All pyramidal sets, pairs enumerated lexicographically per component.
pub fn find_pyramidal_sets(g: &FaceGraph) -> Vec<PyramidalSet> {
    let comps = g.components();
    let options: Vec<Vec<(usize, usize)>> = comps
        .iter()
        .map(|c| c.upper_nodes().into_iter().flat_map(|u| c.lower_nodes().into_iter().map(move |v| (u, v))).collect())
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; comps.len()];
    if options.iter().any(|o| o.is_empty()) {
        return out;
    }
    loop {
        let pairs: Vec<(usize, usize)> = idx.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        if unique_matching_without(g, &pairs) {
            out.push(PyramidalSet { host: g.clone(), pairs });
        }
        let mut p = comps.len();
        loop {
            if p == 0 {
                return out;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < options[p].len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// Face graph of the pyramid over `face(g)`. A connected graph with the pair not
/// adjacent gets the edge `(u, v)`; otherwise the components (plus a fresh single edge
/// when `g` is connected) are connected circularly through the chosen pairs.
pub fn pyramid(g: &FaceGraph, pairs: &[(usize, usize)]) -> Result<FaceGraph, ConstructionError> {
    let s = PyramidalSet::new(g, pairs.to_vec())?;
    let graph = if s.pairs.len() == 1 {
        let (u, v) = s.pairs[0];
        if !g.has_edge(u, v) {
            g.with_edge(u, v)
        } else {
            circular_connection(&[g.graph().clone(), point().into_graph()], &[(u, v), (0, 0)])?
        }
    } else {
        let mut h = g.graph().clone();
        let k = s.pairs.len();
        for i in 0..k {
            h = h.with_edge(s.pairs[(i + 1) % k].0, s.pairs[i].1);
        }
        h
    };
    Ok(FaceGraph::new(graph)?)
}

fn check_facet_set(g: &FaceGraph, c: &FacetDefiningSet) -> Result<Edge, ConstructionError> {
    let Some(&e) = c.removed.first() else {
        return Err(precondition("empty facet-defining set"));
    };
    let sets = faces::facet_defining_sets(g).map_err(|e| precondition(alloc::format!("{e}")))?;
    let mut wanted = c.removed.clone();
    wanted.sort_unstable();
    if !sets.iter().any(|s| s.removed == wanted) {
        return Err(precondition("edges do not define a facet"));
    }
    if g.n() + 2 > MAX_NODES {
        return Err(GraphError::TooManyNodes { n: g.n() + 2 }.into());
    }
    Ok(e)
}

/// Wedge over the facet defined by `c`: a path of length 3 attached to the endpoints of
/// the first edge of `c`.
pub fn wedge_over_facet(g: &FaceGraph, c: &FacetDefiningSet) -> Result<FaceGraph, ConstructionError> {
    let (u, v) = check_facet_set(g, c)?;
    let n = g.n();
    let mut rows = g.rows().to_vec();
    rows[u] |= 1 << n;
    rows.push(1 << n | 1 << v);
    Ok(FaceGraph::new(Graph::from_rows(rows))?)
}

/// Wedge over the complement of the facet defined by `c`: the first edge of `c` becomes
/// a path of length 3 and a second such path joins the two new nodes.
pub fn wedge_over_complement(g: &FaceGraph, c: &FacetDefiningSet) -> Result<FaceGraph, ConstructionError> {
    let (u, v) = check_facet_set(g, c)?;
    let n = g.n();
    let (v1, v2) = (n, n + 1);
    let mut rows = g.rows().to_vec();
    rows[u] &= !(1 << v);
    rows[u] |= 1 << v1;
    rows.push(1 << v1 | 1 << v | 1 << v2);
    rows.push(1 << v1 | 1 << v2);
    Ok(FaceGraph::new(Graph::from_rows(rows))?)
}

fn joined(parts: &[(FaceGraph, Vec<(usize, usize)>)], reduced: bool) -> Result<FaceGraph, ConstructionError> {
    if parts.len() < 2 {
        return Err(precondition("a joined product needs at least two factors"));
    }
    let total = 1 + parts.iter().map(|(g, _)| g.n()).sum::<usize>();
    if total > MAX_NODES {
        return Err(GraphError::TooManyNodes { n: total }.into());
    }
    // Hubs are upper 0 and lower 0; factor nodes follow in order.
    let mut rows = vec![0u64; total];
    if reduced {
        rows[0] |= 1;
    }
    let mut off = 1;
    for (g, pairs) in parts {
        let s = PyramidalSet::new(g, pairs.clone())?;
        for u in 0..g.n() {
            rows[off + u] = g.row(u) << off;
        }
        let c = s.pairs.len();
        rows[0] |= 1 << (off + s.pairs[c - 1].1);
        rows[off + s.pairs[0].0] |= 1;
        for j in 0..c - 1 {
            rows[off + s.pairs[j + 1].0] |= 1 << (off + s.pairs[j].1);
        }
        off += g.n();
    }
    debug_assert_eq!(rows.iter().fold(0, |a, &r| a | r) & !low_mask(total), 0);
    Ok(FaceGraph::new(Graph::from_rows(rows))?)
}

/// Joined product: two isolated hubs, each factor's components chained from the lower
/// hub to the upper hub through its pyramidal pairs.
pub fn joined_product(parts: &[(FaceGraph, Vec<(usize, usize)>)]) -> Result<FaceGraph, ConstructionError> {
    joined(parts, false)
}

/// As [`joined_product`] with an edge between the hubs.
pub fn reduced_joined_product(parts: &[(FaceGraph, Vec<(usize, usize)>)]) -> Result<FaceGraph, ConstructionError> {
    joined(parts, true)
}

/// First pyramidal set of every part, for building joined products of standard faces.
pub fn with_first_pyramidal(parts: &[FaceGraph]) -> Result<Vec<(FaceGraph, Vec<(usize, usize)>)>, ConstructionError> {
    parts
        .iter()
        .map(|g| {
            find_pyramidal_sets(g)
                .into_iter()
                .next()
                .map(|s| (g.clone(), s.pairs))
                .ok_or_else(|| invalid("factor has no pyramidal set"))
        })
        .collect()
}

/// Provenance of a constructed face graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Recipe {
    Product { factors: Vec<Graph> },
    Pyramid { base: Graph, pairs: Vec<(usize, usize)> },
    WedgeFacet { base: Graph, removed: Vec<Edge> },
    WedgeComplement { base: Graph, removed: Vec<Edge> },
    JoinedProduct { parts: Vec<(Graph, Vec<(usize, usize)>)> },
    ReducedJoinedProduct { parts: Vec<(Graph, Vec<(usize, usize)>)> },
    CircularConnection { parts: Vec<Graph>, choices: Vec<(usize, usize)> },
}

impl Recipe {
    pub fn kind(&self) -> &'static str {
        match self {
            Recipe::Product { .. } => "product",
            Recipe::Pyramid { .. } => "pyramid",
            Recipe::WedgeFacet { .. } => "wedge_facet",
            Recipe::WedgeComplement { .. } => "wedge_complement",
            Recipe::JoinedProduct { .. } => "joined_product",
            Recipe::ReducedJoinedProduct { .. } => "reduced_joined_product",
            Recipe::CircularConnection { .. } => "circular_connection",
        }
    }

    /// Runs the construction. Only a circular connection may yield a graph that is not
    /// a face graph.
    pub fn apply(&self) -> Result<Graph, ConstructionError> {
        let face = |g: &Graph| FaceGraph::new(g.clone()).map_err(ConstructionError::from);
        let facet = |base: &FaceGraph, removed: &[Edge]| -> Result<FacetDefiningSet, ConstructionError> {
            let mut wanted = removed.to_vec();
            wanted.sort_unstable();
            let found = faces::facet_defining_sets(base)
                .map_err(|e| precondition(alloc::format!("{e}")))?
                .into_iter()
                .find(|s| s.removed == wanted)
                .ok_or_else(|| precondition("edges do not define a facet"))?;
            // Keep the caller's order: the wedges act on the first listed edge.
            Ok(FacetDefiningSet { removed: removed.to_vec(), kind: found.kind })
        };
        let parts_of = |parts: &[(Graph, Vec<(usize, usize)>)]| -> Result<Vec<_>, ConstructionError> {
            parts.iter().map(|(g, p)| Ok((face(g)?, p.clone()))).collect()
        };
        let out = match self {
            Recipe::Product { factors } => {
                let mut it = factors.iter();
                let first = it.next().ok_or_else(|| precondition("empty product"))?;
                let mut acc = face(first)?;
                for f in it {
                    acc = product(&acc, &face(f)?)?;
                }
                acc.into_graph()
            }
            Recipe::Pyramid { base, pairs } => pyramid(&face(base)?, pairs)?.into_graph(),
            Recipe::WedgeFacet { base, removed } => {
                let b = face(base)?;
                wedge_over_facet(&b, &facet(&b, removed)?)?.into_graph()
            }
            Recipe::WedgeComplement { base, removed } => {
                let b = face(base)?;
                wedge_over_complement(&b, &facet(&b, removed)?)?.into_graph()
            }
            Recipe::JoinedProduct { parts } => joined_product(&parts_of(parts)?)?.into_graph(),
            Recipe::ReducedJoinedProduct { parts } => reduced_joined_product(&parts_of(parts)?)?.into_graph(),
            Recipe::CircularConnection { parts, choices } => circular_connection(parts, choices)?,
        };
        Ok(out)
    }
}
