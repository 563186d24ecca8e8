//! Contraction of degree-2 nodes, reducibility, partners, and the structural bounds on
//! connected irreducible face graphs that the enumerator uses for pruning.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::bits;
use crate::graph::{FaceGraph, Graph, GraphError, Layer, LayeredNode, MultiGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionError {
    NodeOutOfRange(LayeredNode),
    NotDegreeTwo { node: LayeredNode, degree: usize },
    /// Both edges of the node go to the same neighbour.
    SingleNeighbor(LayeredNode),
    Graph(GraphError),
}

impl fmt::Display for ReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionError::NodeOutOfRange(v) => write!(f, "node {v} does not exist"),
            ReductionError::NotDegreeTwo { node, degree } => {
                write!(f, "node {node} has degree {degree}, expected 2")
            }
            ReductionError::SingleNeighbor(v) => {
                write!(f, "node {v} has a double edge to a single neighbour")
            }
            ReductionError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ReductionError {}

impl From<GraphError> for ReductionError {
    fn from(e: GraphError) -> Self {
        ReductionError::Graph(e)
    }
}

/// One contraction: `node` is removed and its neighbours `merged.0 < merged.1` become a
/// single node with index `merged.0`; nodes above `merged.1` (and above `node` in its
/// own layer) shift down by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub node: LayeredNode,
    pub merged: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub result: MultiGraph,
}

impl ReductionTrace {
    /// Replays the steps on `start`.
    pub fn replay(&self, start: &MultiGraph) -> Result<MultiGraph, ReductionError> {
        let mut g = start.clone();
        for s in &self.steps {
            g = reduce_at(&g, s.node)?.0;
        }
        Ok(g)
    }
}

fn check_node(n: usize, v: LayeredNode) -> Result<(), ReductionError> {
    if v.index >= n {
        Err(ReductionError::NodeOutOfRange(v))
    } else {
        Ok(())
    }
}

/// Contracts the degree-2 node `v`: its two neighbours merge into one node that keeps
/// all their other edges, with parallel edges kept as multiplicities.
pub fn reduce_at(g: &MultiGraph, v: LayeredNode) -> Result<(MultiGraph, ReductionStep), ReductionError> {
    check_node(g.n(), v)?;
    if v.layer == Layer::Lower {
        let (r, step) = reduce_at(&g.transpose(), LayeredNode::upper(v.index))?;
        return Ok((r.transpose(), ReductionStep { node: v, merged: step.merged }));
    }
    let n = g.n();
    let degree = g.degree(v);
    if degree != 2 {
        return Err(ReductionError::NotDegreeTwo { node: v, degree });
    }
    let nb: Vec<usize> = (0..n).filter(|&w| g.mult(v.index, w) > 0).collect();
    if nb.len() != 2 {
        return Err(ReductionError::SingleNeighbor(v));
    }
    let (w1, w2) = (nb[0], nb[1]);
    if n == 1 {
        unreachable!("a node with two distinct neighbours needs n >= 2");
    }
    let m = n - 1;
    let mut mult = vec![0u32; m * m];
    let mut ru = 0;
    for u in 0..n {
        if u == v.index {
            continue;
        }
        let mut cv = 0;
        for w in 0..n {
            if w == w2 {
                continue;
            }
            let c = if w == w1 { g.mult(u, w1) + g.mult(u, w2) } else { g.mult(u, w) };
            mult[ru * m + cv] = c;
            cv += 1;
        }
        ru += 1;
    }
    Ok((MultiGraph::new(m, mult)?, ReductionStep { node: v, merged: (w1, w2) }))
}

/// Upper nodes adjacent to every lower node in `lowers` (or the transpose for lower nodes).
fn common_neighbors(g: &Graph, layer: Layer, of: u64) -> u64 {
    let mut acc = crate::bitset::low_mask(g.n());
    for w in bits(of) {
        acc &= g.neighbors(LayeredNode { layer: layer.opposite(), index: w });
    }
    acc
}

/// Degree 2, and the two neighbours have no common neighbour other than `v`.
pub fn is_reducible_node(g: &Graph, v: LayeredNode) -> bool {
    if v.index >= g.n() {
        return false;
    }
    let nb = g.neighbors(v);
    nb.count_ones() == 2 && common_neighbors(g, v.layer, nb) == 1 << v.index
}

pub fn is_irreducible(g: &Graph) -> bool {
    all_nodes(g.n()).all(|v| !is_reducible_node(g, v))
}

fn all_nodes(n: usize) -> impl Iterator<Item = LayeredNode> {
    (0..n).map(LayeredNode::upper).chain((0..n).map(LayeredNode::lower))
}

/// Reducibility of a multigraph node as seen in its resolution: a node with a parallel
/// bundle is never reducible there (the path nodes of the bundle are partners), so
/// only degree-2 nodes with two simple edges qualify, and then the common neighbourhood
/// is read off the support.
fn multigraph_node_reducible(g: &MultiGraph, support: &Graph, v: LayeredNode) -> bool {
    g.degree(v) == 2 && support.degree(v) == 2 && is_reducible_node(support, v)
}

/// Contracts reducible nodes until none is left: lowest index first, upper layer before
/// lower layer, re-evaluated after every step.
pub fn fully_reduce(g: &FaceGraph) -> ReductionTrace {
    let mut cur = MultiGraph::from(g);
    let mut steps = Vec::new();
    loop {
        let support = cur.support();
        let next = all_nodes(cur.n()).find(|&v| multigraph_node_reducible(&cur, &support, v));
        let Some(v) = next else {
            break;
        };
        let (r, step) = reduce_at(&cur, v).expect("reducible nodes have degree 2 and two neighbours");
        steps.push(step);
        cur = r;
    }
    ReductionTrace { steps, result: cur }
}

/// Degree-2 nodes, upper layer first.
pub fn minimal_nodes(g: &Graph) -> Vec<LayeredNode> {
    all_nodes(g.n()).filter(|&v| g.degree(v) == 2).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartnerReport {
    pub node: LayeredNode,
    pub partners: Vec<LayeredNode>,
}

/// Same-layer nodes adjacent to both neighbours of the degree-2 node `v`.
pub fn partners(g: &Graph, v: LayeredNode) -> Result<PartnerReport, ReductionError> {
    check_node(g.n(), v)?;
    let nb = g.neighbors(v);
    let degree = nb.count_ones() as usize;
    if degree != 2 {
        return Err(ReductionError::NotDegreeTwo { node: v, degree });
    }
    let common = common_neighbors(g, v.layer, nb) & !(1 << v.index);
    let partners = bits(common).map(|i| LayeredNode { layer: v.layer, index: i }).collect();
    Ok(PartnerReport { node: v, partners })
}

/// Nodes adjacent to every node of `set` (all in `layer`).
pub fn common_neighborhood(g: &Graph, layer: Layer, set: &[usize]) -> Vec<LayeredNode> {
    let mask = set.iter().fold(0u64, |acc, &i| acc | 1 << i);
    bits(common_neighbors(g, layer.opposite(), mask))
        .map(|i| LayeredNode { layer: layer.opposite(), index: i })
        .collect()
}

/// Bounds satisfied by every connected irreducible face graph with `n` nodes per layer
/// and dimension `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub n: usize,
    pub d: usize,
    /// `d + 2n - 1`.
    pub edges: usize,
    pub max_nodes: usize,
    pub max_degree: usize,
    /// `2n + ceil(n/2)` for `n >= 4`, 7 for `n = 3`, 4 for `n = 2`, 1 for `n = 1`.
    pub min_edges: usize,
    /// Upper limit on degree-2 nodes in one layer.
    pub max_minimal: usize,
}

impl Bounds {
    pub fn new(n: usize, d: usize) -> Bounds {
        // 2d - 2 fails for the segment (n = 2, d = 1) and the triangle (n = 3, d = 2),
        // which are connected and irreducible.
        let max_nodes = match d {
            0 => 1,
            1 => 2,
            _ => (2 * d - 2).max(d + 1),
        };
        let max_degree = if n > d + 1 { (2 * d + 1).saturating_sub(n) } else { n };
        let min_edges = match n {
            1 => 1,
            2 => 4,
            3 => 7,
            _ => 2 * n + n.div_ceil(2),
        };
        // The 4-cycle has two degree-2 nodes per layer at d = 1.
        let max_minimal = if n <= 2 {
            n
        } else if n == d + 1 {
            d
        } else {
            d.saturating_sub(1)
        };
        Bounds { n, d, edges: d + 2 * n - 1, max_nodes, max_degree, min_edges, max_minimal }
    }

    /// False when no connected irreducible face graph with these parameters can exist.
    pub fn feasible(&self) -> bool {
        self.n <= self.max_nodes && self.edges >= self.min_edges && self.max_degree >= 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundViolation {
    TooManyNodes { n: usize, max: usize },
    TooFewEdges { target: usize, min: usize },
    EdgeBudget { edges: usize, target: usize },
    DegreeTooHigh { node: LayeredNode, degree: usize, max: usize },
    TooManyMinimalNodes { layer: Layer, count: usize, max: usize },
    PartnerOverload { partner: LayeredNode, served: usize, max: usize },
    MissingPartner { node: LayeredNode },
}

/// Violations that no extension by further edges can repair. `g` may be a partial
/// graph; the target edge count is `d + 2n - 1`.
pub fn bound_checks(g: &Graph, n: usize, d: usize) -> Vec<BoundViolation> {
    let b = Bounds::new(n, d);
    let mut out = Vec::new();
    if n > b.max_nodes {
        out.push(BoundViolation::TooManyNodes { n, max: b.max_nodes });
    }
    if b.edges < b.min_edges {
        out.push(BoundViolation::TooFewEdges { target: b.edges, min: b.min_edges });
    }
    let m = g.edge_count();
    if m > b.edges {
        out.push(BoundViolation::EdgeBudget { edges: m, target: b.edges });
    }
    for v in all_nodes(g.n()) {
        let degree = g.degree(v);
        if degree > b.max_degree {
            out.push(BoundViolation::DegreeTooHigh { node: v, degree, max: b.max_degree });
        }
    }
    out
}

/// [`bound_checks`] plus the bounds that only apply once `g` is complete: degree-2 node
/// counts, partner existence and partner load (a partner of degree `k` serves at most
/// `k - 1` degree-2 nodes).
pub fn complete_bound_checks(g: &Graph, d: usize) -> Vec<BoundViolation> {
    let n = g.n();
    let b = Bounds::new(n, d);
    let mut out = bound_checks(g, n, d);
    for layer in [Layer::Upper, Layer::Lower] {
        let minimal: Vec<LayeredNode> = (0..n)
            .map(|i| LayeredNode { layer, index: i })
            .filter(|&v| g.degree(v) == 2)
            .collect();
        if minimal.len() > b.max_minimal {
            out.push(BoundViolation::TooManyMinimalNodes { layer, count: minimal.len(), max: b.max_minimal });
        }
        if n <= 2 {
            continue;
        }
        let mut served = vec![0usize; n];
        for &v in &minimal {
            let p = partners(g, v).expect("degree-2 node").partners;
            if p.is_empty() {
                out.push(BoundViolation::MissingPartner { node: v });
            }
            for x in p {
                served[x.index] += 1;
            }
        }
        for (i, &s) in served.iter().enumerate() {
            let partner = LayeredNode { layer, index: i };
            let k = g.degree(partner);
            if s > 0 && s > k.saturating_sub(1) {
                out.push(BoundViolation::PartnerOverload { partner, served: s, max: k.saturating_sub(1) });
            }
        }
    }
    out
}
