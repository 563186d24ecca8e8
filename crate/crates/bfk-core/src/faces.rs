//! Faces of the face of a face graph: closures, facets, facet-defining sets, the face
//! lattice and structural predicates.
//!
//! Internally a face is the set of its vertices (indices into the perfect matching
//! list of the host); its edge set is the union of those matchings.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{bits, BitSet};
use crate::graph::{Edge, FaceGraph, Graph, PerfectMatching};
use crate::matching;

pub const DEFAULT_FACE_CAP: usize = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceError {
    CapExceeded { cap: usize },
    CharacterizationMismatch { removed: Vec<Edge> },
    TooManyFacets { facets: usize },
}

impl fmt::Display for FaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceError::CapExceeded { cap } => write!(f, "face lattice exceeds {cap} elements"),
            FaceError::CharacterizationMismatch { removed } => {
                write!(f, "facet with complement {removed:?} fits neither facet type")
            }
            FaceError::TooManyFacets { facets } => {
                write!(f, "{facets} facets exceed the 64-column incidence limit")
            }
        }
    }
}

impl core::error::Error for FaceError {}

/// An edge subset of the host that is the union of the perfect matchings it contains.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceSubgraph {
    pub rows: Vec<u64>,
}

impl FaceSubgraph {
    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for (u, &r) in self.rows.iter().enumerate() {
            out.extend(bits(r).map(|v| (u, v)));
        }
        out
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|&r| r == 0)
    }

    /// `m - 2n + k` of the subgraph spanning all host nodes; `None` for the empty face.
    pub fn dimension(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        let g = Graph::from_rows(self.rows.clone());
        Some(g.edge_count() + g.components().len() - 2 * g.n())
    }
}

/// Union of all perfect matchings of `host` contained in `keep`.
pub fn closure(host: &Graph, keep: &[u64]) -> FaceSubgraph {
    let rows: Vec<u64> = host.rows().iter().zip(keep).map(|(a, b)| a & b).collect();
    let mut out = vec![0u64; host.n()];
    matching::for_each_perfect_matching(&rows, host.n(), |m| {
        for (u, &v) in m.iter().enumerate() {
            out[u] |= 1 << v;
        }
        true
    });
    FaceSubgraph { rows: out }
}

/// Perfect matchings of a face graph together with the edge-to-vertex incidences.
#[derive(Clone, Debug)]
pub struct FaceData {
    pub graph: FaceGraph,
    pub vertices: Vec<PerfectMatching>,
    pub edges: Vec<Edge>,
    /// `by_edge[i]` = vertices whose matching uses `edges[i]`.
    pub by_edge: Vec<BitSet>,
}

impl FaceData {
    pub fn new(g: &FaceGraph) -> FaceData {
        let vertices = g.perfect_matchings();
        let edges = g.edges();
        let by_edge = edges
            .iter()
            .map(|&e| {
                let mut s = BitSet::empty(vertices.len());
                for (i, pm) in vertices.iter().enumerate() {
                    if pm.contains(e) {
                        s.insert(i);
                    }
                }
                s
            })
            .collect();
        FaceData { graph: g.clone(), vertices, edges, by_edge }
    }

    pub fn dimension(&self) -> usize {
        self.graph.dimension()
    }

    pub fn all_vertices(&self) -> BitSet {
        BitSet::full(self.vertices.len())
    }

    pub fn subgraph(&self, s: &BitSet) -> FaceSubgraph {
        let mut rows = vec![0u64; self.graph.n()];
        for i in s.iter() {
            for (u, &v) in self.vertices[i].map.iter().enumerate() {
                rows[u] |= 1 << v;
            }
        }
        FaceSubgraph { rows }
    }

    /// Facets of the face with vertex set `s`, ordered by the first edge whose avoidance
    /// produces them. A vertex has the empty face as its only facet.
    pub fn facets_of(&self, s: &BitSet) -> Vec<BitSet> {
        let mut cands: Vec<BitSet> = Vec::new();
        for set in &self.by_edge {
            if !s.intersects(set) {
                continue;
            }
            let c = s.and_not(set);
            if !cands.contains(&c) {
                cands.push(c);
            }
        }
        let maximal: Vec<bool> = cands
            .iter()
            .map(|c| !cands.iter().any(|o| o != c && c.is_subset(o)))
            .collect();
        cands.into_iter().zip(maximal).filter(|(_, m)| *m).map(|(c, _)| c).collect()
    }

    pub fn facets(&self) -> Vec<BitSet> {
        if self.dimension() == 0 {
            return Vec::new();
        }
        self.facets_of(&self.all_vertices())
    }

    /// Vertex-facet incidence rows (bit `j` of row `i`: vertex `i` lies on facet `j`).
    pub fn incidence(&self) -> Result<(Vec<u64>, usize), FaceError> {
        let facets = self.facets();
        if facets.len() > 64 {
            return Err(FaceError::TooManyFacets { facets: facets.len() });
        }
        let mut rows = vec![0u64; self.vertices.len()];
        for (j, f) in facets.iter().enumerate() {
            for i in f.iter() {
                rows[i] |= 1 << j;
            }
        }
        Ok((rows, facets.len()))
    }

    /// All faces grouped by dimension `0..=d` (the empty face is implicit).
    pub fn lattice(&self, cap: usize) -> Result<Lattice, FaceError> {
        let d = self.dimension();
        let mut levels: Vec<Vec<BitSet>> = vec![Vec::new(); d + 1];
        levels[d].push(self.all_vertices());
        let mut total = 2usize;
        for k in (1..=d).rev() {
            let mut next: BTreeSet<BitSet> = BTreeSet::new();
            for f in &levels[k] {
                for facet in self.facets_of(f) {
                    if next.insert(facet) {
                        total += 1;
                        if total > cap {
                            return Err(FaceError::CapExceeded { cap });
                        }
                    }
                }
            }
            levels[k - 1] = next.into_iter().collect();
        }
        Ok(Lattice { levels })
    }
}

/// Faces by dimension; `levels[k]` holds the `k`-faces as vertex sets. The empty face
/// belongs to the lattice but is not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub levels: Vec<Vec<BitSet>>,
}

impl Lattice {
    /// Number of lattice elements including the empty face and the whole face.
    pub fn element_count(&self) -> usize {
        1 + self.levels.iter().map(Vec::len).sum::<usize>()
    }

    /// `(f_0, ..., f_{d-1})`.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.levels.len() - 1;
        self.levels[..d].iter().map(Vec::len).collect()
    }
}

/// Facet subgraphs of a face graph of dimension at least 1.
pub fn facets(g: &FaceGraph) -> Vec<FaceSubgraph> {
    let data = FaceData::new(g);
    data.facets().iter().map(|f| data.subgraph(f)).collect()
}

pub fn all_faces(g: &FaceGraph, cap: usize) -> Result<Lattice, FaceError> {
    FaceData::new(g).lattice(cap)
}

pub fn f_vector(g: &FaceGraph, cap: usize) -> Result<Vec<usize>, FaceError> {
    Ok(all_faces(g, cap)?.f_vector())
}

/// Euler's relation `sum (-1)^i f_i = 1 - (-1)^d`.
pub fn satisfies_euler(fvec: &[usize]) -> bool {
    let d = fvec.len();
    let alt: i64 = fvec.iter().enumerate().map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) }).sum();
    alt == if d % 2 == 0 { 0 } else { 2 }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FacetKind {
    /// The facet is connected and misses one edge.
    SingleEdge,
    /// The facet splits into `components` parts joined cyclically by the removed edges.
    Circular { components: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetDefiningSet {
    pub removed: Vec<Edge>,
    pub kind: FacetKind,
}

/// The complement of every facet, each checked against the two admissible shapes of a
/// facet of a connected face graph; distinct sets must be disjoint matchings.
pub fn facet_defining_sets(g: &FaceGraph) -> Result<Vec<FacetDefiningSet>, FaceError> {
    let n = g.n();
    let mut out: Vec<FacetDefiningSet> = Vec::new();
    for facet in facets(g) {
        let removed: Vec<Edge> = g.edges().into_iter().filter(|&(u, v)| facet.rows[u] >> v & 1 == 0).collect();
        let mismatch = || FaceError::CharacterizationMismatch { removed: removed.clone() };
        let (mut us, mut vs) = (0u64, 0u64);
        for &(u, v) in &removed {
            if us >> u & 1 == 1 || vs >> v & 1 == 1 {
                return Err(mismatch());
            }
            us |= 1 << u;
            vs |= 1 << v;
        }
        let fg = Graph::from_rows(facet.rows.clone());
        let comps = fg.components();
        let kind = if comps.len() == 1 {
            if removed.len() != 1 {
                return Err(mismatch());
            }
            FacetKind::SingleEdge
        } else {
            // Each removed edge leaves one component from an upper node and enters the
            // next at a lower node; together they must form one cycle through all parts.
            let k = comps.len();
            if removed.len() != k {
                return Err(mismatch());
            }
            let comp_of_upper = |u: usize| comps.iter().position(|c| c.upper >> u & 1 == 1).unwrap();
            let comp_of_lower = |v: usize| comps.iter().position(|c| c.lower >> v & 1 == 1).unwrap();
            let mut succ = vec![usize::MAX; k];
            let mut indeg = vec![0usize; k];
            for &(u, v) in &removed {
                let (a, b) = (comp_of_upper(u), comp_of_lower(v));
                if a == b || succ[a] != usize::MAX {
                    return Err(mismatch());
                }
                succ[a] = b;
                indeg[b] += 1;
            }
            if indeg.iter().any(|&i| i != 1) {
                return Err(mismatch());
            }
            let (mut y, mut len) = (succ[0], 1);
            while y != 0 {
                y = succ[y];
                len += 1;
            }
            if len != k {
                return Err(mismatch());
            }
            FacetKind::Circular { components: k }
        };
        out.push(FacetDefiningSet { removed, kind });
    }
    for i in 0..out.len() {
        for j in i + 1..out.len() {
            if out[i].removed.iter().any(|e| out[j].removed.contains(e)) {
                return Err(FaceError::CharacterizationMismatch { removed: out[j].removed.clone() });
            }
        }
    }
    debug_assert!(out.iter().all(|s| s.removed.iter().all(|&(u, v)| u < n && v < n)));
    Ok(out)
}

/// A vertex lying on all facets but exactly one.
pub fn is_pyramid(g: &FaceGraph) -> Option<PerfectMatching> {
    let data = FaceData::new(g);
    let facets = data.facets();
    if facets.is_empty() {
        return None;
    }
    (0..data.vertices.len())
        .find(|&i| facets.iter().filter(|f| !f.contains(i)).count() == 1)
        .map(|i| data.vertices[i].clone())
}

/// Some edge lies in exactly one perfect matching.
pub fn has_edge_in_unique_matching(g: &FaceGraph) -> bool {
    FaceData::new(g).by_edge.iter().any(|s| s.len() == 1)
}

/// At least two components of positive dimension.
pub fn is_product(g: &FaceGraph) -> bool {
    g.component_graphs().iter().filter(|c| c.dimension() > 0).count() >= 2
}

/// Two vertices span an edge iff their symmetric difference is a single cycle.
fn adjacent(a: &PerfectMatching, b: &PerfectMatching) -> bool {
    let n = a.map.len();
    let mut inv_a = vec![0usize; n];
    for (u, &v) in a.map.iter().enumerate() {
        inv_a[v] = u;
    }
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for s in 0..n {
        if seen[s] || a.map[s] == b.map[s] {
            continue;
        }
        cycles += 1;
        let mut u = s;
        while !seen[u] {
            seen[u] = true;
            u = inv_a[b.map[u]];
        }
    }
    cycles == 1
}

/// Three pairwise adjacent vertices whose union contains no further matching.
pub fn has_triangle(g: &FaceGraph) -> bool {
    let pms = g.perfect_matchings();
    let p = pms.len();
    let adj: Vec<Vec<bool>> = (0..p).map(|i| (0..p).map(|j| i != j && adjacent(&pms[i], &pms[j])).collect()).collect();
    for i in 0..p {
        for j in i + 1..p {
            if !adj[i][j] {
                continue;
            }
            for k in j + 1..p {
                if adj[i][k] && adj[j][k] {
                    let rows: Vec<u64> = (0..g.n())
                        .map(|u| 1u64 << pms[i].map[u] | 1 << pms[j].map[u] | 1 << pms[k].map[u])
                        .collect();
                    if matching::count_perfect_matchings_up_to(&rows, g.n(), 4) == 3 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Whether the face is combinatorially a cube of its dimension.
pub fn is_cube(g: &FaceGraph) -> bool {
    let d = g.dimension();
    crate::types::type_key(g) == crate::types::type_key(&crate::constructions::cube(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetBoundViolation {
    pub facets: usize,
    pub bound: usize,
}

/// Checks `#facets <= 3(d - 1)`; `Ok(true)` when the bound is attained.
pub fn facet_count_bound_check(g: &FaceGraph) -> Result<bool, FacetBoundViolation> {
    let d = g.dimension();
    let facets = FaceData::new(g).facets().len();
    let bound = 3 * d.saturating_sub(1);
    if facets > bound {
        Err(FacetBoundViolation { facets, bound })
    } else {
        Ok(facets == bound)
    }
}
