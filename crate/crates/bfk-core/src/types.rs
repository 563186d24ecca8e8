//! Combinatorial types: vertex-facet incidences, their canonical forms, the type catalog
//! and Birkhoff dimension bookkeeping.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{bits, BitSet};
use crate::canon::canonical_form;
use crate::constructions::Recipe;
use crate::faces::{self, FaceData, FaceError, DEFAULT_FACE_CAP};
use crate::graph::{Edge, FaceGraph, Graph};

/// Canonical bytes of every 0-dimensional face.
pub const POINT: &[u8] = b"POINT";

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexFacetIncidence {
    pub vertices: usize,
    pub facets: usize,
    /// Bit `j` of `rows[i]`: vertex `i` lies on facet `j`.
    pub rows: Vec<u64>,
}

impl VertexFacetIncidence {
    pub fn new(facets: usize, rows: Vec<u64>) -> Self {
        assert!(facets <= 64);
        VertexFacetIncidence { vertices: rows.len(), facets, rows }
    }

    /// Vertices of facet `j`.
    pub fn facet(&self, j: usize) -> BitSet {
        let mut s = BitSet::empty(self.vertices);
        for (i, &r) in self.rows.iter().enumerate() {
            if r >> j & 1 == 1 {
                s.insert(i);
            }
        }
        s
    }

    /// Pyramid: a new apex on every old facet plus the base facet.
    pub fn pyramid(&self) -> VertexFacetIncidence {
        let base = 1u64 << self.facets;
        let mut rows: Vec<u64> = self.rows.iter().map(|&r| r | base).collect();
        rows.push(crate::bitset::low_mask(self.facets));
        VertexFacetIncidence::new(self.facets + 1, rows)
    }

    /// Cartesian product; facets of `self` come first.
    pub fn product(&self, other: &VertexFacetIncidence) -> VertexFacetIncidence {
        let mut rows = Vec::with_capacity(self.vertices * other.vertices);
        for &a in &self.rows {
            for &b in &other.rows {
                rows.push(a | b << self.facets);
            }
        }
        VertexFacetIncidence::new(self.facets + other.facets, rows)
    }

    /// Wedge over the face with vertex set `face`: vertices off the face are doubled,
    /// the facets are the two copies of the polytope and the lifts of every facet other
    /// than the face itself.
    pub fn wedge(&self, face: &BitSet) -> VertexFacetIncidence {
        let kept: Vec<usize> = (0..self.facets).filter(|&j| self.facet(j) != *face).collect();
        let k = kept.len();
        let (bottom, top) = (1u64 << k, 1u64 << (k + 1));
        let lift = |r: u64| kept.iter().enumerate().fold(0u64, |a, (i, &j)| a | (r >> j & 1) << i);
        let mut rows = Vec::new();
        for (i, &r) in self.rows.iter().enumerate() {
            let on_face = face.contains(i);
            rows.push(lift(r) | bottom | if on_face { top } else { 0 });
        }
        for (i, &r) in self.rows.iter().enumerate() {
            if !face.contains(i) {
                rows.push(lift(r) | top);
            }
        }
        VertexFacetIncidence::new(k + 2, rows)
    }
}

/// Vertex-facet incidence of the face, rows in perfect matching order and columns in
/// facet order.
pub fn vertex_facet_incidence(g: &FaceGraph) -> Result<VertexFacetIncidence, FaceError> {
    let (rows, facets) = FaceData::new(g).incidence()?;
    Ok(VertexFacetIncidence::new(facets, rows))
}

/// Canonical bytes: vertex and facet counts (u32 little endian) followed by the
/// canonically relabelled rows in increasing order, `ceil(facets / 8)` bytes each.
pub fn canonicalize(inc: &VertexFacetIncidence) -> Vec<u8> {
    let c = canonical_form(&inc.rows, inc.facets);
    let width = inc.facets.div_ceil(8);
    let mut out = Vec::with_capacity(8 + width * inc.vertices);
    out.extend_from_slice(&(inc.vertices as u32).to_le_bytes());
    out.extend_from_slice(&(inc.facets as u32).to_le_bytes());
    for r in c.cert {
        out.extend_from_slice(&r.to_le_bytes()[..width]);
    }
    out
}

/// Identity of a combinatorial type.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeKey {
    pub dim: usize,
    pub canon: Vec<u8>,
}

impl TypeKey {
    pub fn point() -> TypeKey {
        TypeKey { dim: 0, canon: POINT.to_vec() }
    }

    pub fn from_incidence(dim: usize, inc: &VertexFacetIncidence) -> TypeKey {
        if dim == 0 {
            return TypeKey::point();
        }
        TypeKey { dim, canon: canonicalize(inc) }
    }
}

pub fn try_type_key(g: &FaceGraph) -> Result<TypeKey, FaceError> {
    let dim = g.dimension();
    if dim == 0 {
        return Ok(TypeKey::point());
    }
    Ok(TypeKey::from_incidence(dim, &vertex_facet_incidence(g)?))
}

/// Type identity of a face graph. Panics if the face has more than 64 facets.
pub fn type_key(g: &FaceGraph) -> TypeKey {
    try_type_key(g).expect("at most 64 facets")
}

/// Type identity plus f-vector. Ordering and equality follow the key.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeFingerprint {
    pub key: TypeKey,
    pub fvec: Vec<usize>,
}

impl TypeFingerprint {
    pub fn dim(&self) -> usize {
        self.key.dim
    }
}

pub fn fingerprint(g: &FaceGraph) -> Result<TypeFingerprint, FaceError> {
    let key = try_type_key(g)?;
    let fvec = faces::f_vector(g, DEFAULT_FACE_CAP)?;
    Ok(TypeFingerprint { key, fvec })
}

/// Canonical relabelling of a bipartite graph under node permutations within layers and
/// exchange of the layers. Returns the certificate and the relabelled graph.
pub fn graph_canonical(g: &Graph) -> (Vec<u8>, Graph) {
    let a = canonical_form(g.rows(), g.n()).cert;
    let b = canonical_form(g.transpose().rows(), g.n()).cert;
    let cert = if a <= b { a } else { b };
    let mut bytes = Vec::with_capacity(1 + 8 * cert.len());
    bytes.push(g.n() as u8);
    for r in &cert {
        bytes.extend_from_slice(&r.to_le_bytes());
    }
    (bytes, Graph::from_rows(cert))
}

/// Ordering of representatives: fewer nodes, then fewer edges, then the
/// lexicographically least sorted edge list.
pub fn rep_order_key(g: &Graph) -> (usize, usize, Vec<Edge>) {
    (g.n(), g.edge_count(), g.edges())
}

/// Representative of a type in canonical labelling, so that the choice does not depend
/// on the labelling it was found in.
pub fn normalized_rep(g: &FaceGraph) -> FaceGraph {
    FaceGraph::new(graph_canonical(g).1).expect("relabelling preserves elementarity")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flags {
    pub is_product: bool,
    pub is_pyramid: bool,
    pub is_cube: bool,
    pub is_wedge_constructible: Option<bool>,
}

pub fn compute_flags(g: &FaceGraph) -> Flags {
    Flags {
        is_product: faces::is_product(g),
        is_pyramid: faces::is_pyramid(g).is_some(),
        is_cube: faces::is_cube(g),
        is_wedge_constructible: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub fingerprint: TypeFingerprint,
    pub bdim: usize,
    pub rep: FaceGraph,
    pub flags: Option<Flags>,
    pub recipe: Option<Recipe>,
}

impl CatalogEntry {
    pub fn dim(&self) -> usize {
        self.fingerprint.dim()
    }

    fn absorb(&mut self, other: CatalogEntry) {
        self.bdim = self.bdim.min(other.bdim);
        if rep_order_key(&other.rep) < rep_order_key(&self.rep) {
            self.rep = other.rep;
        }
        if self.flags.is_none() {
            self.flags = other.flags;
        }
        self.recipe = match (self.recipe.take(), other.recipe) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
}

/// Types keyed by identity, iterated in `(dim, canon)` order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: BTreeMap<TypeKey, CatalogEntry>,
}

impl Catalog {
    pub fn new() -> Catalog {
        Catalog::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &TypeKey) -> Option<&CatalogEntry> {
        self.entries.get(key)
    }

    pub fn get_mut(&mut self, key: &TypeKey) -> Option<&mut CatalogEntry> {
        self.entries.get_mut(key)
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values()
    }

    pub fn entries_mut(&mut self) -> impl Iterator<Item = &mut CatalogEntry> {
        self.entries.values_mut()
    }

    pub fn of_dim(&self, d: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.values().filter(move |e| e.dim() == d)
    }

    /// Inserts `g`, found with `n_context` nodes per layer, or merges it into its type.
    pub fn insert(&mut self, g: &FaceGraph, n_context: usize) -> &CatalogEntry {
        let key = type_key(g);
        self.insert_keyed(key, g, n_context)
    }

    /// As [`Catalog::insert`] with the type key already known.
    pub fn insert_keyed(&mut self, key: TypeKey, g: &FaceGraph, n_context: usize) -> &CatalogEntry {
        let rep = normalized_rep(g);
        if let Some(e) = self.entries.get_mut(&key) {
            e.bdim = e.bdim.min(n_context);
            if rep_order_key(&rep) < rep_order_key(&e.rep) {
                e.rep = rep;
            }
        } else {
            let fvec = faces::f_vector(g, DEFAULT_FACE_CAP).expect("catalog faces fit the default cap");
            let entry = CatalogEntry {
                fingerprint: TypeFingerprint { key: key.clone(), fvec },
                bdim: n_context,
                rep,
                flags: None,
                recipe: None,
            };
            self.entries.insert(key.clone(), entry);
        }
        &self.entries[&key]
    }

    /// Union of two catalogs; the result does not depend on the order of merging.
    pub fn merge(&mut self, other: Catalog) {
        for (k, e) in other.entries {
            match self.entries.get_mut(&k) {
                Some(mine) => mine.absorb(e),
                None => {
                    self.entries.insert(k, e);
                }
            }
        }
    }

    pub fn compute_flags(&mut self) {
        for e in self.entries.values_mut() {
            if e.flags.is_none() {
                e.flags = Some(compute_flags(&e.rep));
            }
        }
    }
}

/// Brute-force lattice isomorphism check used to validate the canonical forms: two
/// incidences are isomorphic iff some facet bijection maps the vertex rows onto each
/// other as multisets. Exponential in the facet count.
pub fn incidences_isomorphic_brute_force(a: &VertexFacetIncidence, b: &VertexFacetIncidence) -> bool {
    if a.vertices != b.vertices || a.facets != b.facets {
        return false;
    }
    let f = a.facets;
    let mut target = b.rows.clone();
    target.sort_unstable();
    let mut perm: Vec<usize> = (0..f).collect();
    let mut used = vec![false; f];
    fn rec(
        k: usize,
        a: &VertexFacetIncidence,
        b: &VertexFacetIncidence,
        target: &[u64],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let f = a.facets;
        if k == f {
            let mut img: Vec<u64> =
                a.rows.iter().map(|&r| bits(r).fold(0u64, |acc, c| acc | 1 << perm[c])).collect();
            img.sort_unstable();
            return img == target;
        }
        // Facet sizes must agree.
        let size_a = a.rows.iter().filter(|&&r| r >> k & 1 == 1).count();
        for j in 0..f {
            if used[j] || b.rows.iter().filter(|&&r| r >> j & 1 == 1).count() != size_a {
                continue;
            }
            used[j] = true;
            perm[k] = j;
            if rec(k + 1, a, b, target, perm, used) {
                return true;
            }
            used[j] = false;
        }
        false
    }
    rec(0, a, b, &target, &mut perm, &mut used)
}
