//! JSON and JSONL formats for graphs, catalogs, reports, lattices and recipes.
//!
//! Writers normalize (sorted edges, compact output) so that reading and re-writing a file
//! reproduces it byte for byte.

use std::collections::BTreeMap;

use base64::engine::general_purpose::STANDARD as BASE64;
use base64::Engine;
use bfk_core::constructions::{self, Recipe};
use bfk_core::enumeration::ClassificationReport;
use bfk_core::faces::{self, FaceData, Lattice};
use bfk_core::types::{Catalog, CatalogEntry, TypeKey};
use bfk_core::{FaceGraph, Graph, GraphError, MultiGraph};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid graph: {0}")]
    Graph(#[from] GraphError),
    #[error("{0}")]
    Invalid(String),
}

/// `{"n": .., "edges": [[u, v], ..], "mult": [[u, v, count], ..]}`; `mult` lists only
/// bundles of two or more edges and is omitted for simple graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Vec<[usize; 3]>>,
}

impl GraphJson {
    pub fn from_multigraph(g: &MultiGraph) -> GraphJson {
        let entries = g.entries();
        let edges = entries.iter().map(|&(u, v, _)| [u, v]).collect();
        let mult: Vec<[usize; 3]> =
            entries.iter().filter(|e| e.2 > 1).map(|&(u, v, c)| [u, v, c as usize]).collect();
        GraphJson { n: g.n(), edges, mult: (!mult.is_empty()).then_some(mult) }
    }

    pub fn from_graph(g: &Graph) -> GraphJson {
        GraphJson::from_multigraph(&MultiGraph::from(g))
    }

    /// Edges in any order; a `mult` entry overrides the multiplicity of its edge.
    pub fn to_multigraph(&self) -> Result<MultiGraph, FormatError> {
        let mut counts: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for &[u, v] in &self.edges {
            counts.insert((u, v), 1);
        }
        for &[u, v, c] in self.mult.iter().flatten() {
            if c == 0 {
                return Err(FormatError::Invalid(format!("zero multiplicity on edge ({u},{v})")));
            }
            counts.insert((u, v), c as u32);
        }
        let entries: Vec<(usize, usize, u32)> = counts.into_iter().map(|((u, v), c)| (u, v, c)).collect();
        Ok(MultiGraph::from_entries(self.n, &entries)?)
    }
}

pub fn parse_graph(text: &str) -> Result<MultiGraph, FormatError> {
    serde_json::from_str::<GraphJson>(text)?.to_multigraph()
}

pub fn write_graph(g: &MultiGraph) -> String {
    serde_json::to_string(&GraphJson::from_multigraph(g)).expect("graph JSON serializes")
}

/// Short hexadecimal digest of a type key.
pub fn digest(key: &TypeKey) -> String {
    let mut h = Sha256::new();
    h.update((key.dim as u64).to_le_bytes());
    h.update(&key.canon);
    h.finalize()[..8].iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsJson {
    pub product: bool,
    pub pyramid: bool,
    pub cube: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wedge: Option<bool>,
}

/// One catalog line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogLine {
    pub dim: usize,
    pub bdim: usize,
    pub digest: String,
    pub canon: String,
    pub fvec: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flags: Option<FlagsJson>,
    pub rep: GraphJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<RecipeJson>,
}

impl CatalogLine {
    pub fn from_entry(e: &CatalogEntry) -> CatalogLine {
        let key = &e.fingerprint.key;
        CatalogLine {
            dim: key.dim,
            bdim: e.bdim,
            digest: digest(key),
            canon: BASE64.encode(&key.canon),
            fvec: e.fingerprint.fvec.clone(),
            flags: e.flags.map(|f| FlagsJson {
                product: f.is_product,
                pyramid: f.is_pyramid,
                cube: f.is_cube,
                wedge: f.is_wedge_constructible,
            }),
            rep: GraphJson::from_graph(e.rep.graph()),
            recipe: e.recipe.as_ref().map(RecipeJson::from_recipe),
        }
    }

    pub fn key(&self) -> Result<TypeKey, FormatError> {
        let canon = BASE64.decode(&self.canon).map_err(|e| FormatError::Invalid(e.to_string()))?;
        Ok(TypeKey { dim: self.dim, canon })
    }
}

/// Catalog as JSONL, lines in `(dim, canon)` order.
pub fn catalog_jsonl(c: &Catalog) -> String {
    let mut out = String::new();
    for e in c.entries() {
        out.push_str(&serde_json::to_string(&CatalogLine::from_entry(e)).expect("catalog line serializes"));
        out.push('\n');
    }
    out
}

pub fn parse_catalog_jsonl(text: &str) -> Result<Vec<CatalogLine>, FormatError> {
    text.lines().filter(|l| !l.trim().is_empty()).map(|l| Ok(serde_json::from_str(l)?)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimJson {
    pub non_product: usize,
    pub product: usize,
    pub pyramids: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub d_max: usize,
    pub dims: BTreeMap<String, DimJson>,
    pub product_collisions: usize,
    pub overlaps: usize,
}

pub fn report_json(r: &ClassificationReport) -> String {
    let dims = r
        .dims
        .iter()
        .map(|(d, c)| {
            (d.to_string(), DimJson { non_product: c.non_product, product: c.product, pyramids: c.pyramids })
        })
        .collect();
    let j = ReportJson { d_max: r.d_max, dims, product_collisions: r.product_collisions, overlaps: r.overlaps };
    serde_json::to_string_pretty(&j).expect("report serializes") + "\n"
}

/// Faces of every dimension as hexadecimal masks over the host's sorted edge list (bit
/// `i` is edge `i`), most significant digit first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeJson {
    pub graph: GraphJson,
    pub levels: Vec<Vec<String>>,
}

pub fn lattice_json(g: &FaceGraph, lattice: &Lattice) -> LatticeJson {
    let data = FaceData::new(g);
    let edges = g.edges();
    let levels = lattice
        .levels
        .iter()
        .map(|level| {
            level
                .iter()
                .map(|face| {
                    let sub = data.subgraph(face);
                    let mut words = vec![0u64; edges.len().div_ceil(64).max(1)];
                    for (i, &(u, v)) in edges.iter().enumerate() {
                        if sub.rows[u] >> v & 1 == 1 {
                            words[i / 64] |= 1 << (i % 64);
                        }
                    }
                    let mut s: String = words.iter().rev().map(|w| format!("{w:016x}")).collect();
                    let trimmed = s.trim_start_matches('0').len();
                    s.drain(..s.len() - trimmed.max(1));
                    s
                })
                .collect()
        })
        .collect();
    LatticeJson { graph: GraphJson::from_graph(g.graph()), levels }
}

/// `{"kind": .., "operands": [graph, ..], "params": {..}}`. Omitted parameters default to
/// the first pyramidal set or facet-defining set of each operand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecipeJson {
    pub kind: String,
    pub operands: Vec<GraphJson>,
    #[serde(default)]
    pub params: RecipeParams,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecipeParams {
    /// Pyramidal pairs: one list for a pyramid, one list per operand for joined products.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<Vec<[usize; 2]>>>,
    /// Facet-defining edge set for wedges.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub removed: Option<Vec<[usize; 2]>>,
    /// Node pairs of a circular connection.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub choices: Option<Vec<[usize; 2]>>,
}

fn pairs_of(v: &[[usize; 2]]) -> Vec<(usize, usize)> {
    v.iter().map(|&[a, b]| (a, b)).collect()
}

fn arrays_of(v: &[(usize, usize)]) -> Vec<[usize; 2]> {
    v.iter().map(|&(a, b)| [a, b]).collect()
}

impl RecipeJson {
    pub fn from_recipe(r: &Recipe) -> RecipeJson {
        let g = |x: &Graph| GraphJson::from_graph(x);
        let mut params = RecipeParams::default();
        let operands = match r {
            Recipe::Product { factors } => factors.iter().map(g).collect(),
            Recipe::Pyramid { base, pairs } => {
                params.pairs = Some(vec![arrays_of(pairs)]);
                vec![g(base)]
            }
            Recipe::WedgeFacet { base, removed } | Recipe::WedgeComplement { base, removed } => {
                params.removed = Some(arrays_of(removed));
                vec![g(base)]
            }
            Recipe::JoinedProduct { parts } | Recipe::ReducedJoinedProduct { parts } => {
                params.pairs = Some(parts.iter().map(|(_, p)| arrays_of(p)).collect());
                parts.iter().map(|(x, _)| g(x)).collect()
            }
            Recipe::CircularConnection { parts, choices } => {
                params.choices = Some(arrays_of(choices));
                parts.iter().map(g).collect()
            }
        };
        RecipeJson { kind: r.kind().to_string(), operands, params }
    }

    /// Resolves defaults and builds the recipe. Operands must be face graphs, except for
    /// circular connections.
    pub fn to_recipe(&self) -> Result<Recipe, FormatError> {
        let graphs: Vec<Graph> = self
            .operands
            .iter()
            .map(|o| {
                let m = o.to_multigraph()?;
                if m.is_simple() {
                    Ok(m.support())
                } else {
                    Ok(m.resolution()?.into_graph())
                }
            })
            .collect::<Result<_, FormatError>>()?;
        let faces = || -> Result<Vec<FaceGraph>, FormatError> {
            graphs.iter().map(|x| Ok(FaceGraph::new(x.clone())?)).collect()
        };
        let one = |what: &str| -> Result<(), FormatError> {
            if graphs.len() != 1 {
                return Err(FormatError::Invalid(format!("{what} takes exactly one operand")));
            }
            Ok(())
        };
        let first_pyramidal = |f: &FaceGraph| -> Result<Vec<(usize, usize)>, FormatError> {
            constructions::find_pyramidal_sets(f)
                .into_iter()
                .next()
                .map(|s| s.pairs)
                .ok_or_else(|| FormatError::Invalid("operand has no pyramidal set".into()))
        };
        let recipe = match self.kind.as_str() {
            "product" => {
                faces()?;
                Recipe::Product { factors: graphs }
            }
            "pyramid" => {
                one("pyramid")?;
                let f = &faces()?[0];
                let pairs = match &self.params.pairs {
                    Some(p) if p.len() == 1 => pairs_of(&p[0]),
                    Some(_) => return Err(FormatError::Invalid("pyramid takes one list of pairs".into())),
                    None => first_pyramidal(f)?,
                };
                Recipe::Pyramid { base: graphs[0].clone(), pairs }
            }
            "wedge_facet" | "wedge_complement" => {
                one("wedge")?;
                let f = &faces()?[0];
                let removed = match &self.params.removed {
                    Some(r) => pairs_of(r),
                    None => faces::facet_defining_sets(f)
                        .map_err(|e| FormatError::Invalid(e.to_string()))?
                        .into_iter()
                        .next()
                        .map(|s| s.removed)
                        .ok_or_else(|| FormatError::Invalid("operand has no facets".into()))?,
                };
                let base = graphs[0].clone();
                if self.kind == "wedge_facet" {
                    Recipe::WedgeFacet { base, removed }
                } else {
                    Recipe::WedgeComplement { base, removed }
                }
            }
            "joined_product" | "reduced_joined_product" => {
                let fs = faces()?;
                let pairs: Vec<Vec<(usize, usize)>> = match &self.params.pairs {
                    Some(p) if p.len() == fs.len() => p.iter().map(|x| pairs_of(x)).collect(),
                    Some(_) => return Err(FormatError::Invalid("need one list of pairs per operand".into())),
                    None => fs.iter().map(first_pyramidal).collect::<Result<_, _>>()?,
                };
                let parts = graphs.into_iter().zip(pairs).collect();
                if self.kind == "joined_product" {
                    Recipe::JoinedProduct { parts }
                } else {
                    Recipe::ReducedJoinedProduct { parts }
                }
            }
            "circular_connection" => {
                let choices = self
                    .params
                    .choices
                    .as_ref()
                    .map(|c| pairs_of(c))
                    .ok_or_else(|| FormatError::Invalid("circular_connection needs choices".into()))?;
                Recipe::CircularConnection { parts: graphs, choices }
            }
            other => return Err(FormatError::Invalid(format!("unknown recipe kind {other:?}"))),
        };
        Ok(recipe)
    }
}

pub fn parse_recipe(text: &str) -> Result<Recipe, FormatError> {
    serde_json::from_str::<RecipeJson>(text)?.to_recipe()
}
