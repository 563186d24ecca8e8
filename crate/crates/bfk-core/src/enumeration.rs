//! Generation of all connected irreducible face graphs of given size and dimension, and
//! the classification of combinatorial types built on it.
//!
//! Upper nodes are filled one at a time along a non-increasing degree sequence. Lower
//! nodes that are indistinguishable so far form contiguous classes; a new row always
//! takes the lowest free columns of each class, and rows of equal degree appear in
//! non-increasing order of their bit-reversed masks. Every graph has a labelling of this
//! form, so this loses nothing; the remaining duplicates are removed by a canonical form.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::{bits, low_mask};
use crate::constructions::{self, Recipe};
use crate::faces::{self, FaceData, DEFAULT_FACE_CAP};
use crate::graph::{FaceGraph, Graph};
use crate::matching;
use crate::reduction::{self, Bounds};
use crate::types::{self, rep_order_key, Catalog, TypeKey, VertexFacetIncidence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SearchOptions {
    /// Use the degree, degree-2 count and partner bounds. Turning this off only costs time.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { prune: true }
    }
}

/// An independent piece of the search for one `(n, d)`: a degree sequence and the first
/// rows of the graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shard {
    pub n: usize,
    pub d: usize,
    pub opts: SearchOptions,
    pub degrees: Vec<usize>,
    pub prefix: Vec<u64>,
}

/// Types found in one shard, each with its least representative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ShardResult {
    pub n: usize,
    pub d: usize,
    pub types: BTreeMap<TypeKey, FaceGraph>,
}

const SHARD_DEPTH: usize = 2;

fn degree_sequences(n: usize, m: usize, maxdeg: usize, max_two: Option<usize>) -> Vec<Vec<usize>> {
    fn rec(
        n: usize,
        left: usize,
        cap: usize,
        cur: &mut Vec<usize>,
        max_two: Option<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let slots = n - cur.len();
        if slots == 0 {
            if left == 0 && max_two.is_none_or(|t| cur.iter().filter(|&&x| x == 2).count() <= t) {
                out.push(cur.clone());
            }
            return;
        }
        for k in (2..=cap).rev() {
            if k > left || left - k < 2 * (slots - 1) || left - k > k * (slots - 1) {
                continue;
            }
            cur.push(k);
            rec(n, left - k, k, cur, max_two, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, maxdeg.min(n), &mut Vec::new(), max_two, &mut out);
    out
}

struct Search<'a> {
    n: usize,
    maxdeg: usize,
    prune: bool,
    degs: &'a [usize],
    /// `suffix[i]` = edges still to place once rows `0..i` are done.
    suffix: Vec<usize>,
    rows: Vec<u64>,
    col_deg: [u8; 64],
    /// `bounds[i]`: bit `c` set when column `c` starts a class after `i` rows.
    bounds: Vec<u64>,
    load: [u8; 64],
    /// Shard collection depth, or `usize::MAX` for a full search.
    stop: usize,
    prefixes: Vec<Vec<u64>>,
    found: BTreeMap<Vec<u8>, Graph>,
}

impl<'a> Search<'a> {
    fn new(n: usize, d: usize, degs: &'a [usize], opts: SearchOptions) -> Search<'a> {
        let maxdeg = if opts.prune { Bounds::new(n, d).max_degree.min(n) } else { n };
        let mut suffix = vec![0usize; n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1] + degs[i];
        }
        let mut bounds = vec![0u64; n + 1];
        bounds[0] = 1;
        Search {
            n,
            maxdeg,
            prune: opts.prune,
            degs,
            suffix,
            rows: vec![0; n],
            col_deg: [0; 64],
            bounds,
            load: [0; 64],
            stop: usize::MAX,
            prefixes: Vec::new(),
            found: BTreeMap::new(),
        }
    }

    fn classes(&self, i: usize) -> Vec<(usize, usize)> {
        let b = self.bounds[i];
        let starts: Vec<usize> = bits(b).collect();
        starts.iter().enumerate().map(|(j, &s)| (s, starts.get(j + 1).copied().unwrap_or(self.n))).collect()
    }

    /// Masks for row `i` in decreasing order of their bit-reversed value.
    fn candidates(&self, i: usize) -> Vec<u64> {
        let classes = self.classes(i);
        let caps: Vec<usize> = classes
            .iter()
            .map(|&(s, e)| if (self.col_deg[s] as usize) < self.maxdeg { e - s } else { 0 })
            .collect();
        let mut out = Vec::new();
        fn rec(j: usize, left: usize, mask: u64, classes: &[(usize, usize)], caps: &[usize], out: &mut Vec<u64>) {
            if j == classes.len() {
                if left == 0 {
                    out.push(mask);
                }
                return;
            }
            let room: usize = caps[j + 1..].iter().sum();
            let hi = caps[j].min(left);
            let lo = left.saturating_sub(room);
            for c in (lo..=hi).rev() {
                let s = classes[j].0;
                rec(j + 1, left - c, mask | low_mask(c) << s, classes, caps, out);
            }
        }
        rec(0, self.degs[i], 0, &classes, &caps, &mut out);
        out
    }

    /// Places row `i`; returns false (with nothing changed) when the partner rules of
    /// the pruned search reject it.
    fn place(&mut self, i: usize, mask: u64) -> bool {
        if self.prune && self.n >= 3 && self.degs[i] == 2 {
            if i > 0 && self.rows[i - 1] == mask {
                return false;
            }
            let partners: Vec<usize> = (0..i).filter(|&p| self.degs[p] >= 3 && self.rows[p] & mask == mask).collect();
            if partners.is_empty() || partners.iter().any(|&p| self.load[p] as usize + 1 > self.degs[p] - 1) {
                return false;
            }
            for p in partners {
                self.load[p] += 1;
            }
        }
        self.rows[i] = mask;
        for c in bits(mask) {
            self.col_deg[c] += 1;
        }
        let mut nb = self.bounds[i];
        for (s, e) in self.classes(i) {
            let cnt = (mask & low_mask(e - s) << s).count_ones() as usize;
            if cnt > 0 && cnt < e - s {
                nb |= 1 << (s + cnt);
            }
        }
        self.bounds[i + 1] = nb;
        true
    }

    fn unplace(&mut self, i: usize) {
        let mask = self.rows[i];
        for c in bits(mask) {
            self.col_deg[c] -= 1;
        }
        if self.prune && self.n >= 3 && self.degs[i] == 2 {
            for p in 0..i {
                if self.degs[p] >= 3 && self.rows[p] & mask == mask {
                    self.load[p] -= 1;
                }
            }
        }
        self.rows[i] = 0;
    }

    /// Can the columns still be completed after rows `0..=i`?
    fn columns_feasible(&self, i: usize) -> bool {
        let rem_rows = self.n - i - 1;
        let rem_edges = self.suffix[i + 1];
        let (mut need, mut room) = (0usize, 0usize);
        for c in 0..self.n {
            let deg = self.col_deg[c] as usize;
            if deg + rem_rows < 2 {
                return false;
            }
            need += 2usize.saturating_sub(deg);
            room += self.maxdeg.saturating_sub(deg).min(rem_rows);
        }
        need <= rem_edges && room >= rem_edges
    }

    fn extend(&mut self, i: usize) {
        if i == self.stop {
            self.prefixes.push(self.rows[..i].to_vec());
            return;
        }
        if i == self.n {
            self.leaf();
            return;
        }
        let prev_key = (i > 0 && self.degs[i - 1] == self.degs[i]).then(|| self.rows[i - 1].reverse_bits());
        for mask in self.candidates(i) {
            if prev_key.is_some_and(|k| mask.reverse_bits() > k) {
                continue;
            }
            if !self.place(i, mask) {
                continue;
            }
            if self.columns_feasible(i) {
                self.extend(i + 1);
            }
            self.unplace(i);
        }
    }

    fn leaf(&mut self) {
        let n = self.n;
        if (0..n).any(|c| (self.col_deg[c] as usize) < 2 || self.col_deg[c] as usize > self.maxdeg) {
            return;
        }
        let g = Graph::from_rows(self.rows.clone());
        if !reduction::is_irreducible(&g) || !g.is_connected() || !matching::connected_graph_is_elementary(&self.rows, n)
        {
            return;
        }
        let (cert, canon) = types::graph_canonical(&g);
        self.found.entry(cert).or_insert(canon);
    }
}

/// Shards covering the whole search for `(n, d)`.
pub fn shards(n: usize, d: usize, opts: SearchOptions) -> Vec<Shard> {
    if n == 0 || n > 2 * d || n > crate::graph::MAX_NODES {
        return Vec::new();
    }
    let b = Bounds::new(n, d);
    if opts.prune && !b.feasible() {
        return Vec::new();
    }
    let maxdeg = if opts.prune { b.max_degree.min(n) } else { n };
    let max_two = (opts.prune && n >= 3).then_some(b.max_minimal);
    let mut out = Vec::new();
    for degs in degree_sequences(n, b.edges, maxdeg, max_two) {
        let mut s = Search::new(n, d, &degs, opts);
        s.stop = SHARD_DEPTH.min(n);
        s.extend(0);
        for prefix in s.prefixes {
            out.push(Shard { n, d, opts, degrees: degs.clone(), prefix });
        }
    }
    out
}

/// Runs one shard and groups its graphs by type.
pub fn run_shard(shard: &Shard) -> ShardResult {
    let mut s = Search::new(shard.n, shard.d, &shard.degrees, shard.opts);
    let mut ok = true;
    for (i, &mask) in shard.prefix.iter().enumerate() {
        ok &= s.place(i, mask);
    }
    debug_assert!(ok, "shard prefixes come from the same search");
    s.extend(shard.prefix.len());
    let mut types: BTreeMap<TypeKey, FaceGraph> = BTreeMap::new();
    for g in s.found.into_values() {
        let fg = FaceGraph::new(g).expect("search leaves are elementary");
        debug_assert_eq!(fg.dimension(), shard.d);
        let key = types::type_key(&fg);
        match types.get_mut(&key) {
            Some(rep) if rep_order_key(&fg) < rep_order_key(rep) => *rep = fg,
            Some(_) => {}
            None => {
                types.insert(key, fg);
            }
        }
    }
    ShardResult { n: shard.n, d: shard.d, types }
}

/// Union of shard results for the same `(n, d)`, independent of their order.
pub fn merge_results(results: impl IntoIterator<Item = ShardResult>) -> BTreeMap<(usize, usize), BTreeMap<TypeKey, FaceGraph>> {
    let mut out: BTreeMap<(usize, usize), BTreeMap<TypeKey, FaceGraph>> = BTreeMap::new();
    for r in results {
        let slot = out.entry((r.d, r.n)).or_default();
        for (k, g) in r.types {
            match slot.get_mut(&k) {
                Some(rep) if rep_order_key(&g) < rep_order_key(rep) => *rep = g,
                Some(_) => {}
                None => {
                    slot.insert(k, g);
                }
            }
        }
    }
    out
}

/// All connected irreducible face graphs with `n` nodes per layer and dimension `d`, one
/// per combinatorial type, sorted by type key.
pub fn generate_face_graphs(n: usize, d: usize) -> Vec<FaceGraph> {
    generate_face_graphs_with(n, d, SearchOptions::default())
}

pub fn generate_face_graphs_with(n: usize, d: usize, opts: SearchOptions) -> Vec<FaceGraph> {
    let results = shards(n, d, opts).iter().map(run_shard).collect::<Vec<_>>();
    merge_results(results).into_values().flat_map(|m| m.into_values()).collect()
}

/// Every shard needed to classify dimensions `1..=d_max`.
pub fn classification_shards(d_max: usize, opts: SearchOptions) -> Vec<Shard> {
    (1..=d_max).flat_map(|d| (1..=2 * d).flat_map(move |n| shards(n, d, opts))).collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DimCounts {
    pub non_product: usize,
    pub product: usize,
    pub pyramids: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClassificationReport {
    pub d_max: usize,
    pub dims: BTreeMap<usize, DimCounts>,
    /// Product types that arise from two different multisets of factors.
    pub product_collisions: usize,
    /// Types found both as connected graphs and as products.
    pub overlaps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub d_max: usize,
    /// Types of connected irreducible face graphs.
    pub connected: Catalog,
    /// Products of at least two connected types of positive dimension.
    pub products: Catalog,
    pub report: ClassificationReport,
}

impl Classification {
    /// Connected and product types together.
    pub fn catalog(&self) -> Catalog {
        let mut c = self.connected.clone();
        c.merge(self.products.clone());
        c
    }
}

/// Sequential classification of all types of dimension `1..=d_max`.
pub fn classify(d_max: usize, opts: SearchOptions) -> Classification {
    let results = classification_shards(d_max, opts).iter().map(run_shard).collect::<Vec<_>>();
    assemble(d_max, results)
}

/// Builds the catalogs and report from shard results (in any order).
pub fn assemble(d_max: usize, results: Vec<ShardResult>) -> Classification {
    let merged = merge_results(results);
    let mut connected = Catalog::new();
    for ((_, n), types) in merged {
        for (key, g) in types {
            connected.insert_keyed(key, &g, n);
        }
    }
    connected.compute_flags();
    let mut products = Catalog::new();
    let mut collisions = 0;
    for d in 2..=d_max {
        let (cat, c) = count_product_types(d, &connected);
        collisions += c;
        products.merge(cat);
    }
    products.compute_flags();
    let overlaps = products.entries().filter(|e| connected.get(&e.fingerprint.key).is_some()).count();
    let mut dims = BTreeMap::new();
    for d in 1..=d_max {
        let non_product = connected.of_dim(d).count();
        let pyramids = connected.of_dim(d).filter(|e| e.flags.is_some_and(|f| f.is_pyramid)).count();
        let product = products.of_dim(d).count();
        dims.insert(d, DimCounts { non_product, product, pyramids });
    }
    let report = ClassificationReport { d_max, dims, product_collisions: collisions, overlaps };
    Classification { d_max, connected, products, report }
}

fn partitions(d: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if d == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=max.min(d)).rev() {
        cur.push(p);
        partitions(d - p, p, cur, out);
        cur.pop();
    }
}

/// Multisets of `k` indices below `len`, as non-decreasing sequences.
fn multisets(len: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(len: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..len {
            cur.push(i);
            rec(len, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Product types of dimension `d`: every multiset of at least two connected types of
/// positive dimension with dimensions summing to `d`. Returns the catalog and the number
/// of multisets whose type had already been produced by another multiset.
pub fn count_product_types(d: usize, connected: &Catalog) -> (Catalog, usize) {
    let by_dim: BTreeMap<usize, Vec<&types::CatalogEntry>> =
        (1..d).map(|k| (k, connected.of_dim(k).collect())).collect();
    let mut parts_list = Vec::new();
    partitions(d, d - 1, &mut Vec::new(), &mut parts_list);
    let mut cat = Catalog::new();
    let mut collisions = 0;
    for parts in parts_list {
        // Group equal part sizes; each group picks a multiset of types of that size.
        let mut groups: Vec<(usize, usize)> = Vec::new();
        for &p in &parts {
            match groups.last_mut() {
                Some((s, c)) if *s == p => *c += 1,
                _ => groups.push((p, 1)),
            }
        }
        let choices: Vec<Vec<Vec<usize>>> =
            groups.iter().map(|&(s, c)| multisets(by_dim[&s].len(), c)).collect();
        if choices.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut idx = vec![0usize; groups.len()];
        'multisets: loop {
            let factors: Vec<&types::CatalogEntry> = groups
                .iter()
                .enumerate()
                .flat_map(|(g, &(s, _))| choices[g][idx[g]].iter().map(move |&t| (s, t)))
                .map(|(s, t)| by_dim[&s][t])
                .collect();
            let mut graph = factors[0].rep.clone();
            for f in &factors[1..] {
                graph = graph.product(&f.rep).expect("product of catalog representatives fits");
            }
            let bdim: usize = factors.iter().map(|f| f.bdim).sum();
            let key = types::type_key(&graph);
            if cat.get(&key).is_some() {
                collisions += 1;
            }
            let recipe = Recipe::Product { factors: factors.iter().map(|f| f.rep.graph().clone()).collect() };
            cat.insert_keyed(key.clone(), &graph, bdim);
            let e = cat.get_mut(&key).expect("just inserted");
            e.recipe = Some(match e.recipe.take() {
                Some(r) => r.min(recipe),
                None => recipe,
            });
            let mut p = groups.len();
            loop {
                if p == 0 {
                    break 'multisets;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < choices[p].len() {
                    break;
                }
                idx[p] = 0;
            }
        }
    }
    (cat, collisions)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    /// Birkhoff dimension at most `2d`.
    BdimAtMostTwiceDim,
    /// Birkhoff dimension `2d`: a cube.
    CubeAtTwiceDim,
    /// Birkhoff dimension `2d - 1`: a cube times a triangle.
    CubeTriangle,
    /// Birkhoff dimension `2d - 2`: one of three families.
    TwiceDimMinusTwo,
    /// Birkhoff dimension `2d - 3`, not a product: pyramid over cube times triangle, or a
    /// (reduced) joined product of cubes.
    TwiceDimMinusThree,
    /// Not a product and Birkhoff dimension at least `d`: a pyramid or a wedge.
    WedgeOrProduct,
    /// Connected types have at most `3(d - 1)` facets.
    FacetBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub claim: Claim,
    pub dim: usize,
    pub bdim: usize,
    pub subject: TypeKey,
    pub passed: bool,
    pub detail: String,
}

fn key_of(g: &FaceGraph) -> TypeKey {
    types::type_key(g)
}

fn prod(parts: &[FaceGraph]) -> FaceGraph {
    let mut acc = parts[0].clone();
    for p in &parts[1..] {
        acc = acc.product(p).expect("small products fit");
    }
    acc
}

fn pyr(g: &FaceGraph) -> FaceGraph {
    let s = constructions::find_pyramidal_sets(g).into_iter().next().expect("standard faces have pyramidal sets");
    constructions::pyramid(g, &s.pairs).expect("pyramidal set")
}

fn cube_factors(k: usize) -> Vec<FaceGraph> {
    if k == 0 {
        Vec::new()
    } else {
        vec![constructions::cube(k)]
    }
}

fn family(d: usize, offset: usize) -> Vec<TypeKey> {
    use constructions::{cube, reduced_joined_product, triangle, with_first_pyramidal};
    let mut out = Vec::new();
    match offset {
        1 if d >= 2 => {
            let mut f = cube_factors(d - 2);
            f.push(triangle());
            out.push(key_of(&prod(&f)));
        }
        2 if d >= 2 => {
            out.push(key_of(&pyr(&cube(d - 1))));
            for b in 2..d {
                let a = d - 1 - b;
                if a >= 1 {
                    out.push(key_of(&prod(&[cube(a), pyr(&cube(b))])));
                }
            }
            if d >= 4 {
                let mut f = vec![triangle(), triangle()];
                f.extend(cube_factors(d - 4));
                out.push(key_of(&prod(&f)));
            }
        }
        3 if d >= 3 => {
            let mut f = cube_factors(d - 3);
            f.push(triangle());
            out.push(key_of(&pyr(&prod(&f))));
            for a in 1..d.saturating_sub(2) {
                let b = d - 2 - a;
                if b >= a {
                    let parts = with_first_pyramidal(&[cube(a), cube(b)]).expect("cubes have pyramidal sets");
                    out.push(key_of(&reduced_joined_product(&parts).expect("joined product")));
                }
            }
            for a in 1..d {
                for b in a..d {
                    if a + b + b > d - 2 {
                        break;
                    }
                    let c = d - 2 - a - b;
                    if c < b {
                        continue;
                    }
                    let parts =
                        with_first_pyramidal(&[cube(a), cube(b), cube(c)]).expect("cubes have pyramidal sets");
                    out.push(key_of(&constructions::joined_product(&parts).expect("joined product")));
                }
            }
        }
        _ => {}
    }
    out
}

/// Keys of all wedges of `dim`-dimensional catalog types over their proper nonempty faces.
fn wedge_keys(catalog: &Catalog, dim: usize) -> BTreeSet<TypeKey> {
    let mut out = BTreeSet::new();
    for e in catalog.of_dim(dim) {
        let data = FaceData::new(&e.rep);
        let Ok((rows, f)) = data.incidence() else { continue };
        let inc = VertexFacetIncidence::new(f, rows);
        let Ok(lattice) = data.lattice(DEFAULT_FACE_CAP) else { continue };
        for level in &lattice.levels[..dim] {
            for face in level {
                out.insert(TypeKey::from_incidence(dim + 1, &inc.wedge(face)));
            }
        }
    }
    out
}

/// Checks the structural claims for every type of the classification.
pub fn verify_theorems(c: &Classification) -> Vec<Verdict> {
    let catalog = c.catalog();
    let mut out = Vec::new();
    for d in 1..=c.d_max {
        let fam: Vec<Vec<TypeKey>> = (0..4).map(|o| if o == 0 { vec![key_of(&constructions::cube(d))] } else { family(d, o) }).collect();
        let wedges = if d >= 2 { wedge_keys(&catalog, d - 1) } else { BTreeSet::new() };
        for e in catalog.of_dim(d) {
            let key = e.fingerprint.key.clone();
            let flags = e.flags.expect("classification computes flags");
            let connected = c.connected.get(&key).is_some();
            let mut push = |claim: Claim, passed: bool, detail: String| {
                out.push(Verdict { claim, dim: d, bdim: e.bdim, subject: key.clone(), passed, detail });
            };
            push(Claim::BdimAtMostTwiceDim, e.bdim <= 2 * d, format!("bdim {} vs {}", e.bdim, 2 * d));
            if e.bdim + 3 >= 2 * d {
                let off = 2 * d - e.bdim;
                let member = fam[off].contains(&key);
                match off {
                    0 => push(Claim::CubeAtTwiceDim, member && flags.is_cube, String::from("cube")),
                    1 => push(Claim::CubeTriangle, member, String::from("cube times triangle")),
                    2 => push(Claim::TwiceDimMinusTwo, member, String::from("pyramid over cube, cube times such, two triangles times cube")),
                    _ if connected => push(Claim::TwiceDimMinusThree, member, String::from("families of the 2d-3 stratum")),
                    _ => {}
                }
            }
            if connected && d >= 2 {
                let facets = e.fingerprint.fvec.last().copied().unwrap_or(0);
                push(Claim::FacetBound, facets <= 3 * (d - 1), format!("{} facets, bound {}", facets, 3 * (d - 1)));
            }
            if connected && d >= 2 && e.bdim >= d {
                let ok = flags.is_pyramid || wedges.contains(&key);
                push(Claim::WedgeOrProduct, ok, String::from(if flags.is_pyramid { "pyramid" } else { "wedge" }));
            }
        }
    }
    out
}

/// Graphs of `n` nodes per layer by exhaustive search over all `2^(n^2)` edge sets,
/// filtered and grouped by type. Reference for small `n` only.
pub fn brute_force_face_graphs(n: usize, d: usize) -> BTreeMap<TypeKey, FaceGraph> {
    assert!(n <= 4, "exhaustive search is limited to n <= 4");
    let mut out: BTreeMap<TypeKey, FaceGraph> = BTreeMap::new();
    let total = 1u64 << (n * n);
    for code in 0..total {
        if code.count_ones() as usize != d + 2 * n - 1 {
            continue;
        }
        let rows: Vec<u64> = (0..n).map(|u| code >> (u * n) & low_mask(n)).collect();
        let g = Graph::from_rows(rows);
        if !g.is_connected() || !g.is_elementary() || !reduction::is_irreducible(&g) {
            continue;
        }
        let fg = FaceGraph::new(g).expect("checked");
        let key = types::type_key(&fg);
        let rep = types::normalized_rep(&fg);
        match out.get_mut(&key) {
            Some(r) if rep_order_key(&rep) < rep_order_key(r) => *r = rep,
            Some(_) => {}
            None => {
                out.insert(key, rep);
            }
        }
    }
    out
}

/// The facet count of a face, read off its f-vector.
pub fn facet_count(g: &FaceGraph) -> usize {
    faces::facets(g).len()
}
