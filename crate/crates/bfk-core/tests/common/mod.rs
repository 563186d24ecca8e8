//! Brute-force oracles for the integration tests. They work from the definitions
//! (permutations, affine rank, vertex-subset closures) and share no code with the
//! library's matching, face or canonical-form routines.
#![allow(dead_code)]

pub mod fixtures;

use std::collections::BTreeSet;

use bfk_core::{FaceGraph, Graph};
use proptest::prelude::*;

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

pub fn face(n: usize, edges: &[(usize, usize)]) -> FaceGraph {
    FaceGraph::from_edges(n, edges).unwrap()
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn has(g: &Graph, u: usize, v: usize) -> bool {
    g.edges().contains(&(u, v))
}

/// Perfect matchings as permutations, by filtering all of `S_n`.
pub fn matchings(g: &Graph) -> Vec<Vec<usize>> {
    let edges: BTreeSet<(usize, usize)> = g.edges().into_iter().collect();
    permutations(g.n()).into_iter().filter(|p| p.iter().enumerate().all(|(u, &v)| edges.contains(&(u, v)))).collect()
}

pub fn edge_in_some_matching(g: &Graph, e: (usize, usize)) -> bool {
    matchings(g).iter().any(|p| p[e.0] == e.1)
}

pub fn is_elementary(g: &Graph) -> bool {
    let pms = matchings(g);
    !pms.is_empty() && g.edges().iter().all(|&(u, v)| pms.iter().any(|p| p[u] == v))
}

/// Union of the perfect matchings: the largest elementary subgraph on the same nodes.
pub fn elementary_part(g: &Graph) -> Graph {
    let mut edges = BTreeSet::new();
    for p in matchings(g) {
        edges.extend(p.iter().enumerate().map(|(u, &v)| (u, v)));
    }
    graph(g.n(), &edges.into_iter().collect::<Vec<_>>())
}

/// Rank over the rationals of integer vectors (fraction-free elimination).
pub fn rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let (a, b) = (rows[r][c], rows[i][c]);
                for k in 0..cols {
                    rows[i][k] = rows[i][k] * a - rows[r][k] * b;
                }
                let g = rows[i].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    rows[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Affine dimension of a set of permutation matrices.
pub fn affine_dimension(n: usize, perms: &[Vec<usize>]) -> usize {
    let vec_of = |p: &Vec<usize>| {
        let mut x = vec![0i128; n * n];
        for (u, &v) in p.iter().enumerate() {
            x[u * n + v] = 1;
        }
        x
    };
    let base = vec_of(&perms[0]);
    let diffs = perms[1..].iter().map(|p| vec_of(p).iter().zip(&base).map(|(a, b)| a - b).collect()).collect();
    rank(diffs)
}

/// Faces as sets of indices into `matchings(g)`: the matchings inside the union of
/// every nonempty subset of matchings. The whole face is included.
pub fn faces(g: &Graph) -> BTreeSet<Vec<usize>> {
    let pms = matchings(g);
    let p = pms.len();
    assert!(p <= 20, "too many vertices for the subset oracle");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << p) {
        let mut union = vec![BTreeSet::new(); g.n()];
        for (i, pm) in pms.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for (u, &v) in pm.iter().enumerate() {
                    union[u].insert(v);
                }
            }
        }
        let face: Vec<usize> =
            (0..p).filter(|&i| pms[i].iter().enumerate().all(|(u, v)| union[u].contains(v))).collect();
        out.insert(face);
    }
    out
}

/// Face counts by dimension, excluding the empty face and the whole face.
pub fn f_vector(g: &Graph) -> Vec<usize> {
    let pms = matchings(g);
    let d = affine_dimension(g.n(), &pms);
    let mut f = vec![0; d];
    for face in faces(g) {
        let members: Vec<Vec<usize>> = face.iter().map(|&i| pms[i].clone()).collect();
        let k = affine_dimension(g.n(), &members);
        if k < d {
            f[k] += 1;
        }
    }
    f
}

/// Facets as sorted vertex index lists.
pub fn facets(g: &Graph) -> BTreeSet<Vec<usize>> {
    let pms = matchings(g);
    let d = affine_dimension(g.n(), &pms);
    faces(g)
        .into_iter()
        .filter(|f| {
            let members: Vec<Vec<usize>> = f.iter().map(|&i| pms[i].clone()).collect();
            d >= 1 && affine_dimension(g.n(), &members) == d - 1
        })
        .collect()
}

/// `u - v` replaced by the path `u - v' - u' - v` through two new nodes.
pub fn expand_edge(g: &Graph, (u, v): (usize, usize)) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().filter(|&e| e != (u, v)).collect();
    edges.extend([(u, n), (n, n), (n, v)]);
    graph(n + 1, &edges)
}

/// Pyramidal pairs by direct matching counts on the graph minus both nodes.
pub fn pyramidal_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let rest: Vec<(usize, usize)> = g
                .edges()
                .into_iter()
                .filter(|&(a, b)| a != u && b != v)
                .map(|(a, b)| (a - usize::from(a > u), b - usize::from(b > v)))
                .collect();
            if n == 1 || matchings(&graph(n - 1, &rest)).len() == 1 {
                out.push((u, v));
            }
        }
    }
    out
}

pub fn is_connected_brute(g: &Graph) -> bool {
    let n = g.n();
    let mut seen = vec![false; 2 * n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        let nbrs: Vec<usize> = if x < n {
            (0..n).filter(|&v| has(g, x, v)).map(|v| n + v).collect()
        } else {
            (0..n).filter(|&u| has(g, u, x - n)).collect()
        };
        for y in nbrs {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// Random bipartite graph with `n` nodes per layer; roughly half the pairs are edges.
pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bits::u64::between(0, n), n).prop_map(move |rows| Graph::from_rows(rows))
    })
}

/// Random face graph: a random graph plus a random perfect matching, cut down to the
/// union of its perfect matchings.
pub fn arb_face_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = FaceGraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(proptest::bits::u64::between(0, n), n),
            Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
        )
            .prop_map(move |(mut rows, perm)| {
                for (u, &v) in perm.iter().enumerate() {
                    rows[u] |= 1 << v;
                }
                FaceGraph::new(elementary_part(&Graph::from_rows(rows))).unwrap()
            })
    })
}

/// Random connected face graph.
pub fn arb_connected_face_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = FaceGraph> {
    arb_face_graph(min_n, max_n).prop_filter("connected", |g| is_connected_brute(g))
}

/// Random relabelling of both layers.
pub fn arb_relabelling(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<usize>)> {
    (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
}
