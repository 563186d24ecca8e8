//! Bipartite matching kernels on bitset rows (`rows[u]` = lower neighbours of `u`).
//!
//! Node subsets are passed as `u64` masks, so all kernels require `n <= 64`.

use alloc::vec::Vec;

use crate::bitset::{bits, low_mask};

const FREE: u8 = u8::MAX;

fn augment(u: usize, rows: &[u64], lowers: u64, visited: &mut u64, mate: &mut [u8; 64]) -> bool {
    loop {
        let cand = rows[u] & lowers & !*visited;
        if cand == 0 {
            return false;
        }
        let v = cand.trailing_zeros() as usize;
        *visited |= 1 << v;
        if mate[v] == FREE || augment(mate[v] as usize, rows, lowers, visited, mate) {
            mate[v] = u as u8;
            return true;
        }
    }
}

/// A perfect matching between the upper nodes in `uppers` and the lower nodes
/// in `lowers`, as `mate[v] = u` for every `v` in `lowers`.
pub fn perfect_matching(rows: &[u64], uppers: u64, lowers: u64) -> Option<[u8; 64]> {
    if uppers.count_ones() != lowers.count_ones() {
        return None;
    }
    let mut mate = [FREE; 64];
    let mut taken = 0u64;
    let mut pending = 0u64;
    for u in bits(uppers) {
        let cand = rows[u] & lowers & !taken;
        if cand == 0 {
            pending |= 1 << u;
        } else {
            let v = cand.trailing_zeros() as usize;
            taken |= 1 << v;
            mate[v] = u as u8;
        }
    }
    for u in bits(pending) {
        let mut visited = 0u64;
        if !augment(u, rows, lowers, &mut visited, &mut mate) {
            return None;
        }
    }
    Some(mate)
}

pub fn has_perfect_matching(rows: &[u64], uppers: u64, lowers: u64) -> bool {
    perfect_matching(rows, uppers, lowers).is_some()
}

/// True iff the edge `(u, v)` lies in some perfect matching of the graph on all `n` nodes.
pub fn edge_in_perfect_matching(rows: &[u64], n: usize, u: usize, v: usize) -> bool {
    let all = low_mask(n);
    rows[u] >> v & 1 == 1 && has_perfect_matching(rows, all & !(1 << u), all & !(1 << v))
}

/// Calls `f` on every perfect matching (as `map[u] = v`) in lexicographic order of the
/// map. Stops early when `f` returns `false`.
pub fn for_each_perfect_matching(rows: &[u64], n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut map: Vec<usize> = alloc::vec![0; n];
    if n == 0 {
        f(&map);
        return;
    }
    if !has_perfect_matching(rows, low_mask(n), low_mask(n)) {
        return;
    }
    rec(rows, n, 0, low_mask(n), &mut map, &mut f);

    fn rec(
        rows: &[u64],
        n: usize,
        u: usize,
        free: u64,
        map: &mut [usize],
        f: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        if u == n {
            return f(map);
        }
        let rest_uppers = low_mask(n) & !low_mask(u + 1);
        for v in bits(rows[u] & free) {
            let free2 = free & !(1 << v);
            if u + 1 < n && !has_perfect_matching(rows, rest_uppers, free2) {
                continue;
            }
            map[u] = v;
            if !rec(rows, n, u + 1, free2, map, f) {
                return false;
            }
        }
        true
    }
}

/// Number of perfect matchings, counting stops at `limit`.
pub fn count_perfect_matchings_up_to(rows: &[u64], n: usize, limit: usize) -> usize {
    let mut count = 0;
    for_each_perfect_matching(rows, n, |_| {
        count += 1;
        count < limit
    });
    count
}

/// Elementarity test for a graph that is already known to be connected: a perfect
/// matching `M` exists and the digraph on matched pairs (`u -> u'` when `u` is
/// adjacent to `M(u')`) is strongly connected.
pub fn connected_graph_is_elementary(rows: &[u64], n: usize) -> bool {
    let all = low_mask(n);
    let Some(mate) = perfect_matching(rows, all, all) else {
        return false;
    };
    if n == 1 {
        return true;
    }
    // succ[u] = { u' : rows[u] contains M(u') }, pred is the transpose.
    let mut succ = [0u64; 64];
    let mut pred = [0u64; 64];
    for u in 0..n {
        for v in bits(rows[u]) {
            let w = mate[v] as usize;
            if w != u {
                succ[u] |= 1 << w;
                pred[w] |= 1 << u;
            }
        }
    }
    reach(&succ, all) && reach(&pred, all)
}

fn reach(adj: &[u64; 64], all: u64) -> bool {
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0u64;
        for u in bits(frontier) {
            next |= adj[u];
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen & all == all
}
