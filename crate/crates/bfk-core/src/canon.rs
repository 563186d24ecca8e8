//! Canonical form of a 0/1 matrix under independent row and column permutations.
//!
//! Columns are labelled by equitable partition refinement and individualization; the
//! certificate of a column labelling is the sorted list of relabelled rows, and the
//! canonical form is the least certificate over all leaves of the search tree.
//! Automorphisms found along the way prune the tree. At most 64 columns.

use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::bits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    /// Relabelled rows in increasing order.
    pub cert: Vec<u64>,
    /// `position[c]` is the new index of column `c`.
    pub position: Vec<usize>,
}

pub fn canonical_form(rows: &[u64], ncols: usize) -> Canonical {
    assert!(ncols <= 64);
    let mut ctx = Search { rows, ncols, best: None, gens: Vec::new() };
    let rcells = vec![(0..rows.len()).collect::<Vec<_>>()];
    let ccells = if ncols == 0 { Vec::new() } else { vec![(0..ncols).collect::<Vec<_>>()] };
    let mut path = Vec::new();
    ctx.descend(rcells, ccells, &mut path);
    let best = ctx.best.expect("search visits at least one leaf");
    Canonical { cert: best.cert, position: best.position }
}

struct Leaf {
    cert: Vec<u64>,
    position: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    ncols: usize,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
}

/// Splits every cell by the given per-element key; sub-cells are ordered by key.
fn split_cells(cells: &mut Vec<Vec<usize>>, key: impl Fn(usize) -> Vec<u32>) -> bool {
    let mut changed = false;
    let mut out = Vec::with_capacity(cells.len());
    for cell in cells.drain(..) {
        if cell.len() == 1 {
            out.push(cell);
            continue;
        }
        let mut keyed: Vec<(Vec<u32>, usize)> = cell.iter().map(|&x| (key(x), x)).collect();
        keyed.sort();
        let before = out.len();
        let mut start = 0;
        for i in 1..=keyed.len() {
            if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                out.push(keyed[start..i].iter().map(|p| p.1).collect());
                start = i;
            }
        }
        changed |= out.len() - before > 1;
    }
    *cells = out;
    changed
}

impl Search<'_> {
    fn refine(&self, rcells: &mut Vec<Vec<usize>>, ccells: &mut Vec<Vec<usize>>) {
        loop {
            let cmasks: Vec<u64> = ccells.iter().map(|c| c.iter().fold(0u64, |a, &x| a | 1 << x)).collect();
            let rows = self.rows;
            let r_changed =
                split_cells(rcells, |r| cmasks.iter().map(|&m| (rows[r] & m).count_ones()).collect());
            let mut counts = vec![vec![0u32; rcells.len()]; self.ncols];
            for (i, cell) in rcells.iter().enumerate() {
                for &r in cell {
                    for c in bits(rows[r]) {
                        counts[c][i] += 1;
                    }
                }
            }
            let c_changed = split_cells(ccells, |c| counts[c].clone());
            if !r_changed && !c_changed {
                return;
            }
        }
    }

    /// Returns the depth to jump back to after an automorphism was found below.
    fn descend(
        &mut self,
        mut rcells: Vec<Vec<usize>>,
        mut ccells: Vec<Vec<usize>>,
        path: &mut Vec<usize>,
    ) -> Option<usize> {
        self.refine(&mut rcells, &mut ccells);
        let Some(target) = ccells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&ccells, path);
        };
        let depth = path.len();
        let cell = ccells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &c in &cell {
            if !explored.is_empty() && self.same_orbit_as_explored(path, &explored, c) {
                continue;
            }
            explored.push(c);
            let mut cc = ccells.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != c).collect();
            cc.splice(target..=target, [vec![c], rest]);
            path.push(c);
            let jump = self.descend(rcells.clone(), cc, path);
            path.pop();
            if let Some(t) = jump {
                if t < depth {
                    return Some(t);
                }
            }
        }
        None
    }

    fn same_orbit_as_explored(&self, path: &[usize], explored: &[usize], c: usize) -> bool {
        let usable: Vec<&Vec<usize>> =
            self.gens.iter().filter(|g| path.iter().all(|&p| g[p] == p)).collect();
        if usable.is_empty() {
            return false;
        }
        // Union-find over columns.
        let mut parent: Vec<usize> = (0..self.ncols).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in usable {
            for (x, &y) in g.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                if a != b {
                    parent[a] = b;
                }
            }
        }
        let rc = find(&mut parent, c);
        explored.iter().any(|&e| find(&mut parent, e) == rc)
    }

    fn leaf(&mut self, ccells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let mut position = vec![0usize; self.ncols];
        for (i, cell) in ccells.iter().enumerate() {
            position[cell[0]] = i;
        }
        let mut cert: Vec<u64> = self
            .rows
            .iter()
            .map(|&r| bits(r).fold(0u64, |a, c| a | 1 << position[c]))
            .collect();
        cert.sort_unstable();
        match &self.best {
            None => {
                self.best = Some(Leaf { cert, position, path: path.to_vec() });
                None
            }
            Some(b) if cert < b.cert => {
                self.best = Some(Leaf { cert, position, path: path.to_vec() });
                None
            }
            Some(b) if cert == b.cert => {
                let mut inv = vec![0usize; self.ncols];
                for (c, &p) in b.position.iter().enumerate() {
                    inv[p] = c;
                }
                let gen: Vec<usize> = position.iter().map(|&p| inv[p]).collect();
                let lcp = path.iter().zip(&b.path).take_while(|(x, y)| x == y).count();
                if gen.iter().enumerate().any(|(i, &x)| i != x) {
                    self.gens.push(gen);
                }
                Some(lcp)
            }
            Some(_) => None,
        }
    }
}
