//! Two-layer Graphviz export: upper nodes `u0..` on one rank, lower nodes `v0..` on the
//! next, one edge statement per parallel edge.

use std::fmt::Write;

use bfk_core::MultiGraph;

pub fn to_dot(g: &MultiGraph) -> String {
    let n = g.n();
    let mut s = String::from("graph G {\n  rankdir=TB;\n  node [shape=circle];\n");
    let names = |p: char| (0..n).map(|i| format!("{p}{i}")).collect::<Vec<_>>().join("; ");
    let _ = writeln!(s, "  {{ rank=same; {}; }}", names('u'));
    let _ = writeln!(s, "  {{ rank=same; {}; }}", names('v'));
    for (u, v, c) in g.entries() {
        for _ in 0..c {
            let _ = writeln!(s, "  u{u} -- v{v};");
        }
    }
    s.push_str("}\n");
    s
}
