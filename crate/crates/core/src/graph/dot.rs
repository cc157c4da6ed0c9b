use std::fmt::Write;

use super::Graph;

/// Graphviz DOT for `g`. Product graphs carry their factor coordinates as labels.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {name} {{").unwrap();
    for v in 0..g.n() {
        writeln!(out, "  {v} [label=\"{}\"];", g.label(v).replace('"', "\\\"")).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
