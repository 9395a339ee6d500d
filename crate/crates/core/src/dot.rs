//! Graphviz DOT rendering.

use std::fmt::Write as _;

use crate::graph::{ArcSet, Digraph};

/// Renders `g` as a DOT digraph. Arcs in `highlight` are drawn bold red.
/// Output depends only on the vertex and arc sets.
pub fn to_dot(g: &Digraph, highlight: Option<&ArcSet>) -> String {
    let mut out = String::from("digraph G {\n");
    for v in g.vertices() {
        writeln!(out, "  {v} [label=\"{v}\"];").expect("write to String");
    }
    for a in g.arcs() {
        let styled = highlight.is_some_and(|h| h.contains(a));
        if styled {
            writeln!(out, "  {} -> {} [color=red, penwidth=2];", a.tail, a.head)
        } else {
            writeln!(out, "  {} -> {};", a.tail, a.head)
        }
        .expect("write to String");
    }
    out.push_str("}\n");
    out
}
