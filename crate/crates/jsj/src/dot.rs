use std::fmt::Write as _;

use jsj_core::reduce::ReductionTree;

use crate::format::SetDisplay;

/// Renders the tree as a DOT digraph. Nodes are named by their index in
/// the tree, which is already sorted, so output is stable.
pub fn emit_dot(tree: &ReductionTree) -> String {
    let mut out = String::from("digraph reduction {\n  node [shape=box];\n");
    for (i, node) in tree.nodes.iter().enumerate() {
        let status = if node.consistent {
            "consistent"
        } else {
            "inconsistent"
        };
        let _ = writeln!(
            out,
            "  n{i} [label=\"{}\\n{status}\"];",
            SetDisplay(&node.vertices)
        );
    }
    for e in &tree.edges {
        let _ = writeln!(
            out,
            "  n{} -> n{} [label=\"delete v={} ({})\"];",
            e.parent, e.child, e.datum.deleted_vertex, e.datum.rule
        );
    }
    out.push_str("}\n");
    out
}
