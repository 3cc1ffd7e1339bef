use std::collections::BTreeSet;
use std::fmt;

use jsj_core::reduce::ReductionTree;
use jsj_core::{ReductionRule, VertexId};

use crate::format::SetDisplay;

/// Text rendering of a reduction tree, optionally followed by the
/// maximal consistent subgraphs for comparison.
///
/// ```text
/// node 0 {0,1} inconsistent
///   -> node 1 delete v=0 (path-break) path=0-1 plus=(tb=-2,rot=1) minus=(tb=0,rot=0)
/// node 1 {1} consistent
/// leaves:
///   {1}
/// oracle:
///   {0}
///   {1}
/// ```
pub struct ReductionReport<'a> {
    pub tree: &'a ReductionTree,
    pub oracle: Option<&'a [BTreeSet<VertexId>]>,
}

fn status(consistent: bool) -> &'static str {
    if consistent {
        "consistent"
    } else {
        "inconsistent"
    }
}

impl fmt::Display for ReductionReport<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tree = self.tree;
        for (i, node) in tree.nodes.iter().enumerate() {
            writeln!(
                f,
                "node {i} {} {}",
                SetDisplay(&node.vertices),
                status(node.consistent)
            )?;
            for e in tree.children(i) {
                let d = &e.datum;
                write!(
                    f,
                    "  -> node {} delete v={} ({})",
                    e.child, d.deleted_vertex, d.rule
                )?;
                if let ReductionRule::PathBreak { path, .. } = &d.rule {
                    write!(f, " path={}", path.path())?;
                }
                writeln!(f, " plus={} minus={}", d.lambda_plus, d.lambda_minus)?;
            }
        }
        writeln!(f, "leaves:")?;
        for leaf in tree.leaves() {
            writeln!(f, "  {}", SetDisplay(leaf))?;
        }
        if let Some(oracle) = self.oracle {
            writeln!(f, "oracle:")?;
            for m in oracle {
                writeln!(f, "  {}", SetDisplay(m))?;
            }
        }
        Ok(())
    }
}
