//! Reduction of an inconsistent plumbing graph to consistent subgraphs by
//! single-vertex deletions, each deletion recorded as a round 1-handle.
//!
//! Two rules, applied in this order:
//!
//! * a non-extreme vertex (stabilized with both signs) is deleted, giving
//!   exactly one child;
//! * otherwise a minimal inconsistent path `v₁ … v_{m+1}` is broken by
//!   deleting each of its vertices in turn, giving up to `m + 1` children.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{
    all_extreme, consistent_unchecked, ensure_valid, is_extreme, vertex_unknot, Decoration,
    EdgeSign, Path, PlumbingGraph, VertexId,
};
use crate::unknot::UnknotDescriptor;
use crate::Error;

/// Largest graph accepted by [`maximal_consistent_subgraphs`].
pub const MAX_ORACLE_VERTICES: usize = 22;

/// A path whose endpoints are signed, whose interior vertices are all
/// unsigned, and whose sign product is negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InconsistentPath(Path);

impl InconsistentPath {
    pub fn path(&self) -> &Path {
        &self.0
    }

    pub fn vertices(&self) -> &[VertexId] {
        self.0.vertices()
    }

    /// Distinct vertices of the path; a closed path repeats its base.
    pub fn distinct_vertices(&self) -> &[VertexId] {
        let v = self.0.vertices();
        if self.0.is_closed() {
            &v[..v.len() - 1]
        } else {
            v
        }
    }

    fn sort_key(&self) -> (Vec<VertexId>, &[VertexId]) {
        let mut ids = self.0.vertices().to_vec();
        ids.sort_unstable();
        (ids, self.0.vertices())
    }
}

impl fmt::Display for InconsistentPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionRule {
    /// The deleted vertex was stabilized with both signs.
    NonExtreme,
    /// The deleted vertex sits at `index` along `path`.
    PathBreak {
        path: InconsistentPath,
        index: usize,
    },
}

impl fmt::Display for ReductionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionRule::NonExtreme => f.write_str("non-extreme"),
            ReductionRule::PathBreak { .. } => f.write_str("path-break"),
        }
    }
}

/// Bookkeeping for one round 1-handle: which vertex was removed, by which
/// rule, and the split `Λ⁺ ⊔ Λ⁻` of its unknot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundHandleDatum {
    pub deleted_vertex: VertexId,
    pub deleted_decoration: Decoration,
    pub rule: ReductionRule,
    pub lambda_plus: UnknotDescriptor,
    pub lambda_minus: UnknotDescriptor,
    /// Edges that were incident to the deleted vertex, as
    /// `(deleted, neighbor, sign)`.
    pub neighbor_edges: Vec<(VertexId, VertexId, EdgeSign)>,
}

impl RoundHandleDatum {
    fn new(g: &PlumbingGraph, v: VertexId, rule: ReductionRule) -> Self {
        let deco = g.decoration(v).expect("deleted vertex in graph");
        let unknot = vertex_unknot(deco.b, deco.r).expect("graph validated");
        let (lambda_plus, lambda_minus) = unknot.split();
        Self {
            deleted_vertex: v,
            deleted_decoration: deco,
            rule,
            lambda_plus,
            lambda_minus,
            neighbor_edges: g.neighbors(v).map(|(w, s)| (v, w, s)).collect(),
        }
    }
}

pub fn non_extreme_vertices(g: &PlumbingGraph) -> Vec<VertexId> {
    g.vertices()
        .filter(|(_, d)| !is_extreme(d.b, d.r))
        .map(|(v, _)| v)
        .collect()
}

/// All minimal inconsistent paths, one orientation each, sorted by their
/// sorted vertex ids and then by vertex sequence.
pub fn minimal_inconsistent_paths(g: &PlumbingGraph) -> Result<Vec<InconsistentPath>, Error> {
    ensure_valid(g)?;
    let bad = non_extreme_vertices(g);
    if !bad.is_empty() {
        return Err(Error::NonExtremeVertices(bad));
    }
    Ok(inconsistent_paths_unchecked(g))
}

fn signed(g: &PlumbingGraph, v: VertexId) -> i64 {
    g.decoration(v).map_or(0, |d| d.sign().value())
}

fn inconsistent_paths_unchecked(g: &PlumbingGraph) -> Vec<InconsistentPath> {
    let mut found = BTreeSet::new();
    for u in g.vertex_ids().filter(|&u| signed(g, u) != 0) {
        for (first, _) in g.neighbors(u) {
            let Some(seq) = walk_unsigned(g, u, first) else {
                continue;
            };
            let path = Path::new(g, seq).expect("walk follows edges");
            if path.product(g) >= 0 {
                continue;
            }
            let rev = path.reversed();
            found.insert(if rev.vertices() < path.vertices() {
                rev
            } else {
                path
            });
        }
    }
    let mut out: Vec<_> = found.into_iter().map(InconsistentPath).collect();
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out
}

/// Follows unsigned vertices from `start` through `first` until a signed
/// vertex (possibly `start` again) is reached. `None` on a dead end.
fn walk_unsigned(g: &PlumbingGraph, start: VertexId, first: VertexId) -> Option<Vec<VertexId>> {
    let mut seq = alloc::vec![start, first];
    let (mut prev, mut cur) = (start, first);
    while signed(g, cur) == 0 {
        let next = g.neighbors(cur).map(|(w, _)| w).find(|&w| w != prev)?;
        if next != start && seq.contains(&next) {
            return None;
        }
        seq.push(next);
        (prev, cur) = (cur, next);
    }
    Some(seq)
}

/// The deletions of one reduction step, without building the children.
fn child_steps(g: &PlumbingGraph, all_paths: bool) -> Vec<RoundHandleDatum> {
    if let Some(&v) = non_extreme_vertices(g).first() {
        return alloc::vec![RoundHandleDatum::new(g, v, ReductionRule::NonExtreme)];
    }
    let paths = inconsistent_paths_unchecked(g);
    let take = if all_paths { paths.len() } else { 1 };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for path in paths.iter().take(take) {
        for (index, &v) in path.distinct_vertices().iter().enumerate() {
            if seen.insert(v) {
                let rule = ReductionRule::PathBreak {
                    path: path.clone(),
                    index,
                };
                out.push(RoundHandleDatum::new(g, v, rule));
            }
        }
    }
    out
}

/// One reduction step. Fails on invalid or already consistent input.
pub fn reduction_children(
    g: &PlumbingGraph,
) -> Result<Vec<(PlumbingGraph, RoundHandleDatum)>, Error> {
    ensure_valid(g)?;
    if consistent_unchecked(g) {
        return Err(Error::AlreadyConsistent);
    }
    Ok(child_steps(g, false)
        .into_iter()
        .map(|d| (g.without_vertex(d.deleted_vertex), d))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeNode {
    pub vertices: BTreeSet<VertexId>,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEdge {
    pub parent: usize,
    pub child: usize,
    pub datum: RoundHandleDatum,
}

/// Induced subgraphs of `root` reached by reduction steps. Nodes are
/// unique per vertex set and ordered by decreasing size, then by vertex
/// set; node 0 is the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTree {
    pub root: PlumbingGraph,
    pub nodes: Vec<TreeNode>,
    pub edges: Vec<TreeEdge>,
}

impl ReductionTree {
    pub fn node_graph(&self, index: usize) -> PlumbingGraph {
        self.root.induced_subgraph(&self.nodes[index].vertices)
    }

    /// Vertex sets of the consistent nodes, sorted.
    pub fn leaves(&self) -> Vec<&BTreeSet<VertexId>> {
        let mut out: Vec<_> = self
            .nodes
            .iter()
            .filter(|n| n.consistent)
            .map(|n| &n.vertices)
            .collect();
        out.sort();
        out
    }

    pub fn children(&self, index: usize) -> impl Iterator<Item = &TreeEdge> {
        self.edges.iter().filter(move |e| e.parent == index)
    }

    /// Number of deletions separating the node from the root.
    pub fn depth(&self, index: usize) -> usize {
        self.root.vertex_count() - self.nodes[index].vertices.len()
    }
}

/// Expands `g` breadth-first until every node is consistent.
///
/// With `explore_all_paths`, the path-breaking step uses every minimal
/// inconsistent path instead of only the least one.
pub fn reduce_to_tree(g: &PlumbingGraph, explore_all_paths: bool) -> Result<ReductionTree, Error> {
    ensure_valid(g)?;
    let mut nodes: Vec<TreeNode> = Vec::new();
    let mut index: BTreeMap<BTreeSet<VertexId>, usize> = BTreeMap::new();
    let mut raw_edges = Vec::new();

    let root_set = g.vertex_set();
    index.insert(root_set.clone(), 0);
    nodes.push(TreeNode {
        vertices: root_set,
        consistent: consistent_unchecked(g),
    });
    let mut queue = VecDeque::new();
    if !nodes[0].consistent {
        queue.push_back((0usize, g.clone()));
    }
    while let Some((parent, sub)) = queue.pop_front() {
        for datum in child_steps(&sub, explore_all_paths) {
            let mut set = nodes[parent].vertices.clone();
            set.remove(&datum.deleted_vertex);
            let child_index = match index.get(&set) {
                Some(&i) => i,
                None => {
                    let child = sub.without_vertex(datum.deleted_vertex);
                    let i = nodes.len();
                    let consistent = consistent_unchecked(&child);
                    index.insert(set.clone(), i);
                    nodes.push(TreeNode {
                        vertices: set,
                        consistent,
                    });
                    if !consistent {
                        queue.push_back((i, child));
                    }
                    i
                }
            };
            raw_edges.push(TreeEdge {
                parent,
                child: child_index,
                datum,
            });
        }
    }

    let mut order: Vec<usize> = (0..nodes.len()).collect();
    order.sort_by(|&a, &b| {
        let (na, nb) = (&nodes[a].vertices, &nodes[b].vertices);
        nb.len().cmp(&na.len()).then_with(|| na.cmp(nb))
    });
    let mut rank = alloc::vec![0; nodes.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let mut edges: Vec<TreeEdge> = raw_edges
        .into_iter()
        .map(|e| TreeEdge {
            parent: rank[e.parent],
            child: rank[e.child],
            datum: e.datum,
        })
        .collect();
    edges.sort_by_key(|e| (e.parent, e.child));
    let mut slots: Vec<Option<TreeNode>> = nodes.into_iter().map(Some).collect();
    let nodes = order
        .into_iter()
        .map(|i| slots[i].take().expect("each node placed once"))
        .collect();
    Ok(ReductionTree {
        root: g.clone(),
        nodes,
        edges,
    })
}

/// Inclusion-maximal vertex subsets inducing a consistent subgraph, by
/// exhaustive enumeration of all subsets. Sorted.
pub fn maximal_consistent_subgraphs(g: &PlumbingGraph) -> Result<Vec<BTreeSet<VertexId>>, Error> {
    ensure_valid(g)?;
    let ids: Vec<VertexId> = g.vertex_ids().collect();
    let n = ids.len();
    if n > MAX_ORACLE_VERTICES {
        return Err(Error::TooLarge {
            vertices: n,
            limit: MAX_ORACLE_VERTICES,
        });
    }
    let subset = |mask: usize| -> BTreeSet<VertexId> {
        (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| ids[i])
            .collect()
    };
    let masks = IndexedGraph::new(g, &ids);
    let mut consistent = alloc::vec![false; 1 << n];
    for mask in 0..1usize << n {
        // consistency is inherited by induced subgraphs
        let lower = mask & mask.wrapping_sub(1);
        consistent[mask] = (mask == 0 || consistent[lower]) && masks.consistent_on(mask);
    }
    let mut out: Vec<_> = (0..1usize << n)
        .filter(|&mask| consistent[mask])
        .filter(|&mask| (0..n).all(|i| mask >> i & 1 == 1 || !consistent[mask | 1 << i]))
        .map(subset)
        .collect();
    out.sort();
    Ok(out)
}

/// `g` re-indexed by position in `ids`, for testing many induced subgraphs
/// without rebuilding them.
struct IndexedGraph {
    sign: Vec<i8>,
    non_extreme: usize,
    adj: Vec<Vec<(usize, i8)>>,
}

impl IndexedGraph {
    fn new(g: &PlumbingGraph, ids: &[VertexId]) -> Self {
        let pos = |v: VertexId| ids.binary_search(&v).expect("vertex of g");
        let mut sign = Vec::with_capacity(ids.len());
        let mut non_extreme = 0;
        let mut adj = Vec::with_capacity(ids.len());
        for (i, &v) in ids.iter().enumerate() {
            let d = g.decoration(v).expect("vertex of g");
            sign.push(d.r.signum() as i8);
            if !is_extreme(d.b, d.r) {
                non_extreme |= 1 << i;
            }
            adj.push(
                g.neighbors(v)
                    .map(|(w, s)| (pos(w), s.as_i64() as i8))
                    .collect(),
            );
        }
        Self {
            sign,
            non_extreme,
            adj,
        }
    }

    /// Sign propagation restricted to the vertices in `mask`.
    fn consistent_on(&self, mask: usize) -> bool {
        if mask & self.non_extreme != 0 {
            return false;
        }
        let mut tau = [0i8; MAX_ORACLE_VERTICES];
        let mut stack = Vec::new();
        for root in 0..self.sign.len() {
            if mask >> root & 1 == 0 || self.sign[root] == 0 || tau[root] != 0 {
                continue;
            }
            tau[root] = self.sign[root];
            stack.push(root);
            while let Some(u) = stack.pop() {
                if self.sign[u] != 0 && self.sign[u] != tau[u] {
                    return false;
                }
                for &(w, s) in &self.adj[u] {
                    if mask >> w & 1 == 0 {
                        continue;
                    }
                    let expected = tau[u] * s;
                    if tau[w] == 0 {
                        tau[w] = expected;
                        stack.push(w);
                    } else if tau[w] != expected {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Whether every vertex of `g` is extreme; the precondition of the
/// path-breaking rule.
pub fn is_all_extreme(g: &PlumbingGraph) -> bool {
    all_extreme(g)
}
