//! Fully-decorated plumbing graphs.
//!
//! Each vertex carries a framing `b` and a rotation weight `r`; each edge a
//! linking sign. A graph is decoration-valid when `b ≤ -2` and
//! `r ∈ {b+2, b+4, …, -b-2}`, good when `b + deg ≤ 0` everywhere, and
//! shape-valid when it is a forest or has maximum degree at most 3.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::unknot::UnknotDescriptor;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(pub u32);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

/// Primary weight `b` (the framing) and secondary weight `r` (the
/// rotation number of the Legendrian unknot).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Decoration {
    pub b: i64,
    pub r: i64,
}

impl Decoration {
    pub const fn new(b: i64, r: i64) -> Self {
        Self { b, r }
    }

    pub fn sign(&self) -> VertexSign {
        VertexSign::of(self.r)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeSign {
    Positive,
    Negative,
}

impl EdgeSign {
    pub fn as_i64(self) -> i64 {
        match self {
            EdgeSign::Positive => 1,
            EdgeSign::Negative => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Self> {
        match v {
            1 => Some(EdgeSign::Positive),
            -1 => Some(EdgeSign::Negative),
            _ => None,
        }
    }
}

impl core::ops::Mul for EdgeSign {
    type Output = EdgeSign;
    fn mul(self, rhs: Self) -> Self {
        if self == rhs {
            EdgeSign::Positive
        } else {
            EdgeSign::Negative
        }
    }
}

impl fmt::Display for EdgeSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeSign::Positive => "+1",
            EdgeSign::Negative => "-1",
        })
    }
}

/// Sign of `r(v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexSign {
    Negative,
    Zero,
    Positive,
}

impl VertexSign {
    pub fn of(r: i64) -> Self {
        match r.signum() {
            1 => VertexSign::Positive,
            -1 => VertexSign::Negative,
            _ => VertexSign::Zero,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            VertexSign::Negative => -1,
            VertexSign::Zero => 0,
            VertexSign::Positive => 1,
        }
    }

    /// `None` for the zero sign.
    pub fn as_edge_sign(self) -> Option<EdgeSign> {
        EdgeSign::from_i64(self.value())
    }
}

/// Errors that make a vertex/edge list unusable as a graph at all.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("duplicate vertex {0}")]
    DuplicateVertex(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(VertexId, VertexId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct VertexEntry {
    decoration: Decoration,
    /// Sorted by neighbor id.
    neighbors: Vec<(VertexId, EdgeSign)>,
}

impl VertexEntry {
    fn neighbor_index(&self, v: VertexId) -> Result<usize, usize> {
        self.neighbors.binary_search_by_key(&v, |&(w, _)| w)
    }
}

/// A simple graph with decorated vertices and signed edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: BTreeMap<VertexId, VertexEntry>,
    pub name: Option<String>,
}

impl PlumbingGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from vertex and edge lists, stopping at the first
    /// structural error.
    pub fn from_parts<V, E>(vertices: V, edges: E) -> Result<Self, StructuralError>
    where
        V: IntoIterator<Item = (u32, i64, i64)>,
        E: IntoIterator<Item = (u32, u32, EdgeSign)>,
    {
        let mut g = Self::new();
        for (id, b, r) in vertices {
            g.add_vertex(VertexId(id), Decoration::new(b, r))?;
        }
        for (u, v, s) in edges {
            g.add_edge(VertexId(u), VertexId(v), s)?;
        }
        Ok(g)
    }

    pub fn add_vertex(
        &mut self,
        id: VertexId,
        decoration: Decoration,
    ) -> Result<(), StructuralError> {
        if self.vertices.contains_key(&id) {
            return Err(StructuralError::DuplicateVertex(id));
        }
        self.vertices.insert(
            id,
            VertexEntry {
                decoration,
                neighbors: Vec::new(),
            },
        );
        Ok(())
    }

    pub fn add_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        sign: EdgeSign,
    ) -> Result<(), StructuralError> {
        for id in [u, v] {
            if !self.vertices.contains_key(&id) {
                return Err(StructuralError::UnknownVertex(id));
            }
        }
        if u == v {
            return Err(StructuralError::SelfLoop(u));
        }
        let Err(at) = self.vertices[&u].neighbor_index(v) else {
            return Err(StructuralError::ParallelEdge(u.min(v), u.max(v)));
        };
        self.entry_mut(u).neighbors.insert(at, (v, sign));
        let at = self.vertices[&v].neighbor_index(u).unwrap_err();
        self.entry_mut(v).neighbors.insert(at, (u, sign));
        Ok(())
    }

    fn entry_mut(&mut self, id: VertexId) -> &mut VertexEntry {
        self.vertices.get_mut(&id).expect("vertex checked")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.vertices
            .values()
            .map(|e| e.neighbors.len())
            .sum::<usize>()
            / 2
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, id: VertexId) -> bool {
        self.vertices.contains_key(&id)
    }

    /// Vertex ids in ascending order.
    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.keys().copied().collect()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (VertexId, Decoration)> + '_ {
        self.vertices.iter().map(|(&id, e)| (id, e.decoration))
    }

    pub fn decoration(&self, id: VertexId) -> Option<Decoration> {
        self.vertices.get(&id).map(|e| e.decoration)
    }

    pub fn degree(&self, id: VertexId) -> usize {
        self.vertices.get(&id).map_or(0, |e| e.neighbors.len())
    }

    /// Neighbors of `id` in ascending order, with the connecting edge sign.
    pub fn neighbors(&self, id: VertexId) -> impl Iterator<Item = (VertexId, EdgeSign)> + '_ {
        self.vertices
            .get(&id)
            .into_iter()
            .flat_map(|e| e.neighbors.iter().copied())
    }

    pub fn edge_sign(&self, u: VertexId, v: VertexId) -> Option<EdgeSign> {
        let e = self.vertices.get(&u)?;
        e.neighbor_index(v).ok().map(|i| e.neighbors[i].1)
    }

    /// Edges as `(lo, hi, sign)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId, EdgeSign)> + '_ {
        self.vertices.iter().flat_map(|(&u, e)| {
            e.neighbors
                .iter()
                .filter(move |&&(v, _)| v > u)
                .map(move |&(v, s)| (u, v, s))
        })
    }

    /// The induced subgraph on `keep ∩ V`.
    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> Self {
        let vertices = self
            .vertices
            .iter()
            .filter(|(id, _)| keep.contains(id))
            .map(|(&id, e)| {
                let neighbors = e
                    .neighbors
                    .iter()
                    .filter(|(v, _)| keep.contains(v))
                    .copied()
                    .collect();
                (
                    id,
                    VertexEntry {
                        decoration: e.decoration,
                        neighbors,
                    },
                )
            })
            .collect();
        Self {
            vertices,
            name: self.name.clone(),
        }
    }

    pub fn without_vertex(&self, id: VertexId) -> Self {
        let mut g = self.clone();
        if let Some(e) = g.vertices.remove(&id) {
            for (w, _) in e.neighbors {
                let n = &mut g.entry_mut(w).neighbors;
                n.retain(|&(x, _)| x != id);
            }
        }
        g
    }

    /// Connected components, each as an ascending vertex set; components
    /// are ordered by their least vertex.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertex_ids() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for (v, _) in self.neighbors(u) {
                    if seen.insert(v) {
                        comp.insert(v);
                        queue.push_back(v);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// First Betti number `|E| - |V| + #components`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.components().len() - self.vertex_count()
    }

    pub fn is_forest(&self) -> bool {
        self.cycle_rank() == 0
    }

    pub fn max_degree(&self) -> usize {
        self.vertex_ids().map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

/// A single failed decoration, goodness or shape constraint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `b(v) ≤ -2` fails.
    FramingTooLarge { vertex: VertexId, b: i64 },
    /// `r(v) ≡ b(v) (mod 2)` fails.
    RotationParity { vertex: VertexId, b: i64, r: i64 },
    /// `|r(v)| ≤ -b(v) - 2` fails.
    RotationRange { vertex: VertexId, b: i64, r: i64 },
    /// `b(v) + deg(v) ≤ 0` fails.
    NotGood {
        vertex: VertexId,
        b: i64,
        degree: usize,
    },
    /// Graph has a cycle and this vertex has degree above 3.
    Shape { vertex: VertexId, degree: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FramingTooLarge { vertex, b } => {
                write!(f, "vertex {vertex}: b(v) <= -2 fails (b={b})")
            }
            Violation::RotationParity { vertex, b, r } => {
                write!(f, "vertex {vertex}: r(v) = b(v) mod 2 fails (b={b}, r={r})")
            }
            Violation::RotationRange { vertex, b, r } => {
                write!(f, "vertex {vertex}: |r(v)| <= -b(v)-2 fails (b={b}, r={r})")
            }
            Violation::NotGood { vertex, b, degree } => {
                write!(
                    f,
                    "vertex {vertex}: b(v)+deg(v) <= 0 fails (b={b}, deg={degree})"
                )
            }
            Violation::Shape { vertex, degree } => {
                write!(
                    f,
                    "vertex {vertex}: graph is not a forest and deg(v) <= 3 fails (deg={degree})"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

fn decoration_violations(vertex: VertexId, d: Decoration, out: &mut Vec<Violation>) {
    let Decoration { b, r } = d;
    if b > -2 {
        out.push(Violation::FramingTooLarge { vertex, b });
    }
    if (r - b) % 2 != 0 {
        out.push(Violation::RotationParity { vertex, b, r });
    }
    if r.abs() > -b - 2 {
        out.push(Violation::RotationRange { vertex, b, r });
    }
}

pub fn validate_graph(g: &PlumbingGraph) -> ValidationReport {
    let mut violations = Vec::new();
    for (v, d) in g.vertices() {
        decoration_violations(v, d, &mut violations);
    }
    for (v, d) in g.vertices() {
        let degree = g.degree(v);
        if d.b + degree as i64 > 0 {
            violations.push(Violation::NotGood {
                vertex: v,
                b: d.b,
                degree,
            });
        }
    }
    if !g.is_forest() {
        for v in g.vertex_ids() {
            let degree = g.degree(v);
            if degree > 3 {
                violations.push(Violation::Shape { vertex: v, degree });
            }
        }
    }
    ValidationReport { violations }
}

pub(crate) fn ensure_valid(g: &PlumbingGraph) -> Result<(), Error> {
    let report = validate_graph(g);
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::InvalidGraph(report))
    }
}

/// `r = ±(b + 2)`.
pub fn is_extreme(b: i64, r: i64) -> bool {
    r == b + 2 || r == -(b + 2)
}

/// The Legendrian unknot with `tb = b + 1` and `rot = r`.
pub fn vertex_unknot(b: i64, r: i64) -> Result<UnknotDescriptor, Error> {
    let mut v = Vec::new();
    decoration_violations(VertexId(0), Decoration::new(b, r), &mut v);
    if !v.is_empty() {
        return Err(Error::InvalidDecoration { b, r });
    }
    UnknotDescriptor::from_tb_rot(b + 1, r)
}

/// A walk `v₁ … v_{m+1}` along edges with pairwise distinct interior
/// vertices, each distinct from the endpoints. Closed when `v₁ = v_{m+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<VertexId>,
    sign: EdgeSign,
}

impl Path {
    pub fn new(g: &PlumbingGraph, vertices: Vec<VertexId>) -> Result<Self, Error> {
        if vertices.len() < 2 {
            return Err(Error::NotAPath);
        }
        let mut sign = EdgeSign::Positive;
        for w in vertices.windows(2) {
            sign = sign * g.edge_sign(w[0], w[1]).ok_or(Error::NotAPath)?;
        }
        let m = vertices.len() - 1;
        let interior: BTreeSet<_> = vertices[1..m].iter().copied().collect();
        let ends = [vertices[0], vertices[m]];
        if interior.len() != m - 1 || ends.iter().any(|e| interior.contains(e)) {
            return Err(Error::NotAPath);
        }
        Ok(Self { vertices, sign })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn first(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn last(&self) -> VertexId {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn interior(&self) -> &[VertexId] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// Product of the traversed edge signs.
    pub fn sign(&self) -> EdgeSign {
        self.sign
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self {
            vertices,
            sign: self.sign,
        }
    }

    /// `sign(r(v₁)) · σ · sign(r(v_{m+1}))`.
    pub fn product(&self, g: &PlumbingGraph) -> i64 {
        let s = |v| g.decoration(v).map_or(0, |d| d.sign().value());
        s(self.first()) * self.sign.as_i64() * s(self.last())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Whether every vertex is extreme and every path between signed vertices
/// (closed paths included) has a non-negative sign product.
pub fn is_consistent(g: &PlumbingGraph) -> Result<bool, Error> {
    ensure_valid(g)?;
    Ok(consistent_unchecked(g))
}

pub(crate) fn all_extreme(g: &PlumbingGraph) -> bool {
    g.vertices().all(|(_, d)| is_extreme(d.b, d.r))
}

/// Consistency without the validity check. On good graphs the path
/// condition reduces to a two-colouring: in each component holding a
/// signed vertex, propagate `τ(w) = τ(u)·σ(uw)` from a signed root and
/// require agreement on every edge and every signed vertex.
pub(crate) fn consistent_unchecked(g: &PlumbingGraph) -> bool {
    if !all_extreme(g) {
        return false;
    }
    // one propagation per component, rooted at its least signed vertex;
    // components without signed vertices are never entered
    let mut tau: BTreeMap<VertexId, EdgeSign> = BTreeMap::new();
    let mut stack = Vec::new();
    for (root, d) in g.vertices() {
        let Some(root_sign) = d.sign().as_edge_sign() else {
            continue;
        };
        if tau.contains_key(&root) {
            continue;
        }
        tau.insert(root, root_sign);
        stack.push(root);
        while let Some(u) = stack.pop() {
            let tu = tau[&u];
            if let Some(s) = g.decoration(u).and_then(|d| d.sign().as_edge_sign()) {
                if s != tu {
                    return false;
                }
            }
            for (w, sigma) in g.neighbors(u) {
                let expected = tu * sigma;
                match tau.get(&w) {
                    Some(&tw) if tw != expected => return false,
                    Some(_) => {}
                    None => {
                        tau.insert(w, expected);
                        stack.push(w);
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use EdgeSign::*;

    fn chain(decos: &[(i64, i64)], signs: &[EdgeSign]) -> PlumbingGraph {
        PlumbingGraph::from_parts(
            decos
                .iter()
                .enumerate()
                .map(|(i, &(b, r))| (i as u32, b, r)),
            signs
                .iter()
                .enumerate()
                .map(|(i, &s)| (i as u32, i as u32 + 1, s)),
        )
        .unwrap()
    }

    #[test]
    fn structural_errors() {
        let mut g = PlumbingGraph::new();
        g.add_vertex(VertexId(0), Decoration::new(-2, 0)).unwrap();
        assert_eq!(
            g.add_vertex(VertexId(0), Decoration::new(-3, 1)),
            Err(StructuralError::DuplicateVertex(VertexId(0)))
        );
        assert_eq!(
            g.add_edge(VertexId(0), VertexId(1), Positive),
            Err(StructuralError::UnknownVertex(VertexId(1)))
        );
        assert_eq!(
            g.add_edge(VertexId(0), VertexId(0), Positive),
            Err(StructuralError::SelfLoop(VertexId(0)))
        );
        g.add_vertex(VertexId(1), Decoration::new(-2, 0)).unwrap();
        g.add_edge(VertexId(1), VertexId(0), Negative).unwrap();
        assert_eq!(
            g.add_edge(VertexId(0), VertexId(1), Positive),
            Err(StructuralError::ParallelEdge(VertexId(0), VertexId(1)))
        );
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(VertexId(0), VertexId(1), Negative)]
        );
    }

    #[test]
    fn validation_examples() {
        assert!(validate_graph(&chain(&[(-2, 0)], &[])).is_valid());

        let bad = validate_graph(&chain(&[(-1, 0)], &[]));
        assert!(bad.violations.contains(&Violation::FramingTooLarge {
            vertex: VertexId(0),
            b: -1
        }));
        assert!(bad.to_string().contains("b(v) <= -2 fails"));

        let mut g = chain(&[(-2, 0), (-2, 0), (-2, 0)], &[Positive, Positive]);
        assert!(validate_graph(&g).is_valid());
        g.add_vertex(VertexId(3), Decoration::new(-2, 0)).unwrap();
        g.add_edge(VertexId(1), VertexId(3), Positive).unwrap();
        let report = validate_graph(&g);
        assert_eq!(
            report.violations,
            vec![Violation::NotGood {
                vertex: VertexId(1),
                b: -2,
                degree: 3
            }]
        );
    }

    #[test]
    fn rotation_constraints() {
        let r = validate_graph(&chain(&[(-4, 1)], &[]));
        assert!(matches!(
            r.violations[..],
            [Violation::RotationParity { .. }]
        ));
        let r = validate_graph(&chain(&[(-4, 4)], &[]));
        assert!(matches!(
            r.violations[..],
            [Violation::RotationRange { .. }]
        ));
    }

    #[test]
    fn shape_only_matters_off_forests() {
        // degree-4 hub on a tree is fine shape-wise
        let star = PlumbingGraph::from_parts(
            [(0, -4, 0), (1, -2, 0), (2, -2, 0), (3, -2, 0), (4, -2, 0)],
            [
                (0, 1, Positive),
                (0, 2, Positive),
                (0, 3, Positive),
                (0, 4, Positive),
            ],
        )
        .unwrap();
        assert!(validate_graph(&star).is_valid());
        let mut cyc = star.clone();
        cyc.add_edge(VertexId(1), VertexId(2), Positive).unwrap();
        let r = validate_graph(&cyc);
        assert!(r.violations.contains(&Violation::Shape {
            vertex: VertexId(0),
            degree: 4
        }));
    }

    #[test]
    fn extremes() {
        assert!(is_extreme(-2, 0));
        assert!(is_extreme(-3, 1));
        assert!(is_extreme(-3, -1));
        assert!(!is_extreme(-4, 0));
        assert!(is_extreme(-5, 3));
        assert!(!is_extreme(-5, 1));
    }

    #[test]
    fn unknots() {
        assert_eq!(
            vertex_unknot(-2, 0).unwrap(),
            UnknotDescriptor {
                tb: -1,
                rot: 0,
                s_plus: 0,
                s_minus: 0
            }
        );
        assert_eq!(
            vertex_unknot(-3, -1).unwrap(),
            UnknotDescriptor {
                tb: -2,
                rot: -1,
                s_plus: 0,
                s_minus: 1
            }
        );
        assert_eq!(
            vertex_unknot(-4, 2).unwrap(),
            UnknotDescriptor {
                tb: -3,
                rot: 2,
                s_plus: 2,
                s_minus: 0
            }
        );
        assert!(vertex_unknot(-4, 1).is_err());
        assert!(vertex_unknot(-1, 0).is_err());
    }

    #[test]
    fn consistency_examples() {
        assert!(is_consistent(&chain(&[(-3, 1), (-3, 1)], &[Positive])).unwrap());
        assert!(!is_consistent(&chain(&[(-3, -1), (-3, 1)], &[Positive])).unwrap());
        let tri = PlumbingGraph::from_parts(
            [(1, -3, 1), (2, -2, 0), (3, -2, 0)],
            [(1, 2, Positive), (2, 3, Positive), (3, 1, Negative)],
        )
        .unwrap();
        assert!(!is_consistent(&tri).unwrap());
    }

    #[test]
    fn non_extreme_is_inconsistent() {
        assert!(!is_consistent(&chain(&[(-4, 0)], &[])).unwrap());
    }

    #[test]
    fn consistency_rejects_invalid() {
        assert!(matches!(
            is_consistent(&chain(&[(-1, 1)], &[])),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn unsigned_negative_cycle_is_consistent() {
        // all r = 0: no path product can be negative
        let tri = PlumbingGraph::from_parts(
            [(0, -2, 0), (1, -2, 0), (2, -2, 0)],
            [(0, 1, Negative), (1, 2, Positive), (2, 0, Positive)],
        )
        .unwrap();
        assert!(is_consistent(&tri).unwrap());
    }

    #[test]
    fn paths() {
        let g = chain(&[(-3, 1), (-2, 0), (-3, -1)], &[Positive, Negative]);
        let p = Path::new(&g, vec![VertexId(0), VertexId(1), VertexId(2)]).unwrap();
        assert_eq!(p.sign(), Negative);
        assert_eq!(p.product(&g), 1);
        assert!(!p.is_closed());
        assert_eq!(p.to_string(), "0-1-2");
        assert!(Path::new(&g, vec![VertexId(0), VertexId(2)]).is_err());
        assert!(Path::new(&g, vec![VertexId(0)]).is_err());
        assert!(Path::new(&g, vec![VertexId(0), VertexId(1), VertexId(0), VertexId(1)]).is_err());
    }

    #[test]
    fn induced_subgraph_drops_edges() {
        let g = chain(&[(-2, 0), (-2, 0), (-2, 0)], &[Positive, Negative]);
        let h = g.without_vertex(VertexId(1));
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 0);
        assert_eq!(h.components().len(), 2);
    }
}
