//! Brute-force oracles and graph families shared by the integration and
//! acceptance tests. Nothing here calls into the consistency code under
//! test.

#![allow(dead_code)]

use jsj_core::{EdgeSign, PlumbingGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Path,
    Cycle,
    Star,
    /// A path on `n - 1` vertices with a pendant vertex attached at the
    /// given interior position.
    PathPendant(usize),
}

impl Shape {
    pub fn is_linear(self) -> bool {
        self == Shape::Path
    }
}

pub fn shape_edges(shape: Shape, n: usize) -> Vec<(usize, usize)> {
    match shape {
        Shape::Path => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
        Shape::Cycle => (0..n).map(|i| (i, (i + 1) % n)).collect(),
        Shape::Star => (1..n).map(|i| (0, i)).collect(),
        Shape::PathPendant(at) => {
            let k = n - 1;
            let mut e: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
            e.push((at, k));
            e
        }
    }
}

/// Every (shape, size) in the test family up to `max_n` vertices.
pub fn family_shapes(max_n: usize) -> Vec<(Shape, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((Shape::Path, n));
    }
    for n in 3..=max_n {
        out.push((Shape::Cycle, n));
    }
    for n in 4..=max_n {
        out.push((Shape::Star, n));
    }
    for n in 4..=max_n {
        for at in 1..n - 2 {
            out.push((Shape::PathPendant(at), n));
        }
    }
    out
}

/// All valid `(b, r)` with `b` in `frames`.
pub fn decorations(frames: &[i64]) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for &b in frames {
        let mut r = b + 2;
        while r <= -b - 2 {
            out.push((b, r));
            r += 2;
        }
    }
    out
}

/// Calls `f` on every good, fully-decorated graph of the given shape with
/// framings from `frames`, every valid rotation, and every edge-sign
/// assignment.
pub fn for_each_decorated(
    shape: Shape,
    n: usize,
    frames: &[i64],
    mut f: impl FnMut(&PlumbingGraph),
) {
    let edges = shape_edges(shape, n);
    let mut degree = vec![0i64; n];
    for &(u, v) in &edges {
        degree[u] += 1;
        degree[v] += 1;
    }
    let all = decorations(frames);
    let options: Vec<Vec<(i64, i64)>> = degree
        .iter()
        .map(|&d| all.iter().copied().filter(|&(b, _)| b + d <= 0).collect())
        .collect();
    if options.iter().any(|o| o.is_empty()) {
        return;
    }
    let mut choice = vec![0usize; n];
    loop {
        for mask in 0u32..1 << edges.len() {
            let g = PlumbingGraph::from_parts(
                (0..n).map(|v| {
                    let (b, r) = options[v][choice[v]];
                    (v as u32, b, r)
                }),
                edges.iter().enumerate().map(|(i, &(u, v))| {
                    let s = if mask >> i & 1 == 1 {
                        EdgeSign::Negative
                    } else {
                        EdgeSign::Positive
                    };
                    (u as u32, v as u32, s)
                }),
            )
            .expect("family graphs are simple");
            f(&g);
        }
        // odometer over per-vertex choices
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// The acceptance family: shapes up to `max_n` vertices, `b ∈ {-2,-3,-4}`.
pub fn for_each_family_graph(max_n: usize, mut f: impl FnMut(Shape, &PlumbingGraph)) {
    for (shape, n) in family_shapes(max_n) {
        for_each_decorated(shape, n, &[-2, -3, -4], |g| f(shape, g));
    }
}

/// Consistency by definition: every vertex extreme, and every simple path
/// between signed vertices, and every simple closed path based at a
/// signed vertex, has non-negative sign product. Exponential.
pub fn brute_force_consistent(g: &PlumbingGraph) -> bool {
    let ids: Vec<_> = g.vertex_ids().collect();
    let n = ids.len();
    let pos = |v| ids.iter().position(|&w| w == v).unwrap();
    let mut sign = vec![0i64; n];
    for (i, &v) in ids.iter().enumerate() {
        let d = g.decoration(v).unwrap();
        if d.r != d.b + 2 && d.r != -(d.b + 2) {
            return false;
        }
        sign[i] = d.r.signum();
    }
    let adj: Vec<Vec<(usize, i64)>> = ids
        .iter()
        .map(|&v| g.neighbors(v).map(|(w, s)| (pos(w), s.as_i64())).collect())
        .collect();

    fn dfs(
        start: usize,
        cur: usize,
        product: i64,
        len: usize,
        on_path: &mut Vec<bool>,
        adj: &[Vec<(usize, i64)>],
        sign: &[i64],
    ) -> bool {
        for &(next, s) in &adj[cur] {
            let p = product * s;
            if next == start {
                // closed path; the base vertex appears at both ends
                if len >= 2 && sign[start] * p * sign[start] < 0 {
                    return false;
                }
                continue;
            }
            if on_path[next] {
                continue;
            }
            if sign[start] * p * sign[next] < 0 {
                return false;
            }
            on_path[next] = true;
            let ok = dfs(start, next, p, len + 1, on_path, adj, sign);
            on_path[next] = false;
            if !ok {
                return false;
            }
        }
        true
    }

    let mut on_path = vec![false; n];
    for start in 0..n {
        if sign[start] == 0 {
            continue;
        }
        on_path[start] = true;
        let ok = dfs(start, start, 1, 0, &mut on_path, &adj, &sign);
        on_path[start] = false;
        if !ok {
            return false;
        }
    }
    true
}

/// Consistent vertex subsets that no single added vertex keeps consistent,
/// found with the brute-force path oracle.
pub fn brute_force_maximal(
    g: &PlumbingGraph,
) -> Vec<std::collections::BTreeSet<jsj_core::VertexId>> {
    let ids: Vec<_> = g.vertex_ids().collect();
    let n = ids.len();
    let subset = |mask: usize| -> std::collections::BTreeSet<_> {
        (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| ids[i])
            .collect()
    };
    let ok: Vec<bool> = (0..1usize << n)
        .map(|m| brute_force_consistent(&g.induced_subgraph(&subset(m))))
        .collect();
    let mut out: Vec<_> = (0..1usize << n)
        .filter(|&m| ok[m])
        .filter(|&m| {
            // no consistent strict superset at all
            (0..1usize << n).all(|s| s == m || s & m != m || !ok[s])
        })
        .map(subset)
        .collect();
    out.sort();
    out
}
