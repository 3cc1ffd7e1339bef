//! Chains of Legendrian unknots: lens-space chains in the standard tight
//! 3-sphere, cyclic torus-bundle chains over a 1-handle, inconsistent-chain
//! recognition, breaking, structure counts and Stein descriptions.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::ops::Range;

use crate::arith::{check_exponents, neg_cf_expand, MonodromySign, MonodromyWord};
use crate::graph::{ensure_valid, vertex_unknot, Decoration, EdgeSign, PlumbingGraph, VertexId};
use crate::unknot::UnknotDescriptor;
use crate::Error;

/// An ordered chain of unknots. `link_signs[i]` is the linking number of
/// components `i` and `i + 1`; a closed chain carries one extra entry, the
/// linking of the last component with the first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainDiagram {
    components: Vec<UnknotDescriptor>,
    link_signs: Vec<EdgeSign>,
    closed: bool,
    over_handle: Option<Range<usize>>,
}

impl ChainDiagram {
    /// The empty surgery diagram.
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn linear(
        components: Vec<UnknotDescriptor>,
        link_signs: Vec<EdgeSign>,
    ) -> Result<Self, Error> {
        let expected = components.len().saturating_sub(1);
        if link_signs.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: link_signs.len(),
            });
        }
        Ok(Self {
            components,
            link_signs,
            closed: false,
            over_handle: None,
        })
    }

    /// A closed chain; `link_signs` has one entry per consecutive pair and
    /// `closing_sign` links the last component back to the first.
    pub fn cyclic(
        components: Vec<UnknotDescriptor>,
        mut link_signs: Vec<EdgeSign>,
        closing_sign: EdgeSign,
    ) -> Result<Self, Error> {
        if components.is_empty() {
            return Err(Error::EmptyChain);
        }
        let expected = components.len() - 1;
        if link_signs.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: link_signs.len(),
            });
        }
        link_signs.push(closing_sign);
        Ok(Self {
            components,
            link_signs,
            closed: true,
            over_handle: None,
        })
    }

    /// Marks components `range` as passing over a 1-handle.
    pub fn with_over_handle(mut self, range: Range<usize>) -> Result<Self, Error> {
        if range.end > self.components.len() || range.start > range.end {
            return Err(Error::IndexOutOfRange {
                index: range.end,
                len: self.components.len(),
            });
        }
        self.over_handle = Some(range);
        Ok(self)
    }

    pub fn components(&self) -> &[UnknotDescriptor] {
        &self.components
    }

    pub fn link_signs(&self) -> &[EdgeSign] {
        &self.link_signs
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn closing_sign(&self) -> Option<EdgeSign> {
        self.closed
            .then(|| *self.link_signs.last().expect("closed chain"))
    }

    pub fn over_handle(&self) -> Option<Range<usize>> {
        self.over_handle.clone()
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Framing coefficients `aₖ = 1 - tb(Uₖ)`.
    pub fn framings(&self) -> Vec<i64> {
        self.components.iter().map(|u| 1 - u.tb).collect()
    }

    /// Plumbing graph with vertex `i` for component `i`, `b = tb - 1`,
    /// `r = rot`, and one signed edge per linking.
    pub fn to_graph(&self) -> PlumbingGraph {
        let mut g = PlumbingGraph::new();
        for (i, u) in self.components.iter().enumerate() {
            g.add_vertex(VertexId(i as u32), Decoration::new(u.tb - 1, u.rot))
                .expect("distinct ids");
        }
        let n = self.components.len();
        for (i, &s) in self.link_signs.iter().enumerate() {
            let j = (i + 1) % n;
            // a closed chain of one or two components would need a loop or
            // a second edge; those linkings are not representable
            let _ = g.add_edge(VertexId(i as u32), VertexId(j as u32), s);
        }
        g
    }
}

/// Linear chain `C_{p,q}` realizing the lens space `L(p, q)`, with the
/// given rotation numbers.
pub fn lens_chain(p: i64, q: i64, rot: &[i64]) -> Result<ChainDiagram, Error> {
    let a = neg_cf_expand(p, q)?;
    if rot.len() != a.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            found: rot.len(),
        });
    }
    let components = a
        .iter()
        .zip(rot)
        .enumerate()
        .map(|(index, (&ak, &r))| {
            UnknotDescriptor::from_tb_rot(1 - ak, r).map_err(|_| Error::InvalidRotation {
                index,
                a: ak,
                rot: r,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let signs = alloc::vec![EdgeSign::Positive; a.len() - 1];
    ChainDiagram::linear(components, signs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureCounts {
    pub total: u64,
    pub universally_tight: u64,
    pub virtually_overtwisted: u64,
}

/// Tight structures on the lens space with framings `-a`: one per
/// Legendrian realization of the chain, two of them universally tight
/// unless every `aᵢ = 2`.
pub fn count_structures(a: &[i64]) -> Result<StructureCounts, Error> {
    check_exponents(a)?;
    let total: u64 = a.iter().map(|&x| (x - 1) as u64).product();
    let universally_tight = if a.iter().all(|&x| x == 2) { 1 } else { 2 };
    Ok(StructureCounts {
        total,
        universally_tight,
        virtually_overtwisted: total - universally_tight,
    })
}

fn ensure_positive_linear(c: &ChainDiagram) -> Result<(), Error> {
    if c.closed {
        return Err(Error::NotLinear);
    }
    if c.link_signs.contains(&EdgeSign::Negative) {
        return Err(Error::NotPositive);
    }
    Ok(())
}

/// All stabilizations on one side: every component has `s₋ = 0`, or
/// every component has `s₊ = 0`.
pub fn is_universally_tight(c: &ChainDiagram) -> Result<bool, Error> {
    ensure_positive_linear(c)?;
    Ok(c.components.iter().all(|u| u.s_minus == 0) || c.components.iter().all(|u| u.s_plus == 0))
}

/// Whether the chain `Λ₁ ⊔ … ⊔ Λₙ` is inconsistent: both ends stabilized,
/// interior components max-tb, and some choice of end stabilization signs
/// makes `σ₁ · lk(Λ₁,Λ₂) ⋯ lk(Λₙ₋₁,Λₙ) · σₙ = -1`.
///
/// A closed chain is read with `Λₙ = Λ₁`. For a single linear component,
/// `self_link` supplies `lk(Λ₁⁺, Λ₁⁻)`; without it only a component
/// stabilized with both signs is inconsistent.
pub fn is_inconsistent_chain(c: &ChainDiagram, self_link: Option<EdgeSign>) -> Result<bool, Error> {
    let n = c.len();
    if n == 0 {
        return Err(Error::EmptyChain);
    }
    let interior = if c.closed {
        1..n
    } else {
        1..n.saturating_sub(1)
    };
    for index in interior {
        if !c.components[index].is_max_tb() {
            return Err(Error::InteriorNotMaxTb { index });
        }
    }
    let first = &c.components[0];
    let last = if c.closed {
        first
    } else {
        &c.components[n - 1]
    };
    let product: i64 = if n == 1 && !c.closed {
        match self_link {
            Some(l) => l.as_i64(),
            None => return Ok(first.is_mixed()),
        }
    } else {
        c.link_signs.iter().map(|s| s.as_i64()).product()
    };
    Ok(first
        .stabilization_signs()
        .any(|s1| last.stabilization_signs().any(|sn| s1 * product * sn == -1)))
}

/// Outcome of removing one component of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BreakResult {
    /// Two pieces (left, right) for a linear chain; one for a cyclic one.
    pub pieces: Vec<ChainDiagram>,
    pub lambda_plus: UnknotDescriptor,
    pub lambda_minus: UnknotDescriptor,
    pub removed_index: usize,
}

/// Removes component `k` of a linear chain, leaving the chains to its
/// left and right (either may be empty).
pub fn break_linear(c: &ChainDiagram, k: usize) -> Result<BreakResult, Error> {
    if c.closed {
        return Err(Error::NotLinear);
    }
    let n = c.len();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    let left = ChainDiagram::linear(
        c.components[..k].to_vec(),
        c.link_signs[..k.saturating_sub(1)].to_vec(),
    )?;
    let right = ChainDiagram::linear(
        c.components[k + 1..].to_vec(),
        c.link_signs[(k + 1).min(c.link_signs.len())..].to_vec(),
    )?;
    let (lambda_plus, lambda_minus) = c.components[k].split();
    Ok(BreakResult {
        pieces: alloc::vec![left, right],
        lambda_plus,
        lambda_minus,
        removed_index: k,
    })
}

/// Removes component `k` of a closed chain together with the 1-handle it
/// passes over, leaving the linear chain `k+1, …, n-1, 0, …, k-1`.
pub fn break_cyclic_chain(c: &ChainDiagram, k: usize) -> Result<BreakResult, Error> {
    if !c.closed {
        return Err(Error::NotCyclic);
    }
    let n = c.len();
    if k >= n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    let order: Vec<usize> = (1..n).map(|j| (k + j) % n).collect();
    let components = order.iter().map(|&i| c.components[i]).collect();
    let signs = order.windows(2).map(|w| c.link_signs[w[0]]).collect();
    let (lambda_plus, lambda_minus) = c.components[k].split();
    Ok(BreakResult {
        pieces: alloc::vec![ChainDiagram::linear(components, signs)?],
        lambda_plus,
        lambda_minus,
        removed_index: k,
    })
}

/// Cyclic chain `U₀, …, Uₙ` over a 1-handle presenting the torus bundle
/// with monodromy `w`: `tb(Uₖ) = 1 - aₖ`, consecutive linkings `+1`, and
/// `lk(Uₙ, U₀)` equal to the sign of `w`. Without explicit rotation
/// numbers every stabilization is negative.
pub fn torus_bundle_chain(w: &MonodromyWord, rot: Option<&[i64]>) -> Result<ChainDiagram, Error> {
    let a = w.exponents();
    if let Some(r) = rot {
        if r.len() != a.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                found: r.len(),
            });
        }
    }
    let components = a
        .iter()
        .enumerate()
        .map(|(index, &ak)| {
            let r = rot.map_or(2 - ak, |r| r[index]);
            UnknotDescriptor::from_tb_rot(1 - ak, r).map_err(|_| Error::InvalidRotation {
                index,
                a: ak,
                rot: r,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let closing = match w.sign() {
        MonodromySign::Positive => EdgeSign::Positive,
        MonodromySign::Negative => EdgeSign::Negative,
    };
    let n = a.len();
    ChainDiagram::cyclic(components, alloc::vec![EdgeSign::Positive; n - 1], closing)?
        .with_over_handle(0..n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicBreak {
    /// Framings `a_{k+1}, …, aₙ, a₀, …, a_{k-1}` of the resulting lens chain.
    pub lens: Vec<i64>,
    pub result: BreakResult,
}

/// Breaks the single-sign torus-bundle chain of `w` at `U_k`.
pub fn break_cyclic(w: &MonodromyWord, k: usize) -> Result<CyclicBreak, Error> {
    let chain = torus_bundle_chain(w, None)?;
    let result = break_cyclic_chain(&chain, k)?;
    Ok(CyclicBreak {
        lens: result.pieces[0].framings(),
        result,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BundleCounts {
    pub tight: u64,
    pub virtually_overtwisted: u64,
}

/// Minimally twisting tight structures on the torus bundle, and how many
/// are virtually overtwisted (`tight - 2` for positive monodromy, all of
/// them for negative).
pub fn bundle_counts(w: &MonodromyWord) -> BundleCounts {
    let tight: u64 = w.exponents().iter().map(|&a| (a - 1) as u64).product();
    let universally_tight = match w.sign() {
        MonodromySign::Positive => 2,
        MonodromySign::Negative => 0,
    };
    BundleCounts {
        tight,
        virtually_overtwisted: tight - universally_tight,
    }
}

fn check_vertex_path(g: &PlumbingGraph, chain: &[VertexId]) -> Result<(), Error> {
    if chain.is_empty() {
        return Err(Error::NotAPath);
    }
    let distinct: BTreeSet<_> = chain.iter().collect();
    if distinct.len() != chain.len() || chain.iter().any(|&v| !g.contains(v)) {
        return Err(Error::NotAPath);
    }
    if chain.windows(2).any(|w| g.edge_sign(w[0], w[1]).is_none()) {
        return Err(Error::NotAPath);
    }
    Ok(())
}

/// Every interior vertex of the chain has degree at most 2 in `g`; the
/// endpoints are unrestricted.
pub fn eligible_chain(g: &PlumbingGraph, chain: &[VertexId]) -> Result<bool, Error> {
    check_vertex_path(g, chain)?;
    let interior = &chain[1..chain.len().saturating_sub(1).max(1)];
    Ok(interior.iter().all(|&v| g.degree(v) <= 2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinUnknot {
    pub vertex: VertexId,
    pub unknot: UnknotDescriptor,
    /// Indices of the 1-handles this unknot passes over.
    pub handle_passes: Vec<usize>,
}

/// A Stein handlebody diagram: 1-handles and one Legendrian unknot per
/// vertex, ordered by vertex id, with their pairwise linking numbers.
/// The diagonal of `linking` is zero; framings are `tb - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SteinDescription {
    pub one_handles: usize,
    pub unknots: Vec<SteinUnknot>,
    pub linking: Vec<Vec<i64>>,
}

/// Vertices lying on a cycle (the 2-core of `g`).
fn cycle_vertices(g: &PlumbingGraph) -> BTreeSet<VertexId> {
    let mut alive = g.vertex_set();
    loop {
        let leaves: Vec<_> = alive
            .iter()
            .copied()
            .filter(|&v| g.neighbors(v).filter(|(w, _)| alive.contains(w)).count() < 2)
            .collect();
        if leaves.is_empty() {
            return alive;
        }
        for v in leaves {
            alive.remove(&v);
        }
    }
}

/// Stein diagram for a tree or a graph with a single cycle, with `chain`
/// (when given) routed over a 1-handle.
///
/// Trees get an artificial cancelling 0-/1-handle pair when a chain is
/// supplied. A single-cycle graph closes its cycle over one 1-handle and
/// the chain must lie on that cycle. Anything with two or more
/// independent cycles is rejected.
pub fn stein_description(
    g: &PlumbingGraph,
    chain: Option<&[VertexId]>,
) -> Result<SteinDescription, Error> {
    ensure_valid(g)?;
    if let Some(c) = chain {
        if !eligible_chain(g, c)? {
            return Err(Error::NotEligible);
        }
    }
    let (one_handles, passing): (usize, BTreeSet<VertexId>) = match g.cycle_rank() {
        0 => match chain {
            Some(c) => (1, c.iter().copied().collect()),
            None => (0, BTreeSet::new()),
        },
        1 => {
            let cycle = cycle_vertices(g);
            match chain {
                Some(c) if c.iter().all(|v| cycle.contains(v)) => (1, c.iter().copied().collect()),
                Some(_) => return Err(Error::UnsupportedShape),
                None => (1, cycle),
            }
        }
        _ => return Err(Error::UnsupportedShape),
    };
    let order: Vec<VertexId> = g.vertex_ids().collect();
    let unknots = order
        .iter()
        .map(|&v| {
            let d = g.decoration(v).expect("listed vertex");
            Ok(SteinUnknot {
                vertex: v,
                unknot: vertex_unknot(d.b, d.r)?,
                handle_passes: if passing.contains(&v) {
                    alloc::vec![0]
                } else {
                    Vec::new()
                },
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let linking = order
        .iter()
        .map(|&u| {
            order
                .iter()
                .map(|&v| g.edge_sign(u, v).map_or(0, EdgeSign::as_i64))
                .collect()
        })
        .collect();
    Ok(SteinDescription {
        one_handles,
        unknots,
        linking,
    })
}
