//! Tutte's f-factor gadget and the realization solvers built on it.
//!
//! For a base graph G and target degrees f, the gadget has two half vertices
//! `e_u`, `e_v` per base edge `uv`, joined by an inner edge, plus
//! `d(v) - f(v)` external copies of every vertex v, each adjacent to all
//! halves `e_v` at v. A perfect matching leaves exactly `f(v)` halves at v
//! for inner edges, so the matched inner edges form an f-factor.

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Edge, LabeledGraph, VertexId};
use crate::matching::{max_weight_perfect_matching, Matching, Weight, WeightedGraph};
use crate::skeleton::SkeletonGraph;

#[derive(Clone, Debug)]
pub struct FactorSpec {
    pub base: LabeledGraph,
    pub f: Vec<usize>,
}

impl FactorSpec {
    pub fn new(base: LabeledGraph, f: Vec<usize>) -> Result<Self> {
        if f.len() != base.n() {
            return Err(Error::VertexSetMismatch {
                left: base.n(),
                right: f.len(),
            });
        }
        Ok(FactorSpec { base, f })
    }

    /// First vertex whose target exceeds its base degree.
    fn check(&self) -> Result<()> {
        for v in 0..self.base.n() {
            if self.f[v] > self.base.degree(v) {
                return Err(Error::FactorExceedsDegree {
                    vertex: v,
                    f: self.f[v],
                    degree: self.base.degree(v),
                });
            }
        }
        Ok(())
    }
}

/// Gadget vertices are laid out as all halves first (edge `k` of the base
/// edge list owns `2k` and `2k + 1`), then the external copies vertex by
/// vertex.
#[derive(Clone, Debug)]
pub struct TutteGadget {
    pub graph: WeightedGraph,
    /// `(original vertex, copy index)` for external copies.
    pub external_of: Vec<Option<(VertexId, usize)>>,
    /// `(original edge, endpoint)` for half vertices.
    pub edge_half_of: Vec<Option<(Edge, VertexId)>>,
    /// Original edge for inner gadget edges, indexed by gadget edge.
    pub inner_edge_of: Vec<Option<Edge>>,
    base_edges: Vec<Edge>,
    base_n: usize,
    first_copy: Vec<usize>,
}

impl TutteGadget {
    pub fn base_edges(&self) -> &[Edge] {
        &self.base_edges
    }

    /// Gadget vertex of half `e_v` for base edge index `k`.
    pub fn half(&self, k: usize, v: VertexId) -> usize {
        let (a, _) = self.base_edges[k];
        if v == a {
            2 * k
        } else {
            2 * k + 1
        }
    }

    /// Gadget vertices of the external copies of `v`.
    pub fn copies(&self, v: VertexId) -> std::ops::Range<usize> {
        let end = if v + 1 < self.base_n {
            self.first_copy[v + 1]
        } else {
            self.graph.n()
        };
        self.first_copy[v]..end
    }
}

pub fn build_gadget<W>(spec: &FactorSpec, weight_of_edge: W) -> Result<TutteGadget>
where
    W: Fn(Edge) -> Weight,
{
    spec.check()?;
    let n = spec.base.n();
    let base_edges: Vec<Edge> = spec.base.edges().collect();
    let halves = 2 * base_edges.len();
    let mut first_copy = Vec::with_capacity(n);
    let mut total = halves;
    for v in 0..n {
        first_copy.push(total);
        total += spec.base.degree(v) - spec.f[v];
    }

    let mut external_of = vec![None; total];
    let mut edge_half_of = vec![None; total];
    for (k, &(a, b)) in base_edges.iter().enumerate() {
        edge_half_of[2 * k] = Some(((a, b), a));
        edge_half_of[2 * k + 1] = Some(((a, b), b));
    }
    for v in 0..n {
        for i in 0..spec.base.degree(v) - spec.f[v] {
            external_of[first_copy[v] + i] = Some((v, i));
        }
    }

    let mut graph = WeightedGraph::new(total);
    let mut inner_edge_of = Vec::new();
    let mut halves_at = vec![Vec::new(); n];
    for (k, &(a, b)) in base_edges.iter().enumerate() {
        graph.push_edge(2 * k, 2 * k + 1, weight_of_edge((a, b)));
        inner_edge_of.push(Some((a, b)));
        halves_at[a].push(2 * k);
        halves_at[b].push(2 * k + 1);
    }
    for v in 0..n {
        for i in 0..spec.base.degree(v) - spec.f[v] {
            for &h in &halves_at[v] {
                graph.push_edge(first_copy[v] + i, h, 0);
                inner_edge_of.push(None);
            }
        }
    }

    Ok(TutteGadget {
        graph,
        external_of,
        edge_half_of,
        inner_edge_of,
        base_edges,
        base_n: n,
        first_copy,
    })
}

/// Base edges whose inner gadget edge is matched.
pub fn extract_f_factor(gadget: &TutteGadget, m: &Matching) -> Result<LabeledGraph> {
    if m.mate.len() != gadget.graph.n() || !m.is_perfect() {
        return Err(Error::MatchingNotPerfect);
    }
    let mut g = LabeledGraph::empty(gadget.base_n);
    for (k, &(a, b)) in gadget.base_edges.iter().enumerate() {
        if m.mate[2 * k] == Some(2 * k + 1) {
            g.add_edge(a, b)?;
        }
    }
    Ok(g)
}

/// A realization of `d` using only chords of `s`, or `None`.
pub fn weak_realize(d: &DegreeSequence, s: &SkeletonGraph) -> Result<Option<LabeledGraph>> {
    Ok(weighted_realize(d, s, |_| 0)?.map(|(g, _)| g))
}

/// Among realizations of `d` using only chords of `s`, one maximizing the
/// total chord weight, together with that weight.
pub fn weighted_realize<W>(
    d: &DegreeSequence,
    s: &SkeletonGraph,
    chord_weight: W,
) -> Result<Option<(LabeledGraph, Weight)>>
where
    W: Fn(Edge) -> Weight,
{
    if d.len() != s.n() {
        return Err(Error::VertexSetMismatch {
            left: d.len(),
            right: s.n(),
        });
    }
    if d.sum() % 2 == 1 {
        return Ok(None);
    }
    let spec = FactorSpec::new(s.chord_graph(), d.0.clone())?;
    let gadget = match build_gadget(&spec, &chord_weight) {
        Ok(g) => g,
        Err(Error::FactorExceedsDegree { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let Some(m) = max_weight_perfect_matching(&gadget.graph) else {
        return Ok(None);
    };
    let g = extract_f_factor(&gadget, &m)?;
    debug_assert_eq!(&g.degree_sequence(), d);
    Ok(Some((g, m.total_weight)))
}

/// Number of perfect matchings of the gadget in which each vertex's
/// external copies are used in index order. Copies of one vertex are
/// interchangeable, so this counts f-factors rather than labeled matchings.
pub fn count_canonical_matchings(gadget: &TutteGadget) -> u64 {
    let n = gadget.graph.n();
    let mut adj = vec![Vec::new(); n];
    for &(u, v, _) in gadget.graph.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut mate = vec![usize::MAX; n];
    fn rec(g: &TutteGadget, adj: &[Vec<usize>], mate: &mut Vec<usize>, from: usize) -> u64 {
        let Some(u) = (from..mate.len()).find(|&u| mate[u] == usize::MAX) else {
            return 1;
        };
        let mut count = 0;
        let mut tried_copy_of = Vec::new();
        for &v in &adj[u] {
            if mate[v] != usize::MAX {
                continue;
            }
            if let Some((orig, _)) = g.external_of[v] {
                // Only the lowest free copy of each vertex.
                if tried_copy_of.contains(&orig) {
                    continue;
                }
                let lowest = g.copies(orig).find(|&c| mate[c] == usize::MAX);
                if lowest != Some(v) {
                    continue;
                }
                tried_copy_of.push(orig);
            }
            mate[u] = v;
            mate[v] = u;
            count += rec(g, adj, mate, u + 1);
            mate[u] = usize::MAX;
            mate[v] = usize::MAX;
        }
        count
    }
    rec(gadget, &adj, &mut mate, 0)
}
