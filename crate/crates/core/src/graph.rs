//! Simple labeled graphs, degree sequences and red/blue symmetric differences.
//!
//! Vertices are dense indices `0..n`. A [`LabeledGraph`] keeps its edges both
//! as an ordered pair set and as per-vertex sorted neighbor sets, so membership
//! tests and neighborhood scans are both cheap.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub type VertexId = usize;

/// An unordered vertex pair, always stored with the smaller id first.
pub type Edge = (VertexId, VertexId);

/// Normalizes an unordered pair.
#[inline]
pub fn pair(u: VertexId, v: VertexId) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledGraph {
    n: usize,
    edges: BTreeSet<Edge>,
    adj: Vec<BTreeSet<VertexId>>,
}

impl LabeledGraph {
    pub fn empty(n: usize) -> Self {
        LabeledGraph {
            n,
            edges: BTreeSet::new(),
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from a list of edges; rejects loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = LabeledGraph::empty(n);
        for (u, v) in edges {
            if !g.add_edge(u, v)? {
                let (a, b) = pair(u, v);
                return Err(Error::DuplicateEdge(a, b));
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn check_pair(&self, u: VertexId, v: VertexId) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    /// Inserts `uv`; returns `false` if it was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        self.check_pair(u, v)?;
        if !self.edges.insert(pair(u, v)) {
            return Ok(false);
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(true)
    }

    /// Removes `uv`; returns `false` if it was absent.
    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        self.check_pair(u, v)?;
        if !self.edges.remove(&pair(u, v)) {
            return Ok(false);
        }
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
        Ok(true)
    }

    /// Flips the presence of a pair. Callers guarantee a valid pair.
    pub(crate) fn toggle(&mut self, u: VertexId, v: VertexId) {
        debug_assert!(u != v && u < self.n && v < self.n);
        let e = pair(u, v);
        if self.edges.remove(&e) {
            self.adj[u].remove(&v);
            self.adj[v].remove(&u);
        } else {
            self.edges.insert(e);
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        }
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(&v)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence((0..self.n).map(|v| self.degree(v)).collect())
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph(n={}, {:?})", self.n, self.edges)
    }
}

/// Degrees indexed by vertex id. Unordered: position `v` is the degree of `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Self {
        DegreeSequence(degrees)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl std::ops::Index<VertexId> for DegreeSequence {
    type Output = usize;

    fn index(&self, v: VertexId) -> &usize {
        &self.0[v]
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(v: Vec<usize>) -> Self {
        DegreeSequence(v)
    }
}

/// Degree sequence of a graph.
pub fn degree_sequence(g: &LabeledGraph) -> DegreeSequence {
    g.degree_sequence()
}

/// The symmetric difference of two graphs on the same vertex set. Red pairs
/// are edges of the first graph only, blue pairs edges of the second only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredChordSet {
    n: usize,
    red: BTreeSet<Edge>,
    blue: BTreeSet<Edge>,
}

impl ColoredChordSet {
    pub fn new(n: usize, red: BTreeSet<Edge>, blue: BTreeSet<Edge>) -> Result<Self> {
        for &(u, v) in red.iter().chain(blue.iter()) {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u > v {
                return Err(Error::InvalidCircuit(format!(
                    "pair ({u},{v}) is not normalized"
                )));
            }
        }
        if let Some(&(u, v)) = red.intersection(&blue).next() {
            return Err(Error::InvalidCircuit(format!(
                "pair {u}-{v} is both red and blue"
            )));
        }
        Ok(ColoredChordSet { n, red, blue })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn red(&self) -> &BTreeSet<Edge> {
        &self.red
    }

    pub fn blue(&self) -> &BTreeSet<Edge> {
        &self.blue
    }

    /// `r(G, G')`: the number of red pairs.
    pub fn r(&self) -> usize {
        self.red.len()
    }

    pub fn is_empty(&self) -> bool {
        self.red.is_empty() && self.blue.is_empty()
    }

    pub fn red_degree(&self, v: VertexId) -> usize {
        self.red.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn blue_degree(&self, v: VertexId) -> usize {
        self.blue.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn color_degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let mut red = vec![0; self.n];
        let mut blue = vec![0; self.n];
        for &(u, v) in &self.red {
            red[u] += 1;
            red[v] += 1;
        }
        for &(u, v) in &self.blue {
            blue[u] += 1;
            blue[v] += 1;
        }
        (red, blue)
    }

    /// First vertex whose red and blue degrees differ, if any.
    pub fn check_balanced(&self) -> Result<()> {
        let (red, blue) = self.color_degrees();
        for v in 0..self.n {
            if red[v] != blue[v] {
                return Err(Error::Unbalanced {
                    vertex: v,
                    red: red[v],
                    blue: blue[v],
                });
            }
        }
        Ok(())
    }

    /// Checks that `circuits` is a valid alternating-circuit decomposition:
    /// each circuit alternates red/blue starting with red, and together they
    /// use every colored pair exactly once.
    pub fn is_valid_decomposition(&self, circuits: &[AlternatingCircuit]) -> bool {
        let mut red_left = self.red.clone();
        let mut blue_left = self.blue.clone();
        for c in circuits {
            let len = c.len();
            if len < 4 || len % 2 != 0 {
                return false;
            }
            let mut seen = vec![0usize; self.n];
            for &v in c.vertices() {
                if v >= self.n {
                    return false;
                }
                seen[v] += 1;
                if seen[v] > 2 {
                    return false;
                }
            }
            for (i, e) in c.pairs().enumerate() {
                let bucket = if i % 2 == 0 {
                    &mut red_left
                } else {
                    &mut blue_left
                };
                if e.0 == e.1 || !bucket.remove(&e) {
                    return false;
                }
            }
        }
        red_left.is_empty() && blue_left.is_empty()
    }
}

/// `red = E(G) \ E(G2)`, `blue = E(G2) \ E(G)`.
pub fn symmetric_difference(g: &LabeledGraph, g2: &LabeledGraph) -> Result<ColoredChordSet> {
    if g.n() != g2.n() {
        return Err(Error::VertexSetMismatch {
            left: g.n(),
            right: g2.n(),
        });
    }
    let red = g.edge_set().difference(g2.edge_set()).copied().collect();
    let blue = g2.edge_set().difference(g.edge_set()).copied().collect();
    Ok(ColoredChordSet {
        n: g.n(),
        red,
        blue,
    })
}

/// A closed walk `v_0 v_1 ... v_{2m-1}` whose consecutive pairs alternate in
/// color, the pair `v_0 v_1` being red (an edge of the graph it is read
/// against) and the closing pair `v_{2m-1} v_0` blue.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlternatingCircuit {
    vertices: Vec<VertexId>,
}

impl AlternatingCircuit {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.len() < 4 || !vertices.len().is_multiple_of(2) {
            return Err(Error::InvalidCircuit(format!(
                "length {} is not an even number >= 4",
                vertices.len()
            )));
        }
        let c = AlternatingCircuit { vertices };
        let mut pairs: Vec<Edge> = Vec::with_capacity(c.len());
        for (u, v) in c.pairs() {
            if u == v {
                return Err(Error::InvalidCircuit(format!(
                    "consecutive repeat of vertex {u}"
                )));
            }
            pairs.push((u, v));
        }
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCircuit("a pair occurs twice".into()));
        }
        Ok(c)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive pairs, normalized; index `i` is `v_i v_{i+1}`.
    pub fn pairs(&self) -> impl Iterator<Item = Edge> + '_ {
        let len = self.vertices.len();
        (0..len).map(move |i| pair(self.vertices[i], self.vertices[(i + 1) % len]))
    }

    pub fn red_pairs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.pairs().step_by(2)
    }

    pub fn blue_pairs(&self) -> impl Iterator<Item = Edge> + '_ {
        self.pairs().skip(1).step_by(2)
    }

    pub fn vertex_set(&self) -> BTreeSet<VertexId> {
        self.vertices.iter().copied().collect()
    }
}

/// Splits a balanced red/blue pair set into alternating circuits.
///
/// The walk always starts at the smallest vertex with an unused red pair and
/// continues through the smallest unused neighbor of the required color. A
/// vertex revisited at an even distance along the current trail closes a
/// sub-circuit, which is cut off immediately; hence no vertex occurs more than
/// twice in any output circuit.
pub fn decompose_into_alternating_circuits(d: &ColoredChordSet) -> Result<Vec<AlternatingCircuit>> {
    d.check_balanced()?;
    let n = d.n;
    let mut red_adj: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); n];
    let mut blue_adj: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); n];
    for &(u, v) in &d.red {
        red_adj[u].insert(v);
        red_adj[v].insert(u);
    }
    for &(u, v) in &d.blue {
        blue_adj[u].insert(v);
        blue_adj[v].insert(u);
    }

    let mut circuits = Vec::new();
    // positions[v] lists the indices of v on the current trail
    let mut positions: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut trail: Vec<VertexId> = Vec::new();

    loop {
        if trail.is_empty() {
            let Some(start) = (0..n).find(|&v| !red_adj[v].is_empty()) else {
                break;
            };
            trail.push(start);
            positions[start].push(0);
        }
        let pos = trail.len() - 1;
        let v = trail[pos];
        let adj = if pos.is_multiple_of(2) {
            &mut red_adj
        } else {
            &mut blue_adj
        };
        let w = match adj[v].iter().next() {
            Some(&w) => w,
            None => {
                // Balance guarantees a continuation; reaching this means the
                // input was not a symmetric difference.
                return Err(Error::InvalidCircuit(format!("walk stuck at vertex {v}")));
            }
        };
        adj[v].remove(&w);
        adj[w].remove(&v);

        let new_pos = pos + 1;
        // Cut off at the most recent earlier occurrence with even distance.
        let cut = positions[w]
            .iter()
            .rev()
            .copied()
            .find(|&p| (new_pos - p).is_multiple_of(2));
        match cut {
            Some(p) => {
                let mut cycle: Vec<VertexId> = trail.drain(p..).collect();
                for (offset, &x) in cycle.iter().enumerate().rev() {
                    let popped = positions[x].pop();
                    debug_assert_eq!(popped, Some(p + offset));
                }
                // The pair leaving trail position p is red when p is even.
                if p % 2 == 1 {
                    cycle.rotate_left(1);
                }
                circuits.push(AlternatingCircuit { vertices: cycle });
                if p > 0 {
                    trail.push(w);
                    positions[w].push(p);
                }
            }
            None => {
                trail.push(w);
                positions[w].push(new_pos);
            }
        }
    }
    Ok(circuits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[Edge]) -> LabeledGraph {
        LabeledGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn degree_sequence_examples() {
        assert_eq!(degree_sequence(&LabeledGraph::empty(3)).0, vec![0, 0, 0]);
        assert_eq!(
            degree_sequence(&g(3, &[(0, 1), (1, 2), (0, 2)])).0,
            vec![2, 2, 2]
        );
    }

    #[test]
    fn rejects_loops_duplicates_and_range() {
        assert_eq!(
            LabeledGraph::from_edges(3, [(1, 1)]),
            Err(Error::SelfLoop(1))
        );
        assert_eq!(
            LabeledGraph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            LabeledGraph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn symmetric_difference_examples() {
        let a = g(4, &[(0, 1), (2, 3)]);
        let d = symmetric_difference(&a, &a).unwrap();
        assert!(d.is_empty());
        assert_eq!(d.r(), 0);

        let b = g(4, &[(1, 2), (0, 3)]);
        let d = symmetric_difference(&a, &b).unwrap();
        assert_eq!(
            d.red().iter().copied().collect::<Vec<_>>(),
            vec![(0, 1), (2, 3)]
        );
        assert_eq!(
            d.blue().iter().copied().collect::<Vec<_>>(),
            vec![(0, 3), (1, 2)]
        );
        assert_eq!(d.r(), 2);

        assert!(matches!(
            symmetric_difference(&a, &LabeledGraph::empty(5)),
            Err(Error::VertexSetMismatch { left: 4, right: 5 })
        ));
    }

    #[test]
    fn decompose_single_four_circuit() {
        let a = g(4, &[(0, 1), (2, 3)]);
        let b = g(4, &[(1, 2), (0, 3)]);
        let d = symmetric_difference(&a, &b).unwrap();
        let cs = decompose_into_alternating_circuits(&d).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].vertices(), &[0, 1, 2, 3]);
        assert!(d.is_valid_decomposition(&cs));
    }

    #[test]
    fn decompose_empty() {
        let d = symmetric_difference(&LabeledGraph::empty(3), &LabeledGraph::empty(3)).unwrap();
        assert!(decompose_into_alternating_circuits(&d).unwrap().is_empty());
    }

    #[test]
    fn decompose_rejects_unbalanced() {
        let d = symmetric_difference(&g(3, &[(0, 1)]), &g(3, &[(1, 2)])).unwrap();
        assert!(matches!(
            decompose_into_alternating_circuits(&d),
            Err(Error::Unbalanced {
                vertex: 0,
                red: 1,
                blue: 0
            })
        ));
    }

    #[test]
    fn circuit_validation() {
        assert!(AlternatingCircuit::new(vec![0, 1, 2]).is_err());
        assert!(AlternatingCircuit::new(vec![0, 0, 1, 2]).is_err());
        // pair 0-1 used twice
        assert!(AlternatingCircuit::new(vec![0, 1, 0, 1]).is_err());
        assert!(AlternatingCircuit::new(vec![0, 1, 2, 3]).is_ok());
    }

    #[test]
    fn bowtie_vertex_appears_twice() {
        // Two alternating 4-circuits sharing vertex 0 at odd distance.
        let a = g(7, &[(0, 1), (2, 3), (0, 4), (5, 6)]);
        let b = g(7, &[(1, 2), (0, 3), (4, 5), (0, 6)]);
        let d = symmetric_difference(&a, &b).unwrap();
        let cs = decompose_into_alternating_circuits(&d).unwrap();
        assert!(d.is_valid_decomposition(&cs));
        for c in &cs {
            assert!(c.vertices().iter().filter(|&&v| v == 0).count() <= 2);
        }
    }
}
