//! Exhaustive enumeration of realizations and the move graph between them.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    decompose_into_alternating_circuits, symmetric_difference, DegreeSequence, Edge, LabeledGraph,
};
use crate::skeleton::{Bone, Partition, SkeletonGraph};
use crate::swaps::{
    is_restricted, is_valid_f_swap, CircuitExchange, DoubleSwap, Move, MoveKind, Swap,
};

/// Environment variable overriding [`OracleLimit::max_chords`].
pub const ORACLE_LIMIT_ENV: &str = "SKELREAL_ORACLE_LIMIT";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimit {
    /// Chords left open after dropping those that cannot carry an edge.
    pub max_chords: usize,
    /// Largest realization set the enumerator will return.
    pub max_realizations: usize,
    /// Budget for double-swap candidate pairs across the whole move graph.
    pub max_double_pairs: u64,
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit {
            max_chords: 28,
            max_realizations: 100_000,
            max_double_pairs: 50_000_000,
        }
    }
}

impl OracleLimit {
    /// Defaults, with `max_chords` taken from the environment when set.
    pub fn from_env() -> Self {
        let mut limit = OracleLimit::default();
        if let Some(v) = std::env::var(ORACLE_LIMIT_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
        {
            limit.max_chords = v;
        }
        limit
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EnumerationMode {
    /// Bone counts must equal every specified bone weight.
    Consistent,
    /// Every edge must be a chord; weights are ignored.
    Weak,
}

/// Duplicate-free realizations in sorted edge-set order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizationSet {
    graphs: Vec<LabeledGraph>,
    mode: EnumerationMode,
}

impl RealizationSet {
    pub fn from_graphs(mut graphs: Vec<LabeledGraph>, mode: EnumerationMode) -> Self {
        graphs.sort();
        graphs.dedup();
        RealizationSet { graphs, mode }
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graphs(&self) -> &[LabeledGraph] {
        &self.graphs
    }

    pub fn get(&self, i: usize) -> Option<&LabeledGraph> {
        self.graphs.get(i)
    }

    pub fn index_of(&self, g: &LabeledGraph) -> Option<usize> {
        self.graphs.binary_search(g).ok()
    }

    pub fn mode(&self) -> EnumerationMode {
        self.mode
    }
}

/// All realizations of `d` whose edges are chords of `s`, and, in
/// consistent mode, whose bone counts match the specified weights.
///
/// Chords are decided in `(bone, pair)` order. A branch is cut as soon as a
/// vertex needs more edges than it has undecided chords, or a weighted bone
/// needs more edges than it has undecided chords.
pub fn enumerate_realizations(
    d: &DegreeSequence,
    s: &SkeletonGraph,
    mode: EnumerationMode,
    limit: &OracleLimit,
) -> Result<RealizationSet> {
    let n = s.n();
    if d.len() != n {
        return Err(Error::VertexSetMismatch {
            left: d.len(),
            right: n,
        });
    }
    let need_bone: Vec<Option<u64>> = match mode {
        EnumerationMode::Consistent => s.weights(),
        EnumerationMode::Weak => vec![None; s.bones().len()],
    };
    let chords: Vec<(Edge, usize)> = s
        .chords()
        .into_iter()
        .map(|(u, v)| ((u, v), s.bone_of_pair(u, v).unwrap()))
        .filter(|&((u, v), b)| d[u] > 0 && d[v] > 0 && need_bone[b] != Some(0))
        .collect();
    if chords.len() > limit.max_chords {
        return Err(Error::OracleLimit(format!(
            "{} open chords exceeds the limit of {}",
            chords.len(),
            limit.max_chords
        )));
    }

    let mut open_at = vec![0usize; n];
    let mut open_on = vec![0u64; s.bones().len()];
    for &((u, v), b) in &chords {
        open_at[u] += 1;
        open_at[v] += 1;
        open_on[b] += 1;
    }
    if (0..n).any(|v| d[v] > open_at[v])
        || need_bone
            .iter()
            .zip(&open_on)
            .any(|(w, &c)| w.is_some_and(|w| w > c))
    {
        return Ok(RealizationSet::from_graphs(Vec::new(), mode));
    }

    struct State<'a> {
        chords: &'a [(Edge, usize)],
        res: Vec<usize>,
        need: Vec<Option<u64>>,
        open_at: Vec<usize>,
        open_on: Vec<u64>,
        chosen: Vec<Edge>,
        out: Vec<LabeledGraph>,
        n: usize,
        cap: usize,
    }

    impl State<'_> {
        fn feasible(&self, u: usize, v: usize, b: usize) -> bool {
            self.res[u] <= self.open_at[u]
                && self.res[v] <= self.open_at[v]
                && self.need[b].is_none_or(|w| w <= self.open_on[b])
        }

        fn rec(&mut self, i: usize) -> Result<()> {
            if i == self.chords.len() {
                if self.res.iter().all(|&r| r == 0)
                    && self.need.iter().all(|w| w.is_none_or(|w| w == 0))
                {
                    if self.out.len() >= self.cap {
                        return Err(Error::OracleLimit(format!(
                            "more than {} realizations",
                            self.cap
                        )));
                    }
                    self.out.push(
                        LabeledGraph::from_edges(self.n, self.chosen.iter().copied()).unwrap(),
                    );
                }
                return Ok(());
            }
            let ((u, v), b) = self.chords[i];
            self.open_at[u] -= 1;
            self.open_at[v] -= 1;
            self.open_on[b] -= 1;
            if self.res[u] > 0 && self.res[v] > 0 && self.need[b].is_none_or(|w| w > 0) {
                self.res[u] -= 1;
                self.res[v] -= 1;
                if let Some(w) = self.need[b].as_mut() {
                    *w -= 1;
                }
                self.chosen.push((u, v));
                if self.feasible(u, v, b) {
                    self.rec(i + 1)?;
                }
                self.chosen.pop();
                self.res[u] += 1;
                self.res[v] += 1;
                if let Some(w) = self.need[b].as_mut() {
                    *w += 1;
                }
            }
            if self.feasible(u, v, b) {
                self.rec(i + 1)?;
            }
            self.open_at[u] += 1;
            self.open_at[v] += 1;
            self.open_on[b] += 1;
            Ok(())
        }
    }

    let mut st = State {
        chords: &chords,
        res: d.0.clone(),
        need: need_bone,
        open_at,
        open_on,
        chosen: Vec::new(),
        out: Vec::new(),
        n,
        cap: limit.max_realizations,
    };
    st.rec(0)?;
    Ok(RealizationSet::from_graphs(st.out, mode))
}

/// Realizations as nodes, single legal moves as edges. Each unordered pair
/// keeps the first move found, preferring swaps over double swaps over
/// circuit exchanges; the stored move maps the lower index to the higher.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveGraph {
    nodes: usize,
    edges: BTreeMap<(usize, usize), Move>,
}

impl MoveGraph {
    pub fn empty(nodes: usize) -> Self {
        MoveGraph {
            nodes,
            edges: BTreeMap::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Unordered edges `(i, j, move)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &Move)> {
        self.edges.iter().map(|(&(i, j), m)| (i, j, m))
    }

    /// The move taking node `from` to node `to`, if adjacent.
    pub fn move_between(&self, from: usize, to: usize) -> Option<Move> {
        if from < to {
            self.edges.get(&(from, to)).cloned()
        } else {
            self.edges.get(&(to, from)).map(Move::inverse)
        }
    }

    fn insert(&mut self, from: usize, to: usize, m: Move) {
        if from == to {
            return;
        }
        let (key, m) = if from < to {
            ((from, to), m)
        } else {
            ((to, from), m.inverse())
        };
        self.edges.entry(key).or_insert(m);
    }

    fn neighbors(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes];
        for &(i, j) in self.edges.keys() {
            adj[i].push(j);
            adj[j].push(i);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }
}

/// Restricted swaps applicable to `g`, in lexicographic order.
fn restricted_swaps(g: &LabeledGraph, s: &SkeletonGraph) -> Vec<Swap> {
    let edges: Vec<Edge> = g.edges().collect();
    let mut out = Vec::new();
    for &(x, y) in &edges {
        for (a, b) in [(x, y), (y, x)] {
            for &(z, t) in &edges {
                for (c, d) in [(z, t), (t, z)] {
                    if let Ok(sw) = Swap::new(a, b, c, d) {
                        if sw.is_applicable(g) && is_restricted(&sw, s) {
                            out.push(sw.canonical());
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn build_move_graph(
    r: &RealizationSet,
    s: &SkeletonGraph,
    kinds: &BTreeSet<MoveKind>,
    limit: &OracleLimit,
) -> Result<MoveGraph> {
    let index: HashMap<&LabeledGraph, usize> =
        r.graphs().iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut m = MoveGraph::empty(r.len());
    let want_swaps = kinds.contains(&MoveKind::Swap) || kinds.contains(&MoveKind::DoubleSwap);
    let mut budget = limit.max_double_pairs;

    for (i, g) in r.graphs().iter().enumerate() {
        let swaps = if want_swaps {
            restricted_swaps(g, s)
        } else {
            Vec::new()
        };
        if kinds.contains(&MoveKind::Swap) {
            for sw in &swaps {
                let h = crate::swaps::apply_swap(g, sw)?;
                if let Some(&j) = index.get(&h) {
                    if r.mode() == EnumerationMode::Consistent && s.fully_specified() {
                        debug_assert!(crate::swaps::preserves_classes(sw, s));
                    }
                    m.insert(i, j, Move::Swap(*sw));
                }
            }
        }
        if kinds.contains(&MoveKind::DoubleSwap) {
            let pairs = (swaps.len() * swaps.len().saturating_sub(1) / 2) as u64;
            if pairs > budget {
                return Err(Error::OracleLimit(format!(
                    "double-swap candidates exceed the budget of {}",
                    limit.max_double_pairs
                )));
            }
            budget -= pairs;
            for (x, s1) in swaps.iter().enumerate() {
                for s2 in &swaps[x + 1..] {
                    let Ok(ds) = DoubleSwap::new(*s1, *s2) else {
                        continue;
                    };
                    let h = crate::swaps::apply_double_swap(g, &ds)?;
                    if let Some(&j) = index.get(&h) {
                        m.insert(i, j, Move::DoubleSwap(ds));
                    }
                }
            }
        }
    }

    if kinds.contains(&MoveKind::CircuitExchange) {
        for i in 0..r.len() {
            for j in (i + 1)..r.len() {
                let (g, h) = (&r.graphs()[i], &r.graphs()[j]);
                let circuits = decompose_into_alternating_circuits(&symmetric_difference(g, h)?)?;
                if circuits.len() != 1 {
                    continue;
                }
                let x = CircuitExchange::new(circuits[0].clone());
                if is_valid_f_swap(g, &x, s) {
                    m.insert(i, j, Move::CircuitExchange(x));
                }
            }
        }
    }
    Ok(m)
}

/// Components as sorted node lists, ordered by smallest member.
pub fn connected_components(m: &MoveGraph) -> Vec<Vec<usize>> {
    let adj = m.neighbors();
    let mut seen = vec![false; m.nodes];
    let mut out = Vec::new();
    for start in 0..m.nodes {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// A shortest move sequence from node `from` to node `to`, or `None` when
/// they lie in different components.
pub fn find_move_path(m: &MoveGraph, from: usize, to: usize) -> Result<Option<Vec<Move>>> {
    for x in [from, to] {
        if x >= m.nodes {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: m.nodes,
            });
        }
    }
    let adj = m.neighbors();
    let mut prev = vec![usize::MAX; m.nodes];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &v in &adj[u] {
            if prev[v] == usize::MAX {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    if prev[to] == usize::MAX {
        return Ok(None);
    }
    let mut nodes = vec![to];
    while *nodes.last().unwrap() != from {
        nodes.push(prev[*nodes.last().unwrap()]);
    }
    nodes.reverse();
    Ok(Some(
        nodes
            .windows(2)
            .map(|w| m.move_between(w[0], w[1]).unwrap())
            .collect(),
    ))
}

/// Vertex labels of the two-class counterexample, by id.
pub const FIG2_LABELS: [&str; 8] = ["u0", "u1", "u2", "u3", "w4", "w5", "w6", "w7"];

/// The two-class counterexample: `d = (1,3,3,6)` on `U = {u0..u3}` and
/// `(1,3,3,6)` on `W = {w4..w7}`, with 7 crossing edges and 3 edges inside
/// each class.
pub fn fig2_instance() -> (DegreeSequence, SkeletonGraph) {
    let d = DegreeSequence::new(vec![1, 3, 3, 6, 1, 3, 3, 6]);
    let p = Partition::from_class_of(vec![0, 0, 0, 0, 1, 1, 1, 1]).unwrap();
    let s = SkeletonGraph::new(
        p,
        vec![
            Bone::new(0, 1, Some(7)),
            Bone::new(0, 0, Some(3)),
            Bone::new(1, 1, Some(3)),
        ],
    )
    .unwrap();
    (d, s)
}

/// The three consistent realizations `G1`, `G2`, `G3` of [`fig2_instance`].
pub fn fig2_realizations() -> [LabeledGraph; 3] {
    let common = [
        (3, 2),
        (3, 1),
        (3, 5),
        (3, 6),
        (3, 7),
        (7, 2),
        (7, 1),
        (7, 5),
        (7, 6),
    ];
    let build =
        |extra: &[Edge]| LabeledGraph::from_edges(8, common.iter().chain(extra).copied()).unwrap();
    [
        build(&[(3, 0), (7, 4), (1, 6), (2, 5)]),
        build(&[(3, 0), (7, 4), (1, 5), (2, 6)]),
        build(&[(3, 4), (7, 0), (1, 2), (6, 5)]),
    ]
}

/// The swap `u2w5, u1w6 => u1w5, u2w6` taking `G1` to `G2`.
pub fn fig2_swap() -> Swap {
    Swap {
        a: 2,
        b: 5,
        c: 1,
        d: 6,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CounterexampleCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct CounterexampleReport {
    pub realizations: RealizationSet,
    pub swap_graph: MoveGraph,
    pub double_graph: MoveGraph,
    pub swap_components: Vec<Vec<usize>>,
    pub double_components: Vec<Vec<usize>>,
    pub checks: Vec<CounterexampleCheck>,
    pub elapsed: Duration,
}

impl CounterexampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Enumerates the counterexample instance and checks that swaps alone split
/// its three realizations into two classes while double swaps join them.
pub fn verify_counterexample() -> Result<CounterexampleReport> {
    let start = Instant::now();
    let (d, s) = fig2_instance();
    let limit = OracleLimit::default();
    let r = enumerate_realizations(&d, &s, EnumerationMode::Consistent, &limit)?;
    let swaps_only = BTreeSet::from([MoveKind::Swap]);
    let with_double = BTreeSet::from([MoveKind::Swap, MoveKind::DoubleSwap]);
    let swap_graph = build_move_graph(&r, &s, &swaps_only, &limit)?;
    let double_graph = build_move_graph(&r, &s, &with_double, &limit)?;
    let swap_components = connected_components(&swap_graph);
    let double_components = connected_components(&double_graph);

    let [g1, g2, g3] = fig2_realizations();
    let idx = |g: &LabeledGraph| r.index_of(g);
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(CounterexampleCheck {
            name: name.to_string(),
            passed,
            detail,
        })
    };
    check(
        "3 realizations",
        r.len() == 3 && idx(&g1).is_some() && idx(&g2).is_some() && idx(&g3).is_some(),
        format!("found {}", r.len()),
    );
    let expected_split = match (idx(&g1), idx(&g2), idx(&g3)) {
        (Some(a), Some(b), Some(c)) => {
            let mut pair = vec![a, b];
            pair.sort_unstable();
            let mut want = vec![pair, vec![c]];
            want.sort();
            swap_components == want
        }
        _ => false,
    };
    check(
        "2 swap-only components",
        swap_components.len() == 2 && expected_split,
        format!("{swap_components:?}"),
    );
    check(
        "1 component with double swaps",
        double_components.len() == 1,
        format!("{double_components:?}"),
    );
    Ok(CounterexampleReport {
        realizations: r,
        swap_graph,
        double_graph,
        swap_components,
        double_components,
        checks,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeleton::check_consistency;

    #[test]
    fn single_edge_instance() {
        let p = Partition::from_class_of(vec![0, 1]).unwrap();
        let s = SkeletonGraph::new(p, vec![Bone::new(0, 1, Some(1))]).unwrap();
        let r = enumerate_realizations(
            &DegreeSequence::new(vec![1, 1]),
            &s,
            EnumerationMode::Consistent,
            &OracleLimit::default(),
        )
        .unwrap();
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn cross_matchings() {
        let p = Partition::from_class_of(vec![0, 0, 1, 1]).unwrap();
        let s = SkeletonGraph::new(
            p,
            vec![
                Bone::new(0, 1, Some(2)),
                Bone::new(0, 0, Some(0)),
                Bone::new(1, 1, Some(0)),
            ],
        )
        .unwrap();
        let r = enumerate_realizations(
            &DegreeSequence::new(vec![1; 4]),
            &s,
            EnumerationMode::Consistent,
            &OracleLimit::default(),
        )
        .unwrap();
        assert_eq!(r.len(), 2);
        let m = build_move_graph(
            &r,
            &s,
            &BTreeSet::from([MoveKind::Swap]),
            &OracleLimit::default(),
        )
        .unwrap();
        assert_eq!(connected_components(&m).len(), 1);
    }

    #[test]
    fn fig2_enumeration() {
        let (d, s) = fig2_instance();
        let r =
            enumerate_realizations(&d, &s, EnumerationMode::Consistent, &OracleLimit::default())
                .unwrap();
        let [g1, g2, g3] = fig2_realizations();
        for g in [&g1, &g2, &g3] {
            assert!(check_consistency(g, &s).unwrap().is_consistent());
        }
        assert_eq!(r.graphs(), &[g2, g1, g3]);
    }

    #[test]
    fn fig2_paths() {
        let (d, s) = fig2_instance();
        let limit = OracleLimit::default();
        let r = enumerate_realizations(&d, &s, EnumerationMode::Consistent, &limit).unwrap();
        let [g1, g2, g3] = fig2_realizations();
        let (i1, i2, i3) = (
            r.index_of(&g1).unwrap(),
            r.index_of(&g2).unwrap(),
            r.index_of(&g3).unwrap(),
        );
        let m = build_move_graph(&r, &s, &BTreeSet::from([MoveKind::Swap]), &limit).unwrap();
        assert_eq!(m.edge_count(), 1);
        let path = find_move_path(&m, i1, i2).unwrap().unwrap();
        match path.as_slice() {
            [Move::Swap(sw)] => assert_eq!(sw.canonical(), fig2_swap().canonical()),
            other => panic!("unexpected path {other:?}"),
        }
        assert_eq!(find_move_path(&m, i1, i1).unwrap().unwrap(), vec![]);
        assert!(find_move_path(&m, i1, i3).unwrap().is_none());
        let md = build_move_graph(
            &r,
            &s,
            &BTreeSet::from([MoveKind::Swap, MoveKind::DoubleSwap]),
            &limit,
        )
        .unwrap();
        let path = find_move_path(&md, i1, i3).unwrap().unwrap();
        let mut cur = g1.clone();
        for mv in &path {
            cur = mv.apply(&cur).unwrap();
        }
        assert_eq!(cur, g3);
    }

    #[test]
    fn empty_move_graph_components() {
        assert_eq!(
            connected_components(&MoveGraph::empty(3)),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn counterexample_checks_pass() {
        let report = verify_counterexample().unwrap();
        assert!(report.passed(), "{:?}", report.checks);
    }

    #[test]
    fn oracle_limit_is_enforced() {
        let p = Partition::from_class_of(vec![0; 10]).unwrap();
        let s = SkeletonGraph::all_chords(p);
        let limit = OracleLimit {
            max_chords: 10,
            ..OracleLimit::default()
        };
        let res = enumerate_realizations(
            &DegreeSequence::new(vec![2; 10]),
            &s,
            EnumerationMode::Weak,
            &limit,
        );
        assert!(matches!(res, Err(Error::OracleLimit(_))));
    }
}
