//! Maximum-weight perfect matching on general graphs.
//!
//! The solver is Edmonds' primal-dual blossom method in the O(n^3) form
//! described by Galil ("Efficient Algorithms for Finding Maximum Matching in
//! Graphs", 1986), following the structure of Joris van Rantwijk's reference
//! implementation. Vertex duals are stored doubled so integer weights keep
//! every quantity integral.

use crate::error::{Error, Result};
use crate::graph::VertexId;

pub type Weight = i64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId, Weight)>,
}

impl WeightedGraph {
    pub fn new(n: usize) -> Self {
        WeightedGraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Builds a simple weighted graph; rejects loops, parallel edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Weight)>,
    {
        let mut g = WeightedGraph::new(n);
        let mut seen = std::collections::HashSet::new();
        for (u, v, w) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.edges.push((u, v, w));
        }
        Ok(g)
    }

    /// Appends an edge without the duplicate check; returns its index.
    pub(crate) fn push_edge(&mut self, u: VertexId, v: VertexId, w: Weight) -> usize {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.edges.push((u, v, w));
        self.edges.len() - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(VertexId, VertexId, Weight)] {
        &self.edges
    }

    /// Weight of the edge `uv`, if present.
    pub fn weight(&self, u: VertexId, v: VertexId) -> Option<Weight> {
        self.edges
            .iter()
            .find(|&&(a, b, _)| (a, b) == (u, v) || (a, b) == (v, u))
            .map(|e| e.2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub mate: Vec<Option<VertexId>>,
    pub total_weight: Weight,
}

impl Matching {
    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }

    /// Matched pairs `(u, v)` with `u < v`, in increasing order.
    pub fn pairs(&self) -> Vec<(VertexId, VertexId)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    /// True when `self` is a perfect matching using only edges of `g` and
    /// its recorded weight is the sum of those edges.
    pub fn is_valid_perfect_for(&self, g: &WeightedGraph) -> bool {
        if self.mate.len() != g.n() || !self.is_perfect() {
            return false;
        }
        for (u, m) in self.mate.iter().enumerate() {
            let v = m.unwrap();
            if v == u || self.mate[v] != Some(u) {
                return false;
            }
        }
        let mut total = 0;
        for (u, v) in self.pairs() {
            match g.weight(u, v) {
                Some(w) => total += w,
                None => return false,
            }
        }
        total == self.total_weight
    }
}

/// A maximum-weight perfect matching of `h`, or `None` when `h` has no
/// perfect matching. Weights may be negative.
pub fn max_weight_perfect_matching(h: &WeightedGraph) -> Option<Matching> {
    let n = h.n();
    if n % 2 == 1 {
        return None;
    }
    if n == 0 {
        return Some(Matching {
            mate: Vec::new(),
            total_weight: 0,
        });
    }
    if h.edges.is_empty() {
        return None;
    }
    // Every perfect matching has n/2 edges, so a uniform shift keeps the
    // optimum and makes all weights positive.
    let min_w = h.edges.iter().map(|e| e.2).min().unwrap();
    let shift = 1 - min_w.min(0);
    let shifted: Vec<(usize, usize, Weight)> =
        h.edges.iter().map(|&(u, v, w)| (u, v, w + shift)).collect();
    let mate = Blossom::new(n, shifted).solve();
    if mate.iter().any(Option::is_none) {
        return None;
    }
    let mut total = 0;
    for (u, m) in mate.iter().enumerate() {
        let v = m.unwrap();
        if u < v {
            total += h.weight(u, v).expect("matched pair is an edge");
        }
    }
    Some(Matching {
        mate,
        total_weight: total,
    })
}

/// Default vertex limit for [`brute_force_max_matching`].
pub const BRUTE_FORCE_LIMIT: usize = 12;

/// Exhaustive maximum-weight perfect matching for small graphs (test oracle).
pub fn brute_force_max_matching(h: &WeightedGraph) -> Result<Option<Matching>> {
    brute_force_max_matching_with_limit(h, BRUTE_FORCE_LIMIT)
}

pub fn brute_force_max_matching_with_limit(
    h: &WeightedGraph,
    limit: usize,
) -> Result<Option<Matching>> {
    let n = h.n();
    if n > limit {
        return Err(Error::OracleLimit(format!(
            "{n} vertices exceeds the brute-force limit of {limit}"
        )));
    }
    if n % 2 == 1 {
        return Ok(None);
    }
    let mut weight = vec![vec![None; n]; n];
    for &(u, v, w) in &h.edges {
        weight[u][v] = Some(w);
        weight[v][u] = Some(w);
    }
    let mut mate = vec![None; n];
    let mut best: Option<(Weight, Vec<Option<usize>>)> = None;
    fn rec(
        weight: &[Vec<Option<Weight>>],
        mate: &mut Vec<Option<usize>>,
        acc: Weight,
        best: &mut Option<(Weight, Vec<Option<usize>>)>,
    ) {
        let Some(u) = mate.iter().position(Option::is_none) else {
            if best.as_ref().is_none_or(|(w, _)| acc > *w) {
                *best = Some((acc, mate.clone()));
            }
            return;
        };
        for v in (u + 1)..mate.len() {
            if mate[v].is_some() {
                continue;
            }
            if let Some(w) = weight[u][v] {
                mate[u] = Some(v);
                mate[v] = Some(u);
                rec(weight, mate, acc + w, best);
                mate[u] = None;
                mate[v] = None;
            }
        }
    }
    rec(&weight, &mut mate, 0, &mut best);
    Ok(best.map(|(total_weight, mate)| Matching { mate, total_weight }))
}

const NONE: usize = usize::MAX;

/// Working state of the blossom algorithm.
///
/// Vertices are `0..n`; non-trivial blossoms are numbered `n..2n`. Edge `k`
/// has endpoints `2k` and `2k + 1`.
struct Blossom {
    n: usize,
    edges: Vec<(usize, usize, Weight)>,
    endpoint: Vec<usize>,
    neighbend: Vec<Vec<usize>>,
    /// Remote endpoint of the matched edge, or NONE.
    mate: Vec<usize>,
    /// 0 free, 1 S, 2 T (top-level blossoms); 5 marks a breadcrumb.
    label: Vec<u8>,
    labelend: Vec<usize>,
    inblossom: Vec<usize>,
    blossomparent: Vec<usize>,
    blossomchilds: Vec<Vec<usize>>,
    blossombase: Vec<usize>,
    blossomendps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    blossombestedges: Vec<Option<Vec<usize>>>,
    unusedblossoms: Vec<usize>,
    dualvar: Vec<Weight>,
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

/// Index into a cyclic list with Python-style negative wraparound.
#[inline]
fn at(list: &[usize], j: isize) -> usize {
    if j < 0 {
        list[(list.len() as isize + j) as usize]
    } else {
        list[j as usize]
    }
}

impl Blossom {
    fn new(n: usize, edges: Vec<(usize, usize, Weight)>) -> Self {
        let nedge = edges.len();
        let maxweight = edges.iter().map(|e| e.2).max().unwrap_or(0).max(0);
        let endpoint = (0..2 * nedge)
            .map(|p| {
                if p % 2 == 0 {
                    edges[p / 2].0
                } else {
                    edges[p / 2].1
                }
            })
            .collect();
        let mut neighbend = vec![Vec::new(); n];
        for (k, &(i, j, _)) in edges.iter().enumerate() {
            neighbend[i].push(2 * k + 1);
            neighbend[j].push(2 * k);
        }
        let mut blossombase: Vec<usize> = (0..n).collect();
        blossombase.extend(std::iter::repeat_n(NONE, n));
        let mut dualvar = vec![maxweight; n];
        dualvar.extend(std::iter::repeat_n(0, n));
        Blossom {
            n,
            edges,
            endpoint,
            neighbend,
            mate: vec![NONE; n],
            label: vec![0; 2 * n],
            labelend: vec![NONE; 2 * n],
            inblossom: (0..n).collect(),
            blossomparent: vec![NONE; 2 * n],
            blossomchilds: vec![Vec::new(); 2 * n],
            blossombase,
            blossomendps: vec![Vec::new(); 2 * n],
            bestedge: vec![NONE; 2 * n],
            blossombestedges: vec![None; 2 * n],
            unusedblossoms: (n..2 * n).collect(),
            dualvar,
            allowedge: vec![false; nedge],
            queue: Vec::new(),
        }
    }

    /// Twice the slack of edge `k`.
    fn slack(&self, k: usize) -> Weight {
        let (i, j, w) = self.edges[k];
        self.dualvar[i] + self.dualvar[j] - 2 * w
    }

    fn leaves(&self, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![b];
        while let Some(t) = stack.pop() {
            if t < self.n {
                out.push(t);
            } else {
                stack.extend(self.blossomchilds[t].iter().rev());
            }
        }
        out
    }

    fn assign_label(&mut self, w: usize, t: u8, p: usize) {
        let b = self.inblossom[w];
        debug_assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = NONE;
        self.bestedge[b] = NONE;
        if t == 1 {
            let leaves = self.leaves(b);
            self.queue.extend(leaves);
        } else {
            // T-blossom: its base is matched; label the mate S.
            let base = self.blossombase[b];
            let m = self.mate[base];
            debug_assert!(m != NONE);
            self.assign_label(self.endpoint[m], 1, m ^ 1);
        }
    }

    /// Traces back from `v` and `w`; returns the base of a new blossom or
    /// NONE when an augmenting path was found.
    fn scan_blossom(&mut self, mut v: usize, mut w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = NONE;
        while v != NONE || w != NONE {
            let mut b = self.inblossom[v];
            if self.label[b] & 4 != 0 {
                base = self.blossombase[b];
                break;
            }
            debug_assert_eq!(self.label[b], 1);
            path.push(b);
            self.label[b] = 5;
            if self.labelend[b] == NONE {
                v = NONE;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                debug_assert_eq!(self.label[b], 2);
                v = self.endpoint[self.labelend[b]];
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        base
    }

    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w, _) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];
        let b = self.unusedblossoms.pop().expect("blossom ids available");
        self.blossombase[b] = base;
        self.blossomparent[b] = NONE;
        self.blossomparent[bb] = b;
        let mut path = Vec::new();
        let mut endps = Vec::new();
        while bv != bb {
            self.blossomparent[bv] = b;
            path.push(bv);
            endps.push(self.labelend[bv]);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        path.push(bb);
        path.reverse();
        endps.reverse();
        endps.push(2 * k);
        while bw != bb {
            self.blossomparent[bw] = b;
            path.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }
        debug_assert_eq!(self.label[bb], 1);
        self.label[b] = 1;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0;
        self.blossomchilds[b] = path.clone();
        self.blossomendps[b] = endps;
        for leaf in self.leaves(b) {
            if self.label[self.inblossom[leaf]] == 2 {
                // T-vertex becomes S inside the new S-blossom.
                self.queue.push(leaf);
            }
            self.inblossom[leaf] = b;
        }
        let mut bestedgeto = vec![NONE; 2 * self.n];
        for &sub in &path {
            let nblists: Vec<Vec<usize>> = match self.blossombestedges[sub].take() {
                Some(list) => vec![list],
                None => self
                    .leaves(sub)
                    .into_iter()
                    .map(|leaf| self.neighbend[leaf].iter().map(|p| p / 2).collect())
                    .collect(),
            };
            for nblist in nblists {
                for k in nblist {
                    let (mut i, mut j, _) = self.edges[k];
                    if self.inblossom[j] == b {
                        std::mem::swap(&mut i, &mut j);
                    }
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == 1
                        && (bestedgeto[bj] == NONE || self.slack(k) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k;
                    }
                }
            }
            self.bestedge[sub] = NONE;
        }
        let list: Vec<usize> = bestedgeto.into_iter().filter(|&k| k != NONE).collect();
        let mut best = NONE;
        for &k in &list {
            if best == NONE || self.slack(k) < self.slack(best) {
                best = k;
            }
        }
        self.bestedge[b] = best;
        self.blossombestedges[b] = Some(list);
    }

    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        for s in self.blossomchilds[b].clone() {
            self.blossomparent[s] = NONE;
            if s < self.n {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == 0 {
                self.expand_blossom(s, endstage);
            } else {
                for leaf in self.leaves(s) {
                    self.inblossom[leaf] = s;
                }
            }
        }
        if !endstage && self.label[b] == 2 {
            // Relabel the sub-blossoms of an expanding T-blossom, starting at
            // the child through which it was reached.
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let childs = self.blossomchilds[b].clone();
            let endps = self.blossomendps[b].clone();
            let mut j = childs.iter().position(|&c| c == entrychild).unwrap() as isize;
            let (jstep, endptrick): (isize, usize) = if j & 1 == 1 {
                j -= childs.len() as isize;
                (1, 0)
            } else {
                (-1, 1)
            };
            let mut p = self.labelend[b];
            while j != 0 {
                self.label[self.endpoint[p ^ 1]] = 0;
                let q = at(&endps, j - endptrick as isize) ^ endptrick ^ 1;
                self.label[self.endpoint[q]] = 0;
                self.assign_label(self.endpoint[p ^ 1], 2, p);
                self.allowedge[at(&endps, j - endptrick as isize) / 2] = true;
                j += jstep;
                p = at(&endps, j - endptrick as isize) ^ endptrick;
                self.allowedge[p / 2] = true;
                j += jstep;
            }
            let bv = at(&childs, j);
            self.label[self.endpoint[p ^ 1]] = 2;
            self.label[bv] = 2;
            self.labelend[self.endpoint[p ^ 1]] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = NONE;
            j += jstep;
            while at(&childs, j) != entrychild {
                let bv = at(&childs, j);
                if self.label[bv] == 1 {
                    // Already labeled S through one of its neighbors.
                    j += jstep;
                    continue;
                }
                let leaves = self.leaves(bv);
                let v = leaves
                    .iter()
                    .copied()
                    .find(|&v| self.label[v] != 0)
                    .unwrap_or(*leaves.last().unwrap());
                if self.label[v] != 0 {
                    debug_assert_eq!(self.label[v], 2);
                    debug_assert_eq!(self.inblossom[v], bv);
                    self.label[v] = 0;
                    let m = self.mate[self.blossombase[bv]];
                    self.label[self.endpoint[m]] = 0;
                    self.assign_label(v, 2, self.labelend[v]);
                }
                j += jstep;
            }
        }
        self.label[b] = 0;
        self.labelend[b] = NONE;
        self.blossomchilds[b].clear();
        self.blossomendps[b].clear();
        self.blossombase[b] = NONE;
        self.blossombestedges[b] = None;
        self.bestedge[b] = NONE;
        self.unusedblossoms.push(b);
    }

    /// Swaps matched and unmatched edges along the even path inside
    /// blossom `b` from vertex `v` to the base.
    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.n {
            self.augment_blossom(t, v);
        }
        let i = self.blossomchilds[b].iter().position(|&c| c == t).unwrap();
        let mut j = i as isize;
        let (jstep, endptrick): (isize, usize) = if i & 1 == 1 {
            j -= self.blossomchilds[b].len() as isize;
            (1, 0)
        } else {
            (-1, 1)
        };
        while j != 0 {
            j += jstep;
            let t = at(&self.blossomchilds[b], j);
            let p = at(&self.blossomendps[b], j - endptrick as isize) ^ endptrick;
            if t >= self.n {
                self.augment_blossom(t, self.endpoint[p]);
            }
            j += jstep;
            let t = at(&self.blossomchilds[b], j);
            if t >= self.n {
                self.augment_blossom(t, self.endpoint[p ^ 1]);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        self.blossomchilds[b].rotate_left(i);
        self.blossomendps[b].rotate_left(i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        debug_assert_eq!(self.blossombase[b], v);
    }

    fn augment_matching(&mut self, k: usize) {
        let (v, w, _) = self.edges[k];
        for (mut s, mut p) in [(v, 2 * k + 1), (w, 2 * k)] {
            loop {
                let bs = self.inblossom[s];
                debug_assert_eq!(self.label[bs], 1);
                if bs >= self.n {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                debug_assert_eq!(self.label[bt], 2);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                if bt >= self.n {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    /// Runs the stages; returns `mate[v]` as a vertex. Maximum cardinality
    /// takes precedence over weight.
    fn solve(mut self) -> Vec<Option<usize>> {
        let n = self.n;
        for _ in 0..n {
            self.label.iter_mut().for_each(|l| *l = 0);
            self.bestedge.iter_mut().for_each(|e| *e = NONE);
            for b in n..2 * n {
                self.blossombestedges[b] = None;
            }
            self.allowedge.iter_mut().for_each(|a| *a = false);
            self.queue.clear();
            for v in 0..n {
                if self.mate[v] == NONE && self.label[self.inblossom[v]] == 0 {
                    self.assign_label(v, 1, NONE);
                }
            }

            let mut augmented = false;
            loop {
                while let Some(v) = self.queue.pop() {
                    debug_assert_eq!(self.label[self.inblossom[v]], 1);
                    for idx in 0..self.neighbend[v].len() {
                        let p = self.neighbend[v][idx];
                        let k = p / 2;
                        let w = self.endpoint[p];
                        if self.inblossom[v] == self.inblossom[w] {
                            continue;
                        }
                        let mut kslack = 0;
                        if !self.allowedge[k] {
                            kslack = self.slack(k);
                            if kslack <= 0 {
                                self.allowedge[k] = true;
                            }
                        }
                        if self.allowedge[k] {
                            if self.label[self.inblossom[w]] == 0 {
                                self.assign_label(w, 2, p ^ 1);
                            } else if self.label[self.inblossom[w]] == 1 {
                                let base = self.scan_blossom(v, w);
                                if base != NONE {
                                    self.add_blossom(base, k);
                                } else {
                                    self.augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if self.label[w] == 0 {
                                debug_assert_eq!(self.label[self.inblossom[w]], 2);
                                self.label[w] = 2;
                                self.labelend[w] = p ^ 1;
                            }
                        } else if self.label[self.inblossom[w]] == 1 {
                            let b = self.inblossom[v];
                            if self.bestedge[b] == NONE || kslack < self.slack(self.bestedge[b]) {
                                self.bestedge[b] = k;
                            }
                        } else if self.label[w] == 0
                            && (self.bestedge[w] == NONE || kslack < self.slack(self.bestedge[w]))
                        {
                            self.bestedge[w] = k;
                        }
                    }
                    if augmented {
                        break;
                    }
                }
                if augmented {
                    break;
                }

                // No augmenting path with tight edges: adjust duals.
                let mut deltatype = 0u8;
                let mut delta: Weight = 0;
                let mut deltaedge = NONE;
                let mut deltablossom = NONE;
                for v in 0..n {
                    if self.label[self.inblossom[v]] == 0 && self.bestedge[v] != NONE {
                        let d = self.slack(self.bestedge[v]);
                        if deltatype == 0 || d < delta {
                            delta = d;
                            deltatype = 2;
                            deltaedge = self.bestedge[v];
                        }
                    }
                }
                for b in 0..2 * n {
                    if self.blossomparent[b] == NONE
                        && self.label[b] == 1
                        && self.bestedge[b] != NONE
                    {
                        let kslack = self.slack(self.bestedge[b]);
                        debug_assert_eq!(kslack % 2, 0);
                        let d = kslack / 2;
                        if deltatype == 0 || d < delta {
                            delta = d;
                            deltatype = 3;
                            deltaedge = self.bestedge[b];
                        }
                    }
                }
                for b in n..2 * n {
                    if self.blossombase[b] != NONE
                        && self.blossomparent[b] == NONE
                        && self.label[b] == 2
                        && (deltatype == 0 || self.dualvar[b] < delta)
                    {
                        delta = self.dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if deltatype == 0 {
                    // Maximum cardinality reached.
                    deltatype = 1;
                    delta = self.dualvar[..n].iter().copied().min().unwrap().max(0);
                }

                for v in 0..n {
                    match self.label[self.inblossom[v]] {
                        1 => self.dualvar[v] -= delta,
                        2 => self.dualvar[v] += delta,
                        _ => {}
                    }
                }
                for b in n..2 * n {
                    if self.blossombase[b] != NONE && self.blossomparent[b] == NONE {
                        match self.label[b] {
                            1 => self.dualvar[b] += delta,
                            2 => self.dualvar[b] -= delta,
                            _ => {}
                        }
                    }
                }

                match deltatype {
                    1 => break,
                    2 => {
                        self.allowedge[deltaedge] = true;
                        let (mut i, mut j, _) = self.edges[deltaedge];
                        if self.label[self.inblossom[i]] == 0 {
                            std::mem::swap(&mut i, &mut j);
                        }
                        debug_assert_eq!(self.label[self.inblossom[i]], 1);
                        let _ = j;
                        self.queue.push(i);
                    }
                    3 => {
                        self.allowedge[deltaedge] = true;
                        let (i, _, _) = self.edges[deltaedge];
                        debug_assert_eq!(self.label[self.inblossom[i]], 1);
                        self.queue.push(i);
                    }
                    _ => self.expand_blossom(deltablossom, false),
                }
            }
            if !augmented {
                break;
            }
            for b in n..2 * n {
                if self.blossomparent[b] == NONE
                    && self.blossombase[b] != NONE
                    && self.label[b] == 1
                    && self.dualvar[b] == 0
                {
                    self.expand_blossom(b, true);
                }
            }
        }
        self.mate
            .iter()
            .map(|&p| {
                if p == NONE {
                    None
                } else {
                    Some(self.endpoint[p])
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wg(n: usize, edges: &[(usize, usize, Weight)]) -> WeightedGraph {
        WeightedGraph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn single_edge() {
        let g = wg(2, &[(0, 1, 5)]);
        let m = max_weight_perfect_matching(&g).unwrap();
        assert_eq!(m.pairs(), vec![(0, 1)]);
        assert_eq!(m.total_weight, 5);
        assert_eq!(brute_force_max_matching(&g).unwrap().unwrap(), m);
    }

    #[test]
    fn four_cycle_unit_weights() {
        let g = wg(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]);
        let m = max_weight_perfect_matching(&g).unwrap();
        assert_eq!(m.total_weight, 2);
        assert!(m.is_valid_perfect_for(&g));
        assert_eq!(
            brute_force_max_matching(&g).unwrap().unwrap().total_weight,
            2
        );
    }

    #[test]
    fn k4_heavy_pair() {
        let g = wg(
            4,
            &[
                (0, 1, 3),
                (2, 3, 3),
                (0, 2, 1),
                (0, 3, 1),
                (1, 2, 1),
                (1, 3, 1),
            ],
        );
        let m = max_weight_perfect_matching(&g).unwrap();
        assert_eq!(m.pairs(), vec![(0, 1), (2, 3)]);
        assert_eq!(m.total_weight, 6);
        let b = brute_force_max_matching(&g).unwrap().unwrap();
        assert_eq!(b.pairs(), vec![(0, 1), (2, 3)]);
        assert_eq!(b.total_weight, 6);
    }

    #[test]
    fn infeasible_cases() {
        assert!(max_weight_perfect_matching(&wg(3, &[(0, 1, 1), (1, 2, 1)])).is_none());
        assert!(brute_force_max_matching(&wg(3, &[(0, 1, 1)]))
            .unwrap()
            .is_none());
        assert!(max_weight_perfect_matching(&wg(2, &[])).is_none());
        assert!(brute_force_max_matching(&wg(2, &[])).unwrap().is_none());
        // a path on 4 vertices has a perfect matching, a star does not
        assert!(max_weight_perfect_matching(&wg(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1)])).is_none());
    }

    #[test]
    fn prefers_perfect_over_heavier_partial() {
        // The heavy middle edge would leave both ends unmatched.
        let g = wg(4, &[(0, 1, 1), (1, 2, 100), (2, 3, 1)]);
        let m = max_weight_perfect_matching(&g).unwrap();
        assert_eq!(m.pairs(), vec![(0, 1), (2, 3)]);
        assert_eq!(m.total_weight, 2);
    }

    #[test]
    fn negative_weights() {
        let g = wg(4, &[(0, 1, -5), (2, 3, -5), (0, 2, -1), (1, 3, -1)]);
        let m = max_weight_perfect_matching(&g).unwrap();
        assert_eq!(m.total_weight, -2);
    }

    #[test]
    fn odd_cycle_blossom() {
        // A triangle with pendant vertices forces blossom handling.
        let g = wg(
            6,
            &[
                (0, 1, 4),
                (1, 2, 4),
                (0, 2, 4),
                (0, 3, 1),
                (1, 4, 1),
                (2, 5, 1),
            ],
        );
        let m = max_weight_perfect_matching(&g).unwrap();
        assert_eq!(m.total_weight, 3);
        assert!(m.is_valid_perfect_for(&g));
    }

    #[test]
    fn brute_force_limit() {
        let g = WeightedGraph::new(14);
        assert!(matches!(
            brute_force_max_matching(&g),
            Err(Error::OracleLimit(_))
        ));
    }
}
