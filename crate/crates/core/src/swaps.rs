//! Swaps, double swaps, circuit exchanges and regular swap sequences.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    decompose_into_alternating_circuits, pair, symmetric_difference, AlternatingCircuit,
    LabeledGraph, VertexId,
};
use crate::skeleton::SkeletonGraph;

/// The swap `ab, cd => bc, ad`: removes `ab` and `cd`, adds `bc` and `ad`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Swap {
    pub a: VertexId,
    pub b: VertexId,
    pub c: VertexId,
    pub d: VertexId,
}

impl Swap {
    pub fn new(a: VertexId, b: VertexId, c: VertexId, d: VertexId) -> Result<Self> {
        let s = Swap { a, b, c, d };
        let v = s.vertices();
        for i in 0..4 {
            for j in (i + 1)..4 {
                if v[i] == v[j] {
                    return Err(Error::SwapNotApplicable(format!(
                        "{s} repeats vertex {}",
                        v[i]
                    )));
                }
            }
        }
        Ok(s)
    }

    pub fn vertices(&self) -> [VertexId; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// `bc, da => cd, ab`, which undoes `self`.
    pub fn inverse(&self) -> Swap {
        Swap {
            a: self.b,
            b: self.c,
            c: self.d,
            d: self.a,
        }
    }

    /// The lexicographically smallest of the four tuples describing the
    /// same operation: `(a,b,c,d)`, `(c,d,a,b)`, `(b,a,d,c)`, `(d,c,b,a)`.
    pub fn canonical(&self) -> Swap {
        let Swap { a, b, c, d } = *self;
        [
            Swap { a, b, c, d },
            Swap {
                a: c,
                b: d,
                c: a,
                d: b,
            },
            Swap {
                a: b,
                b: a,
                c: d,
                d: c,
            },
            Swap {
                a: d,
                b: c,
                c: b,
                d: a,
            },
        ]
        .into_iter()
        .min()
        .unwrap()
    }

    pub fn removed(&self) -> [(VertexId, VertexId); 2] {
        [pair(self.a, self.b), pair(self.c, self.d)]
    }

    pub fn added(&self) -> [(VertexId, VertexId); 2] {
        [pair(self.b, self.c), pair(self.a, self.d)]
    }

    pub fn is_applicable(&self, g: &LabeledGraph) -> bool {
        self.vertices().iter().all(|&v| v < g.n())
            && distinct(&self.vertices())
            && self.removed().iter().all(|&(u, v)| g.has_edge(u, v))
            && self.added().iter().all(|&(u, v)| !g.has_edge(u, v))
    }

    fn check(&self, g: &LabeledGraph) -> Result<()> {
        if !self.is_applicable(g) {
            return Err(Error::SwapNotApplicable(self.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for Swap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Swap { a, b, c, d } = self;
        write!(f, "{a}{b},{c}{d} => {b}{c},{a}{d}")
    }
}

fn distinct(v: &[VertexId]) -> bool {
    let set: BTreeSet<_> = v.iter().collect();
    set.len() == v.len()
}

pub fn apply_swap(g: &LabeledGraph, s: &Swap) -> Result<LabeledGraph> {
    s.check(g)?;
    let mut h = g.clone();
    for (u, v) in s.removed().into_iter().chain(s.added()) {
        h.toggle(u, v);
    }
    debug_assert_eq!(h.degree_sequence(), g.degree_sequence());
    Ok(h)
}

/// All four pairs touched by the swap are chords of `s`.
pub fn is_restricted(sw: &Swap, s: &SkeletonGraph) -> bool {
    sw.removed()
        .into_iter()
        .chain(sw.added())
        .all(|(u, v)| s.is_chord(u, v).unwrap_or(false))
}

/// Whether `sw` maps the consistent realization `g` to another consistent
/// realization: it must be restricted and either `a, c` or `b, d` must share
/// a class.
pub fn is_preserving(sw: &Swap, g: &LabeledGraph, s: &SkeletonGraph) -> Result<bool> {
    if !s.check_consistency(g)?.is_consistent() {
        return Err(Error::NotConsistent);
    }
    sw.check(g)?;
    Ok(preserves_classes(sw, s))
}

/// The class condition alone, for callers that already know `g` is
/// consistent and the swap applicable.
pub(crate) fn preserves_classes(sw: &Swap, s: &SkeletonGraph) -> bool {
    let p = s.partition();
    is_restricted(sw, s)
        && (p.class_of(sw.a) == p.class_of(sw.c) || p.class_of(sw.b) == p.class_of(sw.d))
}

/// Two swaps on eight distinct vertices, applied simultaneously.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DoubleSwap {
    pub first: Swap,
    pub second: Swap,
}

impl DoubleSwap {
    pub fn new(first: Swap, second: Swap) -> Result<Self> {
        let mut all = first.vertices().to_vec();
        all.extend(second.vertices());
        if !distinct(&all) {
            return Err(Error::SwapNotApplicable(format!(
                "{first} and {second} share a vertex"
            )));
        }
        Ok(DoubleSwap { first, second })
    }

    pub fn inverse(&self) -> DoubleSwap {
        DoubleSwap {
            first: self.first.inverse(),
            second: self.second.inverse(),
        }
    }
}

impl fmt::Display for DoubleSwap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] + [{}]", self.first, self.second)
    }
}

pub fn apply_double_swap(g: &LabeledGraph, ds: &DoubleSwap) -> Result<LabeledGraph> {
    let ds = DoubleSwap::new(ds.first, ds.second)?;
    ds.first.check(g)?;
    ds.second.check(g)?;
    let h = apply_swap(g, &ds.first)?;
    apply_swap(&h, &ds.second)
}

/// Exchange of edges and non-edges along an alternating circuit. The pair
/// `v_0 v_1` must be an edge of the graph the exchange is applied to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CircuitExchange {
    pub circuit: Vec<VertexId>,
}

impl CircuitExchange {
    pub fn new(circuit: AlternatingCircuit) -> Self {
        CircuitExchange {
            circuit: circuit.vertices().to_vec(),
        }
    }

    fn validated(&self) -> Result<AlternatingCircuit> {
        AlternatingCircuit::new(self.circuit.clone())
    }

    /// Starting the walk one step later puts the added pairs first.
    pub fn inverse(&self) -> CircuitExchange {
        let mut c = self.circuit.clone();
        c.rotate_left(1);
        CircuitExchange { circuit: c }
    }
}

impl fmt::Display for CircuitExchange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.circuit.iter().map(|v| v.to_string()).collect();
        write!(f, "exchange({})", parts.join(" "))
    }
}

fn alternates(g: &LabeledGraph, c: &AlternatingCircuit) -> bool {
    c.pairs()
        .enumerate()
        .all(|(i, (u, v))| u < g.n() && v < g.n() && g.has_edge(u, v) == (i % 2 == 0))
}

/// Toggles every pair of the circuit. When a skeleton is given, every
/// circuit pair must be one of its chords.
pub fn apply_circuit_exchange(
    g: &LabeledGraph,
    x: &CircuitExchange,
    s: Option<&SkeletonGraph>,
) -> Result<LabeledGraph> {
    let c = x.validated()?;
    if !alternates(g, &c) {
        return Err(Error::InvalidCircuit(format!(
            "{x} does not alternate in the graph"
        )));
    }
    if let Some(s) = s {
        for (u, v) in c.pairs() {
            if !s.is_chord(u, v)? {
                return Err(Error::NonChord(u, v));
            }
        }
    }
    let mut h = g.clone();
    for (u, v) in c.pairs() {
        h.toggle(u, v);
    }
    debug_assert_eq!(h.degree_sequence(), g.degree_sequence());
    Ok(h)
}

/// Pairs `v_i v_j` that would split the circuit into two shorter even
/// circuits: `j - i` odd, the two positions not adjacent, distinct vertices,
/// and the pair not already one of the circuit's own pairs.
pub fn dividing_pairs(c: &[VertexId]) -> Vec<(usize, usize)> {
    let len = c.len();
    let own: BTreeSet<_> = (0..len).map(|i| pair(c[i], c[(i + 1) % len])).collect();
    let mut out = Vec::new();
    for p in 0..len {
        for q in (p + 3..len).step_by(2) {
            if q - p > len - 3 || c[p] == c[q] || own.contains(&pair(c[p], c[q])) {
                continue;
            }
            out.push((p, q));
        }
    }
    out
}

/// An F-swap: the circuit alternates in `g`, all its pairs are chords of
/// `s`, and none of its dividing pairs is a chord.
pub fn is_valid_f_swap(g: &LabeledGraph, x: &CircuitExchange, s: &SkeletonGraph) -> bool {
    let Ok(c) = x.validated() else {
        return false;
    };
    if !alternates(g, &c) || !c.pairs().all(|(u, v)| s.is_chord(u, v).unwrap_or(false)) {
        return false;
    }
    dividing_pairs(&x.circuit)
        .into_iter()
        .all(|(p, q)| !s.is_chord(x.circuit[p], x.circuit[q]).unwrap_or(false))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    Swap,
    DoubleSwap,
    CircuitExchange,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Move {
    Swap(Swap),
    DoubleSwap(DoubleSwap),
    CircuitExchange(CircuitExchange),
}

impl Move {
    pub fn kind(&self) -> MoveKind {
        match self {
            Move::Swap(_) => MoveKind::Swap,
            Move::DoubleSwap(_) => MoveKind::DoubleSwap,
            Move::CircuitExchange(_) => MoveKind::CircuitExchange,
        }
    }

    pub fn apply(&self, g: &LabeledGraph) -> Result<LabeledGraph> {
        match self {
            Move::Swap(s) => apply_swap(g, s),
            Move::DoubleSwap(ds) => apply_double_swap(g, ds),
            Move::CircuitExchange(x) => apply_circuit_exchange(g, x, None),
        }
    }

    pub fn inverse(&self) -> Move {
        match self {
            Move::Swap(s) => Move::Swap(s.inverse()),
            Move::DoubleSwap(ds) => Move::DoubleSwap(ds.inverse()),
            Move::CircuitExchange(x) => Move::CircuitExchange(x.inverse()),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Swap(s) => write!(f, "swap {s}"),
            Move::DoubleSwap(ds) => write!(f, "double swap {ds}"),
            Move::CircuitExchange(x) => write!(f, "{x}"),
        }
    }
}

/// Rotates an alternating walk so that its first pair is an edge of `h`.
fn start_with_edge(h: &LabeledGraph, mut c: Vec<VertexId>) -> Vec<VertexId> {
    if !h.has_edge(c[0], c[1]) {
        c.rotate_left(1);
    }
    c
}

/// Splits an alternating circuit of `h` along allowed dividing pairs into
/// pieces that, exchanged in the returned order, toggle exactly the pairs of
/// the circuit. A dividing pair is toggled by one piece and restored by a
/// later one. Pieces of length 4 are swaps; longer pieces have no allowed
/// dividing pair.
///
/// Each split turns a circuit with `m` edges to remove into pieces with
/// `a + b = m + 1` such edges, so a circuit ending in 4-pieces only costs
/// `m - 1` swaps.
pub(crate) fn split_circuit<F>(
    h: &LabeledGraph,
    circuit: &[VertexId],
    allowed: &F,
) -> Vec<Vec<VertexId>>
where
    F: Fn(VertexId, VertexId) -> bool,
{
    fn rec<F: Fn(VertexId, VertexId) -> bool>(
        h: &mut LabeledGraph,
        c: Vec<VertexId>,
        allowed: &F,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        let len = c.len();
        let split = if len > 4 {
            dividing_pairs(&c)
                .into_iter()
                .find(|&(p, q)| allowed(c[p], c[q]))
        } else {
            None
        };
        let Some((p, q)) = split else {
            for i in 0..len {
                h.toggle(c[i], c[(i + 1) % len]);
            }
            out.push(c);
            return;
        };
        let a: Vec<VertexId> = c[p..=q].to_vec();
        let b: Vec<VertexId> = c[q..].iter().chain(c[..=p].iter()).copied().collect();
        // `c` starts with an edge, so e_p is an edge iff p is even. The
        // dividing pair closes `a` with the opposite status of e_p and `b`
        // with the same status.
        let chord_is_edge = h.has_edge(c[p], c[q]);
        let (first, second) = if chord_is_edge != (p % 2 == 0) {
            (a, b)
        } else {
            (b, a)
        };
        let first = start_with_edge(h, first);
        rec(h, first, allowed, out);
        let second = start_with_edge(h, second);
        rec(h, second, allowed, out);
    }
    let mut work = h.clone();
    let mut out = Vec::new();
    rec(
        &mut work,
        start_with_edge(h, circuit.to_vec()),
        allowed,
        &mut out,
    );
    out
}

fn four_circuit_swap(c: &[VertexId]) -> Swap {
    Swap {
        a: c[0],
        b: c[1],
        c: c[2],
        d: c[3],
    }
}

/// Swaps that transform `g` into `g2`, processing the circuits of their
/// alternating decomposition one at a time. Swaps for a circuit only touch
/// its vertices, and each circuit with `m` red pairs costs at most `m - 1`
/// swaps.
pub fn regular_swap_sequence(g: &LabeledGraph, g2: &LabeledGraph) -> Result<Vec<Swap>> {
    if g.n() != g2.n() {
        return Err(Error::VertexSetMismatch {
            left: g.n(),
            right: g2.n(),
        });
    }
    if g.degree_sequence() != g2.degree_sequence() {
        return Err(Error::DegreeMismatch);
    }
    let circuits = decompose_into_alternating_circuits(&symmetric_difference(g, g2)?)?;
    let mut h = g.clone();
    let mut out = Vec::new();
    for c in &circuits {
        for piece in split_circuit(&h, c.vertices(), &|_, _| true) {
            if piece.len() == 4 {
                let s = four_circuit_swap(&piece);
                h = apply_swap(&h, &s)?;
                out.push(s);
            } else {
                let mut target = h.clone();
                for (u, v) in AlternatingCircuit::new(piece.clone())?.pairs() {
                    target.toggle(u, v);
                }
                let vs: Vec<VertexId> = c.vertex_set().into_iter().collect();
                for s in greedy_swaps(&h, &target, &vs)? {
                    h = apply_swap(&h, &s)?;
                    out.push(s);
                }
            }
        }
    }
    debug_assert_eq!(&h, g2);
    Ok(out)
}

/// Greedy fallback: repeatedly applies the swap on `vs` that minimizes the
/// remaining difference to `target`, looking two steps ahead when no single
/// swap helps.
fn greedy_swaps(h: &LabeledGraph, target: &LabeledGraph, vs: &[VertexId]) -> Result<Vec<Swap>> {
    let r = |x: &LabeledGraph| x.edge_set().difference(target.edge_set()).count();
    let candidates = |x: &LabeledGraph| {
        let mut out = Vec::new();
        for &a in vs {
            for &b in vs {
                for &c in vs {
                    for &d in vs {
                        if let Ok(s) = Swap::new(a, b, c, d) {
                            if s.is_applicable(x) {
                                out.push(s);
                            }
                        }
                    }
                }
            }
        }
        out
    };
    let mut cur = h.clone();
    let mut out = Vec::new();
    while r(&cur) > 0 {
        let now = r(&cur);
        let best = candidates(&cur)
            .into_iter()
            .map(|s| (r(&apply_swap(&cur, &s).unwrap()), s))
            .min();
        match best {
            Some((new_r, s)) if new_r < now => {
                cur = apply_swap(&cur, &s)?;
                out.push(s);
            }
            _ => {
                let mut best2: Option<(usize, Swap, Swap)> = None;
                for s in candidates(&cur) {
                    let mid = apply_swap(&cur, &s)?;
                    for t in candidates(&mid) {
                        let rr = r(&apply_swap(&mid, &t)?);
                        if best2.as_ref().is_none_or(|b| (rr, s, t) < *b) {
                            best2 = Some((rr, s, t));
                        }
                    }
                }
                match best2 {
                    Some((rr, s, t)) if rr < now => {
                        cur = apply_swap(&apply_swap(&cur, &s)?, &t)?;
                        out.push(s);
                        out.push(t);
                    }
                    _ => return Err(Error::NoProgress(2 * now)),
                }
            }
        }
    }
    Ok(out)
}
