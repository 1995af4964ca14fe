//! Existence solvers: two-class skeletons with a prescribed crossing count,
//! and loopless skeletons that are trees, cycles, or unicyclic.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::explorer::{enumerate_realizations, EnumerationMode, OracleLimit};
use crate::graph::{
    decompose_into_alternating_circuits, symmetric_difference, DegreeSequence, LabeledGraph,
};
use crate::skeleton::{
    check_consistency, class_degree_sum, Bone, ClassId, Partition, SkeletonGraph,
};
use crate::swaps::{
    apply_circuit_exchange, apply_swap, regular_swap_sequence, split_circuit, CircuitExchange,
};
use crate::tutte::{weak_realize, weighted_realize};

/// Number of edges of `g` joining different classes of `p`.
pub fn crossing_count(g: &LabeledGraph, p: &Partition) -> usize {
    g.edges()
        .filter(|&(u, v)| p.class_of(u) != p.class_of(v))
        .count()
}

fn require_two_classes(d: &DegreeSequence, p: &Partition) -> Result<()> {
    if p.num_classes() != 2 {
        return Err(Error::InvalidPartition(format!(
            "expected exactly two classes, found {}",
            p.num_classes()
        )));
    }
    if d.len() != p.n() {
        return Err(Error::VertexSetMismatch {
            left: d.len(),
            right: p.n(),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingRange {
    pub eps_min: usize,
    pub eps_max: usize,
    pub witness_min: LabeledGraph,
    pub witness_max: LabeledGraph,
}

/// Fewest and most crossing edges over all realizations of `d`, or `None`
/// when `d` has no realization.
pub fn bipartition_range(d: &DegreeSequence, p: &Partition) -> Result<Option<CrossingRange>> {
    require_two_classes(d, p)?;
    let s = SkeletonGraph::all_chords(p.clone());
    let crossing = |(u, v): (usize, usize)| p.class_of(u) != p.class_of(v);
    let Some((witness_min, _)) = weighted_realize(d, &s, |e| (!crossing(e)) as i64)? else {
        return Ok(None);
    };
    let (witness_max, _) = weighted_realize(d, &s, |e| crossing(e) as i64)?
        .expect("same feasibility as the first call");
    Ok(Some(CrossingRange {
        eps_min: crossing_count(&witness_min, p),
        eps_max: crossing_count(&witness_max, p),
        witness_min,
        witness_max,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BipartitionOutcome {
    Realized(LabeledGraph),
    NotGraphical,
    OutOfRange { eps_min: usize, eps_max: usize },
    WrongParity { eps_min: usize, eps_max: usize },
}

/// A realization of `d` with exactly `k` crossing edges.
///
/// Crossing counts of realizations form the ladder `eps_min, eps_min + 2,
/// ..., eps_max`. Inside the ladder the answer is found on the swap walk
/// from the fewest-crossing witness to the most-crossing one, since each swap
/// moves the crossing count by 0 or 2.
pub fn bipartition_realize(
    d: &DegreeSequence,
    p: &Partition,
    k: usize,
) -> Result<BipartitionOutcome> {
    let Some(range) = bipartition_range(d, p)? else {
        return Ok(BipartitionOutcome::NotGraphical);
    };
    let CrossingRange {
        eps_min, eps_max, ..
    } = range;
    if k < eps_min || k > eps_max {
        return Ok(BipartitionOutcome::OutOfRange { eps_min, eps_max });
    }
    if (k - eps_min) % 2 == 1 {
        return Ok(BipartitionOutcome::WrongParity { eps_min, eps_max });
    }
    let mut g = range.witness_min.clone();
    if crossing_count(&g, p) == k {
        return Ok(BipartitionOutcome::Realized(g));
    }
    for s in regular_swap_sequence(&range.witness_min, &range.witness_max)? {
        g = apply_swap(&g, &s)?;
        if crossing_count(&g, p) == k {
            return Ok(BipartitionOutcome::Realized(g));
        }
    }
    Err(Error::NoProgress(k))
}

/// The skeleton with a weight-`k` bone between the two classes and loops
/// carrying the remaining degree, or `None` when those loop weights are not
/// non-negative integers within capacity. Bones are `[UW, UU, WW]`.
pub fn bipartition_skeleton(
    d: &DegreeSequence,
    p: &Partition,
    k: usize,
) -> Result<Option<SkeletonGraph>> {
    require_two_classes(d, p)?;
    let k = k as u64;
    let mut loops = [0u64; 2];
    for (c, slot) in loops.iter_mut().enumerate() {
        let total = class_degree_sum(d, p, c);
        if total < k || (total - k) % 2 == 1 {
            return Ok(None);
        }
        *slot = (total - k) / 2;
    }
    let bones = vec![
        Bone::new(0, 1, Some(k)),
        Bone::new(0, 0, Some(loops[0])),
        Bone::new(1, 1, Some(loops[1])),
    ];
    match SkeletonGraph::new(p.clone(), bones) {
        Ok(s) => Ok(Some(s)),
        Err(Error::CapacityExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// A cycle of classes `U_1 ... U_L`; `bones[i]` joins `classes[i]` and
/// `classes[(i + 1) % L]`. The walk starts along the cycle bone with the
/// smallest index, oriented from its first class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleInfo {
    pub classes: Vec<ClassId>,
    pub bones: Vec<usize>,
}

impl CycleInfo {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.len() % 2 == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Shape {
    Tree,
    Unicyclic(CycleInfo),
}

/// Classifies a loopless connected skeleton as a tree or as having exactly
/// one cycle.
pub fn skeleton_shape(s: &SkeletonGraph) -> Result<Shape> {
    let k = s.partition().num_classes();
    if s.bones().iter().any(Bone::is_loop) {
        return Err(Error::SkeletonShape("loops are not allowed".into()));
    }
    let adj = class_adjacency(s);
    let mut seen = vec![false; k];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(c) = stack.pop() {
        for &(_, o) in &adj[c] {
            if !seen[o] {
                seen[o] = true;
                stack.push(o);
            }
        }
    }
    if seen.iter().any(|&x| !x) {
        return Err(Error::SkeletonShape("skeleton is disconnected".into()));
    }
    match s.bones().len().cmp(&k) {
        std::cmp::Ordering::Less => return Ok(Shape::Tree),
        std::cmp::Ordering::Greater => {
            return Err(Error::SkeletonShape("more than one cycle".into()))
        }
        std::cmp::Ordering::Equal => {}
    }
    // Peel leaves; what survives is the cycle.
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; k];
    let mut leaves: Vec<ClassId> = (0..k).filter(|&c| deg[c] == 1).collect();
    while let Some(c) = leaves.pop() {
        alive[c] = false;
        for &(_, o) in &adj[c] {
            if alive[o] {
                deg[o] -= 1;
                if deg[o] == 1 {
                    leaves.push(o);
                }
            }
        }
    }
    let on_cycle = |b: usize| alive[s.bones()[b].a] && alive[s.bones()[b].b];
    let first = (0..s.bones().len())
        .find(|&b| on_cycle(b))
        .expect("a unicyclic skeleton has a cycle bone");
    let mut classes = vec![s.bones()[first].a];
    let mut bones = vec![first];
    let mut cur = s.bones()[first].b;
    while cur != classes[0] {
        classes.push(cur);
        let &(b, o) = adj[cur]
            .iter()
            .find(|&&(b, o)| alive[o] && b != *bones.last().unwrap())
            .expect("cycle classes have two cycle bones");
        bones.push(b);
        cur = o;
    }
    Ok(Shape::Unicyclic(CycleInfo { classes, bones }))
}

/// `(bone, other class)` lists per class.
fn class_adjacency(s: &SkeletonGraph) -> Vec<Vec<(usize, ClassId)>> {
    let mut adj = vec![Vec::new(); s.partition().num_classes()];
    for (i, b) in s.bones().iter().enumerate() {
        adj[b.a].push((i, b.b));
        if b.a != b.b {
            adj[b.b].push((i, b.a));
        }
    }
    adj
}

fn residuals(d: &DegreeSequence, s: &SkeletonGraph) -> Vec<i64> {
    (0..s.partition().num_classes())
        .map(|c| s.class_degree_sum(d, c) as i64)
        .collect()
}

/// Removes leaf classes one at a time (smallest id first), fixing the weight
/// of the leaf's bone to its residual and charging it to the neighbor.
/// Stops when no leaf is left or only one class remains. Returns `false` if
/// a weight would be negative.
fn peel(s: &SkeletonGraph, residual: &mut [i64], weights: &mut [Option<i64>]) -> bool {
    let adj = class_adjacency(s);
    let k = adj.len();
    let mut alive = vec![true; k];
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut remaining = k;
    while remaining > 1 {
        let Some(c) = (0..k).find(|&c| alive[c] && deg[c] == 1) else {
            break;
        };
        let &(b, o) = adj[c].iter().find(|&&(_, o)| alive[o]).unwrap();
        let w = residual[c];
        if w < 0 {
            return false;
        }
        weights[b] = Some(w);
        residual[o] -= w;
        residual[c] = 0;
        alive[c] = false;
        deg[o] -= 1;
        remaining -= 1;
    }
    true
}

fn to_weights(w: &[Option<i64>]) -> Option<Vec<u64>> {
    w.iter()
        .map(|x| x.and_then(|x| u64::try_from(x).ok()))
        .collect()
}

/// The only possible bone weights of a tree skeleton, from leaf-to-root
/// propagation, or `None` when propagation fails.
pub fn tree_weights(d: &DegreeSequence, s: &SkeletonGraph) -> Result<Option<Vec<u64>>> {
    if skeleton_shape(s)? != Shape::Tree {
        return Err(Error::SkeletonShape("not a tree".into()));
    }
    let mut res = residuals(d, s);
    let mut w = vec![None; s.bones().len()];
    if !peel(s, &mut res, &mut w) || res.iter().any(|&r| r != 0) {
        return Ok(None);
    }
    Ok(to_weights(&w))
}

/// Bone weights around a cycle with residual class sums `res` (in cycle
/// order) when the first bone carries `alpha`. `None` when a weight is
/// negative or the closing class sum fails.
fn chain_weights(res: &[i64], alpha: i64) -> Option<Vec<i64>> {
    let l = res.len();
    let mut w = vec![alpha; l];
    for i in 1..l {
        w[i] = res[i] - w[i - 1];
    }
    if w[l - 1] + w[0] != res[0] || w.iter().any(|&x| x < 0) {
        return None;
    }
    Some(w)
}

/// On an odd cycle the closing equation pins `alpha` down.
fn odd_alpha(res: &[i64]) -> Option<i64> {
    let l = res.len();
    debug_assert_eq!(l % 2, 1);
    let mut c = 0;
    for &r in &res[1..] {
        c = r - c;
    }
    let twice = res[0] - c;
    (twice >= 0 && twice % 2 == 0).then_some(twice / 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleWeightSolution {
    /// Weight of the cycle's first bone.
    pub alpha: u64,
    /// Weight of every bone, in bone order.
    pub weights: Vec<u64>,
}

fn pure_cycle(s: &SkeletonGraph, odd: bool) -> Result<CycleInfo> {
    match skeleton_shape(s)? {
        Shape::Unicyclic(c) if c.len() == s.partition().num_classes() && c.is_odd() == odd => Ok(c),
        _ => Err(Error::SkeletonShape(format!(
            "bones do not form a single {} cycle",
            if odd { "odd" } else { "even" }
        ))),
    }
}

/// The unique weight function an odd-cycle skeleton can be consistent with,
/// or `None` when it is not a non-negative integer solution.
pub fn odd_cycle_weights(
    d: &DegreeSequence,
    s: &SkeletonGraph,
) -> Result<Option<CycleWeightSolution>> {
    let cycle = pure_cycle(s, true)?;
    let all = residuals(d, s);
    let res: Vec<i64> = cycle.classes.iter().map(|&c| all[c]).collect();
    let Some(w) = odd_alpha(&res).and_then(|a| chain_weights(&res, a)) else {
        return Ok(None);
    };
    let mut weights = vec![0; s.bones().len()];
    for (i, &b) in cycle.bones.iter().enumerate() {
        weights[b] = w[i] as u64;
    }
    Ok(Some(CycleWeightSolution {
        alpha: w[0] as u64,
        weights,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaRange {
    pub bone: usize,
    pub alpha_min: u64,
    pub alpha_max: u64,
    pub witness_min: LabeledGraph,
    pub witness_max: LabeledGraph,
}

fn bone_count(s: &SkeletonGraph, g: &LabeledGraph, bone: usize) -> u64 {
    s.bone_counts(g)[bone]
}

/// Fewest and most edges on `bone` over all realizations of `d` that use
/// only chords of `s`.
pub fn alpha_range(
    d: &DegreeSequence,
    s: &SkeletonGraph,
    bone: usize,
) -> Result<Option<AlphaRange>> {
    if bone >= s.bones().len() {
        return Err(Error::InvalidBone(format!("bone {bone} does not exist")));
    }
    let on_bone = |(u, v): (usize, usize)| s.bone_of_pair(u, v) == Some(bone);
    let Some((witness_min, _)) = weighted_realize(d, s, |e| (!on_bone(e)) as i64)? else {
        return Ok(None);
    };
    let (witness_max, _) =
        weighted_realize(d, s, |e| on_bone(e) as i64)?.expect("same feasibility as the first call");
    Ok(Some(AlphaRange {
        bone,
        alpha_min: bone_count(s, &witness_min, bone),
        alpha_max: bone_count(s, &witness_max, bone),
        witness_min,
        witness_max,
    }))
}

/// [`alpha_range`] on the first bone of an even-cycle skeleton.
pub fn even_cycle_alpha_range(d: &DegreeSequence, s: &SkeletonGraph) -> Result<Option<AlphaRange>> {
    let cycle = pure_cycle(s, false)?;
    alpha_range(d, s, cycle.bones[0])
}

#[derive(Clone, Debug)]
pub struct AlphaSweep {
    pub range: AlphaRange,
    /// First realization met for each value on the bone.
    pub witnesses: BTreeMap<u64, LabeledGraph>,
    /// Exchanges that moved the bone count by more than one.
    pub violations: usize,
    /// Values supplied by exhaustive enumeration instead of the walk.
    pub fallbacks: usize,
    /// Values in range with no witness at all.
    pub missing: Vec<u64>,
}

/// Walks from the fewest-`bone` witness to the most-`bone` witness by
/// exchanges along alternating chord circuits, each split along chords as
/// far as possible, and records a realization for every count met.
pub fn alpha_sweep(
    d: &DegreeSequence,
    s: &SkeletonGraph,
    bone: usize,
    limit: &OracleLimit,
) -> Result<Option<AlphaSweep>> {
    let Some(range) = alpha_range(d, s, bone)? else {
        return Ok(None);
    };
    let mut witnesses = BTreeMap::new();
    let mut h = range.witness_min.clone();
    let mut alpha = bone_count(s, &h, bone);
    witnesses.insert(alpha, h.clone());
    let mut violations = 0;
    let is_chord = |u, v| s.is_chord(u, v).unwrap_or(false);
    let circuits =
        decompose_into_alternating_circuits(&symmetric_difference(&h, &range.witness_max)?)?;
    for c in &circuits {
        for piece in split_circuit(&h, c.vertices(), &is_chord) {
            h = apply_circuit_exchange(&h, &CircuitExchange { circuit: piece }, Some(s))?;
            let next = bone_count(s, &h, bone);
            if next.abs_diff(alpha) > 1 {
                violations += 1;
            }
            alpha = next;
            witnesses.entry(alpha).or_insert_with(|| h.clone());
        }
    }
    debug_assert_eq!(h, range.witness_max);

    let mut fallbacks = 0;
    let gaps: Vec<u64> = (range.alpha_min..=range.alpha_max)
        .filter(|a| !witnesses.contains_key(a))
        .collect();
    let mut missing = Vec::new();
    if !gaps.is_empty() {
        let all = enumerate_realizations(d, s, EnumerationMode::Weak, limit)?;
        for a in gaps {
            match all.graphs().iter().find(|g| bone_count(s, g, bone) == a) {
                Some(g) => {
                    witnesses.insert(a, g.clone());
                    fallbacks += 1;
                }
                None => missing.push(a),
            }
        }
    }
    Ok(Some(AlphaSweep {
        range,
        witnesses,
        violations,
        fallbacks,
        missing,
    }))
}

/// A realization of an even-cycle skeleton whose first bone carries exactly
/// `alpha` edges.
pub fn even_cycle_realize(
    d: &DegreeSequence,
    s: &SkeletonGraph,
    alpha: u64,
) -> Result<Option<LabeledGraph>> {
    let cycle = pure_cycle(s, false)?;
    let Some(range) = alpha_range(d, s, cycle.bones[0])? else {
        return Ok(None);
    };
    if alpha < range.alpha_min || alpha > range.alpha_max {
        return Ok(None);
    }
    if alpha == range.alpha_min {
        return Ok(Some(range.witness_min));
    }
    if alpha == range.alpha_max {
        return Ok(Some(range.witness_max));
    }
    let sweep =
        alpha_sweep(d, s, cycle.bones[0], &OracleLimit::from_env())?.expect("range is non-empty");
    Ok(sweep.witnesses.get(&alpha).cloned())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedWitness {
    /// Weight of every bone, in bone order.
    pub weights: Vec<u64>,
    #[serde(skip)]
    pub witness: LabeledGraph,
}

#[derive(Clone, Debug)]
pub struct UnicyclicReport {
    pub shape: Shape,
    /// Bone whose count parametrizes the solutions of an even cycle.
    pub alpha_bone: Option<usize>,
    pub solutions: Vec<WeightedWitness>,
    pub violations: usize,
    pub fallbacks: usize,
}

/// Every weight function for which a consistent realization exists, each
/// with one witness, for a connected loopless skeleton with at most one
/// cycle. Specified input weights are honored.
pub fn unicyclic_solve(d: &DegreeSequence, s: &SkeletonGraph) -> Result<Vec<WeightedWitness>> {
    Ok(unicyclic_solve_detailed(d, s, &OracleLimit::from_env())?.solutions)
}

pub fn unicyclic_solve_detailed(
    d: &DegreeSequence,
    s: &SkeletonGraph,
    limit: &OracleLimit,
) -> Result<UnicyclicReport> {
    if d.len() != s.n() {
        return Err(Error::VertexSetMismatch {
            left: d.len(),
            right: s.n(),
        });
    }
    let shape = skeleton_shape(s)?;
    let mut report = UnicyclicReport {
        shape: shape.clone(),
        alpha_bone: None,
        solutions: Vec::new(),
        violations: 0,
        fallbacks: 0,
    };
    let mut res = residuals(d, s);
    let mut fixed = vec![None; s.bones().len()];
    if !peel(s, &mut res, &mut fixed) {
        return Ok(report);
    }

    let mut candidates: Vec<(Vec<u64>, Option<LabeledGraph>)> = Vec::new();
    match &shape {
        Shape::Tree => {
            if res.iter().all(|&r| r == 0) {
                if let Some(w) = to_weights(&fixed) {
                    candidates.push((w, None));
                }
            }
        }
        Shape::Unicyclic(cycle) if cycle.is_odd() => {
            let cres: Vec<i64> = cycle.classes.iter().map(|&c| res[c]).collect();
            if let Some(cw) = odd_alpha(&cres).and_then(|a| chain_weights(&cres, a)) {
                let mut w = fixed.clone();
                for (i, &b) in cycle.bones.iter().enumerate() {
                    w[b] = Some(cw[i]);
                }
                if let Some(w) = to_weights(&w) {
                    candidates.push((w, None));
                }
            }
        }
        Shape::Unicyclic(cycle) => {
            let bone = cycle.bones[0];
            report.alpha_bone = Some(bone);
            let cres: Vec<i64> = cycle.classes.iter().map(|&c| res[c]).collect();
            if let Some(sweep) = alpha_sweep(d, s, bone, limit)? {
                report.violations = sweep.violations;
                report.fallbacks = sweep.fallbacks;
                for (alpha, g) in sweep.witnesses {
                    let Some(cw) = chain_weights(&cres, alpha as i64) else {
                        continue;
                    };
                    let mut w = fixed.clone();
                    for (i, &b) in cycle.bones.iter().enumerate() {
                        w[b] = Some(cw[i]);
                    }
                    if let Some(w) = to_weights(&w) {
                        candidates.push((w, Some(g)));
                    }
                }
            }
        }
    }

    let specified = s.weights();
    for (weights, witness) in candidates {
        if specified
            .iter()
            .zip(&weights)
            .any(|(sp, w)| sp.is_some_and(|sp| sp != *w))
        {
            continue;
        }
        let Ok(ws) = s.with_weights(&weights.iter().map(|&w| Some(w)).collect::<Vec<_>>()) else {
            continue;
        };
        let witness = match witness {
            Some(g) => Some(g),
            // Outside the even case the weights are forced, so any
            // realization using only chords is consistent with them.
            None => weak_realize(d, s)?,
        };
        if let Some(g) = witness {
            if check_consistency(&g, &ws)?.is_consistent() {
                report.solutions.push(WeightedWitness {
                    weights,
                    witness: g,
                });
            }
        }
    }
    report.solutions.sort_by(|a, b| a.weights.cmp(&b.weights));
    Ok(report)
}
