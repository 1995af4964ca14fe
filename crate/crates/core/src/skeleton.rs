//! Skeleton graphs: a partition of the vertices into classes plus weighted
//! bones between (or on) classes.
//!
//! A vertex pair is a *chord* when the classes of its endpoints are joined by
//! a bone. A graph is weakly consistent with a skeleton when every edge is a
//! chord, and consistent when additionally each bone holds exactly its weight
//! in edges.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{pair, DegreeSequence, Edge, LabeledGraph, VertexId};

pub type ClassId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<ClassId>,
    classes: Vec<Vec<VertexId>>,
}

impl Partition {
    /// `class_of[v]` is the class of vertex `v`. Class ids must be dense and
    /// every class nonempty.
    pub fn from_class_of(class_of: Vec<ClassId>) -> Result<Self> {
        let k = class_of.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut classes = vec![Vec::new(); k];
        for (v, &c) in class_of.iter().enumerate() {
            classes[c].push(v);
        }
        if let Some(c) = classes.iter().position(|members| members.is_empty()) {
            return Err(Error::InvalidPartition(format!("class {c} is empty")));
        }
        Ok(Partition { class_of, classes })
    }

    pub fn from_classes(n: usize, classes: &[Vec<VertexId>]) -> Result<Self> {
        let mut class_of = vec![usize::MAX; n];
        for (c, members) in classes.iter().enumerate() {
            for &v in members {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if class_of[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} is in two classes"
                    )));
                }
                class_of[v] = c;
            }
        }
        if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} is in no class"
            )));
        }
        Partition::from_class_of(class_of)
    }

    pub fn n(&self) -> usize {
        self.class_of.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: VertexId) -> ClassId {
        self.class_of[v]
    }

    pub fn class(&self, c: ClassId) -> &[VertexId] {
        &self.classes[c]
    }

    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Bone {
    pub a: ClassId,
    pub b: ClassId,
    /// `None` leaves the weight unspecified.
    pub weight: Option<u64>,
}

impl Bone {
    pub fn new(a: ClassId, b: ClassId, weight: Option<u64>) -> Self {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        Bone { a, b, weight }
    }

    pub fn is_loop(&self) -> bool {
        self.a == self.b
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeletonGraph {
    partition: Partition,
    bones: Vec<Bone>,
    index: HashMap<(ClassId, ClassId), usize>,
}

impl SkeletonGraph {
    pub fn new(partition: Partition, bones: Vec<Bone>) -> Result<Self> {
        let mut index = HashMap::new();
        let mut normalized = Vec::with_capacity(bones.len());
        for bone in bones {
            let bone = Bone::new(bone.a, bone.b, bone.weight);
            if bone.b >= partition.num_classes() {
                return Err(Error::InvalidBone(format!(
                    "class {} does not exist ({} classes)",
                    bone.b,
                    partition.num_classes()
                )));
            }
            if index.insert((bone.a, bone.b), normalized.len()).is_some() {
                return Err(Error::InvalidBone(format!(
                    "duplicate bone {}-{}",
                    bone.a, bone.b
                )));
            }
            normalized.push(bone);
        }
        let s = SkeletonGraph {
            partition,
            bones: normalized,
            index,
        };
        for bone in &s.bones {
            if let Some(w) = bone.weight {
                let capacity = s.capacity_of(bone.a, bone.b);
                if w > capacity {
                    return Err(Error::CapacityExceeded {
                        a: bone.a,
                        b: bone.b,
                        weight: w,
                        capacity,
                    });
                }
            }
        }
        Ok(s)
    }

    /// The skeleton whose bones join every pair of classes (loops included),
    /// all weights unspecified. Every vertex pair is a chord.
    pub fn all_chords(partition: Partition) -> Self {
        let k = partition.num_classes();
        let mut bones = Vec::new();
        for a in 0..k {
            for b in a..k {
                bones.push(Bone::new(a, b, None));
            }
        }
        SkeletonGraph::new(partition, bones).expect("unweighted bones are always valid")
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn bones(&self) -> &[Bone] {
        &self.bones
    }

    pub fn weights(&self) -> Vec<Option<u64>> {
        self.bones.iter().map(|b| b.weight).collect()
    }

    pub fn fully_specified(&self) -> bool {
        self.bones.iter().all(|b| b.weight.is_some())
    }

    /// Same classes and bones with new weights (one per bone).
    pub fn with_weights(&self, weights: &[Option<u64>]) -> Result<Self> {
        assert_eq!(weights.len(), self.bones.len(), "one weight per bone");
        let bones = self
            .bones
            .iter()
            .zip(weights)
            .map(|(b, &w)| Bone::new(b.a, b.b, w))
            .collect();
        SkeletonGraph::new(self.partition.clone(), bones)
    }

    /// Largest number of edges a simple graph can place on the class pair.
    pub fn capacity_of(&self, a: ClassId, b: ClassId) -> u64 {
        let sa = self.partition.class(a).len() as u64;
        if a == b {
            sa * sa.saturating_sub(1) / 2
        } else {
            sa * self.partition.class(b).len() as u64
        }
    }

    pub fn bone_between(&self, a: ClassId, b: ClassId) -> Option<usize> {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.index.get(&key).copied()
    }

    /// Index of the bone carrying pair `uv`, or `None` for a non-chord.
    pub fn bone_of_pair(&self, u: VertexId, v: VertexId) -> Option<usize> {
        self.bone_between(self.partition.class_of(u), self.partition.class_of(v))
    }

    pub fn is_chord(&self, u: VertexId, v: VertexId) -> Result<bool> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(self.bone_of_pair(u, v).is_some())
    }

    /// All chords, sorted by (bone index, pair).
    pub fn chords(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for bone in &self.bones {
            let ca = self.partition.class(bone.a);
            if bone.is_loop() {
                for (i, &u) in ca.iter().enumerate() {
                    for &v in &ca[i + 1..] {
                        out.push(pair(u, v));
                    }
                }
            } else {
                let mut block: Vec<Edge> = Vec::new();
                for &u in ca {
                    for &v in self.partition.class(bone.b) {
                        block.push(pair(u, v));
                    }
                }
                block.sort_unstable();
                out.extend(block);
            }
        }
        out
    }

    /// The graph of all chords.
    pub fn chord_graph(&self) -> LabeledGraph {
        LabeledGraph::from_edges(self.n(), self.chords()).expect("chords are distinct pairs")
    }

    /// Number of edges of `g` on each bone, in bone order.
    pub fn bone_counts(&self, g: &LabeledGraph) -> Vec<u64> {
        let mut counts = vec![0; self.bones.len()];
        for (u, v) in g.edges() {
            if let Some(b) = self.bone_of_pair(u, v) {
                counts[b] += 1;
            }
        }
        counts
    }

    pub fn check_consistency(&self, g: &LabeledGraph) -> Result<ConsistencyReport> {
        check_consistency(g, self)
    }

    pub fn class_degree_sum(&self, d: &DegreeSequence, c: ClassId) -> u64 {
        class_degree_sum(d, &self.partition, c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Consistency {
    Consistent,
    WeaklyConsistent,
    Inconsistent,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub verdict: Consistency,
    /// Observed edge count on each bone, in bone order.
    pub observed: Vec<u64>,
    /// Edges of the graph that are not chords.
    pub non_chord_edges: Vec<Edge>,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.verdict == Consistency::Consistent
    }

    pub fn is_weakly_consistent(&self) -> bool {
        self.verdict != Consistency::Inconsistent
    }
}

/// Classifies `g` against `s`. Bones with unspecified weight accept any count.
pub fn check_consistency(g: &LabeledGraph, s: &SkeletonGraph) -> Result<ConsistencyReport> {
    if g.n() != s.n() {
        return Err(Error::VertexSetMismatch {
            left: g.n(),
            right: s.n(),
        });
    }
    let mut observed = vec![0; s.bones.len()];
    let mut non_chord_edges = Vec::new();
    for (u, v) in g.edges() {
        match s.bone_of_pair(u, v) {
            Some(b) => observed[b] += 1,
            None => non_chord_edges.push((u, v)),
        }
    }
    let verdict = if !non_chord_edges.is_empty() {
        Consistency::Inconsistent
    } else if s
        .bones
        .iter()
        .zip(&observed)
        .all(|(bone, &count)| bone.weight.is_none_or(|w| w == count))
    {
        Consistency::Consistent
    } else {
        Consistency::WeaklyConsistent
    };
    Ok(ConsistencyReport {
        verdict,
        observed,
        non_chord_edges,
    })
}

/// `D(U)`: the total prescribed degree of a class.
pub fn class_degree_sum(d: &DegreeSequence, p: &Partition, c: ClassId) -> u64 {
    p.class(c).iter().map(|&v| d[v] as u64).sum()
}

pub fn is_chord(s: &SkeletonGraph, u: VertexId, v: VertexId) -> Result<bool> {
    s.is_chord(u, v)
}

/// Converts a joint degree matrix into a degree sequence and skeleton.
///
/// `jdm[i][j]` is the number of edges between vertices of degree `i + 1` and
/// `j + 1`. The degree-`i` class has `(J_ii + sum_l J_il) / i` vertices.
/// Classes are laid out by increasing degree; bones are created for every
/// positive entry. Returns `Ok(None)` when the entries exceed what simple
/// graphs can hold between the derived classes.
pub fn jdm_to_skeleton(jdm: &[Vec<u64>]) -> Result<Option<(DegreeSequence, SkeletonGraph)>> {
    let delta = jdm.len();
    if jdm.iter().any(|row| row.len() != delta) {
        return Err(Error::NonSquareMatrix);
    }
    if let Some((i, j)) = (0..delta)
        .flat_map(|i| (i + 1..delta).map(move |j| (i, j)))
        .find(|&(i, j)| jdm[i][j] != jdm[j][i])
    {
        return Err(Error::NonSymmetricMatrix(i, j));
    }
    let mut counts = Vec::with_capacity(delta);
    for (i, row) in jdm.iter().enumerate() {
        let degree = i + 1;
        let numerator: u64 = row[i] + row.iter().sum::<u64>();
        if !numerator.is_multiple_of(degree as u64) {
            return Err(Error::NonIntegralCount { degree, numerator });
        }
        counts.push((numerator / degree as u64) as usize);
    }

    let mut class_of = Vec::new();
    let mut degrees = Vec::new();
    let mut class_of_degree = vec![None; delta];
    for (i, &count) in counts.iter().enumerate() {
        if count == 0 {
            continue;
        }
        let c = class_of_degree.iter().flatten().count();
        class_of_degree[i] = Some(c);
        for _ in 0..count {
            class_of.push(c);
            degrees.push(i + 1);
        }
    }
    let partition = Partition::from_class_of(class_of)?;
    let mut bones = Vec::new();
    for i in 0..delta {
        for j in i..delta {
            if jdm[i][j] == 0 {
                continue;
            }
            // A positive entry forces n_i, n_j > 0.
            let (a, b) = (class_of_degree[i].unwrap(), class_of_degree[j].unwrap());
            bones.push(Bone::new(a, b, Some(jdm[i][j])));
        }
    }
    match SkeletonGraph::new(partition, bones) {
        Ok(s) => Ok(Some((DegreeSequence(degrees), s))),
        Err(Error::CapacityExceeded { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}
