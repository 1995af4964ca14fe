//! Degree sequence realizations constrained by a skeleton graph.
//!
//! A skeleton partitions the vertices into classes and says which class
//! pairs (bones) may carry edges, optionally with an exact edge count per
//! bone. This crate decides and constructs such realizations:
//!
//! - [`tutte`] realizes `d` on the chords of a skeleton through an f-factor
//!   gadget and [`matching`], a blossom maximum weight perfect matching.
//! - [`solvers`] handles two classes (crossing count ladders) and unicyclic
//!   skeletons (all consistent bone weight functions).
//! - [`swaps`] has swaps, double swaps and circuit exchanges, and builds
//!   regular swap sequences between two realizations.
//! - [`explorer`] enumerates realizations of small instances and studies
//!   their connectivity under each move kind.
//! - [`cli`] backs the `skelreal` binary.
//!
//! ```
//! use skelreal::graph::DegreeSequence;
//! use skelreal::skeleton::{Bone, Partition, SkeletonGraph};
//! use skelreal::tutte::weak_realize;
//!
//! let p = Partition::from_classes(4, &[vec![0, 1], vec![2, 3]]).unwrap();
//! let s = SkeletonGraph::new(p, vec![Bone::new(0, 1, Some(2))]).unwrap();
//! let g = weak_realize(&DegreeSequence::new(vec![1, 1, 1, 1]), &s).unwrap().unwrap();
//! assert_eq!(s.bone_counts(&g), vec![2]);
//! ```
//!
//! Runnable examples live in `examples/`: `counterexample`,
//! `bipartition_ladder`, `weak_realization`, `unicyclic_weights`,
//! `swap_sequence`, `jdm_instance`, `blossom_matching`, `tutte_gadget` and
//! `move_graph`.

pub mod cli;
pub mod error;
pub mod explorer;
pub mod graph;
pub mod matching;
pub mod skeleton;
pub mod solvers;
pub mod swaps;
pub mod tutte;

pub use error::{Error, Result};
