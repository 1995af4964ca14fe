//! Realizes a degree sequence using only chords of a skeleton, ignoring the
//! bone weights.

use skelreal::graph::DegreeSequence;
use skelreal::skeleton::{Bone, Partition, SkeletonGraph};
use skelreal::tutte::weak_realize;

fn main() -> skelreal::Result<()> {
    // A path of three classes: {0, 1} - {2, 3} - {4}, with a loop on the middle class.
    let p = Partition::from_classes(5, &[vec![0, 1], vec![2, 3], vec![4]])?;
    let s = SkeletonGraph::new(
        p,
        vec![
            Bone::new(0, 1, None),
            Bone::new(1, 1, None),
            Bone::new(1, 2, None),
        ],
    )?;

    for degrees in [vec![1, 1, 3, 3, 2], vec![2, 2, 2, 2, 2]] {
        let d = DegreeSequence::new(degrees);
        match weak_realize(&d, &s)? {
            Some(g) => println!(
                "{:?}: edges {:?}, bone counts {:?}",
                d.0,
                g.edge_set(),
                s.bone_counts(&g)
            ),
            None => println!("{:?}: no realization on these chords", d.0),
        }
    }
    Ok(())
}
