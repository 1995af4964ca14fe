//! Lists every bone weight function a unicyclic skeleton admits for a degree
//! sequence, with a witness for each.

use skelreal::graph::DegreeSequence;
use skelreal::skeleton::{Bone, Partition, SkeletonGraph};
use skelreal::solvers::{skeleton_shape, unicyclic_solve};

fn main() -> skelreal::Result<()> {
    // Four classes on a 4-cycle, plus class 4 hanging off class 0.
    let classes = [vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7], vec![8]];
    let p = Partition::from_classes(9, &classes)?;
    let bones = vec![
        Bone::new(0, 1, None),
        Bone::new(1, 2, None),
        Bone::new(2, 3, None),
        Bone::new(3, 0, None),
        Bone::new(0, 4, None),
    ];
    let s = SkeletonGraph::new(p, bones)?;
    let d = DegreeSequence::new(vec![3, 2, 2, 1, 2, 1, 2, 2, 1]);

    println!("shape: {:?}", skeleton_shape(&s)?);
    let solutions = unicyclic_solve(&d, &s)?;
    if solutions.is_empty() {
        println!("no consistent weight function");
    }
    for w in solutions {
        println!("weights {:?}: edges {:?}", w.weights, w.witness.edge_set());
    }
    Ok(())
}
