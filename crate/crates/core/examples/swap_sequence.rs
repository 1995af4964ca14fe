//! Transforms one realization into another with a short sequence of swaps.

use skelreal::graph::{decompose_into_alternating_circuits, symmetric_difference, LabeledGraph};
use skelreal::swaps::{apply_swap, regular_swap_sequence};

fn main() -> skelreal::Result<()> {
    // Two Hamilton cycles on eight vertices with a single edge in common.
    let g = LabeledGraph::from_edges(
        8,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 0),
        ],
    )?;
    let target = LabeledGraph::from_edges(
        8,
        [
            (0, 1),
            (1, 3),
            (3, 5),
            (5, 7),
            (7, 2),
            (2, 4),
            (4, 6),
            (6, 0),
        ],
    )?;

    let delta = symmetric_difference(&g, &target)?;
    let circuits = decompose_into_alternating_circuits(&delta)?;
    println!(
        "{} edges to replace, circuits {:?}",
        delta.r(),
        circuits.iter().map(|c| c.vertices()).collect::<Vec<_>>()
    );

    let seq = regular_swap_sequence(&g, &target)?;
    let mut h = g;
    for sw in &seq {
        h = apply_swap(&h, sw)?;
        println!("{sw}");
    }
    assert_eq!(h, target);
    println!(
        "{} swaps reach the target, at most r minus the number of circuits",
        seq.len()
    );
    Ok(())
}
