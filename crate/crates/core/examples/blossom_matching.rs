//! Maximum weight perfect matching on a small general graph, checked against
//! brute force.

use skelreal::matching::{brute_force_max_matching, max_weight_perfect_matching, WeightedGraph};

fn main() -> skelreal::Result<()> {
    // A 5-cycle with a pendant pair, so odd cycles must be shrunk.
    let h = WeightedGraph::from_edges(
        6,
        [
            (0, 1, 4),
            (1, 2, 6),
            (2, 3, 5),
            (3, 4, 3),
            (4, 0, 7),
            (4, 5, 2),
            (2, 5, -1),
        ],
    )?;
    match max_weight_perfect_matching(&h) {
        Some(m) => println!("pairs {:?}, weight {}", m.pairs(), m.total_weight),
        None => println!("no perfect matching"),
    }
    let check = brute_force_max_matching(&h)?.map(|m| m.total_weight);
    println!("brute force weight: {check:?}");
    Ok(())
}
