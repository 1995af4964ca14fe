//! Crossing counts of a two-class instance form a ladder with step 2.

use skelreal::explorer::fig2_instance;
use skelreal::solvers::{
    bipartition_range, bipartition_realize, crossing_count, BipartitionOutcome,
};

fn main() -> skelreal::Result<()> {
    let (d, s) = fig2_instance();
    let p = s.partition();
    let range = bipartition_range(&d, p)?.expect("the sequence is graphical");
    println!("d = {:?}", d.0);
    println!(
        "crossing counts range over {}..={} in steps of 2",
        range.eps_min, range.eps_max
    );

    for k in 0..=d.sum() / 2 {
        match bipartition_realize(&d, p, k)? {
            BipartitionOutcome::Realized(g) => {
                println!(
                    "k = {k:>2}: {} crossing, edges {:?}",
                    crossing_count(&g, p),
                    g.edge_set()
                )
            }
            other => println!("k = {k:>2}: {other:?}"),
        }
    }
    Ok(())
}
