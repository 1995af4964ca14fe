//! Connectivity of a realization set under different move kinds.

use std::collections::BTreeSet;

use skelreal::explorer::{
    build_move_graph, connected_components, enumerate_realizations, fig2_instance, find_move_path,
    EnumerationMode, OracleLimit,
};
use skelreal::swaps::MoveKind;

fn main() -> skelreal::Result<()> {
    let (d, s) = fig2_instance();
    let limit = OracleLimit::default();
    let r = enumerate_realizations(&d, &s, EnumerationMode::Consistent, &limit)?;
    println!("{} consistent realizations", r.len());

    let kind_sets = [
        vec![MoveKind::Swap],
        vec![MoveKind::Swap, MoveKind::DoubleSwap],
        vec![MoveKind::Swap, MoveKind::CircuitExchange],
    ];
    for kinds in kind_sets {
        let kinds: BTreeSet<MoveKind> = kinds.into_iter().collect();
        let m = build_move_graph(&r, &s, &kinds, &limit)?;
        println!(
            "{kinds:?}: {} edges, components {:?}",
            m.edge_count(),
            connected_components(&m)
        );
        match find_move_path(&m, 0, r.len() - 1)? {
            Some(path) => {
                for mv in path {
                    println!("  {mv}");
                }
            }
            None => println!("  no path from 0 to {}", r.len() - 1),
        }
    }
    Ok(())
}
