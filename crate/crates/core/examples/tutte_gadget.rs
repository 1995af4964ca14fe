//! Finds a 2-factor of K4 through a perfect matching of its gadget.

use skelreal::graph::LabeledGraph;
use skelreal::matching::max_weight_perfect_matching;
use skelreal::tutte::{build_gadget, count_canonical_matchings, extract_f_factor, FactorSpec};

fn main() -> skelreal::Result<()> {
    let k4 = LabeledGraph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    let spec = FactorSpec::new(k4, vec![2; 4])?;
    let gadget = build_gadget(&spec, |_| 0)?;
    println!(
        "gadget: {} vertices, {} edges",
        gadget.graph.n(),
        gadget.graph.edges().len()
    );
    println!("2-factors of K4: {}", count_canonical_matchings(&gadget));

    let m = max_weight_perfect_matching(&gadget.graph).expect("K4 has a Hamilton cycle");
    let factor = extract_f_factor(&gadget, &m)?;
    println!("one of them: {:?}", factor.edge_set());
    Ok(())
}
