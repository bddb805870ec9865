// Maximum union of the pair-weighted instance against the clique program.

use boole::numerics::{rat, Rat};
use boole::reductions::{
    clique_lp, max_union_via_dual, parse_weighted_graph, Graph, WeightedGraph,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let edge = parse_weighted_graph(include_str!("../fixtures/edge_weighted.json"))?;
    let triangle = parse_weighted_graph(include_str!("../fixtures/triangle_weighted.json"))?;
    // A 4-cycle with one chord and uneven weights up to 1/16.
    let g = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])?;
    let chorded = WeightedGraph::new(
        g,
        vec![rat(1, 16), rat(1, 32), rat(1, 16), rat(0, 1), rat(3, 64)],
    )?;

    for (name, wg) in [
        ("edge", edge),
        ("triangle", triangle),
        ("chorded C4", chorded),
    ] {
        let max_union = max_union_via_dual(&wg)?;
        let clique = clique_lp(&wg)?;
        assert_eq!(max_union, Rat::from_integer(1.into()) - &clique);
        println!("{name}: max union {max_union}, clique program {clique}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
