// The colouring gadget: the minimum union of the gadget instance is the
// fractional chromatic number divided by the vertex count.

use boole::hailperin::union_bounds;
use boole::numerics::Rat;
use boole::reductions::{color_gadget, fractional_chromatic, Graph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("C5", Graph::cycle(5)),
        ("C7", Graph::cycle(7)),
        ("K4", Graph::complete(4)),
        ("Petersen", Graph::petersen()),
    ];
    for (name, g) in graphs {
        let lo = union_bounds(&color_gadget(&g))?.interval.lo;
        let chi = fractional_chromatic(&g)?;
        assert_eq!(lo, &chi / Rat::from_integer((g.n() as i64).into()));
        println!("{name}: chi_f = {chi}, min union = {lo}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
