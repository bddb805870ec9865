// Frequent sets from basket data and the union interval they pin down.

use boole::hailperin::union_bounds;
use boole::instance::SetFamily;
use boole::mining::{apriori, empirical_b, load_matrix, row_distribution};
use boole::numerics::rat;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let data = load_matrix(include_str!("../fixtures/baskets.csv"), true)?;
    let sets = apriori(&data, &rat(1, 2), 2)?;
    let family = SetFamily::new(data.cols(), sets)?;
    let inst = empirical_b(&data, &family)?;
    for (s, b) in inst.iter() {
        println!("b{s} = {b}");
    }
    assert!(row_distribution(&data).realizes(&inst));

    let bounds = union_bounds(&inst)?;
    let observed = row_distribution(&data).union_probability();
    assert!(bounds.interval.contains(&observed));
    println!("union within {}, observed {observed}", bounds.interval);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
