// Closed-form bounds next to the tight interval.

use boole::classic::{boole_frechet, inclusion_exclusion, BonferroniReport};
use boole::hailperin::union_bounds;
use boole::instance::parse_instance;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let singles = parse_instance(include_str!("../fixtures/singletons.json"))?;
    let bf = boole_frechet(&singles)?;
    let tight = union_bounds(&singles)?.interval;
    println!("singletons: boole-frechet {bf}, tight {tight}");
    assert_eq!(bf, tight);

    let pairs = parse_instance(include_str!("../fixtures/pairs.json"))?;
    let tight = union_bounds(&pairs)?.interval;
    println!(
        "pairs: boole-frechet {}, tight {tight}",
        boole_frechet(&pairs)?
    );
    for term in BonferroniReport::new(&pairs).terms {
        println!("  S_{} = {} ({} bound)", term.k, term.value, term.direction);
    }

    let full = parse_instance(include_str!("../fixtures/example1.json"))?;
    println!(
        "example1: inclusion-exclusion {}",
        inclusion_exclusion(&full)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
