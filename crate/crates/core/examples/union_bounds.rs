// Tight union intervals for a few instances, with the realizations that
// attain them.

use boole::hailperin::{realize_at, union_bounds};
use boole::instance::parse_instance;
use boole::numerics::rat;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // Two events with P(B1) = 1/2, P(B2) = 1/2, P(B1 ∩ B2) = 1/4.
    let inst = parse_instance(include_str!("../fixtures/example1.json"))?;
    let bounds = union_bounds(&inst)?;
    println!("example1: {}", bounds.interval);
    assert!(bounds.interval.is_point());

    // Dropping the pairwise value leaves a whole interval.
    let pairs = parse_instance(include_str!("../fixtures/pairs.json"))?;
    let bounds = union_bounds(&pairs)?;
    println!("pairs: {}", bounds.interval);
    for (label, x) in [
        ("lower", &bounds.min_witness),
        ("upper", &bounds.max_witness),
    ] {
        assert!(x.realizes(&pairs));
        let atoms: Vec<String> = x.support().map(|(t, w)| format!("{t}:{w}")).collect();
        println!("  {label} witness: {}", atoms.join(" "));
    }

    let middle = rat(7, 8);
    let x = realize_at(&pairs, &middle)?;
    assert_eq!(x.union_probability(), middle);
    println!("  realized at union {middle}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
