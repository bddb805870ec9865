// Membership in the correlation and union polytopes, and the same questions
// asked through the atom program.

use boole::hailperin::{is_feasible, realize_at};
use boole::instance::{parse_family, BooleInstance};
use boole::numerics::rat;
use boole::polytope::{correlation_vertices, hull_membership, union_vertices};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let family = parse_family(include_str!("../fixtures/family_singletons2.json"))?;
    let rho = correlation_vertices(&family);
    let sigma = union_vertices(&family);

    let b = vec![rat(1, 2), rat(1, 2)];
    let inst = BooleInstance::new(family.clone(), b.clone())?;
    let feasible = hull_membership(&rho, &b)?;
    assert_eq!(feasible, is_feasible(&inst).is_feasible());
    println!("b = (1/2, 1/2) in rho: {feasible}");

    for u in [rat(1, 4), rat(1, 2), rat(3, 4), rat(1, 1)] {
        let mut point = b.clone();
        point.push(rat(1, 1) - &u);
        let inside = hull_membership(&sigma, &point)?;
        assert_eq!(inside, realize_at(&inst, &u).is_ok());
        println!(
            "union {u}: {}",
            if inside {
                "realizable"
            } else {
                "not realizable"
            }
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
