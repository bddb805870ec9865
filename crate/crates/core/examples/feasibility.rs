// Feasibility verdicts. An infeasible instance comes with a Farkas
// certificate that anyone can check against the atom program.

use boole::hailperin::{build_hailperin_lp, is_feasible, Feasibility};
use boole::instance::{check_monotone, parse_instance};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bad = parse_instance(include_str!("../fixtures/bad.json"))?;
    for (s, t) in check_monotone(&bad) {
        println!("b{t} exceeds b{s} although {s} ⊆ {t}");
    }
    match is_feasible(&bad) {
        Feasibility::Feasible(_) => unreachable!(),
        Feasibility::Infeasible(cert) => {
            let lp = build_hailperin_lp(&bad);
            assert!(lp.verify_farkas(&cert));
            let shown: Vec<String> = cert.iter().map(ToString::to_string).collect();
            println!("certificate: {}", shown.join(" "));
        }
    }

    let good = parse_instance(include_str!("../fixtures/example1.json"))?;
    if let Feasibility::Feasible(x) = is_feasible(&good) {
        assert!(x.realizes(&good));
        println!("example1 is realized by {} atoms", x.support().count());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
