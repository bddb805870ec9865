// The exact simplex on a small program, cross-checked by enumerating every
// basic solution.

use boole::numerics::{
    lp_enumerate_basic, lp_solve, rat, LinearProgram, LpOutcome, Relation, Sense,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // maximize 3x + 2y  s.t.  x + y ≤ 4,  x + 3y ≤ 6,  x ≤ 3
    let mut lp = LinearProgram::new(2).with_objective(vec![rat(3, 1), rat(2, 1)]);
    lp.add_row(vec![rat(1, 1), rat(1, 1)], Relation::Le, rat(4, 1))
        .add_row(vec![rat(1, 1), rat(3, 1)], Relation::Le, rat(6, 1))
        .add_row(vec![rat(1, 1), rat(0, 1)], Relation::Le, rat(3, 1));

    let outcome = lp_solve(&lp, Sense::Maximize);
    let LpOutcome::Optimal { value, point } = &outcome else {
        return Err("expected an optimum".into());
    };
    println!("optimum {value} at ({}, {})", point[0], point[1]);
    assert_eq!(*value, rat(11, 1));
    assert!(lp.is_satisfied_by(point));

    let oracle = lp_enumerate_basic(&lp, Sense::Maximize)?;
    assert!(oracle.agrees_with(&outcome));

    // x + y ≥ 5 contradicts the first row.
    lp.add_row(vec![rat(1, 1), rat(1, 1)], Relation::Ge, rat(5, 1));
    if let LpOutcome::Infeasible { certificate } = lp_solve(&lp, Sense::Maximize) {
        assert!(lp.verify_farkas(&certificate));
        println!("infeasible once x + y >= 5 is added");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
