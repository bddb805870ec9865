//! The atom linear program and the tight union-probability interval.
//!
//! Variables are the atom probabilities `x_T`, one per `T ⊆ [n]` in mask order.
//! The rows are `Σ_T x_T = 1` followed by `Σ_{T ⊇ S} x_T = b_S` for each `S` in
//! family order, and the objective is `Σ_{T ≠ ∅} x_T = 1 − x_∅`. Minimizing and
//! maximizing it gives the best-possible bounds on the union probability.

use num_traits::{One, Signed, Zero};

use crate::instance::{AtomDistribution, BooleInstance, Interval, SubsetMask};
use crate::numerics::{lp_solve, LinearProgram, LpOutcome, Rat, Relation, Sense};
use crate::{Error, Result};

/// Builds the atom program for `inst`: `2^n` nonnegative variables and
/// `1 + |F|` equality rows.
pub fn build_hailperin_lp(inst: &BooleInstance) -> LinearProgram {
    let n = inst.n();
    let num_atoms = 1usize << n;
    let objective = (0..num_atoms)
        .map(|t| if t == 0 { Rat::zero() } else { Rat::one() })
        .collect();
    let mut lp = LinearProgram::new(num_atoms).with_objective(objective);
    lp.add_row(vec![Rat::one(); num_atoms], Relation::Eq, Rat::one());
    for (s, b) in inst.iter() {
        let row = SubsetMask::all(n)
            .map(|t| {
                if s.is_subset_of(t) {
                    Rat::one()
                } else {
                    Rat::zero()
                }
            })
            .collect();
        lp.add_row(row, Relation::Eq, b.clone());
    }
    lp
}

/// Feasibility verdict with its evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(AtomDistribution),
    /// Farkas multipliers for the rows of [`build_hailperin_lp`]: the
    /// normalization row first, then one per family member.
    Infeasible(Vec<Rat>),
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Decides whether some atom distribution realizes `inst`.
pub fn is_feasible(inst: &BooleInstance) -> Feasibility {
    let lp = build_hailperin_lp(inst);
    match lp_solve(&lp, Sense::Minimize) {
        LpOutcome::Optimal { point, .. } => Feasibility::Feasible(witness(inst, &point)),
        LpOutcome::Infeasible { certificate } => Feasibility::Infeasible(certificate),
        LpOutcome::Unbounded { .. } => unreachable!("atom program is bounded"),
    }
}

/// Tight interval for the union probability, with realizations attaining
/// both endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsResult {
    pub interval: Interval,
    pub min_witness: AtomDistribution,
    pub max_witness: AtomDistribution,
}

/// Minimizes and maximizes `1 − x_∅` over all realizations of `inst`.
///
/// Witnesses are basic optimal solutions, so at most `|F| + 1` atoms carry
/// weight. Fails with [`Error::InfeasibleInstance`] when nothing realizes
/// `inst`.
pub fn union_bounds(inst: &BooleInstance) -> Result<BoundsResult> {
    let lp = build_hailperin_lp(inst);
    let (lo, min_point) = optimum(&lp, Sense::Minimize)?;
    let (hi, max_point) = optimum(&lp, Sense::Maximize)?;
    Ok(BoundsResult {
        interval: Interval::new(lo, hi).expect("union probabilities lie in [0, 1]"),
        min_witness: witness(inst, &min_point),
        max_witness: witness(inst, &max_point),
    })
}

/// Finds a realization of `inst` whose union probability is exactly `u`.
///
/// Fails with [`Error::NotInUnionPolytope`] when `inst` is realizable but not
/// at `u`, and with [`Error::InfeasibleInstance`] when it is not realizable.
pub fn realize_at(inst: &BooleInstance, u: &Rat) -> Result<AtomDistribution> {
    if u.is_negative() || *u > Rat::one() {
        return Err(Error::ProbabilityOutOfRange {
            set: "union".to_string(),
            value: u.to_string(),
        });
    }
    let mut lp = build_hailperin_lp(inst);
    let mut empty_atom = vec![Rat::zero(); lp.num_vars()];
    empty_atom[0] = Rat::one();
    lp.add_row(empty_atom, Relation::Eq, Rat::one() - u);
    match lp_solve(&lp, Sense::Minimize) {
        LpOutcome::Optimal { point, .. } => Ok(witness(inst, &point)),
        LpOutcome::Infeasible { .. } => {
            if is_feasible(inst).is_feasible() {
                Err(Error::NotInUnionPolytope(u.to_string()))
            } else {
                Err(Error::InfeasibleInstance)
            }
        }
        LpOutcome::Unbounded { .. } => unreachable!("atom program is bounded"),
    }
}

fn optimum(lp: &LinearProgram, sense: Sense) -> Result<(Rat, Vec<Rat>)> {
    match lp_solve(lp, sense) {
        LpOutcome::Optimal { value, point } => Ok((value, point)),
        LpOutcome::Infeasible { .. } => Err(Error::InfeasibleInstance),
        LpOutcome::Unbounded { .. } => unreachable!("atom program is bounded"),
    }
}

fn witness(inst: &BooleInstance, point: &[Rat]) -> AtomDistribution {
    AtomDistribution::from_dense(inst.n(), point).expect("simplex point is a distribution")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{parse_instance, SetFamily};
    use crate::numerics::{lp_enumerate_basic, rat};

    fn inst(n: usize, entries: &[(&[usize], Rat)]) -> BooleInstance {
        let members = entries
            .iter()
            .map(|(e, _)| SubsetMask::from_elements(n, e).unwrap())
            .collect();
        BooleInstance::new(
            SetFamily::new(n, members).unwrap(),
            entries.iter().map(|(_, p)| p.clone()).collect(),
        )
        .unwrap()
    }

    fn two_events() -> BooleInstance {
        inst(
            2,
            &[(&[1], rat(1, 2)), (&[2], rat(1, 2)), (&[1, 2], rat(1, 4))],
        )
    }

    #[test]
    fn program_shape() {
        let lp = build_hailperin_lp(&two_events());
        assert_eq!((lp.num_vars(), lp.rows().len()), (4, 4));
        assert!(lp.rows().iter().all(|r| r.relation == Relation::Eq));
        // x_{1} + x_{1,2} = b_{1}
        assert_eq!(
            lp.rows()[1].coeffs,
            vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 1)]
        );
        assert_eq!(lp.objective()[0], rat(0, 1));

        let lp = build_hailperin_lp(&inst(1, &[(&[1], rat(1, 3))]));
        assert_eq!((lp.num_vars(), lp.rows().len()), (2, 2));

        let singles =
            BooleInstance::new(SetFamily::singletons(3).unwrap(), vec![rat(1, 2); 3]).unwrap();
        let lp = build_hailperin_lp(&singles);
        assert_eq!((lp.num_vars(), lp.rows().len()), (8, 4));
    }

    #[test]
    fn feasibility_verdicts() {
        // Two disjoint halves: b_{1} = b_{2} = 1/2, b_{1,2} = 0.
        let gadget = inst(
            2,
            &[(&[1], rat(1, 2)), (&[2], rat(1, 2)), (&[1, 2], rat(0, 1))],
        );
        let Feasibility::Feasible(x) = is_feasible(&gadget) else {
            panic!()
        };
        assert!(x.realizes(&gadget));
        assert_eq!(x.weight(SubsetMask::singleton(1)), rat(1, 2));
        assert_eq!(x.weight(SubsetMask::singleton(2)), rat(1, 2));

        let bad = inst(2, &[(&[1], rat(1, 10)), (&[1, 2], rat(1, 2))]);
        let Feasibility::Infeasible(cert) = is_feasible(&bad) else {
            panic!()
        };
        assert!(build_hailperin_lp(&bad).verify_farkas(&cert));

        let both_certain = inst(
            2,
            &[(&[1], rat(1, 1)), (&[2], rat(1, 1)), (&[1, 2], rat(0, 1))],
        );
        assert!(!is_feasible(&both_certain).is_feasible());
        let oracle =
            lp_enumerate_basic(&build_hailperin_lp(&both_certain), Sense::Minimize).unwrap();
        assert_eq!(oracle, crate::numerics::EnumeratedOutcome::Infeasible);
    }

    #[test]
    fn bounds_from_singletons_match_boole_frechet() {
        let i = inst(2, &[(&[1], rat(1, 2)), (&[2], rat(1, 3))]);
        let b = union_bounds(&i).unwrap();
        assert_eq!(b.interval, Interval::new(rat(1, 2), rat(5, 6)).unwrap());
        assert!(b.min_witness.realizes(&i) && b.max_witness.realizes(&i));
        assert_eq!(b.min_witness.union_probability(), rat(1, 2));
        assert_eq!(b.max_witness.union_probability(), rat(5, 6));
    }

    #[test]
    fn complete_family_gives_a_point() {
        let b = union_bounds(&two_events()).unwrap();
        assert_eq!(b.interval.lo, rat(3, 4));
        assert_eq!(b.interval.hi, rat(3, 4));
    }

    #[test]
    fn infeasible_instance_has_no_bounds() {
        let bad = inst(2, &[(&[1], rat(1, 10)), (&[1, 2], rat(1, 2))]);
        assert_eq!(union_bounds(&bad), Err(Error::InfeasibleInstance));
        assert_eq!(realize_at(&bad, &rat(1, 2)), Err(Error::InfeasibleInstance));
    }

    #[test]
    fn realizations_at_prescribed_union() {
        let x = realize_at(&two_events(), &rat(3, 4)).unwrap();
        assert_eq!(x.weight(SubsetMask::EMPTY), rat(1, 4));
        assert!(x.realizes(&two_events()));
        assert_eq!(
            realize_at(&two_events(), &rat(1, 2)),
            Err(Error::NotInUnionPolytope("1/2".to_string()))
        );

        let i = inst(2, &[(&[1], rat(1, 2)), (&[2], rat(1, 3))]);
        let x = realize_at(&i, &rat(2, 3)).unwrap();
        assert_eq!(x.union_probability(), rat(2, 3));
        assert!(x.realizes(&i));
        assert!(realize_at(&i, &rat(3, 2)).is_err());
    }

    #[test]
    fn parsed_instance_bounds() {
        let i = parse_instance(
            r#"{"n": 3, "constraints": [
            {"set": [1], "p": "1/2"}, {"set": [2], "p": "1/2"}, {"set": [3], "p": "1/2"},
            {"set": [1, 2, 3], "p": "1/4"}]}"#,
        )
        .unwrap();
        let b = union_bounds(&i).unwrap();
        // Beyond the shared 1/4, each event needs 1/4 more from atoms of size
        // at most two: at least 3/8 extra mass, so lo = 5/8; hi = 1/4 + 3/4.
        assert_eq!(b.interval.lo, rat(5, 8));
        assert_eq!(b.interval.hi, rat(1, 1));
    }
}
