//! Brute-force LP oracle: enumerate every basic solution.
//!
//! The program is rewritten in equality form `A x = b, x ≥ 0` (free variables
//! split, one slack per inequality). A nonempty polyhedron of that form has a
//! basic feasible solution, and a linear objective is unbounded on it exactly
//! when some extreme ray improves it. Extreme rays are the basic feasible
//! solutions of `A d = 0, 1ᵀd = 1, d ≥ 0`. Both sets are listed by trying every
//! choice of basis columns, so this shares no code path with the simplex.

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use super::linalg::{rref, solve_square};
use super::lp::{LinearProgram, LpOutcome, Relation, Sense, VarBound};
use super::Rat;
use crate::{Error, Result};

/// Largest number of variables, and of rows, accepted by [`lp_enumerate_basic`].
pub const ENUMERATION_LIMIT: usize = 12;

/// Outcome of [`lp_enumerate_basic`].
///
/// Unlike [`LpOutcome`], infeasibility carries no certificate: the oracle only
/// observes that no basis is feasible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumeratedOutcome {
    Optimal {
        value: Rat,
        point: Vec<Rat>,
    },
    Infeasible,
    /// Feasible bases exist but an extreme ray improves the objective.
    Unbounded {
        ray: Vec<Rat>,
    },
}

impl EnumeratedOutcome {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            EnumeratedOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    /// Same tag as `other`, and the same value when both are optimal.
    pub fn agrees_with(&self, other: &LpOutcome) -> bool {
        match (self, other) {
            (EnumeratedOutcome::Optimal { value: a, .. }, LpOutcome::Optimal { value: b, .. }) => {
                a == b
            }
            (EnumeratedOutcome::Infeasible, LpOutcome::Infeasible { .. }) => true,
            (EnumeratedOutcome::Unbounded { .. }, LpOutcome::Unbounded { .. }) => true,
            _ => false,
        }
    }
}

/// Solves `lp` by listing every basic solution.
///
/// Refuses programs with more than [`ENUMERATION_LIMIT`] variables or rows.
pub fn lp_enumerate_basic(lp: &LinearProgram, sense: Sense) -> Result<EnumeratedOutcome> {
    if lp.num_vars() > ENUMERATION_LIMIT {
        return Err(Error::GuardExceeded {
            what: "variable count",
            actual: lp.num_vars(),
            limit: ENUMERATION_LIMIT,
        });
    }
    if lp.rows().len() > ENUMERATION_LIMIT {
        return Err(Error::GuardExceeded {
            what: "row count",
            actual: lp.rows().len(),
            limit: ENUMERATION_LIMIT,
        });
    }

    let eq = EqualityForm::new(lp);
    let better = |a: &Rat, b: &Rat| match sense {
        Sense::Maximize => a > b,
        Sense::Minimize => a < b,
    };

    let Some(points) = basic_feasible_solutions(&eq.matrix, &eq.rhs, eq.width) else {
        return Ok(EnumeratedOutcome::Infeasible);
    };
    let mut best: Option<(Rat, Vec<Rat>)> = None;
    for std_point in points {
        let point = eq.to_original(&std_point);
        let value = lp.objective_value(&point);
        if best.as_ref().is_none_or(|(v, _)| better(&value, v)) {
            best = Some((value, point));
        }
    }
    let Some((value, point)) = best else {
        return Ok(EnumeratedOutcome::Infeasible);
    };

    // Extreme rays: A d = 0, Σ d = 1, d ≥ 0.
    let width = eq.width;
    let mut ray_matrix = eq.matrix.clone();
    ray_matrix.push(vec![Rat::one(); width]);
    let mut ray_rhs = vec![Rat::zero(); eq.matrix.len()];
    ray_rhs.push(Rat::one());
    for std_ray in basic_feasible_solutions(&ray_matrix, &ray_rhs, width).unwrap_or_default() {
        let ray = eq.to_original(&std_ray);
        if better(&lp.objective_value(&ray), &Rat::zero()) {
            return Ok(EnumeratedOutcome::Unbounded { ray });
        }
    }
    Ok(EnumeratedOutcome::Optimal { value, point })
}

/// All basic feasible solutions of `A x = b, x ≥ 0`, or `None` when the
/// equations themselves are inconsistent.
fn basic_feasible_solutions(
    matrix: &[Vec<Rat>],
    rhs: &[Rat],
    width: usize,
) -> Option<Vec<Vec<Rat>>> {
    let augmented: Vec<Vec<Rat>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| row.iter().cloned().chain([b.clone()]).collect())
        .collect();
    let (reduced, pivots) = rref(&augmented);
    if pivots.last() == Some(&width) {
        return None;
    }
    let rank = pivots.len();
    let a: Vec<Vec<Rat>> = reduced.iter().map(|row| row[..width].to_vec()).collect();
    let b: Vec<Rat> = reduced.iter().map(|row| row[width].clone()).collect();

    let mut found = Vec::new();
    for cols in (0..width).combinations(rank) {
        let square: Vec<Vec<Rat>> = a
            .iter()
            .map(|row| cols.iter().map(|&j| row[j].clone()).collect())
            .collect();
        let Some(values) = solve_square(&square, &b) else {
            continue;
        };
        if values.iter().any(Signed::is_negative) {
            continue;
        }
        let mut x = vec![Rat::zero(); width];
        for (&j, v) in cols.iter().zip(values) {
            x[j] = v;
        }
        if !found.contains(&x) {
            found.push(x);
        }
    }
    Some(found)
}

struct EqualityForm {
    /// Column of each original variable, and of its negative part if free.
    columns: Vec<(usize, Option<usize>)>,
    width: usize,
    matrix: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
}

impl EqualityForm {
    fn new(lp: &LinearProgram) -> Self {
        let mut columns = Vec::with_capacity(lp.num_vars());
        let mut next = 0;
        for bound in lp.var_bounds() {
            let minus = (*bound == VarBound::Free).then(|| next + 1);
            columns.push((next, minus));
            next += if minus.is_some() { 2 } else { 1 };
        }
        let slacks = lp
            .rows()
            .iter()
            .filter(|r| r.relation != Relation::Eq)
            .count();
        let width = next + slacks;
        let mut slack = next;
        let mut matrix = Vec::new();
        let mut rhs = Vec::new();
        for row in lp.rows() {
            let mut dense = vec![Rat::zero(); width];
            for (&(p, m), a) in columns.iter().zip(&row.coeffs) {
                dense[p] = a.clone();
                if let Some(m) = m {
                    dense[m] = -a.clone();
                }
            }
            match row.relation {
                Relation::Le => dense[slack] = Rat::one(),
                Relation::Ge => dense[slack] = -Rat::one(),
                Relation::Eq => {}
            }
            if row.relation != Relation::Eq {
                slack += 1;
            }
            matrix.push(dense);
            rhs.push(row.rhs.clone());
        }
        EqualityForm {
            columns,
            width,
            matrix,
            rhs,
        }
    }

    fn to_original(&self, x: &[Rat]) -> Vec<Rat> {
        self.columns
            .iter()
            .map(|&(p, m)| match m {
                Some(m) => &x[p] - &x[m],
                None => x[p].clone(),
            })
            .collect()
    }
}
