use std::fmt;

use num_traits::{Signed, Zero};

use super::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

impl Relation {
    pub(crate) fn flipped(self) -> Relation {
        match self {
            Relation::Eq => Relation::Eq,
            Relation::Le => Relation::Ge,
            Relation::Ge => Relation::Le,
        }
    }

    pub fn holds(self, lhs: &Rat, rhs: &Rat) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Ge => ">=",
        })
    }
}

/// Lower bound of a variable: either `x ≥ 0` or no bound at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum VarBound {
    #[default]
    NonNegative,
    Free,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub rhs: Rat,
}

impl Constraint {
    pub fn lhs(&self, point: &[Rat]) -> Rat {
        dot(&self.coeffs, point)
    }
}

/// A linear program over exact rationals.
///
/// Every row has exactly `num_vars` coefficients; variables are nonnegative
/// unless marked [`VarBound::Free`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    num_vars: usize,
    objective: Vec<Rat>,
    rows: Vec<Constraint>,
    var_bounds: Vec<VarBound>,
}

impl LinearProgram {
    /// A program with `num_vars` nonnegative variables, zero objective and no rows.
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            objective: vec![Rat::zero(); num_vars],
            rows: Vec::new(),
            var_bounds: vec![VarBound::NonNegative; num_vars],
        }
    }

    /// Panics if `objective.len() != num_vars`.
    pub fn with_objective(mut self, objective: Vec<Rat>) -> Self {
        assert_eq!(objective.len(), self.num_vars, "objective length");
        self.objective = objective;
        self
    }

    /// Appends a row. Panics if `coeffs.len() != num_vars`.
    pub fn add_row(&mut self, coeffs: Vec<Rat>, relation: Relation, rhs: Rat) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars, "row length");
        self.rows.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }

    pub fn set_bound(&mut self, var: usize, bound: VarBound) -> &mut Self {
        self.var_bounds[var] = bound;
        self
    }

    pub fn set_all_free(&mut self) -> &mut Self {
        self.var_bounds.fill(VarBound::Free);
        self
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn objective(&self) -> &[Rat] {
        &self.objective
    }

    pub fn rows(&self) -> &[Constraint] {
        &self.rows
    }

    pub fn var_bounds(&self) -> &[VarBound] {
        &self.var_bounds
    }

    pub fn objective_value(&self, point: &[Rat]) -> Rat {
        dot(&self.objective, point)
    }

    /// Exact check of every row and every variable bound at `point`.
    pub fn is_satisfied_by(&self, point: &[Rat]) -> bool {
        point.len() == self.num_vars
            && self
                .var_bounds
                .iter()
                .zip(point)
                .all(|(b, x)| *b == VarBound::Free || !x.is_negative())
            && self
                .rows
                .iter()
                .all(|row| row.relation.holds(&row.lhs(point), &row.rhs))
    }

    /// Checks that `multipliers` prove infeasibility.
    ///
    /// Multipliers must be `≥ 0` on `≤` rows, `≤ 0` on `≥` rows and are free on
    /// equalities, so the combined row `Σ yᵢ aᵢ·x ≤ Σ yᵢ bᵢ` is implied by the
    /// system. The certificate is valid when the combined coefficient of every
    /// nonnegative variable is `≥ 0`, of every free variable is `0`, and the
    /// combined right-hand side is negative.
    pub fn verify_farkas(&self, multipliers: &[Rat]) -> bool {
        if multipliers.len() != self.rows.len() {
            return false;
        }
        let signs_ok = self
            .rows
            .iter()
            .zip(multipliers)
            .all(|(row, y)| match row.relation {
                Relation::Eq => true,
                Relation::Le => !y.is_negative(),
                Relation::Ge => !y.is_positive(),
            });
        if !signs_ok {
            return false;
        }
        let combined = self.combine_rows(multipliers);
        let coeffs_ok = combined.iter().zip(&self.var_bounds).all(|(c, b)| match b {
            VarBound::NonNegative => !c.is_negative(),
            VarBound::Free => c.is_zero(),
        });
        let rhs: Rat = self
            .rows
            .iter()
            .zip(multipliers)
            .map(|(row, y)| &row.rhs * y)
            .sum();
        coeffs_ok && rhs.is_negative()
    }

    /// Checks that `ray` is a recession direction that strictly improves the
    /// objective in the given sense.
    pub fn verify_ray(&self, ray: &[Rat], sense: Sense) -> bool {
        if ray.len() != self.num_vars {
            return false;
        }
        let bounds_ok = self
            .var_bounds
            .iter()
            .zip(ray)
            .all(|(b, d)| *b == VarBound::Free || !d.is_negative());
        let rows_ok = self
            .rows
            .iter()
            .all(|row| row.relation.holds(&row.lhs(ray), &Rat::zero()));
        let gain = self.objective_value(ray);
        let improves = match sense {
            Sense::Maximize => gain.is_positive(),
            Sense::Minimize => gain.is_negative(),
        };
        bounds_ok && rows_ok && improves
    }

    fn combine_rows(&self, multipliers: &[Rat]) -> Vec<Rat> {
        let mut combined = vec![Rat::zero(); self.num_vars];
        for (row, y) in self.rows.iter().zip(multipliers) {
            if y.is_zero() {
                continue;
            }
            for (c, a) in combined.iter_mut().zip(&row.coeffs) {
                *c += y * a;
            }
        }
        combined
    }
}

pub(crate) fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Result of solving a [`LinearProgram`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        value: Rat,
        point: Vec<Rat>,
    },
    /// Row multipliers accepted by [`LinearProgram::verify_farkas`], scaled so
    /// the combined right-hand side is `−1`.
    Infeasible {
        certificate: Vec<Rat>,
    },
    /// A direction accepted by [`LinearProgram::verify_ray`].
    Unbounded {
        ray: Vec<Rat>,
    },
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rat> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn is_optimal(&self) -> bool {
        matches!(self, LpOutcome::Optimal { .. })
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible { .. })
    }

    pub fn is_unbounded(&self) -> bool {
        matches!(self, LpOutcome::Unbounded { .. })
    }
}
