//! Dense two-phase simplex over exact rationals.
//!
//! The program is brought into equality form `A x = b, x ≥ 0, b ≥ 0` by
//! splitting free variables, negating rows with a negative right-hand side and
//! adding one slack per inequality. Every row then gets an artificial column,
//! so the artificial block of the tableau always holds the current basis
//! inverse; phase-one duals (and hence Farkas certificates) are read from it.
//! Entering and leaving variables follow Bland's rule, which rules out cycling.

use num_traits::{One, Signed, Zero};

use super::lp::{LinearProgram, LpOutcome, Relation, Sense, VarBound};
use super::Rat;

/// Solves `lp` exactly.
///
/// Optimal points satisfy every row with exact equality/inequality; infeasible
/// programs come with a Farkas certificate and unbounded ones with an improving
/// ray (see [`LpOutcome`]).
pub fn lp_solve(lp: &LinearProgram, sense: Sense) -> LpOutcome {
    let form = StandardForm::new(lp);
    let mut tab = Tableau::new(&form);

    let phase_one_cost: Vec<Rat> = (0..tab.num_cols)
        .map(|j| {
            if form.is_artificial(j) {
                Rat::one()
            } else {
                Rat::zero()
            }
        })
        .collect();
    tab.set_costs(&phase_one_cost);
    let status = tab.run(tab.num_cols);
    debug_assert!(
        matches!(status, Pivoting::Optimal),
        "phase one is bounded below"
    );

    let infeasibility: Rat = tab
        .basis
        .iter()
        .zip(&tab.rows)
        .filter(|(&col, _)| form.is_artificial(col))
        .map(|(_, row)| row[tab.num_cols].clone())
        .sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible {
            certificate: farkas_certificate(lp, &form, &tab, &phase_one_cost),
        };
    }

    tab.drive_out_artificials(&form);

    let sign = match sense {
        Sense::Minimize => Rat::one(),
        Sense::Maximize => -Rat::one(),
    };
    let mut phase_two_cost = vec![Rat::zero(); tab.num_cols];
    for (j, c) in lp.objective().iter().enumerate() {
        let c = c * &sign;
        if let Some(minus) = form.minus_col[j] {
            phase_two_cost[minus] = -c.clone();
        }
        phase_two_cost[form.plus_col[j]] = c;
    }
    tab.set_costs(&phase_two_cost);

    match tab.run(form.first_artificial) {
        Pivoting::Optimal => {
            let mut std_point = vec![Rat::zero(); tab.num_cols];
            for (row, &col) in tab.rows.iter().zip(&tab.basis) {
                std_point[col] = row[tab.num_cols].clone();
            }
            let point = form.to_original(&std_point);
            LpOutcome::Optimal {
                value: lp.objective_value(&point),
                point,
            }
        }
        Pivoting::Unbounded(entering) => {
            let mut direction = vec![Rat::zero(); tab.num_cols];
            direction[entering] = Rat::one();
            for (row, &col) in tab.rows.iter().zip(&tab.basis) {
                direction[col] = -row[entering].clone();
            }
            LpOutcome::Unbounded {
                ray: form.to_original(&direction),
            }
        }
    }
}

/// Phase-one duals `y = c_Bᵀ B⁻¹` give `Aᵀy ≤ 0` and `bᵀy > 0` on the normalized
/// rows; `−y`, with row negations undone, is the certificate.
fn farkas_certificate(
    lp: &LinearProgram,
    form: &StandardForm,
    tab: &Tableau,
    cost: &[Rat],
) -> Vec<Rat> {
    let m = form.num_rows;
    let mut cert: Vec<Rat> = (0..m)
        .map(|k| {
            let art = form.first_artificial + k;
            let dual: Rat = tab
                .basis
                .iter()
                .zip(&tab.rows)
                .map(|(&col, row)| &cost[col] * &row[art])
                .sum();
            -dual * &form.row_sign[k]
        })
        .collect();
    let rhs: Rat = lp
        .rows()
        .iter()
        .zip(&cert)
        .map(|(row, y)| &row.rhs * y)
        .sum();
    let scale = -rhs.recip();
    for y in &mut cert {
        *y *= &scale;
    }
    cert
}

struct StandardForm {
    num_rows: usize,
    plus_col: Vec<usize>,
    minus_col: Vec<Option<usize>>,
    first_artificial: usize,
    row_sign: Vec<Rat>,
    /// Normalized `A | b` without artificial columns.
    matrix: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
}

impl StandardForm {
    fn new(lp: &LinearProgram) -> Self {
        let mut plus_col = Vec::with_capacity(lp.num_vars());
        let mut minus_col = Vec::with_capacity(lp.num_vars());
        let mut next = 0;
        for bound in lp.var_bounds() {
            plus_col.push(next);
            next += 1;
            minus_col.push(match bound {
                VarBound::Free => {
                    next += 1;
                    Some(next - 1)
                }
                VarBound::NonNegative => None,
            });
        }
        let num_slacks = lp
            .rows()
            .iter()
            .filter(|r| r.relation != Relation::Eq)
            .count();
        let first_artificial = next + num_slacks;

        let mut matrix = Vec::with_capacity(lp.rows().len());
        let mut rhs = Vec::with_capacity(lp.rows().len());
        let mut row_sign = Vec::with_capacity(lp.rows().len());
        let mut slack = next;
        for row in lp.rows() {
            let negate = row.rhs.is_negative();
            let sign = if negate { -Rat::one() } else { Rat::one() };
            let relation = if negate {
                row.relation.flipped()
            } else {
                row.relation
            };
            let mut dense = vec![Rat::zero(); first_artificial];
            for (j, a) in row.coeffs.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let a = a * &sign;
                if let Some(minus) = minus_col[j] {
                    dense[minus] = -a.clone();
                }
                dense[plus_col[j]] = a;
            }
            match relation {
                Relation::Le => {
                    dense[slack] = Rat::one();
                    slack += 1;
                }
                Relation::Ge => {
                    dense[slack] = -Rat::one();
                    slack += 1;
                }
                Relation::Eq => {}
            }
            matrix.push(dense);
            rhs.push(&row.rhs * &sign);
            row_sign.push(sign);
        }

        StandardForm {
            num_rows: lp.rows().len(),
            plus_col,
            minus_col,
            first_artificial,
            row_sign,
            matrix,
            rhs,
        }
    }

    fn is_artificial(&self, col: usize) -> bool {
        col >= self.first_artificial
    }

    fn to_original(&self, std_values: &[Rat]) -> Vec<Rat> {
        self.plus_col
            .iter()
            .zip(&self.minus_col)
            .map(|(&p, m)| match m {
                Some(m) => &std_values[p] - &std_values[*m],
                None => std_values[p].clone(),
            })
            .collect()
    }
}

enum Pivoting {
    Optimal,
    /// Column that can increase without bound.
    Unbounded(usize),
}

struct Tableau {
    num_cols: usize,
    /// `num_rows` rows of `num_cols + 1` entries, right-hand side last.
    rows: Vec<Vec<Rat>>,
    /// Reduced costs; last entry is minus the objective value.
    reduced: Vec<Rat>,
    basis: Vec<usize>,
}

impl Tableau {
    fn new(form: &StandardForm) -> Self {
        let m = form.num_rows;
        let num_cols = form.first_artificial + m;
        let rows = form
            .matrix
            .iter()
            .zip(&form.rhs)
            .enumerate()
            .map(|(i, (dense, b))| {
                let mut row = Vec::with_capacity(num_cols + 1);
                row.extend(dense.iter().cloned());
                row.extend((0..m).map(|k| if k == i { Rat::one() } else { Rat::zero() }));
                row.push(b.clone());
                row
            })
            .collect();
        Tableau {
            num_cols,
            rows,
            reduced: vec![Rat::zero(); num_cols + 1],
            basis: (0..m).map(|i| form.first_artificial + i).collect(),
        }
    }

    fn set_costs(&mut self, cost: &[Rat]) {
        let mut reduced: Vec<Rat> = cost.iter().cloned().chain([Rat::zero()]).collect();
        for (row, &col) in self.rows.iter().zip(&self.basis) {
            let cb = &cost[col];
            if cb.is_zero() {
                continue;
            }
            for (r, a) in reduced.iter_mut().zip(row) {
                if !a.is_zero() {
                    *r -= cb * a;
                }
            }
        }
        self.reduced = reduced;
    }

    /// Minimizes with Bland's rule, letting only columns `< allowed` enter.
    fn run(&mut self, allowed: usize) -> Pivoting {
        loop {
            let Some(entering) = (0..allowed).find(|&j| self.reduced[j].is_negative()) else {
                return Pivoting::Optimal;
            };
            let rhs = self.num_cols;
            let mut leaving: Option<(usize, Rat)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                let a = &row[entering];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / a;
                let better = match &leaving {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio
                            || (ratio == *best_ratio && self.basis[i] < self.basis[*best])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            match leaving {
                Some((row, _)) => self.pivot(row, entering),
                None => return Pivoting::Unbounded(entering),
            }
        }
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for a in self.rows[row].iter_mut() {
            if !a.is_zero() {
                *a *= &inv;
            }
        }
        let pivot_row = std::mem::take(&mut self.rows[row]);
        let support: Vec<usize> = (0..pivot_row.len())
            .filter(|&j| !pivot_row[j].is_zero())
            .collect();
        let eliminate = |target: &mut Vec<Rat>| {
            let factor = target[col].clone();
            if factor.is_zero() {
                return;
            }
            for &j in &support {
                target[j] -= &factor * &pivot_row[j];
            }
        };
        for (i, other) in self.rows.iter_mut().enumerate() {
            if i != row {
                eliminate(other);
            }
        }
        eliminate(&mut self.reduced);
        self.rows[row] = pivot_row;
        self.basis[row] = col;
    }

    /// After a feasible phase one, pivots every artificial still in the basis
    /// (necessarily at level zero) out on any nonzero structural entry. Rows
    /// with no such entry are redundant and keep their artificial, which can
    /// never move again.
    fn drive_out_artificials(&mut self, form: &StandardForm) {
        for i in 0..self.rows.len() {
            if !form.is_artificial(self.basis[i]) {
                continue;
            }
            if let Some(col) = (0..form.first_artificial).find(|&j| !self.rows[i][j].is_zero()) {
                self.pivot(i, col);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat(x, 1)).collect()
    }

    #[test]
    fn maximize_on_simplex_edge() {
        let mut lp = LinearProgram::new(2).with_objective(ints(&[1, 0]));
        lp.add_row(ints(&[1, 1]), Relation::Eq, rat(1, 1));
        let out = lp_solve(&lp, Sense::Maximize);
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: rat(1, 1),
                point: ints(&[1, 0])
            }
        );
    }

    #[test]
    fn infeasible_bound_gives_certificate() {
        let mut lp = LinearProgram::new(1).with_objective(ints(&[1]));
        lp.add_row(ints(&[1]), Relation::Le, rat(-1, 1));
        let out = lp_solve(&lp, Sense::Minimize);
        let LpOutcome::Infeasible { certificate } = out else {
            panic!("expected infeasible, got {out:?}");
        };
        assert!(lp.verify_farkas(&certificate));
        assert_eq!(certificate, ints(&[1]));
    }

    #[test]
    fn free_variable_without_rows_is_unbounded() {
        let mut lp = LinearProgram::new(1).with_objective(ints(&[1]));
        lp.set_bound(0, VarBound::Free);
        let out = lp_solve(&lp, Sense::Maximize);
        let LpOutcome::Unbounded { ray } = out else {
            panic!("expected unbounded, got {out:?}");
        };
        assert!(lp.verify_ray(&ray, Sense::Maximize));
        assert!(lp_solve(&lp, Sense::Minimize).is_unbounded());
    }

    #[test]
    fn free_variables_reach_negative_optimum() {
        // min x + y, x ≥ -3, y - x ≥ -1 (both free): optimum at x = -3, y = -4.
        let mut lp = LinearProgram::new(2).with_objective(ints(&[1, 1]));
        lp.set_all_free();
        lp.add_row(ints(&[1, 0]), Relation::Ge, rat(-3, 1));
        lp.add_row(ints(&[-1, 1]), Relation::Ge, rat(-1, 1));
        let out = lp_solve(&lp, Sense::Minimize);
        assert_eq!(out.value(), Some(&rat(-7, 1)));
    }

    #[test]
    fn redundant_equalities_are_tolerated() {
        let mut lp = LinearProgram::new(3).with_objective(ints(&[1, 2, 3]));
        lp.add_row(ints(&[1, 1, 1]), Relation::Eq, rat(1, 1));
        lp.add_row(ints(&[2, 2, 2]), Relation::Eq, rat(2, 1));
        lp.add_row(ints(&[0, 1, 1]), Relation::Eq, rat(1, 2));
        let out = lp_solve(&lp, Sense::Maximize);
        let LpOutcome::Optimal { value, point } = out else {
            panic!()
        };
        assert_eq!(value, rat(2, 1));
        assert!(lp.is_satisfied_by(&point));
    }

    #[test]
    fn inconsistent_equalities_are_certified() {
        let mut lp = LinearProgram::new(2);
        lp.add_row(ints(&[1, 1]), Relation::Eq, rat(1, 1));
        lp.add_row(ints(&[1, 1]), Relation::Eq, rat(2, 1));
        let LpOutcome::Infeasible { certificate } = lp_solve(&lp, Sense::Minimize) else {
            panic!()
        };
        assert!(lp.verify_farkas(&certificate));
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example, which cycles under the textbook largest-coefficient rule.
        let mut lp = LinearProgram::new(4).with_objective(vec![
            rat(-3, 4),
            rat(150, 1),
            rat(-1, 50),
            rat(6, 1),
        ]);
        lp.add_row(
            vec![rat(1, 4), rat(-60, 1), rat(-1, 25), rat(9, 1)],
            Relation::Le,
            rat(0, 1),
        );
        lp.add_row(
            vec![rat(1, 2), rat(-90, 1), rat(-1, 50), rat(3, 1)],
            Relation::Le,
            rat(0, 1),
        );
        lp.add_row(ints(&[0, 0, 1, 0]), Relation::Le, rat(1, 1));
        let out = lp_solve(&lp, Sense::Minimize);
        assert_eq!(out.value(), Some(&rat(-1, 20)));
    }
}
