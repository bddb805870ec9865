//! Vertex representations of the Venn, correlation and union polytopes.
//!
//! For a family `F` and `T ⊆ [n]`, the indicator vector `ζ(T)` has entry
//! `[S ⊆ T]` for each `S ∈ F`. The three polytopes are convex hulls of
//!
//! * Venn `τ(F)`: `(ζ(T), e_T)` over coordinates `(b_S…, x_T…)`,
//! * correlation `ρ(F)`: `ζ(T)` over coordinates `(b_S…)`,
//! * union `σ(F)`: `(ζ(T), [T = ∅])` over coordinates `(b_S…, x_∅)`,
//!
//! with `T` ranging over all subsets of `[n]`. Duplicate projections are
//! dropped, keeping the first occurrence in mask order. Polytopes are kept in
//! vertex form only; membership is decided by a linear program.

use std::collections::{HashMap, HashSet};

use num_traits::{One, Zero};

use crate::instance::{SetFamily, SubsetMask};
use crate::numerics::{linalg, lp_solve, LinearProgram, LpOutcome, Rat, Relation, Sense};
use crate::{Error, Result};

/// A polytope given by its vertex list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    pub coord_labels: Vec<String>,
    pub vertices: Vec<Vec<Rat>>,
}

impl VPolytope {
    pub fn dim_ambient(&self) -> usize {
        self.coord_labels.len()
    }

    /// Keeps the coordinates at `keep` (in that order) and drops repeated
    /// vertices.
    pub fn project(&self, keep: &[usize]) -> VPolytope {
        let vertices = dedup(
            self.vertices
                .iter()
                .map(|v| keep.iter().map(|&i| v[i].clone()).collect()),
        );
        VPolytope {
            coord_labels: keep.iter().map(|&i| self.coord_labels[i].clone()).collect(),
            vertices,
        }
    }

    /// Whether every vertex entry is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.vertices
            .iter()
            .flatten()
            .all(|x| x.is_zero() || x.is_one())
    }

    /// Header line of labels, then one whitespace-separated line per vertex.
    pub fn dump(&self) -> String {
        let mut out = self.coord_labels.join(" ");
        out.push('\n');
        for v in &self.vertices {
            let line: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

fn dedup(vertices: impl Iterator<Item = Vec<Rat>>) -> Vec<Vec<Rat>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for v in vertices {
        if seen.insert(v.clone()) {
            out.push(v);
        }
    }
    out
}

fn indicator(family: &SetFamily, t: SubsetMask) -> impl Iterator<Item = Rat> + '_ {
    family.members().iter().map(move |s| {
        if s.is_subset_of(t) {
            Rat::one()
        } else {
            Rat::zero()
        }
    })
}

fn b_labels(family: &SetFamily) -> Vec<String> {
    family.members().iter().map(|s| format!("b{s}")).collect()
}

fn bit(flag: bool) -> Rat {
    if flag {
        Rat::one()
    } else {
        Rat::zero()
    }
}

/// The Venn polytope: `2^n` vertices `(ζ(T), e_T)`.
pub fn venn_vertices(family: &SetFamily) -> VPolytope {
    let n = family.n();
    let mut coord_labels = b_labels(family);
    coord_labels.extend(SubsetMask::all(n).map(|t| format!("x{t}")));
    let vertices = SubsetMask::all(n)
        .map(|t| {
            indicator(family, t)
                .chain(SubsetMask::all(n).map(|u| bit(u == t)))
                .collect()
        })
        .collect();
    VPolytope {
        coord_labels,
        vertices,
    }
}

/// The correlation polytope: distinct vectors `ζ(T)`.
pub fn correlation_vertices(family: &SetFamily) -> VPolytope {
    VPolytope {
        coord_labels: b_labels(family),
        vertices: dedup(SubsetMask::all(family.n()).map(|t| indicator(family, t).collect())),
    }
}

/// The union polytope: distinct vectors `(ζ(T), [T = ∅])`.
pub fn union_vertices(family: &SetFamily) -> VPolytope {
    let mut coord_labels = b_labels(family);
    coord_labels.push(format!("x{}", SubsetMask::EMPTY));
    VPolytope {
        coord_labels,
        vertices: dedup(
            SubsetMask::all(family.n())
                .map(|t| indicator(family, t).chain([bit(t.is_empty())]).collect()),
        ),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VertexCounts {
    pub rho: usize,
    pub sigma: usize,
}

/// Vertex counts of `ρ(F)` and `σ(F)` from the partition of `2^[n]` into
/// classes of equal signature `(⟦S ⊆ T⟧)_{S ∈ F}`.
///
/// The classes are the cells of the meet of the two-block partitions
/// `{↑S, 2^[n] ∖ ↑S}`. The union polytope separates `∅` from the rest of its
/// cell, so it has one extra vertex exactly when that cell is not `{∅}`.
pub fn vertex_count_formula(family: &SetFamily) -> VertexCounts {
    let mut cells: HashMap<Vec<bool>, usize> = HashMap::new();
    let mut empty_cell_size = 0;
    let empty_sig: Vec<bool> = vec![false; family.len()];
    for t in SubsetMask::all(family.n()) {
        let sig: Vec<bool> = family.members().iter().map(|s| s.is_subset_of(t)).collect();
        if sig == empty_sig {
            empty_cell_size += 1;
        }
        *cells.entry(sig).or_default() += 1;
    }
    let rho = cells.len();
    VertexCounts {
        rho,
        sigma: rho + usize::from(empty_cell_size > 1),
    }
}

/// Affine dimension of the vertex set, by exact elimination on the
/// differences from the first vertex.
pub fn affine_dim(polytope: &VPolytope) -> Result<usize> {
    let first = polytope.vertices.first().ok_or(Error::EmptyPolytope)?;
    let diffs: Vec<Vec<Rat>> = polytope.vertices[1..]
        .iter()
        .map(|v| v.iter().zip(first).map(|(a, b)| a - b).collect())
        .collect();
    Ok(linalg::rank(&diffs))
}

/// Whether `point` is a convex combination of the vertices.
///
/// Solves the feasibility program `Σ λ_v v = point, Σ λ_v = 1, λ ≥ 0`.
pub fn hull_membership(polytope: &VPolytope, point: &[Rat]) -> Result<bool> {
    if point.len() != polytope.dim_ambient() {
        return Err(Error::DimensionMismatch {
            expected: polytope.dim_ambient(),
            actual: point.len(),
        });
    }
    let k = polytope.vertices.len();
    if k == 0 {
        return Ok(false);
    }
    let mut lp = LinearProgram::new(k);
    lp.add_row(vec![Rat::one(); k], Relation::Eq, Rat::one());
    for (coord, target) in point.iter().enumerate() {
        let row = polytope.vertices.iter().map(|v| v[coord].clone()).collect();
        lp.add_row(row, Relation::Eq, target.clone());
    }
    Ok(match lp_solve(&lp, Sense::Minimize) {
        LpOutcome::Optimal { .. } => true,
        LpOutcome::Infeasible { .. } => false,
        LpOutcome::Unbounded { .. } => unreachable!("zero objective"),
    })
}

/// Coordinate indices of the `b` block and of `x_∅` inside the Venn polytope,
/// for projecting it onto `ρ(F)` and `σ(F)`.
pub fn venn_projection_indices(family: &SetFamily) -> (Vec<usize>, Vec<usize>) {
    let b: Vec<usize> = (0..family.len()).collect();
    let mut b_and_empty = b.clone();
    b_and_empty.push(family.len());
    (b, b_and_empty)
}
