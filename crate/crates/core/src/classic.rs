//! Closed-form bounds: inclusion–exclusion, Boole–Fréchet and Bonferroni.

use std::fmt;

use num_traits::Zero;

use crate::instance::{BooleInstance, Interval, SubsetMask};
use crate::numerics::Rat;
use crate::{Error, Result};

fn signed_term(set: SubsetMask, b: &Rat) -> Rat {
    if set.len() % 2 == 1 {
        b.clone()
    } else {
        -b.clone()
    }
}

/// `Σ_{∅≠S⊆[n]} (−1)^{|S|+1} b_S`; needs every nonempty subset.
pub fn inclusion_exclusion(inst: &BooleInstance) -> Result<Rat> {
    if !inst.family().is_complete() {
        return Err(Error::IncompleteFamily(inst.n()));
    }
    Ok(inst.iter().map(|(s, b)| signed_term(s, b)).sum())
}

/// `[max_i b_{i}, min(1, Σ_i b_{i})]` from the singleton probabilities alone.
pub fn boole_frechet(inst: &BooleInstance) -> Result<Interval> {
    let mut max = Rat::zero();
    let mut sum = Rat::zero();
    for k in 1..=inst.n() {
        let b = inst
            .prob(SubsetMask::singleton(k))
            .ok_or(Error::MissingSingletons(k))?;
        if *b > max {
            max = b.clone();
        }
        sum += b;
    }
    let one = Rat::from_integer(1.into());
    Interval::new(max, sum.min(one))
}

/// Truncated inclusion–exclusion `Σ_{1≤|S|≤k} (−1)^{|S|+1} b_S`, unclipped.
///
/// An upper bound on the union probability for odd `k`, a lower bound for
/// even `k`.
pub fn bonferroni(inst: &BooleInstance, k: usize) -> Result<Rat> {
    let n = inst.n();
    if k == 0 || k > n {
        return Err(Error::InvalidDepth { k, n });
    }
    let mut total = Rat::zero();
    for s in SubsetMask::all(n).filter(|s| !s.is_empty() && s.len() <= k) {
        let b = inst.prob(s).ok_or_else(|| Error::MissingSets {
            k,
            missing: s.to_string(),
        })?;
        total += signed_term(s, b);
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundDirection {
    Upper,
    Lower,
}

impl BoundDirection {
    pub fn for_depth(k: usize) -> Self {
        if k % 2 == 1 {
            BoundDirection::Upper
        } else {
            BoundDirection::Lower
        }
    }
}

impl fmt::Display for BoundDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundDirection::Upper => "upper",
            BoundDirection::Lower => "lower",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BonferroniTerm {
    pub k: usize,
    pub value: Rat,
    pub direction: BoundDirection,
}

/// Bonferroni sums for every depth `k = 1, 2, …` whose sets are all present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BonferroniReport {
    pub terms: Vec<BonferroniTerm>,
}

impl BonferroniReport {
    pub fn new(inst: &BooleInstance) -> Self {
        let terms = (1..=inst.n())
            .map_while(|k| {
                bonferroni(inst, k).ok().map(|value| BonferroniTerm {
                    k,
                    value,
                    direction: BoundDirection::for_depth(k),
                })
            })
            .collect();
        BonferroniReport { terms }
    }
}
