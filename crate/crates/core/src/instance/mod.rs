//! Set families, instances and atom distributions.
//!
//! Elements of the ground set are `1..=n`. A [`SubsetMask`] stores element `i`
//! in bit `i − 1`, so masks compare in the same order as their bit patterns and
//! `0..2^n` enumerates every subset of `[n]`.

mod document;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::numerics::Rat;
use crate::{Error, Result};

pub use document::{
    atoms_to_json, family_to_json, instance_to_json, parse_atoms, parse_family, parse_instance,
};

/// Largest supported ground set. The atom program has `2^n` variables.
pub const MAX_GROUND_SET: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// `{element}`, with `element` 1-based.
    pub fn singleton(element: usize) -> Self {
        debug_assert!((1..=32).contains(&element));
        SubsetMask(1 << (element - 1))
    }

    /// Builds a subset of `[n]` from 1-based elements.
    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        for &e in elements {
            if e == 0 || e > n || e > 32 {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            let bit = 1 << (e - 1);
            if bits & bit != 0 {
                return Err(Error::RepeatedElement(e));
            }
            bits |= bit;
        }
        Ok(SubsetMask(bits))
    }

    /// `[n]` itself.
    pub fn full(n: usize) -> Self {
        SubsetMask(if n >= 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, element: usize) -> bool {
        (1..=32).contains(&element) && self.0 & (1 << (element - 1)) != 0
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    /// Sorted 1-based elements.
    pub fn elements(self) -> Vec<usize> {
        (0..32)
            .filter(|b| self.0 & (1 << b) != 0)
            .map(|b| b + 1)
            .collect()
    }

    /// Every subset of `[n]`, in increasing mask order.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> {
        (0..1u32 << n).map(SubsetMask)
    }

    /// Every superset of `self` inside `[n]` (the up-set of `self`).
    pub fn supersets(self, n: usize) -> impl Iterator<Item = SubsetMask> {
        SubsetMask::all(n).filter(move |t| self.is_subset_of(*t))
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements().iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A nonempty list of distinct nonempty subsets of `[n]`, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetFamily {
    n: usize,
    members: Vec<SubsetMask>,
}

impl SetFamily {
    pub fn new(n: usize, members: Vec<SubsetMask>) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge {
                n,
                cap: MAX_GROUND_SET,
            });
        }
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let universe = SubsetMask::full(n);
        for (i, s) in members.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::EmptySet);
            }
            if !s.is_subset_of(universe) {
                let element = s.elements().into_iter().find(|&e| e > n).unwrap_or(0);
                return Err(Error::ElementOutOfRange { element, n });
            }
            if members[..i].contains(s) {
                return Err(Error::DuplicateSet(s.to_string()));
            }
        }
        Ok(SetFamily { n, members })
    }

    /// `{1}, …, {n}`.
    pub fn singletons(n: usize) -> Result<Self> {
        SetFamily::new(n, (1..=n).map(SubsetMask::singleton).collect())
    }

    /// Every nonempty subset of `[n]`, in mask order.
    pub fn all_nonempty(n: usize) -> Result<Self> {
        SetFamily::up_to_size(n, n)
    }

    /// Every subset `S` of `[n]` with `1 ≤ |S| ≤ k`, in mask order.
    pub fn up_to_size(n: usize, k: usize) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge {
                n,
                cap: MAX_GROUND_SET,
            });
        }
        let members = SubsetMask::all(n)
            .filter(|s| !s.is_empty() && s.len() <= k)
            .collect();
        SetFamily::new(n, members)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, set: SubsetMask) -> bool {
        self.members.contains(&set)
    }

    pub fn index_of(&self, set: SubsetMask) -> Option<usize> {
        self.members.iter().position(|&s| s == set)
    }

    /// Whether this is the whole of `2^[n] ∖ {∅}`.
    pub fn is_complete(&self) -> bool {
        self.members.len() + 1 == 1usize << self.n
    }

    /// Whether every singleton `{k}`, `k ∈ [n]`, is a member.
    pub fn has_all_singletons(&self) -> bool {
        (1..=self.n).all(|k| self.contains(SubsetMask::singleton(k)))
    }
}

/// A family with a probability `b_S ∈ [0, 1]` for each member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleInstance {
    family: SetFamily,
    probs: Vec<Rat>,
}

impl BooleInstance {
    /// `probs[i]` is the probability of `family.members()[i]`.
    pub fn new(family: SetFamily, probs: Vec<Rat>) -> Result<Self> {
        if probs.len() != family.len() {
            return Err(Error::LengthMismatch {
                expected: family.len(),
                actual: probs.len(),
            });
        }
        for (s, p) in family.members().iter().zip(&probs) {
            if p.is_negative() || *p > Rat::one() {
                return Err(Error::ProbabilityOutOfRange {
                    set: s.to_string(),
                    value: p.to_string(),
                });
            }
        }
        Ok(BooleInstance { family, probs })
    }

    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn n(&self) -> usize {
        self.family.n()
    }

    pub fn probs(&self) -> &[Rat] {
        &self.probs
    }

    pub fn prob(&self, set: SubsetMask) -> Option<&Rat> {
        self.family.index_of(set).map(|i| &self.probs[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &Rat)> {
        self.family.members().iter().copied().zip(&self.probs)
    }
}

/// Pairs `(S, T)` with `S ⊊ T` both in the family and `b_S < b_T`.
///
/// Since `B_T ⊆ B_S`, any such pair makes the instance infeasible; an empty
/// list does not by itself make it feasible.
pub fn check_monotone(inst: &BooleInstance) -> Vec<(SubsetMask, SubsetMask)> {
    let mut violations = Vec::new();
    for (s, bs) in inst.iter() {
        for (t, bt) in inst.iter() {
            if s != t && s.is_subset_of(t) && bs < bt {
                violations.push((s, t));
            }
        }
    }
    violations
}

/// A probability distribution on the atoms `X_T`, `T ⊆ [n]`.
///
/// Only atoms with positive weight are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomDistribution {
    n: usize,
    weights: BTreeMap<SubsetMask, Rat>,
}

impl AtomDistribution {
    pub fn new(n: usize, weights: impl IntoIterator<Item = (SubsetMask, Rat)>) -> Result<Self> {
        if n > MAX_GROUND_SET {
            return Err(Error::GroundSetTooLarge {
                n,
                cap: MAX_GROUND_SET,
            });
        }
        let universe = SubsetMask::full(n);
        let mut map: BTreeMap<SubsetMask, Rat> = BTreeMap::new();
        for (t, w) in weights {
            if !t.is_subset_of(universe) {
                let element = t.elements().into_iter().find(|&e| e > n).unwrap_or(0);
                return Err(Error::ElementOutOfRange { element, n });
            }
            if w.is_negative() {
                return Err(Error::NegativeWeight(w.to_string()));
            }
            *map.entry(t).or_insert_with(Rat::zero) += w;
        }
        map.retain(|_, w| !w.is_zero());
        let total: Rat = map.values().sum();
        if !total.is_one() {
            return Err(Error::NotNormalized(total.to_string()));
        }
        Ok(AtomDistribution { n, weights: map })
    }

    /// From a dense vector indexed by mask value, `dense.len() == 2^n`.
    pub fn from_dense(n: usize, dense: &[Rat]) -> Result<Self> {
        if dense.len() != 1 << n {
            return Err(Error::LengthMismatch {
                expected: 1 << n,
                actual: dense.len(),
            });
        }
        AtomDistribution::new(
            n,
            dense
                .iter()
                .enumerate()
                .map(|(t, w)| (SubsetMask::from_bits(t as u32), w.clone())),
        )
    }

    /// Each listed atom gets weight `1 / atoms.len()`; repeats add up.
    pub fn uniform(n: usize, atoms: &[SubsetMask]) -> Result<Self> {
        let w = Rat::new(1.into(), (atoms.len().max(1) as i64).into());
        AtomDistribution::new(n, atoms.iter().map(|&t| (t, w.clone())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, atom: SubsetMask) -> Rat {
        self.weights.get(&atom).cloned().unwrap_or_else(Rat::zero)
    }

    /// Atoms with positive weight, in mask order.
    pub fn support(&self) -> impl Iterator<Item = (SubsetMask, &Rat)> {
        self.weights.iter().map(|(t, w)| (*t, w))
    }

    /// `1 − x_∅`.
    pub fn union_probability(&self) -> Rat {
        Rat::one() - self.weight(SubsetMask::EMPTY)
    }

    /// Whether every marginal matches `inst` exactly.
    pub fn realizes(&self, inst: &BooleInstance) -> bool {
        self.n == inst.n() && inst.iter().all(|(s, b)| marginal_of(self, s) == *b)
    }
}

/// `Σ_{T ⊇ S} x_T`, the probability of `B_S` under `x`.
pub fn marginal_of(x: &AtomDistribution, set: SubsetMask) -> Rat {
    x.support()
        .filter(|(t, _)| set.is_subset_of(*t))
        .map(|(_, w)| w)
        .sum()
}

/// Closed interval `[lo, hi] ⊆ [0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rat,
    pub hi: Rat,
}

impl Interval {
    pub fn new(lo: Rat, hi: Rat) -> Result<Self> {
        if lo.is_negative() || lo > hi || hi > Rat::one() {
            return Err(Error::InvalidInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Interval { lo, hi })
    }

    pub fn contains(&self, value: &Rat) -> bool {
        self.lo <= *value && *value <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
