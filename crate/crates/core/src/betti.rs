//! Multigraded Betti tables and the depth value they determine.

use std::collections::BTreeMap;
use std::fmt;

use crate::monomial::VarSet;

/// Ranks `beta_{i,a}` indexed by homological degree and squarefree
/// multidegree (as a support mask). Only positive ranks are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), usize>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, i: usize, degree: u32, rank: usize) {
        if rank > 0 {
            *self.entries.entry((i, degree)).or_insert(0) += rank;
        }
    }

    pub fn rank(&self, i: usize, degree: u32) -> usize {
        self.entries.get(&(i, degree)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, usize)> + '_ {
        self.entries.iter().map(|(&(i, a), &r)| (i, a, r))
    }

    /// Total Betti number in homological degree `i`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, r)| r)
            .sum()
    }

    /// Projective dimension: the largest homological degree with a
    /// nonzero rank. Empty tables do not arise for nonzero modules.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn merge(&mut self, other: BettiTable) {
        for ((i, a), r) in other.entries {
            self.insert(i, a, r);
        }
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a, r) in self.entries() {
            writeln!(f, "beta_{{{},{}}} = {}", i, VarSet::from_mask(a), r)?;
        }
        Ok(())
    }
}

/// Depth of a module, with the +infinity sentinel for the zero module.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DepthValue {
    Finite(usize),
    Infinite,
}

impl DepthValue {
    pub fn finite(&self) -> Option<usize> {
        match self {
            DepthValue::Finite(d) => Some(*d),
            DepthValue::Infinite => None,
        }
    }

    pub fn expect_finite(&self) -> usize {
        self.finite().expect("depth of a nonzero module is finite")
    }
}

impl PartialOrd for DepthValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DepthValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (DepthValue::Infinite, DepthValue::Infinite) => std::cmp::Ordering::Equal,
            (DepthValue::Infinite, _) => std::cmp::Ordering::Greater,
            (_, DepthValue::Infinite) => std::cmp::Ordering::Less,
            (DepthValue::Finite(a), DepthValue::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for DepthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DepthValue::Finite(d) => write!(f, "{d}"),
            DepthValue::Infinite => write!(f, "+inf"),
        }
    }
}
