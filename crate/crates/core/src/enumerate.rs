//! Enumeration of all squarefree monomial ideals of a small ring.
//!
//! A squarefree ideal is an antichain of nonempty variable subsets (its
//! minimal generator supports); the zero ideal is the empty antichain
//! and the unit ideal is generated by 1. The stream is lazy so the
//! seven-million-ideal frontier at n = 6 never materializes in memory.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;

/// Largest ring size the enumerator accepts.
pub const MAX_ENUM_VARS: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdealFilter {
    All,
    ProperNonzero,
}

/// Lazy, duplicate-free stream of the squarefree ideals of `K[x1..xn]`
/// in a fixed canonical order: zero, unit, then antichains in
/// depth-first order over supports sorted by (popcount, value).
pub struct IdealIterator {
    n: usize,
    filter: IdealFilter,
    /// nonempty supports in canonical order
    universe: Vec<u32>,
    /// DFS stack: (antichain so far, position in `universe` to try next)
    stack: Vec<(Vec<u32>, usize)>,
    degenerate: u8,
}

impl IdealIterator {
    pub fn new(n: usize, filter: IdealFilter) -> Result<Self> {
        if n > MAX_ENUM_VARS {
            return Err(Error::CapExceeded {
                got: n,
                cap: MAX_ENUM_VARS,
            });
        }
        let mut universe: Vec<u32> = (1u32..(1 << n)).collect();
        universe.sort_by_key(|&m| (m.count_ones(), m));
        Ok(Self {
            n,
            filter,
            universe,
            stack: vec![(Vec::new(), 0)],
            degenerate: 0,
        })
    }

    fn build(&self, masks: &[u32]) -> Ideal {
        let gens: Vec<Monomial> = masks
            .iter()
            .map(|&m| Monomial::from_mask(m, self.n))
            .collect();
        Ideal::normalize(self.n, &gens).expect("antichain is already minimal")
    }
}

impl Iterator for IdealIterator {
    type Item = Ideal;

    fn next(&mut self) -> Option<Ideal> {
        if self.degenerate == 0 {
            self.degenerate = 1;
            if self.filter == IdealFilter::All {
                return Some(Ideal::zero(self.n));
            }
        }
        if self.degenerate == 1 {
            self.degenerate = 2;
            if self.filter == IdealFilter::All {
                return Some(Ideal::unit(self.n));
            }
        }
        // DFS over nonempty antichains; each stack frame emits one
        // antichain when first expanded, via the frames it pushes.
        while let Some((chain, idx)) = self.stack.pop() {
            let mut next_idx = idx;
            while next_idx < self.universe.len() {
                let cand = self.universe[next_idx];
                next_idx += 1;
                let comparable = chain
                    .iter()
                    .any(|&c| c & !cand == 0 || cand & !c == 0);
                if comparable {
                    continue;
                }
                // resume point for the current frame, then descend
                self.stack.push((chain.clone(), next_idx));
                let mut extended = chain.clone();
                extended.push(cand);
                self.stack.push((extended.clone(), next_idx));
                return Some(self.build(&extended));
            }
        }
        None
    }
}

/// Convenience: all ideals of the ring collected in canonical order.
pub fn all_ideals(n: usize) -> Vec<Ideal> {
    IdealIterator::new(n, IdealFilter::All)
        .expect("ring size within enumeration cap")
        .collect()
}

/// All proper nonzero squarefree ideals, collected.
pub fn proper_nonzero_ideals(n: usize) -> Vec<Ideal> {
    IdealIterator::new(n, IdealFilter::ProperNonzero)
        .expect("ring size within enumeration cap")
        .collect()
}

/// Keeps only the ideals that are minimal in their orbit under variable
/// permutations. Used by the frontier run to cut the n = 6 stream down
/// to one representative per symmetry class.
pub fn is_canonical_under_symmetry(ideal: &Ideal) -> bool {
    let n = ideal.ring_size();
    let masks: Vec<u32> = ideal
        .gens()
        .iter()
        .map(|g| g.support().mask())
        .collect();
    let mut key: Vec<(u32, u32)> = masks.iter().map(|&m| (m.count_ones(), m)).collect();
    key.sort_unstable();
    let mut perm: Vec<usize> = (0..n).collect();
    permute_check(&mut perm, 0, &masks, &key)
}

fn permute_check(perm: &mut Vec<usize>, k: usize, masks: &[u32], key: &[(u32, u32)]) -> bool {
    if k == perm.len() {
        let mut image: Vec<(u32, u32)> = masks
            .iter()
            .map(|&m| {
                let mut out = 0u32;
                for (from, &to) in perm.iter().enumerate() {
                    if m & (1 << from) != 0 {
                        out |= 1 << to;
                    }
                }
                (out.count_ones(), out)
            })
            .collect();
        image.sort_unstable();
        return image.as_slice() >= key;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        let ok = permute_check(perm, k + 1, masks, key);
        perm.swap(k, i);
        if !ok {
            return false;
        }
    }
    true
}
