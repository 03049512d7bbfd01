//! Independent Betti-number oracle through Stanley-Reisner complexes
//! and reduced simplicial homology.
//!
//! For a squarefree ideal `I` the faces of its Stanley-Reisner complex
//! are the squarefree monomials outside `I`. The Betti number
//! `beta_{i,σ}(S/I)` is the rank of the reduced homology of the
//! restriction to σ in dimension `|σ| - i - 1`. This path shares no
//! code with the Koszul engine beyond the matrix rank routine.

use crate::betti::BettiTable;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::IntMatrix;
use crate::monomial::VarSet;

/// A simplicial complex on `n` vertices, stored as its face masks.
/// Downward closure is an invariant of the constructors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    faces: Vec<u32>,
}

impl SimplicialComplex {
    /// Stanley-Reisner complex of a squarefree proper ideal.
    pub fn stanley_reisner(ideal: &Ideal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if ideal.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let n = ideal.ring_size();
        let faces: Vec<u32> = (0u32..1 << n)
            .filter(|&f| !ideal.contains_mask(f))
            .collect();
        Ok(Self { n, faces })
    }

    pub fn vertices(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> impl Iterator<Item = VarSet> + '_ {
        self.faces.iter().map(|&f| VarSet::from_mask(f))
    }

    pub fn has_face(&self, mask: u32) -> bool {
        self.faces.binary_search(&mask).is_ok()
    }

    /// Restriction to the vertices in `sigma`.
    fn restricted_faces(&self, sigma: u32) -> Vec<u32> {
        self.faces
            .iter()
            .filter(|&&f| f & !sigma == 0)
            .copied()
            .collect()
    }

    /// Ranks of the reduced homology groups of the restriction to
    /// `sigma`, indexed from dimension -1 (offset by one in the output:
    /// `out[d + 1]` is the rank in dimension `d`).
    fn reduced_homology_ranks(&self, sigma: u32) -> Vec<usize> {
        let faces = self.restricted_faces(sigma);
        let top = sigma.count_ones() as usize;
        // levels[k] holds the faces with k vertices (dimension k - 1)
        let mut levels: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
        for f in faces {
            levels[f.count_ones() as usize].push(f);
        }
        for level in levels.iter_mut() {
            level.sort_unstable();
        }
        let mut ranks = vec![0usize; top + 2];
        let mut rank_above = 0usize;
        for k in (0..=top).rev() {
            let dim = levels[k].len();
            let rank_below = if k == 0 {
                0
            } else {
                boundary(&levels[k - 1], &levels[k]).rank()
            };
            ranks[k] = dim - rank_above - rank_below;
            rank_above = rank_below;
        }
        ranks
    }
}

fn boundary(rows: &[u32], cols: &[u32]) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (c, &f) in cols.iter().enumerate() {
        let mut sign = 1i128;
        for b in 0..32 {
            if f & (1 << b) == 0 {
                continue;
            }
            if let Ok(r) = rows.binary_search(&(f & !(1 << b))) {
                m.set(r, c, sign);
            }
            sign = -sign;
        }
    }
    m
}

/// Betti table of `S/I` by Hochster's formula, as the cross-validation
/// oracle for the Koszul engine.
pub fn hochster_betti(ideal: &Ideal) -> Result<BettiTable> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let complex = SimplicialComplex::stanley_reisner(ideal)?;
    let n = ideal.ring_size();
    let mut table = BettiTable::new();
    for sigma in 0u32..1 << n {
        let size = sigma.count_ones() as usize;
        let ranks = complex.reduced_homology_ranks(sigma);
        // ranks[d + 1] is reduced homology in dimension d; the rank in
        // dimension |σ| - i - 1 contributes to beta_{i,σ}(S/I)
        for (slot, &rank) in ranks.iter().enumerate() {
            if rank == 0 {
                continue;
            }
            let d = slot as isize - 1;
            let i = size as isize - 1 - d;
            if i >= 0 {
                table.insert(i as usize, sigma, rank);
            }
        }
    }
    Ok(table)
}
