//! Koszul homology of squarefree quotient presentations, and the depth
//! values it determines through Auslander-Buchsbaum.
//!
//! For a squarefree module `J/I` all Betti numbers live in squarefree
//! multidegrees, so each strand is a small complex indexed by the
//! subsets of one support mask. Strands are independent of each other;
//! with the `parallel` feature they are computed concurrently and the
//! tables merged.

use crate::betti::{BettiTable, DepthValue};
use crate::error::{Error, Result};
use crate::exec::ExecMode;
use crate::ideal::QuotientPresentation;
use crate::linalg::IntMatrix;
use crate::monomial::Monomial;

/// Coefficient field for rank computations. Depth of squarefree
/// modules at this scale does not depend on it; the parameter exists
/// for experiments and defaults to characteristic zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u32),
}

impl Field {
    fn rank(&self, m: &IntMatrix) -> usize {
        match self {
            Field::Rationals => m.rank(),
            Field::Prime(p) => m.rank_mod(*p),
        }
    }
}

/// Multigraded Betti table of a squarefree presentation via Koszul
/// homology against the residue field.
pub fn koszul_betti(pres: &QuotientPresentation) -> Result<BettiTable> {
    koszul_betti_with(pres, Field::Rationals, ExecMode::Sequential)
}

pub fn koszul_betti_with(
    pres: &QuotientPresentation,
    field: Field,
    mode: ExecMode,
) -> Result<BettiTable> {
    if !pres.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if pres.is_zero_module() {
        return Err(Error::ZeroModule);
    }
    let n = pres.ring_size();
    let degrees: Vec<u32> = (0u32..1 << n).collect();
    let strands = crate::exec::map_ordered(mode, &degrees, |&a| strand_betti(pres, a, field));
    let mut table = BettiTable::new();
    for strand in strands {
        table.merge(strand);
    }
    Ok(table)
}

/// Homology ranks of the Koszul strand in squarefree multidegree `a`.
///
/// The p-th term has basis {T ⊆ supp(a) : |T| = p, the squarefree
/// monomial with support a\T lies in J\I}; the boundary multiplies the
/// missing variable back in, keeping only images inside the module.
fn strand_betti(pres: &QuotientPresentation, a: u32, field: Field) -> BettiTable {
    let n = pres.ring_size();
    let weight = a.count_ones() as usize;
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); weight + 1];
    for t in submasks(a) {
        let m = Monomial::from_mask(a & !t, n);
        if pres.basis_contains(&m) {
            levels[t.count_ones() as usize].push(t);
        }
    }
    for level in levels.iter_mut() {
        level.sort_unstable();
    }

    let mut table = BettiTable::new();
    let mut rank_in: usize = 0; // rank of the boundary leaving level p
    for p in (0..=weight).rev() {
        let dim = levels[p].len();
        let rank_out = if p == 0 {
            0
        } else {
            field.rank(&boundary_matrix(&levels[p - 1], &levels[p]))
        };
        let homology = dim - rank_in - rank_out;
        table.insert(p, a, homology);
        rank_in = rank_out;
    }
    table
}

/// Signed boundary from level `p` (columns) into level `p-1` (rows).
fn boundary_matrix(rows: &[u32], cols: &[u32]) -> IntMatrix {
    let mut m = IntMatrix::zeros(rows.len(), cols.len());
    for (c, &t) in cols.iter().enumerate() {
        let mut sign = 1i128;
        for b in 0..32 {
            if t & (1 << b) == 0 {
                continue;
            }
            let smaller = t & !(1 << b);
            if let Ok(r) = rows.binary_search(&smaller) {
                m.set(r, c, sign);
            }
            sign = -sign;
        }
    }
    m
}

fn submasks(a: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(1 << a.count_ones());
    let mut s = a;
    loop {
        out.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & a;
    }
    out
}

/// Depth via Auslander-Buchsbaum: ring size minus projective dimension.
/// The zero module gets the +infinity sentinel (its projective
/// dimension being the matching -infinity convention).
pub fn depth(pres: &QuotientPresentation) -> Result<DepthValue> {
    if !pres.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if pres.is_zero_module() {
        return Ok(DepthValue::Infinite);
    }
    let table = koszul_betti(pres)?;
    Ok(DepthValue::Finite(
        pres.ring_size() - table.projective_dimension(),
    ))
}

/// Debug path: Betti ranks of the capped non-squarefree degrees, which
/// must all vanish for squarefree presentations. `cap` bounds each
/// exponent; only degrees with some exponent >= 2 are inspected.
pub fn nonsquarefree_betti(pres: &QuotientPresentation, cap: u16) -> Result<BettiTable> {
    if !pres.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if pres.is_zero_module() {
        return Err(Error::ZeroModule);
    }
    let n = pres.ring_size();
    let mut table = BettiTable::new();
    let mut degree = vec![0u16; n];
    loop {
        if degree.iter().any(|&e| e >= 2) {
            general_strand(pres, &degree, &mut table);
        }
        // odometer over exponent vectors bounded by cap
        let mut i = 0;
        loop {
            if i == n {
                return Ok(table);
            }
            if degree[i] < cap {
                degree[i] += 1;
                break;
            }
            degree[i] = 0;
            i += 1;
        }
    }
}

/// Koszul strand at an arbitrary multidegree; ranks are recorded under
/// the support mask of the degree (only used by the vanish assertion).
fn general_strand(pres: &QuotientPresentation, degree: &[u16], table: &mut BettiTable) {
    let n = pres.ring_size();
    let support: u32 = degree
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, _)| 1u32 << i)
        .sum();
    let weight = support.count_ones() as usize;
    let mut levels: Vec<Vec<u32>> = vec![Vec::new(); weight + 1];
    for t in submasks(support) {
        let mut exps = degree.to_vec();
        for b in 0..n {
            if t & (1 << b) != 0 {
                exps[b] -= 1;
            }
        }
        let m = Monomial::new(&exps);
        if pres.basis_contains(&m) {
            levels[t.count_ones() as usize].push(t);
        }
    }
    for level in levels.iter_mut() {
        level.sort_unstable();
    }
    let mut rank_in = 0usize;
    for p in (0..=weight).rev() {
        let dim = levels[p].len();
        let rank_out = if p == 0 {
            0
        } else {
            boundary_matrix(&levels[p - 1], &levels[p]).rank()
        };
        table.insert(p, support, dim - rank_in - rank_out);
        rank_in = rank_out;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::parse::parse_ideal;

    fn quotient(s: &str, n: usize) -> QuotientPresentation {
        QuotientPresentation::quotient_ring(parse_ideal(s, n).unwrap()).unwrap()
    }

    #[test]
    fn koszul_resolution_of_residue_field() {
        let table = koszul_betti(&quotient("x1, x2", 2)).unwrap();
        assert_eq!(table.total(0), 1);
        assert_eq!(table.total(1), 2);
        assert_eq!(table.total(2), 1);
        assert_eq!(table.projective_dimension(), 2);
    }

    #[test]
    fn principal_ideal_quotient() {
        let table = koszul_betti(&quotient("x1*x2", 2)).unwrap();
        assert_eq!(table.total(0), 1);
        assert_eq!(table.rank(1, 0b11), 1);
        assert_eq!(table.projective_dimension(), 1);
    }

    #[test]
    fn two_generator_quotient() {
        let table = koszul_betti(&quotient("x1*x2, x1*x3", 3)).unwrap();
        assert_eq!(table.total(0), 1);
        assert_eq!(table.total(1), 2);
        assert_eq!(table.total(2), 1);
        assert_eq!(depth(&quotient("x1*x2, x1*x3", 3)).unwrap(), DepthValue::Finite(1));
    }

    #[test]
    fn worked_example_depths() {
        assert_eq!(
            depth(&quotient("x1, x2*x3, x2*x4", 4)).unwrap(),
            DepthValue::Finite(1)
        );
        assert_eq!(
            depth(&quotient("x1*x2, x1*x3, x2*x4", 4)).unwrap(),
            DepthValue::Finite(2)
        );
        assert_eq!(depth(&quotient("x1, x2", 2)).unwrap(), DepthValue::Finite(0));
    }

    #[test]
    fn ideal_module_betti_zero_counts_generators() {
        let i = parse_ideal("x1*x2, x1*x3, x2*x4", 4).unwrap();
        let pres = QuotientPresentation::of_ideal(i).unwrap();
        let table = koszul_betti(&pres).unwrap();
        assert_eq!(table.total(0), 3);
    }

    #[test]
    fn zero_module_conventions() {
        let i = parse_ideal("x1", 2).unwrap();
        let pres = QuotientPresentation::new(i.clone(), i).unwrap();
        assert!(koszul_betti(&pres).is_err());
        assert_eq!(depth(&pres).unwrap(), DepthValue::Infinite);
    }

    #[test]
    fn depth_of_full_ring() {
        let pres = QuotientPresentation::of_ideal(Ideal::unit(3)).unwrap();
        assert_eq!(depth(&pres).unwrap(), DepthValue::Finite(3));
    }

    #[test]
    fn depth_of_ideal_exceeds_quotient_by_one() {
        for n in 1..=4 {
            for i in crate::enumerate::proper_nonzero_ideals(n) {
                let dq = depth(&QuotientPresentation::quotient_ring(i.clone()).unwrap())
                    .unwrap()
                    .expect_finite();
                let di = depth(&QuotientPresentation::of_ideal(i.clone()).unwrap())
                    .unwrap()
                    .expect_finite();
                assert_eq!(di, dq + 1, "ideal/quotient depth mismatch for ({i})");
            }
        }
    }

    #[test]
    fn nonsquarefree_strands_vanish() {
        for s in ["x1*x2, x1*x3", "x1, x2*x3", "x1*x2*x3"] {
            let pres = quotient(s, 3);
            let table = nonsquarefree_betti(&pres, 3).unwrap();
            assert!(table.is_empty(), "nonzero strand for S/({s}): {table}");
        }
    }

    #[test]
    fn characteristic_parameter_is_inert_at_small_scale() {
        for i in crate::enumerate::proper_nonzero_ideals(3) {
            let pres = QuotientPresentation::quotient_ring(i).unwrap();
            let q = koszul_betti_with(&pres, Field::Rationals, ExecMode::Sequential).unwrap();
            let p2 = koszul_betti_with(&pres, Field::Prime(2), ExecMode::Sequential).unwrap();
            assert_eq!(q, p2);
        }
    }
}
