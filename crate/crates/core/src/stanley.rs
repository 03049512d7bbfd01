//! Stanley decompositions as data: verification of claimed
//! decompositions and exact Stanley depth via interval partitions of
//! the characteristic poset.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::ideal::QuotientPresentation;
use crate::monomial::{Monomial, VarSet};

/// One Stanley space `u * K[Z]`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct StanleySpace {
    pub gen: Monomial,
    pub free: VarSet,
}

impl fmt::Display for StanleySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*K{}", self.gen, self.free)
    }
}

/// A claimed Stanley decomposition of the module presented by `target`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StanleyDecomposition {
    pub n: usize,
    pub target: QuotientPresentation,
    pub spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    pub fn new(target: QuotientPresentation, spaces: Vec<StanleySpace>) -> Self {
        Self {
            n: target.ring_size(),
            target,
            spaces,
        }
    }

    /// Minimum free-set size over the spaces.
    pub fn sdepth(&self) -> Result<usize> {
        self.spaces
            .iter()
            .map(|s| s.free.len())
            .min()
            .ok_or(Error::EmptyDecomposition)
    }
}

impl fmt::Display for StanleyDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.target)?;
        if self.spaces.is_empty() {
            return write!(f, "0");
        }
        for (i, s) in self.spaces.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A disagreement between a decomposition and its target module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// A module monomial covered by no space.
    Uncovered { monomial: Monomial },
    /// A module monomial covered by more than one space (indices).
    MultiplyCovered { monomial: Monomial, spaces: Vec<usize> },
    /// A monomial outside the module lying in some spaces (indices).
    OutsideModule { monomial: Monomial, spaces: Vec<usize> },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uncovered { monomial } => {
                write!(f, "module monomial {monomial} is uncovered")
            }
            Violation::MultiplyCovered { monomial, spaces } => {
                write!(f, "module monomial {monomial} lies in spaces {spaces:?}")
            }
            Violation::OutsideModule { monomial, spaces } => {
                write!(f, "monomial {monomial} outside the module lies in spaces {spaces:?}")
            }
        }
    }
}

/// Outcome of verification; violations are data, not errors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Valid,
    Invalid(Vec<Violation>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Verdict::Valid => &[],
            Verdict::Invalid(v) => v,
        }
    }
}

/// Checks a claimed decomposition degreewise, with every exponent
/// capped one above the largest exponent occurring in any generator of
/// the target ideals or space generators. Membership of a monomial in
/// an ideal or in `u*K[Z]` is monotone beyond those thresholds, so the
/// capped box decides the full (infinite) check; the extra +1 row
/// catches strict-inequality mistakes.
pub fn verify_decomposition(d: &StanleyDecomposition) -> Verdict {
    let n = d.n;
    let mut bound = vec![1u16; n];
    let all_gens = d
        .target
        .inner()
        .gens()
        .iter()
        .chain(d.target.outer().gens())
        .chain(d.spaces.iter().map(|s| &s.gen));
    for g in all_gens {
        for v in 1..=n {
            bound[v - 1] = bound[v - 1].max(g.exponent(v) + 1);
        }
    }

    let mut violations = Vec::new();
    let mut exps = vec![0u16; n];
    loop {
        let m = Monomial::new(&exps);
        let in_module = d.target.basis_contains(&m);
        let covering: Vec<usize> = d
            .spaces
            .iter()
            .enumerate()
            .filter(|(_, s)| {
                s.gen.divides(&m) && m.div_exact(&s.gen).support().is_subset_of(s.free)
            })
            .map(|(i, _)| i)
            .collect();
        match (in_module, covering.len()) {
            (true, 0) => violations.push(Violation::Uncovered { monomial: m }),
            (true, 1) | (false, 0) => {}
            (true, _) => violations.push(Violation::MultiplyCovered {
                monomial: m,
                spaces: covering,
            }),
            (false, _) => violations.push(Violation::OutsideModule {
                monomial: m,
                spaces: covering,
            }),
        }

        let mut i = 0;
        loop {
            if i == n {
                return if violations.is_empty() {
                    Verdict::Valid
                } else {
                    Verdict::Invalid(violations)
                };
            }
            if exps[i] < bound[i] {
                exps[i] += 1;
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// The divisibility poset of the squarefree monomials of `J \ I`,
/// as masks sorted by (popcount, value).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoset {
    n: usize,
    elements: Vec<u32>,
}

impl CharPoset {
    pub fn ring_size(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, mask: u32) -> bool {
        self.elements.binary_search_by_key(&key(mask), |&e| key(e)).is_ok()
    }
}

fn key(mask: u32) -> (u32, u32) {
    (mask.count_ones(), mask)
}

/// Builds the characteristic poset of a nonzero squarefree presentation.
pub fn char_poset(pres: &QuotientPresentation) -> Result<CharPoset> {
    if !pres.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    let n = pres.ring_size();
    let mut elements: Vec<u32> = (0u32..1 << n)
        .filter(|&m| pres.outer().contains_mask(m) && !pres.inner().contains_mask(m))
        .collect();
    if elements.is_empty() {
        return Err(Error::ZeroModule);
    }
    elements.sort_by_key(|&m| key(m));
    Ok(CharPoset { n, elements })
}

/// A partition of the characteristic poset into intervals `[c, d]`;
/// the interval encodes the Stanley space `c * K[supp(d)]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPartition {
    pub intervals: Vec<(u32, u32)>,
}

impl IntervalPartition {
    /// Checks the defining invariants against a poset: nested ends,
    /// full cubes inside the poset, disjointness, exact cover.
    pub fn validate(&self, poset: &CharPoset) -> bool {
        let mut seen = HashSet::new();
        for &(c, d) in &self.intervals {
            if c & !d != 0 {
                return false;
            }
            let diff = d ^ c;
            let mut s = diff;
            loop {
                let e = c | s;
                if !poset.contains(e) || !seen.insert(e) {
                    return false;
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & diff;
            }
        }
        seen.len() == poset.len()
    }

    pub fn min_top_popcount(&self) -> Option<usize> {
        self.intervals
            .iter()
            .map(|&(_, d)| d.count_ones() as usize)
            .min()
    }
}

/// Result of the exact Stanley depth computation: the optimum and one
/// witness partition.
#[derive(Clone, Debug)]
pub struct Sdepth {
    pub value: usize,
    pub witness: IntervalPartition,
}

impl Sdepth {
    /// The Stanley decomposition induced by the witness.
    pub fn decomposition(&self, pres: &QuotientPresentation) -> StanleyDecomposition {
        let n = pres.ring_size();
        let spaces = self
            .witness
            .intervals
            .iter()
            .map(|&(c, d)| StanleySpace {
                gen: Monomial::from_mask(c, n),
                free: VarSet::from_mask(d),
            })
            .collect();
        StanleyDecomposition::new(pres.clone(), spaces)
    }
}

/// Exact Stanley depth of a nonzero squarefree presentation.
///
/// Iterates the target `k` from the ring size downward and returns at
/// the first `k` admitting a partition whose interval tops all have at
/// least `k` variables; `k = 0` always succeeds with singletons, and
/// the first success has a witness of minimum top popcount exactly `k`.
pub fn sdepth_exact(pres: &QuotientPresentation) -> Result<Sdepth> {
    let poset = char_poset(pres)?;
    sdepth_on_poset(&poset)
}

pub fn sdepth_on_poset(poset: &CharPoset) -> Result<Sdepth> {
    if poset.len() > 64 {
        return Err(Error::CapExceeded {
            got: poset.len(),
            cap: 64,
        });
    }
    for k in (0..=poset.ring_size()).rev() {
        if let Some(witness) = search_partition(poset, k) {
            return Ok(Sdepth { value: k, witness });
        }
    }
    unreachable!("k = 0 always admits the singleton partition")
}

/// Depth-first search for a partition with all interval tops of
/// popcount >= k. The bottom of the next interval is forced to be the
/// least uncovered element (it is minimal among the uncovered ones, so
/// any valid partition must start an interval exactly there); failures
/// are memoized on the uncovered-set bitmask.
fn search_partition(poset: &CharPoset, k: usize) -> Option<IntervalPartition> {
    let elems = poset.elements();
    let index: HashMap<u32, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let all: u64 = if elems.len() == 64 {
        !0
    } else {
        (1u64 << elems.len()) - 1
    };
    let mut state = SearchState {
        elems,
        index,
        k,
        failed: HashSet::new(),
    };
    let mut intervals = Vec::new();
    state
        .solve(all, &mut intervals)
        .then_some(IntervalPartition { intervals })
}

struct SearchState<'a> {
    elems: &'a [u32],
    index: HashMap<u32, usize>,
    k: usize,
    failed: HashSet<u64>,
}

impl SearchState<'_> {
    fn solve(&mut self, uncovered: u64, intervals: &mut Vec<(u32, u32)>) -> bool {
        if uncovered == 0 {
            return true;
        }
        if self.failed.contains(&uncovered) {
            return false;
        }
        let c = self.elems[uncovered.trailing_zeros() as usize];
        // candidate tops, largest first, then by mask value
        let mut cands: Vec<(u32, u64)> = self
            .elems
            .iter()
            .filter(|&&d| d & c == c && d.count_ones() as usize >= self.k)
            .filter_map(|&d| self.cube_bits(c, d, uncovered).map(|bits| (d, bits)))
            .collect();
        cands.sort_by(|a, b| b.0.count_ones().cmp(&a.0.count_ones()).then(a.0.cmp(&b.0)));
        for (d, bits) in cands {
            intervals.push((c, d));
            if self.solve(uncovered & !bits, intervals) {
                return true;
            }
            intervals.pop();
        }
        self.failed.insert(uncovered);
        false
    }

    /// Bitmask of the poset indices in the cube `[c, d]`, or None if
    /// some cube point is missing from the poset or already covered.
    fn cube_bits(&self, c: u32, d: u32, uncovered: u64) -> Option<u64> {
        let diff = d ^ c;
        let mut bits = 0u64;
        let mut s = diff;
        loop {
            let &ei = self.index.get(&(c | s))?;
            if uncovered & (1u64 << ei) == 0 {
                return None;
            }
            bits |= 1u64 << ei;
            if s == 0 {
                return Some(bits);
            }
            s = (s - 1) & diff;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::Ideal;
    use crate::parse::{parse_ideal, parse_monomial};

    fn pres(inner: &str, outer: &str, n: usize) -> QuotientPresentation {
        QuotientPresentation::new(parse_ideal(inner, n).unwrap(), parse_ideal(outer, n).unwrap())
            .unwrap()
    }

    fn space(gen: &str, vars: &[usize], n: usize) -> StanleySpace {
        StanleySpace {
            gen: parse_monomial(gen, n).unwrap(),
            free: VarSet::from_vars(vars),
        }
    }

    #[test]
    fn char_poset_examples() {
        let p = char_poset(&pres("0", "x1, x2", 2)).unwrap();
        assert_eq!(p.elements(), &[0b01, 0b10, 0b11]);

        let p = char_poset(&pres("x1*x2", "x1", 2)).unwrap();
        assert_eq!(p.elements(), &[0b01]);

        let p = char_poset(&pres("0", "x1*x2", 3)).unwrap();
        assert_eq!(p.elements(), &[0b011, 0b111]);

        assert!(char_poset(&pres("x1", "x1", 2)).is_err());
    }

    #[test]
    fn verify_accepts_valid_decomposition() {
        let d = StanleyDecomposition::new(
            pres("0", "x1, x2", 2),
            vec![space("x1", &[1], 2), space("x2", &[1, 2], 2)],
        );
        assert!(verify_decomposition(&d).is_valid());
        assert_eq!(d.sdepth().unwrap(), 1);
    }

    #[test]
    fn verify_reports_double_cover() {
        let d = StanleyDecomposition::new(
            pres("0", "x1, x2", 2),
            vec![space("x1", &[1, 2], 2), space("x2", &[1, 2], 2)],
        );
        let verdict = verify_decomposition(&d);
        let bad = parse_monomial("x1*x2", 2).unwrap();
        assert!(verdict
            .violations()
            .iter()
            .any(|v| matches!(v, Violation::MultiplyCovered { monomial, spaces }
                if *monomial == bad && spaces == &[0, 1])));
    }

    #[test]
    fn verify_reports_uncovered() {
        let d = StanleyDecomposition::new(pres("0", "x1, x2", 2), vec![space("x1", &[1], 2)]);
        let verdict = verify_decomposition(&d);
        let missing = parse_monomial("x2", 2).unwrap();
        assert!(verdict
            .violations()
            .iter()
            .any(|v| matches!(v, Violation::Uncovered { monomial } if *monomial == missing)));
    }

    #[test]
    fn verify_reports_outside_module() {
        let d = StanleyDecomposition::new(
            pres("0", "x1*x2", 2),
            vec![space("x1", &[1, 2], 2)],
        );
        let verdict = verify_decomposition(&d);
        assert!(verdict
            .violations()
            .iter()
            .any(|v| matches!(v, Violation::OutsideModule { .. })));
    }

    #[test]
    fn sdepth_examples() {
        let s = sdepth_exact(&pres("0", "x1, x2", 2)).unwrap();
        assert_eq!(s.value, 1);

        let s = sdepth_exact(&pres("0", "x1*x2", 2)).unwrap();
        assert_eq!(s.value, 2);
        assert_eq!(s.witness.intervals, vec![(0b11, 0b11)]);

        let s = sdepth_exact(&pres("0", "x1, x2, x3", 3)).unwrap();
        assert_eq!(s.value, 2);

        let s = sdepth_exact(&pres("x1, x2", "1", 2)).unwrap();
        assert_eq!(s.value, 0);
    }

    #[test]
    fn witness_is_sound() {
        for n in 1..=4 {
            for i in crate::enumerate::proper_nonzero_ideals(n) {
                let p = QuotientPresentation::of_ideal(i).unwrap();
                let s = sdepth_exact(&p).unwrap();
                let poset = char_poset(&p).unwrap();
                assert!(s.witness.validate(&poset));
                let d = s.decomposition(&p);
                assert!(verify_decomposition(&d).is_valid(), "unsound witness for {p}");
                assert_eq!(d.sdepth().unwrap(), s.value);
            }
        }
    }

    #[test]
    fn sdepth_of_whole_ring_is_ring_size() {
        let p = QuotientPresentation::of_ideal(Ideal::unit(3)).unwrap();
        assert_eq!(sdepth_exact(&p).unwrap().value, 3);
    }

    #[test]
    fn empty_decomposition_has_no_sdepth() {
        let d = StanleyDecomposition::new(pres("0", "x1", 1), vec![]);
        assert!(d.sdepth().is_err());
    }
}
