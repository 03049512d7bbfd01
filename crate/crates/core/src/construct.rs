//! Constructive transforms on Stanley decompositions and the recursive
//! certifier for the inequality `sdepth T >= 1 + depth S/T` on
//! squarefree monomial ideals.
//!
//! Every certificate is rechecked from scratch against the verifier
//! and the depth engine before it is returned, so the recursion's own
//! bookkeeping is never trusted.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::ideal::{Ideal, QuotientPresentation};
use crate::koszul::depth;
use crate::monomial::{Monomial, VarSet, MAX_VARS};
use crate::stanley::{
    sdepth_exact, verify_decomposition, StanleyDecomposition, StanleySpace,
};

/// Largest ring size the certifier accepts.
pub const MAX_CERTIFY_VARS: usize = 6;

/// How a recursion node was resolved, decided by depth comparisons on
/// the variable split `T = (I + x_r J) S`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BranchKind {
    /// `I = J`: the top variable is absent and the certificate lifts.
    Lift,
    /// `depth S'/I != depth S/T - 1`: combine certificates of I and J.
    Good,
    /// `depth S'/I = depth S/T - 1`: combine the certificate of I with
    /// a searched decomposition of J/I.
    Bad,
}

/// Selects the branch for `T` split as `(I, J)` in one fewer variable.
pub fn branch_select(i: &Ideal, j: &Ideal, t: &Ideal) -> Result<BranchKind> {
    let (kind, _, _) = branch_select_with_depths(i, j, t)?;
    Ok(kind)
}

fn branch_select_with_depths(
    i: &Ideal,
    j: &Ideal,
    t: &Ideal,
) -> Result<(BranchKind, usize, usize)> {
    let r = t.ring_size();
    if r == 0 || t.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if t.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let (i0, j0) = t.split_var(r)?;
    if i0.restricted(r - 1) != *i || j0.restricted(r - 1) != *j {
        return Err(Error::InconsistentSplit);
    }
    let d_st = depth(&QuotientPresentation::quotient_ring(t.clone())?)?.expect_finite();
    if i == j {
        return Ok((BranchKind::Lift, 0, d_st));
    }
    let d_si = depth(&QuotientPresentation::quotient_ring(i.clone())?)?.expect_finite();
    let kind = if d_si as i64 != d_st as i64 - 1 {
        BranchKind::Good
    } else {
        BranchKind::Bad
    };
    Ok((kind, d_si, d_st))
}

/// Transforms a decomposition of the ideal `I` into one of `(I : v)`:
/// spaces whose generator is divisible by `x_k` get it divided out,
/// spaces with `x_k` free and a generator outside `(x_k)` survive
/// unchanged, everything else is dropped; composite `v` goes variable
/// by variable.
pub fn colon_transform(d: &StanleyDecomposition, v: &Monomial) -> Result<StanleyDecomposition> {
    if v.ring_size() != d.n {
        return Err(Error::RingSizeMismatch {
            expected: d.n,
            found: v.ring_size(),
        });
    }
    if !d.target.inner().is_zero() {
        return Err(Error::InvalidPresentation(
            "colon transform expects an ideal presented as a module".into(),
        ));
    }
    if d.target.outer().contains(v) {
        return Err(Error::MonomialInIdeal);
    }
    let verdict = verify_decomposition(d);
    if !verdict.is_valid() {
        return Err(Error::InvalidDecomposition(
            verdict.violations()[0].to_string(),
        ));
    }

    let mut ideal = d.target.outer().clone();
    let mut spaces = d.spaces.clone();
    for var in 1..=d.n {
        for _ in 0..v.exponent(var) {
            let xk = Monomial::var(var, d.n);
            spaces = spaces
                .iter()
                .filter_map(|s| {
                    if xk.divides(&s.gen) {
                        Some(StanleySpace {
                            gen: s.gen.div_exact(&xk),
                            free: s.free,
                        })
                    } else if s.free.contains(var) {
                        Some(*s)
                    } else {
                        None
                    }
                })
                .collect();
            ideal = ideal.colon(&xk)?;
        }
    }
    Ok(StanleyDecomposition::new(
        QuotientPresentation::of_ideal(ideal)?,
        spaces,
    ))
}

/// Glues a decomposition of `JS/IS` with one of `I` (over the smaller
/// ring) into a decomposition of `JS / x_n IS`, where `x_n` is the
/// adjoined top variable.
pub fn combine_h1(
    d_quot: &StanleyDecomposition,
    d_ideal: &StanleyDecomposition,
) -> Result<StanleyDecomposition> {
    let n = d_quot.n;
    if d_ideal.n + 1 != n {
        return Err(Error::RingSizeMismatch {
            expected: n.saturating_sub(1),
            found: d_ideal.n,
        });
    }
    if !d_ideal.target.inner().is_zero() {
        return Err(Error::InvalidPresentation(
            "second input must present an ideal as a module".into(),
        ));
    }
    let i_small = d_ideal.target.outer();
    if i_small.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !i_small.is_proper() {
        return Err(Error::UnitIdeal);
    }
    if *d_quot.target.inner() != i_small.extended(n) {
        return Err(Error::InvalidPresentation(
            "inner ideal of the quotient input must be the extension of I".into(),
        ));
    }
    if d_quot.target.outer().support().contains(n) {
        return Err(Error::InvalidPresentation(
            "J must not involve the adjoined variable".into(),
        ));
    }
    if d_quot.target.is_zero_module() {
        return Err(Error::ZeroModule);
    }
    for d in [d_quot, d_ideal] {
        let verdict = verify_decomposition(d);
        if !verdict.is_valid() {
            return Err(Error::InvalidDecomposition(
                verdict.violations()[0].to_string(),
            ));
        }
    }

    let xn = Monomial::var(n, n);
    let inner = i_small.extended(n).scaled(&xn)?;
    let target = QuotientPresentation::new(inner, d_quot.target.outer().clone())?;
    let mut spaces = d_quot.spaces.clone();
    spaces.extend(d_ideal.spaces.iter().map(|s| StanleySpace {
        gen: s.gen.extended(n),
        free: s.free,
    }));
    Ok(StanleyDecomposition::new(target, spaces))
}

/// Which splitting of `T = I + x_n J S` a combine uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CombineVariant {
    /// `T = I ⊕ x_n J S`: takes decompositions of `I` and of `J`.
    Direct,
    /// `T = I S ⊕ x_n (J S / I S)`: takes decompositions of `I` and of
    /// the quotient `J/I`.
    Filtered,
}

/// Builds a decomposition of `T = (I + x_n J) S` from decompositions
/// over the smaller ring, adjoining `x_n` as a new top variable.
pub fn combine_h2(
    variant: CombineVariant,
    d_ideal: &StanleyDecomposition,
    d_second: &StanleyDecomposition,
) -> Result<StanleyDecomposition> {
    let small = d_ideal.n;
    let n = small + 1;
    if n > MAX_VARS {
        return Err(Error::RingTooLarge { n, max: MAX_VARS });
    }
    if d_second.n != small {
        return Err(Error::RingSizeMismatch {
            expected: small,
            found: d_second.n,
        });
    }
    if !d_ideal.target.inner().is_zero() {
        return Err(Error::InvalidPresentation(
            "first input must present the ideal I as a module".into(),
        ));
    }
    let i_small = d_ideal.target.outer().clone();
    if i_small.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !i_small.is_proper() {
        return Err(Error::UnitIdeal);
    }
    let j_small = match variant {
        CombineVariant::Direct => {
            if !d_second.target.inner().is_zero() {
                return Err(Error::InvalidPresentation(
                    "direct variant expects J presented as a module".into(),
                ));
            }
            d_second.target.outer().clone()
        }
        CombineVariant::Filtered => {
            if *d_second.target.inner() != i_small {
                return Err(Error::InvalidPresentation(
                    "filtered variant expects a decomposition of J/I".into(),
                ));
            }
            d_second.target.outer().clone()
        }
    };
    if !j_small.is_proper() {
        return Err(Error::UnitIdeal);
    }
    if !i_small.is_contained_in(&j_small) || i_small == j_small {
        return Err(Error::InvalidPresentation(
            "need I strictly contained in J".into(),
        ));
    }
    for d in [d_ideal, d_second] {
        let verdict = verify_decomposition(d);
        if !verdict.is_valid() {
            return Err(Error::InvalidDecomposition(
                verdict.violations()[0].to_string(),
            ));
        }
    }

    let xn = Monomial::var(n, n);
    let t = i_small
        .extended(n)
        .sum(&j_small.extended(n).scaled(&xn)?)?;
    let mut spaces: Vec<StanleySpace> = Vec::new();
    match variant {
        CombineVariant::Direct => {
            spaces.extend(d_ideal.spaces.iter().map(|s| StanleySpace {
                gen: s.gen.extended(n),
                free: s.free,
            }));
        }
        CombineVariant::Filtered => {
            spaces.extend(d_ideal.spaces.iter().map(|s| StanleySpace {
                gen: s.gen.extended(n),
                free: s.free.insert(n),
            }));
        }
    }
    spaces.extend(d_second.spaces.iter().map(|s| StanleySpace {
        gen: s.gen.extended(n).mul(&xn),
        free: s.free.insert(n),
    }));
    Ok(StanleyDecomposition::new(
        QuotientPresentation::of_ideal(t)?,
        spaces,
    ))
}

/// The dimension filtration split `I ⊆ J_d ⊆ J`, with `J_d/I` the
/// largest submodule of `J/I` of dimension at most `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiltrationSplit {
    pub inner: Ideal,
    pub mid: Ideal,
    pub outer: Ideal,
    pub cutoff: usize,
}

/// Intersects `J` with the associated primes of dimension above `d`;
/// the resulting split is checked against the expected partition of
/// the associated primes before it is returned.
pub fn dim_filtration_split(pres: &QuotientPresentation, d: usize) -> Result<FiltrationSplit> {
    let n = pres.ring_size();
    let ass = pres.ass_primes()?;
    let (high, low): (Vec<VarSet>, Vec<VarSet>) =
        ass.into_iter().partition(|p| n - p.len() > d);

    let mut mid = pres.outer().clone();
    for p in &high {
        mid = mid.intersect(&Ideal::prime_of(*p, n))?;
    }

    let split = FiltrationSplit {
        inner: pres.inner().clone(),
        mid,
        outer: pres.outer().clone(),
        cutoff: d,
    };
    if !split.inner.is_contained_in(&split.mid) {
        return Err(Error::FiltrationInvariant(format!(
            "mid ideal ({}) does not contain ({})",
            split.mid, split.inner
        )));
    }

    let sorted = |mut v: Vec<VarSet>| {
        v.sort_by_key(|p| (p.len(), p.mask()));
        v
    };
    // J/J_d is zero exactly when J ⊆ J_d
    if !split.outer.is_contained_in(&split.mid) {
        let top = QuotientPresentation::new(split.mid.clone(), split.outer.clone())?;
        let got = sorted(top.ass_primes()?);
        if got != sorted(high.clone()) {
            return Err(Error::FiltrationInvariant(format!(
                "Ass(J/J_d) = {got:?}, expected the high part {high:?}"
            )));
        }
    }
    if !split.mid.is_contained_in(&split.inner) {
        let bottom = QuotientPresentation::new(split.inner.clone(), split.mid.clone())?;
        let got = sorted(bottom.ass_primes()?);
        if got != sorted(low.clone()) {
            return Err(Error::FiltrationInvariant(format!(
                "Ass(J_d/I) = {got:?}, expected the low part {low:?}"
            )));
        }
    }
    Ok(split)
}

/// Where a certificate node's decomposition came from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CertSource {
    /// Exact interval-partition search.
    Search,
    /// One of the constructive combination lemmas.
    Lemma,
}

/// Label of a node in a certificate trace. Base nodes are the leaves
/// handled directly by search; the others follow [`BranchKind`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BranchLabel {
    Base,
    Lift,
    Good,
    Bad,
}

/// One node of the recursion trace.
#[derive(Clone, Debug)]
pub struct TraceNode {
    pub ring_size: usize,
    pub target: Ideal,
    pub branch: BranchLabel,
    /// depth S'/I at this node, when a split was taken.
    pub depth_sub_quotient: Option<usize>,
    /// depth S/T at this node, when a split was taken.
    pub depth_quotient: Option<usize>,
    pub source: CertSource,
    pub children: Vec<usize>,
}

/// A verified witness that `sdepth T >= claimed_bound >= 1 + depth S/T`.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub target: Ideal,
    pub claimed_bound: usize,
    pub decomposition: StanleyDecomposition,
    pub trace: Vec<TraceNode>,
}

struct SubCert {
    target: Ideal,
    bound: usize,
    decomposition: StanleyDecomposition,
    branch: BranchLabel,
    depth_sub_quotient: Option<usize>,
    depth_quotient: Option<usize>,
    source: CertSource,
    children: Vec<Arc<SubCert>>,
}

/// Certifier with memoization keyed by the canonical ideal form, so a
/// batch run shares sub-certificates across cases. Inserts are
/// idempotent; concurrent duplicate computation is benign.
#[derive(Default)]
pub struct Certifier {
    certs: Mutex<HashMap<Ideal, Arc<SubCert>>>,
    depths: Mutex<HashMap<Ideal, usize>>,
}

impl Certifier {
    pub fn new() -> Self {
        Self::default()
    }

    /// depth of S/ideal, memoized.
    fn depth_q(&self, ideal: &Ideal) -> Result<usize> {
        if let Some(&d) = self.depths.lock().unwrap().get(ideal) {
            return Ok(d);
        }
        let d = depth(&QuotientPresentation::quotient_ring(ideal.clone())?)?.expect_finite();
        self.depths.lock().unwrap().insert(ideal.clone(), d);
        Ok(d)
    }

    /// Certifies `sdepth T >= 1 + depth S/T` with an explicit verified
    /// decomposition of `T`.
    pub fn certify(&self, t: &Ideal) -> Result<Certificate> {
        if t.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if t.is_unit() {
            return Err(Error::UnitIdeal);
        }
        if !t.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if t.ring_size() > MAX_CERTIFY_VARS {
            return Err(Error::CapExceeded {
                got: t.ring_size(),
                cap: MAX_CERTIFY_VARS,
            });
        }
        let root = self.node(t)?;
        let mut trace = Vec::new();
        flatten(&root, &mut trace);
        let cert = Certificate {
            target: t.clone(),
            claimed_bound: root.bound,
            decomposition: root.decomposition.clone(),
            trace,
        };
        self.recheck(&cert)?;
        Ok(cert)
    }

    /// Independent recheck of the certificate invariants.
    fn recheck(&self, cert: &Certificate) -> Result<()> {
        let verdict = verify_decomposition(&cert.decomposition);
        if !verdict.is_valid() {
            return Err(Error::CertificateInvalid(format!(
                "decomposition of ({}) is invalid: {}",
                cert.target,
                verdict.violations()[0]
            )));
        }
        let sd = cert.decomposition.sdepth()?;
        if sd < cert.claimed_bound {
            return Err(Error::CertificateInvalid(format!(
                "decomposition sdepth {sd} is below the claimed bound {}",
                cert.claimed_bound
            )));
        }
        let dq = self.depth_q(&cert.target)?;
        if cert.claimed_bound < 1 + dq {
            return Err(Error::CertificateInvalid(format!(
                "claimed bound {} misses 1 + depth S/T = {}",
                cert.claimed_bound,
                1 + dq
            )));
        }
        Ok(())
    }

    fn node(&self, t: &Ideal) -> Result<Arc<SubCert>> {
        if let Some(hit) = self.certs.lock().unwrap().get(t) {
            return Ok(hit.clone());
        }
        let built = Arc::new(self.build_node(t)?);
        self.certs
            .lock()
            .unwrap()
            .entry(t.clone())
            .or_insert_with(|| built.clone());
        Ok(built)
    }

    fn build_node(&self, t: &Ideal) -> Result<SubCert> {
        let r = t.ring_size();
        if r <= 3 {
            let pres = QuotientPresentation::of_ideal(t.clone())?;
            let sd = sdepth_exact(&pres)?;
            return Ok(SubCert {
                target: t.clone(),
                bound: sd.value,
                decomposition: sd.decomposition(&pres),
                branch: BranchLabel::Base,
                depth_sub_quotient: None,
                depth_quotient: None,
                source: CertSource::Search,
                children: vec![],
            });
        }

        let top_var = t
            .support()
            .vars()
            .max()
            .expect("nonzero proper ideal has support");
        if top_var < r {
            // x_r absent: lift the certificate from one fewer variable
            let sub = self.node(&t.restricted(r - 1))?;
            let spaces = sub
                .decomposition
                .spaces
                .iter()
                .map(|s| StanleySpace {
                    gen: s.gen.extended(r),
                    free: s.free.insert(r),
                })
                .collect();
            let decomposition = StanleyDecomposition::new(
                QuotientPresentation::of_ideal(t.clone())?,
                spaces,
            );
            return Ok(SubCert {
                target: t.clone(),
                bound: sub.bound + 1,
                decomposition,
                branch: BranchLabel::Lift,
                depth_sub_quotient: None,
                depth_quotient: None,
                source: CertSource::Lemma,
                children: vec![sub],
            });
        }

        let (i_full, j_full) = t.split_var(r)?;
        let i = i_full.restricted(r - 1);
        let j = j_full.restricted(r - 1);
        debug_assert_ne!(i, j, "normalized T with x_r present splits strictly");
        let d_st = self.depth_q(t)?;

        if i.is_zero() {
            if j.is_unit() {
                // T = (x_r): one free Stanley space
                let decomposition = StanleyDecomposition::new(
                    QuotientPresentation::of_ideal(t.clone())?,
                    vec![StanleySpace {
                        gen: Monomial::var(r, r),
                        free: VarSet::full(r),
                    }],
                );
                return Ok(SubCert {
                    target: t.clone(),
                    bound: r,
                    decomposition,
                    branch: BranchLabel::Good,
                    depth_sub_quotient: Some(r - 1),
                    depth_quotient: Some(d_st),
                    source: CertSource::Lemma,
                    children: vec![],
                });
            }
            // T = x_r * JS: multiply a lifted certificate of J by x_r
            let sub = self.node(&j)?;
            let xr = Monomial::var(r, r);
            let spaces = sub
                .decomposition
                .spaces
                .iter()
                .map(|s| StanleySpace {
                    gen: s.gen.extended(r).mul(&xr),
                    free: s.free.insert(r),
                })
                .collect();
            let decomposition = StanleyDecomposition::new(
                QuotientPresentation::of_ideal(t.clone())?,
                spaces,
            );
            return Ok(SubCert {
                target: t.clone(),
                bound: sub.bound + 1,
                decomposition,
                branch: BranchLabel::Good,
                depth_sub_quotient: Some(r - 1),
                depth_quotient: Some(d_st),
                source: CertSource::Lemma,
                children: vec![sub],
            });
        }

        if j.is_unit() {
            // x_r is itself a generator: T = I + (x_r)
            let sub = self.node(&i)?;
            let d_si = self.depth_q(&i)?;
            let mut spaces: Vec<StanleySpace> = sub
                .decomposition
                .spaces
                .iter()
                .map(|s| StanleySpace {
                    gen: s.gen.extended(r),
                    free: s.free,
                })
                .collect();
            spaces.push(StanleySpace {
                gen: Monomial::var(r, r),
                free: VarSet::full(r),
            });
            let decomposition = StanleyDecomposition::new(
                QuotientPresentation::of_ideal(t.clone())?,
                spaces,
            );
            return Ok(SubCert {
                target: t.clone(),
                bound: sub.bound.min(r),
                decomposition,
                branch: BranchLabel::Good,
                depth_sub_quotient: Some(d_si),
                depth_quotient: Some(d_st),
                source: CertSource::Lemma,
                children: vec![sub],
            });
        }

        let d_si = self.depth_q(&i)?;
        if d_si as i64 != d_st as i64 - 1 {
            // Good branch: direct combination of the two certificates
            let ci = self.node(&i)?;
            let cj = self.node(&j)?;
            let decomposition =
                combine_h2(CombineVariant::Direct, &ci.decomposition, &cj.decomposition)?;
            debug_assert_eq!(decomposition.target.outer(), t);
            Ok(SubCert {
                target: t.clone(),
                bound: ci.bound.min(cj.bound + 1),
                decomposition,
                branch: BranchLabel::Good,
                depth_sub_quotient: Some(d_si),
                depth_quotient: Some(d_st),
                source: CertSource::Lemma,
                children: vec![ci, cj],
            })
        } else {
            // Bad branch: decomposition of J/I comes from search
            let ci = self.node(&i)?;
            let pres_ji = QuotientPresentation::new(i.clone(), j.clone())?;
            let sd_ji = sdepth_exact(&pres_ji)?;
            let d_ji = sd_ji.decomposition(&pres_ji);
            let decomposition =
                combine_h2(CombineVariant::Filtered, &ci.decomposition, &d_ji)?;
            debug_assert_eq!(decomposition.target.outer(), t);
            Ok(SubCert {
                target: t.clone(),
                bound: ci.bound.min(sd_ji.value) + 1,
                decomposition,
                branch: BranchLabel::Bad,
                depth_sub_quotient: Some(d_si),
                depth_quotient: Some(d_st),
                source: CertSource::Search,
                children: vec![ci],
            })
        }
    }
}

fn flatten(sub: &Arc<SubCert>, out: &mut Vec<TraceNode>) -> usize {
    let idx = out.len();
    out.push(TraceNode {
        ring_size: sub.target.ring_size(),
        target: sub.target.clone(),
        branch: sub.branch,
        depth_sub_quotient: sub.depth_sub_quotient,
        depth_quotient: sub.depth_quotient,
        source: sub.source,
        children: vec![],
    });
    let children: Vec<usize> = sub
        .children
        .iter()
        .map(|c| flatten(c, out))
        .collect();
    out[idx].children = children;
    idx
}

/// One-shot certification with a private memo table.
pub fn certify_weak_conjecture(t: &Ideal) -> Result<Certificate> {
    Certifier::new().certify(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_ideal, parse_monomial};
    use crate::stanley::Verdict;

    fn ideal(s: &str, n: usize) -> Ideal {
        parse_ideal(s, n).unwrap()
    }

    fn of_ideal(s: &str, n: usize) -> QuotientPresentation {
        QuotientPresentation::of_ideal(ideal(s, n)).unwrap()
    }

    fn space(gen: &str, vars: &[usize], n: usize) -> StanleySpace {
        StanleySpace {
            gen: parse_monomial(gen, n).unwrap(),
            free: VarSet::from_vars(vars),
        }
    }

    #[test]
    fn colon_transform_worked_example() {
        let d = StanleyDecomposition::new(
            of_ideal("x1*x2, x1*x3", 3),
            vec![
                space("x1*x2", &[1, 2], 3),
                space("x1*x3", &[1, 3], 3),
                space("x1*x2*x3", &[1, 2, 3], 3),
            ],
        );
        assert!(verify_decomposition(&d).is_valid());
        let out = colon_transform(&d, &parse_monomial("x2", 3).unwrap()).unwrap();
        assert_eq!(*out.target.outer(), ideal("x1", 3));
        assert_eq!(
            out.spaces,
            vec![space("x1", &[1, 2], 3), space("x1*x3", &[1, 2, 3], 3)]
        );
        assert!(verify_decomposition(&out).is_valid());
        assert_eq!(out.sdepth().unwrap(), 2);
    }

    #[test]
    fn colon_transform_single_space() {
        let d = StanleyDecomposition::new(of_ideal("x1*x2", 2), vec![space("x1*x2", &[1, 2], 2)]);
        let out = colon_transform(&d, &parse_monomial("x2", 2).unwrap()).unwrap();
        assert_eq!(out.spaces, vec![space("x1", &[1, 2], 2)]);
        assert_eq!(*out.target.outer(), ideal("x1", 2));
    }

    #[test]
    fn colon_transform_by_one_is_identity() {
        let d = StanleyDecomposition::new(of_ideal("x1*x2", 2), vec![space("x1*x2", &[1, 2], 2)]);
        let out = colon_transform(&d, &Monomial::one(2)).unwrap();
        assert_eq!(out.spaces, d.spaces);
        assert_eq!(out.target, d.target);
    }

    #[test]
    fn colon_transform_rejects_bad_inputs() {
        let d = StanleyDecomposition::new(of_ideal("x1*x2", 2), vec![space("x1*x2", &[1, 2], 2)]);
        // v in I
        assert!(matches!(
            colon_transform(&d, &parse_monomial("x1*x2", 2).unwrap()),
            Err(Error::MonomialInIdeal)
        ));
        // unverified decomposition
        let bad = StanleyDecomposition::new(of_ideal("x1*x2", 2), vec![space("x1", &[1, 2], 2)]);
        assert!(matches!(
            colon_transform(&bad, &parse_monomial("x2", 2).unwrap()),
            Err(Error::InvalidDecomposition(_))
        ));
    }

    #[test]
    fn combine_h1_squarefree_example() {
        let d_quot = StanleyDecomposition::new(
            QuotientPresentation::new(ideal("x1*x2", 3), ideal("x1", 3)).unwrap(),
            vec![space("x1", &[1, 3], 3)],
        );
        let d_ideal =
            StanleyDecomposition::new(of_ideal("x1*x2", 2), vec![space("x1*x2", &[1, 2], 2)]);
        let out = combine_h1(&d_quot, &d_ideal).unwrap();
        assert_eq!(*out.target.inner(), ideal("x1*x2*x3", 3));
        assert_eq!(*out.target.outer(), ideal("x1", 3));
        assert!(verify_decomposition(&out).is_valid());
        assert_eq!(out.sdepth().unwrap(), 2);
    }

    #[test]
    fn combine_h1_nonsquarefree_path() {
        let d_quot = StanleyDecomposition::new(
            QuotientPresentation::new(ideal("x1^2", 2), ideal("x1", 2)).unwrap(),
            vec![space("x1", &[2], 2)],
        );
        let d_ideal =
            StanleyDecomposition::new(of_ideal("x1^2", 1), vec![space("x1^2", &[1], 1)]);
        let out = combine_h1(&d_quot, &d_ideal).unwrap();
        assert_eq!(*out.target.inner(), ideal("x1^2*x2", 2));
        assert!(verify_decomposition(&out).is_valid());
        assert_eq!(out.sdepth().unwrap(), 1);
    }

    #[test]
    fn combine_h1_rejects_zero_ideal() {
        let d_quot = StanleyDecomposition::new(
            QuotientPresentation::of_ideal(ideal("x1", 3)).unwrap(),
            vec![space("x1", &[1, 2, 3], 3)],
        );
        let d_ideal = StanleyDecomposition::new(
            QuotientPresentation::of_ideal(Ideal::zero(2)).unwrap(),
            vec![],
        );
        assert!(combine_h1(&d_quot, &d_ideal).is_err());
    }

    #[test]
    fn combine_h2_direct_worked_example() {
        // I = (x1x2, x1x3), J = (x1x3, x2) over three variables
        let ci = certify_weak_conjecture(&ideal("x1*x2, x1*x3", 3)).unwrap();
        let cj = certify_weak_conjecture(&ideal("x2, x1*x3", 3)).unwrap();
        let out = combine_h2(
            CombineVariant::Direct,
            &ci.decomposition,
            &cj.decomposition,
        )
        .unwrap();
        assert_eq!(*out.target.outer(), ideal("x1*x2, x1*x3, x2*x4", 4));
        assert!(verify_decomposition(&out).is_valid());
    }

    #[test]
    fn combine_h2_rejects_unit_j() {
        let d_i = StanleyDecomposition::new(of_ideal("x1", 1), vec![space("x1", &[1], 1)]);
        let d_j = StanleyDecomposition::new(
            QuotientPresentation::of_ideal(Ideal::unit(1)).unwrap(),
            vec![space("1", &[1], 1)],
        );
        assert!(matches!(
            combine_h2(CombineVariant::Direct, &d_i, &d_j),
            Err(Error::UnitIdeal)
        ));
    }

    #[test]
    fn combine_h2_filtered_example() {
        let d_i = StanleyDecomposition::new(of_ideal("x1*x2", 2), vec![space("x1*x2", &[1, 2], 2)]);
        let d_ji = StanleyDecomposition::new(
            QuotientPresentation::new(ideal("x1*x2", 2), ideal("x1", 2)).unwrap(),
            vec![space("x1", &[1], 2)],
        );
        let out = combine_h2(CombineVariant::Filtered, &d_i, &d_ji).unwrap();
        assert_eq!(*out.target.outer(), ideal("x1*x2, x1*x3", 3));
        assert_eq!(
            out.spaces,
            vec![space("x1*x2", &[1, 2, 3], 3), space("x1*x3", &[1, 3], 3)]
        );
        assert!(verify_decomposition(&out).is_valid());
        assert_eq!(out.sdepth().unwrap(), 2);
    }

    #[test]
    fn branch_select_examples() {
        // the hard four-variable example selects Bad
        let t = ideal("x1*x2, x1*x3, x2*x4", 4);
        let i = ideal("x1*x2, x1*x3", 3);
        let j = ideal("x2, x1*x3", 3);
        assert_eq!(branch_select(&i, &j, &t).unwrap(), BranchKind::Bad);

        // the easy example selects Good
        let w = ideal("x1, x2*x3, x2*x4", 4);
        let u = ideal("x1, x2*x3", 3);
        let v = ideal("x1, x2", 3);
        assert_eq!(branch_select(&u, &v, &w).unwrap(), BranchKind::Good);

        // absent top variable selects Lift
        let t = ideal("x1", 2);
        let i = ideal("x1", 1);
        assert_eq!(branch_select(&i, &i.clone(), &t).unwrap(), BranchKind::Lift);

        // inconsistent split is rejected
        assert!(matches!(
            branch_select(&v, &u, &w),
            Err(Error::InconsistentSplit)
        ));
    }

    #[test]
    fn branch_select_trichotomy() {
        for t in crate::enumerate::proper_nonzero_ideals(4) {
            let (i_f, j_f) = t.split_var(4).unwrap();
            let i = i_f.restricted(3);
            let j = j_f.restricted(3);
            let kind = branch_select(&i, &j, &t).unwrap();
            assert_eq!(kind == BranchKind::Lift, i == j, "lift iff split is trivial: {t}");
        }
    }

    #[test]
    fn dim_filtration_examples() {
        let pres =
            QuotientPresentation::new(ideal("x1*x2, x1*x3", 3), ideal("x1", 3)).unwrap();
        let split = dim_filtration_split(&pres, 0).unwrap();
        assert_eq!(split.mid, ideal("x1*x2, x1*x3", 3));
        assert_eq!(split.mid, *pres.inner());

        // all associated primes below the cutoff leave J untouched
        let pres = QuotientPresentation::quotient_ring(ideal("x1, x2", 3)).unwrap();
        let split = dim_filtration_split(&pres, 3).unwrap();
        assert_eq!(split.mid, *pres.outer());

        // height-one associated primes: J_2 recovers I = J ∩ (x1)
        let pres =
            QuotientPresentation::new(ideal("x1*x2, x1*x3", 4), ideal("x2, x3", 4)).unwrap();
        let split = dim_filtration_split(&pres, 2).unwrap();
        assert_eq!(split.mid, ideal("x1*x2, x1*x3", 4));
    }

    #[test]
    fn certify_worked_examples() {
        let cert = certify_weak_conjecture(&ideal("x1*x2, x1*x3, x2*x4", 4)).unwrap();
        assert!(cert.claimed_bound >= 3);
        assert!(matches!(
            verify_decomposition(&cert.decomposition),
            Verdict::Valid
        ));

        let cert = certify_weak_conjecture(&ideal("x1, x2*x3, x2*x4", 4)).unwrap();
        assert!(cert.claimed_bound >= 2);

        let cert = certify_weak_conjecture(&ideal("x1", 1)).unwrap();
        assert_eq!(cert.claimed_bound, 1);
    }

    #[test]
    fn certify_records_trace_shape() {
        let cert = certify_weak_conjecture(&ideal("x1*x2, x1*x3, x2*x4", 4)).unwrap();
        assert_eq!(cert.trace[0].ring_size, 4);
        assert_eq!(cert.trace[0].branch, BranchLabel::Bad);
        assert_eq!(cert.trace[0].source, CertSource::Search);
        assert_eq!(cert.trace[0].depth_sub_quotient, Some(1));
        assert_eq!(cert.trace[0].depth_quotient, Some(2));
        assert!(!cert.trace[0].children.is_empty());
        for node in &cert.trace {
            for &c in &node.children {
                assert!(c < cert.trace.len());
                assert_eq!(cert.trace[c].ring_size + 1, node.ring_size);
            }
        }
    }

    #[test]
    fn certify_rejects_degenerate_inputs() {
        assert!(certify_weak_conjecture(&Ideal::zero(2)).is_err());
        assert!(certify_weak_conjecture(&Ideal::unit(2)).is_err());
        assert!(certify_weak_conjecture(&ideal("x1^2", 2)).is_err());
    }
}
