//! Exhaustive and randomized properties of the engines that go beyond
//! the acceptance criteria: short-exact-sequence depth bounds,
//! symmetry invariance, branch bookkeeping, and the combination bounds.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use sdepth_core::construct::{certify_weak_conjecture, colon_transform, combine_h1, BranchLabel};
use sdepth_core::enumerate::{all_ideals, proper_nonzero_ideals};
use sdepth_core::harness::{verify_batch, CheckId};
use sdepth_core::ideal::{Ideal, QuotientPresentation};
use sdepth_core::koszul::depth;
use sdepth_core::monomial::Monomial;
use sdepth_core::stanley::{sdepth_exact, verify_decomposition, StanleyDecomposition};

fn depth_q(i: &Ideal) -> usize {
    depth(&QuotientPresentation::quotient_ring(i.clone()).unwrap())
        .unwrap()
        .expect_finite()
}

fn depth_pair(inner: &Ideal, outer: &Ideal) -> usize {
    depth(&QuotientPresentation::new(inner.clone(), outer.clone()).unwrap())
        .unwrap()
        .expect_finite()
}

/// depth J/I >= min(depth S/I, depth S/J + 1) from 0 -> J/I -> S/I -> S/J -> 0.
#[test]
fn depth_lemma_on_quotient_sequences() {
    for n in 1..=4 {
        let ideals = all_ideals(n);
        for inner in &ideals {
            if !inner.is_proper() {
                continue;
            }
            for outer in &ideals {
                if outer.is_zero()
                    || !outer.is_proper()
                    || inner == outer
                    || !inner.is_contained_in(outer)
                {
                    continue;
                }
                let lhs = depth_pair(inner, outer);
                let bound = depth_q(inner).min(depth_q(outer) + 1);
                assert!(
                    lhs >= bound,
                    "depth lemma violated for ({inner}) in ({outer}): {lhs} < {bound}"
                );
            }
        }
    }
}

/// 0 <= depth <= dimension on every nonzero presentation tested.
#[test]
fn depth_bounded_by_dimension() {
    for n in 1..=3 {
        let ideals = all_ideals(n);
        for inner in &ideals {
            if !inner.is_proper() {
                continue;
            }
            for outer in &ideals {
                if outer.is_zero() || inner == outer || !inner.is_contained_in(outer) {
                    continue;
                }
                let pres = QuotientPresentation::new(inner.clone(), outer.clone()).unwrap();
                let d = depth(&pres).unwrap().expect_finite();
                let dim = pres.dimension().unwrap().finite().unwrap();
                assert!(d <= dim, "depth {d} exceeds dimension {dim} for {pres}");
            }
        }
    }
}

fn permuted(i: &Ideal, perm: &[usize]) -> Ideal {
    let n = i.ring_size();
    let gens: Vec<Monomial> = i
        .gens()
        .iter()
        .map(|g| {
            let mut exps = vec![0u16; n];
            for v in 1..=n {
                exps[perm[v - 1] - 1] = g.exponent(v);
            }
            Monomial::new(&exps)
        })
        .collect();
    Ideal::normalize(n, &gens).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &out {
            for v in 1..=n {
                if !p.contains(&v) {
                    let mut q = p.clone();
                    q.push(v);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

/// depth and sdepth are invariant under relabeling the variables.
#[test]
fn symmetry_consistency() {
    for n in 1..=4 {
        let perms = permutations(n);
        for i in proper_nonzero_ideals(n) {
            let d = depth_q(&i);
            let s = sdepth_exact(&QuotientPresentation::of_ideal(i.clone()).unwrap())
                .unwrap()
                .value;
            for perm in &perms {
                let img = permuted(&i, perm);
                assert_eq!(depth_q(&img), d, "depth not invariant for ({i}) under {perm:?}");
                let s2 = sdepth_exact(&QuotientPresentation::of_ideal(img).unwrap())
                    .unwrap()
                    .value;
                assert_eq!(s2, s, "sdepth not invariant for ({i}) under {perm:?}");
            }
        }
    }
}

/// The lift law behind the recursion: one fresh free variable adds one.
#[test]
fn sdepth_lift_law() {
    for n in 2..=4 {
        let report = verify_batch(CheckId::HvzLift, n).unwrap();
        assert!(report.passed(), "{}", report.to_json());
    }
}

#[test]
fn height_one_pair_check() {
    let report = verify_batch(CheckId::Lemma41, 4).unwrap();
    assert!(report.passed());
    assert!(report.summary.cases > 0);
}

/// Whenever the certifier picks the hard branch and the two split
/// quotients have equal depth, the quotient module J/I gains a depth:
/// depth J/I >= 1 + depth S'/I.
#[test]
fn bad_branch_depth_bookkeeping() {
    let mut bad_nodes = 0;
    for t in proper_nonzero_ideals(4) {
        let cert = certify_weak_conjecture(&t).unwrap();
        for node in &cert.trace {
            if node.branch != BranchLabel::Bad {
                continue;
            }
            bad_nodes += 1;
            let r = node.ring_size;
            let (i_full, j_full) = node.target.split_var(r).unwrap();
            let i = i_full.restricted(r - 1);
            let j = j_full.restricted(r - 1);
            if depth_q(&i) == depth_q(&j) {
                let dji = depth_pair(&i, &j);
                assert!(
                    dji >= 1 + depth_q(&i),
                    "bad-branch bookkeeping fails at ({})",
                    node.target
                );
            }
        }
    }
    assert!(bad_nodes > 0, "the four-variable run must hit the hard branch");
}

/// Gluing a quotient decomposition with an ideal decomposition stays
/// verified and keeps the minimum of the two bounds.
#[test]
fn combine_h1_bounds_over_three_variable_pairs() {
    let small = proper_nonzero_ideals(3);
    for i in &small {
        for j in &small {
            if i == j || !i.is_contained_in(j) {
                continue;
            }
            let n = 4;
            let pres_quot =
                QuotientPresentation::new(i.extended(n), j.extended(n)).unwrap();
            let d_quot = sdepth_exact(&pres_quot).unwrap().decomposition(&pres_quot);
            let pres_ideal = QuotientPresentation::of_ideal(i.clone()).unwrap();
            let d_ideal = sdepth_exact(&pres_ideal).unwrap().decomposition(&pres_ideal);
            let out = combine_h1(&d_quot, &d_ideal).unwrap();
            assert!(
                verify_decomposition(&out).is_valid(),
                "combine output invalid for ({i}) in ({j})"
            );
            assert!(
                out.sdepth().unwrap()
                    >= d_quot.sdepth().unwrap().min(d_ideal.sdepth().unwrap()),
                "combine bound violated for ({i}) in ({j})"
            );
        }
    }
}

/// Randomized colon-transform soundness: at least a thousand cases over
/// rings with up to four variables.
#[test]
fn colon_transform_randomized_soundness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC01);
    let pool: Vec<Ideal> = (2..=4).flat_map(proper_nonzero_ideals).collect();
    let mut cases = 0;
    while cases < 1000 {
        let i = pool.choose(&mut rng).unwrap();
        let n = i.ring_size();
        let exps: Vec<u16> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
        let v = Monomial::new(&exps);
        if i.contains(&v) {
            continue;
        }
        let pres = QuotientPresentation::of_ideal(i.clone()).unwrap();
        let d: StanleyDecomposition = sdepth_exact(&pres).unwrap().decomposition(&pres);
        let out = colon_transform(&d, &v).unwrap();
        assert_eq!(*out.target.outer(), i.colon(&v).unwrap());
        assert!(
            verify_decomposition(&out).is_valid(),
            "colon transform unsound for ({i}) : {v}"
        );
        assert!(out.sdepth().unwrap() >= d.sdepth().unwrap());
        cases += 1;
    }
}
