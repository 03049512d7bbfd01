//! Algebraic invariants of the ideal arithmetic, property-based where
//! random inputs pay off and exhaustive where the domain is small.

use proptest::prelude::*;

use sdepth_core::enumerate::all_ideals;
use sdepth_core::ideal::Ideal;
use sdepth_core::monomial::Monomial;

fn arb_monomial(n: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(|exps| Monomial::new(&exps))
}

fn arb_squarefree_ideal(n: usize) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(1u32..(1 << n), 0..5).prop_map(move |masks| Ideal::from_masks(n, &masks))
}

proptest! {
    /// (I : u) : v = I : uv, including non-squarefree u and v.
    #[test]
    fn colon_composes((i, u, v) in (2usize..=5).prop_flat_map(|n| {
        (arb_squarefree_ideal(n), arb_monomial(n, 2), arb_monomial(n, 2))
    })) {
        let two_steps = i.colon(&u).unwrap().colon(&v).unwrap();
        let one_step = i.colon(&u.mul(&v)).unwrap();
        prop_assert_eq!(two_steps, one_step);
    }

    /// Normalization is idempotent and membership-preserving.
    #[test]
    fn normalize_preserves_membership((i, m) in (2usize..=4).prop_flat_map(|n| {
        (arb_squarefree_ideal(n), arb_monomial(n, 2))
    })) {
        let renormalized = Ideal::normalize(i.ring_size(), i.gens()).unwrap();
        prop_assert_eq!(&renormalized, &i);
        // membership agrees with the raw generating set
        let n = i.ring_size();
        let raw: Vec<Monomial> = i.gens().to_vec();
        let in_raw = raw.iter().any(|g| g.divides(&m));
        prop_assert_eq!(i.contains(&m), in_raw);
        let _ = n;
    }

    /// Intersection distributes over associativity on random triples in
    /// four variables (the full triple product is checked exhaustively
    /// in three variables below).
    #[test]
    fn intersect_associates_n4((a, b, c) in (
        arb_squarefree_ideal(4),
        arb_squarefree_ideal(4),
        arb_squarefree_ideal(4),
    )) {
        let left = a.intersect(&b).unwrap().intersect(&c).unwrap();
        let right = a.intersect(&b.intersect(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn intersect_commutative_idempotent_exhaustive_n4() {
    let ideals = all_ideals(4);
    for a in &ideals {
        assert_eq!(a.intersect(a).unwrap(), *a, "idempotence fails for ({a})");
        for b in &ideals {
            assert_eq!(
                a.intersect(b).unwrap(),
                b.intersect(a).unwrap(),
                "commutativity fails for ({a}), ({b})"
            );
        }
    }
}

#[test]
fn intersect_associative_exhaustive_n3() {
    let ideals = all_ideals(3);
    for a in &ideals {
        for b in &ideals {
            let ab = a.intersect(b).unwrap();
            for c in &ideals {
                let left = ab.intersect(c).unwrap();
                let right = a.intersect(&b.intersect(c).unwrap()).unwrap();
                assert_eq!(left, right, "associativity fails for ({a}), ({b}), ({c})");
            }
        }
    }
}

#[test]
fn intersection_matches_membership_semantics() {
    // m in I ∩ J iff m in I and m in J, over the capped monomial box
    let ideals = all_ideals(3);
    for a in &ideals {
        for b in &ideals {
            let meet = a.intersect(b).unwrap();
            for mask in 0u32..8 {
                for extra in 0..3 {
                    let mut exps = [0u16; 3];
                    for v in 0..3 {
                        if mask & (1 << v) != 0 {
                            exps[v] = 1;
                        }
                    }
                    exps[extra] += 1;
                    let m = Monomial::new(&exps);
                    assert_eq!(
                        meet.contains(&m),
                        a.contains(&m) && b.contains(&m),
                        "membership mismatch at {m} for ({a}) ∩ ({b})"
                    );
                }
            }
        }
    }
}
