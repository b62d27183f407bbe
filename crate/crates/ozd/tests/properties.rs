//! Property-based and exhaustive invariants of the chain arithmetic and the
//! closure engine.

use proptest::prelude::*;

use ozd::chain::{equivalence_closure, Transformation};
use ozd::engine;
use ozd::families::{self, FamilyName};
use ozd::sets::{self, ElementStore, SemigroupId};

fn all_transformations(n: usize) -> Vec<Transformation> {
    let mut out = Vec::new();
    let mut word = vec![1usize; n];
    loop {
        out.push(Transformation::new(n, &word).unwrap());
        let mut pos = n;
        while pos > 0 && word[pos - 1] == n {
            word[pos - 1] = 1;
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
        word[pos - 1] += 1;
    }
}

fn arb_transformation(n: usize) -> impl Strategy<Value = Transformation> {
    prop::collection::vec(1..=n, n).prop_map(move |v| Transformation::new(n, &v).unwrap())
}

fn arb_order_preserving(n: usize) -> impl Strategy<Value = Transformation> {
    prop::collection::vec(1..=n, n).prop_map(move |mut v| {
        v.sort_unstable();
        Transformation::new(n, &v).unwrap()
    })
}

fn arb_triple() -> impl Strategy<Value = (Transformation, Transformation, Transformation)> {
    (2usize..=6).prop_flat_map(|n| {
        (
            arb_transformation(n),
            arb_transformation(n),
            arb_transformation(n),
        )
    })
}

#[test]
fn associativity_exhaustive_small() {
    for n in 1..=3 {
        let all = all_transformations(n);
        for a in &all {
            for b in &all {
                let ab = a.compose(b).unwrap();
                for c in &all {
                    let bc = b.compose(c).unwrap();
                    assert_eq!(ab.compose(c).unwrap(), a.compose(&bc).unwrap());
                }
            }
        }
    }
}

#[test]
fn composition_laws_exhaustive() {
    for n in 2..=4 {
        let o = sets::enumerate(&SemigroupId::O { n }).unwrap();
        for a in &o {
            for b in &o {
                // Order-preserving maps are closed under composition.
                assert!(a.compose(b).unwrap().is_order_preserving());
            }
            // Constants absorb on the right.
            for k in 1..=n {
                let pi = Transformation::constant(n, k).unwrap();
                assert_eq!(a.compose(&pi).unwrap(), pi);
            }
        }
    }
}

#[test]
fn duality_is_a_monoid_isomorphism_exhaustive() {
    for n in 2..=4 {
        let all = all_transformations(n);
        for a in &all {
            assert_eq!(
                a.is_order_preserving(),
                a.dual().is_order_preserving(),
                "duality must preserve monotonicity"
            );
            for b in &all {
                assert_eq!(
                    a.compose(b).unwrap().dual(),
                    a.dual().compose(&b.dual()).unwrap()
                );
            }
        }
    }
}

#[test]
fn kernel_coarsens_under_right_composition_exhaustive() {
    for n in 2..=4 {
        let all = all_transformations(n);
        for b in &all {
            let kb = b.kernel();
            for g in &all {
                let product_kernel = b.compose(g).unwrap().kernel();
                assert!(kb.refines(&product_kernel));
            }
        }
    }
}

#[test]
fn delta_kernels_are_generated_pairs() {
    let n = 6;
    for i in 3..=n - 1 {
        let delta = families::delta(n, i).unwrap();
        let closure = equivalence_closure(&[(1, 2), (i, i + 1)], n).unwrap();
        assert_eq!(delta.kernel(), closure);
    }
}

#[test]
fn witnesses_match_membership_exhaustive() {
    for n in 2..=4 {
        let o = sets::enumerate(&SemigroupId::O { n }).unwrap();
        for a in &o {
            for k in 1..=n {
                let pi = Transformation::constant(n, k).unwrap();
                match families::left_witness(a, k).unwrap() {
                    Some(w) => {
                        assert!(sets::in_l(a, k).unwrap());
                        assert_ne!(w, pi);
                        assert_eq!(a.compose(&w).unwrap(), pi);
                    }
                    None => assert!(!sets::in_l(a, k).unwrap()),
                }
                match families::right_witness(a, k).unwrap() {
                    Some(w) => {
                        assert!(sets::in_r(a, k).unwrap());
                        assert_ne!(w, pi);
                        assert_eq!(w.compose(a).unwrap(), pi);
                    }
                    None => assert!(!sets::in_r(a, k).unwrap()),
                }
            }
        }
    }
}

#[test]
fn family_membership_invariants() {
    for n in 3..=7 {
        let eplus = families::family(FamilyName::EPlus, n).unwrap();
        let eminus = families::family(FamilyName::EMinus, n).unwrap();
        for k in 1..=n - 1 {
            for xi in eplus.iter() {
                assert!(sets::in_l(xi, k).unwrap(), "ξ ∉ L_{k} at n={n}");
            }
        }
        for k in 2..=n {
            for zeta in eminus.iter() {
                assert!(sets::in_l(zeta, k).unwrap(), "ζ ∉ L_{k} at n={n}");
            }
        }
        // Maximal layers of the end semigroups.
        let l1 = sets::enumerate(&SemigroupId::L { n, k: 1 }).unwrap();
        let gammas = families::family(FamilyName::DLayerL1, n).unwrap();
        let top = sets::layer(&l1, n - 1);
        assert_eq!(top.len(), gammas.len());
        for g in gammas.iter() {
            assert!(top.contains(g));
        }
        let ln = sets::enumerate(&SemigroupId::L { n, k: n }).unwrap();
        let betas = families::family(FamilyName::DLayerLn, n).unwrap();
        let top = sets::layer(&ln, n - 1);
        assert_eq!(top.len(), betas.len());
        for b in betas.iter() {
            assert!(top.contains(b));
        }
    }
    for n in 4..=7 {
        for b in families::family(FamilyName::B, n).unwrap().iter() {
            assert!(sets::in_l(b, 2).unwrap());
        }
        for f in families::family(FamilyName::C, n)
            .unwrap()
            .iter()
            .chain(families::family(FamilyName::F, n).unwrap().iter())
        {
            assert!(sets::in_r(f, 1).unwrap());
        }
    }
    for n in 5..=7 {
        for m in families::family(FamilyName::H, n)
            .unwrap()
            .iter()
            .chain(families::family(FamilyName::K, n).unwrap().iter())
            .chain(families::family(FamilyName::M, n).unwrap().iter())
        {
            assert!(sets::in_z(m, 1).unwrap());
        }
    }
}

proptest! {
    #[test]
    fn associativity_random((a, b, c) in arb_triple()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn dual_is_involutive(a in (1usize..=7).prop_flat_map(arb_transformation)) {
        prop_assert_eq!(a.dual().dual(), a);
    }

    #[test]
    fn tabular_round_trip(a in (1usize..=7).prop_flat_map(arb_order_preserving)) {
        let tf = a.tabular_form().unwrap();
        prop_assert!(tf.blocks().is_convex());
        prop_assert!(tf.blocks().is_ordered());
        prop_assert!(tf.values().windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(tf.width(), a.image().len());
        prop_assert_eq!(tf.to_transformation(), a);
    }

    #[test]
    fn closure_is_idempotent_and_monotone(
        (n, gens) in (2usize..=4).prop_flat_map(|n| {
            (Just(n), prop::collection::vec(arb_order_preserving(n), 1..=4))
        }),
        split in 1usize..=4,
    ) {
        let full = ElementStore::from_elements(n, gens.clone()).unwrap();
        let closed = engine::closure(&full).unwrap().elements;
        let again = engine::closure(&closed).unwrap().elements;
        prop_assert!(closed.same_elements(&again));
        // Any nonempty prefix generates a subset.
        let prefix_len = split.min(gens.len());
        let prefix = ElementStore::from_elements(n, gens[..prefix_len].to_vec()).unwrap();
        let smaller = engine::closure(&prefix).unwrap().elements;
        prop_assert!(smaller.is_subset_of(&closed));
    }

    #[test]
    fn store_deduplicates(
        (n, elements) in (2usize..=5).prop_flat_map(|n| {
            (Just(n), prop::collection::vec(arb_transformation(n), 0..=12))
        })
    ) {
        let store = ElementStore::from_elements(n, elements.clone()).unwrap();
        // Same set as a naive dedup, in first-seen order.
        let mut expected: Vec<Transformation> = Vec::new();
        for e in elements {
            if !expected.contains(&e) {
                expected.push(e);
            }
        }
        prop_assert_eq!(store.as_slice(), expected.as_slice());
    }

    #[test]
    fn enumeration_is_sorted_and_characterized(
        (n, k) in (2usize..=5).prop_flat_map(|n| (Just(n), 1..=n))
    ) {
        for id in [SemigroupId::L { n, k }, SemigroupId::R { n, k }, SemigroupId::Z { n, k }] {
            let store = sets::enumerate(&id).unwrap();
            prop_assert!(store.as_slice().windows(2).all(|w| w[0] < w[1]));
            for e in &store {
                prop_assert!(id.contains(e).unwrap());
            }
        }
    }
}
