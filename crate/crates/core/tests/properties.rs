//! Property tests for the exact-arithmetic layer and scheme invariants.

use proptest::prelude::*;
use twa_core::catalog::catalog;
use twa_core::group::{build_group, conjugacy_classes};
use twa_core::linalg::{rat, rat_frac, Cyc, Mat, MatrixSpan, Rat, Scalar, Span};
use twa_core::scheme::{group_scheme, trivial_scheme, wreath_all};
use twa_core::terwilliger::ac_by_intersection_numbers;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat_frac(n, d))
}

fn small_cyc(p: u32) -> impl Strategy<Value = Cyc> {
    proptest::collection::vec(small_rat(), (p - 1) as usize).prop_map(move |coeffs| {
        let mut acc = Cyc::zero(p);
        for (e, c) in coeffs.into_iter().enumerate() {
            acc = acc.add(&Cyc::zeta_pow(p, e as i64).scale(&c));
        }
        acc
    })
}

proptest! {
    #[test]
    fn span_rank_is_bounded_and_insert_idempotent(
        mats in proptest::collection::vec(
            proptest::collection::vec(-4i64..=4, 9),
            1..6,
        )
    ) {
        let mut span = MatrixSpan::new(3);
        for flat in &mats {
            let m = Mat::from_fn(3, 3, |r, c| rat(flat[3 * r + c]));
            let first = span.insert(&m).unwrap();
            // Inserting the same matrix again never increases the rank.
            prop_assert!(!span.insert(&m).unwrap());
            let _ = first;
        }
        prop_assert!(span.rank() <= mats.len().min(9));
    }

    #[test]
    fn rational_rank_is_preserved_under_cyclotomic_extension(
        mats in proptest::collection::vec(
            proptest::collection::vec(-3i64..=3, 4),
            1..5,
        )
    ) {
        let mut rat_span: Span<Rat> = Span::new(4);
        let mut cyc_span: Span<Cyc> = Span::new(4);
        for flat in &mats {
            let v: Vec<Rat> = flat.iter().map(|&x| rat(x)).collect();
            let w: Vec<Cyc> = v.iter().map(|r| Cyc::from_rat(3, r.clone())).collect();
            rat_span.insert(v);
            cyc_span.insert(w);
        }
        prop_assert_eq!(rat_span.rank(), cyc_span.rank());
    }

    #[test]
    fn cyclotomic_field_axioms(p in prop_oneof![Just(2u32), Just(3), Just(5)],
                               seed in 0u64..1_000_000) {
        // Derive three elements deterministically from the seed.
        let mk = |s: u64| {
            let mut acc = Cyc::zero(p);
            for e in 0..(p - 1) as i64 {
                let c = rat_frac(((s >> (3 * e)) % 7) as i64 - 3, 1 + (s % 3) as i64);
                acc = acc.add(&Cyc::zeta_pow(p, e).scale(&c));
            }
            acc
        };
        let (a, b, c) = (mk(seed), mk(seed / 3 + 11), mk(seed / 7 + 5));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b.mul(&c)), a.mul(&b).mul(&c));
        if !Scalar::is_zero(&a) {
            prop_assert_eq!(a.mul(&a.checked_inv().unwrap()), Cyc::one(p));
        }
    }
}

#[test]
fn cyclotomic_small_cases_via_strategy() {
    // Exercise the strategy-based generator once to keep it honest.
    use proptest::strategy::{Strategy, ValueTree};
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    for p in [2u32, 3, 5] {
        let tree = small_cyc(p).new_tree(&mut runner).unwrap();
        let v = tree.current();
        assert_eq!(v.prime(), p);
    }
}

#[test]
fn group_schemes_of_the_catalog_validate() {
    for (name, g) in catalog() {
        let s = group_scheme(&g, &conjugacy_classes(&g));
        s.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn center_counts_components_on_every_ac_catalog_group() {
    use twa_core::terwilliger::{block_closure, center_dimension, dual_idempotents};
    for (name, g) in catalog() {
        let s = group_scheme(&g, &conjugacy_classes(&g));
        let tensor = s.intersection_numbers().unwrap();
        if !ac_by_intersection_numbers(&tensor) {
            continue;
        }
        let duals = dual_idempotents(&s, g.identity()).unwrap();
        let closure = block_closure(&s, &duals);
        let center = center_dimension(&s, &closure);
        // All non-primary components are one-dimensional.
        let primary = s.classes() * s.classes();
        assert_eq!(
            center,
            1 + closure.dim() - primary,
            "component count on {name}"
        );
    }
}

#[test]
fn zeta5_generators_on_the_order_125_extraspecial_group() {
    // heisenberg:5 is the one fixture whose Wedderburn generators genuinely
    // live in Q(zeta_5): 96 character-sum projections, all exactly
    // idempotent, orthogonal and spanning one-dimensional ideals, with
    // dim T = (25 + 5 - 1)(25 + 5 - 2) + 125 = 937.
    use twa_core::terwilliger::{block_closure, dual_idempotents};
    use twa_core::wedderburn::{cam2_idempotents, pairwise_orthogonal, verify_one_dim_ideal};
    let g = build_group("heisenberg:5").unwrap();
    let s = group_scheme(&g, &conjugacy_classes(&g));
    let duals = dual_idempotents(&s, g.identity()).unwrap();
    let closure = block_closure(&s, &duals);
    assert_eq!(closure.dim(), 937);
    let gens = cam2_idempotents(&g).unwrap();
    assert_eq!(gens.len(), 96);
    for gen in &gens {
        assert!(gen.is_idempotent(), "{} not idempotent", gen.label);
        assert!(verify_one_dim_ideal(&closure, gen).unwrap(), "{}", gen.label);
    }
    assert!(pairwise_orthogonal(&gens));
}

#[test]
fn wreath_of_trivial_and_abelian_factors_is_almost_commutative() {
    let gz = |spec: &str| {
        let g = build_group(spec).unwrap();
        group_scheme(&g, &conjugacy_classes(&g))
    };
    let fixtures: Vec<Vec<twa_core::scheme::AssociationScheme>> = vec![
        vec![trivial_scheme(4).unwrap(), gz("cyclic:3")],
        vec![gz("cyclic:2"), gz("prod:cyclic:2,cyclic:2")],
        vec![gz("cyclic:3"), gz("prod:cyclic:3,cyclic:3")],
        vec![
            trivial_scheme(9).unwrap(),
            gz("cyclic:2"),
            gz("prod:cyclic:2,cyclic:2"),
        ],
        vec![trivial_scheme(5).unwrap(), trivial_scheme(3).unwrap()],
    ];
    for factors in fixtures {
        let w = wreath_all(&factors);
        w.validate().unwrap();
        let t = w.intersection_numbers().unwrap();
        assert!(
            ac_by_intersection_numbers(&t),
            "wreath of {} factors is not AC",
            factors.len()
        );
    }
}
