//! Algebraic properties over random tables.

mod common;

use common::{any_table, genetic_table, literal_associative};
use genetic_groupoid::constructions::{
    genetic_product, product_chain, splicing_groupoid, ProductShape, SplicingSpec,
};
use genetic_groupoid::morphisms::{
    automorphism_group, find_isomorphism, is_automorphism, lift_automorphism, transport_n,
    Permutation,
};
use genetic_groupoid::{Groupoid, NGroupoid};
use proptest::prelude::*;

fn perm(k: usize) -> impl Strategy<Value = Permutation> {
    Just((0..k).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn predicates_match_their_definitions(g in any_table(4)) {
        let k = g.order();
        let idem = (0..k).all(|a| g.mul(a, a) == a);
        let nc = (0..k).all(|a| (0..k).all(|b| a == b || g.mul(a, b) != g.mul(b, a)));
        prop_assert_eq!(g.is_idempotent(), idem);
        prop_assert_eq!(g.is_nowhere_commutative(), nc);
        prop_assert_eq!(g.is_genetic(), idem && nc);
        prop_assert_eq!(g.is_associative(), literal_associative(&g));
        let band = literal_associative(&g)
            && (0..k).all(|a| (0..k).all(|b| g.mul(g.mul(a, b), a) == a));
        prop_assert_eq!(g.is_rectangular_band(), band);
    }

    #[test]
    fn bands_are_genetic(n in 1usize..5, m in 1usize..5) {
        let b = Groupoid::rectangular_band(n, m).unwrap();
        prop_assert!(b.is_rectangular_band());
        prop_assert!(b.is_genetic());
        prop_assert_eq!(b.band_dimensions(), (n, m));
    }

    #[test]
    fn order_two_genetic_is_associative(g in genetic_table(2)) {
        prop_assert!(g.is_associative());
    }

    #[test]
    fn compact_form_round_trips(g in genetic_table(3).prop_filter("order 3", |g| g.order() == 3)) {
        let s = g.to_compact3().unwrap();
        prop_assert_eq!(Groupoid::parse_compact3(&s).unwrap(), g);
    }

    #[test]
    fn isomorphism_is_reflexive_and_symmetric(
        (g, p, anti) in genetic_table(5).prop_flat_map(|g| { let k = g.order(); (Just(g), perm(k), any::<bool>()) })
    ) {
        let a: NGroupoid = g.into();
        let b = transport_n(&a, &p, anti);
        let refl = find_isomorphism(&a, &a, false, false).unwrap().unwrap();
        prop_assert!(refl.verify(&a, &a));
        let ab = find_isomorphism(&a, &b, true, false).unwrap().unwrap();
        let ba = find_isomorphism(&b, &a, true, false).unwrap().unwrap();
        prop_assert!(ab.verify(&a, &b));
        prop_assert!(ba.verify(&b, &a));
    }

    #[test]
    fn witnesses_preserve_predicates(
        (g, p, anti) in any_table(4).prop_flat_map(|g| { let k = g.order(); (Just(g), perm(k), any::<bool>()) })
    ) {
        let a: NGroupoid = g.clone().into();
        let b = transport_n(&a, &p, anti);
        let w = find_isomorphism(&a, &b, true, false).unwrap().unwrap();
        prop_assert!(w.verify(&a, &b));
        let h = b.op(0).unwrap();
        prop_assert_eq!(g.is_idempotent(), h.is_idempotent());
        prop_assert_eq!(g.is_nowhere_commutative(), h.is_nowhere_commutative());
        prop_assert_eq!(g.is_associative(), h.is_associative());
        prop_assert_eq!(g.is_rectangular_band(), h.is_rectangular_band());
    }

    #[test]
    fn genetic_product_preserves_genetic_and_counts(a in genetic_table(3), b in genetic_table(3), d in 0usize..3) {
        let (a, b): (NGroupoid, NGroupoid) = (a.into(), b.into());
        let p = genetic_product(&a, &b).unwrap();
        prop_assert!(p.is_genetic());
        prop_assert_eq!(p.order(), a.order() * b.order());
        prop_assert_eq!(p.op_count(), a.op_count() + b.op_count() + 1);
        let e = genetic_product(&p, &NGroupoid::bare(d)).unwrap();
        prop_assert_eq!(e.op_count(), p.op_count() + 1);
        prop_assert!(e.is_genetic());
    }

    #[test]
    fn lifted_automorphisms_are_automorphisms(a in genetic_table(3), b in genetic_table(3)) {
        let shape = ProductShape::new(vec![a.clone().into(), b.into()]).unwrap();
        let product = shape.materialize(64).unwrap();
        for phi in automorphism_group(&a.into()).unwrap().elements() {
            let lifted = lift_automorphism(&shape, 0, phi).unwrap();
            prop_assert!(is_automorphism(&product, &lifted));
        }
    }

    /// With equal factors, an automorphism of the product that moves only
    /// the first coordinate restricts to an automorphism of that factor.
    #[test]
    fn coordinatewise_automorphisms_restrict(a in genetic_table(3), p in perm(3)) {
        prop_assume!(a.order() == 3);
        let f: NGroupoid = a.clone().into();
        let shape = ProductShape::new(vec![f.clone(), f.clone()]).unwrap();
        let product = shape.materialize(64).unwrap();
        let image: Vec<usize> = (0..9).map(|r| {
            let t = shape.unrank(r);
            shape.rank(&[p.apply(t[0]), t[1]])
        }).collect();
        let lifted = Permutation::new(image).unwrap();
        prop_assert_eq!(is_automorphism(&product, &lifted), is_automorphism(&f, &p));
    }

    #[test]
    fn splicing_is_a_chain_of_bare_factors(n in 0usize..4, d in 1usize..3) {
        let spec = SplicingSpec::uniform(n, d);
        prop_assume!((d + 1).pow(n as u32 + 1) <= 256);
        let chain = product_chain(&vec![NGroupoid::bare(d); n + 1]).unwrap();
        let ga = splicing_groupoid(&spec).unwrap();
        prop_assert_eq!(&chain, &ga);
        prop_assert_eq!(&spec.shape().materialize(256).unwrap(), &ga);
        prop_assert!(ga.is_genetic());
    }
}
