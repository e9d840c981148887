//! Randomized structural checks: basis-change round trips, grading and
//! positivity of structure constants, commutativity, and involutions.

use hopf_trees::alg::lincomb::{coproduct, product, scalar, HopfAlg, Vect};
use hopf_trees::alg::qsym::{compositions, Composition};
use hopf_trees::alg::{nck, qsym, ssym, ysym};
use hopf_trees::forest::Forest;
use hopf_trees::perm::Permutation;
use hopf_trees::tree::Tree;
use proptest::prelude::*;

fn tree_strategy() -> impl Strategy<Value = Tree> {
    (0usize..=5).prop_flat_map(|n| {
        let all = Tree::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn small_tree_strategy() -> impl Strategy<Value = Tree> {
    (0usize..=3).prop_flat_map(|n| {
        let all = Tree::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn perm_strategy() -> impl Strategy<Value = Permutation> {
    (0usize..=3).prop_flat_map(|n| {
        let all = Permutation::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn comp_strategy() -> impl Strategy<Value = Composition> {
    (0usize..=6).prop_flat_map(|n| {
        let all = compositions(n);
        (0..all.len().max(1)).prop_map(move |i| all[i].clone())
    })
}

fn forest_strategy() -> impl Strategy<Value = Forest> {
    (0usize..=4).prop_flat_map(|n| {
        let all = Forest::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

/// Every nonzero structure constant is a positive integer and all keys in a
/// graded product live in the expected degree.
fn graded_positive<A: HopfAlg>(a: &A::Key, b: &A::Key) {
    let prod = product::<A>(&Vect::basis(a.clone()), &Vect::basis(b.clone()));
    let n = A::degree(a) + A::degree(b);
    for (k, c) in &prod.0 {
        assert_eq!(A::degree(k), n);
        assert!(c.is_integer() && *c > scalar(0), "coefficient {c} at degree {n}");
    }
    let cop = coproduct::<A>(&Vect::basis(a.clone()));
    for ((x, y), c) in &cop.0 {
        assert_eq!(A::degree(x) + A::degree(y), A::degree(a));
        assert!(c.is_integer() && *c > scalar(0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn tree_bases_round_trip(t in tree_strategy()) {
        let v = Vect::basis(t);
        prop_assert_eq!(ysym::f_to_m(&ysym::m_to_f(&v)), v.clone());
        prop_assert_eq!(ysym::m_to_f(&ysym::f_to_m(&v)), v);
    }

    #[test]
    fn perm_bases_round_trip(s in perm_strategy()) {
        let v = Vect::basis(s);
        prop_assert_eq!(ssym::f_to_m(&ssym::m_to_f(&v)), v.clone());
        prop_assert_eq!(ssym::m_to_f(&ssym::f_to_m(&v)), v);
    }

    #[test]
    fn comp_bases_round_trip(alpha in comp_strategy()) {
        let v = Vect::basis(alpha);
        prop_assert_eq!(qsym::f_to_m(&qsym::m_to_f(&v)), v.clone());
        prop_assert_eq!(qsym::m_to_f(&qsym::f_to_m(&v)), v);
    }

    #[test]
    fn tree_products_graded_positive(a in small_tree_strategy(), b in small_tree_strategy()) {
        graded_positive::<ysym::YsymF>(&a, &b);
        graded_positive::<ysym::YsymM>(&a, &b);
    }

    #[test]
    fn perm_products_graded_positive(a in perm_strategy(), b in perm_strategy()) {
        graded_positive::<ssym::SsymF>(&a, &b);
        graded_positive::<ssym::SsymM>(&a, &b);
    }

    #[test]
    fn quasi_shuffle_commutes(a in comp_strategy(), b in comp_strategy()) {
        let lhs = qsym::QsymM::product_keys(&a, &b);
        let rhs = qsym::QsymM::product_keys(&b, &a);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tree_involution_squares_to_identity(t in tree_strategy()) {
        let v = Vect::basis(t);
        prop_assert_eq!(ysym::involution(&ysym::involution(&v)), v);
    }

    #[test]
    fn comp_involution_squares_to_identity(alpha in comp_strategy()) {
        let v = Vect::basis(alpha);
        prop_assert_eq!(qsym::involution(&qsym::involution(&v)), v);
    }

    #[test]
    fn forest_involution_anti_multiplicative(a in forest_strategy(), b in forest_strategy()) {
        let va = Vect::basis(a.clone());
        prop_assert_eq!(nck::involution(&nck::involution(&va)), va);
        let lhs = nck::involution(&nck::Nck::product_keys(&a, &b));
        let rhs = nck::Nck::product_keys(&b.reflect(), &a.reflect());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tamari_order_matches_weak_order(a in tree_strategy(), b in tree_strategy()) {
        // the Tamari order is the weak order restricted along gamma
        if a.degree() == b.degree() {
            let n = a.degree();
            let poset = hopf_trees::poset::Poset::new(hopf_trees::poset::Family::Tamari, n);
            let ea = hopf_trees::poset::Element::Tree(a.clone());
            let eb = hopf_trees::poset::Element::Tree(b.clone());
            prop_assert_eq!(
                poset.leq(&ea, &eb).unwrap(),
                hopf_trees::maps::gamma(&a).weak_leq(&hopf_trees::maps::gamma(&b))
            );
        }
    }
}
