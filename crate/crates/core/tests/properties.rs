use proptest::prelude::*;

use prelie_operads::formalsum::{rational, Rational};
use prelie_operads::instances::{FreeOperad, RootedTreeOperad};
use prelie_operads::operad::{check_prelie_law, prelie_product, Operad};
use prelie_operads::prelie::{graft_product, insertion_recursive, nap_graft, PreLieElement};
use prelie_operads::trees::{LabeledTree, Permutation, PlanarTerm, UnlabeledTree};
use prelie_operads::FormalSum;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(images).unwrap())
}

fn labeled_with_perms() -> impl Strategy<Value = (LabeledTree, Permutation, Permutation)> {
    (1usize..=5).prop_flat_map(|n| {
        let trees = LabeledTree::enumerate(n).unwrap();
        (
            proptest::sample::select(trees),
            permutation(n),
            permutation(n),
        )
    })
}

fn unlabeled(max: usize) -> impl Strategy<Value = UnlabeledTree> {
    let all: Vec<UnlabeledTree> = (1..=max)
        .flat_map(|n| UnlabeledTree::enumerate(n).unwrap())
        .collect();
    proptest::sample::select(all)
}

fn coefficient() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(p, q)| rational(p, q))
}

fn tree_sum() -> impl Strategy<Value = PreLieElement> {
    proptest::collection::vec((unlabeled(3), coefficient()), 1..=3).prop_map(FormalSum::from_terms)
}

fn mag2_sum() -> impl Strategy<Value = FormalSum<PlanarTerm>> {
    let op = FreeOperad::mag2();
    let basis = op.basis_up_to(3).unwrap();
    proptest::collection::vec((proptest::sample::select(basis), coefficient()), 1..=3)
        .prop_map(FormalSum::from_terms)
}

fn labeled_sum() -> impl Strategy<Value = FormalSum<LabeledTree>> {
    let basis = RootedTreeOperad::prelie().basis_up_to(3).unwrap();
    proptest::collection::vec((proptest::sample::select(basis), coefficient()), 1..=2)
        .prop_map(FormalSum::from_terms)
}

proptest! {
    #[test]
    fn relabeling_is_a_left_action((t, s, r) in labeled_with_perms()) {
        let twice = t.relabel(&s).unwrap().relabel(&r).unwrap();
        prop_assert_eq!(twice, t.relabel(&r.compose(&s).unwrap()).unwrap());
        prop_assert_eq!(t.relabel(&Permutation::identity(t.size())).unwrap(), t.clone());
        prop_assert_eq!(t.relabel(&s).unwrap().forget_labels(), t.forget_labels());
    }

    #[test]
    fn permutation_inverse((_, s, _) in labeled_with_perms()) {
        let id = Permutation::identity(s.len());
        prop_assert_eq!(s.compose(&s.inverse()).unwrap(), id.clone());
        prop_assert_eq!(s.inverse().compose(&s).unwrap(), id);
    }

    #[test]
    fn grafting_satisfies_the_prelie_law(x in tree_sum(), y in tree_sum(), z in tree_sum()) {
        let assoc = |a: &PreLieElement, b: &PreLieElement, c: &PreLieElement| {
            &graft_product(&graft_product(a, b), c) - &graft_product(a, &graft_product(b, c))
        };
        prop_assert_eq!(assoc(&x, &y, &z), assoc(&x, &z, &y));
    }

    #[test]
    fn root_grafting_is_right_commutative(x in tree_sum(), y in tree_sum(), z in tree_sum()) {
        prop_assert_eq!(nap_graft(&nap_graft(&x, &y), &z), nap_graft(&nap_graft(&x, &z), &y));
    }

    #[test]
    fn grafting_is_bilinear(x in tree_sum(), y in tree_sum(), z in tree_sum(), a in coefficient()) {
        prop_assert_eq!(graft_product(&(&x + &y.scale(&a)), &z), &graft_product(&x, &z) + &graft_product(&y, &z).scale(&a));
        prop_assert_eq!(graft_product(&z, &(&x + &y.scale(&a))), &graft_product(&z, &x) + &graft_product(&z, &y).scale(&a));
    }

    #[test]
    fn mag2_product_is_bilinear_and_prelie(x in mag2_sum(), y in mag2_sum(), z in mag2_sum(), a in coefficient()) {
        let op = FreeOperad::mag2();
        let left = prelie_product(&op, &(&x + &y.scale(&a)), &z).unwrap();
        let right = &prelie_product(&op, &x, &z).unwrap() + &prelie_product(&op, &y, &z).unwrap().scale(&a);
        prop_assert_eq!(left, right);
        prop_assert!(check_prelie_law(&op, &x, &y, &z).unwrap().holds());
    }

    #[test]
    fn prelie_operad_law_on_sums(x in labeled_sum(), y in labeled_sum(), z in labeled_sum()) {
        let op = RootedTreeOperad::prelie();
        prop_assert!(check_prelie_law(&op, &x, &y, &z).unwrap().holds());
    }

    #[test]
    fn insertion_is_multilinear_in_the_last_argument(t in tree_sum(), s in tree_sum(), u in tree_sum(), v in tree_sum(), a in coefficient()) {
        let combined = insertion_recursive(&t, &[s.clone(), &u + &v.scale(&a)]).unwrap();
        let split = &insertion_recursive(&t, &[s.clone(), u]).unwrap()
            + &insertion_recursive(&t, &[s, v]).unwrap().scale(&a);
        prop_assert_eq!(combined, split);
    }
}
