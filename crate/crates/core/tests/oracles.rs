// Library results against brute-force references and hand-computed values.

mod common;

use std::collections::BTreeMap;

use prelie_operads::instances::{
    free_ns_compose, FreeOperad, Instance, RootedTreeOperad, Signature,
};
use prelie_operads::operad::{
    check_prelie_law_with, coinvariant_graft, coinvariant_insertion, coinvariant_product,
    insertion_closed_form, insertion_element, prelie_product, Operad, PreLieFlavor,
};
use prelie_operads::prelie::insertion_recursive;
use prelie_operads::trees::{
    parse_labeled, parse_planar, parse_unlabeled, LabeledTree, UnlabeledTree,
};
use prelie_operads::verify::{run_law, Bounds, Law};
use prelie_operads::{Error, FormalSum};

fn as_parent_map(x: &FormalSum<LabeledTree>) -> BTreeMap<Vec<Option<usize>>, i64> {
    x.iter()
        .map(|(t, c)| (t.parents().to_vec(), c.to_string().parse().unwrap()))
        .collect()
}

fn rooted_compositions_match(op: &RootedTreeOperad, nap: bool) {
    let basis = op.basis_up_to(3).unwrap();
    for (mu, nu) in itertools_pairs(&basis) {
        for slot in 1..=mu.size() {
            let ours = op.compose(mu, slot, nu).unwrap();
            let oracle = common::rooted_compose(mu.parents(), slot, nu.parents(), nap);
            assert_eq!(as_parent_map(&ours), oracle, "{mu} o_{slot} {nu}");
        }
    }
}

fn itertools_pairs<T>(xs: &[T]) -> impl Iterator<Item = (&T, &T)> {
    xs.iter().flat_map(move |a| xs.iter().map(move |b| (a, b)))
}

#[test]
fn prelie_operad_composition_matches_reattachment_enumeration() {
    rooted_compositions_match(&RootedTreeOperad::prelie(), false);
}

#[test]
fn nap_operad_composition_matches_root_reattachment() {
    rooted_compositions_match(&RootedTreeOperad::nap(), true);
}

#[test]
fn edge_compositions() {
    let prelie = RootedTreeOperad::prelie();
    let edge = parse_labeled("1(2)").unwrap();
    let chain = FormalSum::basis(parse_labeled("1(2(3))").unwrap());
    assert_eq!(prelie.compose(&edge, 2, &edge).unwrap(), chain);
    let expected = &chain + &FormalSum::basis(parse_labeled("1(2,3)").unwrap());
    assert_eq!(prelie.compose(&edge, 1, &edge).unwrap(), expected);
    let nap = RootedTreeOperad::nap();
    assert_eq!(
        nap.compose(&edge, 1, &edge).unwrap(),
        FormalSum::basis(parse_labeled("1(2,3)").unwrap())
    );
    let id = LabeledTree::single();
    for t in prelie.basis_up_to(3).unwrap() {
        for slot in 1..=t.size() {
            assert_eq!(
                prelie.compose(&t, slot, &id).unwrap(),
                FormalSum::basis(t.clone())
            );
        }
    }
}

#[test]
fn planar_plugging() {
    let g = parse_planar("g(1,2)").unwrap();
    let leaf = parse_planar("1").unwrap();
    assert_eq!(
        free_ns_compose(&leaf, 1, &g).unwrap(),
        FormalSum::basis(g.clone())
    );
    let right = free_ns_compose(&g, 2, &g).unwrap();
    assert_eq!(
        right,
        FormalSum::basis(parse_planar("g(1,g(2,3))").unwrap())
    );
    let left = free_ns_compose(&g, 1, &g).unwrap();
    assert_eq!(left, FormalSum::basis(parse_planar("g(g(1,2),3)").unwrap()));
    assert!(matches!(
        free_ns_compose(&g, 3, &g),
        Err(Error::SlotOutOfRange { slot: 3, arity: 2 })
    ));
}

#[test]
fn mag2_products_match_direct_substitution() {
    let mag2 = FreeOperad::mag2();
    for a in 1..=3 {
        for b in 1..=3 {
            for x in common::binary_trees(a) {
                for y in common::binary_trees(b) {
                    let ours = prelie_product(
                        &mag2,
                        &FormalSum::basis(mag2.parse_basis(&x.render()).unwrap()),
                        &FormalSum::basis(mag2.parse_basis(&y.render()).unwrap()),
                    )
                    .unwrap();
                    let oracle = common::bin_product(&[(x.clone(), 1)].into(), &[(y, 1)].into());
                    let ours: BTreeMap<String, String> = ours
                        .iter()
                        .map(|(k, c)| (k.to_string(), c.to_string()))
                        .collect();
                    assert_eq!(ours, common::render_bin_sum(&oracle));
                }
            }
        }
    }
}

#[test]
fn vanishing_with_one_and_two_extra_arguments() {
    for inst in Instance::all_operads() {
        match inst {
            Instance::NsAssoc(op) => extra_arguments_vanish(&op),
            Instance::Free(op) => extra_arguments_vanish(&op),
            Instance::Rooted(op) => extra_arguments_vanish(&op),
            Instance::FreePreLie => unreachable!(),
        }
    }
}

fn extra_arguments_vanish<O: Operad>(op: &O) {
    let small = op.basis_up_to(2).unwrap();
    for mu in &small {
        let n = op.arity(mu);
        for extra in 1..=2 {
            let args: Vec<_> = (0..n + extra)
                .map(|k| FormalSum::basis(small[k % small.len()].clone()))
                .collect();
            let value =
                insertion_element(op, &FormalSum::basis(mu.clone()), &args, PreLieFlavor::Full)
                    .unwrap();
            assert!(
                value.is_zero(),
                "{} with {} arguments",
                op.format_basis(mu),
                n + extra
            );
        }
        let args: Vec<_> = vec![small[0].clone(); n];
        let closed = insertion_closed_form(op, mu, &args).unwrap();
        assert!(!closed.is_zero());
    }
}

#[test]
fn positive_flavor_rejects_the_identity() {
    let mag2 = FreeOperad::mag2();
    let g = FormalSum::basis(mag2.parse_basis("g").unwrap());
    let id = FormalSum::basis(mag2.identity());
    let err = insertion_element(&mag2, &g, std::slice::from_ref(&id), PreLieFlavor::Positive)
        .unwrap_err();
    assert!(matches!(err, Error::FlavorViolation { .. }));
    assert!(insertion_element(&mag2, &g, &[id], PreLieFlavor::Full).is_ok());
}

#[test]
fn positive_part_is_closed_under_the_product() {
    let prelie = RootedTreeOperad::prelie();
    let positive: Vec<_> = prelie
        .basis_up_to(3)
        .unwrap()
        .into_iter()
        .filter(|t| t.size() >= 2)
        .collect();
    for (a, b) in itertools_pairs(&positive) {
        let p = prelie_product(
            &prelie,
            &FormalSum::basis(a.clone()),
            &FormalSum::basis(b.clone()),
        )
        .unwrap();
        assert!(p
            .keys()
            .all(|t| PreLieFlavor::Positive.accepts_arity(t.size())));
        assert!(p.keys().all(|t| t.size() == a.size() + b.size() - 1));
    }
}

#[test]
fn coinvariant_graft_is_free_grafting() {
    let prelie = RootedTreeOperad::prelie();
    let dot = FormalSum::basis(UnlabeledTree::root());
    let chain = FormalSum::basis(parse_unlabeled("(())").unwrap());
    assert_eq!(coinvariant_graft(&prelie, &dot, &dot).unwrap(), chain);
    // The operadic product on classes keeps degrees additive instead.
    assert_eq!(coinvariant_product(&prelie, &dot, &dot).unwrap(), dot);
}

#[test]
fn coinvariant_insertion_respects_flavor() {
    let prelie = RootedTreeOperad::prelie();
    let dot = FormalSum::basis(UnlabeledTree::root());
    let edge = FormalSum::basis(parse_unlabeled("(())").unwrap());
    let err = coinvariant_insertion(
        &prelie,
        &edge,
        std::slice::from_ref(&dot),
        PreLieFlavor::PositiveCoinvariant,
    );
    assert!(matches!(err, Err(Error::FlavorViolation { .. })));
    let zero = coinvariant_insertion(
        &prelie,
        &dot,
        &[dot.clone(), dot.clone()],
        PreLieFlavor::Coinvariant,
    )
    .unwrap();
    assert!(zero.is_zero());
    let value = coinvariant_insertion(
        &prelie,
        &edge,
        std::slice::from_ref(&edge),
        PreLieFlavor::PositiveCoinvariant,
    )
    .unwrap();
    assert!(!value.is_zero());
}

#[test]
fn free_prelie_insertion_against_attachment_count() {
    let t = parse_unlabeled("(()())").unwrap();
    let args = ["()", "(())", "()"];
    let basis: Vec<_> = args
        .iter()
        .map(|s| FormalSum::basis(parse_unlabeled(s).unwrap()))
        .collect();
    let ours = insertion_recursive(&FormalSum::basis(t), &basis).unwrap();
    let oracle = common::attach_everywhere("(()())", &args);
    let ours: BTreeMap<String, i64> = ours
        .iter()
        .map(|(k, c)| {
            (
                common::normalize_code(k.code()),
                c.to_string().parse().unwrap(),
            )
        })
        .collect();
    assert_eq!(ours, oracle);
    assert_eq!(oracle.values().sum::<i64>(), 27);
}

#[test]
fn two_generator_free_operad() {
    let inst: Instance = "free:g:2,h:3".parse().unwrap();
    for law in Law::applicable(&inst) {
        let max_arity = if law.name().starts_with("insertion") {
            2
        } else {
            3
        };
        let b = Bounds {
            max_arity,
            ..Bounds::default()
        };
        let report = run_law(&inst, law, &b).unwrap();
        assert!(report.passed(), "{}", report.to_text());
        assert!(report.cases_checked > 0);
    }

    let op = FreeOperad::new(Signature::parse("g:2,h:3").unwrap());
    let (g, h, id) = (
        op.parse_basis("g").unwrap(),
        op.parse_basis("h").unwrap(),
        op.identity(),
    );
    let full = PreLieFlavor::Full;
    let sum = |b: &prelie_operads::trees::PlanarTerm| FormalSum::basis(b.clone());
    for args in [vec![&g, &g, &g, &g], vec![&id, &g, &h, &id]] {
        let args: Vec<_> = args.into_iter().map(sum).collect();
        assert!(insertion_element(&op, &sum(&h), &args, full)
            .unwrap()
            .is_zero());
    }
    for args in [vec![&g, &g, &g], vec![&g, &id, &h]] {
        let basis: Vec<_> = args.iter().map(|b| (*b).clone()).collect();
        let summed: Vec<_> = args.into_iter().map(sum).collect();
        let recursive = insertion_element(&op, &sum(&h), &summed, full).unwrap();
        assert_eq!(recursive, insertion_closed_form(&op, &h, &basis).unwrap());
        assert!(!recursive.is_zero());
    }
    assert!(Signature::parse("g:1").is_err());
    assert!(Signature::parse("g:2,g:3").is_err());
}

#[test]
fn coinvariant_product_is_prelie() {
    let classes: Vec<UnlabeledTree> = (1..=3)
        .flat_map(|n| UnlabeledTree::enumerate(n).unwrap())
        .collect();
    for op in [RootedTreeOperad::prelie(), RootedTreeOperad::nap()] {
        let mut product = |a: &FormalSum<UnlabeledTree>, b: &FormalSum<UnlabeledTree>| {
            coinvariant_product(&op, a, b)
        };
        for x in &classes {
            for y in &classes {
                for z in &classes {
                    let (x, y, z) = (
                        FormalSum::basis(x.clone()),
                        FormalSum::basis(y.clone()),
                        FormalSum::basis(z.clone()),
                    );
                    let verdict =
                        check_prelie_law_with(&x, &y, &z, &mut product, |s| s.to_string()).unwrap();
                    assert!(verdict.holds());
                }
            }
        }
    }
}
