use std::collections::BTreeMap;
use std::time::Instant;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::formalsum::FormalSum;
use crate::instances::{Instance, RootedKind, RootedTreeOperad};
use crate::operad::{
    all_lifts, check_grading, check_identity_relations, check_insertion_forms,
    check_insertion_symmetry, check_parallel, check_prelie_law, check_prelie_law_with,
    check_sequential, check_unit, check_vanishing, coinvariant_graft, coinvariant_product,
    coinvariant_reduce, prelie_product, Counterexample, Operad, Verdict,
};
use crate::prelie::{
    graft_product, insertion_closed, insertion_recursive, nap_graft, PreLieElement,
};
use crate::trees::{Permutation, UnlabeledTree};

use super::{Bounds, Law, Tally, VerificationReport};

/// Runs one law over every case within `bounds`.
pub fn run_law(instance: &Instance, law: Law, bounds: &Bounds) -> Result<VerificationReport> {
    bounds.check_cap()?;
    if !Law::applicable(instance).contains(&law) {
        return Err(Error::UnsupportedLaw {
            law: law.name().to_string(),
            instance: instance.name(),
        });
    }
    let started = Instant::now();
    let mut tally = Tally::default();
    let mut used = BTreeMap::new();
    match instance {
        Instance::NsAssoc(op) => operad_law(op, law, bounds, &mut tally, &mut used)?,
        Instance::Free(op) => operad_law(op, law, bounds, &mut tally, &mut used)?,
        Instance::Rooted(op) => match law {
            Law::CoinvariantWelldef | Law::CoinvariantGraft | Law::Equivariance => {
                used.insert("maxArity".to_string(), bounds.max_arity);
                rooted_law(op, law, bounds.max_arity, &mut tally)?
            }
            _ => operad_law(op, law, bounds, &mut tally, &mut used)?,
        },
        Instance::FreePreLie => free_prelie_law(law, bounds, &mut tally, &mut used)?,
    }
    Ok(tally.finish(instance, law, used, started))
}

fn tuples<T: Clone>(pool: &[T], len: usize) -> impl Iterator<Item = Vec<T>> + '_ {
    std::iter::repeat_n(pool.iter(), len)
        .multi_cartesian_product()
        .map(|v| v.into_iter().cloned().collect())
}

fn operad_law<O: Operad>(
    op: &O,
    law: Law,
    bounds: &Bounds,
    tally: &mut Tally,
    used: &mut BTreeMap<String, usize>,
) -> Result<()> {
    used.insert("maxArity".to_string(), bounds.max_arity);
    let basis = op.basis_up_to(bounds.max_arity)?;
    match law {
        Law::Sequential => {
            for (l, m, n) in itertools::iproduct!(&basis, &basis, &basis) {
                for (i, j) in itertools::iproduct!(1..=op.arity(l), 1..=op.arity(m)) {
                    tally.record(check_sequential(op, l, m, n, i, j)?);
                }
            }
        }
        Law::Parallel => {
            for (l, m, n) in itertools::iproduct!(&basis, &basis, &basis) {
                for (i, k) in (1..=op.arity(l)).tuple_combinations() {
                    tally.record(check_parallel(op, l, m, n, i, k)?);
                }
            }
        }
        Law::Unit => {
            for m in &basis {
                tally.record(check_unit(op, m)?);
            }
        }
        Law::Identity => {
            for m in &basis {
                tally.record(check_identity_relations(op, m)?);
            }
        }
        Law::PreLie => {
            for (x, y, z) in itertools::iproduct!(&basis, &basis, &basis) {
                let (x, y, z) = (
                    FormalSum::basis(x.clone()),
                    FormalSum::basis(y.clone()),
                    FormalSum::basis(z.clone()),
                );
                tally.record(check_prelie_law(op, &x, &y, &z)?);
            }
        }
        Law::Grading => {
            for (m, n) in itertools::iproduct!(&basis, &basis) {
                tally.record(check_grading(op, m, n)?);
            }
        }
        Law::InsertionVanish => {
            for m in &basis {
                for args in tuples(&basis, op.arity(m) + 1) {
                    tally.record(check_vanishing(op, m, &args)?);
                }
            }
        }
        Law::InsertionClosedVsRecursive => {
            for m in &basis {
                for len in 1..=op.arity(m) + 1 {
                    for args in tuples(&basis, len) {
                        tally.record(check_insertion_forms(op, m, &args)?);
                    }
                }
            }
        }
        Law::InsertionSymmetry => {
            used.insert("maxArgs".to_string(), bounds.max_args);
            for m in &basis {
                for len in 2..=bounds.max_args {
                    for args in tuples(&basis, len) {
                        tally.record(check_insertion_symmetry(op, m, &args)?);
                    }
                }
            }
        }
        other => {
            return Err(Error::UnsupportedLaw {
                law: other.name().to_string(),
                instance: op.name(),
            })
        }
    }
    Ok(())
}

fn classes_up_to(max: usize) -> Result<Vec<UnlabeledTree>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(UnlabeledTree::enumerate(n)?);
    }
    Ok(out)
}

fn rooted_law(op: &RootedTreeOperad, law: Law, max_arity: usize, tally: &mut Tally) -> Result<()> {
    match law {
        Law::CoinvariantWelldef => {
            let classes = classes_up_to(max_arity)?;
            for (a, b) in itertools::iproduct!(&classes, &classes) {
                let expected = coinvariant_product(
                    op,
                    &FormalSum::basis(a.clone()),
                    &FormalSum::basis(b.clone()),
                )?;
                for (la, lb) in itertools::iproduct!(all_lifts(a), all_lifts(b)) {
                    let value = coinvariant_reduce(&prelie_product(
                        op,
                        &FormalSum::basis(la.clone()),
                        &FormalSum::basis(lb.clone()),
                    )?);
                    tally.record(compare_trees(
                        vec![la.to_string(), lb.to_string()],
                        &value,
                        &expected,
                    ));
                }
            }
        }
        Law::CoinvariantGraft => {
            let classes = classes_up_to(max_arity)?;
            for (a, b) in itertools::iproduct!(&classes, &classes) {
                let (x, y) = (FormalSum::basis(a.clone()), FormalSum::basis(b.clone()));
                let expected = match op.kind() {
                    RootedKind::PreLie => graft_product(&x, &y),
                    RootedKind::Nap => nap_graft(&x, &y),
                };
                let value = coinvariant_graft(op, &x, &y)?;
                tally.record(compare_trees(
                    vec![a.to_string(), b.to_string()],
                    &value,
                    &expected,
                ));
            }
        }
        Law::Equivariance => {
            let basis = op.basis_up_to(max_arity)?;
            for (t, s) in itertools::iproduct!(&basis, &basis) {
                for i in 1..=t.size() {
                    for sigma in Permutation::all(t.size()) {
                        tally.record(op.symmetric_action_check(t, &sigma, i, s)?);
                    }
                    for tau in Permutation::all(s.size()) {
                        tally.record(op.inner_action_check(t, i, s, &tau)?);
                    }
                }
            }
        }
        _ => unreachable!("dispatched by run_law"),
    }
    Ok(())
}

fn compare_trees(inputs: Vec<String>, lhs: &PreLieElement, rhs: &PreLieElement) -> Verdict {
    if lhs == rhs {
        Verdict::Holds
    } else {
        Verdict::Fails(Counterexample {
            inputs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

/// Every `(t, [s₁,…,sₙ])` with `1 ≤ n ≤ max_args` and at most
/// `max_vertices` vertices in total.
pub fn free_prelie_insertion_inputs(
    max_vertices: usize,
    max_args: usize,
) -> Result<Vec<(UnlabeledTree, Vec<UnlabeledTree>)>> {
    let by_size: Vec<Vec<UnlabeledTree>> = (0..=max_vertices)
        .map(|n| {
            if n == 0 {
                Ok(Vec::new())
            } else {
                UnlabeledTree::enumerate(n)
            }
        })
        .collect::<Result<_>>()?;
    let all: Vec<&UnlabeledTree> = by_size.iter().flatten().collect();
    let mut out = Vec::new();
    fn extend(
        budget: usize,
        max_args: usize,
        all: &[&UnlabeledTree],
        prefix: &mut Vec<UnlabeledTree>,
        emit: &mut dyn FnMut(&[UnlabeledTree]),
    ) {
        if !prefix.is_empty() {
            emit(prefix);
        }
        if prefix.len() == max_args {
            return;
        }
        for s in all.iter().filter(|s| s.size() <= budget) {
            prefix.push((*s).clone());
            extend(budget - s.size(), max_args, all, prefix, emit);
            prefix.pop();
        }
    }
    for t in &all {
        let mut prefix = Vec::new();
        extend(
            max_vertices - t.size(),
            max_args,
            &all,
            &mut prefix,
            &mut |args| out.push(((*t).clone(), args.to_vec())),
        );
    }
    Ok(out)
}

fn free_prelie_law(
    law: Law,
    bounds: &Bounds,
    tally: &mut Tally,
    used: &mut BTreeMap<String, usize>,
) -> Result<()> {
    used.insert("maxVertices".to_string(), bounds.max_vertices);
    let basis = |t: &UnlabeledTree| FormalSum::basis(t.clone());
    let fmt = |x: &PreLieElement| x.to_string();
    match law {
        Law::PreLie | Law::Nap => {
            let trees = classes_up_to(bounds.max_vertices)?;
            for (x, y, z) in itertools::iproduct!(&trees, &trees, &trees) {
                let (x, y, z) = (basis(x), basis(y), basis(z));
                let verdict = if law == Law::PreLie {
                    check_prelie_law_with(
                        &x,
                        &y,
                        &z,
                        &mut |a, b| Ok::<_, Error>(graft_product(a, b)),
                        fmt,
                    )?
                } else {
                    let lhs = nap_graft(&nap_graft(&x, &y), &z);
                    let rhs = nap_graft(&nap_graft(&x, &z), &y);
                    compare_trees(vec![fmt(&x), fmt(&y), fmt(&z)], &lhs, &rhs)
                };
                tally.record(verdict);
            }
        }
        Law::InsertionClosedVsRecursive | Law::InsertionNonvanish => {
            let max_args = bounds.max_vertices.saturating_sub(1).max(1);
            for (t, args) in free_prelie_insertion_inputs(bounds.max_vertices, max_args)? {
                let inputs = std::iter::once(&t)
                    .chain(&args)
                    .map(ToString::to_string)
                    .collect();
                let recursive =
                    insertion_recursive(&basis(&t), &args.iter().map(basis).collect::<Vec<_>>())?;
                let verdict = if law == Law::InsertionNonvanish {
                    if recursive.is_zero() {
                        Verdict::Fails(Counterexample {
                            inputs,
                            lhs: "0".into(),
                            rhs: "nonzero".into(),
                        })
                    } else {
                        Verdict::Holds
                    }
                } else {
                    compare_trees(inputs, &recursive, &insertion_closed(&t, &args)?)
                };
                tally.record(verdict);
            }
        }
        Law::InsertionSymmetry => {
            used.insert("maxArgs".to_string(), bounds.max_args);
            for (t, args) in free_prelie_insertion_inputs(bounds.max_vertices, bounds.max_args)? {
                if args.len() < 2 {
                    continue;
                }
                let reference =
                    insertion_recursive(&basis(&t), &args.iter().map(basis).collect::<Vec<_>>())?;
                let mut verdict = Verdict::Holds;
                for perm in args.iter().permutations(args.len()) {
                    let value = insertion_recursive(
                        &basis(&t),
                        &perm.iter().map(|s| basis(s)).collect::<Vec<_>>(),
                    )?;
                    if value != reference {
                        let inputs = std::iter::once(&t)
                            .chain(perm)
                            .map(ToString::to_string)
                            .collect();
                        verdict = compare_trees(inputs, &value, &reference);
                        break;
                    }
                }
                tally.record(verdict);
            }
        }
        other => {
            return Err(Error::UnsupportedLaw {
                law: other.name().to_string(),
                instance: "freeprelie".to_string(),
            })
        }
    }
    Ok(())
}
