//! Coinvariants `P(n)_{S_n}` of operads whose arity-`n` basis is the set of
//! rooted trees on `1..=n`. A class is an unlabeled tree.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::formalsum::FormalSum;
use crate::prelie::{recursive_insertion, PreLieElement};
use crate::trees::{LabeledTree, Permutation, UnlabeledTree};

use super::{partial_compose, prelie_product, Operad, PreLieFlavor};

/// Forgets labels and collects coefficients by shape.
pub fn coinvariant_reduce(x: &FormalSum<LabeledTree>) -> PreLieElement {
    x.iter()
        .map(|(t, c)| (t.forget_labels(), c.clone()))
        .collect()
}

/// A labeled representative of a class (pre-order labeling).
pub fn lift(class: &UnlabeledTree) -> LabeledTree {
    LabeledTree::preorder_lift(class)
}

/// Every labeled representative of a class.
pub fn all_lifts(class: &UnlabeledTree) -> Vec<LabeledTree> {
    let base = lift(class);
    let lifts: BTreeSet<LabeledTree> = Permutation::all(class.size())
        .iter()
        .map(|s| base.relabel(s).expect("permutation has the tree's size"))
        .collect();
    lifts.into_iter().collect()
}

fn lift_sum(x: &PreLieElement) -> FormalSum<LabeledTree> {
    x.iter().map(|(t, c)| (lift(t), c.clone())).collect()
}

/// The pre-Lie product of `P` pushed to coinvariants: lift, apply `◁`,
/// reduce.
pub fn coinvariant_product<O>(op: &O, a: &PreLieElement, b: &PreLieElement) -> Result<PreLieElement>
where
    O: Operad<Basis = LabeledTree>,
{
    let product = prelie_product(op, &lift_sum(a), &lift_sum(b))?;
    Ok(coinvariant_reduce(&product))
}

/// The action of the arity-2 tree `1(2)` on classes, `t, s ↦ [1(2)(t̃, s̃)]`
/// where `1(2)(t̃, s̃) = (1(2) ∘₂ s̃) ∘₁ t̃`.
///
/// For the pre-Lie operad this is the grafting product of the free pre-Lie
/// algebra on one generator; for the NAP operad it is grafting at the root.
pub fn coinvariant_graft<O>(op: &O, a: &PreLieElement, b: &PreLieElement) -> Result<PreLieElement>
where
    O: Operad<Basis = LabeledTree>,
{
    let edge = FormalSum::basis(LabeledTree::from_parents(vec![None, Some(1)])?);
    let with_right = partial_compose(op, &edge, 2, &lift_sum(b))?;
    let full = partial_compose(op, &with_right, 1, &lift_sum(a))?;
    Ok(coinvariant_reduce(&full))
}

/// Insertion elements in `P_` or `P_+`, by the recursion over
/// [`coinvariant_product`].
pub fn coinvariant_insertion<O>(
    op: &O,
    t: &PreLieElement,
    args: &[PreLieElement],
    flavor: PreLieFlavor,
) -> Result<PreLieElement>
where
    O: Operad<Basis = LabeledTree>,
{
    if args.is_empty() {
        return Err(Error::EmptyArguments);
    }
    for x in std::iter::once(t).chain(args) {
        for class in x.keys() {
            if !flavor.accepts_arity(class.size()) {
                return Err(Error::FlavorViolation {
                    flavor: flavor.to_string(),
                    input: class.to_string(),
                });
            }
        }
    }
    recursive_insertion(t, args, &mut |x, y| coinvariant_product(op, x, y))
}
