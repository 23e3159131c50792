//! Checkers for the operad axioms and the identities of the induced
//! pre-Lie structure. Each returns a counterexample record on failure.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formalsum::FormalSum;

use super::{
    insertion_closed_form, insertion_element, partial_compose, prelie_product,
    right_identity_multiple, Element, Operad, PreLieFlavor,
};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Counterexample),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    fn compare<K: Ord + Clone>(
        inputs: Vec<String>,
        lhs: &FormalSum<K>,
        rhs: &FormalSum<K>,
        fmt: impl Fn(&FormalSum<K>) -> String,
    ) -> Verdict {
        if lhs == rhs {
            Verdict::Holds
        } else {
            Verdict::Fails(Counterexample {
                inputs,
                lhs: fmt(lhs),
                rhs: fmt(rhs),
            })
        }
    }
}

fn check_slot(slot: usize, arity: usize) -> Result<()> {
    if slot == 0 || slot > arity {
        Err(Error::SlotOutOfRange { slot, arity })
    } else {
        Ok(())
    }
}

fn basis<O: Operad>(b: &O::Basis) -> Element<O> {
    FormalSum::basis(b.clone())
}

/// `(λ ∘ᵢ μ) ∘_{i−1+j} ν = λ ∘ᵢ (μ ∘ⱼ ν)`.
pub fn check_sequential<O: Operad>(
    op: &O,
    lambda: &O::Basis,
    mu: &O::Basis,
    nu: &O::Basis,
    i: usize,
    j: usize,
) -> Result<Verdict> {
    check_slot(i, op.arity(lambda))?;
    check_slot(j, op.arity(mu))?;
    let (l, m, n) = (basis::<O>(lambda), basis::<O>(mu), basis::<O>(nu));
    let lhs = partial_compose(op, &partial_compose(op, &l, i, &m)?, i - 1 + j, &n)?;
    let rhs = partial_compose(op, &l, i, &partial_compose(op, &m, j, &n)?)?;
    Ok(Verdict::compare(
        vec![
            op.format_basis(lambda),
            op.format_basis(mu),
            op.format_basis(nu),
            format!("i={i}"),
            format!("j={j}"),
        ],
        &lhs,
        &rhs,
        |x| op.format(x),
    ))
}

/// `(λ ∘ᵢ μ) ∘_{k−1+m} ν = (λ ∘ₖ ν) ∘ᵢ μ` for `i < k`, `m = arity(μ)`.
pub fn check_parallel<O: Operad>(
    op: &O,
    lambda: &O::Basis,
    mu: &O::Basis,
    nu: &O::Basis,
    i: usize,
    k: usize,
) -> Result<Verdict> {
    let arity = op.arity(lambda);
    check_slot(i, arity)?;
    check_slot(k, arity)?;
    if i >= k {
        return Err(Error::DuplicateSlot(k));
    }
    let m = op.arity(mu);
    let (l, mu_e, nu_e) = (basis::<O>(lambda), basis::<O>(mu), basis::<O>(nu));
    let lhs = partial_compose(op, &partial_compose(op, &l, i, &mu_e)?, k - 1 + m, &nu_e)?;
    let rhs = partial_compose(op, &partial_compose(op, &l, k, &nu_e)?, i, &mu_e)?;
    Ok(Verdict::compare(
        vec![
            op.format_basis(lambda),
            op.format_basis(mu),
            op.format_basis(nu),
            format!("i={i}"),
            format!("k={k}"),
        ],
        &lhs,
        &rhs,
        |x| op.format(x),
    ))
}

/// `id ∘₁ μ = μ` and `μ ∘ᵢ id = μ` for every slot.
pub fn check_unit<O: Operad>(op: &O, mu: &O::Basis) -> Result<Verdict> {
    let id = basis::<O>(&op.identity());
    let m = basis::<O>(mu);
    let left = partial_compose(op, &id, 1, &m)?;
    if left != m {
        return Ok(Verdict::compare(
            vec!["id".into(), op.format_basis(mu), "i=1".into()],
            &left,
            &m,
            |x| op.format(x),
        ));
    }
    for i in 1..=op.arity(mu) {
        let right = partial_compose(op, &m, i, &id)?;
        if right != m {
            return Ok(Verdict::compare(
                vec![op.format_basis(mu), "id".into(), format!("i={i}")],
                &right,
                &m,
                |x| op.format(x),
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// `id ◁ μ = μ` and `μ ◁ id = n·μ`.
pub fn check_identity_relations<O: Operad>(op: &O, mu: &O::Basis) -> Result<Verdict> {
    let id = basis::<O>(&op.identity());
    let m = basis::<O>(mu);
    let left = prelie_product(op, &id, &m)?;
    if left != m {
        return Ok(Verdict::compare(
            vec!["id <|".into(), op.format_basis(mu)],
            &left,
            &m,
            |x| op.format(x),
        ));
    }
    let right = prelie_product(op, &m, &id)?;
    Ok(Verdict::compare(
        vec![op.format_basis(mu), "<| id".into()],
        &right,
        &right_identity_multiple(op, mu),
        |x| op.format(x),
    ))
}

/// `(x◁y)◁z − x◁(y◁z) = (x◁z)◁y − x◁(z◁y)` for an arbitrary product.
pub fn check_prelie_law_with<K, E, F>(
    x: &FormalSum<K>,
    y: &FormalSum<K>,
    z: &FormalSum<K>,
    product: &mut F,
    fmt: impl Fn(&FormalSum<K>) -> String,
) -> Result<Verdict, E>
where
    K: Ord + Clone,
    F: FnMut(&FormalSum<K>, &FormalSum<K>) -> Result<FormalSum<K>, E>,
{
    let xy = product(x, y)?;
    let xz = product(x, z)?;
    let yz = product(y, z)?;
    let zy = product(z, y)?;
    let lhs = &product(&xy, z)? - &product(x, &yz)?;
    let rhs = &product(&xz, y)? - &product(x, &zy)?;
    Ok(Verdict::compare(
        vec![fmt(x), fmt(y), fmt(z)],
        &lhs,
        &rhs,
        fmt,
    ))
}

pub fn check_prelie_law<O: Operad>(
    op: &O,
    x: &Element<O>,
    y: &Element<O>,
    z: &Element<O>,
) -> Result<Verdict> {
    check_prelie_law_with(x, y, z, &mut |a, b| prelie_product(op, a, b), |s| {
        op.format(s)
    })
}

fn format_call<O: Operad>(op: &O, mu: &O::Basis, args: &[O::Basis]) -> Vec<String> {
    std::iter::once(op.format_basis(mu))
        .chain(args.iter().map(|a| op.format_basis(a)))
        .collect()
}

fn basis_args<O: Operad>(args: &[O::Basis]) -> Vec<Element<O>> {
    args.iter().map(basis::<O>).collect()
}

/// `μ ◁ (ν₁,…,νₖ) = 0` whenever `k` exceeds the arity of `μ`.
pub fn check_vanishing<O: Operad>(op: &O, mu: &O::Basis, args: &[O::Basis]) -> Result<Verdict> {
    let value = insertion_element(
        op,
        &basis::<O>(mu),
        &basis_args::<O>(args),
        PreLieFlavor::Full,
    )?;
    Ok(Verdict::compare(
        format_call(op, mu, args),
        &value,
        &FormalSum::zero(),
        |x| op.format(x),
    ))
}

/// Recursive insertion element equals the distinct-slot closed form.
pub fn check_insertion_forms<O: Operad>(
    op: &O,
    mu: &O::Basis,
    args: &[O::Basis],
) -> Result<Verdict> {
    let recursive = insertion_element(
        op,
        &basis::<O>(mu),
        &basis_args::<O>(args),
        PreLieFlavor::Full,
    )?;
    let closed = insertion_closed_form(op, mu, args)?;
    Ok(Verdict::compare(
        format_call(op, mu, args),
        &recursive,
        &closed,
        |x| op.format(x),
    ))
}

/// The insertion element does not depend on the order of its arguments.
pub fn check_insertion_symmetry<O: Operad>(
    op: &O,
    mu: &O::Basis,
    args: &[O::Basis],
) -> Result<Verdict> {
    let m = basis::<O>(mu);
    let reference = insertion_element(op, &m, &basis_args::<O>(args), PreLieFlavor::Full)?;
    for perm in args.iter().cloned().permutations(args.len()) {
        let value = insertion_element(op, &m, &basis_args::<O>(&perm), PreLieFlavor::Full)?;
        if value != reference {
            return Ok(Verdict::compare(
                format_call(op, mu, &perm),
                &value,
                &reference,
                |x| op.format(x),
            ));
        }
    }
    Ok(Verdict::Holds)
}

/// Every term of `μ ◁ ν` has degree `deg μ + deg ν`, degree = arity − 1.
pub fn check_grading<O: Operad>(op: &O, mu: &O::Basis, nu: &O::Basis) -> Result<Verdict> {
    let product = prelie_product(op, &basis::<O>(mu), &basis::<O>(nu))?;
    let expected = op.arity(mu) - 1 + op.arity(nu) - 1;
    for b in product.keys() {
        let degree = op.arity(b) - 1;
        if degree != expected {
            return Ok(Verdict::Fails(Counterexample {
                inputs: vec![op.format_basis(mu), op.format_basis(nu)],
                lhs: format!("degree {degree} in {}", op.format_basis(b)),
                rhs: format!("degree {expected}"),
            }));
        }
    }
    Ok(Verdict::Holds)
}
