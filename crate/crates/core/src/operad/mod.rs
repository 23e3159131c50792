//! Operads given by partial compositions on a basis, and the pre-Lie
//! structure they carry.

mod check;
mod coinvariant;

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_traits::One;

use crate::error::{Error, Result};
use crate::formalsum::{integer, FormalSum};
use crate::prelie::recursive_insertion;

pub use check::{
    check_grading, check_identity_relations, check_insertion_forms, check_insertion_symmetry,
    check_parallel, check_prelie_law, check_prelie_law_with, check_sequential, check_unit,
    check_vanishing, Counterexample, Verdict,
};
pub use coinvariant::{
    all_lifts, coinvariant_graft, coinvariant_insertion, coinvariant_product, coinvariant_reduce,
    lift,
};

/// An operad with `P(0) = 0` and `P(1)` spanned by the identity, presented
/// by a basis in each arity and partial compositions of basis elements.
pub trait Operad {
    type Basis: Clone + Ord + fmt::Debug + fmt::Display;

    fn name(&self) -> String;

    fn arity(&self, b: &Self::Basis) -> usize;

    fn identity(&self) -> Self::Basis;

    /// `b ∘_slot c`, with `1 ≤ slot ≤ arity(b)`.
    fn compose(
        &self,
        b: &Self::Basis,
        slot: usize,
        c: &Self::Basis,
    ) -> Result<FormalSum<Self::Basis>>;

    /// Basis of `P(arity)`, sorted.
    fn basis(&self, arity: usize) -> Result<Vec<Self::Basis>>;

    /// Generating operations of arity at least two.
    fn generators(&self) -> Vec<Self::Basis>;

    fn parse_basis(&self, text: &str) -> Result<Self::Basis>;

    /// Short display form: the identity prints as `id`.
    fn format_basis(&self, b: &Self::Basis) -> String {
        if *b == self.identity() {
            "id".to_string()
        } else {
            b.to_string()
        }
    }

    fn format(&self, x: &Element<Self>) -> String {
        x.to_text(|b| self.format_basis(b))
    }

    /// All basis elements of arity `1..=max_arity`.
    fn basis_up_to(&self, max_arity: usize) -> Result<Vec<Self::Basis>> {
        let mut out = Vec::new();
        for n in 1..=max_arity {
            out.extend(self.basis(n)?);
        }
        Ok(out)
    }
}

pub type Element<O> = FormalSum<<O as Operad>::Basis>;

/// The four pre-Lie algebras attached to an operad.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PreLieFlavor {
    /// `⊕_{n≥1} P(n)`
    Full,
    /// `⊕_{n≥2} P(n)`
    Positive,
    /// `⊕_{n≥1} P(n)_{S_n}`
    Coinvariant,
    /// `⊕_{n≥2} P(n)_{S_n}`
    PositiveCoinvariant,
}

impl PreLieFlavor {
    pub fn accepts_arity(self, arity: usize) -> bool {
        match self {
            PreLieFlavor::Full | PreLieFlavor::Coinvariant => arity >= 1,
            PreLieFlavor::Positive | PreLieFlavor::PositiveCoinvariant => arity >= 2,
        }
    }

    pub fn is_coinvariant(self) -> bool {
        matches!(
            self,
            PreLieFlavor::Coinvariant | PreLieFlavor::PositiveCoinvariant
        )
    }
}

impl fmt::Display for PreLieFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PreLieFlavor::Full => "P",
            PreLieFlavor::Positive => "P+",
            PreLieFlavor::Coinvariant => "P_",
            PreLieFlavor::PositiveCoinvariant => "P_+",
        })
    }
}

pub fn basis_element<O: Operad>(b: O::Basis) -> Element<O> {
    FormalSum::basis(b)
}

/// `μ ∘ᵢ ν`, extended bilinearly. Every term of `μ` must have a slot `i`.
pub fn partial_compose<O: Operad>(
    op: &O,
    mu: &Element<O>,
    slot: usize,
    nu: &Element<O>,
) -> Result<Element<O>> {
    for b in mu.keys() {
        let arity = op.arity(b);
        if slot == 0 || slot > arity {
            return Err(Error::SlotOutOfRange { slot, arity });
        }
    }
    mu.bilinear(nu, |b, c| op.compose(b, slot, c))
}

/// `μ ◁ ν = Σᵢ μ ∘ᵢ ν`.
pub fn prelie_product<O: Operad>(op: &O, mu: &Element<O>, nu: &Element<O>) -> Result<Element<O>> {
    mu.bilinear(nu, |b, c| {
        let mut out = FormalSum::zero();
        for slot in 1..=op.arity(b) {
            out += &op.compose(b, slot, c)?;
        }
        Ok(out)
    })
}

/// Simultaneous substitution of `nus[k]` into slot `slots[k]` of `mu`.
///
/// Slots are filled from the highest down so that earlier substitutions do
/// not move the positions of later ones.
pub fn multi_compose<O: Operad>(
    op: &O,
    mu: &O::Basis,
    slots: &[usize],
    nus: &[O::Basis],
) -> Result<Element<O>> {
    if slots.len() != nus.len() {
        return Err(Error::ArgumentCount {
            expected: slots.len(),
            found: nus.len(),
        });
    }
    let arity = op.arity(mu);
    let mut seen = vec![false; arity + 1];
    for &s in slots {
        if s == 0 || s > arity {
            return Err(Error::SlotOutOfRange { slot: s, arity });
        }
        if std::mem::replace(&mut seen[s], true) {
            return Err(Error::DuplicateSlot(s));
        }
    }
    let mut acc = FormalSum::basis(mu.clone());
    for (slot, nu) in slots.iter().zip(nus).sorted_by(|a, b| b.0.cmp(a.0)) {
        acc = partial_compose(op, &acc, *slot, &FormalSum::basis(nu.clone()))?;
    }
    Ok(acc)
}

fn check_flavor<O: Operad>(op: &O, x: &Element<O>, flavor: PreLieFlavor) -> Result<()> {
    for b in x.keys() {
        if !flavor.accepts_arity(op.arity(b)) {
            return Err(Error::FlavorViolation {
                flavor: flavor.to_string(),
                input: op.format_basis(b),
            });
        }
    }
    Ok(())
}

/// `μ ◁ (ν₁,…,νₙ)` by the pre-Lie recursion, computed in `P`.
///
/// The flavor only restricts the admissible inputs. For the coinvariant
/// flavors reduce the result with [`coinvariant_reduce`], which is a
/// morphism of pre-Lie algebras.
pub fn insertion_element<O: Operad>(
    op: &O,
    mu: &Element<O>,
    args: &[Element<O>],
    flavor: PreLieFlavor,
) -> Result<Element<O>> {
    if args.is_empty() {
        return Err(Error::EmptyArguments);
    }
    check_flavor(op, mu, flavor)?;
    for a in args {
        check_flavor(op, a, flavor)?;
    }
    recursive_insertion(mu, args, &mut |x, y| prelie_product(op, x, y))
}

/// `Σ μ ∘_{m₁,…,mₙ}(ν₁,…,νₙ)` over ordered tuples of pairwise distinct
/// slots. Zero when `n` exceeds the arity of `μ`.
pub fn insertion_closed_form<O: Operad>(
    op: &O,
    mu: &O::Basis,
    args: &[O::Basis],
) -> Result<Element<O>> {
    if args.is_empty() {
        return Err(Error::EmptyArguments);
    }
    let arity = op.arity(mu);
    let mut out = FormalSum::zero();
    for slots in (1..=arity).permutations(args.len()) {
        out += &multi_compose(op, mu, &slots, args)?;
    }
    Ok(out)
}

/// Multilinear extension of [`insertion_closed_form`].
pub fn insertion_closed_form_linear<O: Operad>(
    op: &O,
    mu: &Element<O>,
    args: &[Element<O>],
) -> Result<Element<O>> {
    if args.is_empty() {
        return Err(Error::EmptyArguments);
    }
    let mut out = FormalSum::zero();
    for (m, c) in mu.iter() {
        for choice in args.iter().map(|a| a.iter()).multi_cartesian_product() {
            let mut coeff = c.clone();
            let mut basis = Vec::with_capacity(choice.len());
            for (b, k) in choice {
                coeff *= k;
                basis.push(b.clone());
            }
            out.add_scaled(&insertion_closed_form(op, m, &basis)?, &coeff);
        }
    }
    Ok(out)
}

/// Splits an element by degree (arity − 1).
pub fn graded_components<O: Operad>(op: &O, x: &Element<O>) -> BTreeMap<usize, Element<O>> {
    let mut out: BTreeMap<usize, Element<O>> = BTreeMap::new();
    for (b, c) in x.iter() {
        out.entry(op.arity(b) - 1)
            .or_default()
            .add_term(b.clone(), c.clone());
    }
    out
}

/// `μ ◁ id`, which equals `n·μ` on arity `n`.
pub fn right_identity_multiple<O: Operad>(op: &O, mu: &O::Basis) -> Element<O> {
    FormalSum::term(mu.clone(), integer(op.arity(mu) as i64))
}

pub(crate) fn one() -> crate::formalsum::Rational {
    crate::formalsum::Rational::one()
}
