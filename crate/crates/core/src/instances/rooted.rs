//! The pre-Lie and NAP operads. Both have the rooted trees on `1..=n` as
//! basis of arity `n`; they differ in where the subtrees hanging below a
//! substituted vertex are reattached.
//!
//! Labels after `μ ∘ᵢ ν` (μ of arity n, ν of arity m): labels of μ below `i`
//! are kept, labels of ν are shifted by `i − 1`, labels of μ above `i` are
//! shifted by `m − 1`.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::formalsum::FormalSum;
use crate::operad::{Counterexample, Operad, Verdict};
use crate::trees::{parse_labeled, LabeledTree, Permutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RootedKind {
    PreLie,
    Nap,
}

#[derive(Clone, Copy, Debug)]
pub struct RootedTreeOperad {
    kind: RootedKind,
}

impl RootedTreeOperad {
    pub fn prelie() -> Self {
        RootedTreeOperad {
            kind: RootedKind::PreLie,
        }
    }

    pub fn nap() -> Self {
        RootedTreeOperad {
            kind: RootedKind::Nap,
        }
    }

    pub fn kind(&self) -> RootedKind {
        self.kind
    }

    /// `relabel(μ, σ) ∘_{σ(i)} ν = relabel(μ ∘ᵢ ν, σ̃)` where `σ̃` moves the
    /// block of labels coming from each vertex `j` of μ to the position of
    /// the block of `σ(j)`.
    pub fn symmetric_action_check(
        &self,
        t: &LabeledTree,
        sigma: &Permutation,
        slot: usize,
        s: &LabeledTree,
    ) -> Result<Verdict> {
        let moved = t.relabel(sigma)?;
        let lhs = self.compose(&moved, sigma.apply(slot), s)?;
        let block = block_permutation(t.size(), s.size(), slot, sigma)?;
        let rhs = relabel_sum(&self.compose(t, slot, s)?, &block)?;
        Ok(verdict(
            vec![
                t.to_string(),
                sigma.to_string(),
                format!("i={slot}"),
                s.to_string(),
            ],
            &lhs,
            &rhs,
        ))
    }

    /// `μ ∘ᵢ relabel(ν, τ) = relabel(μ ∘ᵢ ν, id ∘ᵢ τ)`.
    pub fn inner_action_check(
        &self,
        t: &LabeledTree,
        slot: usize,
        s: &LabeledTree,
        tau: &Permutation,
    ) -> Result<Verdict> {
        let lhs = self.compose(t, slot, &s.relabel(tau)?)?;
        let block = inner_block_permutation(t.size(), slot, tau);
        let rhs = relabel_sum(&self.compose(t, slot, s)?, &block)?;
        Ok(verdict(
            vec![
                t.to_string(),
                format!("i={slot}"),
                s.to_string(),
                tau.to_string(),
            ],
            &lhs,
            &rhs,
        ))
    }
}

fn verdict(
    inputs: Vec<String>,
    lhs: &FormalSum<LabeledTree>,
    rhs: &FormalSum<LabeledTree>,
) -> Verdict {
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

fn relabel_sum(x: &FormalSum<LabeledTree>, sigma: &Permutation) -> Result<FormalSum<LabeledTree>> {
    x.map_linear(|t| Ok(FormalSum::basis(t.relabel(sigma)?)))
}

/// Position of the `k`-th label of the block of vertex `j` when vertex
/// `slot` carries a block of size `m`.
fn block_position(j: usize, k: usize, slot: usize, m: usize) -> usize {
    use std::cmp::Ordering::*;
    match j.cmp(&slot) {
        Less => j,
        Equal => slot + k - 1,
        Greater => j + m - 1,
    }
}

/// The permutation of `1..=n+m−1` induced by `sigma` acting on the
/// vertices of μ when ν (arity `m`) sits in slot `slot`.
pub fn block_permutation(
    n: usize,
    m: usize,
    slot: usize,
    sigma: &Permutation,
) -> Result<Permutation> {
    if sigma.len() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: sigma.len(),
        });
    }
    let target_slot = sigma.apply(slot);
    let mut images = vec![0; n + m - 1];
    for j in 1..=n {
        let width = if j == slot { m } else { 1 };
        for k in 1..=width {
            images[block_position(j, k, slot, m) - 1] =
                block_position(sigma.apply(j), k, target_slot, m);
        }
    }
    Permutation::new(images)
}

/// `id ∘ᵢ τ`: acts by `tau` inside the block at `slot`.
pub fn inner_block_permutation(n: usize, slot: usize, tau: &Permutation) -> Permutation {
    let m = tau.len();
    let images = (1..n + m)
        .map(|p| {
            if p >= slot && p < slot + m {
                slot + tau.apply(p - slot + 1) - 1
            } else {
                p
            }
        })
        .collect();
    Permutation::new(images).expect("block permutation is a bijection")
}

impl Operad for RootedTreeOperad {
    type Basis = LabeledTree;

    fn name(&self) -> String {
        match self.kind {
            RootedKind::PreLie => "prelie".to_string(),
            RootedKind::Nap => "nap".to_string(),
        }
    }

    fn arity(&self, b: &LabeledTree) -> usize {
        b.size()
    }

    fn identity(&self) -> LabeledTree {
        LabeledTree::single()
    }

    fn compose(
        &self,
        mu: &LabeledTree,
        slot: usize,
        nu: &LabeledTree,
    ) -> Result<FormalSum<LabeledTree>> {
        let n = mu.size();
        let m = nu.size();
        if slot == 0 || slot > n {
            return Err(Error::SlotOutOfRange { slot, arity: n });
        }
        let outer = |j: usize| if j < slot { j } else { j + m - 1 };
        let inner = |k: usize| k + slot - 1;

        let mut parent = vec![None; n + m - 1];
        for k in 1..=m {
            parent[inner(k) - 1] = match nu.parent_of(k) {
                Some(p) => Some(inner(p)),
                None => mu.parent_of(slot).map(outer),
            };
        }
        let mut orphans = Vec::new();
        for j in (1..=n).filter(|&j| j != slot) {
            parent[outer(j) - 1] = match mu.parent_of(j) {
                Some(p) if p == slot => {
                    orphans.push(outer(j));
                    None
                }
                Some(p) => Some(outer(p)),
                None => None,
            };
        }

        let targets: Vec<usize> = match self.kind {
            RootedKind::PreLie => (1..=m).map(inner).collect(),
            RootedKind::Nap => vec![inner(nu.root())],
        };
        let mut out = FormalSum::zero();
        for choice in std::iter::repeat_n(targets.iter(), orphans.len()).multi_cartesian_product() {
            let mut p = parent.clone();
            for (&o, &&t) in orphans.iter().zip(&choice) {
                p[o - 1] = Some(t);
            }
            out.add_term(LabeledTree::from_parents(p)?, crate::operad::one());
        }
        Ok(out)
    }

    fn basis(&self, arity: usize) -> Result<Vec<LabeledTree>> {
        LabeledTree::enumerate(arity)
    }

    fn generators(&self) -> Vec<LabeledTree> {
        LabeledTree::enumerate(2).expect("arity 2 is positive")
    }

    fn parse_basis(&self, text: &str) -> Result<LabeledTree> {
        let text = text.trim();
        if text == "id" {
            return Ok(LabeledTree::single());
        }
        Ok(parse_labeled(text)?)
    }
}
