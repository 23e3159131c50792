//! The free pre-Lie algebra on one generator, spanned by unordered rooted
//! trees under grafting.

use crate::error::{Error, Result};
use crate::formalsum::FormalSum;
use crate::trees::UnlabeledTree;

pub type PreLieElement = FormalSum<UnlabeledTree>;

/// `t ◁ s`: the sum of all graftings of `s` onto a vertex of `t`.
pub fn graft_product(x: &PreLieElement, y: &PreLieElement) -> PreLieElement {
    x.bilinear(y, |t, s| {
        Ok::<_, Error>(FormalSum::from_terms(
            t.graft_everywhere(s)
                .into_iter()
                .map(|g| (g, num_traits::One::one())),
        ))
    })
    .expect("grafting is total")
}

/// `t ⊳ s`: grafting of `s` onto the root of `t` only.
pub fn nap_graft(x: &PreLieElement, y: &PreLieElement) -> PreLieElement {
    x.bilinear(y, |t, s| {
        let mut children = t.children().to_vec();
        children.push(s.clone());
        Ok::<_, Error>(FormalSum::basis(UnlabeledTree::new(children)))
    })
    .expect("root grafting is total")
}

/// Root with `n` leaves; `corolla(0)` is the single root.
pub fn corolla(n: usize) -> UnlabeledTree {
    UnlabeledTree::corolla(n)
}

/// Insertion elements in any pre-Lie algebra, by the defining recursion
///
/// ```text
/// t ◁ (s₁)          = t ◁ s₁
/// t ◁ (s₁,…,sₙ)     = (t ◁ (s₁,…,sₙ₋₁)) ◁ sₙ − Σᵢ<ₙ t ◁ (s₁,…,sᵢ ◁ sₙ,…,sₙ₋₁)
/// ```
///
/// `product` is the pre-Lie product. `args` must be nonempty.
pub fn recursive_insertion<K, E, F>(
    t: &FormalSum<K>,
    args: &[FormalSum<K>],
    product: &mut F,
) -> Result<FormalSum<K>, E>
where
    K: Ord + Clone,
    F: FnMut(&FormalSum<K>, &FormalSum<K>) -> Result<FormalSum<K>, E>,
{
    let (last, init) = args.split_last().expect("insertion needs an argument");
    if init.is_empty() {
        return product(t, last);
    }
    let inner = recursive_insertion(t, init, product)?;
    let mut out = product(&inner, last)?;
    for i in 0..init.len() {
        let mut shifted = init.to_vec();
        shifted[i] = product(&init[i], last)?;
        out -= &recursive_insertion(t, &shifted, product)?;
    }
    Ok(out)
}

/// `t ◁ (s₁,…,sₙ)` in the free pre-Lie algebra, computed by the recursion.
pub fn insertion_recursive(t: &PreLieElement, args: &[PreLieElement]) -> Result<PreLieElement> {
    if args.is_empty() {
        return Err(Error::EmptyArguments);
    }
    recursive_insertion(t, args, &mut |x, y| Ok(graft_product(x, y)))
}

/// `t ◁ (s₁,…,sₙ)` for basis trees, as the sum over all ways of grafting
/// every `sᵢ` onto a vertex of `t` (never onto another `sⱼ`).
pub fn insertion_closed(t: &UnlabeledTree, args: &[UnlabeledTree]) -> Result<PreLieElement> {
    if args.is_empty() {
        return Err(Error::EmptyArguments);
    }
    let kids = t.preorder_children();
    let vertices = kids.len();
    let mut choice = vec![0usize; args.len()];
    let mut out = FormalSum::zero();
    loop {
        let mut extra: Vec<Vec<&UnlabeledTree>> = vec![Vec::new(); vertices];
        for (s, &v) in args.iter().zip(&choice) {
            extra[v].push(s);
        }
        out.add_term(build(0, &kids, &extra), num_traits::One::one());

        let mut k = 0;
        loop {
            if k == choice.len() {
                return Ok(out);
            }
            choice[k] += 1;
            if choice[k] < vertices {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

fn build(v: usize, kids: &[Vec<usize>], extra: &[Vec<&UnlabeledTree>]) -> UnlabeledTree {
    let mut children: Vec<UnlabeledTree> = kids[v].iter().map(|&c| build(c, kids, extra)).collect();
    children.extend(extra[v].iter().map(|&s| s.clone()));
    UnlabeledTree::new(children)
}
