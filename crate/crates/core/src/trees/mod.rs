//! The three tree families: unordered rooted trees, rooted trees with
//! labeled vertices, and planar trees decorated by generators.

mod labeled;
mod parse;
mod permutation;
mod planar;
mod unlabeled;

use std::fmt;

pub use labeled::LabeledTree;
pub use parse::{parse_labeled, parse_planar, parse_unlabeled};
pub use permutation::Permutation;
pub use planar::{Generator, PlanarTerm};
pub use unlabeled::UnlabeledTree;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeFamily {
    Unlabeled,
    Labeled,
    Planar,
}

impl std::str::FromStr for TreeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "unlabeled" => Ok(TreeFamily::Unlabeled),
            "labeled" => Ok(TreeFamily::Labeled),
            "planar" | "planar-binary" => Ok(TreeFamily::Planar),
            other => Err(Error::UnknownInstance(other.to_string())),
        }
    }
}

/// A tree of any family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tree {
    Unlabeled(UnlabeledTree),
    Labeled(LabeledTree),
    Planar(PlanarTerm),
}

pub fn parse_tree(text: &str, family: TreeFamily) -> Result<Tree> {
    Ok(match family {
        TreeFamily::Unlabeled => Tree::Unlabeled(parse_unlabeled(text)?),
        TreeFamily::Labeled => Tree::Labeled(parse_labeled(text)?),
        TreeFamily::Planar => Tree::Planar(parse_planar(text)?),
    })
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Unlabeled(t) => t.fmt(f),
            Tree::Labeled(t) => t.fmt(f),
            Tree::Planar(t) => t.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_dispatch() {
        for (text, family) in [
            ("(()())", TreeFamily::Unlabeled),
            ("1(2,3)", TreeFamily::Labeled),
            ("g(g(1,2),3)", TreeFamily::Planar),
        ] {
            assert_eq!(parse_tree(text, family).unwrap().to_string(), text);
        }
    }
}
