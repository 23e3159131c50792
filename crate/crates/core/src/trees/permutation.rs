use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A bijection of `{1..n}`, stored as its list of images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {i} outside 1..{n}"
                )));
            }
            if std::mem::replace(&mut seen[i - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {i} repeated")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Swaps `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        if a == 0 || b == 0 || a > n || b > n {
            return Err(Error::InvalidPermutation(format!(
                "({a} {b}) outside 1..{n}"
            )));
        }
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    /// Every permutation of `{1..n}` in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Self> {
        (1..=n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.len()];
        for (i, &s) in self.images.iter().enumerate() {
            images[s - 1] = i + 1;
        }
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.images.iter().join(","))
    }
}
