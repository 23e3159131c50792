use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

use super::{Permutation, UnlabeledTree};

/// A rooted tree on the vertex labels `1..=n`.
///
/// Equality is literal: relabeling gives a different tree. The printed form
/// lists children in increasing label order, e.g. `1(2,3(4))`.
#[derive(Clone)]
pub struct LabeledTree {
    /// `parent[l - 1]` is the parent of label `l`; `None` marks the root.
    parent: Vec<Option<usize>>,
    code: String,
}

impl LabeledTree {
    /// The one-vertex tree `1`.
    pub fn single() -> Self {
        LabeledTree {
            parent: vec![None],
            code: "1".to_string(),
        }
    }

    pub fn from_parents(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let roots = parent.iter().filter(|p| p.is_none()).count();
        if roots != 1 {
            return Err(Error::InvalidLabels(format!(
                "expected one root, found {roots}"
            )));
        }
        for (i, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p == 0 || p > n || p == i + 1 {
                    return Err(Error::InvalidLabels(format!(
                        "label {} has invalid parent {p}",
                        i + 1
                    )));
                }
            }
        }
        // every label must reach the root in fewer than n steps
        for start in 1..=n {
            let mut at = start;
            let mut steps = 0;
            while let Some(p) = parent[at - 1] {
                at = p;
                steps += 1;
                if steps >= n {
                    return Err(Error::InvalidLabels(format!("cycle through label {start}")));
                }
            }
        }
        Ok(Self::from_valid(parent))
    }

    fn from_valid(parent: Vec<Option<usize>>) -> Self {
        let mut t = LabeledTree {
            parent,
            code: String::new(),
        };
        let mut code = String::new();
        t.write_from(t.root(), &mut code);
        t.code = code;
        t
    }

    fn write_from(&self, label: usize, out: &mut String) {
        out.push_str(&label.to_string());
        let children = self.children_of(label);
        if !children.is_empty() {
            out.push('(');
            for (k, c) in children.into_iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                self.write_from(c, out);
            }
            out.push(')');
        }
    }

    pub fn size(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.parent.iter().position(Option::is_none).unwrap() + 1
    }

    pub fn parent_of(&self, label: usize) -> Option<usize> {
        self.parent[label - 1]
    }

    pub fn parents(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Children of `label`, in increasing order.
    pub fn children_of(&self, label: usize) -> Vec<usize> {
        (1..=self.size())
            .filter(|&c| self.parent[c - 1] == Some(label))
            .collect()
    }

    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn forget_labels(&self) -> UnlabeledTree {
        self.shape_from(self.root())
    }

    fn shape_from(&self, label: usize) -> UnlabeledTree {
        UnlabeledTree::new(
            self.children_of(label)
                .into_iter()
                .map(|c| self.shape_from(c))
                .collect(),
        )
    }

    /// Labels `shape` by its pre-order traversal.
    pub fn preorder_lift(shape: &UnlabeledTree) -> Self {
        let kids = shape.preorder_children();
        let mut parent = vec![None; kids.len()];
        for (v, cs) in kids.iter().enumerate() {
            for &c in cs {
                parent[c] = Some(v + 1);
            }
        }
        Self::from_valid(parent)
    }

    /// The vertex labeled `i` becomes labeled `sigma(i)`.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.len() != self.size() {
            return Err(Error::SizeMismatch {
                expected: self.size(),
                found: sigma.len(),
            });
        }
        let mut parent = vec![None; self.size()];
        for (i, p) in self.parent.iter().enumerate() {
            parent[sigma.apply(i + 1) - 1] = p.map(|p| sigma.apply(p));
        }
        Ok(Self::from_valid(parent))
    }

    /// All rooted trees on `1..=n`, sorted by print. Built from Prüfer
    /// sequences of the underlying free trees, one root choice each.
    pub fn enumerate(n: usize) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let mut out = BTreeSet::new();
        for edges in free_trees(n) {
            for root in 1..=n {
                out.insert(Self::rooted_at(n, &edges, root));
            }
        }
        Ok(out.into_iter().collect())
    }

    fn rooted_at(n: usize, edges: &[(usize, usize)], root: usize) -> Self {
        let mut adj = vec![Vec::new(); n + 1];
        for &(a, b) in edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n + 1];
        let mut stack = vec![root];
        seen[root] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w - 1] = Some(v);
                    stack.push(w);
                }
            }
        }
        Self::from_valid(parent)
    }
}

/// Edge lists of every labeled free tree on `1..=n`.
fn free_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    match n {
        1 => return vec![Vec::new()],
        2 => return vec![vec![(1, 2)]],
        _ => {}
    }
    let len = n - 2;
    let mut seq = vec![1; len];
    let mut out = Vec::new();
    loop {
        out.push(prufer_decode(n, &seq));
        // odometer over {1..n}^(n-2)
        let mut k = 0;
        loop {
            if k == len {
                return out;
            }
            seq[k] += 1;
            if seq[k] <= n {
                break;
            }
            seq[k] = 1;
            k += 1;
        }
    }
}

fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n + 1];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (1..=n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, s));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

impl PartialEq for LabeledTree {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent
    }
}

impl Eq for LabeledTree {}

impl PartialOrd for LabeledTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LabeledTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code.cmp(&other.code)
    }
}

impl Hash for LabeledTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.parent.hash(state)
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

impl fmt::Debug for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::parse_labeled;

    #[test]
    fn two_vertex_trees() {
        let all = LabeledTree::enumerate(2).unwrap();
        let codes: Vec<&str> = all.iter().map(|t| t.code()).collect();
        assert_eq!(codes, vec!["1(2)", "2(1)"]);
        assert_eq!(
            LabeledTree::enumerate(1).unwrap(),
            vec![LabeledTree::single()]
        );
    }

    #[test]
    fn rejects_cycles_and_forests() {
        assert!(LabeledTree::from_parents(vec![Some(2), Some(1)]).is_err());
        assert!(LabeledTree::from_parents(vec![None, None]).is_err());
        assert!(LabeledTree::from_parents(vec![None, Some(3), Some(2)]).is_err());
        assert_eq!(LabeledTree::from_parents(vec![]), Err(Error::ZeroSize));
    }

    #[test]
    fn relabel_transposition() {
        let t = parse_labeled("1(2)").unwrap();
        let swap = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(t.relabel(&swap).unwrap().code(), "2(1)");
        assert_eq!(t.relabel(&Permutation::identity(2)).unwrap(), t);
        assert!(t.relabel(&Permutation::identity(3)).is_err());
    }

    #[test]
    fn lift_and_forget() {
        let shape = crate::trees::parse_unlabeled("((())())").unwrap();
        let lifted = LabeledTree::preorder_lift(&shape);
        assert_eq!(lifted.code(), "1(2(3),4)");
        assert_eq!(lifted.forget_labels(), shape);
    }

    #[test]
    fn print_uses_numeric_child_order() {
        let t = LabeledTree::from_parents(
            (1..=11)
                .map(|l| if l == 1 { None } else { Some(1) })
                .collect(),
        )
        .unwrap();
        assert_eq!(t.code(), "1(2,3,4,5,6,7,8,9,10,11)");
    }
}
