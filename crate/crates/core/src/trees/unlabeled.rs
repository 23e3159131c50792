use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// A rooted tree whose children are unordered.
///
/// Values are always canonical: children are sorted by their printed form,
/// so two trees are equal exactly when their prints are equal.
#[derive(Clone)]
pub struct UnlabeledTree {
    children: Vec<UnlabeledTree>,
    code: String,
    size: usize,
}

impl UnlabeledTree {
    /// The single-vertex tree `•`.
    pub fn root() -> Self {
        UnlabeledTree {
            children: Vec::new(),
            code: "()".to_string(),
            size: 1,
        }
    }

    /// Builds the tree whose root has the given subtrees, in any order.
    pub fn new(mut children: Vec<UnlabeledTree>) -> Self {
        children.sort();
        let size = 1 + children.iter().map(|c| c.size).sum::<usize>();
        let mut code = String::with_capacity(2 * size);
        code.push('(');
        for c in &children {
            code.push_str(&c.code);
        }
        code.push(')');
        UnlabeledTree {
            children,
            code,
            size,
        }
    }

    /// Root with `n` leaf children.
    pub fn corolla(n: usize) -> Self {
        UnlabeledTree::new(vec![UnlabeledTree::root(); n])
    }

    /// Path with `n` vertices.
    pub fn chain(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let mut t = UnlabeledTree::root();
        for _ in 1..n {
            t = UnlabeledTree::new(vec![t]);
        }
        Ok(t)
    }

    pub fn children(&self) -> &[UnlabeledTree] {
        &self.children
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The canonical print, e.g. `(()())` for the cherry.
    pub fn code(&self) -> &str {
        &self.code
    }

    /// Rebuilds the tree bottom-up. Every value is already canonical, so this
    /// is the identity on values; it exists for callers that assembled
    /// children by hand.
    pub fn canonicalize(&self) -> Self {
        UnlabeledTree::new(self.children.iter().map(|c| c.canonicalize()).collect())
    }

    /// Adds `s` as a new child of the vertex with pre-order index `vertex`
    /// (the root is 0).
    pub fn graft_at_vertex(&self, vertex: usize, s: &UnlabeledTree) -> Result<Self> {
        if vertex >= self.size {
            return Err(Error::VertexOutOfRange {
                index: vertex,
                size: self.size,
            });
        }
        Ok(self.graft_unchecked(vertex, s))
    }

    fn graft_unchecked(&self, vertex: usize, s: &UnlabeledTree) -> Self {
        if vertex == 0 {
            let mut children = self.children.clone();
            children.push(s.clone());
            return UnlabeledTree::new(children);
        }
        let mut offset = 1;
        let mut children = self.children.clone();
        for child in children.iter_mut() {
            if vertex < offset + child.size {
                *child = child.graft_unchecked(vertex - offset, s);
                return UnlabeledTree::new(children);
            }
            offset += child.size;
        }
        unreachable!("vertex index checked against size")
    }

    /// All graftings of `s` onto a vertex of `self`, one per vertex, in
    /// pre-order.
    pub fn graft_everywhere(&self, s: &UnlabeledTree) -> Vec<Self> {
        let mut out = Vec::with_capacity(self.size);
        let mut children = self.children.clone();
        children.push(s.clone());
        out.push(UnlabeledTree::new(children));
        for (k, child) in self.children.iter().enumerate() {
            for grafted in child.graft_everywhere(s) {
                let mut children = self.children.clone();
                children[k] = grafted;
                out.push(UnlabeledTree::new(children));
            }
        }
        out
    }

    /// Child lists of every vertex, indexed by pre-order position.
    pub fn preorder_children(&self) -> Vec<Vec<usize>> {
        fn walk(t: &UnlabeledTree, out: &mut Vec<Vec<usize>>) -> usize {
            let me = out.len();
            out.push(Vec::new());
            for c in &t.children {
                let idx = walk(c, out);
                out[me].push(idx);
            }
            me
        }
        let mut out = Vec::with_capacity(self.size);
        walk(self, &mut out);
        out
    }

    /// All canonical rooted trees with `n` vertices, sorted by print.
    pub fn enumerate(n: usize) -> Result<Vec<Self>> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        // every tree on k+1 vertices arises by adding a leaf to one on k
        let mut level: BTreeSet<UnlabeledTree> = BTreeSet::from([UnlabeledTree::root()]);
        let leaf = UnlabeledTree::root();
        for _ in 1..n {
            level = level
                .iter()
                .flat_map(|t| t.graft_everywhere(&leaf))
                .collect();
        }
        Ok(level.into_iter().collect())
    }
}

impl PartialEq for UnlabeledTree {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code
    }
}

impl Eq for UnlabeledTree {}

impl PartialOrd for UnlabeledTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for UnlabeledTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code.cmp(&other.code)
    }
}

impl Hash for UnlabeledTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.code.hash(state)
    }
}

impl fmt::Display for UnlabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

impl fmt::Debug for UnlabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}
