// Brute-force reference implementations used to cross-check the library.
// Nothing here calls into the crate, so agreement is meaningful.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

/// A rooted tree given by a parent function on `0..n`, with `None` at the
/// root. Printed as nested parentheses with children sorted as strings.
pub fn canonical_code(parent: &[Option<usize>]) -> String {
    fn code(v: usize, parent: &[Option<usize>]) -> String {
        let mut kids: Vec<String> = (0..parent.len())
            .filter(|&c| parent[c] == Some(v))
            .map(|c| code(c, parent))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    let root = parent.iter().position(Option::is_none).expect("one root");
    code(root, parent)
}

/// Re-sorts the children of a parenthesized tree with this module's
/// ordering, so that codes produced elsewhere can be compared here.
pub fn normalize_code(text: &str) -> String {
    let (parent, _) = parse_parens(text);
    canonical_code(&parent)
}

fn parse_parens(text: &str) -> (Vec<Option<usize>>, usize) {
    let mut parent = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for ch in text.chars() {
        match ch {
            '(' => {
                parent.push(stack.last().copied());
                stack.push(parent.len() - 1);
            }
            ')' => {
                stack.pop();
            }
            _ => panic!("unexpected character {ch:?} in {text}"),
        }
    }
    let n = parent.len();
    (parent, n)
}

/// Distinct shapes obtained from every parent function with
/// `parent(v) < v`. Every unordered rooted tree has such a labeling.
pub fn unlabeled_shapes(n: usize) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut parent = vec![None; n];
    fn go(v: usize, parent: &mut Vec<Option<usize>>, out: &mut BTreeSet<String>) {
        if v == parent.len() {
            out.insert(canonical_code(parent));
            return;
        }
        for p in 0..v {
            parent[v] = Some(p);
            go(v + 1, parent, out);
        }
    }
    if n > 0 {
        go(1, &mut parent, &mut out);
    }
    out
}

/// Every acyclic parent function on labels `1..=n` with a single root, as
/// 1-based parent vectors.
pub fn labeled_trees(n: usize) -> BTreeSet<Vec<Option<usize>>> {
    let mut out = BTreeSet::new();
    let choices: Vec<Option<usize>> = std::iter::once(None).chain((1..=n).map(Some)).collect();
    let mut current = vec![None; n];
    fn valid(parent: &[Option<usize>]) -> bool {
        let n = parent.len();
        if parent.iter().filter(|p| p.is_none()).count() != 1 {
            return false;
        }
        (1..=n).all(|start| {
            let mut at = start;
            for _ in 0..n {
                match parent[at - 1] {
                    None => return true,
                    Some(p) => at = p,
                }
            }
            false
        })
    }
    fn go(
        v: usize,
        choices: &[Option<usize>],
        current: &mut Vec<Option<usize>>,
        out: &mut BTreeSet<Vec<Option<usize>>>,
    ) {
        if v == current.len() {
            if valid(current) {
                out.insert(current.clone());
            }
            return;
        }
        for c in choices {
            current[v] = *c;
            go(v + 1, choices, current, out);
        }
    }
    go(0, &choices, &mut current, &mut out);
    out
}

/// Planar binary trees with unnumbered leaves.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Bin {
    Leaf,
    Node(Box<Bin>, Box<Bin>),
}

impl Bin {
    pub fn g() -> Bin {
        Bin::Node(Box::new(Bin::Leaf), Box::new(Bin::Leaf))
    }

    pub fn leaves(&self) -> usize {
        match self {
            Bin::Leaf => 1,
            Bin::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Replaces leaf `slot` (1-based, left to right) by `s`.
    pub fn substitute(&self, slot: usize, s: &Bin) -> Bin {
        match self {
            Bin::Leaf => {
                assert_eq!(slot, 1);
                s.clone()
            }
            Bin::Node(l, r) => {
                let left = l.leaves();
                if slot <= left {
                    Bin::Node(Box::new(l.substitute(slot, s)), r.clone())
                } else {
                    Bin::Node(l.clone(), Box::new(r.substitute(slot - left, s)))
                }
            }
        }
    }

    /// Prints with leaves numbered from 1 and internal nodes named `g`.
    pub fn render(&self) -> String {
        fn go(t: &Bin, next: &mut usize) -> String {
            match t {
                Bin::Leaf => {
                    *next += 1;
                    next.to_string()
                }
                Bin::Node(l, r) => {
                    let a = go(l, next);
                    let b = go(r, next);
                    format!("g({a},{b})")
                }
            }
        }
        go(self, &mut 0)
    }
}

pub fn binary_trees(leaves: usize) -> Vec<Bin> {
    if leaves == 1 {
        return vec![Bin::Leaf];
    }
    let mut out = Vec::new();
    for k in 1..leaves {
        for l in binary_trees(k) {
            for r in binary_trees(leaves - k) {
                out.push(Bin::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

pub type BinSum = BTreeMap<Bin, i64>;

fn add(into: &mut BinSum, key: Bin, c: i64) {
    let entry = into.entry(key.clone()).or_insert(0);
    *entry += c;
    if *entry == 0 {
        into.remove(&key);
    }
}

pub fn bin_product(x: &BinSum, y: &BinSum) -> BinSum {
    let mut out = BinSum::new();
    for (t, a) in x {
        for (s, b) in y {
            for slot in 1..=t.leaves() {
                add(&mut out, t.substitute(slot, s), a * b);
            }
        }
    }
    out
}

pub fn bin_sub(x: &BinSum, y: &BinSum) -> BinSum {
    let mut out = x.clone();
    for (k, c) in y {
        add(&mut out, k.clone(), -c);
    }
    out
}

/// The insertion element straight from its recursive definition.
pub fn bin_insertion(t: &BinSum, args: &[BinSum]) -> BinSum {
    let (last, init) = args.split_last().expect("at least one argument");
    if init.is_empty() {
        return bin_product(t, last);
    }
    let mut out = bin_product(&bin_insertion(t, init), last);
    for i in 0..init.len() {
        let mut modified = init.to_vec();
        modified[i] = bin_product(&init[i], last);
        out = bin_sub(&out, &bin_insertion(t, &modified));
    }
    out
}

pub fn render_bin_sum(x: &BinSum) -> BTreeMap<String, String> {
    x.iter().map(|(k, c)| (k.render(), c.to_string())).collect()
}

/// `t <| (s₁,…,sₙ)` in the free pre-Lie algebra as the sum over all ways
/// of attaching each `sᵢ` to a vertex of `t`, keyed by canonical code.
pub fn attach_everywhere(t: &str, args: &[&str]) -> BTreeMap<String, i64> {
    let (base, n) = parse_parens(t);
    let parsed: Vec<(Vec<Option<usize>>, usize)> = args.iter().map(|s| parse_parens(s)).collect();
    let mut out = BTreeMap::new();
    let mut choice = vec![0usize; args.len()];
    loop {
        let mut parent = base.clone();
        for (k, (sp, _)) in parsed.iter().enumerate() {
            let offset = parent.len();
            for p in sp {
                parent.push(Some(match p {
                    Some(q) => q + offset,
                    None => choice[k],
                }));
            }
        }
        *out.entry(canonical_code(&parent)).or_insert(0) += 1;
        let mut k = 0;
        loop {
            if k == choice.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < n {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Composition in the pre-Lie operad (or, with `nap`, the NAP operad) on
/// 1-based parent vectors: vertex `slot` of `mu` is replaced by `nu`, and
/// its former children are attached to a vertex of `nu` in every possible
/// way (only to the root of `nu` for NAP).
pub fn rooted_compose(
    mu: &[Option<usize>],
    slot: usize,
    nu: &[Option<usize>],
    nap: bool,
) -> BTreeMap<Vec<Option<usize>>, i64> {
    let (n, m) = (mu.len(), nu.len());
    let outer = |a: usize| if a < slot { a } else { a + m - 1 };
    let inner = |b: usize| b + slot - 1;
    let orphans: Vec<usize> = (1..=n).filter(|&c| mu[c - 1] == Some(slot)).collect();
    let nu_root = nu.iter().position(Option::is_none).unwrap() + 1;
    let targets: Vec<usize> = if nap {
        vec![nu_root]
    } else {
        (1..=m).collect()
    };

    let mut out = BTreeMap::new();
    let mut choice = vec![0usize; orphans.len()];
    loop {
        let mut parent = vec![None; n + m - 1];
        for a in (1..=n).filter(|&a| a != slot) {
            parent[outer(a) - 1] = match mu[a - 1] {
                Some(p) if p == slot => None,
                Some(p) => Some(outer(p)),
                None => None,
            };
        }
        for b in 1..=m {
            parent[inner(b) - 1] = match nu[b - 1] {
                Some(p) => Some(inner(p)),
                None => mu[slot - 1].map(outer),
            };
        }
        for (k, &c) in orphans.iter().enumerate() {
            parent[outer(c) - 1] = Some(inner(targets[choice[k]]));
        }
        *out.entry(parent).or_insert(0) += 1;
        let mut k = 0;
        loop {
            if k == choice.len() {
                return out;
            }
            choice[k] += 1;
            if choice[k] < targets.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}
