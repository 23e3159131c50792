use std::fmt;

use crate::error::{Error, Result};

/// A named operation symbol with a fixed number of inputs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Generator {
    name: String,
    arity: usize,
}

impl Generator {
    pub fn new(name: impl Into<String>, arity: usize) -> Self {
        Generator {
            name: name.into(),
            arity,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.name, self.arity)
    }
}

/// A planar tree whose internal nodes carry generators. Leaves are numbered
/// `1..=arity` from left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum PlanarTerm {
    Leaf(usize),
    Node(Generator, Vec<PlanarTerm>),
}

impl PlanarTerm {
    /// The generator applied to `arity` distinct leaves.
    pub fn corolla(generator: &Generator) -> Self {
        PlanarTerm::Node(
            generator.clone(),
            (1..=generator.arity).map(PlanarTerm::Leaf).collect(),
        )
    }

    /// Builds a node and renumbers its leaves.
    pub fn node(generator: &Generator, children: Vec<PlanarTerm>) -> Result<Self> {
        if children.len() != generator.arity {
            return Err(Error::ArgumentCount {
                expected: generator.arity,
                found: children.len(),
            });
        }
        Ok(PlanarTerm::Node(generator.clone(), children).renumbered())
    }

    pub fn arity(&self) -> usize {
        match self {
            PlanarTerm::Leaf(_) => 1,
            PlanarTerm::Node(_, children) => children.iter().map(PlanarTerm::arity).sum(),
        }
    }

    /// Number of internal nodes.
    pub fn node_count(&self) -> usize {
        match self {
            PlanarTerm::Leaf(_) => 0,
            PlanarTerm::Node(_, children) => {
                1 + children.iter().map(PlanarTerm::node_count).sum::<usize>()
            }
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, PlanarTerm::Leaf(_))
    }

    /// Same shape with leaves numbered `1..` left to right.
    pub fn renumbered(self) -> Self {
        fn go(t: PlanarTerm, next: &mut usize) -> PlanarTerm {
            match t {
                PlanarTerm::Leaf(_) => {
                    *next += 1;
                    PlanarTerm::Leaf(*next)
                }
                PlanarTerm::Node(g, children) => {
                    PlanarTerm::Node(g, children.into_iter().map(|c| go(c, next)).collect())
                }
            }
        }
        go(self, &mut 0)
    }

    /// Every generator occurring in the term, with repetition.
    pub fn generators(&self) -> Vec<&Generator> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(t) = stack.pop() {
            if let PlanarTerm::Node(g, children) = t {
                out.push(g);
                stack.extend(children.iter());
            }
        }
        out
    }

    /// Substitutes `s` for the `slot`-th leaf.
    pub fn plug(&self, slot: usize, s: &PlanarTerm) -> Result<Self> {
        let arity = self.arity();
        if slot == 0 || slot > arity {
            return Err(Error::SlotOutOfRange { slot, arity });
        }
        fn go(t: &PlanarTerm, slot: usize, seen: &mut usize, s: &PlanarTerm) -> PlanarTerm {
            match t {
                PlanarTerm::Leaf(_) => {
                    *seen += 1;
                    if *seen == slot {
                        s.clone()
                    } else {
                        t.clone()
                    }
                }
                PlanarTerm::Node(g, children) => PlanarTerm::Node(
                    g.clone(),
                    children.iter().map(|c| go(c, slot, seen, s)).collect(),
                ),
            }
        }
        Ok(go(self, slot, &mut 0, s).renumbered())
    }

    /// All planar binary trees with `leaves` leaves over `generator`,
    /// sorted by print.
    pub fn enumerate_binary(leaves: usize, generator: &Generator) -> Result<Vec<Self>> {
        if generator.arity != 2 {
            return Err(Error::NotBinary {
                name: generator.name.clone(),
                arity: generator.arity,
            });
        }
        if leaves == 0 {
            return Err(Error::ZeroSize);
        }
        let mut out = binary_shapes(leaves, generator);
        out.sort_by_cached_key(ToString::to_string);
        Ok(out)
    }
}

fn binary_shapes(leaves: usize, g: &Generator) -> Vec<PlanarTerm> {
    if leaves == 1 {
        return vec![PlanarTerm::Leaf(1)];
    }
    let mut out = Vec::new();
    for left in 1..leaves {
        let lefts = binary_shapes(left, g);
        let rights = binary_shapes(leaves - left, g);
        for l in &lefts {
            for r in &rights {
                out.push(PlanarTerm::Node(g.clone(), vec![l.clone(), r.clone()]).renumbered());
            }
        }
    }
    out
}

impl fmt::Display for PlanarTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTerm::Leaf(i) => write!(f, "{i}"),
            PlanarTerm::Node(g, children) => {
                write!(f, "{}(", g.name)?;
                for (k, c) in children.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}
