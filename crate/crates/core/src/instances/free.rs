use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::formalsum::FormalSum;
use crate::operad::Operad;
use crate::trees::{parse_planar, Generator, PlanarTerm};

/// Generating operations of a free non-symmetric operad, each of arity at
/// least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    generators: Vec<Generator>,
}

impl Signature {
    pub fn new(generators: Vec<Generator>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidSignature("no generators".into()));
        }
        for (k, g) in generators.iter().enumerate() {
            if g.arity() < 2 {
                return Err(Error::InvalidSignature(format!(
                    "`{}` has arity {}, generators need arity at least 2",
                    g.name(),
                    g.arity()
                )));
            }
            if g.name() == "id" || g.name().starts_with("o_") {
                return Err(Error::InvalidSignature(format!(
                    "reserved name `{}`",
                    g.name()
                )));
            }
            if generators[..k].iter().any(|h| h.name() == g.name()) {
                return Err(Error::InvalidSignature(format!(
                    "duplicate generator `{}`",
                    g.name()
                )));
            }
        }
        Ok(Signature { generators })
    }

    /// Parses `g:2,h:3`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut generators = Vec::new();
        for part in text.split(',') {
            let (name, arity) = part.split_once(':').ok_or_else(|| {
                Error::InvalidSignature(format!("expected `name:arity`, found `{part}`"))
            })?;
            let name = name.trim();
            let valid = name
                .chars()
                .enumerate()
                .all(|(i, c)| c == '_' || c.is_alphabetic() || (i > 0 && c.is_ascii_digit()));
            if name.is_empty() || !valid {
                return Err(Error::InvalidSignature(format!(
                    "invalid generator name `{name}`"
                )));
            }
            let arity: usize = arity
                .trim()
                .parse()
                .map_err(|_| Error::InvalidSignature(format!("invalid arity in `{part}`")))?;
            generators.push(Generator::new(name, arity));
        }
        Signature::new(generators)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn get(&self, name: &str) -> Option<&Generator> {
        self.generators.iter().find(|g| g.name() == name)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.generators.iter().join(","))
    }
}

/// The free non-symmetric operad on a signature: planar trees decorated by
/// generators, composed by plugging into leaves.
#[derive(Clone, Debug)]
pub struct FreeOperad {
    signature: Signature,
}

impl FreeOperad {
    pub fn new(signature: Signature) -> Self {
        FreeOperad { signature }
    }

    /// `Mag₂`, the free operad on one binary generator `g`.
    pub fn mag2() -> Self {
        FreeOperad::new(Signature::new(vec![Generator::new("g", 2)]).unwrap())
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    fn is_mag2(&self) -> bool {
        self.signature.generators == [Generator::new("g", 2)]
    }

    fn validate(&self, t: &PlanarTerm) -> Result<()> {
        for g in t.generators() {
            match self.signature.get(g.name()) {
                None => return Err(Error::UnknownGenerator(g.name().to_string())),
                Some(known) if known.arity() != g.arity() => {
                    return Err(Error::ArgumentCount {
                        expected: known.arity(),
                        found: g.arity(),
                    })
                }
                Some(_) => {}
            }
        }
        Ok(())
    }
}

/// `free_ns_compose`: plug `s` into leaf `slot` of `t`.
pub fn free_ns_compose(
    t: &PlanarTerm,
    slot: usize,
    s: &PlanarTerm,
) -> Result<FormalSum<PlanarTerm>> {
    Ok(FormalSum::basis(t.plug(slot, s)?))
}

impl Operad for FreeOperad {
    type Basis = PlanarTerm;

    fn name(&self) -> String {
        if self.is_mag2() {
            "mag2".to_string()
        } else {
            format!("free:{}", self.signature)
        }
    }

    fn arity(&self, b: &PlanarTerm) -> usize {
        b.arity()
    }

    fn identity(&self) -> PlanarTerm {
        PlanarTerm::Leaf(1)
    }

    fn compose(
        &self,
        b: &PlanarTerm,
        slot: usize,
        c: &PlanarTerm,
    ) -> Result<FormalSum<PlanarTerm>> {
        free_ns_compose(b, slot, c)
    }

    fn basis(&self, arity: usize) -> Result<Vec<PlanarTerm>> {
        if arity == 0 {
            return Err(Error::ZeroSize);
        }
        // by_arity[n] holds every term with n leaves
        let mut by_arity: Vec<Vec<PlanarTerm>> = vec![Vec::new(), vec![PlanarTerm::Leaf(1)]];
        for n in 2..=arity {
            let mut terms = Vec::new();
            for g in &self.signature.generators {
                for parts in compositions(n, g.arity()) {
                    for children in parts
                        .iter()
                        .map(|&p| by_arity[p].iter())
                        .multi_cartesian_product()
                    {
                        let children = children.into_iter().cloned().collect();
                        terms.push(PlanarTerm::Node(g.clone(), children).renumbered());
                    }
                }
            }
            by_arity.push(terms);
        }
        let mut out = by_arity.swap_remove(arity);
        out.sort_by_cached_key(ToString::to_string);
        Ok(out)
    }

    fn generators(&self) -> Vec<PlanarTerm> {
        self.signature
            .generators
            .iter()
            .map(PlanarTerm::corolla)
            .collect()
    }

    fn parse_basis(&self, text: &str) -> Result<PlanarTerm> {
        let text = text.trim();
        if text == "id" {
            return Ok(PlanarTerm::Leaf(1));
        }
        if let Some(g) = self.signature.get(text) {
            return Ok(PlanarTerm::corolla(g));
        }
        let t = parse_planar(text)?;
        self.validate(&t)?;
        Ok(t)
    }

    /// The identity prints as `id` and a bare generator as its name.
    fn format_basis(&self, b: &PlanarTerm) -> String {
        match b {
            PlanarTerm::Leaf(_) => "id".to_string(),
            PlanarTerm::Node(g, _) if *b == PlanarTerm::corolla(g) => g.name().to_string(),
            _ => b.to_string(),
        }
    }
}

/// Ordered ways of writing `n` as a sum of `k` positive parts.
fn compositions(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if n < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for first in 1..=n - (k - 1) {
        for mut rest in compositions(n - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}
