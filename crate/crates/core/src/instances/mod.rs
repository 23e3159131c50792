//! Concrete operads and name-based lookup.

mod free;
mod nsassoc;
mod rooted;

use std::fmt;
use std::str::FromStr;

pub use free::{free_ns_compose, FreeOperad, Signature};
pub use nsassoc::{AssocOp, NsAssoc};
pub use rooted::{block_permutation, inner_block_permutation, RootedKind, RootedTreeOperad};

use crate::error::{Error, Result};

/// Instance names: `nsassoc`, `mag2`, `free:<signature>`, `prelie`, `nap`,
/// and `freeprelie` for the free pre-Lie algebra on one generator.
#[derive(Clone, Debug)]
pub enum Instance {
    NsAssoc(NsAssoc),
    Free(FreeOperad),
    Rooted(RootedTreeOperad),
    FreePreLie,
}

impl Instance {
    pub fn name(&self) -> String {
        use crate::operad::Operad;
        match self {
            Instance::NsAssoc(op) => op.name(),
            Instance::Free(op) => op.name(),
            Instance::Rooted(op) => op.name(),
            Instance::FreePreLie => "freeprelie".to_string(),
        }
    }

    /// The operad instances, in a fixed order.
    pub fn all_operads() -> Vec<Instance> {
        vec![
            Instance::NsAssoc(NsAssoc),
            Instance::Free(FreeOperad::mag2()),
            Instance::Rooted(RootedTreeOperad::prelie()),
            Instance::Rooted(RootedTreeOperad::nap()),
        ]
    }
}

impl FromStr for Instance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "nsassoc" => Instance::NsAssoc(NsAssoc),
            "mag2" => Instance::Free(FreeOperad::mag2()),
            "prelie" => Instance::Rooted(RootedTreeOperad::prelie()),
            "nap" => Instance::Rooted(RootedTreeOperad::nap()),
            "freeprelie" => Instance::FreePreLie,
            other => match other.strip_prefix("free:") {
                Some(sig) => Instance::Free(FreeOperad::new(Signature::parse(sig)?)),
                None => return Err(Error::UnknownInstance(other.to_string())),
            },
        })
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
