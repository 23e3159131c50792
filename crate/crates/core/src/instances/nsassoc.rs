use std::fmt;

use crate::error::{Error, Result};
use crate::formalsum::FormalSum;
use crate::operad::Operad;

/// The unique basis element `mₙ` of arity `n`; `m1` is the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AssocOp(pub usize);

impl fmt::Display for AssocOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

/// The non-symmetric associative operad: one operation per arity,
/// `mₙ ∘ᵢ mₘ = mₙ₊ₘ₋₁`.
#[derive(Clone, Copy, Debug, Default)]
pub struct NsAssoc;

impl Operad for NsAssoc {
    type Basis = AssocOp;

    fn name(&self) -> String {
        "nsassoc".to_string()
    }

    fn arity(&self, b: &AssocOp) -> usize {
        b.0
    }

    fn identity(&self) -> AssocOp {
        AssocOp(1)
    }

    fn compose(&self, b: &AssocOp, slot: usize, c: &AssocOp) -> Result<FormalSum<AssocOp>> {
        if slot == 0 || slot > b.0 {
            return Err(Error::SlotOutOfRange { slot, arity: b.0 });
        }
        Ok(FormalSum::basis(AssocOp(b.0 + c.0 - 1)))
    }

    fn basis(&self, arity: usize) -> Result<Vec<AssocOp>> {
        if arity == 0 {
            return Err(Error::ZeroSize);
        }
        Ok(vec![AssocOp(arity)])
    }

    fn generators(&self) -> Vec<AssocOp> {
        vec![AssocOp(2)]
    }

    fn parse_basis(&self, text: &str) -> Result<AssocOp> {
        let text = text.trim();
        if text == "id" {
            return Ok(AssocOp(1));
        }
        match text.strip_prefix('m').map(str::parse::<usize>) {
            Some(Ok(n)) if n >= 1 => Ok(AssocOp(n)),
            _ => Err(crate::error::ParseError::new(
                0,
                format!("expected `id` or `m<n>`, found `{text}`"),
            )
            .into()),
        }
    }
}
