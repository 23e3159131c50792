//! Witnesses that an operad is not free as a pre-Lie algebra: an insertion
//! element that vanishes in the operad next to the same insertion element
//! in the free pre-Lie algebra, where it is nonzero.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formalsum::FormalSum;
use crate::instances::Instance;
use crate::operad::{insertion_element, Counterexample, Operad, PreLieFlavor};
use crate::prelie::insertion_recursive;
use crate::trees::UnlabeledTree;

use super::VerificationReport;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Witness {
    /// e.g. `g <| (g, g, g)`
    pub relation: String,
    pub operadic_value: String,
    /// The same insertion with every input replaced by the single root.
    pub free_relation: String,
    pub free_value: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremReport {
    pub instance: String,
    pub witnesses: Vec<Witness>,
    pub wall_time_ms: u64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        !self.witnesses.is_empty() && self.witnesses.iter().all(|w| w.holds)
    }

    pub fn to_report(&self) -> VerificationReport {
        VerificationReport {
            instance: self.instance.clone(),
            law: "theorem".to_string(),
            bounds: BTreeMap::new(),
            cases_checked: self.witnesses.len(),
            failures: self
                .witnesses
                .iter()
                .filter(|w| !w.holds)
                .map(|w| Counterexample {
                    inputs: vec![w.relation.clone(), w.free_relation.clone()],
                    lhs: w.operadic_value.clone(),
                    rhs: w.free_value.clone(),
                })
                .collect(),
            wall_time_ms: self.wall_time_ms,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} {} theorem: {} witnesses\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.instance,
            self.witnesses.len()
        );
        for w in &self.witnesses {
            out.push_str(&format!(
                "  operad:    {} = {}\n  free:      {} = {}\n",
                w.relation, w.operadic_value, w.free_relation, w.free_value
            ));
        }
        out
    }
}

/// For the identity and every generator `μ` of arity `n`: the operadic
/// `μ ◁ (μ,…,μ)` with `n + 1` arguments, and `• ◁ (•,…,•)` with as many.
pub fn theorem_witnesses<O: Operad>(op: &O) -> Result<Vec<Witness>> {
    let root = FormalSum::basis(UnlabeledTree::root());
    let mut out = Vec::new();
    for mu in std::iter::once(op.identity()).chain(op.generators()) {
        let count = op.arity(&mu) + 1;
        let m = FormalSum::basis(mu.clone());
        let args = vec![m.clone(); count];
        let value = insertion_element(op, &m, &args, PreLieFlavor::Full)?;
        let free = insertion_recursive(&root, &vec![root.clone(); count])?;
        let name = op.format_basis(&mu);
        out.push(Witness {
            relation: format!("{name} <| ({})", vec![name.as_str(); count].join(", ")),
            operadic_value: op.format(&value),
            free_relation: format!("() <| ({})", vec!["()"; count].join(", ")),
            free_value: free.to_string(),
            holds: value.is_zero() && !free.is_zero(),
        });
    }
    Ok(out)
}

pub fn theorem_report(instance: &Instance) -> Result<TheoremReport> {
    let started = Instant::now();
    let witnesses = match instance {
        Instance::NsAssoc(op) => theorem_witnesses(op)?,
        Instance::Free(op) => theorem_witnesses(op)?,
        Instance::Rooted(op) => theorem_witnesses(op)?,
        Instance::FreePreLie => {
            return Err(Error::UnsupportedOperation("theorem on freeprelie".into()))
        }
    };
    Ok(TheoremReport {
        instance: instance.name(),
        witnesses,
        wall_time_ms: started.elapsed().as_millis() as u64,
    })
}
