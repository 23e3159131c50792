//! Exhaustive verification sweeps and their reports.

mod sweep;
mod theorem;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instances::Instance;
use crate::operad::{Counterexample, Verdict};

pub use sweep::{free_prelie_insertion_inputs, run_law};
pub use theorem::{theorem_report, theorem_witnesses, TheoremReport, Witness};

/// Largest arity, leaf count or vertex count any sweep or enumeration will
/// accept. Labeled bases grow as `n^(n−1)`.
pub const SIZE_HARD_CAP: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Law {
    Sequential,
    Parallel,
    Unit,
    Identity,
    PreLie,
    Nap,
    Grading,
    InsertionVanish,
    InsertionClosedVsRecursive,
    InsertionSymmetry,
    InsertionNonvanish,
    CoinvariantWelldef,
    CoinvariantGraft,
    Equivariance,
}

impl Law {
    pub const ALL: [Law; 14] = [
        Law::Sequential,
        Law::Parallel,
        Law::Unit,
        Law::Identity,
        Law::PreLie,
        Law::Nap,
        Law::Grading,
        Law::InsertionVanish,
        Law::InsertionClosedVsRecursive,
        Law::InsertionSymmetry,
        Law::InsertionNonvanish,
        Law::CoinvariantWelldef,
        Law::CoinvariantGraft,
        Law::Equivariance,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::Sequential => "sequential",
            Law::Parallel => "parallel",
            Law::Unit => "unit",
            Law::Identity => "identity",
            Law::PreLie => "prelie",
            Law::Nap => "nap",
            Law::Grading => "grading",
            Law::InsertionVanish => "insertion-vanish",
            Law::InsertionClosedVsRecursive => "insertion-closed-vs-recursive",
            Law::InsertionSymmetry => "insertion-symmetry",
            Law::InsertionNonvanish => "insertion-nonvanish",
            Law::CoinvariantWelldef => "coinvariant-welldef",
            Law::CoinvariantGraft => "coinvariant-graft",
            Law::Equivariance => "equivariance",
        }
    }

    /// Laws that apply to an instance.
    pub fn applicable(instance: &Instance) -> Vec<Law> {
        use Law::*;
        match instance {
            Instance::FreePreLie => vec![
                PreLie,
                Nap,
                InsertionClosedVsRecursive,
                InsertionSymmetry,
                InsertionNonvanish,
            ],
            Instance::Rooted(_) => vec![
                Sequential,
                Parallel,
                Unit,
                Identity,
                PreLie,
                Grading,
                InsertionVanish,
                InsertionClosedVsRecursive,
                InsertionSymmetry,
                CoinvariantWelldef,
                CoinvariantGraft,
                Equivariance,
            ],
            _ => vec![
                Sequential,
                Parallel,
                Unit,
                Identity,
                PreLie,
                Grading,
                InsertionVanish,
                InsertionClosedVsRecursive,
                InsertionSymmetry,
            ],
        }
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Law::ALL
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::UnknownLaw(s.to_string()))
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Size limits for a sweep. `max_arity` bounds operad arities (leaves for
/// planar instances), `max_vertices` bounds free pre-Lie inputs, and
/// `max_args` bounds the argument count of symmetry checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_arity: usize,
    pub max_vertices: usize,
    pub max_args: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_arity: 3,
            max_vertices: 6,
            max_args: 3,
        }
    }
}

impl Bounds {
    pub fn check_cap(&self) -> Result<()> {
        for requested in [self.max_arity, self.max_vertices] {
            if requested > SIZE_HARD_CAP {
                return Err(Error::BudgetExceeded {
                    requested,
                    cap: SIZE_HARD_CAP,
                });
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub instance: String,
    pub law: String,
    pub bounds: BTreeMap<String, usize>,
    pub cases_checked: usize,
    pub failures: Vec<Counterexample>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_text(&self) -> String {
        let bounds: Vec<String> = self
            .bounds
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let mut out = format!(
            "{} {} {}: {} cases, {} failures ({})\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.instance,
            self.law,
            self.cases_checked,
            self.failures.len(),
            bounds.join(", "),
        );
        for f in &self.failures {
            out.push_str(&format!(
                "  inputs: {}\n    lhs: {}\n    rhs: {}\n",
                f.inputs.join(" ; "),
                f.lhs,
                f.rhs
            ));
        }
        out
    }
}

/// Collects verdicts for one sweep.
#[derive(Default)]
pub(crate) struct Tally {
    cases: usize,
    failures: Vec<Counterexample>,
}

impl Tally {
    pub(crate) fn record(&mut self, verdict: Verdict) {
        self.cases += 1;
        if let Verdict::Fails(c) = verdict {
            self.failures.push(c);
        }
    }

    pub(crate) fn finish(
        mut self,
        instance: &Instance,
        law: Law,
        bounds: BTreeMap<String, usize>,
        started: Instant,
    ) -> VerificationReport {
        self.failures.sort();
        VerificationReport {
            instance: instance.name(),
            law: law.name().to_string(),
            bounds,
            cases_checked: self.cases,
            failures: self.failures,
            wall_time_ms: started.elapsed().as_millis() as u64,
        }
    }
}
