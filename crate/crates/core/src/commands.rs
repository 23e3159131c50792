//! Implementations behind the command-line subcommands.

use crate::error::{Error, Result};
use crate::expr::eval_text;
use crate::instances::Instance;
use crate::trees::{Generator, LabeledTree, PlanarTerm, TreeFamily, UnlabeledTree};
use crate::verify::{
    run_law, theorem_report, Bounds, Law, TheoremReport, VerificationReport, SIZE_HARD_CAP,
};

/// Lists the trees of one family and size in canonical order, one per
/// line, or just their number.
pub fn enumerate(
    family: TreeFamily,
    size: usize,
    count_only: bool,
    generator: &str,
) -> Result<String> {
    if size > SIZE_HARD_CAP {
        return Err(Error::BudgetExceeded {
            requested: size,
            cap: SIZE_HARD_CAP,
        });
    }
    let listing: Vec<String> = match family {
        TreeFamily::Unlabeled => UnlabeledTree::enumerate(size)?
            .iter()
            .map(ToString::to_string)
            .collect(),
        TreeFamily::Labeled => LabeledTree::enumerate(size)?
            .iter()
            .map(ToString::to_string)
            .collect(),
        TreeFamily::Planar => PlanarTerm::enumerate_binary(size, &Generator::new(generator, 2))?
            .iter()
            .map(ToString::to_string)
            .collect(),
    };
    Ok(if count_only {
        format!("{}\n", listing.len())
    } else {
        listing.iter().map(|l| format!("{l}\n")).collect()
    })
}

pub fn eval(instance: &Instance, expression: &str) -> Result<String> {
    eval_text(instance, expression)
}

/// Default sweep bounds: arity 3 for the labeled-tree operads, 4 leaves for
/// the planar ones, 6 vertices for the free pre-Lie algebra.
pub fn default_bounds(instance: &Instance) -> Bounds {
    let max_arity = match instance {
        Instance::Rooted(_) => 3,
        _ => 4,
    };
    Bounds {
        max_arity,
        ..Bounds::default()
    }
}

pub fn check(instance: &Instance, law: Law, bounds: &Bounds) -> Result<VerificationReport> {
    run_law(instance, law, bounds)
}

pub fn theorem(instance: &Instance) -> Result<TheoremReport> {
    theorem_report(instance)
}

/// Insertion sweeps grow with (basis size)^(arity + 1); the full report
/// runs them at arity 2.
const REPORT_INSERTION_ARITY: usize = 2;

/// Every applicable law for each instance, then its theorem witnesses.
pub fn report(instances: &[Instance], bounds: Option<Bounds>) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for instance in instances {
        let base = bounds.unwrap_or_else(|| default_bounds(instance));
        for law in Law::applicable(instance) {
            let mut b = base;
            if bounds.is_none()
                && matches!(
                    law,
                    Law::InsertionVanish | Law::InsertionClosedVsRecursive | Law::InsertionSymmetry
                )
            {
                b.max_arity = b.max_arity.min(REPORT_INSERTION_ARITY);
            }
            if bounds.is_none()
                && matches!(instance, Instance::FreePreLie)
                && matches!(law, Law::PreLie | Law::Nap)
            {
                b.max_vertices = b.max_vertices.min(4);
            }
            out.push(run_law(instance, law, &b)?);
        }
        if !matches!(instance, Instance::FreePreLie) {
            out.push(theorem_report(instance)?.to_report());
        }
    }
    Ok(out)
}
