// Exhaustive checks of the operad axioms and the pre-Lie law on small
// bases, with the report printed as text and as JSON.

use prelie_operads::instances::Instance;
use prelie_operads::verify::{run_law, Bounds, Law};
use prelie_operads::Result;

pub fn run() -> Result<()> {
    let bounds = Bounds {
        max_arity: 3,
        ..Bounds::default()
    };
    for name in ["nsassoc", "mag2", "prelie", "nap"] {
        let instance: Instance = name.parse()?;
        for law in [Law::Sequential, Law::Parallel, Law::Unit, Law::PreLie] {
            let report = run_law(&instance, law, &bounds)?;
            print!("{}", report.to_text());
            assert!(report.passed());
        }
    }

    let report = run_law(
        &"freeprelie".parse()?,
        Law::InsertionSymmetry,
        &Bounds::default(),
    )?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    Ok(())
}

fn main() -> Result<()> {
    run()
}
