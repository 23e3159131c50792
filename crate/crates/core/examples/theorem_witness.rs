// For each operad, an insertion element that vanishes although the
// corresponding element of the free pre-Lie algebra does not. The operadic
// pre-Lie algebra therefore satisfies relations beyond the pre-Lie law.

use prelie_operads::instances::Instance;
use prelie_operads::verify::theorem_report;
use prelie_operads::Result;

pub fn run() -> Result<()> {
    for instance in Instance::all_operads() {
        let report = theorem_report(&instance)?;
        print!("{}", report.to_text());
        assert!(report.passed());
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
