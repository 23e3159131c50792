// In the free operad on one binary generator `g`, the pre-Lie element
// `A = g <| (g, g)` satisfies `6 g <| (A, A) = A <| (g, g, g, g)`, a
// relation not implied by the pre-Lie axioms.

use prelie_operads::formalsum::integer;
use prelie_operads::instances::FreeOperad;
use prelie_operads::operad::{insertion_element, Operad, PreLieFlavor};
use prelie_operads::{FormalSum, Result};

pub fn run() -> Result<()> {
    let mag2 = FreeOperad::mag2();
    let g = FormalSum::basis(mag2.parse_basis("g")?);
    let full = PreLieFlavor::Full;

    let a = insertion_element(&mag2, &g, &[g.clone(), g.clone()], full)?;
    println!("A = {}", mag2.format(&a));

    let lhs = insertion_element(&mag2, &g, &[a.clone(), a.clone()], full)?.scale(&integer(6));
    let rhs = insertion_element(&mag2, &a, &vec![g.clone(); 4], full)?;
    println!("6 g <| (A, A)       = {}", mag2.format(&lhs));
    println!("A <| (g, g, g, g)   = {}", mag2.format(&rhs));
    println!("equal: {}", lhs == rhs);
    assert_eq!(lhs, rhs);
    Ok(())
}

fn main() -> Result<()> {
    run()
}
