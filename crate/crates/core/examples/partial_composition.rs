// Partial compositions in the concrete operads.

use prelie_operads::instances::{FreeOperad, NsAssoc, RootedTreeOperad};
use prelie_operads::operad::{multi_compose, Operad};
use prelie_operads::Result;

fn show<O: Operad>(op: &O, a: &str, slot: usize, b: &str) -> Result<()> {
    let (x, y) = (op.parse_basis(a)?, op.parse_basis(b)?);
    let value = op.compose(&x, slot, &y)?;
    println!("{:>7}: {a} o_{slot} {b} = {}", op.name(), op.format(&value));
    Ok(())
}

pub fn run() -> Result<()> {
    show(&NsAssoc, "m2", 1, "m3")?;

    let mag2 = FreeOperad::mag2();
    show(&mag2, "g(1,2)", 1, "g(1,2)")?;
    show(&mag2, "g(1,2)", 2, "g(1,2)")?;

    // The children of the replaced vertex reattach to every vertex of the
    // inserted tree in the pre-Lie operad, and only to its root in NAP.
    let prelie = RootedTreeOperad::prelie();
    let nap = RootedTreeOperad::nap();
    show(&prelie, "1(2)", 1, "1(2)")?;
    show(&nap, "1(2)", 1, "1(2)")?;
    show(&prelie, "2(1,3)", 2, "2(1)")?;

    let g = mag2.parse_basis("g(1,2)")?;
    let both = multi_compose(&mag2, &g, &[1, 2], &[g.clone(), g.clone()])?;
    println!("   mag2: g(1,2) o_(1,2) (g, g) = {}", mag2.format(&both));
    Ok(())
}

fn main() -> Result<()> {
    run()
}
