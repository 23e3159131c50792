// An operation of arity n kills every insertion element with n + 1
// arguments, while one argument fewer leaves a nonzero element.

use prelie_operads::instances::{FreeOperad, RootedTreeOperad};
use prelie_operads::operad::{insertion_element, Element, Operad, PreLieFlavor};
use prelie_operads::{FormalSum, Result};

fn report<O: Operad>(op: &O, mu: &str, args: &[&str]) -> Result<()> {
    let mu = FormalSum::basis(op.parse_basis(mu)?);
    let args: Vec<Element<O>> = args
        .iter()
        .map(|a| op.parse_basis(a).map(FormalSum::basis))
        .collect::<Result<_>>()?;
    let value = insertion_element(op, &mu, &args, PreLieFlavor::Full)?;
    let names: Vec<String> = args.iter().map(|a| op.format(a)).collect();
    println!(
        "{}: {} <| ({}) = {}",
        op.name(),
        op.format(&mu),
        names.join(", "),
        op.format(&value)
    );
    Ok(())
}

pub fn run() -> Result<()> {
    let mag2 = FreeOperad::mag2();
    report(&mag2, "id", &["id", "id"])?;
    report(&mag2, "g", &["g", "g"])?;
    report(&mag2, "g", &["g", "g", "g"])?;

    let prelie = RootedTreeOperad::prelie();
    report(&prelie, "1(2)", &["id", "1(2)"])?;
    report(&prelie, "1(2)", &["id", "1(2)", "2(1)"])?;
    Ok(())
}

fn main() -> Result<()> {
    run()
}
