// Grafting and insertion elements in the free pre-Lie algebra on one
// generator. Trees print as nested parentheses: `()` is a single vertex and
// `(()())` is a root with two children.

use prelie_operads::prelie::{graft_product, insertion_closed, insertion_recursive, nap_graft};
use prelie_operads::trees::{parse_unlabeled, UnlabeledTree};
use prelie_operads::{FormalSum, Result};

pub fn run() -> Result<()> {
    let dot = FormalSum::basis(UnlabeledTree::root());
    let chain = FormalSum::basis(parse_unlabeled("(())")?);

    println!("() <| () = {}", graft_product(&dot, &dot));
    println!("(()) <| () = {}", graft_product(&chain, &dot));
    println!("(()) |> () = {}", nap_graft(&chain, &dot));

    let three = vec![dot.clone(); 3];
    println!(
        "() <| ((), (), ()) = {}",
        insertion_recursive(&dot, &three)?
    );

    // The recursion and the "no argument grafted on another" sum agree.
    let t = parse_unlabeled("(())")?;
    let args = [UnlabeledTree::root(), parse_unlabeled("(())")?];
    let lifted: Vec<_> = args.iter().cloned().map(FormalSum::basis).collect();
    let recursive = insertion_recursive(&FormalSum::basis(t.clone()), &lifted)?;
    let closed = insertion_closed(&t, &args)?;
    println!("(()) <| ((), (())) = {recursive}");
    assert_eq!(recursive, closed);
    Ok(())
}

fn main() -> Result<()> {
    run()
}
