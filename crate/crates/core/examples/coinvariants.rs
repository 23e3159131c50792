// Passing from labeled trees to their shapes. Grafting of shapes is
// recovered from the binary operation `1(2)` of the pre-Lie operad, and the
// induced product does not depend on the labeled representatives chosen.

use prelie_operads::instances::RootedTreeOperad;
use prelie_operads::operad::{
    all_lifts, coinvariant_graft, coinvariant_product, coinvariant_reduce, prelie_product,
};
use prelie_operads::prelie::graft_product;
use prelie_operads::trees::parse_unlabeled;
use prelie_operads::{FormalSum, Result};

pub fn run() -> Result<()> {
    let prelie = RootedTreeOperad::prelie();
    let dot = FormalSum::basis(parse_unlabeled("()")?);
    let chain = parse_unlabeled("(())")?;
    let cherry = parse_unlabeled("(()())")?;

    let x = FormalSum::basis(chain.clone());
    println!(
        "class graft  {chain} . () = {}",
        coinvariant_graft(&prelie, &x, &dot)?
    );
    println!("free graft   {chain} <| () = {}", graft_product(&x, &dot));

    let expected = coinvariant_product(&prelie, &FormalSum::basis(cherry.clone()), &x)?;
    println!("[{cherry}] <| [{chain}] = {expected}");
    for a in all_lifts(&cherry) {
        for b in all_lifts(&chain) {
            let value = prelie_product(
                &prelie,
                &FormalSum::basis(a.clone()),
                &FormalSum::basis(b.clone()),
            )?;
            let reduced = coinvariant_reduce(&value);
            println!("  {a} <| {b} reduces to {reduced}");
            assert_eq!(reduced, expected);
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
