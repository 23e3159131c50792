// Lists the small members of each tree family.

use prelie_operads::trees::{Generator, LabeledTree, PlanarTerm, UnlabeledTree};
use prelie_operads::Result;

pub fn run() -> Result<()> {
    for n in 1..=5 {
        let trees = UnlabeledTree::enumerate(n)?;
        let shown: Vec<String> = trees.iter().map(ToString::to_string).collect();
        println!(
            "rooted trees with {n} vertices ({}): {}",
            trees.len(),
            shown.join(" ")
        );
    }

    let labeled = LabeledTree::enumerate(3)?;
    println!("labeled trees on 1..3: {}", labeled.len());
    for t in &labeled {
        println!("  {t}  shape {}", t.forget_labels());
    }

    let g = Generator::new("g", 2);
    for leaves in 1..=4 {
        let terms = PlanarTerm::enumerate_binary(leaves, &g)?;
        let shown: Vec<String> = terms.iter().map(ToString::to_string).collect();
        println!("binary trees with {leaves} leaves: {}", shown.join(", "));
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
