// The expression language used by the `eval` command.

use prelie_operads::expr::eval_text;
use prelie_operads::Result;

pub fn run() -> Result<()> {
    let cases = [
        ("nsassoc", "id <| (id, id)"),
        ("nsassoc", "m2 <| m2 - 2*m3"),
        ("mag2", "g <| id"),
        ("mag2", "g o_1 g"),
        ("mag2", "g <| (g, g, g)"),
        ("prelie", "1(2) <| 1(2)"),
        ("nap", "1(2) <| 1(2)"),
        ("freeprelie", "tree() <| (tree(), tree())"),
        ("freeprelie", "tree(()) |> tree()"),
        ("free:g:2,h:3", "1/2*h <| g"),
    ];
    for (instance, text) in cases {
        let value = eval_text(&instance.parse()?, text)?;
        println!("{instance:>12}: {text} = {value}");
    }

    match eval_text(&"mag2".parse()?, "g <| (g, ") {
        Err(e) => println!("error: {e}"),
        Ok(v) => println!("unexpected value {v}"),
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
