// Reads a polygonal surface from OFF text and checks it.

use plconvex::io::{parse_off, serialize_off};
use plconvex::oracle::cube;
use plconvex::{check_traditional, CheckOptions};

const PYRAMID: &str = "OFF
5 5 0
0 0 0
2 0 0
2 2 0
0 2 0
1 1 3/2
4 3 2 1 0
3 0 1 4
3 1 2 4
3 2 3 4
3 3 0 4
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let pyramid = parse_off(PYRAMID)?;
    let outcome = check_traditional(&pyramid, &CheckOptions::default());
    println!("pyramid: {:?}", outcome.verdict);
    if !outcome.verdict.is_convex() {
        return Err("pyramid should be convex".into());
    }

    let text = serialize_off(&cube());
    let back = parse_off(&text)?;
    println!("cube as OFF:\n{text}");
    if back.facets.len() != 6 || back.vertices.len() != 8 {
        return Err("cube did not survive the round trip".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
