// Checks a few convex solids given by vertex coordinates.

use plconvex::oracle::{cube, icosahedron, octahedron, simplex_boundary};
use plconvex::{check_traditional, CheckOptions, Verdict};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let solids = [
        ("cube", cube()),
        ("octahedron", octahedron()),
        ("icosahedron", icosahedron()),
        ("4-simplex boundary", simplex_boundary(4)),
    ];
    for (name, surface) in solids {
        let outcome = check_traditional(&surface, &CheckOptions::default());
        println!("{name}: {:?} ({} corners checked)", outcome.verdict, outcome.corners_checked);
        if outcome.verdict != Verdict::Convex {
            return Err(format!("{name} should be convex").into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
