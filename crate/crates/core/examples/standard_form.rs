// Converts vertex coordinates to standard form, writes it as PLC text and
// checks the parsed copy.

use plconvex::io::{parse_plc, serialize_plc_standard, PlcDocument};
use plconvex::oracle::simplex_boundary;
use plconvex::{check_convexity, face_counts, to_standard, CheckOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let surface = simplex_boundary(4);
    let standard = to_standard(&surface)?;
    let counts = face_counts(&standard);
    println!(
        "corners {}, ridges {}, facets {}, corner-ridge normals {}",
        counts.corners, counts.ridges, counts.facets, counts.corner_ridge
    );

    let text = serialize_plc_standard(&standard);
    let PlcDocument::Standard(parsed) = parse_plc(&text)? else {
        return Err("expected a standard-form document".into());
    };
    if parsed != standard {
        return Err("standard form changed in the round trip".into());
    }
    let outcome = check_convexity(parsed, &CheckOptions::default());
    println!("{:?}", outcome.verdict);
    if !outcome.verdict.is_convex() {
        return Err("the simplex boundary should be convex".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
