// Status of every corner, including flat corners inside subdivided faces.

use plconvex::checker::prepare_traditional;
use plconvex::oracle::subdivided_cube;
use plconvex::{corner_report, CheckOptions, CornerStatus, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let flat = subdivided_cube();
    let prepared = prepare_traditional(&flat)?;
    for (corner, status) in corner_report(&prepared, &CheckOptions::default()) {
        println!("corner {corner}: {status:?}");
    }

    // push the centroid of one face into the cube
    let mut pushed = flat.clone();
    pushed.vertices[8] = pushed.vertices[8].scale(&Scalar::new(1.into(), 2.into()));
    let prepared = prepare_traditional(&pushed)?;
    let failing: Vec<(usize, CornerStatus)> = corner_report(&prepared, &CheckOptions::default())
        .into_iter()
        .filter(|(_, s)| !s.passes())
        .collect();
    println!("after pushing vertex 8 inward: {failing:?}");
    if failing.is_empty() {
        return Err("expected failing corners".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
