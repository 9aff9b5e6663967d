// Pushes a vertex inward and reports the failing corner.

use std::time::Instant;

use plconvex::io::Report;
use plconvex::oracle::{dent, icosahedron, is_hull_boundary};
use plconvex::{check_traditional, CheckOptions, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let vertex = 0;
    let dented = dent(&icosahedron(), vertex, &Scalar::new(3.into(), 4.into()));
    let start = Instant::now();
    let outcome = check_traditional(&dented, &CheckOptions::default());
    let report = Report::new(&outcome, start.elapsed());
    println!("{}", report.to_text());

    let witness = outcome.verdict.witness().ok_or("expected a witness corner")?;
    let corner = &dented.corners[witness];
    let shares_facet = dented.facets.iter().any(|f| f.contains(&vertex) && corner.iter().all(|v| f.contains(v)));
    println!("witness corner {witness} shares a facet with vertex {vertex}: {shares_facet}");
    if !shares_facet || is_hull_boundary(&dented)? {
        return Err("unexpected witness".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
