// Random convex surfaces from the brute-force hull, cross-checked against
// the local test.

use plconvex::oracle::{brute_hull_supports, gen_convex_surface, is_hull_boundary};
use plconvex::{check_traditional, CheckOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (seed, dim, points) in [(1, 3, 20), (2, 4, 10), (3, 5, 9)] {
        let surface = gen_convex_surface(seed, dim, points, 100)?;
        let supports = brute_hull_supports(&surface.vertices)?;
        let checker = check_traditional(&surface, &CheckOptions::default()).verdict.is_convex();
        let oracle = is_hull_boundary(&surface)?;
        println!(
            "R^{dim} seed {seed}: {} vertices, {} facets, {} supporting hyperplanes, checker {checker}, oracle {oracle}",
            surface.vertices.len(),
            surface.facets.len(),
            supports.hyperplanes.len()
        );
        if checker != oracle {
            return Err(format!("disagreement on seed {seed}").into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
