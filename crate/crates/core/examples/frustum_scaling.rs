// Times the full check on stacked frustums of growing size.

use std::time::Instant;

use plconvex::oracle::{frustum_ring_size, stacked_frustum};
use plconvex::{check_traditional, CheckOptions};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ring = frustum_ring_size(3);
    let options = CheckOptions { parallel: false, reverse_rims: false };
    for target in [500, 1_000, 2_000] {
        let surface = stacked_frustum(3, target / ring);
        let start = Instant::now();
        let outcome = check_traditional(&surface, &options);
        let elapsed = start.elapsed();
        println!("f_0 {:>6}: {:?} in {elapsed:.1?}", surface.vertices.len(), outcome.verdict);
        if !outcome.verdict.is_convex() {
            return Err("frustums are convex".into());
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
