// The exact predicates behind the local test.

use plconvex::exact::{orient2, sign_det3};
use plconvex::{check_cone_convex, is_folded, ConeRealization3D, PlaneFrame, Point3, Scalar, Sign, Vector};

fn point(c: [i64; 3]) -> Point3 {
    c.map(|x| Scalar::from_integer(x.into()))
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let s = sign_det3(&point([1, 0, 0]), &point([0, 1, 0]), &point([0, 0, 1]));
    println!("sgn det(e1, e2, e3) = {s:?}");

    let frame = PlaneFrame::new(Vector::from_ints([1, 0, 0]), Vector::from_ints([0, 1, 0]))?;
    let turn = orient2(&frame, &Vector::from_ints([1, 1, 0]), &Vector::from_ints([-1, 1, 0]))?;
    println!("orientation of (1,1), (-1,1) in the xy-plane = {turn:?}");

    let v = |x, y| Vector::from_ints([x, y, 0]);
    let folded = is_folded(&v(1, 0), &v(1, 1), &v(0, 1), &v(1, 2), &v(1, 0), &frame)?;
    let open = is_folded(&v(1, 0), &v(1, 1), &v(0, 1), &v(-1, 1), &v(-1, 0), &frame)?;
    println!("overlapping angles folded: {folded}, adjacent angles folded: {open}");

    let square = ConeRealization3D {
        ridge_points: vec![point([1, 1, 1]), point([-1, 1, 1]), point([-1, -1, 1]), point([1, -1, 1])],
        facet_points: None,
    };
    let dart = ConeRealization3D {
        ridge_points: vec![point([0, 2, 1]), point([-2, -2, 1]), point([0, -1, 1]), point([2, -2, 1])],
        facet_points: None,
    };
    let (a, b) = (check_cone_convex(&square)?, check_cone_convex(&dart)?);
    println!("square cone convex: {a}, dart cone convex: {b}");
    if s != Sign::Positive || turn != Sign::Positive || !folded || open || !a || b {
        return Err("unexpected predicate value".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
