use plconvex::oracle::{dent, gen_convex_surface, is_hull_boundary};
use plconvex::{check_traditional, CheckOptions, Scalar, TraditionalComplex};
use proptest::prelude::*;

fn agree(t: &TraditionalComplex) -> Result<bool, TestCaseError> {
    let checker = check_traditional(t, &CheckOptions::default()).verdict.is_convex();
    let oracle = is_hull_boundary(t).expect("simplicial full-dimensional surface");
    prop_assert_eq!(checker, oracle);
    Ok(checker)
}

fn factors() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        Just((3, 4)),
        Just((1, 2)),
        Just((1, 10)),
        Just((1, 1000)),
        Just((-1, 2)),
        Just((-3, 1)),
        Just((5, 4)),
        Just((2, 1)),
    ]
    .prop_map(|(n, d): (i64, i64)| Scalar::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dented_surfaces_in_r3(seed in any::<u64>(), points in 5usize..30, pick in any::<usize>(), factor in factors()) {
        let t = gen_convex_surface(seed, 3, points, 50).unwrap();
        prop_assert!(agree(&t)?);
        let d = dent(&t, pick % t.vertices.len(), &factor);
        agree(&d)?;
    }

    #[test]
    fn dented_surfaces_in_r4(seed in any::<u64>(), points in 6usize..12, pick in any::<usize>(), factor in factors()) {
        let t = gen_convex_surface(seed, 4, points, 20).unwrap();
        prop_assert!(agree(&t)?);
        let d = dent(&t, pick % t.vertices.len(), &factor);
        agree(&d)?;
    }

    #[test]
    fn two_dents(seed in any::<u64>(), a in any::<usize>(), b in any::<usize>(), f in factors(), g in factors()) {
        let t = gen_convex_surface(seed, 3, 16, 30).unwrap();
        let n = t.vertices.len();
        let d = dent(&dent(&t, a % n, &f), b % n, &g);
        agree(&d)?;
    }
}
