mod common;

use common::*;
use plconvex::{check_cone_convex, reduce_to_3d, ConeRealization3D, LocalVerdict};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const R3_IN_R5: [[i64; 5]; 3] = [[1, 0, 2, 1, 0], [0, 1, 1, 0, 2], [1, 1, 0, 3, 1]];

fn hull2(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort();
    pts.dedup();
    let turn = |o: (i64, i64), a: (i64, i64), b: (i64, i64)| (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0);
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn facet_for(rng: &mut ChaCha8Rng, a: V3, b: V3) -> V3 {
    let s = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
    if is_null(s) || same_ray3(s, a) || same_ray3(s, b) {
        loop {
            let f = [rng.random_range(-4..=4), rng.random_range(-4..=4), rng.random_range(-4..=4)];
            let n = [a[1] * f[2] - a[2] * f[1], a[2] * f[0] - a[0] * f[2], a[0] * f[1] - a[1] * f[0]];
            if !is_null(n) {
                return f;
            }
        }
    }
    if rng.random_ratio(1, 8) {
        [-s[0], -s[1], -s[2]]
    } else {
        s
    }
}

/// A random cone rim; about half start from a convex polygon.
fn random_cone(rng: &mut ChaCha8Rng) -> Option<(Vec<V3>, Vec<V3>)> {
    let mut p: Vec<V3> = if rng.random_bool(0.5) {
        let k = rng.random_range(3..=9);
        let pts = (0..k).map(|_| (rng.random_range(-6..=6), rng.random_range(-6..=6))).collect();
        let poly = hull2(pts);
        let mut rim: Vec<V3> = Vec::new();
        for i in 0..poly.len() {
            rim.push([poly[i].0, poly[i].1, 1]);
            if rng.random_ratio(1, 4) {
                let next = poly[(i + 1) % poly.len()];
                rim.push([poly[i].0 + next.0, poly[i].1 + next.1, 2]);
            }
        }
        let m: [[i64; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.random_range(-2..=2)));
        rim.iter().map(|v| std::array::from_fn(|r| (0..3).map(|c| m[r][c] * v[c]).sum())).collect()
    } else {
        let m = rng.random_range(3..=7);
        (0..m).map(|_| std::array::from_fn(|_| rng.random_range(-4..=4))).collect()
    };
    match rng.random_range(0..5) {
        0 => p.reverse(),
        1 => {
            let i = rng.random_range(0..p.len());
            p[i][rng.random_range(0..3)] += rng.random_range(-2..=2);
        }
        _ => {}
    }
    let m = p.len();
    if m < 3 || p.iter().any(|&v| is_null(v)) || (0..m).any(|i| same_ray3(p[i], p[(i + 1) % m])) {
        return None;
    }
    let f: Vec<V3> = (0..m).map(|i| facet_for(rng, p[i], p[(i + 1) % m])).collect();
    let all: Vec<V3> = p.iter().chain(&f).copied().collect();
    (rank3(&all) == 3).then_some((p, f))
}

fn cone_verdict(p: &[V3], f: &[V3]) -> bool {
    let cone = ConeRealization3D {
        ridge_points: p.iter().map(|&v| point3(v)).collect(),
        facet_points: Some(f.iter().map(|&v| point3(v)).collect()),
    };
    check_cone_convex(&cone).expect("rank three cone")
}

fn star_passes(star: &plconvex::WheelStar) -> bool {
    match reduce_to_3d(star) {
        LocalVerdict::FlatPass => true,
        LocalVerdict::Inconsistent => false,
        LocalVerdict::Cone(c) => check_cone_convex(&c) == Ok(true),
    }
}

#[test]
fn cone_generator_covers_both_outcomes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..2000 {
        if let Some((p, f)) = random_cone(&mut rng) {
            if cone_is_convex(&p, &f) {
                yes += 1;
            } else {
                no += 1;
            }
        }
    }
    assert!(yes > 200 && no > 200, "{yes} {no}");
}

#[test]
fn planar_generator_covers_both_outcomes() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let flat = (0..1000).filter(|_| {
        let (r, f) = random_planar_star(&mut rng);
        planar_star_is_flat(&r, &f)
    });
    let count = flat.count();
    assert!(count > 100 && count < 900, "{count}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn cone_check_matches_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some((p, f)) = random_cone(&mut rng) {
            prop_assert_eq!(cone_verdict(&p, &f), cone_is_convex(&p, &f), "{:?} {:?}", p, f);
        }
    }

    #[test]
    fn three_dimensional_star_matches_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some((p, f)) = random_cone(&mut rng) {
            let expected = cone_is_convex(&p, &f);
            let flat = star(p.iter().map(|v| vector(v)).collect(), f.iter().map(|v| vector(v)).collect());
            prop_assert_eq!(star_passes(&flat), expected, "{:?} {:?}", p, f);
            let cols: Vec<Vec<i64>> = R3_IN_R5.iter().map(|c| c.to_vec()).collect();
            let lifted = star(p.iter().map(|v| embed(&cols, v)).collect(), f.iter().map(|v| embed(&cols, v)).collect());
            prop_assert_eq!(star_passes(&lifted), expected);
        }
    }

    #[test]
    fn planar_star_matches_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (r, f) = random_planar_star(&mut rng);
        let got = reduce_to_3d(&planar_star(&r, &f));
        let expected = if planar_star_is_flat(&r, &f) { LocalVerdict::FlatPass } else { LocalVerdict::Inconsistent };
        prop_assert_eq!(got, expected, "{:?} {:?}", r, f);
    }
}
