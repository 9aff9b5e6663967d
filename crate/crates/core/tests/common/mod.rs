//! Independent oracles for local convexity, built only on integer and
//! rational arithmetic. Nothing here calls into the predicates under test.
#![allow(dead_code)]

use num_rational::BigRational;
use num_traits::Signed;
use plconvex::{Point3, Scalar, Vector, WheelStar};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type V2 = (i64, i64);
pub type V3 = [i64; 3];

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Diamond pseudo-angle in `[0, 4)`, monotone in the true angle.
pub fn pseudo_angle((x, y): V2) -> BigRational {
    assert!(x != 0 || y != 0);
    if y >= 0 {
        if x >= 0 {
            q(y, x + y)
        } else {
            q(1, 1) + q(-x, -x + y)
        }
    } else if x < 0 {
        q(2, 1) + q(-y, -x - y)
    } else {
        q(3, 1) + q(x, x - y)
    }
}

fn ccw_distance(a: &BigRational, b: &BigRational) -> BigRational {
    let d = b - a;
    if d.is_negative() {
        d + q(4, 1)
    } else {
        d
    }
}

pub fn same_ray2(a: V2, b: V2) -> bool {
    a.0 * b.1 == a.1 * b.0 && a.0 * b.0 + a.1 * b.1 > 0
}

/// Planar star oracle: true iff each facet occupies a well-defined sector
/// and the sectors cover the circle of directions exactly once.
pub fn planar_star_is_flat(ridges: &[V2], facets: &[V2]) -> bool {
    let m = ridges.len();
    let mut arcs = Vec::with_capacity(m);
    for i in 0..m {
        let (r0, r1, f) = (ridges[i], ridges[(i + 1) % m], facets[i]);
        if same_ray2(r0, r1) || same_ray2(f, r0) || same_ray2(f, r1) {
            return false;
        }
        let (a, b, c) = (pseudo_angle(r0), pseudo_angle(r1), pseudo_angle(f));
        if ccw_distance(&a, &c) < ccw_distance(&a, &b) {
            arcs.push((a, b));
        } else {
            arcs.push((b, a));
        }
    }
    arcs.sort();
    let total: BigRational = arcs.iter().map(|(s, e)| ccw_distance(s, e)).sum();
    let chained = (0..m).all(|k| arcs[k].1 == arcs[(k + 1) % m].0);
    let distinct = arcs.windows(2).all(|w| w[0].0 != w[1].0);
    chained && distinct && total == q(4, 1)
}

fn cross(a: V3, b: V3) -> V3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: V3, b: V3) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn is_null(a: V3) -> bool {
    a == [0, 0, 0]
}

pub fn same_ray3(a: V3, b: V3) -> bool {
    is_null(cross(a, b)) && dot(a, b) > 0
}

pub fn rank3(points: &[V3]) -> usize {
    let Some(&a) = points.iter().find(|p| !is_null(**p)) else { return 0 };
    let Some(&b) = points.iter().find(|p| !is_null(cross(a, **p))) else { return 1 };
    let n = cross(a, b);
    if points.iter().any(|&p| dot(n, p) != 0) {
        3
    } else {
        2
    }
}

/// Whether `x` lies in the closed planar sector from `a` to `b` around `n`.
fn in_sector(x: V3, a: V3, b: V3, n: V3) -> bool {
    if dot(n, x) != 0 {
        return false;
    }
    if same_ray3(x, a) || same_ray3(x, b) {
        return true;
    }
    dot(cross(a, x), n) > 0 && dot(cross(x, b), n) > 0
}

/// Cone oracle: rim rays `p[i]` with a ray `f[i]` strictly inside the
/// sector from `p[i]` to `p[i + 1]`. True iff every sector is at most a
/// half turn, every sector plane supports all rim rays from the same side,
/// and no rim ray lies in a sector other than its own two.
pub fn cone_is_convex(p: &[V3], f: &[V3]) -> bool {
    let m = p.len();
    let mut side = 0i64;
    let mut normals = Vec::with_capacity(m);
    for i in 0..m {
        let (a, b) = (p[i], p[(i + 1) % m]);
        let n = cross(a, f[i]);
        assert!(!is_null(n) && dot(n, b) == 0);
        if dot(cross(f[i], b), n) <= 0 || dot(cross(a, b), n) < 0 {
            return false;
        }
        for &x in p.iter().chain(f) {
            let s = dot(n, x).signum();
            if s != 0 {
                if side != 0 && s != side {
                    return false;
                }
                side = s;
            }
        }
        normals.push(n);
    }
    for i in 0..m {
        for j in 0..m {
            if j == i || j == (i + 1) % m {
                continue;
            }
            if in_sector(p[j], p[i], p[(i + 1) % m], normals[i]) {
                return false;
            }
        }
    }
    true
}

pub fn point3(a: V3) -> Point3 {
    a.map(|x| Scalar::from_integer(x.into()))
}

pub fn vector(coords: &[i64]) -> Vector {
    Vector::from_ints(coords.iter().copied())
}

/// Applies an integer linear map given by its columns.
pub fn embed(columns: &[Vec<i64>], coords: &[i64]) -> Vector {
    let dim = columns[0].len();
    let mut out = vec![0i64; dim];
    for (c, &x) in columns.iter().zip(coords) {
        for k in 0..dim {
            out[k] += c[k] * x;
        }
    }
    vector(&out)
}

pub fn star(ridge_normals: Vec<Vector>, facet_normals: Vec<Vector>) -> WheelStar {
    let m = ridge_normals.len();
    WheelStar {
        corner: 0,
        rim_ridges: (0..m).collect(),
        rim_facets: (0..m).collect(),
        ridge_normals,
        facet_normals,
    }
}

/// Columns of a rank-2 map `Z^2 -> Z^4`.
pub const PLANE_IN_R4: [[i64; 4]; 2] = [[1, 2, 0, -1], [0, 1, 3, 1]];

pub fn planar_star(ridges: &[V2], facets: &[V2]) -> WheelStar {
    let cols: Vec<Vec<i64>> = PLANE_IN_R4.iter().map(|c| c.to_vec()).collect();
    let lift = |v: &V2| embed(&cols, &[v.0, v.1]);
    star(ridges.iter().map(lift).collect(), facets.iter().map(lift).collect())
}

fn random_v2(rng: &mut ChaCha8Rng, bound: i64) -> V2 {
    loop {
        let v = (rng.random_range(-bound..=bound), rng.random_range(-bound..=bound));
        if v != (0, 0) {
            return v;
        }
    }
}

/// A random coplanar star with `2 <= m <= 8`. About half are built as
/// exact tilings and then possibly perturbed.
pub fn random_planar_star(rng: &mut ChaCha8Rng) -> (Vec<V2>, Vec<V2>) {
    let m = rng.random_range(2..=8usize);
    if rng.random_bool(0.5) {
        let ridges: Vec<V2> = (0..m).map(|_| random_v2(rng, 6)).collect();
        let facets: Vec<V2> = (0..m).map(|_| random_v2(rng, 6)).collect();
        return (ridges, facets);
    }
    let mut dirs: Vec<V2> = Vec::new();
    while dirs.len() < m {
        let v = random_v2(rng, 6);
        if !dirs.iter().any(|&d| same_ray2(d, v)) {
            dirs.push(v);
        }
    }
    dirs.sort_by_key(|&d| pseudo_angle(d));
    let mut facets = Vec::with_capacity(m);
    for i in 0..m {
        let (a, b) = (dirs[i], dirs[(i + 1) % m]);
        let det = a.0 * b.1 - a.1 * b.0;
        let f = if det > 0 {
            (a.0 + b.0, a.1 + b.1)
        } else if det < 0 {
            (-(a.0 + b.0), -(a.1 + b.1))
        } else {
            (-a.1, a.0)
        };
        facets.push(f);
    }
    let mut ridges = dirs;
    match rng.random_range(0..6) {
        0 => {
            ridges.reverse();
            facets.reverse();
            facets.rotate_left(1);
        }
        1 => {
            let i = rng.random_range(0..m);
            facets[i] = (-facets[i].0, -facets[i].1);
        }
        2 => {
            let i = rng.random_range(0..m);
            let j = rng.random_range(0..m);
            ridges.swap(i, j);
        }
        _ => {}
    }
    if rng.random_bool(0.5) {
        let k = rng.random_range(0..m);
        ridges.rotate_left(k);
        facets.rotate_left(k);
    }
    (ridges, facets)
}
