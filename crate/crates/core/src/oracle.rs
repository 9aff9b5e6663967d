//! Brute-force ground truth and instance generators.
//!
//! Everything here works on integer points (denominators cleared) with its
//! own determinant and rank routines, and shares no predicates with the
//! checker.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact::{Scalar, Vector};
use crate::normals::TraditionalComplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("points are not full-dimensional")]
    NotFullDimensional,
    #[error("no full-dimensional sample after {0} attempts")]
    GenerationFailed(usize),
    #[error("oracle input must be simplicial")]
    NonSimplicial,
    #[error("dimension {0} is not supported")]
    UnsupportedDimension(usize),
    #[error("invalid complex: {0}")]
    Invalid(String),
}

type IPoint = Vec<BigInt>;

/// A supporting hyperplane `normal . x >= offset` with a primitive integer
/// normal, and the input points lying on it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Hyperplane {
    pub normal: Vec<BigInt>,
    pub offset: BigRational,
    pub points_on: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportSet {
    pub hyperplanes: Vec<Hyperplane>,
}

struct IntPlane {
    normal: Vec<BigInt>,
    offset: BigInt,
    on: Vec<usize>,
}

fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn det_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let k = m.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for i in 0..k {
        let Some(p) = (i..k).find(|&r| !m[r][i].is_zero()) else {
            return BigInt::zero();
        };
        if p != i {
            m.swap(p, i);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                let v = (&m[i][i] * &m[r][c] - &m[r][i] * &m[i][c]) / &prev;
                m[r][c] = v;
            }
        }
        prev = m[i][i].clone();
    }
    sign * &m[k - 1][k - 1]
}

fn rank_int(rows: &[IPoint]) -> usize {
    let mut m: Vec<IPoint> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(p, rank);
        for r in rank + 1..m.len() {
            if m[r][c].is_zero() {
                continue;
            }
            let (a, b) = (m[rank][c].clone(), m[r][c].clone());
            for k in c..cols {
                let v = &a * &m[r][k] - &b * &m[rank][k];
                m[r][k] = v;
            }
        }
        rank += 1;
    }
    rank
}

fn affine_dim(points: &[IPoint], idx: &[usize]) -> usize {
    let Some(&first) = idx.first() else { return 0 };
    let diffs: Vec<IPoint> = idx[1..]
        .iter()
        .map(|&i| points[i].iter().zip(&points[first]).map(|(a, b)| a - b).collect())
        .collect();
    rank_int(&diffs)
}

fn combinations(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn canonical(mut a: Vec<BigInt>, mut b: BigInt) -> (Vec<BigInt>, BigInt) {
    let g = a.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    for x in a.iter_mut() {
        *x /= &g;
    }
    b /= &g;
    if a.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        a.iter_mut().for_each(|x| *x = -&*x);
        b = -b;
    }
    (a, b)
}

fn hull_int(points: &[IPoint]) -> Result<Vec<IntPlane>, OracleError> {
    let d = points.first().map_or(0, Vec::len);
    let all: Vec<usize> = (0..points.len()).collect();
    if d == 0 || points.len() <= d || affine_dim(points, &all) < d {
        return Err(OracleError::NotFullDimensional);
    }
    let mut seen: HashSet<(Vec<BigInt>, BigInt)> = HashSet::new();
    let mut found: BTreeMap<(Vec<BigInt>, BigInt), ()> = BTreeMap::new();
    combinations(points.len(), d, |idx| {
        let p0 = &points[idx[0]];
        let rows: Vec<IPoint> = idx[1..]
            .iter()
            .map(|&i| points[i].iter().zip(p0).map(|(a, b)| a - b).collect())
            .collect();
        let normal: Vec<BigInt> = (0..d)
            .map(|k| {
                let minor: Vec<IPoint> = rows
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != k).map(|(_, x)| x.clone()).collect())
                    .collect();
                let m = det_int(minor);
                if k % 2 == 0 { m } else { -m }
            })
            .collect();
        if normal.iter().all(Zero::is_zero) {
            return;
        }
        let offset = dot_int(&normal, p0);
        let key = canonical(normal, offset);
        if !seen.insert(key.clone()) {
            return;
        }
        let (mut pos, mut neg) = (false, false);
        for p in points {
            match (dot_int(&key.0, p) - &key.1).sign() {
                num_bigint::Sign::Plus => pos = true,
                num_bigint::Sign::Minus => neg = true,
                num_bigint::Sign::NoSign => {}
            }
            if pos && neg {
                return;
            }
        }
        let (a, b) = key;
        let oriented = if neg { (a.iter().map(|x| -x).collect(), -b) } else { (a, b) };
        found.insert(oriented, ());
    });
    Ok(found
        .into_keys()
        .map(|(normal, offset)| {
            let on = (0..points.len()).filter(|&i| dot_int(&normal, &points[i]) == offset).collect();
            IntPlane { normal, offset, on }
        })
        .collect())
}

/// Multiplies every point by the least common denominator.
fn to_integer_points(points: &[Vector]) -> (Vec<IPoint>, BigInt) {
    let lcd = points
        .iter()
        .flat_map(|p| p.coords())
        .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints = points
        .iter()
        .map(|p| p.coords().iter().map(|x| x.numer() * (&lcd / x.denom())).collect())
        .collect();
    (ints, lcd)
}

/// All supporting hyperplanes of `conv(points)` through at least `n`
/// affinely independent points, by exhaustive enumeration.
pub fn brute_hull_supports(points: &[Vector]) -> Result<SupportSet, OracleError> {
    let (ints, lcd) = to_integer_points(points);
    let planes = hull_int(&ints)?;
    let hyperplanes = planes
        .into_iter()
        .map(|p| Hyperplane {
            normal: p.normal,
            offset: BigRational::new(p.offset, lcd.clone()),
            points_on: p.on,
        })
        .collect();
    Ok(SupportSet { hyperplanes })
}

/// `d!` times the volume of `conv(points)` for points spanning `R^d`.
fn scaled_volume(points: &[IPoint]) -> BigRational {
    let d = points[0].len();
    if d == 1 {
        let max = points.iter().map(|p| &p[0]).max().expect("nonempty");
        let min = points.iter().map(|p| &p[0]).min().expect("nonempty");
        return BigRational::from_integer(max - min);
    }
    if points.len() == d + 1 {
        return BigRational::from_integer(simplex_det(points).abs());
    }
    let planes = hull_int(points).expect("full-dimensional face");
    let count = BigInt::from(points.len());
    let center: Vec<BigRational> = (0..d)
        .map(|k| BigRational::new(points.iter().map(|p| &p[k]).sum(), count.clone()))
        .collect();
    let mut total = BigRational::zero();
    for plane in planes {
        let k = (0..d).rev().find(|&k| !plane.normal[k].is_zero()).expect("nonzero normal");
        let height: BigRational = plane
            .normal
            .iter()
            .zip(&center)
            .map(|(a, c)| c * a)
            .sum::<BigRational>()
            - BigRational::from_integer(plane.offset.clone());
        let face: Vec<IPoint> = plane.on.iter().map(|&i| drop_coord(&points[i], k)).collect();
        total += height.abs() / BigRational::from_integer(plane.normal[k].abs()) * scaled_volume(&face);
    }
    total
}

fn simplex_det(points: &[IPoint]) -> BigInt {
    let rows = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    det_int(rows)
}

fn drop_coord(p: &IPoint, k: usize) -> IPoint {
    p.iter().enumerate().filter(|&(c, _)| c != k).map(|(_, x)| x.clone()).collect()
}

/// True iff the simplicial surface `t` is exactly the boundary of the convex
/// hull of its vertices: the vertices are distinct and on the hull boundary,
/// every facet lies in a supporting hyperplane, and in each supporting
/// hyperplane the facets have the same total volume as the hull facet.
pub fn is_hull_boundary(t: &TraditionalComplex) -> Result<bool, OracleError> {
    t.validate().map_err(|e| OracleError::Invalid(e.to_string()))?;
    if !t.is_simplicial() {
        return Err(OracleError::NonSimplicial);
    }
    let (points, _) = to_integer_points(&t.vertices);
    let distinct: HashSet<&IPoint> = points.iter().collect();
    if distinct.len() != points.len() {
        return Ok(false);
    }
    let planes = match hull_int(&points) {
        Ok(p) => p,
        Err(OracleError::NotFullDimensional) => return Ok(false),
        Err(e) => return Err(e),
    };
    let mut on_boundary = vec![false; points.len()];
    for p in &planes {
        for &i in &p.on {
            on_boundary[i] = true;
        }
    }
    if on_boundary.contains(&false) {
        return Ok(false);
    }
    let mut covered = vec![BigRational::zero(); planes.len()];
    for facet in &t.facets {
        let Some(h) = planes.iter().position(|p| facet.iter().all(|v| p.on.binary_search(v).is_ok()))
        else {
            return Ok(false);
        };
        let k = last_nonzero(&planes[h].normal);
        let proj: Vec<IPoint> = facet.iter().map(|&v| drop_coord(&points[v], k)).collect();
        covered[h] += BigRational::from_integer(simplex_det(&proj).abs());
    }
    for (plane, area) in planes.iter().zip(&covered) {
        let k = last_nonzero(&plane.normal);
        let face: Vec<IPoint> = plane.on.iter().map(|&i| drop_coord(&points[i], k)).collect();
        if *area != scaled_volume(&face) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn last_nonzero(v: &[BigInt]) -> usize {
    (0..v.len()).rev().find(|&k| !v[k].is_zero()).expect("nonzero normal")
}

/// Boundary of `conv(points)` as a simplicial complex on its extreme points.
///
/// Each hull facet is triangulated by pulling its lowest-indexed vertex,
/// recursively on lower faces, so shared faces get the same triangulation.
pub fn hull_surface(points: &[Vector]) -> Result<TraditionalComplex, OracleError> {
    let n = points.first().map_or(0, Vector::dim);
    if n < 3 {
        return Err(OracleError::UnsupportedDimension(n));
    }
    let mut unique: Vec<Vector> = Vec::new();
    for p in points {
        if !unique.contains(p) {
            unique.push(p.clone());
        }
    }
    let (ints, _) = to_integer_points(&unique);
    let planes = hull_int(&ints)?;
    let extreme: Vec<usize> = (0..ints.len())
        .filter(|&i| {
            let normals: Vec<IPoint> = planes
                .iter()
                .filter(|p| p.on.binary_search(&i).is_ok())
                .map(|p| p.normal.clone())
                .collect();
            rank_int(&normals) == n
        })
        .collect();
    let vertices: Vec<Vector> = extreme.iter().map(|&i| unique[i].clone()).collect();
    let pts: Vec<IPoint> = extreme.iter().map(|&i| ints[i].clone()).collect();
    let renumber: HashMap<usize, usize> = extreme.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let faces: Vec<Vec<usize>> = planes
        .iter()
        .map(|p| p.on.iter().filter_map(|i| renumber.get(i).copied()).collect())
        .collect();

    let mut tri = Triangulator { points: &pts, planes: &faces, memo: HashMap::new() };
    let mut facets = Vec::new();
    for face in &faces {
        facets.extend(tri.pull(face, n - 1));
    }
    Ok(TraditionalComplex::from_facets(n, vertices, facets))
}

struct Triangulator<'a> {
    points: &'a [IPoint],
    planes: &'a [Vec<usize>],
    memo: HashMap<Vec<usize>, Vec<Vec<usize>>>,
}

impl Triangulator<'_> {
    fn pull(&mut self, face: &[usize], dim: usize) -> Vec<Vec<usize>> {
        if face.len() == dim + 1 {
            return vec![face.to_vec()];
        }
        if let Some(done) = self.memo.get(face) {
            return done.clone();
        }
        let apex = face[0];
        let mut subfaces: Vec<Vec<usize>> = Vec::new();
        for plane in self.planes {
            let sub: Vec<usize> = face.iter().copied().filter(|v| plane.binary_search(v).is_ok()).collect();
            if sub.len() >= dim && !sub.contains(&apex) && !subfaces.contains(&sub) && affine_dim(self.points, &sub) == dim - 1 {
                subfaces.push(sub);
            }
        }
        let mut out = Vec::new();
        for sub in subfaces {
            for simplex in self.pull(&sub, dim - 1) {
                let mut cell = vec![apex];
                cell.extend(simplex);
                out.push(cell);
            }
        }
        self.memo.insert(face.to_vec(), out.clone());
        out
    }
}

/// A random simplicial convex surface, reproducible from `seed`.
///
/// Samples `num_points` integer points in `[-coord_bound, coord_bound]^n`
/// with ChaCha8 seeded from `seed`, resampling until they span `R^n`.
pub fn gen_convex_surface(
    seed: u64,
    n: usize,
    num_points: usize,
    coord_bound: i64,
) -> Result<TraditionalComplex, OracleError> {
    const ATTEMPTS: usize = 64;
    if n < 3 {
        return Err(OracleError::UnsupportedDimension(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = coord_bound.abs();
    for _ in 0..ATTEMPTS {
        let points: Vec<Vector> = (0..num_points)
            .map(|_| Vector::from_ints((0..n).map(|_| rng.random_range(-bound..=bound))))
            .collect();
        match hull_surface(&points) {
            Ok(t) => return Ok(t),
            Err(OracleError::NotFullDimensional) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(OracleError::GenerationFailed(ATTEMPTS))
}

/// Moves `vertex` toward the centroid of all vertices by `factor`.
pub fn dent(t: &TraditionalComplex, vertex: usize, factor: &Scalar) -> TraditionalComplex {
    let count = Scalar::from_integer(BigInt::from(t.vertices.len()));
    let mut sum = Vector::zeros(t.dim);
    for v in &t.vertices {
        sum = &sum + v;
    }
    let centroid = sum.scale(&(Scalar::one() / count));
    let v = &t.vertices[vertex];
    let moved = v.add_scaled(factor, &(&centroid - v));
    let mut out = t.clone();
    out.vertices[vertex] = moved;
    out
}

fn ints3(rows: &[[i64; 3]]) -> Vec<Vector> {
    rows.iter().map(|r| Vector::from_ints(r.iter().copied())).collect()
}

/// The cube `[-1, 1]^3` with six square facets.
pub fn cube() -> TraditionalComplex {
    let vertices = ints3(&[
        [-1, -1, -1],
        [1, -1, -1],
        [1, 1, -1],
        [-1, 1, -1],
        [-1, -1, 1],
        [1, -1, 1],
        [1, 1, 1],
        [-1, 1, 1],
    ]);
    let facets = vec![
        vec![0, 3, 2, 1],
        vec![4, 5, 6, 7],
        vec![0, 1, 5, 4],
        vec![2, 3, 7, 6],
        vec![1, 2, 6, 5],
        vec![0, 4, 7, 3],
    ];
    TraditionalComplex::from_facets(3, vertices, facets)
}

/// The cube with every square split into four triangles at its center.
/// Center vertices are `8..14`, one per facet of [`cube`] in order.
pub fn subdivided_cube() -> TraditionalComplex {
    let base = cube();
    let mut vertices = base.vertices.clone();
    let mut facets = Vec::new();
    for face in &base.facets {
        let mut sum = Vector::zeros(3);
        for &v in face {
            sum = &sum + &base.vertices[v];
        }
        let center = sum.scale(&Scalar::new(BigInt::one(), BigInt::from(face.len())));
        let c = vertices.len();
        vertices.push(center);
        for i in 0..face.len() {
            facets.push(vec![face[i], face[(i + 1) % face.len()], c]);
        }
    }
    TraditionalComplex::from_facets(3, vertices, facets)
}

pub fn octahedron() -> TraditionalComplex {
    let vertices = ints3(&[[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]]);
    let mut facets = Vec::new();
    for z in [4, 5] {
        for (x, y) in [(0, 2), (2, 1), (1, 3), (3, 0)] {
            facets.push(vec![x, y, z]);
        }
    }
    TraditionalComplex::from_facets(3, vertices, facets)
}

/// Icosahedron with the golden ratio replaced by `8/5`.
pub fn icosahedron() -> TraditionalComplex {
    let mut points = Vec::new();
    for s in [-1i64, 1] {
        for t in [-8i64, 8] {
            points.push(Vector::from_ints([0, 5 * s, t]));
            points.push(Vector::from_ints([5 * s, t, 0]));
            points.push(Vector::from_ints([t, 0, 5 * s]));
        }
    }
    hull_surface(&points).expect("icosahedron")
}

/// Boundary of the standard `n`-simplex: the origin and the unit vectors.
pub fn simplex_boundary(n: usize) -> TraditionalComplex {
    let mut vertices = vec![Vector::zeros(n)];
    for i in 0..n {
        vertices.push(Vector::from_ints((0..n).map(|j| i64::from(i == j))));
    }
    let facets = (0..=n).map(|skip| (0..=n).filter(|&v| v != skip).collect()).collect();
    TraditionalComplex::from_facets(n, vertices, facets)
}

/// The seven-vertex torus: 14 triangles using all 21 vertex pairs as edges.
/// Vertices sit on the moment curve.
pub fn seven_vertex_torus() -> TraditionalComplex {
    let vertices = (0..7i64).map(|t| Vector::from_ints([t, t * t, t * t * t])).collect();
    let mut facets = Vec::new();
    for i in 0..7 {
        facets.push(vec![i, (i + 1) % 7, (i + 3) % 7]);
        facets.push(vec![i, (i + 2) % 7, (i + 3) % 7]);
    }
    TraditionalComplex::from_facets(3, vertices, facets)
}

/// Convex polygon whose edges are the primitive integer vectors of max-norm
/// at most `radius`, sorted by angle.
fn lattice_polygon(radius: i64) -> Vec<(i64, i64)> {
    let mut dirs: Vec<(i64, i64)> = Vec::new();
    for a in -radius..=radius {
        for b in -radius..=radius {
            if (a, b) != (0, 0) && a.gcd(&b) == 1 {
                dirs.push((a, b));
            }
        }
    }
    let half = |(a, b): (i64, i64)| if b > 0 || (b == 0 && a > 0) { 0 } else { 1 };
    dirs.sort_by(|&p, &q| half(p).cmp(&half(q)).then_with(|| (q.0 * p.1).cmp(&(p.0 * q.1))));
    let mut pos = (0, 0);
    dirs.iter()
        .map(|&(a, b)| {
            let here = pos;
            pos = (pos.0 + a, pos.1 + b);
            here
        })
        .collect()
}

/// A convex polytope in `R^3` stacked from `layers` similar copies of a
/// lattice polygon at heights `1..=layers` with strictly concave scale
/// factors. Side facets are trapezoids and the two ends are polygons.
/// Returns the surface with `layers * k` vertices, `k` the polygon size.
pub fn stacked_frustum(radius: i64, layers: usize) -> TraditionalComplex {
    let poly = lattice_polygon(radius);
    let k = poly.len();
    let l = layers as i64;
    let mut vertices = Vec::with_capacity(k * layers);
    for i in 1..=l {
        let r = i * (l + 1 - i);
        for &(x, y) in &poly {
            vertices.push(Vector::from_ints([r * x, r * y, i]));
        }
    }
    let id = |layer: usize, j: usize| layer * k + j % k;
    let mut facets = Vec::with_capacity(k * layers + 2);
    facets.push((0..k).rev().map(|j| id(0, j)).collect());
    for layer in 0..layers - 1 {
        for j in 0..k {
            facets.push(vec![id(layer, j), id(layer, j + 1), id(layer + 1, j + 1), id(layer + 1, j)]);
        }
    }
    facets.push((0..k).map(|j| id(layers - 1, j)).collect());
    TraditionalComplex::from_facets(3, vertices, facets)
}

/// Number of vertices of one ring of [`stacked_frustum`].
pub fn frustum_ring_size(radius: i64) -> usize {
    lattice_polygon(radius).len()
}
