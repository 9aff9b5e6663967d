//! Conversion from vertex coordinates to standard form.
//!
//! Two input modes are supported: simplicial complexes in any dimension and,
//! in `R^3`, arbitrary simple planar polygons as facets. Normals are never
//! normalized; only their directions matter downstream.

use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::complex::{CellKind, NormalRecord, StandardComplex};
use num_bigint::BigInt;
use num_integer::Integer;

use crate::exact::{
    common_scaled3, icross3, idot, idot3, int_det, primitive_ints, rank_le3, IntPoint3, Scalar, Vector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("ambient dimension {0} is below 3")]
    DimensionTooSmall(usize),
    #[error("vertex {vertex} has {found} coordinates, expected {expected}")]
    VertexDimension { vertex: usize, found: usize, expected: usize },
    #[error("{kind} {index} references missing vertex {vertex}")]
    VertexOutOfRange { kind: CellKind, index: usize, vertex: usize },
    #[error("{kind} {index} has {found} vertices, expected {expected}")]
    CellSize { kind: CellKind, index: usize, found: usize, expected: usize },
    #[error("{kind} {index} repeats a vertex")]
    RepeatedVertex { kind: CellKind, index: usize },
    #[error("duplicate {kind} {index}")]
    DuplicateCell { kind: CellKind, index: usize },
    #[error("{kind} {index} is not a face of any facet")]
    NotAFace { kind: CellKind, index: usize },
    #[error("{kind} with vertices {vertices:?} is missing from the cell list")]
    MissingCell { kind: CellKind, vertices: Vec<usize> },
    #[error("facet {facet} is not planar")]
    NonPlanar { facet: usize },
    #[error("{kind} {index} is degenerate (vertices are affinely dependent)")]
    DegenerateCell { kind: CellKind, index: usize },
    #[error("facet {facet} has a zero angle at vertex {vertex}")]
    DegenerateVertex { facet: usize, vertex: usize },
}

/// Geometric failures of the individual normal constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum NormalError {
    #[error("cell is degenerate (affinely dependent vertices)")]
    DegenerateCell,
    #[error("polygon has a zero angle at the vertex")]
    DegenerateVertex,
    #[error("polygon is not planar")]
    NotPlanar,
    #[error("vertex does not belong to the polygon")]
    NotInPolygon,
}

/// Face poset with vertex coordinates.
///
/// Cells are vertex lists. For `dim >= 4` every cell is a simplex; for
/// `dim == 3` corners are single vertices, ridges are edges and facets are
/// planar polygons listed in cyclic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraditionalComplex {
    pub dim: usize,
    pub vertices: Vec<Vector>,
    pub corners: Vec<Vec<usize>>,
    pub ridges: Vec<Vec<usize>>,
    pub facets: Vec<Vec<usize>>,
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Vertex lists of the ridges of a facet, sorted, in facet order.
fn facet_ridge_keys(dim: usize, facet: &[usize]) -> Vec<Vec<usize>> {
    if dim == 3 {
        let k = facet.len();
        (0..k).map(|i| sorted(vec![facet[i], facet[(i + 1) % k]])).collect()
    } else {
        drop_one(facet)
    }
}

/// Vertex lists of the corners of a ridge (or of a facet when `skip == 2`).
fn corner_keys_of(dim: usize, cell: &[usize], skip: usize) -> Vec<Vec<usize>> {
    if dim == 3 {
        cell.iter().map(|&v| vec![v]).collect()
    } else if skip == 1 {
        drop_one(cell)
    } else {
        let mut out = Vec::new();
        for i in 0..cell.len() {
            for j in i + 1..cell.len() {
                let key: Vec<usize> = cell
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != i && k != j)
                    .map(|(_, &v)| v)
                    .collect();
                out.push(sorted(key));
            }
        }
        out
    }
}

fn drop_one(cell: &[usize]) -> Vec<Vec<usize>> {
    (0..cell.len())
        .map(|i| {
            let key: Vec<usize> =
                cell.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v).collect();
            sorted(key)
        })
        .collect()
}

impl TraditionalComplex {
    /// Builds the complex from facets, deriving corners and ridges in order
    /// of first appearance. In `R^3` every vertex becomes a corner.
    pub fn from_facets(dim: usize, vertices: Vec<Vector>, facets: Vec<Vec<usize>>) -> Self {
        let mut ridges = Vec::new();
        let mut seen = HashSet::default();
        for f in &facets {
            for key in facet_ridge_keys(dim, f) {
                if seen.insert(key.clone()) {
                    ridges.push(key);
                }
            }
        }
        let corners = if dim == 3 {
            (0..vertices.len()).map(|v| vec![v]).collect()
        } else {
            let mut corners = Vec::new();
            let mut seen = HashSet::default();
            for r in &ridges {
                for key in corner_keys_of(dim, r, 1) {
                    if seen.insert(key.clone()) {
                        corners.push(key);
                    }
                }
            }
            corners
        };
        let facets = if dim == 3 { facets } else { facets.into_iter().map(sorted).collect() };
        TraditionalComplex { dim, vertices, corners, ridges, facets }
    }

    pub fn is_simplicial(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.dim)
    }

    /// Checks cell sizes, vertex references, that the listed corners and
    /// ridges are exactly the faces of the facets, and exact flatness of
    /// every facet.
    pub fn validate(&self) -> Result<(), DerivationError> {
        self.validate_cells()?;
        self.facet_geometry().map(|_| ())
    }

    fn validate_cells(&self) -> Result<(), DerivationError> {
        let n = self.dim;
        if n < 3 {
            return Err(DerivationError::DimensionTooSmall(n));
        }
        for (vertex, v) in self.vertices.iter().enumerate() {
            if v.dim() != n {
                return Err(DerivationError::VertexDimension { vertex, found: v.dim(), expected: n });
            }
        }
        let groups = [
            (CellKind::Corner, &self.corners, n - 2),
            (CellKind::Ridge, &self.ridges, n - 1),
            (CellKind::Facet, &self.facets, n),
        ];
        for (kind, cells, expected) in groups {
            for (index, cell) in cells.iter().enumerate() {
                let size_ok = match (n, kind) {
                    (3, CellKind::Corner) => cell.len() == 1,
                    (3, CellKind::Ridge) => cell.len() == 2,
                    (3, CellKind::Facet) => cell.len() >= 3,
                    _ => cell.len() == expected,
                };
                if !size_ok {
                    return Err(DerivationError::CellSize { kind, index, found: cell.len(), expected });
                }
                if let Some(&vertex) = cell.iter().find(|&&v| v >= self.vertices.len()) {
                    return Err(DerivationError::VertexOutOfRange { kind, index, vertex });
                }
                if sorted(cell.clone()).windows(2).any(|w| w[0] == w[1]) {
                    return Err(DerivationError::RepeatedVertex { kind, index });
                }
            }
        }
        let mut facet_keys = HashSet::default();
        for (index, f) in self.facets.iter().enumerate() {
            if !facet_keys.insert(sorted(f.clone())) {
                return Err(DerivationError::DuplicateCell { kind: CellKind::Facet, index });
            }
        }

        let mut derived_ridges = HashSet::default();
        for f in &self.facets {
            derived_ridges.extend(facet_ridge_keys(n, f));
        }
        let ridge_keys = self.check_listed(CellKind::Ridge, &self.ridges, &derived_ridges)?;
        let mut derived_corners = HashSet::default();
        if n == 3 {
            derived_corners.extend((0..self.vertices.len()).map(|v| vec![v]));
        } else {
            for r in &ridge_keys {
                derived_corners.extend(corner_keys_of(n, r, 1));
            }
        }
        self.check_listed(CellKind::Corner, &self.corners, &derived_corners)?;
        Ok(())
    }

    /// Integer points and Newell normal of every facet when `dim == 3`;
    /// otherwise checks that each facet spans a hyperplane.
    fn facet_geometry(&self) -> Result<Vec<(Vec<IntPoint3>, IntPoint3)>, DerivationError> {
        let n = self.dim;
        let mut polygons = Vec::new();
        for (index, f) in self.facets.iter().enumerate() {
            if n == 3 {
                let pts = polygon_points(f, &self.vertices).expect("three coordinates");
                let normal = polygon_normal(&pts).map_err(|e| match e {
                    NormalError::NotPlanar => DerivationError::NonPlanar { facet: index },
                    _ => DerivationError::DegenerateCell { kind: CellKind::Facet, index },
                })?;
                polygons.push((pts, normal));
            } else {
                let base = &self.vertices[f[0]];
                let diffs: Vec<Vector> = f[1..].iter().map(|&v| &self.vertices[v] - base).collect();
                let refs: Vec<&Vector> = diffs.iter().collect();
                if affine_rank(&refs) != n - 1 {
                    return Err(DerivationError::DegenerateCell { kind: CellKind::Facet, index });
                }
            }
        }
        Ok(polygons)
    }

    fn check_listed(
        &self,
        kind: CellKind,
        listed: &[Vec<usize>],
        derived: &HashSet<Vec<usize>>,
    ) -> Result<Vec<Vec<usize>>, DerivationError> {
        let mut keys = Vec::with_capacity(listed.len());
        let mut seen = HashSet::with_capacity_and_hasher(listed.len(), Default::default());
        for (index, cell) in listed.iter().enumerate() {
            let key = sorted(cell.clone());
            if !derived.contains(&key) {
                return Err(DerivationError::NotAFace { kind, index });
            }
            if !seen.insert(key.clone()) {
                return Err(DerivationError::DuplicateCell { kind, index });
            }
            keys.push(key);
        }
        if seen.len() != derived.len() {
            let mut missing: Vec<&Vec<usize>> = derived.difference(&seen).collect();
            missing.sort();
            return Err(DerivationError::MissingCell { kind, vertices: missing[0].clone() });
        }
        Ok(keys)
    }

    /// Number of edges when `dim == 3`, ridges in general.
    pub fn num_ridges(&self) -> usize {
        self.ridges.len()
    }
}

/// Rank of a set of difference vectors (full rank check, not capped at 3).
fn affine_rank(diffs: &[&Vector]) -> usize {
    let mut ech = crate::exact::Echelon::new();
    diffs.iter().filter(|d| ech.insert(d.coords())).count()
}

/// `point - anchor` minus its orthogonal projection onto `span(directions)`.
/// Returns `None` when `directions` are dependent or the component vanishes.
fn orthogonal_component(directions: &[Vector], anchor: &Vector, point: &Vector) -> Option<Vector> {
    let x = point - anchor;
    let k = directions.len();
    if k == 0 {
        return (!x.is_zero()).then_some(x);
    }
    // Cramer on the Gram system G c = D^T x in integers; the span does not
    // depend on how the directions are scaled, `x` is scaled by `lcm`.
    let lcm = x.coords().iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let x: Vec<BigInt> = x.coords().iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let d: Vec<Vec<BigInt>> = directions.iter().map(|v| primitive_ints(v.coords())).collect();
    let gram: Vec<Vec<BigInt>> = d.iter().map(|a| d.iter().map(|b| idot(a, b)).collect()).collect();
    let rhs: Vec<BigInt> = d.iter().map(|a| idot(a, &x)).collect();
    let det = int_det(gram.clone());
    if det.is_zero() {
        return None;
    }
    let mut w: Vec<BigInt> = x.iter().map(|c| c * &det).collect();
    for i in 0..k {
        let mut gi = gram.clone();
        for (row, b) in gi.iter_mut().zip(&rhs) {
            row[i] = b.clone();
        }
        let ci = int_det(gi);
        for (wc, dc) in w.iter_mut().zip(&d[i]) {
            *wc -= &ci * dc;
        }
    }
    let scale = det * lcm;
    let w = Vector::new(w.into_iter().map(|c| Scalar::new(c, scale.clone())).collect());
    (!w.is_zero()).then_some(w)
}

fn corner_directions(corner: &[usize], coords: &[Vector]) -> Vec<Vector> {
    let c0 = &coords[corner[0]];
    corner[1..].iter().map(|&v| &coords[v] - c0).collect()
}

/// Euclidean inner normal of the simplex `ridge` at its face `corner`:
/// the component of `a - c0` orthogonal to the corner's direction space,
/// where `a` is the vertex of the ridge outside the corner.
pub fn ridge_normal_simplicial(
    corner: &[usize],
    ridge: &[usize],
    coords: &[Vector],
) -> Result<Vector, NormalError> {
    let apex: Vec<usize> = ridge.iter().copied().filter(|v| !corner.contains(v)).collect();
    let [a] = apex.as_slice() else {
        return Err(NormalError::DegenerateCell);
    };
    let dirs = corner_directions(corner, coords);
    orthogonal_component(&dirs, &coords[corner[0]], &coords[*a]).ok_or(NormalError::DegenerateCell)
}

/// Euclidean inner normal of the simplex `facet` at its face `corner`: the
/// sum of the orthogonal components of the two vertices outside the corner.
pub fn facet_normal_simplicial(
    corner: &[usize],
    facet: &[usize],
    coords: &[Vector],
) -> Result<Vector, NormalError> {
    let extra: Vec<usize> = facet.iter().copied().filter(|v| !corner.contains(v)).collect();
    let [a, b] = extra.as_slice() else {
        return Err(NormalError::DegenerateCell);
    };
    let dirs = corner_directions(corner, coords);
    let c0 = &coords[corner[0]];
    let wa = orthogonal_component(&dirs, c0, &coords[*a]).ok_or(NormalError::DegenerateCell)?;
    let wb = orthogonal_component(&dirs, c0, &coords[*b]).ok_or(NormalError::DegenerateCell)?;
    // wa, wb must be independent for the facet to be flat of full dimension
    if rank_le3(&[&wa, &wb]).0 != 2 {
        return Err(NormalError::DegenerateCell);
    }
    Ok(&wa + &wb)
}

/// Newell normal of a closed polygon; checks exact coplanarity.
fn polygon_normal(pts: &[IntPoint3]) -> Result<IntPoint3, NormalError> {
    let k = pts.len();
    let mut normal = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
    for i in 0..k {
        let c = icross3(&pts[i], &pts[(i + 1) % k]);
        for (acc, x) in normal.iter_mut().zip(c) {
            *acc += x;
        }
    }
    if normal.iter().all(Zero::is_zero) {
        return Err(NormalError::DegenerateCell);
    }
    for p in &pts[1..] {
        if !idot3(&isub3(p, &pts[0]), &normal).is_zero() {
            return Err(NormalError::NotPlanar);
        }
    }
    Ok(normal)
}

/// Facet vertices as integer points under one common positive scaling.
fn polygon_points(facet: &[usize], coords: &[Vector]) -> Result<Vec<IntPoint3>, NormalError> {
    if facet.iter().any(|&v| coords[v].dim() != 3) {
        return Err(NormalError::NotPlanar);
    }
    Ok(common_scaled3(facet.iter().map(|&v| coords[v].coords())).0)
}

fn isub3(a: &IntPoint3, b: &IntPoint3) -> IntPoint3 {
    [&a[0] - &b[0], &a[1] - &b[1], &a[2] - &b[2]]
}

fn int_vector(p: IntPoint3) -> Vector {
    Vector::new(p.into_iter().map(Scalar::from_integer).collect())
}

/// Direction from polygon vertex `vertex` into the interior of the simple
/// planar polygon `facet` (vertex ids in cyclic order).
///
/// With `a`, `b` the edge vectors to the previous and next vertex: `a + b`
/// at a convex vertex, `-(a + b)` at a reflex one, and the in-plane
/// perpendicular on the interior side at a straight vertex.
pub fn facet_inner_direction_polygon(
    vertex: usize,
    facet: &[usize],
    coords: &[Vector],
) -> Result<Vector, NormalError> {
    let pos = facet.iter().position(|&v| v == vertex).ok_or(NormalError::NotInPolygon)?;
    let pts = polygon_points(facet, coords)?;
    let normal = polygon_normal(&pts)?;
    inner_direction_at(&pts, &normal, pos).map(int_vector)
}

fn inner_direction_at(pts: &[IntPoint3], normal: &IntPoint3, pos: usize) -> Result<IntPoint3, NormalError> {
    let k = pts.len();
    let v = &pts[pos];
    let a = isub3(&pts[(pos + k - 1) % k], v);
    let b = isub3(&pts[(pos + 1) % k], v);
    let turn = idot3(&icross3(&b, &a), normal);
    let sum = [&a[0] + &b[0], &a[1] + &b[1], &a[2] + &b[2]];
    Ok(if turn.is_positive() {
        sum
    } else if turn.is_negative() {
        sum.map(|x| -x)
    } else if idot3(&a, &b).is_positive() {
        return Err(NormalError::DegenerateVertex);
    } else {
        icross3(normal, &b)
    })
}

/// Produces the standard form: cell ids follow the order of the cell lists.
pub fn to_standard(t: &TraditionalComplex) -> Result<StandardComplex, DerivationError> {
    t.validate_cells()?;
    let polygons = t.facet_geometry()?;
    let n = t.dim;
    let corner_id: HashMap<Vec<usize>, usize> =
        t.corners.iter().enumerate().map(|(i, c)| (sorted(c.clone()), i)).collect();
    let ridge_id: HashMap<Vec<usize>, usize> =
        t.ridges.iter().enumerate().map(|(i, r)| (sorted(r.clone()), i)).collect();

    let mut ridge_facets = Vec::new();
    for (f, facet) in t.facets.iter().enumerate() {
        for key in facet_ridge_keys(n, facet) {
            ridge_facets.push((ridge_id[&key], f));
        }
    }

    let mut corner_ridges = Vec::new();
    let mut ridge_normals = Vec::new();
    for (r, ridge) in t.ridges.iter().enumerate() {
        for key in corner_keys_of(n, ridge, 1) {
            let corner = corner_id[&key];
            let vector = ridge_normal_simplicial(&key, ridge, &t.vertices)
                .map_err(|_| DerivationError::DegenerateCell { kind: CellKind::Ridge, index: r })?;
            corner_ridges.push((corner, r));
            ridge_normals.push(NormalRecord { corner, cell: r, vector });
        }
    }

    let mut corner_facets = Vec::new();
    let mut facet_normals = Vec::new();
    for (f, facet) in t.facets.iter().enumerate() {
        if n == 3 {
            let (pts, normal) = &polygons[f];
            for (pos, &vertex) in facet.iter().enumerate() {
                let corner = corner_id[&vec![vertex]];
                let vector = inner_direction_at(pts, normal, pos)
                    .map(int_vector)
                    .map_err(|_| DerivationError::DegenerateVertex { facet: f, vertex })?;
                corner_facets.push((corner, f));
                facet_normals.push(NormalRecord { corner, cell: f, vector });
            }
            continue;
        }
        for key in corner_keys_of(n, facet, 2) {
            let corner = corner_id[&key];
            let vector = facet_normal_simplicial(&key, facet, &t.vertices)
                .map_err(|_| DerivationError::DegenerateCell { kind: CellKind::Facet, index: f })?;
            corner_facets.push((corner, f));
            facet_normals.push(NormalRecord { corner, cell: f, vector });
        }
    }

    Ok(StandardComplex {
        dim: n,
        num_corners: t.corners.len(),
        num_ridges: t.ridges.len(),
        num_facets: t.facets.len(),
        ridge_facets,
        corner_ridges,
        corner_facets,
        ridge_normals,
        facet_normals,
    })
}
