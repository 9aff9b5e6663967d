//! Corner/ridge/facet incidence poset with attached inner normals.
//!
//! A [`StandardComplex`] is the raw input: three cell counts, the three
//! incidence relations and one Euclidean inner normal per corner-ridge and
//! corner-facet incidence. [`validate_standard`] turns it into a
//! [`PreparedComplex`], which knows the star of every corner and lazily
//! caches the cyclic order of ridges around it.

use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use num_bigint::BigInt;

use crate::exact::{int_rank_basis, primitive_ints, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellKind {
    Corner,
    Ridge,
    Facet,
}

impl CellKind {
    /// Dimension of cells of this kind in a hypersurface of `R^n`.
    pub fn dim(self, n: usize) -> usize {
        match self {
            CellKind::Corner => n - 3,
            CellKind::Ridge => n - 2,
            CellKind::Facet => n - 1,
        }
    }
}

impl fmt::Display for CellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellKind::Corner => "corner",
            CellKind::Ridge => "ridge",
            CellKind::Facet => "facet",
        })
    }
}

/// A cell of the poset, unique per `(kind, index)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellId {
    pub kind: CellKind,
    pub index: usize,
}

impl CellId {
    pub fn corner(index: usize) -> Self {
        CellId { kind: CellKind::Corner, index }
    }
    pub fn ridge(index: usize) -> Self {
        CellId { kind: CellKind::Ridge, index }
    }
    pub fn facet(index: usize) -> Self {
        CellId { kind: CellKind::Facet, index }
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.index)
    }
}

/// Inner normal attached to the incidence of `corner` with a ridge or facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalRecord {
    pub corner: usize,
    pub cell: usize,
    pub vector: Vector,
}

/// Standard form input: the subposet of corners, ridges and facets together
/// with inner normals for every corner-ridge and corner-facet incidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardComplex {
    pub dim: usize,
    pub num_corners: usize,
    pub num_ridges: usize,
    pub num_facets: usize,
    /// `(ridge, facet)` pairs.
    pub ridge_facets: Vec<(usize, usize)>,
    /// `(corner, ridge)` pairs.
    pub corner_ridges: Vec<(usize, usize)>,
    /// `(corner, facet)` pairs.
    pub corner_facets: Vec<(usize, usize)>,
    pub ridge_normals: Vec<NormalRecord>,
    pub facet_normals: Vec<NormalRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("ambient dimension {0} is below 3")]
    DimensionTooSmall(usize),
    #[error("complex has no facets")]
    Empty,
    #[error("{kind} index {index} out of range")]
    IndexOutOfRange { kind: CellKind, index: usize },
    #[error("duplicate {lower}-{upper} incidence ({a}, {b})")]
    DuplicateIncidence { lower: CellKind, upper: CellKind, a: usize, b: usize },
    #[error("ridge {ridge} has {count} incident facets, expected 2")]
    RidgeFacetCount { ridge: usize, count: usize },
    #[error("normal for corner {corner} and {kind} {cell} does not match any incidence")]
    DanglingNormal { corner: usize, kind: CellKind, cell: usize },
    #[error("duplicate normal for corner {corner} and {kind} {cell}")]
    DuplicateNormal { corner: usize, kind: CellKind, cell: usize },
    #[error("missing normal for corner {corner} and {kind} {cell}")]
    MissingNormal { corner: usize, kind: CellKind, cell: usize },
    #[error("zero normal for corner {corner} and {kind} {cell}")]
    ZeroNormal { corner: usize, kind: CellKind, cell: usize },
    #[error("normal for corner {corner} and {kind} {cell} has dimension {found}, expected {expected}")]
    NormalDimension { corner: usize, kind: CellKind, cell: usize, found: usize, expected: usize },
    #[error("corner {corner} has {ridges} ridges, a closed star needs at least 2")]
    StarTooSmall { corner: usize, ridges: usize },
    #[error("corner {corner}: ridge {ridge} lies in facet {facet}, which is not incident to the corner")]
    StarIncidenceMismatch { corner: usize, ridge: usize, facet: usize },
    #[error("corner {corner}: facet {facet} contains {count} ridges of the star, expected 2")]
    StarFacetDegree { corner: usize, facet: usize, count: usize },
    #[error("corner {corner}: star is not a single cycle (multi-cycle or pinched star)")]
    StarNotCycle { corner: usize },
    #[error("corner {corner}: attached normals span more than 3 dimensions")]
    NormalRankTooHigh { corner: usize },
    #[error("facets form {components} connected components, expected 1")]
    Disconnected { components: usize },
}

/// Exact face and incidence counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceCounts {
    pub dim: usize,
    pub corners: usize,
    pub ridges: usize,
    pub facets: usize,
    pub corner_ridge: usize,
    pub corner_facet: usize,
    pub ridge_facet: usize,
}

pub fn face_counts(complex: &StandardComplex) -> FaceCounts {
    FaceCounts {
        dim: complex.dim,
        corners: complex.num_corners,
        ridges: complex.num_ridges,
        facets: complex.num_facets,
        corner_ridge: complex.corner_ridges.len(),
        corner_facet: complex.corner_facets.len(),
        ridge_facet: complex.ridge_facets.len(),
    }
}

/// The star of one corner in local indices.
#[derive(Debug, Clone)]
struct Star {
    /// Sorted global ridge ids.
    ridges: Vec<usize>,
    ridge_normal: Vec<usize>,
    /// Sorted global facet ids.
    facets: Vec<usize>,
    facet_normal: Vec<usize>,
    /// Local ridge indices of each local facet.
    facet_ridges: Vec<[usize; 2]>,
    /// Local facet indices of each local ridge, ascending.
    ridge_facets: Vec<[usize; 2]>,
}

/// Cyclic order of one star as `(local ridge, local facet)` steps, where the
/// facet joins this ridge to the next one.
type Rim = Vec<(usize, usize)>;

/// The star of a corner as an `m`-wheel: rim vertices are ridges, rim edges
/// are facets. `rim_facets[i]` joins `rim_ridges[i]` and `rim_ridges[(i + 1) % m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelStar {
    pub corner: usize,
    pub rim_ridges: Vec<usize>,
    pub rim_facets: Vec<usize>,
    pub ridge_normals: Vec<Vector>,
    pub facet_normals: Vec<Vector>,
}

impl WheelStar {
    pub fn m(&self) -> usize {
        self.rim_ridges.len()
    }

    /// Same wheel walked in the opposite direction from the same start.
    pub fn reversed(&self) -> WheelStar {
        let m = self.m();
        let order: Vec<usize> = (0..m).map(|i| (m - i) % m).collect();
        WheelStar {
            corner: self.corner,
            rim_ridges: order.iter().map(|&i| self.rim_ridges[i]).collect(),
            ridge_normals: order.iter().map(|&i| self.ridge_normals[i].clone()).collect(),
            rim_facets: (0..m).map(|i| self.rim_facets[m - 1 - i]).collect(),
            facet_normals: (0..m).map(|i| self.facet_normals[m - 1 - i].clone()).collect(),
        }
    }

    /// Same wheel started at rim position `k`.
    pub fn rotated(&self, k: usize) -> WheelStar {
        let m = self.m();
        let rot = |i: usize| (i + k) % m;
        WheelStar {
            corner: self.corner,
            rim_ridges: (0..m).map(|i| self.rim_ridges[rot(i)]).collect(),
            ridge_normals: (0..m).map(|i| self.ridge_normals[rot(i)].clone()).collect(),
            rim_facets: (0..m).map(|i| self.rim_facets[rot(i)]).collect(),
            facet_normals: (0..m).map(|i| self.facet_normals[rot(i)].clone()).collect(),
        }
    }
}

/// A validated standard-form complex. Immutable; the per-corner rim cache is
/// filled on first use and may be populated from several threads.
#[derive(Debug)]
pub struct PreparedComplex {
    complex: StandardComplex,
    stars: Vec<Star>,
    rims: Vec<OnceLock<Rim>>,
}

impl PreparedComplex {
    pub fn complex(&self) -> &StandardComplex {
        &self.complex
    }

    pub fn dim(&self) -> usize {
        self.complex.dim
    }

    pub fn num_corners(&self) -> usize {
        self.complex.num_corners
    }

    /// Number of ridges at `corner`.
    pub fn star_size(&self, corner: usize) -> usize {
        self.stars[corner].ridges.len()
    }

    pub fn face_counts(&self) -> FaceCounts {
        face_counts(&self.complex)
    }

    fn rim(&self, corner: usize) -> &Rim {
        self.rims[corner].get_or_init(|| walk_rim(&self.stars[corner]).expect("validated star"))
    }

    /// The star of `corner` as a wheel. The rim starts at the lowest-indexed
    /// ridge and leaves through its lower-indexed facet.
    pub fn wheel_star(&self, corner: usize) -> WheelStar {
        let star = &self.stars[corner];
        let rim = self.rim(corner);
        let mut out = WheelStar {
            corner,
            rim_ridges: Vec::with_capacity(rim.len()),
            rim_facets: Vec::with_capacity(rim.len()),
            ridge_normals: Vec::with_capacity(rim.len()),
            facet_normals: Vec::with_capacity(rim.len()),
        };
        for &(r, f) in rim {
            out.rim_ridges.push(star.ridges[r]);
            out.rim_facets.push(star.facets[f]);
            out.ridge_normals.push(self.complex.ridge_normals[star.ridge_normal[r]].vector.clone());
            out.facet_normals.push(self.complex.facet_normals[star.facet_normal[f]].vector.clone());
        }
        out
    }

    /// Replaces the normals while keeping the combinatorics and the cached
    /// cyclic orders.
    pub fn rerealize(
        &self,
        ridge_normals: Vec<NormalRecord>,
        facet_normals: Vec<NormalRecord>,
    ) -> Result<PreparedComplex, ComplexError> {
        let complex = StandardComplex { ridge_normals, facet_normals, ..self.complex.clone() };
        let ridge_index = index_normals(&complex, CellKind::Ridge)?;
        let facet_index = index_normals(&complex, CellKind::Facet)?;
        let mut stars = self.stars.clone();
        for (corner, star) in stars.iter_mut().enumerate() {
            for (slot, &r) in star.ridge_normal.iter_mut().zip(&star.ridges) {
                *slot = ridge_index[&(corner, r)];
            }
            for (slot, &f) in star.facet_normal.iter_mut().zip(&star.facets) {
                *slot = facet_index[&(corner, f)];
            }
            check_star_rank(&complex, corner, star)?;
        }
        let rims = self.rims.iter().map(|cell| {
            let fresh = OnceLock::new();
            if let Some(rim) = cell.get() {
                let _ = fresh.set(rim.clone());
            }
            fresh
        });
        Ok(PreparedComplex { complex, stars, rims: rims.collect() })
    }
}

/// Convenience wrapper for [`PreparedComplex::wheel_star`].
pub fn wheel_star(complex: &PreparedComplex, corner: usize) -> WheelStar {
    complex.wheel_star(corner)
}

fn walk_rim(star: &Star) -> Option<Rim> {
    let m = star.ridges.len();
    let mut rim = Vec::with_capacity(m);
    let mut ridge = 0;
    let mut facet = star.ridge_facets[0][0];
    loop {
        rim.push((ridge, facet));
        let [a, b] = star.facet_ridges[facet];
        let next = if a == ridge { b } else { a };
        if next == 0 {
            break;
        }
        if rim.len() >= m {
            return None;
        }
        let [f0, f1] = star.ridge_facets[next];
        facet = if f0 == facet { f1 } else { f0 };
        ridge = next;
    }
    (rim.len() == m).then_some(rim)
}

fn index_normals(
    complex: &StandardComplex,
    kind: CellKind,
) -> Result<HashMap<(usize, usize), usize>, ComplexError> {
    let (records, incidences, bound) = match kind {
        CellKind::Ridge => (&complex.ridge_normals, &complex.corner_ridges, complex.num_ridges),
        _ => (&complex.facet_normals, &complex.corner_facets, complex.num_facets),
    };
    let mut index = HashMap::with_capacity_and_hasher(records.len(), Default::default());
    for (i, rec) in records.iter().enumerate() {
        let (corner, cell) = (rec.corner, rec.cell);
        if corner >= complex.num_corners {
            return Err(ComplexError::IndexOutOfRange { kind: CellKind::Corner, index: corner });
        }
        if cell >= bound {
            return Err(ComplexError::IndexOutOfRange { kind, index: cell });
        }
        if index.insert((corner, cell), i).is_some() {
            return Err(ComplexError::DuplicateNormal { corner, kind, cell });
        }
        if rec.vector.dim() != complex.dim {
            return Err(ComplexError::NormalDimension {
                corner,
                kind,
                cell,
                found: rec.vector.dim(),
                expected: complex.dim,
            });
        }
        if rec.vector.is_zero() {
            return Err(ComplexError::ZeroNormal { corner, kind, cell });
        }
    }
    let mut seen = 0usize;
    for &(corner, cell) in incidences {
        if !index.contains_key(&(corner, cell)) {
            return Err(ComplexError::MissingNormal { corner, kind, cell });
        }
        seen += 1;
    }
    if seen != index.len() {
        let incident: HashSet<_> = incidences.iter().copied().collect();
        let rec = records
            .iter()
            .find(|r| !incident.contains(&(r.corner, r.cell)))
            .expect("an unmatched normal exists");
        return Err(ComplexError::DanglingNormal { corner: rec.corner, kind, cell: rec.cell });
    }
    Ok(index)
}

fn check_star_rank(complex: &StandardComplex, corner: usize, star: &Star) -> Result<(), ComplexError> {
    let vectors: Vec<Vec<BigInt>> = star
        .ridge_normal
        .iter()
        .map(|&i| &complex.ridge_normals[i].vector)
        .chain(star.facet_normal.iter().map(|&i| &complex.facet_normals[i].vector))
        .map(|v| primitive_ints(v.coords()))
        .collect();
    let refs: Vec<&[BigInt]> = vectors.iter().map(Vec::as_slice).collect();
    if int_rank_basis(&refs).0 > 3 {
        return Err(ComplexError::NormalRankTooHigh { corner });
    }
    Ok(())
}

fn check_pairs(
    pairs: &[(usize, usize)],
    lower: (CellKind, usize),
    upper: (CellKind, usize),
) -> Result<(), ComplexError> {
    let mut seen = HashSet::with_capacity_and_hasher(pairs.len(), Default::default());
    for &(a, b) in pairs {
        if a >= lower.1 {
            return Err(ComplexError::IndexOutOfRange { kind: lower.0, index: a });
        }
        if b >= upper.1 {
            return Err(ComplexError::IndexOutOfRange { kind: upper.0, index: b });
        }
        if !seen.insert((a, b)) {
            return Err(ComplexError::DuplicateIncidence { lower: lower.0, upper: upper.0, a, b });
        }
    }
    Ok(())
}

struct DisjointSets(Vec<usize>);

impl DisjointSets {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Checks manifold structure and normal attachment; returns the prepared
/// complex or the first violation found.
pub fn validate_standard(complex: StandardComplex) -> Result<PreparedComplex, ComplexError> {
    use CellKind::*;
    if complex.dim < 3 {
        return Err(ComplexError::DimensionTooSmall(complex.dim));
    }
    if complex.num_facets == 0 {
        return Err(ComplexError::Empty);
    }
    let (nc, nr, nf) = (complex.num_corners, complex.num_ridges, complex.num_facets);
    check_pairs(&complex.ridge_facets, (Ridge, nr), (Facet, nf))?;
    check_pairs(&complex.corner_ridges, (Corner, nc), (Ridge, nr))?;
    check_pairs(&complex.corner_facets, (Corner, nc), (Facet, nf))?;

    let mut facets_of_ridge: Vec<Vec<usize>> = vec![Vec::new(); nr];
    for &(r, f) in &complex.ridge_facets {
        facets_of_ridge[r].push(f);
    }
    if let Some((ridge, fs)) = facets_of_ridge.iter().enumerate().find(|(_, fs)| fs.len() != 2) {
        return Err(ComplexError::RidgeFacetCount { ridge, count: fs.len() });
    }

    let ridge_index = index_normals(&complex, Ridge)?;
    let facet_index = index_normals(&complex, Facet)?;

    let mut ridges_of_corner: Vec<Vec<usize>> = vec![Vec::new(); nc];
    for &(c, r) in &complex.corner_ridges {
        ridges_of_corner[c].push(r);
    }
    let mut facets_of_corner: Vec<Vec<usize>> = vec![Vec::new(); nc];
    for &(c, f) in &complex.corner_facets {
        facets_of_corner[c].push(f);
    }

    let mut stars = Vec::with_capacity(nc);
    let mut rims = Vec::with_capacity(nc);
    for corner in 0..nc {
        let mut ridges = std::mem::take(&mut ridges_of_corner[corner]);
        let mut facets = std::mem::take(&mut facets_of_corner[corner]);
        ridges.sort_unstable();
        facets.sort_unstable();
        if ridges.len() < 2 {
            return Err(ComplexError::StarTooSmall { corner, ridges: ridges.len() });
        }
        let mut ridge_facets = Vec::with_capacity(ridges.len());
        let mut facet_ridges: Vec<Vec<usize>> = vec![Vec::new(); facets.len()];
        for (local_r, &r) in ridges.iter().enumerate() {
            let mut pair = [0usize; 2];
            for (slot, &f) in pair.iter_mut().zip(&facets_of_ridge[r]) {
                let local_f = facets.binary_search(&f).map_err(|_| {
                    ComplexError::StarIncidenceMismatch { corner, ridge: r, facet: f }
                })?;
                *slot = local_f;
                facet_ridges[local_f].push(local_r);
            }
            pair.sort_unstable();
            ridge_facets.push(pair);
        }
        let facet_ridges = facet_ridges
            .into_iter()
            .enumerate()
            .map(|(local_f, rs)| match rs.as_slice() {
                &[a, b] => Ok([a, b]),
                _ => Err(ComplexError::StarFacetDegree { corner, facet: facets[local_f], count: rs.len() }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let star = Star {
            ridge_normal: ridges.iter().map(|&r| ridge_index[&(corner, r)]).collect(),
            facet_normal: facets.iter().map(|&f| facet_index[&(corner, f)]).collect(),
            ridges,
            facets,
            facet_ridges,
            ridge_facets,
        };
        let rim = walk_rim(&star).ok_or(ComplexError::StarNotCycle { corner })?;
        if complex.dim > 3 {
            check_star_rank(&complex, corner, &star)?;
        }
        stars.push(star);
        let cell = OnceLock::new();
        let _ = cell.set(rim);
        rims.push(cell);
    }

    let mut sets = DisjointSets((0..nf).collect());
    for fs in &facets_of_ridge {
        sets.union(fs[0], fs[1]);
    }
    let components = (0..nf).filter(|&f| sets.find(f) == f).count();
    if components != 1 {
        return Err(ComplexError::Disconnected { components });
    }

    Ok(PreparedComplex { complex, stars, rims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::normals::{to_standard, TraditionalComplex};
    use crate::oracle::{cube, octahedron, simplex_boundary};

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c.iter().copied())
    }

    fn standard(t: &TraditionalComplex) -> StandardComplex {
        to_standard(t).unwrap()
    }

    fn digon() -> StandardComplex {
        let record = |cell, c: &[i64]| NormalRecord { corner: 0, cell, vector: v(c) };
        StandardComplex {
            dim: 3,
            num_corners: 1,
            num_ridges: 2,
            num_facets: 2,
            ridge_facets: vec![(0, 0), (0, 1), (1, 0), (1, 1)],
            corner_ridges: vec![(0, 0), (0, 1)],
            corner_facets: vec![(0, 0), (0, 1)],
            ridge_normals: vec![record(0, &[1, 0, 0]), record(1, &[-1, 0, 0])],
            facet_normals: vec![record(0, &[0, 1, 0]), record(1, &[0, -1, 0])],
        }
    }

    #[test]
    fn cube_validates() {
        let p = validate_standard(standard(&cube())).unwrap();
        assert_eq!(p.num_corners(), 8);
        for c in 0..8 {
            let w = p.wheel_star(c);
            assert_eq!(w.m(), 3);
            assert_eq!(w, wheel_star(&p, c));
        }
    }

    #[test]
    fn octahedron_wheels() {
        let p = validate_standard(standard(&octahedron())).unwrap();
        assert!((0..6).all(|c| p.wheel_star(c).m() == 4));
    }

    #[test]
    fn rim_is_a_cycle_of_the_star() {
        let s = standard(&octahedron());
        let p = validate_standard(s.clone()).unwrap();
        for c in 0..p.num_corners() {
            let w = p.wheel_star(c);
            assert_eq!(w.rim_ridges[0], *w.rim_ridges.iter().min().unwrap());
            for i in 0..w.m() {
                let f = w.rim_facets[i];
                for r in [w.rim_ridges[i], w.rim_ridges[(i + 1) % w.m()]] {
                    assert!(s.ridge_facets.contains(&(r, f)));
                }
            }
        }
    }

    #[test]
    fn missing_ridge_facet_incidence() {
        let mut s = standard(&cube());
        s.ridge_facets.remove(0);
        assert!(matches!(validate_standard(s), Err(ComplexError::RidgeFacetCount { count: 1, .. })));
    }

    #[test]
    fn pinched_vertex() {
        // two tetrahedra sharing vertex 0
        let pts = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, 0, 0], [0, -1, 0], [0, 0, -1]];
        let vertices = pts.iter().map(|p| v(p)).collect();
        let mut facets = Vec::new();
        for (a, b, c) in [(1, 2, 3), (4, 5, 6)] {
            facets.extend([vec![0, b, a], vec![0, c, b], vec![0, a, c], vec![a, b, c]]);
        }
        let t = TraditionalComplex::from_facets(3, vertices, facets);
        assert_eq!(validate_standard(standard(&t)).unwrap_err(), ComplexError::StarNotCycle { corner: 0 });
    }

    #[test]
    fn digon_star() {
        let p = validate_standard(digon()).unwrap();
        assert_eq!(p.wheel_star(0).m(), 2);
    }

    #[test]
    fn normal_problems() {
        let mut s = digon();
        s.facet_normals.pop();
        assert!(matches!(validate_standard(s), Err(ComplexError::MissingNormal { .. })));
        let mut s = digon();
        s.facet_normals.push(s.facet_normals[0].clone());
        assert!(matches!(validate_standard(s), Err(ComplexError::DuplicateNormal { .. })));
        let mut s = digon();
        s.ridge_normals[0].vector = v(&[0, 0, 0]);
        assert!(matches!(validate_standard(s), Err(ComplexError::ZeroNormal { .. })));
        let mut s = digon();
        s.ridge_normals[0].cell = 1;
        assert!(validate_standard(s).is_err());
    }

    #[test]
    fn rank_above_three() {
        let mut s = standard(&simplex_boundary(4));
        s.facet_normals[0].vector = v(&[1, 1, 1, 2]);
        let err = validate_standard(s).unwrap_err();
        assert!(matches!(err, ComplexError::NormalRankTooHigh { .. }), "{err}");
    }

    #[test]
    fn disconnected() {
        let mut t = simplex_boundary(3);
        let shift = t.vertices.len();
        for p in simplex_boundary(3).vertices {
            t.vertices.push(&p + &v(&[5, 5, 5]));
        }
        let facets: Vec<Vec<usize>> =
            t.facets.iter().flat_map(|f| [f.clone(), f.iter().map(|x| x + shift).collect()]).collect();
        let t = TraditionalComplex::from_facets(3, t.vertices, facets);
        assert_eq!(validate_standard(standard(&t)).unwrap_err(), ComplexError::Disconnected { components: 2 });
    }

    #[test]
    fn counts() {
        let c = face_counts(&standard(&cube()));
        assert_eq!((c.corners, c.ridges, c.facets, c.corner_ridge), (8, 12, 6, 24));
        assert_eq!(c.corner_ridge, c.corner_facet);
        let c = face_counts(&standard(&simplex_boundary(3)));
        assert_eq!((c.corners, c.ridges, c.facets), (4, 6, 4));
        let c = face_counts(&standard(&simplex_boundary(4)));
        assert_eq!((c.corners, c.ridges, c.facets, c.corner_ridge), (10, 10, 5, 30));
        let p = validate_standard(standard(&simplex_boundary(4))).unwrap();
        let total: usize = (0..p.num_corners()).map(|k| p.wheel_star(k).m()).sum();
        assert_eq!(total, c.corner_ridge);
    }

    #[test]
    fn reversal_and_rotation_keep_the_wheel() {
        let p = validate_standard(standard(&octahedron())).unwrap();
        let w = p.wheel_star(2);
        assert_eq!(w.reversed().reversed(), w);
        assert_eq!(w.rotated(1).rotated(3), w);
        let r = w.reversed();
        assert_eq!(r.rim_ridges[0], w.rim_ridges[0]);
        assert_eq!(r.rim_facets[0], w.rim_facets[3]);
    }

    #[test]
    fn rerealize_keeps_rims() {
        let s = standard(&cube());
        let p = validate_standard(s.clone()).unwrap();
        let before = p.wheel_star(0);
        let scale = |rs: &[NormalRecord]| -> Vec<NormalRecord> {
            rs.iter().map(|r| NormalRecord { vector: &r.vector + &r.vector, ..r.clone() }).collect()
        };
        let q = p.rerealize(scale(&s.ridge_normals), scale(&s.facet_normals)).unwrap();
        let after = q.wheel_star(0);
        assert_eq!(after.rim_ridges, before.rim_ridges);
        assert_eq!(after.ridge_normals[0], &before.ridge_normals[0] + &before.ridge_normals[0]);
    }
}
