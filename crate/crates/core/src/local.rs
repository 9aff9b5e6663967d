//! The per-corner test.
//!
//! [`reduce_to_3d`] turns the wheel star of a corner into one of three
//! outcomes: the star is inconsistent with an immersion, the star is flat
//! and passes, or a cone in `R^3` whose convexity [`check_cone_convex`]
//! decides. Plane angles are handled by [`predicate_p`] and [`is_folded`].

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::complex::WheelStar;
use num_bigint::BigInt;

use crate::exact::{
    icross3, idet3, idot, idot3, int_positively_collinear, int_rank_basis, positively_collinear,
    primitive3, primitive_ints, IntPoint3, PlaneFrame, Point3, Scalar, Sign, Vector,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum LocalError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(&'static str),
    #[error("every consecutive rim triple is coplanar")]
    DegenerateCone,
    #[error("cone needs at least 3 rim points")]
    TooSmall,
}

/// A realization of the wheel `W_m` in `R^3` with the hub at the origin.
///
/// `ridge_points[j]` realizes rim vertex `j`. When present,
/// `facet_points[j]` is an interior direction of the sector between
/// `ridge_points[j]` and `ridge_points[j + 1]`; it fixes which of the two
/// sectors the facet occupies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeRealization3D {
    pub ridge_points: Vec<Point3>,
    pub facet_points: Option<Vec<Point3>>,
}

impl ConeRealization3D {
    pub fn m(&self) -> usize {
        self.ridge_points.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LocalVerdict {
    /// The star cannot come from an immersion (fold or bad normal data).
    Inconsistent,
    /// All normals lie in one plane and the facet angles tile it once.
    FlatPass,
    Cone(ConeRealization3D),
}

/// Orientation and same-ray tests inside one oriented plane.
struct Plane<'a, V> {
    sgn: &'a dyn Fn(&V, &V) -> Sign,
    same_ray: &'a dyn Fn(&V, &V) -> bool,
}

impl<V> Plane<'_, V> {
    fn in_convex(&self, v: &V, w: &V, s: Sign, x: &V) -> bool {
        (self.sgn)(v, x) == s && (self.sgn)(x, w) == s
    }

    /// Whether `<v|u1|w>` and `<v|u2|w>` are the same angle.
    fn same_angle(&self, v: &V, u1: &V, u2: &V, w: &V) -> bool {
        let s = (self.sgn)(v, w);
        if s.is_zero() {
            // v, w antiparallel: both half-planes are straight angles
            let a = (self.sgn)(v, u1);
            a != Sign::Zero && a == (self.sgn)(v, u2)
        } else {
            self.in_convex(v, w, s, u1) == self.in_convex(v, w, s, u2)
        }
    }

    /// `x` lies strictly inside `<v|u|w>`.
    fn strictly_inside(&self, v: &V, u: &V, w: &V, x: &V) -> bool {
        !(self.same_ray)(x, v) && !(self.same_ray)(x, w) && self.same_angle(v, u, x, w)
    }

    /// Rotational direction of the sweep from `v` to `w` through `u`.
    fn sweep(&self, v: &V, u: &V, w: &V) -> Sign {
        let s = (self.sgn)(v, w);
        if s.is_zero() {
            (self.sgn)(v, u)
        } else if self.in_convex(v, w, s, u) {
            s
        } else {
            -s
        }
    }

    /// The facet angles `<r_i|q_i|r_{i+1}>` sweep in one direction and
    /// cover the circle exactly once.
    fn tiles_once(&self, ridges: &[V], facets: &[V]) -> bool {
        let m = ridges.len();
        let mut direction = None;
        for i in 0..m {
            let d = self.sweep(&ridges[i], &facets[i], &ridges[(i + 1) % m]);
            if d.is_zero() || direction.is_some_and(|prev| prev != d) {
                return false;
            }
            direction = Some(d);
        }
        let probe = &ridges[0];
        let mut winding = 0usize;
        for i in 0..m {
            let next = &ridges[(i + 1) % m];
            if (self.same_ray)(next, probe) {
                winding += 1;
            } else if self.strictly_inside(&ridges[i], &facets[i], next, probe) {
                winding += 1;
            }
        }
        winding == 1
    }

    /// Consecutive angles `<a|b|c>` and `<c|d|e>` overlap.
    fn consecutive_overlap(&self, a: &V, b: &V, c: &V, d: &V, e: &V) -> bool {
        let first = self.sweep(a, b, c);
        let second = self.sweep(c, d, e);
        first.is_zero() || first != second || self.strictly_inside(c, d, e, a)
    }
}

fn frame_plane<R>(frame: &PlaneFrame, f: impl FnOnce(&Plane<'_, Vector>) -> R) -> R {
    let sgn = |a: &Vector, b: &Vector| frame.orient_unchecked(a, b);
    let same_ray = |a: &Vector, b: &Vector| positively_collinear(a, b);
    f(&Plane { sgn: &sgn, same_ray: &same_ray })
}

fn check_planar(frame: &PlaneFrame, vs: &[&Vector]) -> Result<(), LocalError> {
    for v in vs {
        if v.is_zero() {
            return Err(LocalError::PreconditionViolated("zero vector"));
        }
        if !frame.contains(v) {
            return Err(LocalError::PreconditionViolated("vector outside the frame plane"));
        }
    }
    Ok(())
}

/// `P(v|u1,u2|w)`: true iff the angles `<v|u1|w>` and `<v|u2|w>` coincide.
///
/// When `v` and `w` are antiparallel both candidate angles are half-planes
/// and the test is whether `u1`, `u2` lie strictly on the same side of the
/// line through `v`.
pub fn predicate_p(
    v: &Vector,
    u1: &Vector,
    u2: &Vector,
    w: &Vector,
    frame: &PlaneFrame,
) -> Result<bool, LocalError> {
    check_planar(frame, &[v, u1, u2, w])?;
    if positively_collinear(v, w) {
        return Err(LocalError::PreconditionViolated("v and w on the same ray"));
    }
    for u in [u1, u2] {
        if positively_collinear(u, v) || positively_collinear(u, w) {
            return Err(LocalError::PreconditionViolated("u on the ray of v or w"));
        }
    }
    Ok(frame_plane(frame, |p| p.same_angle(v, u1, u2, w)))
}

/// True iff the interiors of `<a|b|c>` and `<c|d|e>` intersect.
pub fn is_folded(
    a: &Vector,
    b: &Vector,
    c: &Vector,
    d: &Vector,
    e: &Vector,
    frame: &PlaneFrame,
) -> Result<bool, LocalError> {
    check_planar(frame, &[a, b, c, d, e])?;
    let distinct = |x: &Vector, y: &Vector| !positively_collinear(x, y);
    if !(distinct(a, b) && distinct(b, c) && distinct(a, c)) {
        return Err(LocalError::PreconditionViolated("a, b, c must be distinct rays"));
    }
    if !(distinct(c, d) && distinct(d, e) && distinct(c, e)) {
        return Err(LocalError::PreconditionViolated("c, d, e must be distinct rays"));
    }
    if positively_collinear(a, e) {
        return predicate_p(c, b, d, a, frame);
    }
    let outside = !predicate_p(a, b, e, c, frame)?;
    let same_side = predicate_p(c, d, e, a, frame)?;
    let ordered = predicate_p(b, c, d, e, frame)?;
    Ok(!(outside && same_side && ordered))
}

fn plane_in_3d<R>(normal: &IntPoint3, f: impl FnOnce(&Plane<'_, IntPoint3>) -> R) -> R {
    let sgn = |a: &IntPoint3, b: &IntPoint3| Sign::of_int(&idet3(a, b, normal));
    let same_ray = |a: &IntPoint3, b: &IntPoint3| {
        icross3(a, b).iter().all(Zero::is_zero) && idot3(a, b).is_positive()
    };
    f(&Plane { sgn: &sgn, same_ray: &same_ray })
}

fn is_zero_int(p: &IntPoint3) -> bool {
    p.iter().all(Zero::is_zero)
}

/// Reduces the star of a corner to a cone in `R^3`, or decides it directly
/// when the normals are planar or inconsistent.
pub fn reduce_to_3d(star: &WheelStar) -> LocalVerdict {
    let m = star.m();
    if m < 2 || star.facet_normals.len() != m {
        return LocalVerdict::Inconsistent;
    }
    let ints = |vs: &[Vector]| -> Vec<Vec<BigInt>> { vs.iter().map(|v| primitive_ints(v.coords())).collect() };
    let (ri, fi) = (ints(&star.ridge_normals), ints(&star.facet_normals));
    for i in 0..m {
        let next = &ri[(i + 1) % m];
        if int_positively_collinear(&ri[i], next)
            || int_positively_collinear(&fi[i], &ri[i])
            || int_positively_collinear(&fi[i], next)
        {
            return LocalVerdict::Inconsistent;
        }
    }

    let all: Vec<&[BigInt]> = ri.iter().chain(fi.iter()).map(Vec::as_slice).collect();
    let (rank, basis) = int_rank_basis(&all);
    let vector = |v: &[BigInt]| Vector::new(v.iter().cloned().map(Scalar::from_integer).collect());
    let vectors = |vs: &[Vec<BigInt>]| -> Vec<Vector> { vs.iter().map(|v| vector(v)).collect() };

    if m == 2 && int_rank_basis(&[&ri[0], &ri[1]]).0 == 1 {
        // two facets bounded by one line through the corner
        if rank != 2 {
            return LocalVerdict::FlatPass;
        }
        let (ridges, facets) = (vectors(&ri), vectors(&fi));
        let frame = PlaneFrame::new(ridges[0].clone(), facets[0].clone()).expect("rank 2");
        let s0 = frame.orient_unchecked(&ridges[0], &facets[0]);
        let s1 = frame.orient_unchecked(&ridges[0], &facets[1]);
        return if s0 == s1 { LocalVerdict::Inconsistent } else { LocalVerdict::FlatPass };
    }

    match rank {
        2 => {
            let (ridges, facets) = (vectors(&ri), vectors(&fi));
            let frame = PlaneFrame::new(vector(all[basis[0]]), vector(all[basis[1]])).expect("rank 2");
            if frame_plane(&frame, |p| p.tiles_once(&ridges, &facets)) {
                LocalVerdict::FlatPass
            } else {
                LocalVerdict::Inconsistent
            }
        }
        3 if m >= 3 => {
            let (e1, e2, e3) = (all[basis[0]], all[basis[1]], all[basis[2]]);
            let coords = |n: &Vec<BigInt>| -> IntPoint3 { [idot(n, e1), idot(n, e2), idot(n, e3)] };
            let (ri, fi): (Vec<IntPoint3>, Vec<IntPoint3>) =
                (ri.iter().map(coords).collect(), fi.iter().map(coords).collect());
            for i in 0..m {
                let next = &ri[(i + 1) % m];
                // a facet's interior direction lies in the facet's 2-plane
                let spans_plane = !is_zero_int(&icross3(&ri[i], next));
                if spans_plane && !idet3(&ri[i], &fi[i], next).is_zero() {
                    return LocalVerdict::Inconsistent;
                }
            }
            if folds_in_a_plane(&ri, &fi) {
                return LocalVerdict::Inconsistent;
            }
            let points = |ps: Vec<IntPoint3>| -> Vec<Point3> {
                ps.into_iter().map(|p| p.map(Scalar::from_integer)).collect()
            };
            LocalVerdict::Cone(ConeRealization3D { ridge_points: points(ri), facet_points: Some(points(fi)) })
        }
        _ => LocalVerdict::Inconsistent,
    }
}

/// Two consecutive facets lying in one plane must continue around the
/// shared ridge instead of doubling back over each other.
fn folds_in_a_plane(rp: &[IntPoint3], fp: &[IntPoint3]) -> bool {
    let m = rp.len();
    for i in 0..m {
        let (a, b, c) = (&rp[i], &fp[i], &rp[(i + 1) % m]);
        let (d, e) = (&fp[(i + 1) % m], &rp[(i + 2) % m]);
        let pts = [a, b, c, d, e];
        let normal = pts
            .iter()
            .flat_map(|x| pts.iter().map(move |y| icross3(x, y)))
            .find(|n| !is_zero_int(n));
        let Some(normal) = normal else { continue };
        if pts.iter().any(|p| !idot3(p, &normal).is_zero()) {
            continue;
        }
        if plane_in_3d(&normal, |p| p.consecutive_overlap(a, b, c, d, e)) {
            return true;
        }
    }
    false
}

/// True iff the wheel realization lies on the boundary of a convex cone.
///
/// Picks the first consecutive rim triple with nonzero orientation `s`, then
/// requires every consecutive triple and every fan triple from that base
/// point to have orientation `s` or `0`, and every rim point to lie within
/// the half-turn from the base's successor to its predecessor. With facet
/// points present, each facet sector must be at most a straight angle and
/// the facet points are inserted between their ridge points before the test.
/// A rim that meets one ray twice is rejected.
pub fn check_cone_convex(cone: &ConeRealization3D) -> Result<bool, LocalError> {
    let m = cone.m();
    if m < 3 {
        return Err(LocalError::TooSmall);
    }
    let ridge_points: Vec<IntPoint3> = cone.ridge_points.iter().map(primitive3).collect();
    let rim: Vec<IntPoint3> = match &cone.facet_points {
        None => ridge_points,
        Some(fp) => {
            if fp.len() != m {
                return Err(LocalError::PreconditionViolated("one facet point per rim edge"));
            }
            let fp: Vec<IntPoint3> = fp.iter().map(primitive3).collect();
            for i in 0..m {
                let (v, q, w) = (&ridge_points[i], &fp[i], &ridge_points[(i + 1) % m]);
                let span = icross3(v, w);
                if !is_zero_int(&span) {
                    let convex = idot3(&icross3(v, q), &span).is_positive()
                        && idot3(&icross3(q, w), &span).is_positive();
                    if !convex {
                        return Ok(false);
                    }
                }
            }
            ridge_points.into_iter().zip(fp).flat_map(|(p, q)| [p, q]).collect()
        }
    };
    let mut rays: Vec<&IntPoint3> = rim.iter().collect();
    rays.sort_unstable();
    if rays.windows(2).any(|w| w[0] == w[1]) {
        // the rim passes through one ray twice
        return Ok(false);
    }
    let len = rim.len();
    let at = |i: usize| &rim[i % len];
    let sign = |a: &IntPoint3, b: &IntPoint3, c: &IntPoint3| Sign::of_int(&idet3(a, b, c));
    let (base, s) = (0..len)
        .find_map(|i| {
            let s = sign(at(i), at(i + 1), at(i + 2));
            (!s.is_zero()).then_some((i, s))
        })
        .ok_or(LocalError::DegenerateCone)?;
    for i in 0..len {
        if sign(at(i), at(i + 1), at(i + 2)) == -s {
            return Ok(false);
        }
    }
    // seen from the base point the rim turns monotonically through at most
    // a half turn, from its successor to its predecessor
    let (b, first, last) = (at(base), at(base + 1), at(base + len - 1));
    for i in 0..len {
        let x = at(i);
        if sign(b, first, x) == -s || sign(b, x, last) == -s {
            return Ok(false);
        }
        if i != base && (i + 1) % len != base && sign(b, x, at(i + 1)) == -s {
            return Ok(false);
        }
    }
    Ok(true)
}
