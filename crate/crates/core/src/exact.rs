//! Exact rational kernel.
//!
//! Everything on the verdict path goes through [`Scalar`], an arbitrary
//! precision rational kept in lowest terms. The kernel only provides what the
//! local convexity test needs: signs of 2- and 3-frames, small ranks, scalar
//! multiples and Gram coordinates with respect to a chosen 3-basis.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Arbitrary precision rational, always canonical (reduced, positive denominator).
pub type Scalar = BigRational;

/// A point or direction in `R^3` expressed with exact coordinates.
pub type Point3 = [Scalar; 3];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("vectors have mismatched dimensions {0} and {1}")]
    DimensionMismatch(usize, usize),
    #[error("vector is not in the span of the plane frame")]
    NotInPlane,
    #[error("zero vector where a nonzero one is required")]
    ZeroVector,
    #[error("frame vectors are linearly dependent")]
    DependentFrame,
}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(x: &Scalar) -> Sign {
        if x.is_positive() {
            Sign::Positive
        } else if x.is_negative() {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn of_int(x: &BigInt) -> Sign {
        match x.sign() {
            num_bigint::Sign::Plus => Sign::Positive,
            num_bigint::Sign::Minus => Sign::Negative,
            num_bigint::Sign::NoSign => Sign::Zero,
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i8())
    }
}

/// An exact vector of the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coords: I) -> Self {
        Vector(coords.into_iter().map(|c| Scalar::from_integer(c.into())).collect())
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        debug_assert_eq!(self.dim(), other.dim());
        let mut acc = Scalar::zero();
        for (a, b) in self.0.iter().zip(&other.0) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    pub fn scale(&self, k: &Scalar) -> Vector {
        Vector(self.0.iter().map(|c| c * k).collect())
    }

    /// `self + k * other`
    pub fn add_scaled(&self, k: &Scalar, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }

    /// Returns the 3-vector when the dimension is exactly three.
    pub fn as_point3(&self) -> Option<Point3> {
        match self.0.as_slice() {
            [a, b, c] => Some([a.clone(), b.clone(), c.clone()]),
            _ => None,
        }
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Sign of the 3x3 determinant whose rows are `a`, `b`, `c`.
pub fn sign_det3(a: &Point3, b: &Point3, c: &Point3) -> Sign {
    Sign::of(&det3(a, b, c))
}

pub(crate) fn det3(a: &Point3, b: &Point3, c: &Point3) -> Scalar {
    let m0 = &b[1] * &c[2] - &b[2] * &c[1];
    let m1 = &b[0] * &c[2] - &b[2] * &c[0];
    let m2 = &b[0] * &c[1] - &b[1] * &c[0];
    &a[0] * m0 - &a[1] * m1 + &a[2] * m2
}

/// Integer triple, used for sign tests on rescaled points.
pub(crate) type IntPoint3 = [BigInt; 3];

/// Positive rescaling of `coords` to a primitive integer vector.
pub(crate) fn primitive_ints(coords: &[Scalar]) -> Vec<BigInt> {
    let lcm = coords.iter().fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coords.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &gcd).collect()
}

/// Integer points `d * p` for the least common denominator `d` of all
/// coordinates; returns the points and `d`.
pub(crate) fn common_scaled3<'a, I: IntoIterator<Item = &'a [Scalar]>>(points: I) -> (Vec<IntPoint3>, BigInt) {
    let points: Vec<&[Scalar]> = points.into_iter().collect();
    let one = BigInt::from(1);
    let mut d = one.clone();
    for c in points.iter().flat_map(|p| p.iter()) {
        if c.denom() != &one {
            d = d.lcm(c.denom());
        }
    }
    let scale = |c: &Scalar| if d == one { c.numer().clone() } else { c.numer() * (&d / c.denom()) };
    let ints = points.iter().map(|p| [scale(&p[0]), scale(&p[1]), scale(&p[2])]).collect();
    (ints, d)
}

pub(crate) fn primitive3(p: &Point3) -> IntPoint3 {
    let v = primitive_ints(p);
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

pub(crate) fn idet3(a: &IntPoint3, b: &IntPoint3, c: &IntPoint3) -> BigInt {
    let m0 = &b[1] * &c[2] - &b[2] * &c[1];
    let m1 = &b[0] * &c[2] - &b[2] * &c[0];
    let m2 = &b[0] * &c[1] - &b[1] * &c[0];
    &a[0] * m0 - &a[1] * m1 + &a[2] * m2
}

pub(crate) fn icross3(a: &IntPoint3, b: &IntPoint3) -> IntPoint3 {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub(crate) fn idot3(a: &IntPoint3, b: &IntPoint3) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub(crate) fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `w = lambda * v` with `lambda > 0`, for integer vectors.
pub(crate) fn int_positively_collinear(v: &[BigInt], w: &[BigInt]) -> bool {
    let Some(k) = v.iter().position(|c| !c.is_zero()) else { return false };
    if w[k].sign() != v[k].sign() {
        return false;
    }
    v.iter().zip(w).all(|(a, b)| &w[k] * a == &v[k] * b)
}

/// Rank of integer vectors, capped at 4, with the indices of a greedy
/// first-seen basis. Fraction-free elimination.
pub(crate) fn int_rank_basis(vectors: &[&[BigInt]]) -> (usize, Vec<usize>) {
    let mut rows: Vec<(usize, Vec<BigInt>)> = Vec::new();
    let mut basis = Vec::new();
    for (index, v) in vectors.iter().enumerate() {
        let mut r = v.to_vec();
        for (pivot, row) in &rows {
            if r[*pivot].is_zero() {
                continue;
            }
            let (a, b) = (row[*pivot].clone(), r[*pivot].clone());
            for (x, y) in r.iter_mut().zip(row) {
                *x = &*x * &a - y * &b;
            }
            let g = r.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if !g.is_zero() {
                r.iter_mut().for_each(|x| *x /= &g);
            }
        }
        if let Some(p) = r.iter().position(|x| !x.is_zero()) {
            rows.push((p, r));
            basis.push(index);
            if rows.len() > 3 {
                return (4, Vec::new());
            }
        }
    }
    (basis.len(), basis)
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub(crate) fn int_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let k = m.len();
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for col in 0..k {
        let Some(p) = (col..k).find(|&r| !m[r][col].is_zero()) else {
            return BigInt::zero();
        };
        if p != col {
            m.swap(p, col);
            sign = -sign;
        }
        for r in col + 1..k {
            for c in col + 1..k {
                let v = &m[r][c] * &m[col][col] - &m[r][col] * &m[col][c];
                m[r][c] = v / &prev;
            }
        }
        prev = m[col][col].clone();
    }
    if k == 0 {
        return sign;
    }
    sign * &m[k - 1][k - 1]
}

/// An oriented 2-subspace given by an ordered basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneFrame {
    e1: Vector,
    e2: Vector,
}

impl PlaneFrame {
    pub fn new(e1: Vector, e2: Vector) -> Result<Self, KernelError> {
        if e1.dim() != e2.dim() {
            return Err(KernelError::DimensionMismatch(e1.dim(), e2.dim()));
        }
        let (rank, _) = rank_le3(&[&e1, &e2]);
        if rank != 2 {
            return Err(KernelError::DependentFrame);
        }
        Ok(PlaneFrame { e1, e2 })
    }

    pub fn basis(&self) -> (&Vector, &Vector) {
        (&self.e1, &self.e2)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        v.dim() == self.e1.dim() && rank_le3(&[&self.e1, &self.e2, v]).0 == 2
    }

    /// Orientation of `(a, b)` without checking that they lie in the plane.
    ///
    /// The Gram matrix of the frame is positive definite, so the sign of the
    /// determinant of the dot-product matrix equals the sign of the
    /// determinant of the true frame coordinates.
    pub(crate) fn orient_unchecked(&self, a: &Vector, b: &Vector) -> Sign {
        let a1 = self.e1.dot(a);
        let a2 = self.e2.dot(a);
        let b1 = self.e1.dot(b);
        let b2 = self.e2.dot(b);
        Sign::of(&(a1 * b2 - a2 * b1))
    }
}

/// Orientation of the pair `(a, b)` relative to the frame's orientation.
pub fn orient2(frame: &PlaneFrame, a: &Vector, b: &Vector) -> Result<Sign, KernelError> {
    if !frame.contains(a) || !frame.contains(b) {
        return Err(KernelError::NotInPlane);
    }
    Ok(frame.orient_unchecked(a, b))
}

/// Incremental row echelon form used for rank tests.
#[derive(Debug, Clone, Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl Echelon {
    pub(crate) fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the rows so far. Returns whether it was added.
    pub(crate) fn insert(&mut self, v: &[Scalar]) -> bool {
        let mut r: Vec<Scalar> = v.to_vec();
        for (pivot, row) in &self.rows {
            if r[*pivot].is_zero() {
                continue;
            }
            let k = r[*pivot].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &k * y;
                }
            }
        }
        match r.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = r[p].recip();
                for x in r.iter_mut() {
                    if !x.is_zero() {
                        *x *= &inv;
                    }
                }
                self.rows.push((p, r));
                true
            }
        }
    }
}

/// Rank of `vectors`, capped at 4, with a greedy first-seen basis.
///
/// A vector joins the basis iff it is independent of the current basis. When
/// the rank exceeds three the value 4 is returned together with an empty basis.
pub fn rank_le3<'a>(vectors: &[&'a Vector]) -> (usize, Vec<&'a Vector>) {
    let mut ech = Echelon::new();
    let mut basis = Vec::new();
    for v in vectors {
        if ech.insert(v.coords()) {
            if ech.rank() > 3 {
                return (4, Vec::new());
            }
            basis.push(*v);
        }
    }
    (basis.len(), basis)
}

/// Returns `lambda` with `w = lambda * v`, if `w` is a scalar multiple of `v`.
pub fn collinearity_coefficient(v: &Vector, w: &Vector) -> Result<Option<Scalar>, KernelError> {
    if v.dim() != w.dim() {
        return Err(KernelError::DimensionMismatch(v.dim(), w.dim()));
    }
    let Some(k) = v.coords().iter().position(|c| !c.is_zero()) else {
        return Err(KernelError::ZeroVector);
    };
    let lambda = &w[k] / &v[k];
    let ok = v
        .coords()
        .iter()
        .zip(w.coords())
        .all(|(a, b)| &lambda * a == *b);
    Ok(ok.then_some(lambda))
}

/// True when `w = lambda * v` for some `lambda > 0`. Both are assumed nonzero.
pub(crate) fn positively_collinear(v: &Vector, w: &Vector) -> bool {
    matches!(collinearity_coefficient(v, w), Ok(Some(l)) if l.is_positive())
}

/// Gram coordinates `(e1.v, e2.v, e3.v)`.
pub fn coords_in_basis(v: &Vector, e1: &Vector, e2: &Vector, e3: &Vector) -> Point3 {
    [e1.dot(v), e2.dot(v), e3.dot(v)]
}

/// Parses `p/q`, an integer, or a decimal literal (optionally with an
/// exponent) into an exact rational. Decimals are read as `p / 10^k`.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Scalar::new(p, q));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], text[i + 1..].parse::<i32>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut numer: BigInt = if all.is_empty() { BigInt::zero() } else { all.parse().ok()? };
    if negative {
        numer = -numer;
    }
    let shift = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if shift >= 0 {
        Scalar::from_integer(numer * num_traits::pow(ten, shift as usize))
    } else {
        Scalar::new(numer, num_traits::pow(ten, (-shift) as usize))
    };
    Some(value)
}

#[cfg(test)]
pub(crate) fn int(x: i64) -> Scalar {
    Scalar::from_integer(x.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p3(a: i64, b: i64, c: i64) -> Point3 {
        [int(a), int(b), int(c)]
    }

    fn v(c: &[i64]) -> Vector {
        Vector::from_ints(c.iter().copied())
    }

    #[test]
    fn det3_examples() {
        assert_eq!(sign_det3(&p3(1, 0, 0), &p3(0, 1, 0), &p3(0, 0, 1)), Sign::Positive);
        assert_eq!(sign_det3(&p3(1, 0, 0), &p3(0, 1, 0), &p3(1, 1, 0)), Sign::Zero);
        assert_eq!(sign_det3(&p3(0, 1, 0), &p3(1, 0, 0), &p3(0, 0, 1)), Sign::Negative);
    }

    #[test]
    fn orient2_examples() {
        let frame = PlaneFrame::new(v(&[1, 0, 0]), v(&[0, 1, 0])).unwrap();
        assert_eq!(orient2(&frame, &v(&[1, 0, 0]), &v(&[0, 1, 0])), Ok(Sign::Positive));
        assert_eq!(orient2(&frame, &v(&[1, 0, 0]), &v(&[2, 0, 0])), Ok(Sign::Zero));
        assert_eq!(orient2(&frame, &v(&[0, 1, 0]), &v(&[1, 0, 0])), Ok(Sign::Negative));
        assert_eq!(
            orient2(&frame, &v(&[0, 1, 1]), &v(&[1, 0, 0])),
            Err(KernelError::NotInPlane)
        );
    }

    #[test]
    fn orient2_tilted_frame() {
        // frame in the plane x = y in R^4
        let frame = PlaneFrame::new(v(&[1, 1, 0, 0]), v(&[0, 0, 0, 3])).unwrap();
        let a = v(&[2, 2, 0, 0]);
        let b = v(&[1, 1, 0, 5]);
        assert_eq!(orient2(&frame, &a, &b), Ok(Sign::Positive));
        assert_eq!(orient2(&frame, &b, &a), Ok(Sign::Negative));
    }

    #[test]
    fn rank_examples() {
        let a = v(&[1, 0, 0]);
        let b = v(&[2, 0, 0]);
        let (r, basis) = rank_le3(&[&a, &b]);
        assert_eq!((r, basis), (1, vec![&a]));

        let c = v(&[0, 1, 0]);
        let d = v(&[1, 1, 0]);
        let (r, basis) = rank_le3(&[&a, &c, &d]);
        assert_eq!((r, basis), (2, vec![&a, &c]));

        assert_eq!(rank_le3(&[]), (0, vec![]));

        let e: Vec<Vector> = (0..5)
            .map(|i| Vector::from_ints((0..5).map(|j| i64::from(i == j))))
            .collect();
        let refs: Vec<&Vector> = e.iter().collect();
        assert_eq!(rank_le3(&refs).0, 4);
    }

    #[test]
    fn collinearity_examples() {
        let base = v(&[1, 2, 0]);
        assert_eq!(collinearity_coefficient(&base, &v(&[2, 4, 0])), Ok(Some(int(2))));
        assert_eq!(collinearity_coefficient(&base, &v(&[-1, -2, 0])), Ok(Some(int(-1))));
        assert_eq!(collinearity_coefficient(&base, &v(&[1, 0, 0])), Ok(None));
        assert_eq!(
            collinearity_coefficient(&v(&[0, 0, 0]), &v(&[1, 0, 0])),
            Err(KernelError::ZeroVector)
        );
    }

    #[test]
    fn gram_coordinate_examples() {
        let (e1, e2, e3) = (v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]));
        assert_eq!(coords_in_basis(&v(&[0, 0, 1]), &e1, &e2, &e3), p3(0, 0, 1));
        assert_eq!(coords_in_basis(&v(&[1, 1, 0]), &e1, &e2, &e3), p3(1, 1, 0));
        let (f1, f2, f3) = (v(&[1, 1, 0, 0]), v(&[0, 1, 0, 0]), v(&[0, 0, 1, 0]));
        assert_eq!(coords_in_basis(&v(&[1, 0, 0, 0]), &f1, &f2, &f3), p3(1, 0, 0));
    }

    #[test]
    fn scalar_literals() {
        assert_eq!(parse_scalar("3"), Some(int(3)));
        assert_eq!(parse_scalar("-3/6"), Some(Scalar::new((-1).into(), 2.into())));
        assert_eq!(parse_scalar("1.25"), Some(Scalar::new(5.into(), 4.into())));
        assert_eq!(parse_scalar("-.5"), Some(Scalar::new((-1).into(), 2.into())));
        assert_eq!(parse_scalar("2e3"), Some(int(2000)));
        assert_eq!(parse_scalar("1.5E-2"), Some(Scalar::new(3.into(), 200.into())));
        assert_eq!(parse_scalar("1/0"), None);
        assert_eq!(parse_scalar("abc"), None);
        assert_eq!(parse_scalar("."), None);
    }

    // Independent Gaussian elimination over i128 fractions-free (Bareiss) for rank.
    fn oracle_rank(rows: &[Vec<i64>]) -> usize {
        let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let cols = m.first().map_or(0, Vec::len);
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && m[r][col] != 0 {
                    let (a, b) = (m[rank][col], m[r][col]);
                    for c in 0..cols {
                        m[r][c] = m[r][c] * a - m[rank][c] * b;
                    }
                    let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                    if g > 1 {
                        for x in m[r].iter_mut() {
                            *x /= g;
                        }
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 { a } else { gcd(b, a % b) }
    }

    fn small_vec3() -> impl Strategy<Value = Point3> {
        prop::array::uniform3(-6i64..=6).prop_map(|[a, b, c]| [int(a), int(b), int(c)])
    }

    proptest! {
        #[test]
        fn det3_antisymmetric(a in small_vec3(), b in small_vec3(), c in small_vec3()) {
            prop_assert_eq!(sign_det3(&a, &b, &c), -sign_det3(&b, &a, &c));
            prop_assert_eq!(sign_det3(&a, &b, &c), -sign_det3(&a, &c, &b));
        }

        #[test]
        fn det3_positive_row_scaling(a in small_vec3(), b in small_vec3(), c in small_vec3(), k in 1i64..50, d in 1i64..50) {
            let factor = Scalar::new(k.into(), d.into());
            let scaled = [&a[0] * &factor, &a[1] * &factor, &a[2] * &factor];
            prop_assert_eq!(sign_det3(&a, &b, &c), sign_det3(&scaled, &b, &c));
        }

        #[test]
        fn rank_matches_oracle(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 0..=6)) {
            let vs: Vec<Vector> = rows.iter().map(|r| Vector::from_ints(r.iter().copied())).collect();
            let refs: Vec<&Vector> = vs.iter().collect();
            let (rank, basis) = rank_le3(&refs);
            prop_assert_eq!(rank, oracle_rank(&rows).min(4));
            if rank <= 3 {
                prop_assert_eq!(basis.len(), rank);
            }
        }

        // Gram coordinates preserve orientation inside span(e1, e2, e3).
        #[test]
        fn gram_coordinates_preserve_orientation(
            basis in prop::array::uniform3(prop::collection::vec(-4i64..=4, 5)),
            coeffs in prop::array::uniform3(prop::array::uniform3(-4i64..=4)),
        ) {
            let es: Vec<Vector> = basis.iter().map(|r| Vector::from_ints(r.iter().copied())).collect();
            let refs: Vec<&Vector> = es.iter().collect();
            prop_assume!(rank_le3(&refs).0 == 3);
            let combine = |c: &[i64; 3]| {
                es[0].scale(&int(c[0])).add_scaled(&int(c[1]), &es[1]).add_scaled(&int(c[2]), &es[2])
            };
            let u = combine(&coeffs[0]);
            let w = combine(&coeffs[1]);
            let x = combine(&coeffs[2]);
            let gram = |y: &Vector| coords_in_basis(y, &es[0], &es[1], &es[2]);
            let via_gram = sign_det3(&gram(&u), &gram(&w), &gram(&x));
            // orientation within the 3-space is the sign of the coefficient determinant
            let c = |r: &[i64; 3]| [int(r[0]), int(r[1]), int(r[2])];
            let via_coeffs = sign_det3(&c(&coeffs[0]), &c(&coeffs[1]), &c(&coeffs[2]));
            prop_assert_eq!(via_gram, via_coeffs);
        }
    }
}
