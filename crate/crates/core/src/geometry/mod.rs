//! Exact planar primitives over arbitrary-precision rationals.
//!
//! Nothing in this module touches floating point. Integer inputs take an
//! `i128` fast path inside [`orientation`]; everything else goes through
//! [`BigRational`].

mod hull;
mod io;
mod predicates;
mod radial;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use hull::{hull_mask, hull_points};
pub(crate) use hull::ray_exit;
pub use io::{format_rational, parse_json, parse_rational, parse_text, to_json, to_text, ParseError};
pub use predicates::{classify_segments, intersection_kind, orientation, IntersectionKind, Orientation};
pub use radial::{radial_order, radial_order_with_ties, Rotation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("point set needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),
    #[error("points {0}, {1} and {2} are collinear")]
    CollinearTriple(usize, usize, usize),
    #[error("segments {0} and {1} overlap or touch collinearly (input not in general position)")]
    DegenerateOverlap(Segment, Segment),
    #[error("points {0} and {1} lie on a common ray from the center")]
    TiedAngle(usize, usize),
    #[error("a radial order needs a center distinct from every point (point {0} coincides)")]
    CenterCoincides(usize),
    #[error("segment endpoint {0} out of range for {1} points")]
    IndexOutOfRange(usize, usize),
}

/// A point (or a free vector) with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }

    pub fn origin() -> Self {
        Point::new(BigRational::zero(), BigRational::zero())
    }

    pub fn is_integral(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }

    /// `self - other`, as a vector.
    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn scale(&self, t: &BigRational) -> Point {
        Point::new(&self.x * t, &self.y * t)
    }

    pub fn neg(&self) -> Point {
        Point::new(-&self.x, -&self.y)
    }

    /// z-component of the cross product of two vectors.
    pub fn cross(&self, other: &Point) -> BigRational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn dot(&self, other: &Point) -> BigRational {
        &self.x * &other.x + &self.y * &other.y
    }

    pub fn norm2(&self) -> BigRational {
        self.dot(self)
    }

    /// Point on the ray from `origin` through `self`, at parameter `t`
    /// (`t = 1` returns `self`).
    pub fn along_ray_from(&self, origin: &Point, t: &BigRational) -> Point {
        origin.add(&self.sub(origin).scale(t))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rational(&self.x), format_rational(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Closed segment between two points of a [`PointSet`], stored as a
/// canonical index pair `lo < hi`.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Segment {
    lo: usize,
    hi: usize,
}

impl Segment {
    /// Panics if `i == j`.
    pub fn new(i: usize, j: usize) -> Self {
        Self::try_new(i, j).expect("segment endpoints must differ")
    }

    pub fn try_new(i: usize, j: usize) -> Option<Self> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Some(Segment { lo: i, hi: j }),
            std::cmp::Ordering::Greater => Some(Segment { lo: j, hi: i }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn endpoints(&self) -> [usize; 2] {
        [self.lo, self.hi]
    }

    pub fn has_endpoint(&self, i: usize) -> bool {
        self.lo == i || self.hi == i
    }

    /// The endpoint shared with `other`, if exactly one is shared.
    pub fn shared_endpoint(&self, other: &Segment) -> Option<usize> {
        if self == other {
            return None;
        }
        [self.lo, self.hi].into_iter().find(|&e| other.has_endpoint(e))
    }

    /// The endpoint that is not `i`. Panics if `i` is not an endpoint.
    pub fn other(&self, i: usize) -> usize {
        if self.lo == i {
            self.hi
        } else if self.hi == i {
            self.lo
        } else {
            panic!("{i} is not an endpoint of {self}")
        }
    }
}

impl From<Segment> for [usize; 2] {
    fn from(s: Segment) -> Self {
        [s.lo, s.hi]
    }
}

impl TryFrom<[usize; 2]> for Segment {
    type Error = String;

    fn try_from(v: [usize; 2]) -> Result<Self, Self::Error> {
        Segment::try_new(v[0], v[1]).ok_or_else(|| format!("degenerate segment [{}, {}]", v[0], v[1]))
    }
}

impl fmt::Debug for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo, self.hi)
    }
}

/// Checks that `points` has no duplicates and no collinear triple.
///
/// Duplicates are reported before collinearities; within each kind the
/// lexicographically first offending tuple wins.
pub fn validate_general_position(points: &[Point]) -> Result<(), GeometryError> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Err(GeometryError::DuplicatePoint(i, j));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orientation(&points[i], &points[j], &points[k]) == Orientation::Collinear {
                    return Err(GeometryError::CollinearTriple(i, j, k));
                }
            }
        }
    }
    Ok(())
}

/// Whether `candidate` can join `points` without breaking general position.
pub fn extends_general_position(points: &[Point], candidate: &Point) -> bool {
    if points.iter().any(|p| p == candidate) {
        return false;
    }
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if orientation(&points[i], &points[j], candidate) == Orientation::Collinear {
                return false;
            }
        }
    }
    true
}

/// A validated set of at least three points in general position.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, GeometryError> {
        if points.len() < 3 {
            return Err(GeometryError::TooFewPoints(points.len()));
        }
        validate_general_position(&points)?;
        Ok(PointSet { points })
    }

    /// Skips validation; callers must already know the points are in
    /// general position.
    pub(crate) fn from_validated(points: Vec<Point>) -> Self {
        debug_assert!(validate_general_position(&points).is_ok());
        PointSet { points }
    }

    pub fn from_ints(coords: &[(i64, i64)]) -> Result<Self, GeometryError> {
        Self::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// Clockwise hull cycle.
    pub fn hull(&self) -> Vec<usize> {
        hull_points(&self.points)
    }

    /// `mask[i]` is true iff point `i` is a hull vertex.
    pub fn hull_mask(&self) -> Vec<bool> {
        hull_mask(&self.points)
    }

    /// All `C(n, 2)` segments in lexicographic order.
    pub fn segments(&self) -> Vec<Segment> {
        let n = self.len();
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(Segment { lo: i, hi: j });
            }
        }
        out
    }

    /// The set without point `i`; indices above `i` shift down by one.
    pub fn without(&self, i: usize) -> Option<PointSet> {
        let mut pts = self.points.clone();
        pts.remove(i);
        PointSet::new(pts).ok()
    }

    pub fn check_segment(&self, s: &Segment) -> Result<(), GeometryError> {
        if s.hi >= self.len() {
            return Err(GeometryError::IndexOutOfRange(s.hi, self.len()));
        }
        Ok(())
    }
}

pub(crate) fn two_pow(k: i32) -> BigRational {
    let base = BigRational::from_integer(BigInt::from(2));
    if k >= 0 {
        num_traits::pow(base, k as usize)
    } else {
        BigRational::one() / num_traits::pow(base, (-k) as usize)
    }
}

pub(crate) fn sign_of(v: &BigRational) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}
