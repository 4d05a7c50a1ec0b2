use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{GeometryError, Point, PointSet, Segment};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Clockwise,
    Collinear,
    CounterClockwise,
}

impl Orientation {
    pub fn sign(self) -> i8 {
        match self {
            Orientation::Clockwise => -1,
            Orientation::Collinear => 0,
            Orientation::CounterClockwise => 1,
        }
    }

    fn from_sign(s: i8) -> Self {
        match s {
            s if s < 0 => Orientation::Clockwise,
            0 => Orientation::Collinear,
            _ => Orientation::CounterClockwise,
        }
    }
}

// |coordinate| below 2^61 keeps every intermediate of the determinant in i128.
const FAST_LIMIT: i64 = 1 << 61;

fn small_int(v: &BigRational) -> Option<i128> {
    if !v.is_integer() {
        return None;
    }
    let n = v.numer().to_i64()?;
    (n.abs() < FAST_LIMIT).then_some(n as i128)
}

fn small_coords(p: &Point) -> Option<(i128, i128)> {
    Some((small_int(&p.x)?, small_int(&p.y)?))
}

fn homogeneous(p: &Point) -> [BigInt; 3] {
    [p.x.numer() * p.y.denom(), p.y.numer() * p.x.denom(), p.x.denom() * p.y.denom()]
}

// three-term products of entries below 2^41 stay clear of i128 overflow
const HOMOGENEOUS_LIMIT: i64 = 1 << 41;

fn small_homogeneous(h: &[BigInt; 3]) -> Option<[i128; 3]> {
    let mut out = [0i128; 3];
    for (o, v) in out.iter_mut().zip(h) {
        let v = v.to_i64()?;
        if v.abs() >= HOMOGENEOUS_LIMIT {
            return None;
        }
        *o = v as i128;
    }
    Some(out)
}

/// Sign of the signed area of triangle `pqr` (positive = counterclockwise).
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    if let (Some(a), Some(b), Some(c)) = (small_coords(p), small_coords(q), small_coords(r)) {
        let det = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
        return Orientation::from_sign(det.signum() as i8);
    }
    // rational points: the 3x3 determinant of homogeneous integer
    // coordinates, whose weights are positive, has the same sign
    let (hp, hq, hr) = (homogeneous(p), homogeneous(q), homogeneous(r));
    if let (Some(a), Some(b), Some(c)) = (small_homogeneous(&hp), small_homogeneous(&hq), small_homogeneous(&hr)) {
        let det = a[0] * (b[1] * c[2] - c[1] * b[2]) - a[1] * (b[0] * c[2] - c[0] * b[2]) + a[2] * (b[0] * c[1] - c[0] * b[1]);
        return Orientation::from_sign(det.signum() as i8);
    }
    let (a, b, c) = (&hp, &hq, &hr);
    let det = &a[0] * (&b[1] * &c[2] - &c[1] * &b[2]) - &a[1] * (&b[0] * &c[2] - &c[0] * &b[2])
        + &a[2] * (&b[0] * &c[1] - &c[0] * &b[1]);
    Orientation::from_sign(if det.is_positive() {
        1
    } else if det.is_negative() {
        -1
    } else {
        0
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntersectionKind {
    Disjoint,
    /// The segments share exactly this endpoint (a point index).
    SharedEndpoint(usize),
    /// The relative interiors cross at this point.
    Crossing(Point),
}

impl IntersectionKind {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, IntersectionKind::Disjoint)
    }
}

/// Classifies how two distinct segments of `ps` meet.
pub fn intersection_kind(s1: &Segment, s2: &Segment, ps: &PointSet) -> Result<IntersectionKind, GeometryError> {
    ps.check_segment(s1)?;
    ps.check_segment(s2)?;
    classify_segments(s1, s2, ps.points())
}

/// Same as [`intersection_kind`] over a raw point slice. The slice is not
/// re-validated; collinear contacts are reported as `DegenerateOverlap`.
pub fn classify_segments(s1: &Segment, s2: &Segment, points: &[Point]) -> Result<IntersectionKind, GeometryError> {
    if s1 == s2 {
        return Err(GeometryError::DegenerateOverlap(*s1, *s2));
    }
    if let Some(shared) = s1.shared_endpoint(s2) {
        let o = &points[shared];
        let u = &points[s1.other(shared)];
        let v = &points[s2.other(shared)];
        if orientation(o, u, v) == Orientation::Collinear {
            return Err(GeometryError::DegenerateOverlap(*s1, *s2));
        }
        return Ok(IntersectionKind::SharedEndpoint(shared));
    }
    let (a, b) = (&points[s1.lo()], &points[s1.hi()]);
    let (c, d) = (&points[s2.lo()], &points[s2.hi()]);
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if [o1, o2, o3, o4].contains(&Orientation::Collinear) {
        return Err(GeometryError::DegenerateOverlap(*s1, *s2));
    }
    if o1 != o2 && o3 != o4 {
        Ok(IntersectionKind::Crossing(line_intersection(a, b, c, d)))
    } else {
        Ok(IntersectionKind::Disjoint)
    }
}

/// Intersection of the (non-parallel) lines `ab` and `cd`.
pub(crate) fn line_intersection(a: &Point, b: &Point, c: &Point, d: &Point) -> Point {
    let ab = b.sub(a);
    let cd = d.sub(c);
    let denom = ab.cross(&cd);
    debug_assert!(!denom.is_zero());
    let t = c.sub(a).cross(&cd) / denom;
    a.add(&ab.scale(&t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn big(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)).sign(), 1);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)).sign(), 0);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)).sign(), -1);
    }

    #[test]
    fn orientation_rational_and_huge() {
        let half = Point::new(big(1) / big(2), big(1) / big(2));
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &half), Orientation::Collinear);
        let huge = Point::new(big(i64::MAX), big(i64::MAX));
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &huge), Orientation::Collinear);
        let huge_off = Point::new(big(i64::MAX), big(i64::MAX - 1));
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &huge_off), Orientation::Clockwise);
    }

    #[test]
    fn intersection_examples() {
        let ps = PointSet::from_ints(&[(-1, 0), (1, 0), (0, -1), (0, 1)]).unwrap();
        assert_eq!(
            intersection_kind(&Segment::new(0, 1), &Segment::new(2, 3), &ps).unwrap(),
            IntersectionKind::Crossing(p(0, 0))
        );
        let ps = PointSet::from_ints(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        assert_eq!(
            intersection_kind(&Segment::new(0, 1), &Segment::new(0, 2), &ps).unwrap(),
            IntersectionKind::SharedEndpoint(0)
        );
        let ps = PointSet::from_ints(&[(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap();
        assert_eq!(
            intersection_kind(&Segment::new(0, 1), &Segment::new(2, 3), &ps).unwrap(),
            IntersectionKind::Disjoint
        );
    }

    #[test]
    fn crossing_point_is_exact() {
        let ps = PointSet::from_ints(&[(0, 0), (3, 1), (0, 1), (1, 0)]).unwrap();
        let IntersectionKind::Crossing(o) = intersection_kind(&Segment::new(0, 1), &Segment::new(2, 3), &ps).unwrap()
        else {
            panic!("expected a crossing");
        };
        assert_eq!(o, Point::new(big(3) / big(4), big(1) / big(4)));
    }

    #[test]
    fn degenerate_overlap_reported() {
        let pts = vec![p(0, 0), p(2, 0), p(1, 0), p(3, 0)];
        assert!(matches!(
            classify_segments(&Segment::new(0, 1), &Segment::new(2, 3), &pts),
            Err(GeometryError::DegenerateOverlap(..))
        ));
        assert!(matches!(
            classify_segments(&Segment::new(0, 1), &Segment::new(0, 2), &pts),
            Err(GeometryError::DegenerateOverlap(..))
        ));
    }

    fn coord() -> impl Strategy<Value = i64> {
        -1000i64..1000
    }

    proptest! {
        #[test]
        fn orientation_antisymmetric(a in (coord(), coord()), b in (coord(), coord()), c in (coord(), coord())) {
            let (a, b, c) = (p(a.0, a.1), p(b.0, b.1), p(c.0, c.1));
            let s = orientation(&a, &b, &c).sign();
            prop_assert_eq!(orientation(&b, &a, &c).sign(), -s);
            prop_assert_eq!(orientation(&a, &c, &b).sign(), -s);
            prop_assert_eq!(orientation(&c, &b, &a).sign(), -s);
            prop_assert_eq!(orientation(&b, &c, &a).sign(), s);
        }

        #[test]
        fn fast_path_matches_rational_path(a in (coord(), coord()), b in (coord(), coord()), c in (coord(), coord())) {
            let (a, b, c) = (p(a.0, a.1), p(b.0, b.1), p(c.0, c.1));
            let det = b.sub(&a).cross(&c.sub(&a));
            prop_assert_eq!(orientation(&a, &b, &c).sign(), crate::geometry::sign_of(&det));
        }

        #[test]
        fn homogeneous_paths_match_rational_arithmetic(
            v in proptest::collection::vec((coord(), 1i64..50, coord(), 1i64..50), 3),
            scale in 0u32..3,
        ) {
            // scale pushes some inputs past the word-sized path
            let m = BigInt::from(10).pow(12 * scale);
            let pts: Vec<Point> = v
                .iter()
                .map(|&(x, dx, y, dy)| Point::new(big(x) * &m / big(dx), big(y) / big(dy)))
                .collect();
            let det = pts[1].sub(&pts[0]).cross(&pts[2].sub(&pts[0]));
            prop_assert_eq!(orientation(&pts[0], &pts[1], &pts[2]).sign(), crate::geometry::sign_of(&det));
        }

        #[test]
        fn intersection_symmetric(pts in proptest::collection::vec((coord(), coord()), 4)) {
            let pts: Vec<Point> = pts.iter().map(|&(x, y)| p(x, y)).collect();
            prop_assume!(crate::geometry::validate_general_position(&pts).is_ok());
            let ps = PointSet::new(pts).unwrap();
            let segs = ps.segments();
            for s in &segs {
                for t in &segs {
                    if s != t {
                        let st = intersection_kind(s, t, &ps).unwrap();
                        let ts = intersection_kind(t, s, &ps).unwrap();
                        prop_assert_eq!(st, ts);
                    }
                }
            }
        }
    }
}
