use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{GeometryError, Point};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Rotation {
    Clockwise,
    CounterClockwise,
}

impl Rotation {
    pub fn reversed(self) -> Self {
        match self {
            Rotation::Clockwise => Rotation::CounterClockwise,
            Rotation::CounterClockwise => Rotation::Clockwise,
        }
    }

    /// +1 for counterclockwise, -1 for clockwise: the sign a cross product
    /// `u x v` takes when `v` follows `u` in this rotation.
    fn turn_sign(self) -> i8 {
        match self {
            Rotation::Clockwise => -1,
            Rotation::CounterClockwise => 1,
        }
    }
}

/// Half-plane index of `v` relative to the reference direction: 0 for the
/// half swept first by `rotation` (the reference ray itself included).
fn half(reference: &Point, v: &Point, rotation: Rotation) -> u8 {
    let c = super::sign_of(&reference.cross(v));
    if c == rotation.turn_sign() || (c == 0 && reference.dot(v).is_positive()) {
        0
    } else {
        1
    }
}

/// Compares two nonzero vectors by their angle from `reference`, sweeping in
/// `rotation`. `Equal` means same ray.
fn angular_cmp(reference: &Point, u: &Point, v: &Point, rotation: Rotation) -> Ordering {
    let hu = half(reference, u, rotation);
    let hv = half(reference, v, rotation);
    if hu != hv {
        return hu.cmp(&hv);
    }
    let c = super::sign_of(&u.cross(v));
    if c == 0 {
        Ordering::Equal
    } else if c == rotation.turn_sign() {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Indices of `pts` sorted by angle around `center`, starting at the
/// direction `start` (inclusive) and sweeping in `rotation`.
///
/// Fails with `TiedAngle` when two points lie on the same ray from the
/// center.
pub fn radial_order(
    center: &Point,
    pts: &[Point],
    start: &Point,
    rotation: Rotation,
) -> Result<Vec<usize>, GeometryError> {
    let order = sorted(center, pts, start, rotation)?;
    for w in order.windows(2) {
        let (u, v) = (pts[w[0]].sub(center), pts[w[1]].sub(center));
        if angular_cmp(start, &u, &v, rotation) == Ordering::Equal {
            return Err(GeometryError::TiedAngle(w[0].min(w[1]), w[0].max(w[1])));
        }
    }
    Ok(order)
}

/// Like [`radial_order`] but points on a common ray are ordered by
/// increasing distance from the center instead of failing.
pub fn radial_order_with_ties(
    center: &Point,
    pts: &[Point],
    start: &Point,
    rotation: Rotation,
) -> Result<Vec<usize>, GeometryError> {
    sorted(center, pts, start, rotation)
}

fn sorted(center: &Point, pts: &[Point], start: &Point, rotation: Rotation) -> Result<Vec<usize>, GeometryError> {
    let vecs: Vec<Point> = pts.iter().map(|p| p.sub(center)).collect();
    if let Some(i) = vecs.iter().position(|v| v.x.is_zero() && v.y.is_zero()) {
        return Err(GeometryError::CenterCoincides(i));
    }
    let mut order: Vec<usize> = (0..pts.len()).collect();
    // Scaling every vector by one positive integer keeps all angles, so the
    // sort runs on integer vectors (machine words when they are small).
    let mut all = vecs.clone();
    all.push(start.clone());
    let ints = integer_vectors(&all);
    let turn = rotation.turn_sign() as i32;
    match small_vectors(&ints) {
        Some(v) => {
            let r = v[v.len() - 1];
            order.sort_by(|&i, &j| angular_key_cmp(r, v[i], v[j], turn).then(i.cmp(&j)));
        }
        None => {
            let r = &ints[ints.len() - 1];
            order.sort_by(|&i, &j| big_angular_cmp(r, &ints[i], &ints[j], turn).then(i.cmp(&j)));
        }
    }
    Ok(order)
}

type IntVec = (BigInt, BigInt);

fn integer_vectors(vs: &[Point]) -> Vec<IntVec> {
    let l = vs.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.x.denom()).lcm(v.y.denom()));
    vs.iter()
        .map(|v| (v.x.numer() * (&l / v.x.denom()), v.y.numer() * (&l / v.y.denom())))
        .collect()
}

fn small_vectors(vs: &[IntVec]) -> Option<Vec<(i128, i128)>> {
    let limit = 1i64 << 62;
    vs.iter()
        .map(|(x, y)| {
            let (x, y) = (x.to_i64()?, y.to_i64()?);
            (x.abs() < limit && y.abs() < limit).then_some((x as i128, y as i128))
        })
        .collect()
}

fn sign_i(v: i128) -> i32 {
    v.signum() as i32
}

/// Angle from `r` in the sweep, then distance; vectors are at most 2^62 in
/// each coordinate so every product fits.
fn angular_key_cmp(r: (i128, i128), u: (i128, i128), v: (i128, i128), turn: i32) -> Ordering {
    let cross = |a: (i128, i128), b: (i128, i128)| a.0 * b.1 - a.1 * b.0;
    let dot = |a: (i128, i128), b: (i128, i128)| a.0 * b.0 + a.1 * b.1;
    let half = |w: (i128, i128)| {
        let c = sign_i(cross(r, w));
        u8::from(!(c == turn || (c == 0 && dot(r, w) > 0)))
    };
    let (hu, hv) = (half(u), half(v));
    if hu != hv {
        return hu.cmp(&hv);
    }
    let c = sign_i(cross(u, v));
    if c == 0 {
        // same ray: compare lengths through the larger coordinate
        let n = |w: (i128, i128)| w.0.abs().max(w.1.abs());
        n(u).cmp(&n(v))
    } else if c == turn {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn big_angular_cmp(r: &IntVec, u: &IntVec, v: &IntVec, turn: i32) -> Ordering {
    let cross = |a: &IntVec, b: &IntVec| &a.0 * &b.1 - &a.1 * &b.0;
    let dot = |a: &IntVec, b: &IntVec| &a.0 * &b.0 + &a.1 * &b.1;
    let sgn = |x: BigInt| match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    };
    let half = |w: &IntVec| {
        let c = sgn(cross(r, w));
        u8::from(!(c == turn || (c == 0 && sgn(dot(r, w)) > 0)))
    };
    let (hu, hv) = (half(u), half(v));
    if hu != hv {
        return hu.cmp(&hv);
    }
    let c = sgn(cross(u, v));
    if c == 0 {
        let n = |w: &IntVec| w.0.abs().max(w.1.abs());
        n(u).cmp(&n(v))
    } else if c == turn {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    #[test]
    fn four_quadrants_clockwise_from_positive_y() {
        let pts = vec![p(-1, 1), p(1, -1), p(1, 1), p(-1, -1)];
        let order = radial_order(&p(0, 0), &pts, &p(0, 1), Rotation::Clockwise).unwrap();
        let got: Vec<Point> = order.iter().map(|&i| pts[i].clone()).collect();
        assert_eq!(got, vec![p(1, 1), p(1, -1), p(-1, -1), p(-1, 1)]);
        let ccw = radial_order(&p(0, 0), &pts, &p(0, 1), Rotation::CounterClockwise).unwrap();
        let got: Vec<Point> = ccw.iter().map(|&i| pts[i].clone()).collect();
        assert_eq!(got, vec![p(-1, 1), p(-1, -1), p(1, -1), p(1, 1)]);
    }

    #[test]
    fn singleton_and_ties() {
        assert_eq!(radial_order(&p(0, 0), &[p(3, 7)], &p(0, 1), Rotation::Clockwise).unwrap(), vec![0]);
        let tied = vec![p(1, 1), p(2, 2)];
        assert_eq!(
            radial_order(&p(0, 0), &tied, &p(0, 1), Rotation::Clockwise).unwrap_err(),
            GeometryError::TiedAngle(0, 1)
        );
        assert_eq!(
            radial_order_with_ties(&p(0, 0), &[p(2, 2), p(1, 1)], &p(0, 1), Rotation::Clockwise).unwrap(),
            vec![1, 0]
        );
        // opposite rays are not a tie
        assert!(radial_order(&p(0, 0), &[p(1, 1), p(-1, -1)], &p(0, 1), Rotation::Clockwise).is_ok());
        assert!(matches!(
            radial_order(&p(0, 0), &[p(0, 0)], &p(0, 1), Rotation::Clockwise),
            Err(GeometryError::CenterCoincides(0))
        ));
    }

    /// Clockwise angle from +y computed in floating point; only used to
    /// cross-check the exact comparator on well-separated inputs.
    fn float_angle(v: (i64, i64)) -> f64 {
        let a = (v.0 as f64).atan2(v.1 as f64);
        if a < 0.0 {
            a + std::f64::consts::TAU
        } else {
            a
        }
    }

    proptest! {
        #[test]
        fn matches_exhaustive_angle_sort(c in proptest::collection::btree_set((-40i64..40, -40i64..40), 1..15)) {
            let vs: Vec<(i64, i64)> = c.into_iter().filter(|&v| v != (0, 0)).collect();
            prop_assume!(!vs.is_empty());
            let pts: Vec<Point> = vs.iter().map(|&(x, y)| p(x, y)).collect();
            let order = radial_order_with_ties(&p(0, 0), &pts, &p(0, 1), Rotation::Clockwise).unwrap();
            for w in order.windows(2) {
                prop_assert!(float_angle(vs[w[0]]) <= float_angle(vs[w[1]]) + 1e-12);
            }
        }

        #[test]
        fn rotating_start_gives_cyclic_shift(c in proptest::collection::btree_set((-40i64..40, -40i64..40), 2..12), k in 0usize..12) {
            let vs: Vec<(i64, i64)> = c.into_iter().filter(|&v| v != (0, 0)).collect();
            let pts: Vec<Point> = vs.iter().map(|&(x, y)| p(x, y)).collect();
            let base = match radial_order(&p(0, 0), &pts, &p(0, 1), Rotation::Clockwise) {
                Ok(b) => b,
                Err(_) => return Ok(()),
            };
            let k = k % base.len();
            let start = pts[base[k]].clone();
            let shifted = radial_order(&p(0, 0), &pts, &start, Rotation::Clockwise).unwrap();
            let mut expect = base[k..].to_vec();
            expect.extend_from_slice(&base[..k]);
            prop_assert_eq!(shifted, expect);
        }
    }
}
