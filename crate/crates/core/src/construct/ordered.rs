use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use crate::geometry::{Point, Segment};

/// Looks for a line through `o` with `f` strictly on its left and `g`
/// strictly on its right. Returns the line's direction `d`: every endpoint
/// `x` of `f` has `d × (x - o) > 0`, every endpoint of `g` the opposite.
pub fn separating_direction(points: &[Point], f: &Segment, g: &Segment, o: &Point) -> Option<Point> {
    // f on the positive side of a normal w and g on the negative side means
    // all four of these vectors lie in the open half-plane w·x > 0
    let vs: Vec<Point> = f
        .endpoints()
        .iter()
        .map(|&i| points[i].sub(o))
        .chain(g.endpoints().iter().map(|&i| o.sub(&points[i])))
        .collect();
    // a common positive scale turns them into integer vectors
    let l = vs.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.x.denom()).lcm(v.y.denom()));
    let ints: Vec<(BigInt, BigInt)> = vs.iter().map(|v| (v.x.numer() * (&l / v.x.denom()), v.y.numer() * (&l / v.y.denom()))).collect();
    let limit = 1i64 << 60;
    let small: Option<Vec<(i128, i128)>> = ints
        .iter()
        .map(|(x, y)| {
            let (x, y) = (x.to_i64()?, y.to_i64()?);
            (x.abs() < limit && y.abs() < limit).then_some((x as i128, y as i128))
        })
        .collect();
    let w = match small {
        Some(v) => normal_in(&v, |a, b| a.0 * b.0 + a.1 * b.1, |a, b| a.0 * b.1 - a.1 * b.0, |u, v| (v.1 - u.1, u.0 - v.0), |x| *x > 0)
            .map(|w| (BigInt::from(w.0), BigInt::from(w.1))),
        None => normal_in(
            &ints,
            |a, b| &a.0 * &b.0 + &a.1 * &b.1,
            |a, b| &a.0 * &b.1 - &a.1 * &b.0,
            |u, v| (&v.1 - &u.1, &u.0 - &v.0),
            |x| x.is_positive(),
        ),
    }?;
    Some(Point::new(BigRational::from_integer(w.1), BigRational::from_integer(-w.0)))
}

/// A vector `w` with `w · v > 0` for every `v`, if the vectors fit in an
/// open half-plane. Tries each `v` and, for each pair with `u × v > 0`,
/// the bisector-like `rot_ccw(u) + rot_cw(v)` of the cone they bound.
fn normal_in<T: Clone, S>(
    vs: &[(T, T)],
    dot: impl Fn(&(T, T), &(T, T)) -> S,
    cross: impl Fn(&(T, T), &(T, T)) -> S,
    rot_sum: impl Fn(&(T, T), &(T, T)) -> (T, T),
    positive: impl Fn(&S) -> bool,
) -> Option<(T, T)> {
    let works = |w: &(T, T)| vs.iter().all(|v| positive(&dot(w, v)));
    if let Some(w) = vs.iter().find(|w| works(w)) {
        return Some(w.clone());
    }
    for u in vs {
        for v in vs {
            if positive(&cross(u, v)) {
                let w = rot_sum(u, v);
                if works(&w) {
                    return Some(w);
                }
            }
        }
    }
    None
}

/// Whether `d` (through `o`) still puts `f` on its left and `g` on its
/// right.
pub fn separates(points: &[Point], f: &Segment, g: &Segment, o: &Point, d: &Point) -> bool {
    f.endpoints().iter().all(|&i| d.cross(&points[i].sub(o)).is_positive())
        && g.endpoints().iter().all(|&i| d.cross(&points[i].sub(o)).is_negative())
}

/// For a path `a f g b` of length 3: a witness direction if the path is
/// ordered with respect to `o`. `None` for unordered paths and for paths of
/// any other length.
pub fn is_ordered(points: &[Point], path: &[Segment], o: &Point) -> Option<Point> {
    if path.len() != 4 {
        return None;
    }
    separating_direction(points, &path[1], &path[2], o)
}
