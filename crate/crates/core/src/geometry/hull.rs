use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::predicates::{orientation, Orientation};
use super::Point;

/// Hull vertices as a clockwise cycle, starting from the lexicographically
/// smallest point. Expects general position (no collinear triples).
pub fn hull_points(points: &[Point]) -> Vec<usize> {
    let n = points.len();
    if n < 3 {
        return (0..n).collect();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| points[i].cmp(&points[j]));

    // Monotone chain. The upper chain, walked left to right, is clockwise.
    let mut upper: Vec<usize> = Vec::with_capacity(n);
    for &i in &order {
        while upper.len() >= 2
            && orientation(&points[upper[upper.len() - 2]], &points[upper[upper.len() - 1]], &points[i])
                != Orientation::Clockwise
        {
            upper.pop();
        }
        upper.push(i);
    }
    let mut lower: Vec<usize> = Vec::with_capacity(n);
    for &i in order.iter().rev() {
        while lower.len() >= 2
            && orientation(&points[lower[lower.len() - 2]], &points[lower[lower.len() - 1]], &points[i])
                != Orientation::Clockwise
        {
            lower.pop();
        }
        lower.push(i);
    }
    upper.pop();
    lower.pop();
    upper.extend(lower);
    upper
}

pub fn hull_mask(points: &[Point]) -> Vec<bool> {
    let mut mask = vec![false; points.len()];
    for i in hull_points(points) {
        mask[i] = true;
    }
    mask
}

/// Largest `t >= 0` for which `origin + t * dir` stays in the hull whose
/// clockwise vertex cycle is `cycle`. `origin` must lie in that hull.
pub(crate) fn ray_exit(points: &[Point], cycle: &[usize], origin: &Point, dir: &Point) -> BigRational {
    let mut best = BigRational::zero();
    for k in 0..cycle.len() {
        let h = &points[cycle[k]];
        let e = points[cycle[(k + 1) % cycle.len()]].sub(h);
        let denom = dir.cross(&e);
        if denom.is_zero() {
            continue;
        }
        let ho = h.sub(origin);
        let t = ho.cross(&e) / &denom;
        let u = ho.cross(dir) / &denom;
        if !t.is_negative() && !u.is_negative() && u <= BigRational::from_integer(1.into()) && t > best {
            best = t;
        }
    }
    best
}
