use num_rational::BigRational;
use num_traits::{One, Zero};

use super::frame::{build_frame, is_large, Contact, QuadrantFrame};
use super::{build_case1, collect_paths, ordered_augment, partition_neighbors, salvage, verify_paths, CaseLabel, ConstructError, PathCollection};
use crate::bounds::kappa;
use crate::geometry::{extends_general_position, hull_mask, hull_points, ray_exit, two_pow, Point, PointSet, Segment};

/// Two segments sharing the endpoint `o`, each pushed past `o` so that the
/// longer copies cross.
///
/// In `extended` the slot of `o` holds `o_minus` (beyond `o` on the line
/// of `b`) and `o_plus` (beyond `o` on the line of `a`) is appended as
/// point `n`. All other indices are unchanged.
#[derive(Clone, Debug)]
pub struct ExtensionScene {
    pub original: PointSet,
    pub a: Segment,
    pub b: Segment,
    pub o_index: usize,
    pub frame: QuadrantFrame,
    pub extended: PointSet,
    pub o_plus: Point,
    pub o_minus: Point,
    pub t_plus: BigRational,
    pub t_minus: BigRational,
    pub a_ext: Segment,
    pub b_ext: Segment,
    /// Segments of the extended set that touch `o_minus` or `o_plus`.
    pub new_vertices: Vec<Segment>,
    /// Those of `new_vertices` used by the crossing-case collection.
    pub used_new: Vec<Segment>,
    /// Inner vertex of the length-4 detour that avoids both neighbourhoods.
    pub d_star: Option<Segment>,
}

const BUDGET: i32 = 64;

/// Candidate ray parameter: just past the hull boundary, or just past `o`
/// when `o` is itself on the boundary.
fn candidate(exit: &BigRational, k: i32) -> BigRational {
    if exit.is_zero() {
        two_pow(-k)
    } else {
        exit * (BigRational::one() + two_pow(-k))
    }
}

pub fn build_extension(ps: &PointSet, a: &Segment, b: &Segment) -> Result<ExtensionScene, ConstructError> {
    let frame = build_frame(ps, a, b)?;
    let Contact::SharedEndpoint(o_idx) = frame.contact else {
        return Err(ConstructError::PreconditionViolated("segments do not share an endpoint".into()));
    };
    let pts = ps.points();
    let n = ps.len();
    let mask = ps.hull_mask();
    if !is_large(&mask, a, Some(o_idx)) || !is_large(&mask, b, Some(o_idx)) {
        return Err(ConstructError::PreconditionViolated("both segments must be large".into()));
    }
    let o = &pts[o_idx];
    let (ua, ub) = (a.other(o_idx), b.other(o_idx));
    let dir_a = o.sub(&pts[ua]);
    let dir_b = o.sub(&pts[ub]);
    let cycle = hull_points(pts);
    let exit_a = ray_exit(pts, &cycle, o, &dir_a);
    let exit_b = ray_exit(pts, &cycle, o, &dir_b);

    let base: Vec<Point> = pts.iter().enumerate().filter(|&(i, _)| i != o_idx).map(|(_, p)| p.clone()).collect();
    let mut want = mask.clone();
    want[o_idx] = true;
    want.push(true);
    let try_pair = |t_plus: &BigRational, t_minus: &BigRational| -> Option<ExtensionScene> {
        let o_plus = o.add(&dir_a.scale(t_plus));
        let o_minus = o.add(&dir_b.scale(t_minus));
        if !extends_general_position(&base, &o_plus) {
            return None;
        }
        let mut with_plus = base.clone();
        with_plus.push(o_plus.clone());
        if !extends_general_position(&with_plus, &o_minus) {
            return None;
        }
        let mut ext = pts.to_vec();
        ext[o_idx] = o_minus.clone();
        ext.push(o_plus.clone());
        if hull_mask(&ext) != want {
            return None;
        }
        let new_vertices = (0..=n)
            .filter(|&i| i != o_idx && i != n)
            .flat_map(|i| [Segment::new(i, o_idx), Segment::new(i, n)])
            .chain([Segment::new(o_idx, n)])
            .collect();
        Some(ExtensionScene {
            original: ps.clone(),
            a: *a,
            b: *b,
            o_index: o_idx,
            frame: frame.clone(),
            extended: PointSet::from_validated(ext),
            o_plus,
            o_minus,
            t_plus: t_plus.clone(),
            t_minus: t_minus.clone(),
            a_ext: Segment::new(ua, n),
            b_ext: Segment::new(ub, o_idx),
            new_vertices,
            used_new: Vec::new(),
            d_star: None,
        })
    };

    if mask[o_idx] {
        // o is a hull vertex: both new points sit just outside it, and what
        // decides whether both stay extreme is the ratio t⁻ / t⁺
        for rho in ratio_candidates(pts, &cycle, o_idx, &dir_a, &dir_b) {
            for k in 0..BUDGET {
                let t_plus = two_pow(-k);
                let t_minus = &t_plus * &rho;
                if let Some(scene) = try_pair(&t_plus, &t_minus) {
                    return Ok(scene);
                }
            }
        }
    }
    for sum in 0..(2 * BUDGET - 1) {
        for k in (sum - BUDGET + 1).max(0)..=sum.min(BUDGET - 1) {
            if let Some(scene) = try_pair(&candidate(&exit_a, k), &candidate(&exit_b, sum - k)) {
                return Ok(scene);
            }
        }
    }
    Err(ConstructError::SearchExhausted(format!(
        "no extension of {a} and {b} past point {o_idx} within {BUDGET} steps per ray"
    )))
}

/// Ratios `ρ = t⁻ / t⁺` for which `o + t⁺ d_a` and `o + ρ t⁺ d_b` both
/// stay extreme as `t⁺ -> 0`, where `o` is a hull vertex with hull
/// neighbours `w₁, w₂`. The difference of the two points is
/// `t⁺ (ρ d_b - d_a)`, which must avoid the cone spanned by `w₁ - o` and
/// `w₂ - o` and its negative; that happens between the two values of `ρ`
/// at which it crosses the lines of the cone.
fn ratio_candidates(pts: &[Point], cycle: &[usize], o_idx: usize, d_a: &Point, d_b: &Point) -> Vec<BigRational> {
    let pos = cycle.iter().position(|&i| i == o_idx).expect("o is on the hull");
    let m = cycle.len();
    let o = &pts[o_idx];
    let sides = [pts[cycle[(pos + m - 1) % m]].sub(o), pts[cycle[(pos + 1) % m]].sub(o)];
    let zero = BigRational::zero();
    let mut roots: Vec<BigRational> = sides
        .iter()
        .filter_map(|u| {
            let den = u.cross(d_b);
            (!den.is_zero()).then(|| u.cross(d_a) / den)
        })
        .filter(|r| *r > zero)
        .collect();
    roots.sort();
    let one = BigRational::one();
    let two = &one + &one;
    match roots.as_slice() {
        [lo, hi] => [4, 3, 5, 2, 6, 1, 7].into_iter().map(|j| lo + (hi - lo) * BigRational::new(j.into(), 8.into())).collect(),
        [r] => vec![r * &two, r / &two, r * &two * &two, r / (&two * &two)],
        _ => vec![one],
    }
}

/// Subcase of a shared-endpoint frame.
pub fn case2_subcase(f: &QuadrantFrame) -> &'static str {
    let (p, q, r, s) = (f.p(), f.q(), f.r(), f.s());
    if p == q {
        "2.1"
    } else if s == 0 || r >= s {
        "2.2"
    } else {
        "2.3"
    }
}

/// At least κ(n) ordered internally disjoint paths for two large segments
/// sharing an endpoint.
pub fn build_case2(ps: &PointSet, a: &Segment, b: &Segment) -> Result<PathCollection, ConstructError> {
    case2_with_scene(ps, a, b).map(|(c, _)| c)
}

/// Like [`build_case2`], also returning the extension used (absent when
/// the construction removes a point and recurses instead).
pub fn case2_with_scene(
    ps: &PointSet,
    a: &Segment,
    b: &Segment,
) -> Result<(PathCollection, Option<ExtensionScene>), ConstructError> {
    let frame = build_frame(ps, a, b)?;
    let Contact::SharedEndpoint(o_idx) = frame.contact else {
        return Err(ConstructError::PreconditionViolated("segments do not share an endpoint".into()));
    };
    if ps.len() < 6 {
        return Err(ConstructError::PreconditionViolated("needs at least 6 points".into()));
    }
    let o = ps.point(o_idx).clone();
    let sub = case2_subcase(&frame);
    let (paths, scene, inner_augmented) = if sub == "2.3" {
        let (paths, aug) = remove_and_recurse(ps, a, b, &frame)?;
        (paths, None, aug)
    } else {
        let mut scene = build_extension(ps, a, b)?;
        let ext = &scene.extended;
        let f1 = build_frame(ext, &scene.a_ext, &scene.b_ext)?;
        let part = partition_neighbors(ext.points(), &f1);
        let inner = build_case1(ext, &f1, &part)?;
        let fresh = |s: &Segment| s.has_endpoint(o_idx) || s.has_endpoint(ps.len());
        let mut used_new: Vec<Segment> = Vec::new();
        let mut paths = Vec::new();
        for p in &inner.paths {
            let mid = &p[1..p.len() - 1];
            used_new.extend(mid.iter().filter(|s| fresh(s)));
            if p.len() == 5 {
                scene.d_star = Some(p[2]);
            }
            if mid.iter().any(fresh) {
                continue;
            }
            let mut q = vec![*a];
            q.extend_from_slice(mid);
            q.push(*b);
            paths.push(q);
        }
        used_new.sort();
        scene.used_new = used_new;
        (paths, Some(scene), inner.augmented)
    };
    let mut paths = salvage(ps.points(), a, b, &o, &paths);
    let mut augmented = inner_augmented;
    if (paths.len() as u128) < kappa(ps.len() as u64) {
        paths = ordered_augment(ps, a, b, &o, &paths)?;
        augmented = true;
    }
    let witnesses = verify_paths(ps.points(), a, b, &o, &paths)?;
    Ok((
        PathCollection {
            n: ps.len(),
            a: *a,
            b: *b,
            o,
            paths,
            witnesses,
            case: CaseLabel::Case2,
            subcase: sub.into(),
            augmented,
        },
        scene,
    ))
}

/// Drops `y = y⁺₁`, solves the smaller instance, and adds the length-2
/// paths through segments from `y` into the three sectors other than `Y⁻`.
fn remove_and_recurse(
    ps: &PointSet,
    a: &Segment,
    b: &Segment,
    f: &QuadrantFrame,
) -> Result<(Vec<Vec<Segment>>, bool), ConstructError> {
    let y = f.y_plus[0];
    let smaller = ps.without(y).expect("at least 5 points remain");
    let down = |i: usize| if i > y { i - 1 } else { i };
    let up = |i: usize| if i >= y { i + 1 } else { i };
    let shift = |s: &Segment, g: &dyn Fn(usize) -> usize| Segment::new(g(s.lo()), g(s.hi()));
    let inner = collect_paths(&smaller, &shift(a, &down), &shift(b, &down))?;
    let mut paths: Vec<Vec<Segment>> = inner.paths.iter().map(|p| p.iter().map(|s| shift(s, &up)).collect()).collect();
    let mut ends: Vec<usize> = f.x_minus[1..].iter().chain(&f.x_plus[1..]).chain(&f.y_plus[1..]).copied().collect();
    ends.sort_unstable();
    for w in ends {
        paths.push(vec![*a, Segment::new(y, w), *b]);
    }
    Ok((paths, inner.augmented))
}
