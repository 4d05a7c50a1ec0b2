use num_rational::BigRational;
use num_traits::One;

use super::frame::build_frame;
use super::{build_case1, build_case2, contact_point, ordered_augment, partition_neighbors, salvage, verify_paths, CaseLabel, ConstructError, PathCollection};
use crate::bounds::kappa;
use crate::geometry::{extends_general_position, hull_mask, hull_points, ray_exit, two_pow, Point, PointSet, Segment};

/// The point set with every leaf that is not a hull vertex pushed outward
/// along its ray from `o` until it becomes one. Indices are preserved, so
/// the segment bijection is the identity on index pairs.
#[derive(Clone, Debug)]
pub struct ProjectionScene {
    pub original: PointSet,
    pub projected: PointSet,
    pub a: Segment,
    pub b: Segment,
    pub o: Point,
    pub leaves: Vec<usize>,
    /// `(leaf, t)`: the leaf moved to `o + t (x - o)`, `t > 1`.
    pub scales: Vec<(usize, BigRational)>,
}

const BUDGET: i32 = 64;

pub fn build_projection(ps: &PointSet, a: &Segment, b: &Segment) -> Result<ProjectionScene, ConstructError> {
    let (o, shared) = contact_point(ps.points(), a, b)?;
    let mut leaves: Vec<usize> = a.endpoints().into_iter().chain(b.endpoints()).filter(|&i| Some(i) != shared).collect();
    leaves.sort_unstable();
    let mask = ps.hull_mask();
    let moving: Vec<usize> = leaves.iter().copied().filter(|&i| !mask[i]).collect();
    if moving.is_empty() {
        return Err(ConstructError::PreconditionViolated("both segments are already large".into()));
    }
    let mut pts = ps.points().to_vec();
    let mut settled: Vec<usize> = leaves.iter().copied().filter(|&i| mask[i]).collect();
    let mut scales = Vec::new();
    for &x in &moving {
        let dir = pts[x].sub(&o);
        let cycle = hull_points(&pts);
        let exit = ray_exit(&pts, &cycle, &o, &dir);
        let rest: Vec<Point> = pts.iter().enumerate().filter(|&(i, _)| i != x).map(|(_, p)| p.clone()).collect();
        let mut placed = false;
        for k in 0..BUDGET {
            let t = &exit * (BigRational::one() + two_pow(-k));
            let z = o.add(&dir.scale(&t));
            if !extends_general_position(&rest, &z) {
                continue;
            }
            let mut trial = pts.clone();
            trial[x] = z;
            let m = hull_mask(&trial);
            if m[x] && settled.iter().all(|&i| m[i]) {
                pts = trial;
                scales.push((x, t));
                placed = true;
                break;
            }
        }
        if !placed {
            return Err(ConstructError::SearchExhausted(format!("could not push leaf {x} onto the hull")));
        }
        settled.push(x);
    }
    let projected = PointSet::from_validated(pts);
    Ok(ProjectionScene { original: ps.clone(), projected, a: *a, b: *b, o, leaves, scales })
}

/// Pulls a collection for the projected set back to the original one.
pub fn build_case3(ps: &PointSet, a: &Segment, b: &Segment) -> Result<PathCollection, ConstructError> {
    let scene = build_projection(ps, a, b)?;
    let ext = &scene.projected;
    let inner = match contact_point(ext.points(), a, b)?.1 {
        None => {
            let f = build_frame(ext, a, b)?;
            let part = partition_neighbors(ext.points(), &f);
            build_case1(ext, &f, &part)?
        }
        Some(_) => build_case2(ext, a, b)?,
    };
    let mut paths = salvage(ps.points(), a, b, &scene.o, &inner.paths);
    let mut augmented = inner.augmented || paths.len() < inner.paths.len();
    if (paths.len() as u128) < kappa(ps.len() as u64) {
        paths = ordered_augment(ps, a, b, &scene.o, &paths)?;
        augmented = true;
    }
    let witnesses = verify_paths(ps.points(), a, b, &scene.o, &paths)?;
    Ok(PathCollection {
        n: ps.len(),
        a: *a,
        b: *b,
        o: scene.o,
        paths,
        witnesses,
        case: CaseLabel::Case3,
        subcase: format!("{}:{}", inner.case.as_str(), inner.subcase),
        augmented,
    })
}
