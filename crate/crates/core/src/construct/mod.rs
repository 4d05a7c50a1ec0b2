//! Explicit families of internally disjoint paths between two segments at
//! distance 2, following the case analysis on how the two segments meet
//! and whether their free endpoints lie on the convex hull.
//!
//! Every collection is re-verified against the geometry before it is
//! returned; a failed check is an error, never a silently shorter answer.
//! Planned paths that fail their own checks are dropped and the family is
//! then grown by augmenting paths that keep every length-3 member ordered;
//! `augmented` records when that happened.

mod case1;
mod extension;
mod frame;
mod ordered;
mod partition;
mod projection;
mod psi;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::kappa;
use crate::geometry::{classify_segments, format_rational, GeometryError, IntersectionKind, Point, PointSet, Segment};
use crate::graph::{DisjointnessGraph, GraphError};

pub use case1::{build_case1, case1_subcase};
pub use extension::{build_case2, build_extension, case2_subcase, case2_with_scene, ExtensionScene};
pub use frame::{build_frame, Contact, QuadrantFrame};
pub use ordered::{is_ordered, separates, separating_direction};
pub use partition::{check_identities, partition_neighbors, same_sector_pairs, six_subsets_a, six_subsets_b, NeighborhoodPartition};
pub use projection::{build_case3, build_projection, ProjectionScene};
pub use psi::{expected_block_sizes, psi, psi_domain, PsiDomain, PsiPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("segments are not at distance 2 (distance {})", .0.map_or("infinite".to_string(), |d| d.to_string()))]
    NotDistanceTwo(Option<usize>),
    #[error("segments {0} and {1} are disjoint")]
    DisjointSegments(Segment, Segment),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("segment {0} is not in the domain of the map")]
    NotInDomain(Segment),
    #[error("parameter search exhausted: {0}")]
    SearchExhausted(String),
    #[error("collection has {found} paths, fewer than the bound {needed}")]
    CollectionTooSmall { found: usize, needed: u128 },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    #[serde(rename = "direct")]
    Direct,
    #[serde(rename = "1")]
    Case1,
    #[serde(rename = "2")]
    Case2,
    #[serde(rename = "3")]
    Case3,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::Direct => "direct",
            CaseLabel::Case1 => "1",
            CaseLabel::Case2 => "2",
            CaseLabel::Case3 => "3",
        }
    }
}

/// Verified internally disjoint `a`-`b` paths. Each path lists its
/// segments from `a` to `b`; `witnesses[k]` is a separating direction
/// through `o` when path `k` has length 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCollection {
    pub n: usize,
    pub a: Segment,
    pub b: Segment,
    pub o: Point,
    pub paths: Vec<Vec<Segment>>,
    pub witnesses: Vec<Option<Point>>,
    pub case: CaseLabel,
    pub subcase: String,
    pub augmented: bool,
}

impl PathCollection {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Number of paths with `k` edges.
    pub fn count_of_length(&self, k: usize) -> usize {
        self.paths.iter().filter(|p| p.len() == k + 1).count()
    }

    pub fn certificate(&self) -> Certificate {
        Certificate {
            a: self.a,
            b: self.b,
            kappa_n: kappa(self.n as u64),
            paths: self.paths.clone(),
            ordered_witness: self
                .witnesses
                .iter()
                .map(|w| w.as_ref().map(|d| [format_rational(&d.x), format_rational(&d.y)]))
                .collect(),
            case: self.case,
            subcase: self.subcase.clone(),
            augmented: self.augmented,
        }
    }
}

/// JSON form of a collection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub a: Segment,
    pub b: Segment,
    pub kappa_n: u128,
    pub paths: Vec<Vec<Segment>>,
    pub ordered_witness: Vec<Option<[String; 2]>>,
    pub case: CaseLabel,
    pub subcase: String,
    pub augmented: bool,
}

fn fail(msg: String) -> ConstructError {
    ConstructError::VerificationFailed(msg)
}

/// Checks that `paths` are `a`-`b` paths of the disjointness graph of
/// `points`, pairwise internally disjoint, and that each path of length 3
/// is ordered with respect to `o`. Returns the order witnesses.
pub fn verify_paths(
    points: &[Point],
    a: &Segment,
    b: &Segment,
    o: &Point,
    paths: &[Vec<Segment>],
) -> Result<Vec<Option<Point>>, ConstructError> {
    let n = points.len();
    let mut used: HashSet<Segment> = HashSet::new();
    let mut witnesses = Vec::with_capacity(paths.len());
    for (k, path) in paths.iter().enumerate() {
        if path.len() < 3 || path[0] != *a || path[path.len() - 1] != *b {
            return Err(fail(format!("path {k} does not run from {a} to {b} through an inner vertex")));
        }
        if let Some(s) = path.iter().find(|s| s.hi() >= n) {
            return Err(fail(format!("path {k} uses unknown segment {s}")));
        }
        let mut own = HashSet::new();
        for s in path {
            if !own.insert(*s) {
                return Err(fail(format!("path {k} repeats {s}")));
            }
        }
        for w in path.windows(2) {
            if !classify_segments(&w[0], &w[1], points)?.is_disjoint() {
                return Err(fail(format!("path {k}: {} and {} intersect", w[0], w[1])));
            }
        }
        for s in &path[1..path.len() - 1] {
            if !used.insert(*s) {
                return Err(fail(format!("inner vertex {s} of path {k} is shared")));
            }
        }
        if path.len() == 4 {
            match is_ordered(points, path, o) {
                Some(d) => witnesses.push(Some(d)),
                None => return Err(fail(format!("path {k} is not ordered"))),
            }
        } else {
            witnesses.push(None);
        }
    }
    Ok(witnesses)
}

/// The paths of `paths` that pass [`verify_paths`] on their own, kept
/// greedily in order as long as their inner vertices are unused.
pub(crate) fn salvage(points: &[Point], a: &Segment, b: &Segment, o: &Point, paths: &[Vec<Segment>]) -> Vec<Vec<Segment>> {
    let mut used: HashSet<Segment> = HashSet::new();
    let mut kept = Vec::new();
    for p in paths {
        if verify_paths(points, a, b, o, std::slice::from_ref(p)).is_err() {
            continue;
        }
        let inner = &p[1..p.len() - 1];
        if inner.iter().any(|s| used.contains(s)) {
            continue;
        }
        used.extend(inner.iter().copied());
        kept.push(p.clone());
    }
    kept
}

/// Grows a valid family to a largest one in the network of `D(P)` with
/// the steps `a f -> g b` of unordered length-3 paths removed. Steps used
/// by `paths` stay available so the search can start from them; if that
/// lets an unordered length-3 path through, the search is redone without
/// the offending starting paths.
pub(crate) fn ordered_augment(
    ps: &PointSet,
    a: &Segment,
    b: &Segment,
    o: &Point,
    paths: &[Vec<Segment>],
) -> Result<Vec<Vec<Segment>>, ConstructError> {
    let pts = ps.points();
    let g = DisjointnessGraph::build(ps)?;
    let na: HashSet<Segment> = g.neighbors(a)?.into_iter().collect();
    let nb: HashSet<Segment> = g.neighbors(b)?.into_iter().collect();
    let forbidden = |u: &Segment, v: &Segment| na.contains(u) && nb.contains(v) && separating_direction(pts, u, v, o).is_none();
    let steps: HashSet<(Segment, Segment)> = paths.iter().flat_map(|p| p.windows(2).map(|w| (w[0], w[1]))).collect();
    let all_ordered = |ps: &[Vec<Segment>]| ps.iter().all(|p| p.len() != 4 || separating_direction(pts, &p[1], &p[2], o).is_some());
    let mut out = g.augment_paths(a, b, paths, &|u, v| steps.contains(&(*u, *v)) || !forbidden(u, v))?;
    if !all_ordered(&out) {
        let clean: Vec<Vec<Segment>> = paths.iter().filter(|p| p.windows(2).all(|w| !forbidden(&w[0], &w[1]))).cloned().collect();
        out = g.augment_paths(a, b, &clean, &|u, v| !forbidden(u, v))?;
        if out.len() < paths.len() {
            out = paths.to_vec();
        }
    }
    out.sort_by_key(|p| p.len());
    Ok(out)
}

/// The common point of two intersecting segments.
pub(crate) fn contact_point(points: &[Point], a: &Segment, b: &Segment) -> Result<(Point, Option<usize>), ConstructError> {
    match classify_segments(a, b, points)? {
        IntersectionKind::Disjoint => Err(ConstructError::DisjointSegments(*a, *b)),
        IntersectionKind::Crossing(o) => Ok((o, None)),
        IntersectionKind::SharedEndpoint(i) => Ok((points[i].clone(), Some(i))),
    }
}

/// All simple `a`-`b` paths of a small graph, as vertex lists.
fn simple_paths(g: &crate::graph::SimpleGraph, a: usize, b: usize) -> Vec<Vec<usize>> {
    fn walk(g: &crate::graph::SimpleGraph, b: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let u = *path.last().unwrap();
        if u == b {
            out.push(path.clone());
            return;
        }
        for v in g.neighbors(u) {
            if !path.contains(&v) {
                path.push(v);
                walk(g, b, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(g, b, &mut vec![a], &mut out);
    out
}

/// Largest family of pairwise internally disjoint paths, by exhaustive
/// search over the candidates.
fn max_packing(cands: &[Vec<usize>]) -> Vec<usize> {
    fn go(cands: &[Vec<usize>], k: usize, taken: &mut Vec<usize>, used: &mut HashSet<usize>, best: &mut Vec<usize>) {
        if taken.len() + (cands.len() - k) <= best.len() {
            return;
        }
        if k == cands.len() {
            *best = taken.clone();
            return;
        }
        let inner = &cands[k][1..cands[k].len() - 1];
        if inner.iter().all(|v| !used.contains(v)) {
            used.extend(inner.iter().copied());
            taken.push(k);
            go(cands, k + 1, taken, used, best);
            taken.pop();
            for v in inner {
                used.remove(v);
            }
        }
        go(cands, k + 1, taken, used, best);
    }
    let mut best = Vec::new();
    go(cands, 0, &mut Vec::new(), &mut HashSet::new(), &mut best);
    best
}

/// Small sets: a maximum flow witness, replaced by an exhaustive search for
/// the largest family whose length-3 paths are ordered when the flow
/// witness contains an unordered one.
pub(crate) fn build_direct(ps: &PointSet, a: &Segment, b: &Segment) -> Result<PathCollection, ConstructError> {
    let pts = ps.points();
    let (o, _) = contact_point(pts, a, b)?;
    let g = DisjointnessGraph::build(ps)?;
    let (_, mut paths) = g.max_disjoint_paths(a, b)?;
    let mut subcase = "flow";
    if paths.iter().any(|p| p.len() == 4 && is_ordered(pts, p, &o).is_none()) {
        let (ia, ib) = (g.index_of(a)?, g.index_of(b)?);
        let cands: Vec<Vec<usize>> = simple_paths(g.graph(), ia, ib)
            .into_iter()
            .filter(|p| p.len() != 4 || separating_direction(pts, &g.segment(p[1]), &g.segment(p[2]), &o).is_some())
            .collect();
        paths = max_packing(&cands)
            .into_iter()
            .map(|k| cands[k].iter().map(|&v| g.segment(v)).collect())
            .collect();
        subcase = "ordered-search";
    }
    paths.sort_by_key(|p| p.len());
    let witnesses = verify_paths(pts, a, b, &o, &paths)?;
    Ok(PathCollection {
        n: ps.len(),
        a: *a,
        b: *b,
        o,
        paths,
        witnesses,
        case: CaseLabel::Direct,
        subcase: subcase.into(),
        augmented: false,
    })
}

/// Dispatch without the distance-2 precondition: any two intersecting
/// segments.
pub(crate) fn collect_paths(ps: &PointSet, a: &Segment, b: &Segment) -> Result<PathCollection, ConstructError> {
    if ps.len() <= 5 {
        return build_direct(ps, a, b);
    }
    let (_, shared) = contact_point(ps.points(), a, b)?;
    let mask = ps.hull_mask();
    let large = frame::is_large(&mask, a, shared) && frame::is_large(&mask, b, shared);
    match (large, shared) {
        (true, None) => {
            let f = build_frame(ps, a, b)?;
            let part = partition_neighbors(ps.points(), &f);
            build_case1(ps, &f, &part)
        }
        (true, Some(_)) => build_case2(ps, a, b),
        (false, _) => build_case3(ps, a, b),
    }
}

/// Which case the construction uses for `(a, b)`.
pub fn dispatch_case(ps: &PointSet, a: &Segment, b: &Segment) -> Result<CaseLabel, ConstructError> {
    if ps.len() <= 5 {
        return Ok(CaseLabel::Direct);
    }
    let (_, shared) = contact_point(ps.points(), a, b)?;
    let mask = ps.hull_mask();
    let large = frame::is_large(&mask, a, shared) && frame::is_large(&mask, b, shared);
    Ok(match (large, shared) {
        (true, None) => CaseLabel::Case1,
        (true, Some(_)) => CaseLabel::Case2,
        (false, _) => CaseLabel::Case3,
    })
}

/// Distance between two segments in the disjointness graph, computed
/// without building the graph when it is 1 or 2.
pub fn segment_distance(ps: &PointSet, a: &Segment, b: &Segment) -> Result<Option<usize>, ConstructError> {
    let pts = ps.points();
    if a == b {
        return Ok(Some(0));
    }
    if classify_segments(a, b, pts)?.is_disjoint() {
        return Ok(Some(1));
    }
    for e in ps.segments() {
        if e != *a
            && e != *b
            && classify_segments(&e, a, pts)?.is_disjoint()
            && classify_segments(&e, b, pts)?.is_disjoint()
        {
            return Ok(Some(2));
        }
    }
    let g = DisjointnessGraph::build(ps)?;
    Ok(g.distance(a, b)?)
}

/// Internally disjoint `a`-`b` paths for two segments at distance 2: at
/// least κ(n) of them, ordered, verified.
pub fn construct_menger_paths(ps: &PointSet, a: &Segment, b: &Segment) -> Result<PathCollection, ConstructError> {
    ps.check_segment(a)?;
    ps.check_segment(b)?;
    let d = segment_distance(ps, a, b)?;
    if d != Some(2) {
        return Err(ConstructError::NotDistanceTwo(d));
    }
    let coll = collect_paths(ps, a, b)?;
    verify_paths(ps.points(), a, b, &coll.o, &coll.paths)?;
    let needed = kappa(ps.len() as u64);
    if (coll.len() as u128) < needed {
        return Err(ConstructError::CollectionTooSmall { found: coll.len(), needed });
    }
    Ok(coll)
}
