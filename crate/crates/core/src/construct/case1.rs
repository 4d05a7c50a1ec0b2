use super::frame::{is_large, Contact, QuadrantFrame};
use super::partition::NeighborhoodPartition;
use super::psi::psi_domain;
use super::{ordered_augment, salvage, verify_paths, CaseLabel, ConstructError, PathCollection};
use std::collections::{HashMap, HashSet};

use super::ordered::separating_direction;
use crate::geometry::{classify_segments, PointSet, Segment};

/// The patch segments `d₁, d₂, d₃` (in `A`) and `h₁, h₂, h₃` (in `B`).
struct Patches {
    d: [Option<Segment>; 3],
    h: [Option<Segment>; 3],
}

fn patches(f: &QuadrantFrame) -> Patches {
    let (p, q, r, s) = (f.p(), f.q(), f.r(), f.s());
    let seg = Segment::try_new;
    Patches {
        d: [
            seg(f.xm(p + 1), f.yp(s)),
            (q >= 2).then(|| seg(f.xp(1), f.xp(q))).flatten(),
            (r >= 1).then(|| seg(f.xp(1), f.ym(r))).flatten(),
        ],
        h: [
            (q >= 2).then(|| seg(f.xp(2), f.xp(q + 1))).flatten(),
            seg(f.yp(1), f.xp(q + 1)),
            (r >= 1).then(|| seg(f.xm(1), f.ym(1))).flatten(),
        ],
    }
}

/// Subcase name for a normalized crossing frame.
pub fn case1_subcase(f: &QuadrantFrame) -> &'static str {
    match (f.q() == 1 && f.r() == 0, f.q() > f.p(), f.r() >= 1) {
        (true, _, _) => "7.1",
        (false, true, true) => "7.2",
        (false, true, false) => "7.3",
        (false, false, false) => "7.4",
        (false, false, true) => "7.5",
    }
}

/// δ(P; a, b) internally disjoint `a`-`b` paths for two large crossing
/// segments. Paths are listed from the requested `a` to the requested `b`.
pub fn build_case1(ps: &PointSet, f: &QuadrantFrame, part: &NeighborhoodPartition) -> Result<PathCollection, ConstructError> {
    let n = ps.len();
    if f.contact != Contact::Crossing {
        return Err(ConstructError::PreconditionViolated("segments do not cross".into()));
    }
    let mask = ps.hull_mask();
    if !is_large(&mask, &f.a, None) || !is_large(&mask, &f.b, None) {
        return Err(ConstructError::PreconditionViolated("both segments must be large".into()));
    }
    if n < 6 {
        return Err(ConstructError::PreconditionViolated("needs at least 6 points".into()));
    }
    let (a, b) = (f.a, f.b);
    let mut paths: Vec<Vec<Segment>> = part.d_set.iter().map(|&e| vec![a, e, b]).collect();
    let dom = psi_domain(f)?;
    for pr in &dom.pairs {
        paths.push(vec![a, pr.from, pr.to, b]);
    }
    let pt = patches(f);
    let sub = case1_subcase(f);
    let pick = |pairs: &[(usize, usize)]| -> Vec<Vec<Segment>> {
        pairs
            .iter()
            .map(|&(i, j)| vec![a, pt.d[i - 1].expect("patch defined"), pt.h[j - 1].expect("patch defined"), b])
            .collect()
    };
    match sub {
        "7.1" => {
            // p = q = 1 and r = 0: one detour through the hull edge x⁻₁x⁺₁
            let mid = Segment::new(f.xm(1), f.xp(1));
            paths.push(vec![a, Segment::new(f.xm(2), f.yp(f.s())), mid, Segment::new(f.yp(1), f.xp(2)), b]);
        }
        "7.2" => paths.extend(pick(&[(1, 3), (2, 2), (3, 1)])),
        "7.3" => paths.extend(pick(&[(1, 1), (2, 2)])),
        "7.4" => paths.extend(pick(&[(1, 1)])),
        _ => paths.extend(pick(&[(1, 3), (3, 2)])),
    }
    let planned = paths.len();
    let mut paths = salvage(ps.points(), &a, &b, &f.o, &paths);
    let augmented = paths.len() < planned;
    if augmented {
        paths = complete_length3(ps, f, part, paths);
        if paths.len() < part.delta_ab {
            paths = ordered_augment(ps, &a, &b, &f.o, &paths)?;
        }
    }
    if f.swapped {
        for p in &mut paths {
            p.reverse();
        }
    }
    let (ra, rb) = if f.swapped { (b, a) } else { (a, b) };
    let witnesses = verify_paths(ps.points(), &ra, &rb, &f.o, &paths)?;
    Ok(PathCollection {
        n,
        a: ra,
        b: rb,
        o: f.o.clone(),
        paths,
        witnesses,
        case: CaseLabel::Case1,
        subcase: sub.to_string(),
        augmented,
    })
}

/// Keeps the paths of other lengths and regrows the length-3 ones as a
/// maximum matching between `A` and `B` over disjoint, ordered pairs,
/// starting from the length-3 paths already present.
fn complete_length3(ps: &PointSet, f: &QuadrantFrame, part: &NeighborhoodPartition, paths: Vec<Vec<Segment>>) -> Vec<Vec<Segment>> {
    let pts = ps.points();
    let (mut out, threes): (Vec<Vec<Segment>>, Vec<Vec<Segment>>) = paths.into_iter().partition(|p| p.len() != 4);
    let blocked: HashSet<Segment> = out.iter().flat_map(|p| p[1..p.len() - 1].iter().copied()).collect();
    let left: Vec<Segment> = part.a_set.iter().copied().filter(|d| !blocked.contains(d)).collect();
    let right: Vec<Segment> = part.b_set.iter().copied().filter(|h| !blocked.contains(h)).collect();
    let col: HashMap<Segment, usize> = right.iter().enumerate().map(|(k, h)| (*h, k)).collect();
    let adj: Vec<Vec<usize>> = left
        .iter()
        .map(|d| {
            (0..right.len())
                .filter(|&k| {
                    classify_segments(d, &right[k], pts).is_ok_and(|c| c.is_disjoint())
                        && separating_direction(pts, d, &right[k], &f.o).is_some()
                })
                .collect()
        })
        .collect();
    let mut owner: Vec<Option<usize>> = vec![None; right.len()];
    let mut matched = vec![false; left.len()];
    for p in &threes {
        if let (Some(i), Some(&k)) = (left.iter().position(|d| *d == p[1]), col.get(&p[2])) {
            owner[k] = Some(i);
            matched[i] = true;
        }
    }
    fn grow(i: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &k in &adj[i] {
            if !seen[k] {
                seen[k] = true;
                if owner[k].is_none_or(|j| grow(j, adj, seen, owner)) {
                    owner[k] = Some(i);
                    return true;
                }
            }
        }
        false
    }
    for (i, _) in matched.iter().enumerate().filter(|(_, m)| !**m) {
        grow(i, &adj, &mut vec![false; right.len()], &mut owner);
    }
    let mut pairs: Vec<(Segment, Segment)> = owner.iter().enumerate().filter_map(|(k, o)| o.map(|i| (left[i], right[k]))).collect();
    pairs.sort();
    let pos = out.iter().position(|p| p.len() > 3).unwrap_or(out.len());
    let tail = out.split_off(pos);
    out.extend(pairs.into_iter().map(|(d, h)| vec![f.a, d, h, f.b]));
    out.extend(tail);
    out
}
