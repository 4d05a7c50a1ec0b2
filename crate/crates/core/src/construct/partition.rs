use std::collections::BTreeSet;

use super::frame::{Contact, QuadrantFrame};
use crate::bounds::{delta2_formula, QuadrantCounts};
use crate::geometry::{classify_segments, Point, Segment};

/// Neighbours of `a` and `b` split by which of the two they avoid.
///
/// With the frame's roles: `a_set` meets `b` but not `a`, `b_set` meets
/// `a` but not `b`, `d_set` avoids both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodPartition {
    pub a_set: Vec<Segment>,
    pub b_set: Vec<Segment>,
    pub d_set: Vec<Segment>,
    pub delta2: usize,
    pub delta3: usize,
    pub delta_ab: usize,
}

pub fn partition_neighbors(points: &[Point], frame: &QuadrantFrame) -> NeighborhoodPartition {
    let n = points.len();
    let (mut a_set, mut b_set, mut d_set) = (Vec::new(), Vec::new(), Vec::new());
    for i in 0..n {
        for j in i + 1..n {
            let e = Segment::new(i, j);
            if e == frame.a || e == frame.b {
                continue;
            }
            let hits_a = !classify_segments(&e, &frame.a, points).expect("general position").is_disjoint();
            let hits_b = !classify_segments(&e, &frame.b, points).expect("general position").is_disjoint();
            match (hits_a, hits_b) {
                (false, true) => a_set.push(e),
                (true, false) => b_set.push(e),
                (false, false) => d_set.push(e),
                (true, true) => {}
            }
        }
    }
    let delta2 = d_set.len();
    let delta3 = a_set.len().min(b_set.len());
    NeighborhoodPartition { a_set, b_set, d_set, delta2, delta3, delta_ab: delta2 + delta3 }
}

fn pairs<'a>(us: &'a [usize], vs: &'a [usize]) -> impl Iterator<Item = Segment> + 'a {
    us.iter().flat_map(move |&u| vs.iter().map(move |&v| Segment::new(u, v)))
}

/// `A` written as the six products of label classes (crossing frames).
pub fn six_subsets_a(f: &QuadrantFrame) -> Vec<Segment> {
    let xp_in: &[usize] = &f.x_plus[1..f.q()];
    let xm_in: &[usize] = &f.x_minus[1..f.p()];
    let xp1 = [f.xp(1)];
    let xmp = [f.xm(f.p() + 1)];
    let mut out: Vec<Segment> = pairs(xp_in, &xp1)
        .chain(pairs(xp_in, &f.y_minus))
        .chain(pairs(&xp1, &f.y_minus))
        .chain(pairs(xm_in, &xmp))
        .chain(pairs(xm_in, &f.y_plus))
        .chain(pairs(&xmp, &f.y_plus))
        .collect();
    out.sort();
    out
}

/// `B` written as the six products of label classes (crossing frames).
pub fn six_subsets_b(f: &QuadrantFrame) -> Vec<Segment> {
    let xp_in: &[usize] = &f.x_plus[1..f.q()];
    let xm_in: &[usize] = &f.x_minus[1..f.p()];
    let xm1 = [f.xm(1)];
    let xpq = [f.xp(f.q() + 1)];
    let mut out: Vec<Segment> = pairs(&f.y_plus, &xpq)
        .chain(pairs(&f.y_plus, xp_in))
        .chain(pairs(&xpq, xp_in))
        .chain(pairs(&f.y_minus, &xm1))
        .chain(pairs(&f.y_minus, xm_in))
        .chain(pairs(&xm1, xm_in))
        .collect();
    out.sort();
    out
}

/// Segments with both ends in one sector.
pub fn same_sector_pairs(f: &QuadrantFrame) -> Vec<Segment> {
    let groups: [&[usize]; 4] = [&f.x_plus[1..f.q()], &f.x_minus[1..f.p()], &f.y_minus, &f.y_plus];
    let mut out = Vec::new();
    for g in groups {
        for (k, &u) in g.iter().enumerate() {
            for &v in &g[k + 1..] {
                out.push(Segment::new(u, v));
            }
        }
    }
    out.sort();
    out
}

/// Checks the counting identities of a crossing frame: the enumerated
/// sets against their label descriptions and closed forms.
pub fn check_identities(f: &QuadrantFrame, part: &NeighborhoodPartition) -> Result<(), String> {
    if f.contact != Contact::Crossing {
        return Err("identities apply to crossing frames only".into());
    }
    let c: &QuadrantCounts = &f.counts;
    let sorted = |v: &[Segment]| {
        let mut v = v.to_vec();
        v.sort();
        v
    };
    if sorted(&part.a_set) != six_subsets_a(f) {
        return Err("A differs from its six-subset description".into());
    }
    if sorted(&part.b_set) != six_subsets_b(f) {
        return Err("B differs from its six-subset description".into());
    }
    if sorted(&part.d_set) != same_sector_pairs(f) {
        return Err("D differs from the same-sector pairs".into());
    }
    if part.a_set.len() as u128 != c.a_size() {
        return Err(format!("|A| = {} but p(s+1)+q(r+1)-2 = {}", part.a_set.len(), c.a_size()));
    }
    if part.b_set.len() as u128 != c.b_size() {
        return Err(format!("|B| = {} but p(r+1)+q(s+1)-2 = {}", part.b_set.len(), c.b_size()));
    }
    if part.d_set.len() as u128 != delta2_formula(c) {
        return Err(format!("|D| = {} but the closed form gives {}", part.d_set.len(), delta2_formula(c)));
    }
    let distinct: BTreeSet<&Segment> = part.a_set.iter().chain(&part.b_set).chain(&part.d_set).collect();
    if distinct.len() != part.a_set.len() + part.b_set.len() + part.d_set.len() {
        return Err("A, B, D overlap".into());
    }
    Ok(())
}
