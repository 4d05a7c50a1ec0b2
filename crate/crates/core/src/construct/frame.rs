use serde::Serialize;

use super::ConstructError;
use crate::bounds::QuadrantCounts;
use crate::geometry::{intersection_kind, radial_order_with_ties, IntersectionKind, Point, PointSet, Rotation, Segment};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Contact {
    Crossing,
    /// Both segments end at this point index.
    SharedEndpoint(usize),
}

/// Labelled neighbourhood of two intersecting segments.
///
/// `a` and `b` are the segments in their normalized roles: `a` runs from
/// `x⁻₁` to `x⁺_{q+1}`, `b` from `x⁺₁` to `x⁻_{p+1}`. When `swapped` is set
/// the roles are exchanged with respect to the request. Around `o` the
/// labels appear (in `rotation`) as
/// `x⁺₁, y⁻₁..y⁻_r, x⁻₁, x⁻₂..x⁻_p, x⁻_{p+1}, y⁺₁..y⁺_s, x⁺_{q+1}, x⁺_q..x⁺₂`.
///
/// For a shared endpoint `x⁻_{p+1}` and `x⁺_{q+1}` are not points of the
/// set (they are the directions opposite the two leaves), so `x_minus` has
/// length `p` and `x_plus` length `q`; otherwise the lengths are `p + 1`
/// and `q + 1`.
#[derive(Clone, Debug)]
pub struct QuadrantFrame {
    pub a: Segment,
    pub b: Segment,
    pub swapped: bool,
    pub o: Point,
    pub contact: Contact,
    pub leaves: Vec<usize>,
    pub x_minus: Vec<usize>,
    pub x_plus: Vec<usize>,
    pub y_minus: Vec<usize>,
    pub y_plus: Vec<usize>,
    pub counts: QuadrantCounts,
    pub rotation: Rotation,
    /// Which of the candidate relabelings was chosen.
    pub relabeling: usize,
}

impl QuadrantFrame {
    pub fn p(&self) -> usize {
        self.counts.p as usize
    }

    pub fn q(&self) -> usize {
        self.counts.q as usize
    }

    pub fn r(&self) -> usize {
        self.counts.r as usize
    }

    pub fn s(&self) -> usize {
        self.counts.s as usize
    }

    /// `x⁻_j`, 1-based.
    pub fn xm(&self, j: usize) -> usize {
        self.x_minus[j - 1]
    }

    /// `x⁺_j`, 1-based.
    pub fn xp(&self, j: usize) -> usize {
        self.x_plus[j - 1]
    }

    /// `y⁻_i` for `0 <= i <= r + 1`, with `y⁻₀ = x⁺₁` and `y⁻_{r+1} = x⁻₁`.
    pub fn ym(&self, i: usize) -> usize {
        if i == 0 {
            self.xp(1)
        } else if i == self.r() + 1 {
            self.xm(1)
        } else {
            self.y_minus[i - 1]
        }
    }

    /// `y⁺_i` for `0 <= i <= s + 1`, with `y⁺₀ = x⁻_{p+1}` and
    /// `y⁺_{s+1} = x⁺_{q+1}`. Crossing frames only.
    pub fn yp(&self, i: usize) -> usize {
        if i == 0 {
            self.xm(self.p() + 1)
        } else if i == self.s() + 1 {
            self.xp(self.q() + 1)
        } else {
            self.y_plus[i - 1]
        }
    }

    /// Points inside the four open sectors, i.e. off both segments.
    pub fn sector_points(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.y_minus.iter().chain(&self.y_plus).copied().collect();
        out.extend(&self.x_minus[1..self.p()]);
        out.extend(&self.x_plus[1..self.q()]);
        out.sort_unstable();
        out
    }
}

/// Whether every leaf of `s` (its endpoints other than a shared point) is
/// a hull vertex.
pub(crate) fn is_large(mask: &[bool], s: &Segment, shared: Option<usize>) -> bool {
    s.endpoints().iter().filter(|&&e| Some(e) != shared).all(|&e| mask[e])
}

/// Labels the neighbourhood of two intersecting segments.
pub fn build_frame(ps: &PointSet, a: &Segment, b: &Segment) -> Result<QuadrantFrame, ConstructError> {
    if a == b {
        return Err(ConstructError::PreconditionViolated("a and b are the same segment".into()));
    }
    match intersection_kind(a, b, ps)? {
        IntersectionKind::Disjoint => Err(ConstructError::DisjointSegments(*a, *b)),
        IntersectionKind::Crossing(o) => Ok(crossing_frame(ps, a, b, o)),
        IntersectionKind::SharedEndpoint(o) => Ok(shared_frame(ps, a, b, o)),
    }
}

fn normalization_key(c: &QuadrantCounts) -> (u64, u64, u64, u64) {
    (c.s, c.q, c.r, c.p)
}

fn crossing_frame(ps: &PointSet, a: &Segment, b: &Segment, o: Point) -> QuadrantFrame {
    let mut best: Option<QuadrantFrame> = None;
    for f in crossing_relabelings(ps, a, b, &o) {
        if best.as_ref().is_none_or(|g| normalization_key(&f.counts) > normalization_key(&g.counts)) {
            best = Some(f);
        }
    }
    best.expect("some relabeling puts the largest sector in the y+ role")
}

/// Every normalized labelling of a crossing pair, by relabeling index.
pub(crate) fn crossing_relabelings(ps: &PointSet, a: &Segment, b: &Segment, o: &Point) -> Vec<QuadrantFrame> {
    let pts = ps.points();
    let ends = [b.lo(), b.hi(), a.lo(), a.hi()];
    let mut out = Vec::new();
    for (k0, &l0) in ends.iter().enumerate() {
        for (ri, rotation) in [Rotation::Clockwise, Rotation::CounterClockwise].into_iter().enumerate() {
            let start = pts[l0].sub(o);
            let order = radial_order_with_ties(o, pts, &start, rotation).expect("o is not a point of the set");
            debug_assert_eq!(order[0], l0);
            // split the sweep at the three remaining leaves
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new()];
            let mut cuts = vec![l0];
            for &i in &order[1..] {
                if ends.contains(&i) {
                    cuts.push(i);
                    blocks.push(Vec::new());
                } else {
                    blocks.last_mut().unwrap().push(i);
                }
            }
            let [_, l1, l2, l3] = [cuts[0], cuts[1], cuts[2], cuts[3]];
            let counts = QuadrantCounts::new(
                blocks[1].len() as u64 + 1,
                blocks[3].len() as u64 + 1,
                blocks[0].len() as u64,
                blocks[2].len() as u64,
            );
            let (p, q, r, s) = (counts.p, counts.q, counts.r, counts.s);
            if !(s >= r && s + 1 >= p && s + 1 >= q && q >= p) {
                continue;
            }
            let relabeling = 2 * k0 + ri;
            let role_a = Segment::new(l1, l3);
            let role_b = Segment::new(l0, l2);
            let mut x_minus = vec![l1];
            x_minus.extend(&blocks[1]);
            x_minus.push(l2);
            let mut x_plus = vec![l0];
            x_plus.extend(blocks[3].iter().rev());
            x_plus.push(l3);
            out.push(QuadrantFrame {
                a: role_a,
                b: role_b,
                swapped: role_a != *a,
                o: o.clone(),
                contact: Contact::Crossing,
                leaves: ends.to_vec(),
                x_minus,
                x_plus,
                y_minus: blocks[0].clone(),
                y_plus: blocks[2].clone(),
                counts,
                rotation,
                relabeling,
            });
        }
    }
    out
}

fn shared_frame(ps: &PointSet, a: &Segment, b: &Segment, o_idx: usize) -> QuadrantFrame {
    let pts = ps.points();
    let o = pts[o_idx].clone();
    let mut best: Option<QuadrantFrame> = None;
    for (relabeling, (seg_a, seg_b)) in [(a, b), (b, a)].into_iter().enumerate() {
        let xm1 = seg_a.other(o_idx);
        let xp1 = seg_b.other(o_idx);
        let u = pts[xp1].sub(&o);
        let v = pts[xm1].sub(&o);
        let rotation = if crate::geometry::sign_of(&u.cross(&v)) < 0 {
            Rotation::Clockwise
        } else {
            Rotation::CounterClockwise
        };
        // markers for the directions opposite to the leaves
        let others: Vec<usize> = (0..pts.len()).filter(|&i| i != o_idx).collect();
        let mut probe: Vec<Point> = others.iter().map(|&i| pts[i].clone()).collect();
        let m_minus = probe.len();
        probe.push(o.sub(&u));
        let m_plus = probe.len();
        probe.push(o.sub(&v));
        let order = radial_order_with_ties(&o, &probe, &u, rotation).expect("o is excluded");
        let cut_ids = [others.iter().position(|&i| i == xm1).unwrap(), m_minus, m_plus];
        let mut blocks: Vec<Vec<usize>> = vec![Vec::new()];
        for &k in &order[1..] {
            if cut_ids.contains(&k) {
                blocks.push(Vec::new());
            } else {
                blocks.last_mut().unwrap().push(others[k]);
            }
        }
        let counts = QuadrantCounts::new(
            blocks[1].len() as u64 + 1,
            blocks[3].len() as u64 + 1,
            blocks[0].len() as u64,
            blocks[2].len() as u64,
        );
        if counts.q < counts.p {
            continue;
        }
        if best.as_ref().is_some_and(|f| normalization_key(&counts) <= normalization_key(&f.counts)) {
            continue;
        }
        let mut x_minus = vec![xm1];
        x_minus.extend(&blocks[1]);
        let mut x_plus = vec![xp1];
        x_plus.extend(blocks[3].iter().rev());
        best = Some(QuadrantFrame {
            a: *seg_a,
            b: *seg_b,
            swapped: relabeling == 1,
            o: o.clone(),
            contact: Contact::SharedEndpoint(o_idx),
            leaves: vec![xm1, xp1],
            x_minus,
            x_plus,
            y_minus: blocks[0].clone(),
            y_plus: blocks[2].clone(),
            counts,
            rotation,
            relabeling,
        });
    }
    best.expect("one of the two reflections has |X+| >= |X-|")
}
