use super::frame::{Contact, QuadrantFrame};
use super::ConstructError;
use crate::geometry::Segment;

/// One entry of the map: a segment of `A`, its partner in `B`, and the
/// block (1 to 8) it belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PsiPair {
    pub block: usize,
    pub from: Segment,
    pub to: Segment,
}

/// The domain of ψ split into its eight blocks, plus the excluded set 𝓘.
#[derive(Clone, Debug)]
pub struct PsiDomain {
    pub blocks: [Vec<Segment>; 8],
    pub excluded: Vec<Segment>,
    pub pairs: Vec<PsiPair>,
}

impl PsiDomain {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// Builds ψ for a crossing frame.
///
/// When `q = p` the segment `x⁺₁x⁺_q` belongs to block 1 and is mapped
/// there, so it is only excluded for `q > p`.
pub fn psi_domain(f: &QuadrantFrame) -> Result<PsiDomain, ConstructError> {
    if f.contact != Contact::Crossing {
        return Err(ConstructError::PreconditionViolated("ψ needs a crossing frame".into()));
    }
    let (p, q, r, s) = (f.p(), f.q(), f.r(), f.s());
    if s == 0 {
        return Err(ConstructError::PreconditionViolated("ψ needs s >= 1".into()));
    }
    let (xm, xp, ym, yp) = (|j| f.xm(j), |j| f.xp(j), |i| f.ym(i), |i| f.yp(i));
    let seg = Segment::new;
    let mut pairs = Vec::new();
    let mut push = |block: usize, from: Segment, to: Segment| pairs.push(PsiPair { block, from, to });
    for j in 2..=p {
        push(1, seg(xp(j), xp(1)), seg(ym(1), xm(j)));
    }
    for j in 2..=p {
        for i in 1..=r {
            push(2, seg(xp(j), ym(i)), seg(ym(i + 1), xm(j)));
        }
    }
    for i in 1..r {
        push(3, seg(xp(1), ym(i)), seg(ym(i + 1), xm(1)));
    }
    for j in 2..=p {
        push(4, seg(xm(j), xm(p + 1)), seg(yp(1), xp(j)));
    }
    for j in 2..=p {
        for i in 1..=s {
            push(5, seg(xm(j), yp(i)), seg(yp(i + 1), xp(j)));
        }
    }
    for i in 1..s {
        push(6, seg(xm(p + 1), yp(i)), seg(yp(i + 1), xp(p + 1)));
    }
    for j in (p + 1).max(2)..=q {
        for i in 1..=r {
            push(7, seg(xp(j), ym(i)), seg(yp(s - i + 1), xp(j + 1)));
        }
    }
    for j in (p + 1).max(2)..q {
        push(8, seg(xp(j), xp(1)), seg(xp(j + 1), xp(q + 1)));
    }
    let mut blocks: [Vec<Segment>; 8] = Default::default();
    for pr in &pairs {
        blocks[pr.block - 1].push(pr.from);
    }
    let mut excluded = vec![seg(xm(p + 1), yp(s))];
    if r >= 1 {
        excluded.push(seg(xp(1), ym(r)));
    }
    if q >= 2 {
        excluded.push(seg(xp(1), xp(q)));
    }
    Ok(PsiDomain { blocks, excluded, pairs })
}

/// ψ(uv) for a segment of its domain.
pub fn psi(uv: &Segment, f: &QuadrantFrame) -> Result<Segment, ConstructError> {
    psi_domain(f)?
        .pairs
        .iter()
        .find(|pr| pr.from == *uv)
        .map(|pr| pr.to)
        .ok_or(ConstructError::NotInDomain(*uv))
}

/// Expected block sizes `|A_1|..|A_8|` for the frame's counts.
pub fn expected_block_sizes(f: &QuadrantFrame) -> [usize; 8] {
    let (p, q, r, s) = (f.p(), f.q(), f.r(), f.s());
    [
        p - 1,
        r * (p - 1),
        r.saturating_sub(1),
        p - 1,
        s * (p - 1),
        s.saturating_sub(1),
        r * (q - p),
        (q - p).saturating_sub(1),
    ]
}
