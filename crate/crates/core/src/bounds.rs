//! Closed-form counts: the connectivity lower bound κ(n) and the quantities
//! attached to a crossing pair of segments.

use serde::{Deserialize, Serialize};

/// C(m, 2), taken as 0 whenever m < 2 (negative m included).
pub fn binom2(m: i64) -> u128 {
    if m < 2 {
        0
    } else {
        let m = m as u128;
        m * (m - 1) / 2
    }
}

/// κ(n) = C(⌊(n-2)/2⌋, 2) + C(⌈(n-2)/2⌉, 2).
pub fn kappa(n: u64) -> u128 {
    let m = n.saturating_sub(2) as i64;
    binom2(m / 2) + binom2(m - m / 2)
}

/// κ(n) - κ(n-1) written without binomials: (n-3)/2 for odd n, (n-4)/2
/// for even n.
pub fn kappa_difference(n: u64) -> i128 {
    let n = n as i128;
    if n % 2 == 1 {
        (n - 3) / 2
    } else {
        (n - 4) / 2
    }
}

/// Sizes of the four groups of points around a crossing (or shared
/// endpoint) of two segments a and b: `p - 1` and `q - 1` points in the two
/// sectors bounded by b's rays, `r` and `s` in the sectors bounded by a's.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadrantCounts {
    pub p: u64,
    pub q: u64,
    pub r: u64,
    pub s: u64,
}

impl QuadrantCounts {
    pub fn new(p: u64, q: u64, r: u64, s: u64) -> Self {
        QuadrantCounts { p, q, r, s }
    }

    pub fn is_crossing_normalized(&self) -> bool {
        self.p >= 1 && self.q >= self.p && self.s >= self.r
    }

    pub fn is_shared_normalized(&self) -> bool {
        self.p >= 1 && self.q >= self.p
    }

    /// Point count for a crossing pair.
    pub fn crossing_n(&self) -> u64 {
        self.p + self.q + self.r + self.s + 2
    }

    /// Point count for a pair sharing an endpoint.
    pub fn shared_n(&self) -> u64 {
        self.p + self.q + self.r + self.s + 1
    }

    fn wide(&self) -> (i128, i128, i128, i128) {
        (self.p as i128, self.q as i128, self.r as i128, self.s as i128)
    }

    /// |A| = p(s+1) + q(r+1) - 2.
    pub fn a_size(&self) -> u128 {
        let (p, q, r, s) = self.wide();
        (p * (s + 1) + q * (r + 1) - 2).max(0) as u128
    }

    /// |B| = p(r+1) + q(s+1) - 2.
    pub fn b_size(&self) -> u128 {
        let (p, q, r, s) = self.wide();
        (p * (r + 1) + q * (s + 1) - 2).max(0) as u128
    }
}

/// Number of segments disjoint from both a and b.
pub fn delta2_formula(c: &QuadrantCounts) -> u128 {
    binom2(c.q as i64 - 1) + binom2(c.p as i64 - 1) + binom2(c.r as i64) + binom2(c.s as i64)
}

/// The smaller of |A| and |B|; with s ≥ r and q ≥ p this is |A|.
pub fn delta3_formula(c: &QuadrantCounts) -> u128 {
    c.a_size()
}

/// Maximum number of internally disjoint a-b paths of length 3 that avoid
/// the common neighbours of a and b.
///
/// Exact when the points of the large sector are in convex position with
/// the leaves. Otherwise it is only a lower bound for `q = 1, r = 0`: an
/// interior sector point can make both cross pairings disjoint.
pub fn eta3_formula(c: &QuadrantCounts) -> u128 {
    let d3 = delta3_formula(c);
    if c.q == 1 && c.r == 0 {
        d3.saturating_sub(1)
    } else {
        d3
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn choose2_by_counting(m: i64) -> u128 {
        let mut c = 0;
        for i in 0..m.max(0) {
            for _ in i + 1..m {
                c += 1;
            }
        }
        c
    }

    #[test]
    fn binomial_convention() {
        for m in -5..60 {
            assert_eq!(binom2(m), choose2_by_counting(m), "m = {m}");
        }
        assert_eq!(binom2(1 << 40), (1u128 << 79) - (1u128 << 39));
    }

    #[test]
    fn kappa_values() {
        assert_eq!(kappa(3), 0);
        assert_eq!(kappa(4), 0);
        assert_eq!(kappa(5), 1);
        assert_eq!(kappa(6), 2);
        assert_eq!(kappa(8), 6);
        assert_eq!(kappa(10), 12);
    }

    #[test]
    fn difference_formula() {
        assert_eq!(kappa_difference(7), 2);
        assert_eq!(kappa_difference(8), 2);
        assert_eq!(kappa_difference(4), 0);
        for n in 4..=200u64 {
            assert_eq!(kappa(n) as i128 - kappa(n - 1) as i128, kappa_difference(n), "n = {n}");
            assert!(kappa(n) >= kappa(n - 1));
        }
    }

    #[test]
    fn balanced_split_minimizes() {
        for n in 3..=40i64 {
            let best = (0..=n - 2).map(|n1| binom2(n1) + binom2(n - 2 - n1)).min().unwrap();
            assert_eq!(best, kappa(n as u64), "n = {n}");
        }
    }

    #[test]
    fn quadrant_formulas() {
        let c = QuadrantCounts::new(1, 1, 0, 2);
        assert_eq!(delta2_formula(&c), 1);
        assert_eq!(delta3_formula(&c), 2);
        assert_eq!(eta3_formula(&c), 1);
        let c = QuadrantCounts::new(1, 1, 0, 0);
        assert_eq!(delta2_formula(&c), 0);
        assert_eq!(delta3_formula(&c), 0);
        let c = QuadrantCounts::new(2, 3, 1, 2);
        assert_eq!(delta2_formula(&c), 2);
        assert_eq!(delta3_formula(&c), 10);
        assert_eq!(c.b_size(), 11);
        assert_eq!(c.crossing_n(), 10);
        assert_eq!(eta3_formula(&QuadrantCounts::new(2, 2, 0, 1)), 4);
        assert_eq!(eta3_formula(&QuadrantCounts::new(1, 2, 1, 1)), 4);
    }

    proptest! {
        #[test]
        fn a_is_never_larger_than_b(p in 1u64..30, dq in 0u64..30, r in 0u64..30, ds in 0u64..30) {
            let c = QuadrantCounts::new(p, p + dq, r, r + ds);
            prop_assert!(c.is_crossing_normalized());
            // |B| - |A| = (q - p)(s - r)
            prop_assert_eq!(c.b_size() - c.a_size(), (dq * ds) as u128);
        }

        #[test]
        fn crossing_pairs_meet_the_bound(p in 1u64..20, dq in 0u64..20, r in 0u64..20, ds in 0u64..20) {
            let c = QuadrantCounts::new(p, p + dq, r, r + ds);
            prop_assume!(c.s + 1 >= c.q && c.s + 1 >= c.p);
            prop_assert!(delta2_formula(&c) + delta3_formula(&c) >= kappa(c.crossing_n()));
        }
    }
}
