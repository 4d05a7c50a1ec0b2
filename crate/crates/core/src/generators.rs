//! Seeded point-set families.
//!
//! All randomness comes from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64`, so a `(family, n, seed, bound)` tuple always yields the
//! same set.

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{extends_general_position, hull_points, validate_general_position, Point, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("invalid arguments: {0}")]
    InvalidArgument(String),
    #[error("no valid set after {attempts} attempts; try a larger bound")]
    RejectionBudgetExceeded { attempts: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Convex,
    DoubleChain,
    RandomUniform,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Convex => "convex",
            Family::DoubleChain => "double-chain",
            Family::RandomUniform => "random",
        })
    }
}

impl FromStr for Family {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "convex" => Ok(Family::Convex),
            "double-chain" | "double_chain" => Ok(Family::DoubleChain),
            "random" | "random_uniform" | "random-uniform" => Ok(Family::RandomUniform),
            _ => Err(GeneratorError::InvalidArgument(format!("unknown family {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub family: Family,
    pub n: usize,
    pub seed: u64,
    pub coordinate_bound: u64,
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<PointSet, GeneratorError> {
        match self.family {
            Family::Convex => gen_convex(self.n, self.seed),
            Family::DoubleChain => gen_double_chain(self.n, self.seed),
            Family::RandomUniform => gen_random(self.n, self.seed, self.coordinate_bound),
        }
    }
}

/// Default coordinate bound for random sets of size `n`.
pub fn default_bound(n: usize) -> u64 {
    (n as u64 * n as u64).max(1_000_000)
}

const RETRIES: usize = 1000;

/// `n` integer points in convex position on a rounded circle, listed
/// clockwise.
pub fn gen_convex(n: usize, seed: u64) -> Result<PointSet, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::InvalidArgument("convex sets need n >= 3".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let radius = (1u64 << 20).max(64 * (n as u64) * (n as u64)) as f64;
    for _ in 0..RETRIES {
        let mut angles: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * TAU).collect();
        angles.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let pts: Vec<Point> = angles
            .iter()
            .map(|t| Point::from_ints((radius * t.cos()).round() as i64, (radius * t.sin()).round() as i64))
            .collect();
        if validate_general_position(&pts).is_err() {
            continue;
        }
        let cycle = hull_points(&pts);
        if cycle.len() != n {
            continue;
        }
        let ordered = cycle.iter().map(|&i| pts[i].clone()).collect();
        return Ok(PointSet::new(ordered).expect("validated above"));
    }
    Err(GeneratorError::RejectionBudgetExceeded { attempts: RETRIES })
}

fn distinct_ints(rng: &mut ChaCha8Rng, k: usize, lo: i64, hi: i64) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(k);
    while out.len() < k {
        let v = rng.random_range(lo..=hi);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}

/// Two flat convex chains facing each other: `⌈n/2⌉` points on
/// `y = H + x²` and `⌊n/2⌋` on `y = -H - x²`, with `H` large enough that
/// no line through two points of one chain separates points of the other.
pub fn gen_double_chain(n: usize, seed: u64) -> Result<PointSet, GeneratorError> {
    if n < 4 {
        return Err(GeneratorError::InvalidArgument("double chains need n >= 4".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let w = 8 * n as i64;
    let h = 8 * w * w;
    let (up, down) = (n.div_ceil(2), n / 2);
    for _ in 0..RETRIES {
        let mut pts: Vec<Point> = distinct_ints(&mut rng, up, -w, w).into_iter().map(|x| Point::from_ints(x, h + x * x)).collect();
        pts.extend(distinct_ints(&mut rng, down, -w, w).into_iter().map(|x| Point::from_ints(x, -h - x * x)));
        if let Ok(ps) = PointSet::new(pts) {
            return Ok(ps);
        }
    }
    Err(GeneratorError::RejectionBudgetExceeded { attempts: RETRIES })
}

/// Uniform integer points in `[0, bound]²`, drawn one at a time and
/// rejected when they would create a duplicate or a collinear triple.
pub fn gen_random(n: usize, seed: u64, bound: u64) -> Result<PointSet, GeneratorError> {
    if n < 3 {
        return Err(GeneratorError::InvalidArgument("random sets need n >= 3".into()));
    }
    if bound < (n as u64) * (n as u64) {
        return Err(GeneratorError::InvalidArgument(format!("bound {bound} is below n² = {}", n * n)));
    }
    if bound > i64::MAX as u64 {
        return Err(GeneratorError::InvalidArgument("bound exceeds the 64-bit coordinate range".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = 10_000 * n;
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    let mut attempts = 0;
    while pts.len() < n {
        attempts += 1;
        if attempts > budget {
            return Err(GeneratorError::RejectionBudgetExceeded { attempts: budget });
        }
        let x = rng.random_range(0..=bound) as i64;
        let y = rng.random_range(0..=bound) as i64;
        let c = Point::from_ints(x, y);
        if extends_general_position(&pts, &c) {
            pts.push(c);
        }
    }
    Ok(PointSet::new(pts).expect("every point was checked on insertion"))
}
