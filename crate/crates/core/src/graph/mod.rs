//! The disjointness graph of a point set and exact connectivity oracles.

mod flow;
mod simple;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{intersection_kind, GeometryError, PointSet, Segment};

pub use simple::SimpleGraph;

/// Vertex of the disjointness graph: a segment between two input points.
pub type SegmentId = Segment;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("graph is not connected")]
    NotConnected,
    #[error("no pair of vertices at distance 2 (graph is complete)")]
    NoDistance2Pair,
    #[error("segment {0} is not a vertex of this graph")]
    UnknownSegment(Segment),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    /// degree -> number of vertices with that degree
    pub histogram: BTreeMap<usize, usize>,
}

/// Internally disjoint paths between two vertices, each listed from the
/// first endpoint to the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPaths {
    pub count: usize,
    pub paths: Vec<Vec<usize>>,
}

pub fn degree_stats(g: &SimpleGraph) -> DegreeStats {
    let mut histogram = BTreeMap::new();
    for v in 0..g.vertex_count() {
        *histogram.entry(g.degree(v)).or_insert(0) += 1;
    }
    DegreeStats {
        min: histogram.keys().next().copied().unwrap_or(0),
        max: histogram.keys().next_back().copied().unwrap_or(0),
        histogram,
    }
}

/// Shortest-path length, or `None` when `v` is unreachable from `u`.
pub fn distance(g: &SimpleGraph, u: usize, v: usize) -> Option<usize> {
    g.bfs(u)[v]
}

/// η(a, b): the maximum number of pairwise internally disjoint `a`-`b`
/// paths, computed by unit-capacity max-flow on the vertex-split digraph.
pub fn max_disjoint_paths(g: &SimpleGraph, a: usize, b: usize) -> DisjointPaths {
    let paths = flow::disjoint_paths(g, a, b, usize::MAX);
    DisjointPaths { count: paths.len(), paths }
}

fn local_connectivity(g: &SimpleGraph, a: usize, b: usize, limit: usize) -> usize {
    flow::disjoint_paths(g, a, b, limit).len()
}

/// Exact vertex connectivity κ.
///
/// Disconnected graphs get 0, complete graphs `|V| - 1`. Otherwise a
/// minimum-degree vertex `v` is fixed and κ is the minimum local
/// connectivity over `v` with each non-neighbor, and over each
/// non-adjacent pair of neighbors of `v`; every minimum cut either misses
/// `v` or separates two of its neighbors.
pub fn vertex_connectivity(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    if n <= 1 {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    let v = (0..n).min_by_key(|&u| (g.degree(u), u)).unwrap();
    let delta = g.degree(v);
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    let mut pairs: Vec<(usize, usize)> = (0..n).filter(|&w| w != v && !g.has_edge(v, w)).map(|w| (v, w)).collect();
    for (i, &x) in nbrs.iter().enumerate() {
        for &y in &nbrs[i + 1..] {
            if !g.has_edge(x, y) {
                pairs.push((x, y));
            }
        }
    }
    pairs
        .par_iter()
        .map(|&(x, y)| local_connectivity(g, x, y, delta))
        .min()
        .map_or(delta, |k| k.min(delta))
}

/// κ as the minimum of η over the pairs at distance exactly 2.
pub fn connectivity_via_distance2(g: &SimpleGraph) -> Result<usize, GraphError> {
    let n = g.vertex_count();
    if !g.is_connected() {
        return Err(GraphError::NotConnected);
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
        .filter(|&(u, w)| !g.has_edge(u, w) && g.common_neighbor(u, w))
        .collect();
    pairs
        .par_iter()
        .map(|&(u, w)| local_connectivity(g, u, w, usize::MAX))
        .min()
        .ok_or(GraphError::NoDistance2Pair)
}

/// The disjointness graph D(P): one vertex per segment, adjacent iff the
/// closed segments share no point.
#[derive(Clone, Debug)]
pub struct DisjointnessGraph {
    points: PointSet,
    segments: Vec<Segment>,
    graph: SimpleGraph,
}

impl DisjointnessGraph {
    pub fn build(points: &PointSet) -> Result<Self, GraphError> {
        let segments = points.segments();
        let m = segments.len();
        let rows: Vec<Vec<usize>> = (0..m)
            .into_par_iter()
            .map(|i| {
                let mut adj = Vec::new();
                for j in i + 1..m {
                    if intersection_kind(&segments[i], &segments[j], points)?.is_disjoint() {
                        adj.push(j);
                    }
                }
                Ok(adj)
            })
            .collect::<Result<_, GeometryError>>()?;
        let mut graph = SimpleGraph::new(m);
        for (i, row) in rows.iter().enumerate() {
            for &j in row {
                graph.add_edge(i, j);
            }
        }
        Ok(DisjointnessGraph { points: points.clone(), segments, graph })
    }

    pub fn points(&self) -> &PointSet {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.points.len()
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.segments.len()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn segment(&self, v: usize) -> Segment {
        self.segments[v]
    }

    /// Vertex id of `s` (lexicographic rank of the index pair).
    pub fn index_of(&self, s: &Segment) -> Result<usize, GraphError> {
        let n = self.n();
        let (i, j) = (s.lo(), s.hi());
        if j >= n {
            return Err(GraphError::UnknownSegment(*s));
        }
        Ok(i * (2 * n - i - 1) / 2 + (j - i - 1))
    }

    pub fn adjacent(&self, s: &Segment, t: &Segment) -> Result<bool, GraphError> {
        Ok(self.graph.has_edge(self.index_of(s)?, self.index_of(t)?))
    }

    pub fn neighbors(&self, s: &Segment) -> Result<Vec<Segment>, GraphError> {
        Ok(self.graph.neighbors(self.index_of(s)?).map(|v| self.segments[v]).collect())
    }

    pub fn degree_stats(&self) -> DegreeStats {
        degree_stats(&self.graph)
    }

    pub fn distance(&self, u: &Segment, v: &Segment) -> Result<Option<usize>, GraphError> {
        Ok(distance(&self.graph, self.index_of(u)?, self.index_of(v)?))
    }

    /// η(P; a, b) with witness paths written as segment lists.
    pub fn max_disjoint_paths(&self, a: &Segment, b: &Segment) -> Result<(usize, Vec<Vec<Segment>>), GraphError> {
        let res = max_disjoint_paths(&self.graph, self.index_of(a)?, self.index_of(b)?);
        let paths = res.paths.iter().map(|p| p.iter().map(|&v| self.segments[v]).collect()).collect();
        Ok((res.count, paths))
    }

    /// Grows `initial` to a largest family of internally disjoint `a`-`b`
    /// paths in which every step `u -> v` satisfies `allow(u, v)`.
    /// `initial` must already be such a family.
    pub fn augment_paths(
        &self,
        a: &Segment,
        b: &Segment,
        initial: &[Vec<Segment>],
        allow: &dyn Fn(&Segment, &Segment) -> bool,
    ) -> Result<Vec<Vec<Segment>>, GraphError> {
        let (ia, ib) = (self.index_of(a)?, self.index_of(b)?);
        let init = initial
            .iter()
            .map(|p| p.iter().map(|s| self.index_of(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let segs = &self.segments;
        let paths = flow::augment_paths(&self.graph, ia, ib, &init, &|u, v| allow(&segs[u], &segs[v]), usize::MAX);
        Ok(paths.iter().map(|p| p.iter().map(|&v| segs[v]).collect()).collect())
    }

    pub fn vertex_connectivity(&self) -> usize {
        vertex_connectivity(&self.graph)
    }

    pub fn connectivity_via_distance2(&self) -> Result<usize, GraphError> {
        connectivity_via_distance2(&self.graph)
    }

    /// Pairs `(a, b)` with `a < b` at distance exactly 2.
    pub fn distance_two_pairs(&self) -> Vec<(Segment, Segment)> {
        let m = self.vertex_count();
        let mut out = Vec::new();
        for u in 0..m {
            for v in u + 1..m {
                if !self.graph.has_edge(u, v) && self.graph.common_neighbor(u, v) {
                    out.push((self.segments[u], self.segments[v]));
                }
            }
        }
        out
    }

    pub fn export(&self) -> GraphExport {
        GraphExport {
            n: self.n(),
            vertices: self.segments.clone(),
            edges: self.graph.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

/// JSON shape of an exported graph: vertex ids index into `vertices`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphExport {
    pub n: usize,
    pub vertices: Vec<Segment>,
    pub edges: Vec<[usize; 2]>,
}

#[cfg(test)]
mod tests;
