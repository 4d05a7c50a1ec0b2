use super::*;
use crate::geometry::PointSet;
use proptest::prelude::*;

/// κ straight from the definition: the largest k < |V| such that removing
/// any k - 1 vertices leaves the graph connected.
pub(crate) fn brute_force_connectivity(g: &SimpleGraph) -> usize {
    let n = g.vertex_count();
    let mut best = 0;
    for k in 1..n {
        // k-connected iff no cut of size < k
        let mut ok = true;
        for size in 0..k {
            if subsets(n, size).any(|w| !g.without_vertices(&w).is_connected()) {
                ok = false;
                break;
            }
        }
        if ok {
            best = k;
        } else {
            break;
        }
    }
    best
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = idx.clone();
        // advance to the next combination
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// η(a, b) via Menger: the smallest vertex set separating a from b, plus
/// one for a direct edge.
fn brute_force_local(g: &SimpleGraph, a: usize, b: usize) -> usize {
    let n = g.vertex_count();
    let mut h = SimpleGraph::new(n);
    for (u, v) in g.edges() {
        if (u, v) != (a.min(b), a.max(b)) {
            h.add_edge(u, v);
        }
    }
    let others: Vec<usize> = (0..n).filter(|&v| v != a && v != b).collect();
    let direct = usize::from(g.has_edge(a, b));
    for size in 0..=others.len() {
        for pick in subsets(others.len(), size) {
            let cut: Vec<usize> = pick.iter().map(|&i| others[i]).collect();
            let rest = h.without_vertices(&cut);
            let idx = |v: usize| v - cut.iter().filter(|&&c| c < v).count();
            if rest.bfs(idx(a))[idx(b)].is_none() {
                return size + direct;
            }
        }
    }
    unreachable!("removing every other vertex separates a from b")
}

fn complete(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

fn cycle(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(n);
    for u in 0..n {
        g.add_edge(u, (u + 1) % n);
    }
    g
}

fn verify_disjoint(g: &SimpleGraph, a: usize, b: usize, paths: &[Vec<usize>]) {
    let mut seen = std::collections::HashSet::new();
    for p in paths {
        assert_eq!(p.first(), Some(&a));
        assert_eq!(p.last(), Some(&b));
        for w in p.windows(2) {
            assert!(g.has_edge(w[0], w[1]));
        }
        for &v in &p[1..p.len() - 1] {
            assert!(seen.insert(v), "vertex {v} reused");
        }
    }
}

pub(crate) fn hexagon() -> PointSet {
    PointSet::from_ints(&[(2, 0), (1, -2), (-1, -2), (-2, 0), (-1, 2), (1, 2)]).unwrap()
}

pub(crate) fn octagon() -> PointSet {
    PointSet::from_ints(&[(3, 1), (3, -1), (1, -3), (-1, -3), (-3, -1), (-3, 1), (-1, 3), (1, 3)]).unwrap()
}

pub(crate) fn pentagon() -> PointSet {
    PointSet::from_ints(&[(0, 10), (9, 3), (6, -8), (-6, -8), (-9, 3)]).unwrap()
}

fn square_plus_one() -> PointSet {
    PointSet::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)]).unwrap()
}

/// Adjacency by enumerating every segment pair directly from orientations.
fn brute_force_edges(ps: &PointSet) -> usize {
    use crate::geometry::orientation;
    let segs = ps.segments();
    let p = ps.points();
    let mut edges = 0;
    for (i, s) in segs.iter().enumerate() {
        for t in &segs[i + 1..] {
            if s.shared_endpoint(t).is_some() {
                continue;
            }
            let (a, b, c, d) = (&p[s.lo()], &p[s.hi()], &p[t.lo()], &p[t.hi()]);
            let cross = orientation(a, b, c) != orientation(a, b, d) && orientation(c, d, a) != orientation(c, d, b);
            if !cross {
                edges += 1;
            }
        }
    }
    edges
}

#[test]
fn five_point_graph() {
    let ps = square_plus_one();
    let g = DisjointnessGraph::build(&ps).unwrap();
    assert_eq!(g.vertex_count(), 10);
    assert_eq!(g.graph().edge_count(), brute_force_edges(&ps));
    for (s, t) in [(0, 1), (1, 2), (2, 3), (0, 3)] {
        let v = g.index_of(&Segment::new(s, t)).unwrap();
        assert_eq!(g.graph().degree(v), 3);
    }
    assert_eq!(g.degree_stats().max, 3);
    let k = g.vertex_connectivity();
    assert_eq!(k, brute_force_connectivity(g.graph()));
    assert_eq!(g.connectivity_via_distance2().unwrap(), k);
}

#[test]
fn triangle_graph_is_edgeless() {
    let g = DisjointnessGraph::build(&PointSet::from_ints(&[(0, 0), (2, 0), (1, 2)]).unwrap()).unwrap();
    assert_eq!(g.vertex_count(), 3);
    assert_eq!(g.graph().edge_count(), 0);
    let st = g.degree_stats();
    assert_eq!((st.min, st.max), (0, 0));
    assert_eq!(g.vertex_connectivity(), 0);
    assert_eq!(g.distance(&Segment::new(0, 1), &Segment::new(1, 2)).unwrap(), None);
}

#[test]
fn convex_quadrilateral_has_two_edges() {
    let ps = PointSet::from_ints(&[(0, 0), (4, 0), (4, 4), (0, 4)]).unwrap();
    let g = DisjointnessGraph::build(&ps).unwrap();
    assert_eq!(brute_force_edges(&ps), 2);
    assert_eq!(g.graph().edge_count(), 2);
    assert!(g.adjacent(&Segment::new(0, 1), &Segment::new(2, 3)).unwrap());
    assert!(g.adjacent(&Segment::new(1, 2), &Segment::new(0, 3)).unwrap());
    assert!(!g.adjacent(&Segment::new(0, 2), &Segment::new(1, 3)).unwrap());
}

#[test]
fn index_of_matches_enumeration() {
    let g = DisjointnessGraph::build(&octagon()).unwrap();
    for (v, s) in g.segments().iter().enumerate() {
        assert_eq!(g.index_of(s).unwrap(), v);
    }
    assert!(g.index_of(&Segment::new(0, 8)).is_err());
}

#[test]
fn hexagon_degrees_and_connectivity() {
    let g = DisjointnessGraph::build(&hexagon()).unwrap();
    let st = g.degree_stats();
    assert_eq!(st.min, 2);
    assert_eq!(st.max, 6);
    assert_eq!(g.vertex_connectivity(), 2);
    assert_eq!(g.connectivity_via_distance2().unwrap(), 2);
}

#[test]
fn pentagon_connectivity_is_one() {
    let g = DisjointnessGraph::build(&pentagon()).unwrap();
    assert_eq!(g.degree_stats().max, 3);
    assert_eq!(g.vertex_connectivity(), 1);
    assert_eq!(brute_force_connectivity(g.graph()), 1);
}

#[test]
fn octagon_connectivity_is_six() {
    let g = DisjointnessGraph::build(&octagon()).unwrap();
    assert_eq!(g.vertex_count(), 28);
    assert_eq!(g.degree_stats().min, 6);
    assert_eq!(g.degree_stats().max, 15);
    assert_eq!(g.vertex_connectivity(), 6);
    assert_eq!(g.connectivity_via_distance2().unwrap(), 6);
}

#[test]
fn hexagon_distances() {
    let g = DisjointnessGraph::build(&hexagon()).unwrap();
    // 0-2 and 1-3 cross near vertex 1; 4-5 avoids both
    let (a, b) = (Segment::new(0, 2), Segment::new(1, 3));
    assert_eq!(g.distance(&a, &b).unwrap(), Some(2));
    assert_eq!(g.distance(&Segment::new(0, 1), &Segment::new(3, 4)).unwrap(), Some(1));
    // halving diagonals have no common disjoint segment
    assert_eq!(g.distance(&Segment::new(0, 3), &Segment::new(1, 4)).unwrap(), Some(3));
}

#[test]
fn halving_diagonals_of_hexagon() {
    let g = DisjointnessGraph::build(&hexagon()).unwrap();
    let (count, paths) = g.max_disjoint_paths(&Segment::new(0, 3), &Segment::new(1, 4)).unwrap();
    assert_eq!(count, 2);
    assert_eq!(paths.len(), 2);
}

#[test]
fn small_named_graphs() {
    let k4 = complete(4);
    let r = max_disjoint_paths(&k4, 0, 1);
    assert_eq!(r.count, 3);
    verify_disjoint(&k4, 0, 1, &r.paths);
    assert!(r.paths.contains(&vec![0, 1]));
    assert_eq!(vertex_connectivity(&k4), 3);

    let path = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]);
    assert_eq!(max_disjoint_paths(&path, 0, 2).count, 1);
    assert_eq!(vertex_connectivity(&path), 1);

    let c5 = cycle(5);
    assert_eq!(vertex_connectivity(&c5), 2);
    assert_eq!(connectivity_via_distance2(&c5).unwrap(), 2);
    assert_eq!(connectivity_via_distance2(&k4), Err(GraphError::NoDistance2Pair));
    assert_eq!(connectivity_via_distance2(&SimpleGraph::new(3)), Err(GraphError::NotConnected));
    assert_eq!(vertex_connectivity(&SimpleGraph::new(1)), 0);
}

fn random_graph() -> impl Strategy<Value = SimpleGraph> {
    (2usize..9).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn connectivity_matches_definition(g in random_graph()) {
        prop_assert_eq!(vertex_connectivity(&g), brute_force_connectivity(&g));
    }

    #[test]
    fn distance_two_sweep_agrees(g in random_graph()) {
        prop_assume!(g.is_connected() && !g.is_complete());
        prop_assert_eq!(connectivity_via_distance2(&g).unwrap(), vertex_connectivity(&g));
    }

    #[test]
    fn flow_paths_are_disjoint_and_bounded(g in random_graph(), a in 0usize..9, b in 0usize..9) {
        let n = g.vertex_count();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let r = max_disjoint_paths(&g, a, b);
        verify_disjoint(&g, a, b, &r.paths);
        prop_assert!(r.count <= g.degree(a).min(g.degree(b)));
        prop_assert_eq!(r.count, brute_force_local(&g, a, b));
    }

    #[test]
    fn warm_started_flow_reaches_the_maximum(g in random_graph(), a in 0usize..9, b in 0usize..9, keep in 0usize..4) {
        let n = g.vertex_count();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let full = max_disjoint_paths(&g, a, b);
        let start: Vec<Vec<usize>> = full.paths.iter().take(keep).cloned().collect();
        let grown = super::flow::augment_paths(&g, a, b, &start, &|_, _| true, usize::MAX);
        verify_disjoint(&g, a, b, &grown);
        prop_assert_eq!(grown.len(), full.count);
    }

    #[test]
    fn restricted_flow_respects_the_filter(g in random_graph(), a in 0usize..9, b in 0usize..9) {
        let n = g.vertex_count();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        // forbid steps between vertices of equal parity
        let allow = |u: usize, v: usize| u % 2 != v % 2;
        let paths = super::flow::augment_paths(&g, a, b, &[], &allow, usize::MAX);
        verify_disjoint(&g, a, b, &paths);
        for p in &paths {
            prop_assert!(p.windows(2).all(|w| allow(w[0], w[1])));
        }
        let mut h = SimpleGraph::new(n);
        for u in 0..n {
            for v in g.neighbors(u) {
                if u < v && allow(u, v) {
                    h.add_edge(u, v);
                }
            }
        }
        prop_assert_eq!(paths.len(), brute_force_local(&h, a, b));
    }
}

#[test]
fn degree_bounds_on_small_sets() {
    use crate::bounds::binom2;
    for ps in [square_plus_one(), hexagon(), octagon(), pentagon()] {
        let n = ps.len() as i64;
        let g = DisjointnessGraph::build(&ps).unwrap();
        for (v, s) in g.segments().iter().enumerate() {
            let deg = g.graph().degree(v) as u128;
            assert!(deg <= binom2(n - 2));
            // side counts of the line spanned by s
            let (mut left, mut right) = (0, 0);
            for k in 0..ps.len() {
                if s.has_endpoint(k) {
                    continue;
                }
                match crate::geometry::orientation(ps.point(s.lo()), ps.point(s.hi()), ps.point(k)).sign() {
                    1 => left += 1,
                    _ => right += 1,
                }
            }
            assert!(deg >= binom2(left) + binom2(right));
        }
    }
}
