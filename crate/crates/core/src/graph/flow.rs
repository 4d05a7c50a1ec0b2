//! Unit-capacity max-flow on the vertex-split digraph.

use std::collections::VecDeque;

use super::SimpleGraph;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

/// Dinic's algorithm; every capacity in this crate is 0 or 1.
#[derive(Clone, Debug)]
struct Dinic {
    adj: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    fn new(n: usize) -> Self {
        Dinic { adj: vec![Vec::new(); n], level: vec![-1; n], iter: vec![0; n] }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        let rf = self.adj[to].len();
        let rt = self.adj[from].len();
        self.adj[from].push(Arc { to, cap, rev: rf });
        self.adj[to].push(Arc { to: from, cap: 0, rev: rt });
    }

    fn push_unit(&mut self, u: usize, k: usize) {
        let arc = &mut self.adj[u][k];
        debug_assert_eq!(arc.cap, 1);
        arc.cap = 0;
        let (to, rev) = (arc.to, arc.rev);
        self.adj[to][rev].cap += 1;
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for a in &self.adj[u] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[u] + 1;
                    q.push_back(a.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize) -> bool {
        if u == t {
            return true;
        }
        while self.iter[u] < self.adj[u].len() {
            let i = self.iter[u];
            let (to, cap) = (self.adj[u][i].to, self.adj[u][i].cap);
            if cap > 0 && self.level[to] == self.level[u] + 1 && self.dfs(to, t) {
                self.adj[u][i].cap -= 1;
                let rev = self.adj[u][i].rev;
                self.adj[to][rev].cap += 1;
                return true;
            }
            self.iter[u] += 1;
        }
        false
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit && self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            while flow < limit && self.dfs(s, t) {
                flow += 1;
            }
        }
        flow
    }
}

const fn node_in(v: usize) -> usize {
    2 * v
}

const fn node_out(v: usize) -> usize {
    2 * v + 1
}

/// Maximum number of internally vertex-disjoint `a`-`b` paths, with one
/// witness path (as a vertex list from `a` to `b`) per unit of flow.
/// A direct edge `ab` counts as one path.
pub(crate) fn disjoint_paths(g: &SimpleGraph, a: usize, b: usize, limit: usize) -> Vec<Vec<usize>> {
    augment_paths(g, a, b, &[], &|_, _| true, limit)
}

/// Like [`disjoint_paths`], but only arcs `u -> v` with `allow(u, v)` may
/// carry flow, and the search starts from the flow of `initial`, whose
/// paths must be internally disjoint and use allowed arcs only. The result
/// is never smaller than `initial`.
pub(crate) fn augment_paths(
    g: &SimpleGraph,
    a: usize,
    b: usize,
    initial: &[Vec<usize>],
    allow: &dyn Fn(usize, usize) -> bool,
    limit: usize,
) -> Vec<Vec<usize>> {
    assert_ne!(a, b);
    let n = g.vertex_count();
    let mut d = Dinic::new(2 * n);
    let mut forward: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 2 * n];
    for v in 0..n {
        if v != a && v != b {
            d.add_arc(node_in(v), node_out(v), 1);
        }
    }
    for u in 0..n {
        if u == b {
            continue;
        }
        for v in g.neighbors(u) {
            if v == a || !allow(u, v) {
                continue;
            }
            let idx = d.adj[node_out(u)].len();
            d.add_arc(node_out(u), node_in(v), 1);
            forward[node_out(u)].push((idx, v));
        }
    }
    let mut pushed = 0;
    for path in initial {
        for w in path.windows(2) {
            let out = node_out(w[0]);
            let k = forward[out].iter().find(|f| f.1 == w[1]).expect("initial path uses a missing arc").0;
            d.push_unit(out, k);
        }
        for &v in &path[1..path.len() - 1] {
            let k = d.adj[node_in(v)].iter().position(|e| e.to == node_out(v) && e.cap == 1).expect("initial paths overlap");
            d.push_unit(node_in(v), k);
        }
        pushed += 1;
    }
    let flow = pushed + d.max_flow(node_out(a), node_in(b), limit.saturating_sub(pushed));

    // Walk saturated arcs from a; vertex capacities keep walks simple.
    let mut used: Vec<Vec<bool>> = forward.iter().map(|f| vec![false; f.len()]).collect();
    let mut paths = Vec::with_capacity(flow);
    for _ in 0..flow {
        let mut path = vec![a];
        let mut cur = a;
        while cur != b {
            let out = node_out(cur);
            let k = (0..forward[out].len())
                .find(|&k| d.adj[out][forward[out][k].0].cap == 0 && !used[out][k])
                .expect("flow decomposition broke conservation");
            used[out][k] = true;
            let next = forward[out][k].1;
            path.push(next);
            cur = next;
        }
        paths.push(path);
    }
    paths
}
