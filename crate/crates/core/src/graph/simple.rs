use std::collections::VecDeque;

/// Undirected simple graph over vertices `0..n` with dense bitset rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        SimpleGraph { n, words, rows: vec![0; n * words] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u == v {
            return;
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    fn row(&self, u: usize) -> &[u64] {
        &self.rows[u * self.words..(u + 1) * self.words]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbors of `u` in increasing order.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(u).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    pub fn common_neighbor(&self, u: usize, v: usize) -> bool {
        self.row(u).iter().zip(self.row(v)).any(|(a, b)| a & b != 0)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    /// Sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.neighbors(u).filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|u| self.degree(u) + 1 == self.n)
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for v in self.neighbors(u) {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Graphs with at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.bfs(0).iter().all(Option::is_some)
    }

    /// The subgraph induced by removing every vertex in `removed`.
    /// Returned vertex ids follow the order of the survivors.
    pub fn without_vertices(&self, removed: &[usize]) -> SimpleGraph {
        let mut keep = vec![true; self.n];
        for &r in removed {
            keep[r] = false;
        }
        let ids: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in ids.iter().enumerate() {
            index[v] = i;
        }
        let mut g = SimpleGraph::new(ids.len());
        for &u in &ids {
            for v in self.neighbors(u).filter(|&v| v > u && keep[v]) {
                g.add_edge(index[u], index[v]);
            }
        }
        g
    }
}
