//! Vertex connectivity.
//!
//! `vertex_connectivity` uses unit-capacity max-flow on the split graph
//! (each vertex becomes an in/out pair joined by a capacity-one arc) and
//! Even's observation that only the first κ+1 vertices need to be tried as
//! sources. Complete graphs have κ = n − 1 by convention.

use crate::error::GraphError;
use crate::graph::{bits, Graph};

const INF: i32 = i32::MAX / 2;

struct SplitFlow {
    nodes: usize,
    cap: Vec<i32>,
}

impl SplitFlow {
    fn new(g: &Graph, s: usize, t: usize) -> Self {
        let nodes = 2 * g.order();
        let mut cap = vec![0; nodes * nodes];
        for v in 0..g.order() {
            let c = if v == s || v == t { INF } else { 1 };
            cap[(2 * v) * nodes + 2 * v + 1] = c;
            for w in bits(g.neighbors(v)) {
                cap[(2 * v + 1) * nodes + 2 * w] = INF;
            }
        }
        SplitFlow { nodes, cap }
    }

    /// BFS over residual arcs; returns the parent array (usize::MAX = unseen).
    fn residual_bfs(&self, from: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.nodes];
        parent[from] = from;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            let row = &self.cap[x * self.nodes..(x + 1) * self.nodes];
            for (y, &c) in row.iter().enumerate() {
                if c > 0 && parent[y] == usize::MAX {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    /// Pushes unit augmenting paths until none remain or `limit` is reached.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let parent = self.residual_bfs(source);
            if parent[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let x = parent[y];
                self.cap[x * self.nodes + y] -= 1;
                self.cap[y * self.nodes + x] += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally disjoint `s`–`t` paths for non-adjacent
/// `s != t`, capped at `limit`. Also returns a minimum separating set when
/// the cap was not hit.
fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> (usize, Option<Vec<usize>>) {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitFlow::new(g, s, t);
    let flow = net.max_flow(2 * s + 1, 2 * t, limit);
    if flow >= limit {
        return (flow, None);
    }
    let reach = net.residual_bfs(2 * s + 1);
    let cut = (0..g.order())
        .filter(|&v| reach[2 * v] != usize::MAX && reach[2 * v + 1] == usize::MAX)
        .collect::<Vec<_>>();
    debug_assert_eq!(cut.len(), flow);
    (flow, Some(cut))
}

/// κ(g) together with a minimum vertex cut (`None` for complete graphs,
/// which have no cut).
pub fn connectivity_with_cut(g: &Graph) -> Result<(usize, Option<Vec<usize>>), GraphError> {
    let n = g.order();
    if n < 2 {
        return Err(GraphError::TooSmall { needed: 2, order: n });
    }
    let mut best = n - 1;
    let mut cut = None;
    let mut i = 0;
    while i < n && i <= best {
        for j in i + 1..n {
            if g.has_edge(i, j) {
                continue;
            }
            let (k, c) = local_connectivity(g, i, j, best);
            if k < best {
                best = k;
                cut = c;
            }
        }
        i += 1;
    }
    Ok((best, cut))
}

pub fn vertex_connectivity(g: &Graph) -> Result<usize, GraphError> {
    connectivity_with_cut(g).map(|(k, _)| k)
}

/// Whether κ(g) ≥ k. Small `k` is decided by deleting every vertex subset of
/// size below `k`; larger `k` falls back to max-flow.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k == 0 {
        return true;
    }
    if n <= k {
        return false;
    }
    let all = g.vertex_mask();
    match k {
        1 => g.is_connected(),
        2 => (0..n).all(|a| g.is_connected_within(all & !(1 << a))),
        3 => (0..n).all(|a| {
            (a..n).all(|b| g.is_connected_within(all & !(1 << a) & !(1 << b)))
        }),
        _ => vertex_connectivity(g).map(|c| c >= k).unwrap_or(false),
    }
}

/// A vertex whose removal disconnects `g`, if any.
pub fn cut_vertex(g: &Graph) -> Option<usize> {
    let all = g.vertex_mask();
    (0..g.order()).find(|&a| !g.is_connected_within(all & !(1 << a)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    fn wheel(n: usize) -> Graph {
        let rim = n - 1;
        let mut e: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
        e.extend((0..rim).map(|i| (i, rim)));
        Graph::new(n, e).unwrap()
    }

    /// Smallest vertex set whose deletion leaves a disconnected graph, or n-1.
    fn brute_kappa(g: &Graph) -> usize {
        let n = g.order();
        let all = g.vertex_mask();
        let mut best = n - 1;
        for s in 0u64..(1 << n) {
            let rest = all & !s;
            if rest.count_ones() >= 2 && !g.is_connected_within(rest) {
                best = best.min(s.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn small_examples() {
        assert_eq!(vertex_connectivity(&cycle(6)).unwrap(), 2);
        assert_eq!(vertex_connectivity(&complete(5)).unwrap(), 4);
        assert_eq!(vertex_connectivity(&wheel(8)).unwrap(), 3);
        assert_eq!(brute_kappa(&wheel(8)), 3);
        assert!(vertex_connectivity(&Graph::empty(1).unwrap()).is_err());
        assert_eq!(vertex_connectivity(&Graph::empty(3).unwrap()).unwrap(), 0);
    }

    #[test]
    fn cut_is_a_separator() {
        let g = Graph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let (k, cut) = connectivity_with_cut(&g).unwrap();
        assert_eq!(k, 1);
        assert_eq!(cut, Some(vec![2]));
        assert_eq!(cut_vertex(&g), Some(2));
    }

    #[test]
    fn agrees_with_subset_deletion() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        for _ in 0..400 {
            let n = rng.gen_range(2..=10);
            let p: f64 = rng.gen_range(0.2..0.95);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::new(n, edges).unwrap();
            let (k, cut) = connectivity_with_cut(&g).unwrap();
            assert_eq!(k, brute_kappa(&g), "{g}");
            if let Some(cut) = cut {
                let rest = cut.iter().fold(g.vertex_mask(), |m, &v| m & !(1 << v));
                assert!(!g.is_connected_within(rest));
            }
            for t in 0..=5 {
                assert_eq!(is_k_connected(&g, t), k >= t, "{g} k={t}");
            }
        }
    }
}
