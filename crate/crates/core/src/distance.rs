//! Breadth-first distance layers, eccentricity and diameter.

use serde::Serialize;

use crate::error::GraphError;
use crate::graph::{bits, Graph};

/// Vertices grouped by distance from `source`: `layers[i]` holds every vertex
/// at distance exactly `i`, as a bit row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceLayers {
    pub source: usize,
    pub layers: Vec<u64>,
}

impl DistanceLayers {
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.count_ones() as usize).collect()
    }

    /// Vertices of layer `i` in ascending order.
    pub fn layer(&self, i: usize) -> Vec<usize> {
        bits(self.layers[i]).collect()
    }
}

/// Layers of the component containing `source`, without requiring the graph
/// to be connected.
pub fn component_layers(g: &Graph, source: usize) -> DistanceLayers {
    assert!(source < g.order(), "vertex {source} out of range");
    let mut seen = 1u64 << source;
    let mut layers = vec![seen];
    loop {
        let last = *layers.last().unwrap();
        let mut next = 0u64;
        for v in bits(last) {
            next |= g.neighbors(v);
        }
        next &= !seen;
        if next == 0 {
            break;
        }
        seen |= next;
        layers.push(next);
    }
    DistanceLayers { source, layers }
}

/// Distance layers of `x`. Fails with the smallest unreached vertex when
/// `g` is disconnected.
pub fn distance_layers(g: &Graph, x: usize) -> Result<DistanceLayers, GraphError> {
    if x >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: x, order: g.order() });
    }
    let dl = component_layers(g, x);
    let reached = dl.layers.iter().fold(0, |acc, l| acc | l);
    let missing = g.vertex_mask() & !reached;
    if missing != 0 {
        return Err(GraphError::Disconnected {
            from: x,
            unreached: missing.trailing_zeros() as usize,
        });
    }
    Ok(dl)
}

pub fn eccentricity(g: &Graph, x: usize) -> Result<usize, GraphError> {
    distance_layers(g, x).map(|d| d.eccentricity())
}

pub fn diameter(g: &Graph) -> Result<usize, GraphError> {
    (0..g.order()).try_fold(0, |best, v| Ok(best.max(eccentricity(g, v)?)))
}

/// A vertex of maximum eccentricity (the lowest-numbered one).
pub fn peripheral_vertex(g: &Graph) -> Result<usize, GraphError> {
    let mut best = (0, 0);
    for v in 0..g.order() {
        let e = eccentricity(g, v)?;
        if e > best.1 {
            best = (v, e);
        }
    }
    Ok(best.0)
}

/// Distance between two vertices, `None` if they lie in different components.
pub fn distance(g: &Graph, u: usize, v: usize) -> Option<usize> {
    component_layers(g, u)
        .layers
        .iter()
        .position(|l| l >> v & 1 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn floyd_warshall(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.order();
        let inf = usize::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for u in 0..n {
            d[u][u] = 0;
            for v in 0..n {
                if g.has_edge(u, v) {
                    d[u][v] = 1;
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        d
    }

    #[test]
    fn cycle_layers() {
        let dl = distance_layers(&cycle(6), 2).unwrap();
        assert_eq!(dl.sizes(), vec![1, 2, 2, 1]);
        assert_eq!(dl.eccentricity(), 3);
        assert_eq!(dl.layer(3), vec![5]);
    }

    #[test]
    fn disconnected_reports_unreached() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            distance_layers(&g, 0),
            Err(GraphError::Disconnected { from: 0, unreached: 2 })
        );
        assert!(diameter(&g).is_err());
        assert_eq!(distance(&g, 0, 3), None);
    }

    #[test]
    fn complete_graph_diameter_one() {
        let g = Graph::new(5, (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)))).unwrap();
        assert_eq!(diameter(&g).unwrap(), 1);
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1).unwrap();
        assert_eq!(diameter(&g).unwrap(), 0);
    }

    #[test]
    fn matches_floyd_warshall() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..=10);
            let p: f64 = rng.gen_range(0.2..0.8);
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            let g = Graph::new(n, edges).unwrap();
            let d = floyd_warshall(&g);
            let fw_connected = d.iter().flatten().all(|&x| x < usize::MAX / 4);
            match diameter(&g) {
                Ok(diam) => {
                    assert!(fw_connected);
                    assert_eq!(diam, *d.iter().flatten().max().unwrap());
                }
                Err(_) => assert!(!fw_connected),
            }
            for u in 0..n {
                let dl = component_layers(&g, u);
                for v in 0..n {
                    let want = (d[u][v] < usize::MAX / 4).then_some(d[u][v]);
                    assert_eq!(distance(&g, u, v), want);
                }
                // no edge skips a layer
                for e in g.edges() {
                    let (a, b) = (distance(&g, u, e.u), distance(&g, u, e.v));
                    if let (Some(a), Some(b)) = (a, b) {
                        assert!(a.abs_diff(b) <= 1);
                    }
                }
                assert_eq!(dl.layers[0], 1 << u);
            }
        }
    }
}
