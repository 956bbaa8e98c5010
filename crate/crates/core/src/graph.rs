//! Small simple graphs stored as one `u64` neighbour row per vertex.
//!
//! Every graph handled by this crate has at most [`MAX_ORDER`] vertices, so a
//! row fits in one machine word and adjacency, intersection and degree
//! queries are single instructions. Graphs are immutable once built; the
//! few copy-producing edits (`with_edge`, `without_edge`, `permuted`) exist
//! for the constructors and the search.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// Iterate the set bits of a row, lowest first.
#[inline]
pub fn bits(mut row: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if row == 0 {
            None
        } else {
            let v = row.trailing_zeros() as usize;
            row &= row - 1;
            Some(v)
        }
    })
}

/// Mask with the low `n` bits set.
#[inline]
pub fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalises the endpoint order. Loops are rejected by [`Graph::new`],
    /// not here.
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    adj: Vec<u64>,
    size: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().map(|e| (e.u, e.v)).collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds the simple graph on `0..order` with exactly `edges`.
    pub fn new<I, E>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(order));
        }
        let mut adj = vec![0u64; order];
        let mut size = 0;
        for e in edges {
            let e: Edge = e.into();
            if e.v >= order {
                return Err(GraphError::VertexOutOfRange { vertex: e.v, order });
            }
            if e.u == e.v {
                return Err(GraphError::Loop(e.u));
            }
            if adj[e.u] >> e.v & 1 == 1 {
                return Err(GraphError::DuplicateEdge(e));
            }
            adj[e.u] |= 1 << e.v;
            adj[e.v] |= 1 << e.u;
            size += 1;
        }
        Ok(Graph { order, adj, size })
    }

    /// Edgeless graph of the given order.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        Self::new(order, std::iter::empty::<Edge>())
    }

    /// Builds a graph from neighbour rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self, GraphError> {
        let order = rows.len();
        if order == 0 || order > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(order));
        }
        let mask = full_mask(order);
        let mut twice = 0;
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, order });
            }
            if row >> u & 1 == 1 {
                return Err(GraphError::Loop(u));
            }
            for v in bits(row) {
                if rows[v] >> u & 1 == 0 {
                    return Err(GraphError::Asymmetric(Edge::new(u, v)));
                }
            }
            twice += row.count_ones() as usize;
        }
        Ok(Graph { order, adj: rows, size: twice / 2 })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<u64>, size: usize) -> Self {
        debug_assert_eq!(rows.iter().map(|r| r.count_ones() as usize).sum::<usize>(), 2 * size);
        Graph { order: rows.len(), adj: rows, size }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    /// Neighbourhood of `v` as a bit row.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order && v < self.order && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    /// Degrees in ascending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// All vertices as a bit row.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.order)
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.order).flat_map(move |u| {
            bits(self.adj[u] & !full_mask(u + 1)).map(move |v| Edge { u, v })
        })
    }

    /// Copy with edge `uv` added. Panics if it is already present or a loop.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && !self.has_edge(u, v), "edge {u}-{v} cannot be added");
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Graph { order: self.order, adj, size: self.size + 1 }
    }

    /// Copy with edge `uv` removed. Panics if it is absent.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        assert!(self.has_edge(u, v), "edge {u}-{v} is not present");
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph { order: self.order, adj, size: self.size - 1 }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut adj = vec![0u64; self.order];
        for (u, &row) in self.adj.iter().enumerate() {
            let mut out = 0u64;
            for v in bits(row) {
                out |= 1 << perm[v];
            }
            adj[perm[u]] = out;
        }
        Graph { order: self.order, adj, size: self.size }
    }

    /// Vertices reachable from `source` through vertices of `allowed`.
    pub fn reach_within(&self, source: usize, allowed: u64) -> u64 {
        let mut seen = 1u64 << source;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            next &= allowed & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reach_within(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut left = self.vertex_mask();
        let mut count = 0;
        while left != 0 {
            let s = left.trailing_zeros() as usize;
            left &= !self.reach_within(s, left);
            count += 1;
        }
        count
    }

    /// Whether the subgraph induced by `keep` is connected (empty counts as connected).
    pub fn is_connected_within(&self, keep: u64) -> bool {
        if keep == 0 {
            return true;
        }
        let s = keep.trailing_zeros() as usize;
        self.reach_within(s, keep) == keep
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}: ", self.order, self.size)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.size(), 3);
        assert_eq!(g.min_degree(), 2);
        assert!(g.is_connected());
    }

    #[test]
    fn edgeless() {
        let g = Graph::empty(4).unwrap();
        assert_eq!(g.size(), 0);
        assert_eq!(g.component_count(), 4);
        assert_eq!(g.edges().count(), 0);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::empty(65), Err(GraphError::OrderOutOfRange(65)));
        assert_eq!(Graph::empty(0), Err(GraphError::OrderOutOfRange(0)));
        assert_eq!(
            Graph::new(3, [(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(Edge::new(0, 1)))
        );
    }

    #[test]
    fn order_64_uses_top_bit() {
        let g = Graph::new(64, [(0, 63), (62, 63)]).unwrap();
        assert_eq!(g.degree(63), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![Edge::new(0, 63), Edge::new(62, 63)]);
        assert_eq!(g.component_count(), 62);
    }

    #[test]
    fn from_rows_checks_symmetry() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01, 0b00]).is_err());
        let g = Graph::from_rows(vec![0b10, 0b01]).unwrap();
        assert_eq!(g.size(), 1);
    }

    #[test]
    fn permutation_preserves_size() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.permuted(&[3, 2, 1, 0]);
        assert!(h.has_edge(3, 2) && h.has_edge(2, 1) && h.has_edge(1, 0));
        assert_eq!(h.size(), 3);
    }
}
