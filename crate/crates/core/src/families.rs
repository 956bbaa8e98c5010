//! Constructors for the graph families.
//!
//! Vertex numbering is fixed so that emitted graph6 strings are reproducible:
//!
//! * `join(g, h)` and `sequential_join` place the parts one after another.
//! * `A_n`: cycle vertices `v_1..v_q` are `0..q`, then `u_1..u_q` are `q..2q`.
//! * `F_n`, `G_n`, `H_n`: the vertices of `A_{n-1}`, then the added vertex
//!   (`x`, `y` or `z`) as `n - 1`.
//! * `H(k)`: `v`, `v_1..v_{3k-3}`, `u`, `u_1..u_{3k-3}`.
//! * `G(k)`: the ring vertices `x_1..x_k` first, then the inner vertices of
//!   each block in ring order.
//!
//! The letter F names two different things: the odd extremal family built
//! from `A_{n-1}` ([`odd_extremal`] with [`OddKind::F`]) and the fan
//! `K_1 ∨ P_{s-1}` ([`fan`]).

use serde::Serialize;

use crate::error::{FamilyError, GraphError};
use crate::graph::{Edge, Graph, MAX_ORDER};

/// A graph together with display names for its vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    fn numbered(graph: Graph) -> Self {
        let labels = (0..graph.order()).map(|v| v.to_string()).collect();
        LabeledGraph { graph, labels }
    }

    /// Index of the vertex carrying `label`.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

fn bad(family: &'static str, param: usize, reason: &'static str) -> FamilyError {
    FamilyError::BadParameter { family, param, reason }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasicKind {
    Cycle,
    Path,
    Complete,
    Empty,
}

/// `C_n`, `P_n`, `K_n` or the edgeless graph `K̄_n`.
pub fn basic(kind: BasicKind, n: usize) -> Result<Graph, FamilyError> {
    let edges: Vec<Edge> = match kind {
        BasicKind::Cycle => {
            if n < 3 {
                return Err(bad("cycle", n, "needs at least 3 vertices"));
            }
            (0..n).map(|i| Edge::new(i, (i + 1) % n)).collect()
        }
        BasicKind::Path => (1..n).map(|i| Edge::new(i - 1, i)).collect(),
        BasicKind::Complete => (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
            .collect(),
        BasicKind::Empty => Vec::new(),
    };
    Ok(Graph::new(n, edges)?)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    basic(BasicKind::Cycle, n)
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    basic(BasicKind::Path, n)
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    basic(BasicKind::Complete, n)
}

pub fn empty(n: usize) -> Result<Graph, FamilyError> {
    basic(BasicKind::Empty, n)
}

/// Disjoint union followed by every edge between `g` and `h`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, FamilyError> {
    sequential_join(&[g.clone(), h.clone()])
}

/// Disjoint union of `parts` with complete joins between consecutive parts.
pub fn sequential_join(parts: &[Graph]) -> Result<Graph, FamilyError> {
    if parts.is_empty() {
        return Err(bad("sequential_join", 0, "needs at least one part"));
    }
    let total: usize = parts.iter().map(Graph::order).sum();
    if total > MAX_ORDER {
        return Err(GraphError::OrderOutOfRange(total).into());
    }
    let mut edges = Vec::new();
    let mut offset = 0;
    for (i, p) in parts.iter().enumerate() {
        edges.extend(p.edges().map(|e| Edge::new(e.u + offset, e.v + offset)));
        if let Some(next) = parts.get(i + 1) {
            let next_off = offset + p.order();
            for a in 0..p.order() {
                for b in 0..next.order() {
                    edges.push(Edge::new(offset + a, next_off + b));
                }
            }
        }
        offset += p.order();
    }
    Ok(Graph::new(total, edges)?)
}

/// Disjoint union of `parts`.
pub fn disjoint_union(parts: &[Graph]) -> Result<Graph, FamilyError> {
    let total: usize = parts.iter().map(Graph::order).sum();
    if total == 0 || total > MAX_ORDER {
        return Err(GraphError::OrderOutOfRange(total).into());
    }
    let mut edges = Vec::new();
    let mut offset = 0;
    for p in parts {
        edges.extend(p.edges().map(|e| Edge::new(e.u + offset, e.v + offset)));
        offset += p.order();
    }
    Ok(Graph::new(total, edges)?)
}

/// Wheel `W_n = K_1 ∨ C_{n-1}`; the hub is vertex 0.
pub fn wheel(n: usize) -> Result<LabeledGraph, FamilyError> {
    if n < 4 {
        return Err(bad("wheel", n, "needs at least 4 vertices"));
    }
    let graph = join(&complete(1)?, &cycle(n - 1)?)?;
    let mut labels = vec!["hub".to_string()];
    labels.extend((1..n).map(|i| format!("r{i}")));
    Ok(LabeledGraph { graph, labels })
}

/// Fan `F_s = K_1 ∨ P_{s-1}`; the centre is vertex 0 and the path runs 1..s.
pub fn fan(s: usize) -> Result<LabeledGraph, FamilyError> {
    if s < 2 {
        return Err(bad("fan", s, "needs at least 2 vertices"));
    }
    let graph = join(&complete(1)?, &path(s - 1)?)?;
    let mut labels = vec!["c".to_string()];
    labels.extend((1..s).map(|i| format!("p{i}")));
    Ok(LabeledGraph { graph, labels })
}

/// `A_n`: a cycle `v_1..v_q` (q = n/2) with a vertex `u_i` adjacent to `v_i`
/// and `v_{i+1}` for every `i`.
pub fn a_graph(n: usize) -> Result<LabeledGraph, FamilyError> {
    if n % 2 == 1 {
        return Err(bad("A", n, "order must be even"));
    }
    if n < 8 {
        return Err(bad("A", n, "order must be at least 8"));
    }
    let q = n / 2;
    let mut edges: Vec<Edge> = (0..q).map(|i| Edge::new(i, (i + 1) % q)).collect();
    for i in 0..q {
        edges.push(Edge::new(q + i, i));
        edges.push(Edge::new(q + i, (i + 1) % q));
    }
    let mut labels: Vec<String> = (1..=q).map(|i| format!("v{i}")).collect();
    labels.extend((1..=q).map(|i| format!("u{i}")));
    Ok(LabeledGraph { graph: Graph::new(n, edges)?, labels })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OddKind {
    F,
    G,
    H,
}

/// The odd-order extremal graphs built from `A_{n-1}`:
/// `F_n` adds `x ~ v_1, v_2`; `G_n` adds `y ~ u_1, v_1`; `H_n` subdivides
/// `v_1 v_2` by `z` and joins `z` to `u_1`.
pub fn odd_extremal(kind: OddKind, n: usize) -> Result<LabeledGraph, FamilyError> {
    let name = match kind {
        OddKind::F => "F",
        OddKind::G => "G",
        OddKind::H => "H",
    };
    if n % 2 == 0 {
        return Err(bad(name, n, "order must be odd"));
    }
    if n < 9 {
        return Err(bad(name, n, "order must be at least 9"));
    }
    let base = a_graph(n - 1)?;
    let q = (n - 1) / 2;
    let (v1, v2, u1, new) = (0, 1, q, n - 1);
    let mut edges: Vec<Edge> = base.graph.edges().collect();
    let label = match kind {
        OddKind::F => {
            edges.extend([Edge::new(v1, new), Edge::new(v2, new)]);
            "x"
        }
        OddKind::G => {
            edges.extend([Edge::new(u1, new), Edge::new(v1, new)]);
            "y"
        }
        OddKind::H => {
            edges.retain(|&e| e != Edge::new(v1, v2));
            edges.extend([Edge::new(v1, new), Edge::new(v2, new), Edge::new(u1, new)]);
            "z"
        }
    };
    let mut labels = base.labels;
    labels.push(label.to_string());
    Ok(LabeledGraph { graph: Graph::new(n, edges)?, labels })
}

/// `H(k)`: two fans `F_{3k-2}` with centres `v`, `u` and paths
/// `v_1..v_{3k-3}`, `u_1..u_{3k-3}`, bridged by `vu`, `vu_{3k-3}` and
/// `uv_{3k-3}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HBlock {
    pub k: usize,
    pub labeled: LabeledGraph,
}

impl HBlock {
    pub fn graph(&self) -> &Graph {
        &self.labeled.graph
    }

    /// Length of each fan path, `3k - 3`.
    pub fn path_len(&self) -> usize {
        3 * self.k - 3
    }

    pub fn v(&self) -> usize {
        0
    }

    /// `v_i` for `1 <= i <= 3k-3`.
    pub fn vi(&self, i: usize) -> usize {
        assert!((1..=self.path_len()).contains(&i));
        i
    }

    pub fn u(&self) -> usize {
        self.path_len() + 1
    }

    /// `u_i` for `1 <= i <= 3k-3`.
    pub fn ui(&self, i: usize) -> usize {
        assert!((1..=self.path_len()).contains(&i));
        self.path_len() + 1 + i
    }

    /// The edge subset Ω = {v v_i} ∪ {v_i v_{i+1}} ∪ {vu, v u_{3k-3}}.
    pub fn omega(&self) -> Vec<Edge> {
        let p = self.path_len();
        let mut out: Vec<Edge> = (1..=p).map(|i| Edge::new(self.v(), self.vi(i))).collect();
        out.extend((1..p).map(|i| Edge::new(self.vi(i), self.vi(i + 1))));
        out.push(Edge::new(self.v(), self.u()));
        out.push(Edge::new(self.v(), self.ui(p)));
        out
    }
}

/// Edge list of `H(k)` in the documented numbering, with no order cap.
fn h_block_edges(k: usize) -> (usize, Vec<Edge>) {
    let p = 3 * k - 3;
    let (v, u) = (0, p + 1);
    let vi = |i: usize| i;
    let ui = |i: usize| p + 1 + i;
    let mut edges = Vec::new();
    for i in 1..=p {
        edges.push(Edge::new(v, vi(i)));
        edges.push(Edge::new(u, ui(i)));
    }
    for i in 1..p {
        edges.push(Edge::new(vi(i), vi(i + 1)));
        edges.push(Edge::new(ui(i), ui(i + 1)));
    }
    edges.extend([Edge::new(v, u), Edge::new(v, ui(p)), Edge::new(u, vi(p))]);
    (2 * p + 2, edges)
}

pub fn h_block(k: usize) -> Result<HBlock, FamilyError> {
    if k < 3 {
        return Err(bad("h_block", k, "k must be at least 3"));
    }
    let (order, edges) = h_block_edges(k);
    if order > MAX_ORDER {
        return Err(bad("h_block", k, "order 6k-4 exceeds 64"));
    }
    let p = 3 * k - 3;
    let mut labels = vec!["v".to_string()];
    labels.extend((1..=p).map(|i| format!("v{i}")));
    labels.push("u".to_string());
    labels.extend((1..=p).map(|i| format!("u{i}")));
    Ok(HBlock { k, labeled: LabeledGraph { graph: Graph::new(order, edges)?, labels } })
}

/// Order `6k² - 5k` of `G(k)`.
pub fn g_ring_order(k: usize) -> usize {
    6 * k * k - 5 * k
}

/// Size `2n - k` of `G(k)`.
pub fn g_ring_size(k: usize) -> usize {
    2 * g_ring_order(k) - k
}

/// Edge list and labels of `G(k)` for any `k >= 3`, without the order cap.
pub fn g_ring_edges(k: usize) -> (usize, Vec<Edge>, Vec<String>) {
    let (block_order, block_edges) = h_block_edges(k);
    let p = 3 * k - 3;
    let inner = block_order - 2;
    let mut labels: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    let mut edges = Vec::with_capacity(k * block_edges.len());
    for b in 0..k {
        let base = k + b * inner;
        // block-local index -> global index; v_1 is x_b, u_1 is x_{b+1}
        let map = |local: usize| -> usize {
            if local == 1 {
                b
            } else if local == p + 2 {
                (b + 1) % k
            } else if local < p + 2 {
                // v (0) and v_2..v_p (2..=p)
                base + if local == 0 { 0 } else { local - 1 }
            } else {
                // u (p+1) and u_2..u_p (p+3..)
                base + if local == p + 1 { p } else { local - 2 }
            }
        };
        for e in &block_edges {
            edges.push(Edge::new(map(e.u), map(e.v)));
        }
        labels.push(format!("B{}.v", b + 1));
        labels.extend((2..=p).map(|i| format!("B{}.v{i}", b + 1)));
        labels.push(format!("B{}.u", b + 1));
        labels.extend((2..=p).map(|i| format!("B{}.u{i}", b + 1)));
    }
    (k + k * inner, edges, labels)
}

/// `G(k)`: a k-cycle whose every edge is replaced by a copy of `H(k)`, the
/// copy's `v_1` and `u_1` identified with the edge's ends. Only `k = 3`
/// (order 39) fits in a 64-vertex graph.
pub fn g_ring(k: usize) -> Result<LabeledGraph, FamilyError> {
    if k < 3 {
        return Err(bad("g_ring", k, "k must be at least 3"));
    }
    if g_ring_order(k) > MAX_ORDER {
        return Err(bad("g_ring", k, "order 6k^2-5k exceeds 64; only k = 3 is supported"));
    }
    let (order, edges, labels) = g_ring_edges(k);
    Ok(LabeledGraph { graph: Graph::new(order, edges)?, labels })
}

/// Building blocks of the sequential joins `Q_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QBlock {
    K1,
    K2,
    C3,
    /// The edgeless graph on two vertices.
    EmptyK2,
}

impl QBlock {
    pub fn graph(self) -> Graph {
        match self {
            QBlock::K1 => complete(1),
            QBlock::K2 => complete(2),
            QBlock::C3 => cycle(3),
            QBlock::EmptyK2 => empty(2),
        }
        .expect("block graphs are valid")
    }

    pub fn name(self) -> &'static str {
        match self {
            QBlock::K1 => "K1",
            QBlock::K2 => "K2",
            QBlock::C3 => "C3",
            QBlock::EmptyK2 => "~K2",
        }
    }
}

/// The block sequence of `Q_n` for `n >= 10`, by residue of `n` mod 5.
pub fn q_blocks(n: usize) -> Result<Vec<QBlock>, FamilyError> {
    if n < 10 {
        return Err(bad("q_graph", n, "order must be at least 10"));
    }
    if n > MAX_ORDER {
        return Err(bad("q_graph", n, "order exceeds 64"));
    }
    let (k, r) = (n / 5, n % 5);
    let first = if r == 2 { QBlock::K2 } else { QBlock::K1 };
    let last = match r {
        0 | 3 => QBlock::K1,
        _ => QBlock::K2,
    };
    let mut blocks = vec![first];
    for j in 1..=k {
        blocks.push(QBlock::C3);
        if j < k {
            blocks.push(QBlock::EmptyK2);
        }
    }
    if r >= 3 {
        blocks.push(QBlock::C3);
    }
    blocks.push(last);
    Ok(blocks)
}

/// `Q_n`, the sequential join of [`q_blocks`]`(n)`. Labels name the block and
/// the position inside it, e.g. `b3.1`.
pub fn q_graph(n: usize) -> Result<LabeledGraph, FamilyError> {
    let blocks = q_blocks(n)?;
    let parts: Vec<Graph> = blocks.iter().map(|b| b.graph()).collect();
    let graph = sequential_join(&parts)?;
    let mut labels = Vec::with_capacity(n);
    for (i, p) in parts.iter().enumerate() {
        labels.extend((0..p.order()).map(|j| format!("b{}.{}", i + 1, j + 1)));
    }
    debug_assert_eq!(graph.order(), n);
    Ok(LabeledGraph { graph, labels })
}

/// Parameterised family names accepted by [`FamilySpec::build`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", content = "param", rename_all = "snake_case")]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    Empty(usize),
    Wheel(usize),
    Fan(usize),
    A(usize),
    F(usize),
    G(usize),
    H(usize),
    HBlock(usize),
    GRing(usize),
    QGraph(usize),
}

impl FamilySpec {
    /// Parses a family name as used on the command line.
    pub fn from_name(name: &str, param: usize) -> Option<Self> {
        Some(match name {
            "cycle" => FamilySpec::Cycle(param),
            "path" => FamilySpec::Path(param),
            "complete" => FamilySpec::Complete(param),
            "empty" => FamilySpec::Empty(param),
            "wheel" => FamilySpec::Wheel(param),
            "fan" => FamilySpec::Fan(param),
            "A" | "a" => FamilySpec::A(param),
            "F" | "f" => FamilySpec::F(param),
            "G" | "g" => FamilySpec::G(param),
            "H" | "h" => FamilySpec::H(param),
            "h_block" => FamilySpec::HBlock(param),
            "g_ring" => FamilySpec::GRing(param),
            "q_graph" => FamilySpec::QGraph(param),
            _ => return None,
        })
    }

    pub const NAMES: &'static [&'static str] = &[
        "cycle", "path", "complete", "empty", "wheel", "fan", "A", "F", "G", "H", "h_block",
        "g_ring", "q_graph",
    ];

    /// Whether the parameter is `k` (block families) rather than the order.
    pub fn takes_k(name: &str) -> bool {
        matches!(name, "h_block" | "g_ring")
    }

    pub fn build(self) -> Result<LabeledGraph, FamilyError> {
        use FamilySpec::*;
        match self {
            Cycle(n) => cycle(n).map(LabeledGraph::numbered),
            Path(n) => path(n).map(LabeledGraph::numbered),
            Complete(n) => complete(n).map(LabeledGraph::numbered),
            Empty(n) => empty(n).map(LabeledGraph::numbered),
            Wheel(n) => wheel(n),
            Fan(s) => fan(s),
            A(n) => a_graph(n),
            F(n) => odd_extremal(OddKind::F, n),
            G(n) => odd_extremal(OddKind::G, n),
            H(n) => odd_extremal(OddKind::H, n),
            HBlock(k) => h_block(k).map(|h| h.labeled),
            GRing(k) => g_ring(k),
            QGraph(n) => q_graph(n),
        }
    }
}
