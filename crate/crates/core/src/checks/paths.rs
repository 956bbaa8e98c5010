//! Exact-length simple path search.
//!
//! A probe asks for an `(a, b)`-path with exactly `len` edges, optionally
//! avoiding one edge (cycle probes) and optionally forced through one edge.
//! The depth-first search keeps the path simple and prunes a branch when
//!
//! * `b` is farther than the remaining length inside the unvisited vertices,
//! * fewer unvisited vertices can still reach `b` than the path must visit,
//! * the path has to absorb every remaining vertex and some vertex other than
//!   `b` has fewer than two usable neighbours.
//!
//! Absence is reported only after the pruned tree is exhausted. With a node
//! budget the probe may also end as [`Probe::Unknown`].

use crate::graph::{bits, Edge, Graph};

/// Result of one probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Probe {
    /// The vertex sequence of a witness path, `a` first and `b` last.
    Found(Vec<usize>),
    /// No such path exists.
    Absent,
    /// The node budget ran out before the question was settled.
    Unknown,
}

impl Probe {
    pub fn is_found(&self) -> bool {
        matches!(self, Probe::Found(_))
    }
}

/// A single exact-length path question.
#[derive(Debug, Clone, Copy)]
pub struct PathQuery {
    pub from: usize,
    pub to: usize,
    pub len: usize,
    /// Edge removed from the graph for this probe.
    pub avoid: Option<Edge>,
    /// Edge the path must traverse.
    pub through: Option<Edge>,
}

impl PathQuery {
    pub fn new(from: usize, to: usize, len: usize) -> Self {
        PathQuery { from, to, len, avoid: None, through: None }
    }

    /// Cycle of length `len` through edge `e`: an `(e.u, e.v)`-path of
    /// length `len - 1` that does not use `e`.
    pub fn cycle_through(e: Edge, len: usize) -> Self {
        PathQuery { from: e.u, to: e.v, len: len - 1, avoid: Some(e), through: None }
    }

    pub fn through(mut self, e: Edge) -> Self {
        self.through = Some(e);
        self
    }
}

/// Node counts accumulate across probes run by the same searcher.
#[derive(Debug)]
pub struct PathSearcher<'g> {
    g: &'g Graph,
    budget: Option<u64>,
    pub nodes: u64,
}

struct Frame<'a> {
    rows: &'a [u64],
    to: usize,
    through: Option<(usize, usize)>,
    limit: u64,
    path: Vec<usize>,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl<'g> PathSearcher<'g> {
    pub fn new(g: &'g Graph, budget: Option<u64>) -> Self {
        PathSearcher { g, budget, nodes: 0 }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn probe(&mut self, q: PathQuery) -> Probe {
        let g = self.g;
        let n = g.order();
        assert!(q.from < n && q.to < n, "probe endpoints out of range");
        if q.from == q.to {
            return if q.len == 0 && q.through.is_none() {
                Probe::Found(vec![q.from])
            } else {
                Probe::Absent
            };
        }
        if q.len == 0 || q.len >= n {
            return Probe::Absent;
        }
        let mut rows = g.rows().to_vec();
        if let Some(e) = q.avoid {
            rows[e.u] &= !(1 << e.v);
            rows[e.v] &= !(1 << e.u);
        }
        if let Some(t) = q.through {
            if rows[t.u] >> t.v & 1 == 0 {
                return Probe::Absent;
            }
        }
        let mut frame = Frame {
            rows: &rows,
            to: q.to,
            through: q.through.map(|e| (e.u, e.v)),
            limit: self.budget.map_or(u64::MAX, |b| self.nodes.saturating_add(b)),
            path: Vec::with_capacity(q.len + 1),
        };
        frame.path.push(q.from);
        let step = frame.dfs(&mut self.nodes, q.from, 1 << q.from, q.len, false);
        match step {
            Step::Found => Probe::Found(frame.path),
            Step::Exhausted => Probe::Absent,
            Step::OutOfBudget => Probe::Unknown,
        }
    }
}

impl Frame<'_> {
    fn dfs(&mut self, nodes: &mut u64, c: usize, visited: u64, remaining: usize, used: bool) -> Step {
        if remaining == 0 {
            return if c == self.to && (used || self.through.is_none()) {
                Step::Found
            } else {
                Step::Exhausted
            };
        }
        if c == self.to {
            return Step::Exhausted;
        }
        *nodes += 1;
        if *nodes > self.limit {
            return Step::OutOfBudget;
        }
        let n = self.rows.len();
        let all = crate::graph::full_mask(n);
        let free = all & !visited;

        // the required edge forces the next step when we stand on one of its ends
        let mut forced = None;
        let mut need = 0u64;
        if let (Some((x, y)), false) = (self.through, used) {
            if c == x || c == y {
                let other = if c == x { y } else { x };
                if visited >> other & 1 == 1 {
                    return Step::Exhausted;
                }
                forced = Some(other);
            } else {
                if (visited >> x | visited >> y) & 1 == 1 {
                    return Step::Exhausted;
                }
                need = 1 << x | 1 << y;
            }
        }

        // distance layers from `to` inside the free vertices
        let mut near = 1u64 << self.to;
        let mut reach = near;
        let mut frontier = near;
        let mut depth = 0;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.rows[v];
            }
            next &= free & !reach;
            reach |= next;
            depth += 1;
            if depth < remaining {
                near |= next;
            }
            frontier = next;
        }
        if (reach.count_ones() as usize) < remaining || reach & need != need {
            return Step::Exhausted;
        }
        if reach.count_ones() as usize == remaining {
            // every reachable free vertex must be on the path
            let usable = reach | 1 << c;
            for z in bits(reach & !(1 << self.to)) {
                if (self.rows[z] & usable).count_ones() < 2 {
                    return Step::Exhausted;
                }
            }
        }

        let mut cand = self.rows[c] & near;
        if remaining > 1 {
            cand &= !(1 << self.to);
        }
        if let Some(f) = forced {
            cand &= 1 << f;
        }
        let mut order: Vec<(u32, usize)> = bits(cand)
            .map(|w| ((self.rows[w] & free).count_ones(), w))
            .collect();
        order.sort_unstable();
        for (_, w) in order {
            let now_used = used || forced == Some(w);
            self.path.push(w);
            match self.dfs(nodes, w, visited | 1 << w, remaining - 1, now_used) {
                Step::Exhausted => {}
                other => return other,
            }
            self.path.pop();
        }
        Step::Exhausted
    }
}

/// Whether `vertices` is a simple path in `g` from its first to its last
/// entry.
pub fn is_path(g: &Graph, vertices: &[usize]) -> bool {
    let mut seen = 0u64;
    for (i, &v) in vertices.iter().enumerate() {
        if v >= g.order() || seen >> v & 1 == 1 {
            return false;
        }
        seen |= 1 << v;
        if i > 0 && !g.has_edge(vertices[i - 1], v) {
            return false;
        }
    }
    !vertices.is_empty()
}

/// Whether `vertices` (listed once, closing edge implied) is a cycle of `g`.
pub fn is_cycle(g: &Graph, vertices: &[usize]) -> bool {
    vertices.len() >= 3
        && is_path(g, vertices)
        && g.has_edge(vertices[0], *vertices.last().unwrap())
}

/// Whether the closed walk `vertices` traverses edge `e`.
pub fn cycle_contains(vertices: &[usize], e: Edge) -> bool {
    let k = vertices.len();
    (0..k).any(|i| Edge::new(vertices[i], vertices[(i + 1) % k]) == e)
}

/// Whether the open path `vertices` traverses edge `e`.
pub fn path_contains(vertices: &[usize], e: Edge) -> bool {
    vertices.windows(2).any(|w| Edge::new(w[0], w[1]) == e)
}
