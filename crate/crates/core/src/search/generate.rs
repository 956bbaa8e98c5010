//! Isomorph-free generation by canonical edge augmentation.
//!
//! Every node of the generation tree is a graph in canonical form. A child
//! is the parent plus one non-edge `e`. The child is kept only if `e` is
//! its canonical last edge up to automorphism, tested in three steps:
//!
//! 1. `e` must maximise a cheap edge invariant (endpoint degrees and common
//!    neighbours), otherwise it is rejected without labelling the child;
//! 2. among the edges maximising the invariant, the canonical last edge `e*`
//!    is the one with the largest canonical endpoint pair;
//! 3. the child is accepted when `e` and `e*` coincide or lie in one
//!    discovered automorphism orbit, or when deleting `e*` gives a graph
//!    isomorphic to the parent.
//!
//! Step 3 makes every isomorphism class reachable from exactly one parent
//! class, so remaining duplicates are siblings and a per-parent set of
//! canonical forms removes them.
//!
//! Pruning during augmentation uses only conditions inherited by every
//! canonical parent: the missing degree towards a minimum degree must be
//! repairable with the edges still allowed (two per edge), and the number of
//! components minus one must not exceed the remaining edge budget when
//! connectivity is required.

use std::collections::{BTreeMap, HashSet};
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::canon::canonical_labeling;
use crate::graph::{bits, Graph};

/// Levels are expanded breadth-first until one holds this many nodes; the
/// subtrees below are then explored in parallel. Fixed so that the output
/// order does not depend on the worker count.
const SPLIT_WIDTH: usize = 512;

/// Structural bounds applied during generation.
#[derive(Debug, Clone)]
pub struct Bounds {
    pub order: usize,
    pub sizes: RangeInclusive<usize>,
    /// Required minimum degree of emitted graphs.
    pub min_degree: usize,
    /// Emitted graphs must be connected (used for pruning only).
    pub connected: bool,
}

/// Per-size counters.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LevelCounts {
    /// Isomorphism classes generated at this size, including those only
    /// used as intermediate nodes.
    pub generated: u64,
    /// Classes handed to the visitor (size in range and degree bound met).
    pub visited: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct GenStats {
    pub levels: BTreeMap<usize, LevelCounts>,
    /// Children rejected by the edge invariant before labelling.
    pub invariant_rejects: u64,
    pub canon_calls: u64,
}

impl GenStats {
    fn merge(&mut self, other: &GenStats) {
        for (m, c) in &other.levels {
            let e = self.levels.entry(*m).or_default();
            e.generated += c.generated;
            e.visited += c.visited;
        }
        self.invariant_rejects += other.invariant_rejects;
        self.canon_calls += other.canon_calls;
    }
}

struct Node {
    g: Graph,
    /// Automorphisms of `g` found while labelling it.
    autos: Vec<Vec<usize>>,
}

fn edge_key(g: &Graph, u: usize, v: usize) -> u32 {
    let (a, b) = (g.degree(u) as u32, g.degree(v) as u32);
    let common = (g.neighbors(u) & g.neighbors(v)).count_ones();
    a.max(b) << 16 | a.min(b) << 8 | common
}

fn deficit(g: &Graph, min_degree: usize) -> usize {
    (0..g.order()).map(|v| min_degree.saturating_sub(g.degree(v))).sum()
}

struct Generator<'a> {
    bounds: &'a Bounds,
}

impl Generator<'_> {
    fn feasible(&self, g: &Graph) -> bool {
        let hi = *self.bounds.sizes.end();
        let left = hi - g.size();
        if deficit(g, self.bounds.min_degree) > 2 * left {
            return false;
        }
        !self.bounds.connected || g.component_count() - 1 <= left
    }

    fn root(&self) -> Node {
        let g = Graph::empty(self.bounds.order).expect("order checked by caller");
        let lab = canonical_labeling(&g);
        Node { autos: lab.automorphisms, g }
    }

    /// Accepted children of `p`, in a deterministic order.
    fn children(&self, p: &Node, stats: &mut GenStats) -> Vec<Node> {
        let n = p.g.order();
        if p.g.size() >= *self.bounds.sizes.end() {
            return Vec::new();
        }
        // orbits of non-edges under the known automorphisms of the parent
        let mut parent: Vec<usize> = (0..n * n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &p.autos {
            for i in 0..n {
                for j in i + 1..n {
                    let (x, y) = (a[i].min(a[j]), a[i].max(a[j]));
                    let (r1, r2) = (find(&mut parent, i * n + j), find(&mut parent, x * n + y));
                    if r1 != r2 {
                        parent[r1.max(r2)] = r1.min(r2);
                    }
                }
            }
        }

        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut out = Vec::new();
        for i in 0..n {
            for j in bits(!p.g.neighbors(i) & p.g.vertex_mask() & !crate::graph::full_mask(i + 1)) {
                if find(&mut parent, i * n + j) != i * n + j {
                    continue;
                }
                let child = p.g.with_edge(i, j);
                if !self.feasible(&child) {
                    continue;
                }
                let key = edge_key(&child, i, j);
                let best_key = child.edges().map(|e| edge_key(&child, e.u, e.v)).max().unwrap();
                if key < best_key {
                    stats.invariant_rejects += 1;
                    continue;
                }
                stats.canon_calls += 1;
                let lab = canonical_labeling(&child);
                let pos = &lab.position;
                let canon_pair = |u: usize, v: usize| (pos[u].max(pos[v]), pos[u].min(pos[v]));
                let star = child
                    .edges()
                    .filter(|e| edge_key(&child, e.u, e.v) == best_key)
                    .max_by_key(|e| canon_pair(e.u, e.v))
                    .unwrap();
                let accept = canon_pair(i, j) == canon_pair(star.u, star.v)
                    || same_edge_orbit(&lab.automorphisms, n, (i, j), (star.u, star.v))
                    || {
                        stats.canon_calls += 1;
                        canonical_labeling(&child.without_edge(star.u, star.v)).form == p.g
                    };
                if !accept || !seen.insert(lab.form.rows().to_vec()) {
                    continue;
                }
                let autos = lab
                    .automorphisms
                    .iter()
                    .map(|a| {
                        let mut f = vec![0; n];
                        for v in 0..n {
                            f[pos[v]] = pos[a[v]];
                        }
                        f
                    })
                    .collect();
                out.push(Node { g: lab.form, autos });
            }
        }
        out
    }
}

fn same_edge_orbit(autos: &[Vec<usize>], n: usize, e: (usize, usize), f: (usize, usize)) -> bool {
    if autos.is_empty() {
        return false;
    }
    let norm = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    let target = norm(f.0, f.1);
    let mut seen = HashSet::new();
    let mut stack = vec![norm(e.0, e.1)];
    seen.insert(stack[0]);
    while let Some((a, b)) = stack.pop() {
        if (a, b) == target {
            return true;
        }
        for g in autos {
            let next = norm(g[a], g[b]);
            if seen.insert(next) {
                stack.push(next);
            }
        }
        if seen.len() > n * n {
            break;
        }
    }
    false
}

/// Visits one representative of every isomorphism class of graphs of
/// `bounds.order` vertices whose size lies in `bounds.sizes` and whose
/// minimum degree is at least `bounds.min_degree`. `visit` may run on several
/// threads; its non-`None` results are returned in a deterministic order
/// that does not depend on the number of threads.
pub fn generate<T, F>(bounds: &Bounds, visit: F) -> (Vec<T>, GenStats)
where
    T: Send,
    F: Fn(&Graph) -> Option<T> + Sync,
{
    let gen = Generator { bounds };
    let emit = |g: &Graph, stats: &mut GenStats, out: &mut Vec<T>| {
        let level = stats.levels.entry(g.size()).or_default();
        level.generated += 1;
        if bounds.sizes.contains(&g.size()) && g.min_degree() >= bounds.min_degree {
            level.visited += 1;
            if let Some(t) = visit(g) {
                out.push(t);
            }
        }
    };

    let mut stats = GenStats::default();
    let mut results = Vec::new();
    let mut level = vec![gen.root()];
    emit(&level[0].g, &mut stats, &mut results);
    while !level.is_empty() && level.len() < SPLIT_WIDTH {
        let mut next = Vec::new();
        for node in &level {
            next.extend(gen.children(node, &mut stats));
        }
        for node in &next {
            emit(&node.g, &mut stats, &mut results);
        }
        level = next;
    }

    let subtrees: Vec<(Vec<T>, GenStats)> = level
        .par_iter()
        .map(|node| {
            let mut stats = GenStats::default();
            let mut out = Vec::new();
            let mut stack: Vec<Node> = gen.children(node, &mut stats);
            stack.reverse();
            while let Some(cur) = stack.pop() {
                emit(&cur.g, &mut stats, &mut out);
                let mut kids = gen.children(&cur, &mut stats);
                kids.reverse();
                stack.extend(kids);
            }
            (out, stats)
        })
        .collect();
    for (out, s) in subtrees {
        results.extend(out);
        stats.merge(&s);
    }
    (results, stats)
}
