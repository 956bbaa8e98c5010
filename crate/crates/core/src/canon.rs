//! Canonical labelling by partition refinement and individualisation.
//!
//! Vertices start in one cell. Refinement splits cells by the number of
//! neighbours each vertex has in every other cell until the ordered partition
//! is equitable. When cells remain that are not singletons, the search
//! individualises each vertex of the first largest such cell in turn and
//! recurses. Every discrete partition is a candidate labelling; the canonical
//! form is the candidate whose relabelled adjacency rows are lexicographically
//! smallest. Two leaves producing the same rows reveal an automorphism, and
//! automorphisms fixing the current branch prefix prune sibling branches in
//! the same orbit.
//!
//! All steps depend only on cell positions and neighbour counts, never on
//! vertex names, so the result is invariant under relabelling.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{bits, Graph};

/// Upper-triangle adjacency bits of the canonically relabelled graph, in
/// graph6 column order, packed big-endian into bytes. Equal codes ⟺
/// isomorphic graphs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    order: usize,
    bits: Vec<u8>,
}

impl CanonicalCode {
    fn from_form(form: &Graph) -> Self {
        let n = form.order();
        let total = n * (n - 1) / 2;
        let mut bytes = vec![0u8; total.div_ceil(8)];
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if form.has_edge(i, j) {
                    bytes[k / 8] |= 0x80 >> (k % 8);
                }
                k += 1;
            }
        }
        CanonicalCode { order: n, bits: bytes }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bits
    }

    /// `order` as two hex digits followed by the packed bits.
    pub fn hex(&self) -> String {
        let mut s = format!("{:02x}", self.order);
        for b in &self.bits {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.hex())
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.hex())
    }
}

/// Outcome of a canonical labelling run.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// `position[v]` is the canonical index of vertex `v`.
    pub position: Vec<usize>,
    /// The relabelled graph.
    pub form: Graph,
    /// Automorphisms discovered during the search (a subgroup of Aut(g)),
    /// each as a vertex map.
    pub automorphisms: Vec<Vec<usize>>,
    /// Leaves of the search tree that were visited.
    pub leaves: usize,
}

/// Splits cells until the ordered partition is equitable.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let rows = g.rows();
    let mut buckets: [u64; 65] = [0; 65];
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            let mut x = 0;
            while x < cells.len() {
                let cell = cells[x];
                if cell & (cell - 1) == 0 {
                    x += 1;
                    continue;
                }
                let mut lo = usize::MAX;
                let mut hi = 0;
                for v in bits(cell) {
                    let c = (rows[v] & splitter).count_ones() as usize;
                    buckets[c] |= 1 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    buckets[lo] = 0;
                    x += 1;
                    continue;
                }
                changed = true;
                let mut parts = Vec::new();
                for b in &mut buckets[lo..=hi] {
                    if *b != 0 {
                        parts.push(*b);
                        *b = 0;
                    }
                }
                let k = parts.len();
                cells.splice(x..=x, parts);
                x += k;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best_rows: Option<Vec<u64>>,
    best_position: Vec<usize>,
    automorphisms: Vec<Vec<usize>>,
    leaves: usize,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[u64]) {
        self.leaves += 1;
        let n = self.g.order();
        let mut position = vec![0usize; n];
        for (i, &c) in cells.iter().enumerate() {
            position[c.trailing_zeros() as usize] = i;
        }
        let mut rows = vec![0u64; n];
        for (v, &row) in self.g.rows().iter().enumerate() {
            let mut out = 0u64;
            for w in bits(row) {
                out |= 1 << position[w];
            }
            rows[position[v]] = out;
        }
        match &self.best_rows {
            None => {
                self.best_rows = Some(rows);
                self.best_position = position;
            }
            Some(best) => match rows.cmp(best) {
                std::cmp::Ordering::Less => {
                    self.best_rows = Some(rows);
                    self.best_position = position;
                }
                std::cmp::Ordering::Equal => {
                    // vertex at leaf position p maps to the best-leaf vertex at p
                    let mut inv_best = vec![0usize; n];
                    for (v, &p) in self.best_position.iter().enumerate() {
                        inv_best[p] = v;
                    }
                    let auto: Vec<usize> = position.iter().map(|&p| inv_best[p]).collect();
                    if auto.iter().enumerate().any(|(v, &w)| v != w) {
                        self.automorphisms.push(auto);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }

    /// Orbit representative of every vertex under the stored automorphisms
    /// that fix all of `fixed`.
    fn orbits(&self, fixed: &[usize]) -> Vec<usize> {
        let n = self.g.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for a in &self.automorphisms {
            if fixed.iter().all(|&v| a[v] == v) {
                for (v, &w) in a.iter().enumerate() {
                    let (rv, rw) = (find(&mut parent, v), find(&mut parent, w));
                    if rv != rw {
                        parent[rv.max(rw)] = rv.min(rw);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn descend(&mut self, mut cells: Vec<u64>, path: &mut Vec<usize>) {
        refine(self.g, &mut cells);
        if cells.len() == self.g.order() {
            self.leaf(&cells);
            return;
        }
        let (target_idx, target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .max_by(|a, b| a.1.count_ones().cmp(&b.1.count_ones()).then(b.0.cmp(&a.0)))
            .map(|(i, &c)| (i, c))
            .expect("non-discrete partition has a non-singleton cell");
        let mut explored: Vec<usize> = Vec::new();
        for v in bits(target) {
            if !explored.is_empty() {
                let orbit = self.orbits(path);
                if explored.iter().any(|&w| orbit[w] == orbit[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(1u64 << v);
            child.push(target & !(1u64 << v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            path.push(v);
            self.descend(child, path);
            path.pop();
        }
    }
}

/// Computes the canonical labelling of `g`.
pub fn canonical_labeling(g: &Graph) -> Labeling {
    let mut search = Search {
        g,
        best_rows: None,
        best_position: Vec::new(),
        automorphisms: Vec::new(),
        leaves: 0,
    };
    search.descend(vec![g.vertex_mask()], &mut Vec::new());
    let rows = search.best_rows.expect("search reaches at least one leaf");
    Labeling {
        form: Graph::from_rows_unchecked(rows, g.size()),
        position: search.best_position,
        automorphisms: search.automorphisms,
        leaves: search.leaves,
    }
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).form
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    CanonicalCode::from_form(&canonical_form(g))
}

impl From<&Graph> for CanonicalCode {
    fn from(g: &Graph) -> Self {
        canonical_code(g)
    }
}

/// Code of a graph that is already in canonical form.
pub fn code_of_form(form: &Graph) -> CanonicalCode {
    CanonicalCode::from_form(form)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}
