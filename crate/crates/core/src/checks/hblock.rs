//! The six path and cycle properties of the bridged-fan block `H(k)` that
//! make the ring `G(k)` edge-pancyclic. Each property is checked literally
//! on the constructed block and reported as a named part.

use std::time::Instant;

use super::paths::{PathQuery, PathSearcher, Probe};
use super::report::{CheckReport, Evidence, Verdict};
use crate::error::FamilyError;
use crate::families::{h_block, HBlock};
use crate::graph::Edge;

/// Accumulates one property's verdict and evidence.
struct Property<'a, 'g> {
    report: CheckReport,
    searcher: &'a mut PathSearcher<'g>,
}

impl<'a, 'g> Property<'a, 'g> {
    fn new(name: &str, searcher: &'a mut PathSearcher<'g>) -> Self {
        Property { report: CheckReport::new(name, Verdict::True), searcher }
    }

    fn record(&mut self, probe: Probe, found: impl FnOnce(Vec<usize>) -> Evidence, missing: Evidence, undecided: Evidence) {
        self.report.stats.probes += 1;
        let (verdict, ev) = match probe {
            Probe::Found(p) => (Verdict::True, found(p)),
            Probe::Absent => (Verdict::False, missing),
            Probe::Unknown => (Verdict::Unknown, undecided),
        };
        self.report.verdict = self.report.verdict.and(verdict);
        self.report.evidence.push(ev);
    }

    /// `(a, b)`-path of length `len`, optionally through `e`.
    fn path(&mut self, a: usize, b: usize, len: usize, through: Option<Edge>) {
        let mut q = PathQuery::new(a, b, len);
        q.through = through;
        let probe = self.searcher.probe(q);
        self.record(
            probe,
            |vertices| Evidence::Path { from: a, to: b, length: len, through, vertices },
            Evidence::MissingPath { from: a, to: b, length: len, through },
            Evidence::Undecided { edge: through, length: len },
        );
    }

    /// Cycle of length `len` through `e`.
    fn cycle(&mut self, e: Edge, len: usize) {
        let probe = self.searcher.probe(PathQuery::cycle_through(e, len));
        self.record(
            probe,
            |vertices| Evidence::Cycle { edge: Some(e), length: len, vertices },
            Evidence::MissingCycle { edge: Some(e), vertex: None, length: len },
            Evidence::Undecided { edge: Some(e), length: len },
        );
    }

    fn finish(mut self) -> CheckReport {
        self.report.stats.nodes = self.searcher.nodes;
        self.report
    }
}

/// Checks properties (i)–(vi) of `H(k)` for the given `k`.
///
/// With `p = 3k - 3` and `n = 6k - 4`:
/// 1. a `(v_1,u_1)`-path of every length in `[3, 6k-5]`;
/// 2. every edge of Ω on a `(v_1,u_1)`-path of length `6k-5`;
/// 3. each `v_i v_{i+1}` (`i <= 3k-4`) in cycles of every length `[3, n]` and
///    on a `(v_1,u_1)`-path of length `3k-i+1`;
/// 4. `v u_p` in cycles of every length and on a `(v_1,u_1)`-path of length 4;
/// 5. `vu` in cycles of every length `[3, 3k-1]` and on a path of length 3;
/// 6. each `v v_i` in cycles of every length `[3, 6k-i-3]` and on a
///    `(v_1,u_1)`-path of length `3k-i+1`.
pub fn verify_h_block_properties(k: usize, budget: Option<u64>) -> Result<CheckReport, FamilyError> {
    let block = h_block(k)?;
    Ok(verify_block(&block, budget))
}

fn verify_block(h: &HBlock, budget: Option<u64>) -> CheckReport {
    let start = Instant::now();
    let g = h.graph();
    let k = h.k;
    let p = h.path_len();
    let n = g.order();
    let (v, u) = (h.v(), h.u());
    let (v1, u1) = (h.vi(1), h.ui(1));
    let mut parts = Vec::new();

    let mut s = PathSearcher::new(g, budget);
    let mut prop = Property::new("i", &mut s);
    for len in 3..=6 * k - 5 {
        prop.path(v1, u1, len, None);
    }
    parts.push(prop.finish());

    let mut s = PathSearcher::new(g, budget);
    let mut prop = Property::new("ii", &mut s);
    for e in h.omega() {
        prop.path(v1, u1, 6 * k - 5, Some(e));
    }
    parts.push(prop.finish());

    let mut s = PathSearcher::new(g, budget);
    let mut prop = Property::new("iii", &mut s);
    for i in 1..=3 * k - 4 {
        let e = Edge::new(h.vi(i), h.vi(i + 1));
        for len in 3..=n {
            prop.cycle(e, len);
        }
        prop.path(v1, u1, 3 * k - i + 1, Some(e));
    }
    parts.push(prop.finish());

    let mut s = PathSearcher::new(g, budget);
    let mut prop = Property::new("iv", &mut s);
    let e = Edge::new(v, h.ui(p));
    for len in 3..=n {
        prop.cycle(e, len);
    }
    prop.path(v1, u1, 4, Some(e));
    parts.push(prop.finish());

    let mut s = PathSearcher::new(g, budget);
    let mut prop = Property::new("v", &mut s);
    let e = Edge::new(v, u);
    for len in 3..=3 * k - 1 {
        prop.cycle(e, len);
    }
    prop.path(v1, u1, 3, Some(e));
    parts.push(prop.finish());

    let mut s = PathSearcher::new(g, budget);
    let mut prop = Property::new("vi", &mut s);
    for i in 1..=3 * k - 3 {
        let e = Edge::new(v, h.vi(i));
        for len in 3..=6 * k - i - 3 {
            prop.cycle(e, len);
        }
        prop.path(v1, u1, 3 * k - i + 1, Some(e));
    }
    parts.push(prop.finish());

    let mut report = CheckReport::new(format!("hk-props(k={k})"), Verdict::True);
    for part in &parts {
        report.verdict = report.verdict.and(part.verdict);
        report.stats.nodes += part.stats.nodes;
        report.stats.probes += part.stats.probes;
    }
    report.parts = parts;
    report.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}
