//! Triangle cover, per-edge cycle spectra and the pancyclicity hierarchy.
//!
//! Lengths are probed in ascending order. Within one length the edges are
//! visited lexicographically, and a cycle found for one edge is recorded as
//! the witness for every edge it literally traverses, so those edges are not
//! probed again at that length.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::paths::{PathQuery, PathSearcher, Probe};
use super::report::{CheckReport, Evidence, Stats, Verdict};
use crate::error::GraphError;
use crate::graph::{bits, Edge, Graph};

#[derive(Debug, Clone, Copy, Default)]
pub struct CheckOptions {
    /// Node ceiling per (edge, length) probe; `None` is unlimited.
    pub budget: Option<u64>,
    /// Evaluate lengths concurrently.
    pub parallel: bool,
    /// Attach every witness cycle to positive reports.
    pub witnesses: bool,
}

impl CheckOptions {
    pub fn with_budget(budget: Option<u64>) -> Self {
        CheckOptions { budget, ..Self::default() }
    }
}

pub fn has_triangle_cover(g: &Graph) -> CheckReport {
    let uncovered: Vec<Edge> = g
        .edges()
        .filter(|e| g.neighbors(e.u) & g.neighbors(e.v) == 0)
        .collect();
    let mut r = CheckReport::new("triangle-cover", Verdict::from_bool(uncovered.is_empty()));
    if !uncovered.is_empty() {
        r.evidence.push(Evidence::UncoveredEdges { edges: uncovered });
    }
    r
}

/// Whether every edge lies in a triangle, without building a report.
pub fn triangle_covered(g: &Graph) -> bool {
    g.edges().all(|e| g.neighbors(e.u) & g.neighbors(e.v) != 0)
}

/// Outcome of a set of path-length probes between two fixed ends.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct LengthSet {
    pub found: BTreeSet<usize>,
    /// Lengths whose probe ran out of budget.
    pub undecided: BTreeSet<usize>,
    #[serde(skip)]
    pub witnesses: BTreeMap<usize, Vec<usize>>,
}

/// Exactly the lengths in `targets` for which a simple `(a, b)`-path exists.
pub fn path_length_set(
    g: &Graph,
    a: usize,
    b: usize,
    targets: RangeInclusive<usize>,
    budget: Option<u64>,
) -> Result<LengthSet, GraphError> {
    check_vertex(g, a)?;
    check_vertex(g, b)?;
    let mut s = PathSearcher::new(g, budget);
    let mut out = LengthSet::default();
    for len in targets {
        match s.probe(PathQuery::new(a, b, len)) {
            Probe::Found(p) => {
                out.found.insert(len);
                out.witnesses.insert(len, p);
            }
            Probe::Absent => {}
            Probe::Unknown => {
                out.undecided.insert(len);
            }
        }
    }
    Ok(out)
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), GraphError> {
    if v >= g.order() {
        Err(GraphError::VertexOutOfRange { vertex: v, order: g.order() })
    } else {
        Ok(())
    }
}

/// Cycle lengths through one edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeSpectrum {
    pub edge: Edge,
    pub lengths: BTreeSet<usize>,
    #[serde(skip_serializing_if = "BTreeSet::is_empty")]
    pub undecided: BTreeSet<usize>,
    #[serde(skip)]
    pub witnesses: BTreeMap<usize, Vec<usize>>,
}

/// Lengths in `targets` of cycles through `e`.
pub fn edge_cycle_lengths(
    g: &Graph,
    e: Edge,
    targets: RangeInclusive<usize>,
    budget: Option<u64>,
) -> Result<EdgeSpectrum, GraphError> {
    if !g.has_edge(e.u, e.v) {
        return Err(GraphError::NotAnEdge(e));
    }
    let mut s = PathSearcher::new(g, budget);
    let mut out = EdgeSpectrum {
        edge: e,
        lengths: BTreeSet::new(),
        undecided: BTreeSet::new(),
        witnesses: BTreeMap::new(),
    };
    for len in targets.filter(|&l| l >= 3 && l <= g.order()) {
        match s.probe(PathQuery::cycle_through(e, len)) {
            Probe::Found(p) => {
                out.lengths.insert(len);
                out.witnesses.insert(len, p);
            }
            Probe::Absent => {}
            Probe::Unknown => {
                out.undecided.insert(len);
            }
        }
    }
    Ok(out)
}

/// Per-edge cycle lengths over `[3, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleSpectrum {
    pub order: usize,
    pub edges: Vec<EdgeSpectrum>,
    /// False when some probe ran out of budget, so an absent length may
    /// still occur.
    pub complete: bool,
    #[serde(skip)]
    pub stats: Stats,
}

impl CycleSpectrum {
    pub fn lengths_of(&self, e: Edge) -> Option<&BTreeSet<usize>> {
        self.edges.iter().find(|s| s.edge == e).map(|s| &s.lengths)
    }

    /// Union of all edge spectra.
    pub fn global(&self) -> BTreeSet<usize> {
        self.edges.iter().flat_map(|s| s.lengths.iter().copied()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Status {
    Pending,
    Found(usize),
    Absent,
    Unknown,
}

/// All probes for one cycle length.
struct LengthPass {
    length: usize,
    cycles: Vec<Vec<usize>>,
    status: Vec<Status>,
    nodes: u64,
    probes: u64,
}

struct EdgeIndex {
    n: usize,
    edges: Vec<Edge>,
    index: Vec<u32>,
}

impl EdgeIndex {
    fn new(g: &Graph) -> Self {
        let n = g.order();
        let edges: Vec<Edge> = g.edges().collect();
        let mut index = vec![u32::MAX; n * n];
        for (i, e) in edges.iter().enumerate() {
            index[e.u * n + e.v] = i as u32;
            index[e.v * n + e.u] = i as u32;
        }
        EdgeIndex { n, edges, index }
    }

    fn of(&self, a: usize, b: usize) -> usize {
        self.index[a * self.n + b] as usize
    }
}

fn edge_pass(g: &Graph, idx: &EdgeIndex, length: usize, budget: Option<u64>, stop_on_absent: bool) -> LengthPass {
    let mut pass = LengthPass {
        length,
        cycles: Vec::new(),
        status: vec![Status::Pending; idx.edges.len()],
        nodes: 0,
        probes: 0,
    };
    let mut s = PathSearcher::new(g, budget);
    for i in 0..idx.edges.len() {
        if pass.status[i] != Status::Pending {
            continue;
        }
        pass.probes += 1;
        match s.probe(PathQuery::cycle_through(idx.edges[i], length)) {
            Probe::Found(cyc) => {
                let c = pass.cycles.len();
                let k = cyc.len();
                for j in 0..k {
                    let ei = idx.of(cyc[j], cyc[(j + 1) % k]);
                    if matches!(pass.status[ei], Status::Pending | Status::Unknown) {
                        pass.status[ei] = Status::Found(c);
                    }
                }
                pass.cycles.push(cyc);
            }
            Probe::Absent => {
                pass.status[i] = Status::Absent;
                if stop_on_absent {
                    break;
                }
            }
            Probe::Unknown => pass.status[i] = Status::Unknown,
        }
    }
    pass.nodes = s.nodes;
    pass
}

fn run_passes(g: &Graph, opts: CheckOptions, stop_on_absent: bool) -> (EdgeIndex, Vec<LengthPass>) {
    let idx = EdgeIndex::new(g);
    let lengths: Vec<usize> = (3..=g.order()).collect();
    let passes = if opts.parallel {
        lengths
            .par_iter()
            .map(|&l| edge_pass(g, &idx, l, opts.budget, stop_on_absent))
            .collect()
    } else {
        let mut out = Vec::new();
        for &l in &lengths {
            let pass = edge_pass(g, &idx, l, opts.budget, stop_on_absent);
            let failed = pass.status.contains(&Status::Absent);
            out.push(pass);
            if failed && stop_on_absent {
                break;
            }
        }
        out
    };
    (idx, passes)
}

/// Per-edge spectrum over `[3, n]` for every edge of `g`.
pub fn cycle_spectrum(g: &Graph, opts: CheckOptions) -> CycleSpectrum {
    let start = Instant::now();
    let (idx, passes) = run_passes(g, opts, false);
    let mut edges: Vec<EdgeSpectrum> = idx
        .edges
        .iter()
        .map(|&edge| EdgeSpectrum {
            edge,
            lengths: BTreeSet::new(),
            undecided: BTreeSet::new(),
            witnesses: BTreeMap::new(),
        })
        .collect();
    let mut stats = Stats::default();
    for pass in &passes {
        stats.nodes += pass.nodes;
        stats.probes += pass.probes;
        for (i, st) in pass.status.iter().enumerate() {
            match st {
                Status::Found(c) => {
                    edges[i].lengths.insert(pass.length);
                    edges[i].witnesses.insert(pass.length, pass.cycles[*c].clone());
                }
                Status::Unknown => {
                    edges[i].undecided.insert(pass.length);
                }
                Status::Absent | Status::Pending => {}
            }
        }
    }
    stats.elapsed_ms = start.elapsed().as_millis() as u64;
    let complete = edges.iter().all(|e| e.undecided.is_empty());
    CycleSpectrum { order: g.order(), edges, complete, stats }
}

fn need_order(g: &Graph, needed: usize) -> Result<(), GraphError> {
    if g.order() < needed {
        Err(GraphError::TooSmall { needed, order: g.order() })
    } else {
        Ok(())
    }
}

/// Every edge lies in a cycle of every length `3..=n`.
pub fn is_edge_pancyclic(g: &Graph, opts: CheckOptions) -> Result<CheckReport, GraphError> {
    need_order(g, 3)?;
    let start = Instant::now();
    let mut report = CheckReport::new("edge-pancyclic", Verdict::True);
    if g.size() == 0 {
        report.verdict = Verdict::False;
        report.evidence.push(Evidence::MissingCycle { edge: None, vertex: None, length: 3 });
        return Ok(report);
    }
    let (idx, passes) = run_passes(g, opts, true);
    let mut undecided = None;
    for pass in &passes {
        report.stats.nodes += pass.nodes;
        report.stats.probes += pass.probes;
    }
    'outer: for pass in &passes {
        for (i, st) in pass.status.iter().enumerate() {
            match st {
                Status::Absent => {
                    report.verdict = Verdict::False;
                    report.evidence = vec![Evidence::MissingCycle {
                        edge: Some(idx.edges[i]),
                        vertex: None,
                        length: pass.length,
                    }];
                    break 'outer;
                }
                Status::Unknown if undecided.is_none() => {
                    undecided = Some(Evidence::Undecided { edge: Some(idx.edges[i]), length: pass.length });
                }
                _ => {}
            }
        }
    }
    if report.verdict == Verdict::True {
        if let Some(u) = undecided {
            report.verdict = Verdict::Unknown;
            report.evidence.push(u);
        } else if opts.witnesses {
            for pass in &passes {
                for c in &pass.cycles {
                    report.evidence.push(Evidence::Cycle { edge: None, length: pass.length, vertices: c.clone() });
                }
            }
        }
    }
    report.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Every vertex lies in a cycle of every length `3..=n`.
pub fn is_vertex_pancyclic(g: &Graph, opts: CheckOptions) -> Result<CheckReport, GraphError> {
    need_order(g, 3)?;
    let start = Instant::now();
    let n = g.order();
    let mut report = CheckReport::new("vertex-pancyclic", Verdict::True);
    let mut s = PathSearcher::new(g, opts.budget);
    let mut undecided = None;
    'lengths: for len in 3..=n {
        let mut covered = 0u64;
        for v in 0..n {
            if covered >> v & 1 == 1 {
                continue;
            }
            let mut unknown = false;
            let mut found = false;
            for w in bits(g.neighbors(v)) {
                report.stats.probes += 1;
                match s.probe(PathQuery::cycle_through(Edge::new(v, w), len)) {
                    Probe::Found(c) => {
                        for &x in &c {
                            covered |= 1 << x;
                        }
                        if opts.witnesses {
                            report.evidence.push(Evidence::Cycle { edge: None, length: len, vertices: c });
                        }
                        found = true;
                        break;
                    }
                    Probe::Absent => {}
                    Probe::Unknown => unknown = true,
                }
            }
            if !found {
                if unknown {
                    undecided.get_or_insert(Evidence::Undecided { edge: None, length: len });
                } else {
                    report.verdict = Verdict::False;
                    report.evidence = vec![Evidence::MissingCycle { edge: None, vertex: Some(v), length: len }];
                    break 'lengths;
                }
            }
        }
    }
    if report.verdict == Verdict::True {
        if let Some(u) = undecided {
            report.verdict = Verdict::Unknown;
            report.evidence = vec![u];
        }
    }
    report.stats.nodes = s.nodes;
    report.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// `g` contains a cycle of every length `3..=n`. Positive reports carry one
/// witness per length.
pub fn is_pancyclic(g: &Graph, opts: CheckOptions) -> Result<CheckReport, GraphError> {
    need_order(g, 3)?;
    let start = Instant::now();
    let n = g.order();
    let mut report = CheckReport::new("pancyclic", Verdict::True);
    let mut s = PathSearcher::new(g, opts.budget);
    let mut witnesses = Vec::new();
    let mut undecided = None;
    for len in 3..=n {
        let mut unknown = false;
        let mut found = None;
        for e in g.edges() {
            report.stats.probes += 1;
            match s.probe(PathQuery::cycle_through(e, len)) {
                Probe::Found(c) => {
                    found = Some(c);
                    break;
                }
                Probe::Absent => {}
                Probe::Unknown => unknown = true,
            }
        }
        match found {
            Some(c) => witnesses.push(Evidence::Cycle { edge: None, length: len, vertices: c }),
            None if unknown => {
                undecided.get_or_insert(Evidence::Undecided { edge: None, length: len });
            }
            None => {
                report.verdict = Verdict::False;
                report.evidence = vec![Evidence::MissingCycle { edge: None, vertex: None, length: len }];
                break;
            }
        }
    }
    if report.verdict == Verdict::True {
        match undecided {
            Some(u) => {
                report.verdict = Verdict::Unknown;
                report.evidence = vec![u];
            }
            None => report.evidence = witnesses,
        }
    }
    report.stats.nodes = s.nodes;
    report.stats.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// A Hamilton cycle of `g`, if one exists.
pub fn hamilton_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n < 3 {
        return None;
    }
    let mut s = PathSearcher::new(g, None);
    for w in bits(g.neighbors(0)) {
        if let Probe::Found(c) = s.probe(PathQuery::cycle_through(Edge::new(0, w), n)) {
            return Some(c);
        }
    }
    None
}
