//! Isomorph-free enumeration and the extremal searches built on it.
//!
//! Graphs come either from the built-in generator (orders up to
//! [`MAX_BUILTIN_ORDER`]) or from a graph6 stream. Each graph passes through
//! the filter stages in a fixed order, cheapest first: minimum degree,
//! connectivity, triangle cover, then the edge-pancyclic probe. Counts are
//! kept per size and stage, and a search is exhaustive only when no probe
//! ran out of budget in the part of the space its answer depends on.

pub mod generate;

use std::collections::HashSet;
use std::io::BufRead;
use std::ops::RangeInclusive;
use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, code_of_form};
use crate::checks::{has_triangle_cover, is_edge_pancyclic, triangle_covered, CheckOptions, Verdict};
use crate::connectivity::{is_k_connected, vertex_connectivity};
use crate::distance::diameter;
use crate::error::SearchError;
use crate::families::{cycle, q_graph, wheel};
use crate::graph::Graph;
use crate::graph6::{emit_graph6, parse_graph6};
use generate::{generate, Bounds};

/// Largest order accepted by the built-in generator.
pub const MAX_BUILTIN_ORDER: usize = 12;

/// Largest order accepted by the exhaustive maximum-diameter search.
pub const MAX_DIAMETER_ORDER: usize = 9;

/// Named predicates a search can target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    TriangleCover,
    EdgePancyclic,
}

impl Predicate {
    pub fn name(self) -> &'static str {
        match self {
            Predicate::TriangleCover => "triangle-cover",
            Predicate::EdgePancyclic => "edge-pancyclic",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "triangle-cover" => Some(Predicate::TriangleCover),
            "edge-pancyclic" => Some(Predicate::EdgePancyclic),
            _ => None,
        }
    }
}

/// What an enumeration keeps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFilter {
    pub min_degree: usize,
    /// Required lower bound on the vertex connectivity.
    pub connectivity: usize,
    pub sizes: RangeInclusive<usize>,
    pub predicate: Option<Predicate>,
}

fn max_size(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

impl GraphFilter {
    /// Every graph of order `n`.
    pub fn all(n: usize) -> Self {
        GraphFilter { min_degree: 0, connectivity: 0, sizes: 0..=max_size(n), predicate: None }
    }

    /// The filter for `predicate` on κ-connected graphs of order `n`, with
    /// the minimum degree the two together imply.
    ///
    /// A κ-connected graph with more than κ vertices has minimum degree at
    /// least κ. If it is also connected with a triangle cover, every vertex
    /// lies on an edge and so on a triangle, giving minimum degree 2. An
    /// edge-pancyclic graph is 2-connected, and for `n >= 4` every vertex
    /// has degree at least 3.
    pub fn for_predicate(n: usize, predicate: Predicate, kappa: usize, sizes: RangeInclusive<usize>) -> Self {
        let (min_degree, connectivity) = match predicate {
            Predicate::TriangleCover => {
                let d = if kappa >= 1 && n >= 3 { kappa.max(2) } else { kappa };
                (d, kappa)
            }
            Predicate::EdgePancyclic => {
                let d = if n >= 4 { 3 } else { 2 };
                (d.max(kappa), kappa.max(2))
            }
        };
        GraphFilter { min_degree, connectivity, sizes, predicate: Some(predicate) }
    }
}

/// Controls shared by all searches.
#[derive(Debug, Clone, Copy, Default)]
pub struct SearchOptions {
    /// Node ceiling per path probe; `None` is unlimited.
    pub budget: Option<u64>,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

/// How many graphs of one size reached each stage.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StageCounts {
    pub size: usize,
    /// Isomorphism classes produced at this size.
    pub enumerated: u64,
    pub min_degree: u64,
    pub connectivity: u64,
    pub triangle_cover: u64,
    pub passing: u64,
    /// Graphs whose predicate probe ran out of budget.
    pub undecided: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    Builtin,
    Stream,
    Construction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Objective {
    MinSize,
    MaxDiameter,
}

/// Result of an extremal search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SearchOutcome {
    pub objective: Objective,
    pub order: usize,
    pub predicate: Predicate,
    pub kappa: usize,
    /// The optimum found, or `None` when no graph passed.
    pub value: Option<usize>,
    /// Canonical graph6 strings of the graphs attaining `value`, sorted by
    /// canonical code.
    pub witnesses: Vec<String>,
    pub counts: Vec<StageCounts>,
    /// True iff the stated search space was covered without undecided
    /// probes below or at the optimum.
    pub exhaustive: bool,
    pub source: Source,
    /// Sizes covered, inclusive.
    pub sizes: [usize; 2],
    pub elapsed_ms: u64,
}

/// Graphs passing a filter, as canonical forms sorted by canonical code.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub graphs: Vec<Graph>,
    pub counts: Vec<StageCounts>,
    /// Sizes with at least one undecided graph.
    pub undecided_sizes: Vec<usize>,
    pub canon_calls: u64,
}

impl Enumeration {
    pub fn exhaustive(&self) -> bool {
        self.undecided_sizes.is_empty()
    }

    fn count_at(&self, size: usize) -> Option<&StageCounts> {
        self.counts.iter().find(|c| c.size == size)
    }
}

enum Eval {
    Rejected,
    Passed,
    Undecided,
}

struct Tally {
    cells: Vec<[AtomicU64; 6]>,
}

impl Tally {
    fn new(max: usize) -> Self {
        Tally { cells: (0..=max).map(|_| Default::default()).collect() }
    }

    fn bump(&self, size: usize, stage: usize) {
        self.cells[size][stage].fetch_add(1, Ordering::Relaxed);
    }

    fn counts(&self, enumerated: impl Fn(usize) -> u64) -> Vec<StageCounts> {
        self.cells
            .iter()
            .enumerate()
            .map(|(size, c)| {
                let get = |i: usize| c[i].load(Ordering::Relaxed);
                StageCounts {
                    size,
                    enumerated: enumerated(size),
                    min_degree: get(0),
                    connectivity: get(1),
                    triangle_cover: get(2),
                    passing: get(3),
                    undecided: get(4),
                }
            })
            .filter(|c| c.enumerated > 0)
            .collect()
    }
}

/// Runs the filter stages after the size and degree checks, counting each
/// stage passed.
fn evaluate(filter: &GraphFilter, g: &Graph, budget: Option<u64>, tally: &Tally) -> Eval {
    let m = g.size();
    if g.min_degree() < filter.min_degree {
        return Eval::Rejected;
    }
    tally.bump(m, 0);
    if !is_k_connected(g, filter.connectivity) {
        return Eval::Rejected;
    }
    tally.bump(m, 1);
    if filter.predicate.is_some() && !triangle_covered(g) {
        return Eval::Rejected;
    }
    tally.bump(m, 2);
    let verdict = match filter.predicate {
        Some(Predicate::EdgePancyclic) => is_edge_pancyclic(g, CheckOptions::with_budget(budget))
            .map(|r| r.verdict)
            .unwrap_or(Verdict::False),
        _ => Verdict::True,
    };
    match verdict {
        Verdict::True => {
            tally.bump(m, 3);
            Eval::Passed
        }
        Verdict::False => Eval::Rejected,
        Verdict::Unknown => {
            tally.bump(m, 4);
            Eval::Undecided
        }
    }
}

fn in_pool<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match workers.and_then(|w| rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build().ok()) {
        Some(pool) => pool.install(f),
        None => f(),
    }
}

fn sort_by_code(graphs: &mut [Graph]) {
    graphs.sort_by_cached_key(code_of_form);
}

fn undecided_sizes(counts: &[StageCounts]) -> Vec<usize> {
    counts.iter().filter(|c| c.undecided > 0).map(|c| c.size).collect()
}

/// One representative of every isomorphism class of order `n` passing
/// `filter`, produced by canonical edge augmentation.
pub fn enumerate_graphs(n: usize, filter: &GraphFilter, opts: SearchOptions) -> Result<Enumeration, SearchError> {
    if !(1..=MAX_BUILTIN_ORDER).contains(&n) {
        return Err(SearchError::OrderOutOfRange { order: n, min: 1, max: MAX_BUILTIN_ORDER });
    }
    let hi = (*filter.sizes.end()).min(max_size(n));
    let lo = *filter.sizes.start();
    let bounds = Bounds {
        order: n,
        sizes: lo..=hi,
        min_degree: filter.min_degree,
        connected: filter.connectivity >= 1,
    };
    let tally = Tally::new(max_size(n));
    let (mut graphs, stats) = in_pool(opts.workers, || {
        generate(&bounds, |g| match evaluate(filter, g, opts.budget, &tally) {
            Eval::Passed => Some(g.clone()),
            _ => None,
        })
    });
    sort_by_code(&mut graphs);
    let counts = tally.counts(|m| {
        if bounds.sizes.contains(&m) {
            stats.levels.get(&m).map_or(0, |l| l.generated)
        } else {
            0
        }
    });
    Ok(Enumeration { undecided_sizes: undecided_sizes(&counts), graphs, counts, canon_calls: stats.canon_calls })
}

/// Reads graph6 lines of order `n` (blank lines and a `>>graph6<<` header
/// are skipped), keeps one graph per isomorphism class and applies `filter`.
pub fn enumerate_stream<R: BufRead>(
    n: usize,
    reader: R,
    filter: &GraphFilter,
    opts: SearchOptions,
) -> Result<Enumeration, SearchError> {
    let mut seen = HashSet::new();
    let mut forms = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| SearchError::Io(e.to_string()))?;
        let text = line.trim().trim_start_matches(">>graph6<<");
        if text.is_empty() {
            continue;
        }
        let g = parse_graph6(text).map_err(|error| SearchError::Graph6 { line: i + 1, error })?;
        if g.order() != n {
            return Err(SearchError::OrderMismatch { line: i + 1, expected: n, found: g.order() });
        }
        if !filter.sizes.contains(&g.size()) {
            continue;
        }
        let form = canonical_form(&g);
        if seen.insert(form.rows().to_vec()) {
            forms.push(form);
        }
    }
    let tally = Tally::new(max_size(n));
    let mut per_size = vec![0u64; max_size(n) + 1];
    for g in &forms {
        per_size[g.size()] += 1;
    }
    let mut graphs: Vec<Graph> = in_pool(opts.workers, || {
        forms
            .into_par_iter()
            .filter(|g| matches!(evaluate(filter, g, opts.budget, &tally), Eval::Passed))
            .collect()
    });
    sort_by_code(&mut graphs);
    let counts = tally.counts(|m| per_size[m]);
    Ok(Enumeration { undecided_sizes: undecided_sizes(&counts), graphs, counts, canon_calls: seen.len() as u64 })
}

/// Independent re-check of a witness before it is reported.
fn verify_witness(g: &Graph, filter: &GraphFilter, budget: Option<u64>) -> bool {
    let kappa_ok = filter.connectivity == 0
        || vertex_connectivity(g).map_or(false, |k| k >= filter.connectivity);
    let pred_ok = match filter.predicate {
        None => true,
        Some(Predicate::TriangleCover) => has_triangle_cover(g).holds(),
        Some(Predicate::EdgePancyclic) => {
            let opts = CheckOptions { budget, parallel: true, witnesses: false };
            is_edge_pancyclic(g, opts).map_or(false, |r| r.holds())
        }
    };
    filter.sizes.contains(&g.size()) && g.min_degree() >= filter.min_degree && kappa_ok && pred_ok
}

fn witness_strings(graphs: &[&Graph], filter: &GraphFilter, budget: Option<u64>) -> Result<Vec<String>, SearchError> {
    graphs
        .iter()
        .map(|g| {
            let s = emit_graph6(g).expect("search orders fit graph6");
            if verify_witness(g, filter, budget) {
                Ok(s)
            } else {
                Err(SearchError::WitnessRejected(s))
            }
        })
        .collect()
}

fn check_kappa(kappa: usize) -> Result<(), SearchError> {
    if (1..=3).contains(&kappa) {
        Ok(())
    } else {
        Err(SearchError::BadKappa(kappa))
    }
}

fn check_order(n: usize, min: usize, max: usize) -> Result<(), SearchError> {
    if (min..=max).contains(&n) {
        Ok(())
    } else {
        Err(SearchError::OrderOutOfRange { order: n, min, max })
    }
}

/// Smallest order for which the minimum-size search is defined.
fn min_order(predicate: Predicate, kappa: usize) -> usize {
    match predicate {
        Predicate::EdgePancyclic => 3,
        Predicate::TriangleCover => kappa + 1,
    }
}

/// A size at which a graph is known to exist, used as the first cap.
fn initial_cap(n: usize, predicate: Predicate, kappa: usize) -> usize {
    let cap = match (predicate, kappa) {
        (Predicate::EdgePancyclic, _) => 2 * n - 2,
        (Predicate::TriangleCover, 1) => (3 * n).saturating_sub(2) / 2,
        (Predicate::TriangleCover, 2) => (3 * n + 1) / 2,
        (Predicate::TriangleCover, _) => 2 * n - 2,
    };
    cap.min(max_size(n))
}

fn min_outcome(
    n: usize,
    predicate: Predicate,
    kappa: usize,
    filter: &GraphFilter,
    e: &Enumeration,
    source: Source,
    opts: SearchOptions,
    start: Instant,
) -> Result<SearchOutcome, SearchError> {
    let value = e.graphs.iter().map(Graph::size).min();
    let at: Vec<&Graph> = e.graphs.iter().filter(|g| Some(g.size()) == value).collect();
    let bound = value.unwrap_or(usize::MAX);
    Ok(SearchOutcome {
        objective: Objective::MinSize,
        order: n,
        predicate,
        kappa,
        value,
        witnesses: witness_strings(&at, filter, opts.budget)?,
        counts: e.counts.clone(),
        exhaustive: e.undecided_sizes.iter().all(|&m| m > bound),
        source,
        sizes: [*filter.sizes.start(), *filter.sizes.end()],
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Minimum size of a graph of order `n` satisfying `predicate` with
/// connectivity at least `kappa`, with every witness at that size.
///
/// All sizes from 0 up to a cap are enumerated. The cap starts at a size
/// where a construction is known and grows if nothing passes.
pub fn min_size(n: usize, predicate: Predicate, kappa: usize, opts: SearchOptions) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    if predicate == Predicate::TriangleCover {
        check_kappa(kappa)?;
    }
    check_order(n, min_order(predicate, kappa), MAX_BUILTIN_ORDER)?;
    let mut cap = initial_cap(n, predicate, kappa);
    loop {
        let filter = GraphFilter::for_predicate(n, predicate, kappa, 0..=cap);
        let e = enumerate_graphs(n, &filter, opts)?;
        if !e.graphs.is_empty() || cap == max_size(n) {
            return min_outcome(n, predicate, kappa, &filter, &e, Source::Builtin, opts, start);
        }
        cap += 1;
    }
}

/// [`min_size`] over the graphs of a graph6 stream instead of the built-in
/// generator. The stream is taken to be the whole search space.
pub fn min_size_stream<R: BufRead>(
    n: usize,
    predicate: Predicate,
    kappa: usize,
    reader: R,
    opts: SearchOptions,
) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    if predicate == Predicate::TriangleCover {
        check_kappa(kappa)?;
    }
    check_order(n, min_order(predicate, kappa), crate::graph6::MAX_GRAPH6_ORDER)?;
    let filter = GraphFilter::for_predicate(n, predicate, kappa, 0..=max_size(n));
    let e = enumerate_stream(n, reader, &filter, opts)?;
    min_outcome(n, predicate, kappa, &filter, &e, Source::Stream, opts, start)
}

/// Minimum size of an edge-pancyclic graph of order `n`.
pub fn min_size_edge_pancyclic(n: usize, opts: SearchOptions) -> Result<SearchOutcome, SearchError> {
    min_size(n, Predicate::EdgePancyclic, 2, opts)
}

/// Minimum size of a κ-connected graph of order `n` in which every edge lies
/// in a triangle.
pub fn min_size_triangle_cover(n: usize, kappa: usize, opts: SearchOptions) -> Result<SearchOutcome, SearchError> {
    min_size(n, Predicate::TriangleCover, kappa, opts)
}

/// Every isomorphism class of order `n` with connectivity at least `kappa`
/// satisfying `predicate`, of the given size or of any size.
pub fn extremal_census(
    n: usize,
    predicate: Predicate,
    kappa: usize,
    size: Option<usize>,
    opts: SearchOptions,
) -> Result<Enumeration, SearchError> {
    let sizes = size.map_or(0..=max_size(n), |m| m..=m);
    enumerate_graphs(n, &GraphFilter::for_predicate(n, predicate, kappa, sizes), opts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiameterMode {
    /// Every edge-pancyclic graph of the order is examined.
    Exhaustive,
    /// One graph attaining the known maximum, from a construction where one
    /// exists.
    Witness,
}

fn diameter_outcome(n: usize, e: &Enumeration, filter: &GraphFilter, opts: SearchOptions, start: Instant, take: usize) -> Result<SearchOutcome, SearchError> {
    let diam = |g: &Graph| diameter(g).expect("edge-pancyclic graphs are connected");
    let value = e.graphs.iter().map(diam).max();
    let at: Vec<&Graph> = e.graphs.iter().filter(|g| Some(diam(g)) == value).take(take).collect();
    Ok(SearchOutcome {
        objective: Objective::MaxDiameter,
        order: n,
        predicate: Predicate::EdgePancyclic,
        kappa: 2,
        value,
        witnesses: witness_strings(&at, filter, opts.budget)?,
        counts: e.counts.clone(),
        exhaustive: e.exhaustive(),
        source: Source::Builtin,
        sizes: [*filter.sizes.start(), *filter.sizes.end()],
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

/// Maximum diameter of an edge-pancyclic graph of order `n`.
///
/// In witness mode the triangle, the wheels and `Q_n` supply the witness for
/// `n = 3`, `4..=7` and `n >= 10`; orders 8 and 9 fall back to the search.
pub fn max_diameter_edge_pancyclic(n: usize, mode: DiameterMode, opts: SearchOptions) -> Result<SearchOutcome, SearchError> {
    let start = Instant::now();
    let all = GraphFilter::for_predicate(n, Predicate::EdgePancyclic, 2, 0..=max_size(n));
    let built = match (mode, n) {
        (DiameterMode::Witness, 3) => Some(cycle(3)?),
        (DiameterMode::Witness, 4..=7) => Some(wheel(n)?.graph),
        (DiameterMode::Witness, 10..) => Some(q_graph(n)?.graph),
        _ => None,
    };
    if let Some(g) = built {
        let form = canonical_form(&g);
        let filter = GraphFilter { sizes: g.size()..=g.size(), ..all };
        return Ok(SearchOutcome {
            objective: Objective::MaxDiameter,
            order: n,
            predicate: Predicate::EdgePancyclic,
            kappa: 2,
            value: Some(diameter(&g).map_err(crate::error::FamilyError::from)?),
            witnesses: witness_strings(&[&form], &filter, opts.budget)?,
            counts: Vec::new(),
            exhaustive: false,
            source: Source::Construction,
            sizes: [g.size(), g.size()],
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    check_order(n, 3, MAX_DIAMETER_ORDER)?;
    let e = enumerate_graphs(n, &all, opts)?;
    let take = if mode == DiameterMode::Witness { 1 } else { usize::MAX };
    diameter_outcome(n, &e, &all, opts, start, take)
}

impl SearchOutcome {
    /// Number of graphs passing the predicate at `size`.
    pub fn passing_at(&self, size: usize) -> u64 {
        self.counts.iter().find(|c| c.size == size).map_or(0, |c| c.passing)
    }

    /// Total number of passing graphs over all sizes.
    pub fn total_passing(&self) -> u64 {
        self.counts.iter().map(|c| c.passing).sum()
    }
}

impl Enumeration {
    /// Number of classes generated at `size` (before filtering).
    pub fn enumerated_at(&self, size: usize) -> u64 {
        self.count_at(size).map_or(0, |c| c.enumerated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_four_edge_pancyclic() {
        let out = min_size_edge_pancyclic(4, SearchOptions::default()).unwrap();
        assert_eq!(out.value, Some(6));
        assert_eq!(out.witnesses, vec!["C~".to_string()]);
        assert!(out.exhaustive);
    }

    #[test]
    fn order_five_census_sizes() {
        let e = extremal_census(5, Predicate::EdgePancyclic, 2, None, SearchOptions::default()).unwrap();
        let sizes: Vec<usize> = e.graphs.iter().map(Graph::size).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![8, 9, 10]);
    }

    #[test]
    fn rejects_large_builtin_order() {
        assert!(matches!(
            enumerate_graphs(13, &GraphFilter::all(13), SearchOptions::default()),
            Err(SearchError::OrderOutOfRange { .. })
        ));
        assert!(matches!(min_size_triangle_cover(6, 4, SearchOptions::default()), Err(SearchError::BadKappa(4))));
    }

    #[test]
    fn stream_matches_builtin() {
        let all = enumerate_graphs(5, &GraphFilter::all(5), SearchOptions::default()).unwrap();
        let text: String = all.graphs.iter().map(|g| emit_graph6(g).unwrap() + "\n").collect();
        let a = min_size_stream(5, Predicate::EdgePancyclic, 2, text.as_bytes(), SearchOptions::default()).unwrap();
        let b = min_size_edge_pancyclic(5, SearchOptions::default()).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.witnesses, b.witnesses);
        assert_eq!(a.source, Source::Stream);
    }

    #[test]
    fn stream_errors_carry_line_numbers() {
        let text = "C~\n\nC}x\n";
        match min_size_stream(4, Predicate::EdgePancyclic, 2, text.as_bytes(), SearchOptions::default()) {
            Err(SearchError::Graph6 { line: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        match min_size_stream(4, Predicate::EdgePancyclic, 2, "Dhc\n".as_bytes(), SearchOptions::default()) {
            Err(SearchError::OrderMismatch { line: 1, expected: 4, found: 5 }) => {}
            other => panic!("{other:?}"),
        }
    }
}
