//! Distance-layer inequalities for edge-pancyclic graphs.
//!
//! From a peripheral vertex `x` with layers `V_0..V_d`:
//!
//! * `|V_1| >= 3` (needs `n >= 4`, from minimum degree three),
//! * `|V_{d-1}| + |V_d| >= 4` (needs `d >= 2`),
//! * `|V_i| + |V_{i+1}| >= 5` for `1 <= i <= d-2` (needs `d >= 3`),
//!
//! together with `δ >= 3`, `κ >= 2` and the resulting `d <= ⌊2n/5⌋`.
//! Inequalities whose preconditions fail are reported as skipped.

use super::report::{CheckReport, Evidence, Verdict};
use crate::connectivity::connectivity_with_cut;
use crate::distance::{distance_layers, peripheral_vertex};
use crate::error::GraphError;
use crate::graph::Graph;

fn inequality(report: &mut CheckReport, name: String, lhs: usize, rhs: usize) {
    let holds = lhs >= rhs;
    report.verdict = report.verdict.and(Verdict::from_bool(holds));
    report.evidence.push(Evidence::Inequality { name, lhs, rhs, holds });
}

fn skipped(report: &mut CheckReport, name: &str, reason: &str) {
    report.evidence.push(Evidence::Skipped { name: name.into(), reason: reason.into() });
}

/// The caller asserts that `g` is edge-pancyclic; this only checks the
/// consequences listed in the module docs.
pub fn verify_distance_layer_bounds(g: &Graph) -> Result<CheckReport, GraphError> {
    let n = g.order();
    if n < 3 {
        return Err(GraphError::TooSmall { needed: 3, order: n });
    }
    let mut report = CheckReport::new("layer-bounds", Verdict::True);

    if n >= 4 {
        let (vertex, degree) = (0..n).map(|v| (v, g.degree(v))).min_by_key(|&(_, d)| d).unwrap();
        let holds = degree >= 3;
        report.verdict = report.verdict.and(Verdict::from_bool(holds));
        report.evidence.push(Evidence::MinDegree { vertex, degree, required: 3 });
    } else {
        skipped(&mut report, "min-degree", "order below 4");
    }

    let (kappa, cut) = connectivity_with_cut(g)?;
    report.verdict = report.verdict.and(Verdict::from_bool(kappa >= 2));
    report.evidence.push(Evidence::Connectivity { kappa, required: 2 });
    if kappa < 2 {
        if let Some(cut) = cut {
            report.evidence.push(Evidence::VertexCut { vertices: cut });
        }
        if kappa == 0 {
            return Ok(report);
        }
    }

    let x = peripheral_vertex(g)?;
    let dl = distance_layers(g, x)?;
    let sizes = dl.sizes();
    let d = dl.eccentricity();
    report.evidence.push(Evidence::Layers { source: x, sizes: sizes.clone() });

    if n >= 4 && d >= 1 {
        inequality(&mut report, "(4) |V1| >= 3".into(), sizes[1], 3);
    } else {
        skipped(&mut report, "(4)", "needs n >= 4");
    }
    if d >= 2 {
        inequality(&mut report, "(5) |V(d-1)| + |V(d)| >= 4".into(), sizes[d - 1] + sizes[d], 4);
    } else {
        skipped(&mut report, "(5)", "needs diameter >= 2");
    }
    if d >= 3 {
        for i in 1..=d - 2 {
            inequality(&mut report, format!("(6) |V{i}| + |V{}| >= 5", i + 1), sizes[i] + sizes[i + 1], 5);
        }
    } else {
        skipped(&mut report, "(6)", "needs diameter >= 3");
    }
    // d <= floor(2n/5), written as 5d <= 2n
    inequality(&mut report, "diameter: 2n >= 5d".into(), 2 * n, 5 * d);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{a_graph, q_graph, wheel};

    #[test]
    fn q10_layers() {
        let r = verify_distance_layer_bounds(&q_graph(10).unwrap().graph).unwrap();
        assert!(r.holds(), "{:?}", r.evidence);
        assert!(r.evidence.contains(&Evidence::Layers { source: 0, sizes: vec![1, 3, 2, 3, 1] }));
    }

    #[test]
    fn w12_layers() {
        let r = verify_distance_layer_bounds(&wheel(12).unwrap().graph).unwrap();
        assert!(r.holds());
        assert!(r.evidence.contains(&Evidence::Layers { source: 1, sizes: vec![1, 3, 8] }));
        assert!(r.evidence.contains(&Evidence::MinDegree { vertex: 1, degree: 3, required: 3 }));
        assert!(r.evidence.contains(&Evidence::Connectivity { kappa: 3, required: 2 }));
    }

    #[test]
    fn q25_all_inequalities() {
        let r = verify_distance_layer_bounds(&q_graph(25).unwrap().graph).unwrap();
        assert!(r.holds());
        let six = r
            .evidence
            .iter()
            .filter(|e| matches!(e, Evidence::Inequality { name, .. } if name.starts_with("(6)")))
            .count();
        assert_eq!(six, 10 - 2);
    }

    #[test]
    fn degree_two_graph_fails() {
        let r = verify_distance_layer_bounds(&a_graph(12).unwrap().graph).unwrap();
        assert_eq!(r.verdict, Verdict::False);
    }
}
