use serde::{Serialize, Serializer};

use crate::graph::Edge;

/// Three-valued verdict; `Unknown` only arises when a probe budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn is_true(self) -> bool {
        self == Verdict::True
    }

    /// Conjunction: any false wins, then any unknown.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::Unknown, _) | (_, Verdict::Unknown) => Verdict::Unknown,
            _ => Verdict::True,
        }
    }
}

/// Serialised as JSON `true`, `false` or `null`.
impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::True => s.serialize_bool(true),
            Verdict::False => s.serialize_bool(false),
            Verdict::Unknown => s.serialize_none(),
        }
    }
}

/// Machine-checkable evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// A cycle, listed once with the closing edge implied.
    Cycle {
        #[serde(skip_serializing_if = "Option::is_none")]
        edge: Option<Edge>,
        length: usize,
        vertices: Vec<usize>,
    },
    Path {
        from: usize,
        to: usize,
        length: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        through: Option<Edge>,
        vertices: Vec<usize>,
    },
    UncoveredEdges { edges: Vec<Edge> },
    /// No cycle of `length` through the named edge or vertex (or at all).
    MissingCycle {
        #[serde(skip_serializing_if = "Option::is_none")]
        edge: Option<Edge>,
        #[serde(skip_serializing_if = "Option::is_none")]
        vertex: Option<usize>,
        length: usize,
    },
    MissingPath {
        from: usize,
        to: usize,
        length: usize,
        #[serde(skip_serializing_if = "Option::is_none")]
        through: Option<Edge>,
    },
    /// A probe that ran out of budget.
    Undecided {
        #[serde(skip_serializing_if = "Option::is_none")]
        edge: Option<Edge>,
        length: usize,
    },
    VertexCut { vertices: Vec<usize> },
    Connectivity { kappa: usize, required: usize },
    MinDegree { vertex: usize, degree: usize, required: usize },
    Layers { source: usize, sizes: Vec<usize> },
    Inequality { name: String, lhs: usize, rhs: usize, holds: bool },
    Skipped { name: String, reason: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    /// Search-tree nodes expanded by path probes.
    pub nodes: u64,
    pub probes: u64,
    pub elapsed_ms: u64,
}

/// Result of one predicate, possibly composed of named sub-checks.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub predicate: String,
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<CheckReport>,
    pub stats: Stats,
}

impl CheckReport {
    pub fn new(predicate: impl Into<String>, verdict: Verdict) -> Self {
        CheckReport {
            predicate: predicate.into(),
            verdict,
            evidence: Vec::new(),
            parts: Vec::new(),
            stats: Stats::default(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.is_true()
    }

    /// Looks up a sub-check by predicate name.
    pub fn part(&self, name: &str) -> Option<&CheckReport> {
        self.parts.iter().find(|p| p.predicate == name)
    }
}
