use thiserror::Error;

use crate::graph::Edge;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} outside the supported range 1..=64")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),
    #[error("adjacency rows are not symmetric at edge {0}")]
    Asymmetric(Edge),
    #[error("graph is disconnected: vertex {unreached} is not reachable from vertex {from}")]
    Disconnected { from: usize, unreached: usize },
    #[error("operation needs order at least {needed}, got {order}")]
    TooSmall { needed: usize, order: usize },
    #[error("{0} is not an edge")]
    NotAnEdge(Edge),
}

/// graph6 decoding and encoding failures. Offsets are byte positions in the
/// input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("extended graph6 size forms are not supported (offset 0)")]
    ExtendedSize,
    #[error("graph6 order {0} is not supported (short form covers 1..=62)")]
    UnsupportedOrder(usize),
    #[error("truncated bit stream: expected {expected} data bytes, found {found} (offset {offset})")]
    Truncated { expected: usize, found: usize, offset: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("{family} is undefined for parameter {param}: {reason}")]
    BadParameter { family: &'static str, param: usize, reason: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {order} is outside the supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },
    #[error("connectivity requirement {0} is not supported (use 1, 2 or 3)")]
    BadKappa(usize),
    #[error("line {line}: {error}")]
    Graph6 { line: usize, error: Graph6Error },
    #[error("line {line}: graph has order {found}, expected {expected}")]
    OrderMismatch { line: usize, expected: usize, found: usize },
    #[error("reading graph stream: {0}")]
    Io(String),
    #[error("witness {0} failed re-verification")]
    WitnessRejected(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}
