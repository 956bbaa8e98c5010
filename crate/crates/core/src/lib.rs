//! Edge-pancyclic graphs of small order.
//!
//! * [`graph`], [`graph6`], [`dot`], [`distance`], [`connectivity`]: the
//!   bit-row graph type and its exact primitives.
//! * [`canon`]: canonical labelling and isomorphism testing.
//! * [`families`]: the constructions (wheels, fans, `A_n`, `F_n`, `G_n`,
//!   `H_n`, the bridged fans `H(k)`, the ring `G(k)`, sequential joins `Q_n`).
//! * [`checks`]: triangle cover, cycle spectra, pancyclicity, path-length
//!   sets and distance-layer inequalities, each with witnesses.
//! * [`search`]: isomorph-free generation by canonical edge augmentation and
//!   the minimum-size / maximum-diameter searches built on it.

pub mod canon;
pub mod checks;
pub mod connectivity;
pub mod distance;
pub mod dot;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod search;

pub use canon::{are_isomorphic, canonical_code, canonical_form, CanonicalCode};
pub use connectivity::{is_k_connected, vertex_connectivity};
pub use distance::{diameter, distance_layers, DistanceLayers};
pub use dot::emit_dot;
pub use error::{FamilyError, Graph6Error, GraphError, SearchError};
pub use graph::{Edge, Graph, MAX_ORDER};
pub use graph6::{emit_graph6, parse_graph6};
