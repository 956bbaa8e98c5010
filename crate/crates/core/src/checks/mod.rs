//! Exact decision procedures with witnesses.

mod cycles;
mod hblock;
mod layers;
pub mod paths;
mod report;

pub use cycles::{
    cycle_spectrum, edge_cycle_lengths, hamilton_cycle, has_triangle_cover, is_edge_pancyclic,
    is_pancyclic, is_vertex_pancyclic, path_length_set, triangle_covered, CheckOptions,
    CycleSpectrum, EdgeSpectrum, LengthSet,
};
pub use hblock::verify_h_block_properties;
pub use layers::verify_distance_layer_bounds;
pub use report::{CheckReport, Evidence, Stats, Verdict};
