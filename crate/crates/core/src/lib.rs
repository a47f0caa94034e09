//! Combinatorial polytopes given by vertex–facet incidences, with the
//! operations, bounds, witnesses and census used to study polytopes with
//! few vertices and few facets.

pub mod bounds;
pub mod canon;
pub mod census;
pub mod error;
pub mod json;
pub mod lattice;
pub mod ops;
pub mod polytope;
pub mod vertex_set;
pub mod witness;

pub use bounds::{
    crude_k_bound, crude_k_log2, d_bracket, lower_f, marcus_limit, upper_F, BoundsBracket,
};
pub use canon::{canonical_form, canonical_key, CanonicalKey};
pub use census::{
    census, compute_D2, count_types, marcus_scan, Census, CensusCache, CensusRecord, Source,
};
pub use error::{Error, Result};
pub use json::{from_json, to_json, PolytopeDoc};
pub use lattice::{face_lattice, face_lattice_with_limit, FaceLattice};
pub use ops::{
    apex, edges, free_sum, is_pyramid, is_unneighborly, join, polar, product, pyramid,
    pyramid_tower, strip_core, vertex_figure, StripResult,
};
pub use polytope::{make_polytope, simplex, IncidencePolytope};
pub use vertex_set::VertexSet;
pub use witness::{verify_witness, witness, WitnessReport};
