//! `polyfew/1` polytope documents.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polytope::{make_polytope, IncidencePolytope};

pub const SCHEMA: &str = "polyfew/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeDoc {
    pub schema: String,
    pub dim: usize,
    pub num_vertices: usize,
    pub facets: Vec<Vec<usize>>,
}

impl PolytopeDoc {
    /// Sorted form: each facet ascending, facets in lexicographic order.
    pub fn from_polytope(p: &IncidencePolytope) -> Self {
        Self {
            schema: SCHEMA.to_string(),
            dim: p.dim(),
            num_vertices: p.num_vertices(),
            facets: p.sorted_facet_lists(),
        }
    }

    pub fn to_polytope(&self) -> Result<IncidencePolytope> {
        if self.schema != SCHEMA {
            return Err(Error::Json(format!(
                "unsupported schema {:?}, expected {SCHEMA:?}",
                self.schema
            )));
        }
        make_polytope(self.dim, &self.facets, self.num_vertices)
    }
}

pub fn to_json(p: &IncidencePolytope) -> String {
    serde_json::to_string(&PolytopeDoc::from_polytope(p)).expect("plain data serializes")
}

pub fn from_json(s: &str) -> Result<IncidencePolytope> {
    let doc: PolytopeDoc = serde_json::from_str(s)?;
    doc.to_polytope()
}
