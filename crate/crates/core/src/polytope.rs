//! Combinatorial polytopes given by their vertex–facet incidences.

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A combinatorial polytope: a dimension, vertices `0..num_vertices`, and
/// the vertex set of every facet.
///
/// The 0-dimensional point has a single vertex and no listed facets.
/// Facet order carries no meaning but is preserved exactly, so that
/// `polar(polar(p)) == p` holds on the representation itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncidencePolytope {
    dim: usize,
    num_vertices: usize,
    facets: Vec<VertexSet>,
}

/// Checks dimensions, index ranges and the combinatorial invariants, then
/// builds the polytope.
///
/// Only necessary conditions are checked; realizability is not.
pub fn make_polytope(
    dim: usize,
    facets: &[Vec<usize>],
    num_vertices: usize,
) -> Result<IncidencePolytope> {
    let mut sets = Vec::with_capacity(facets.len());
    for facet in facets {
        let mut set = VertexSet::new();
        for &v in facet {
            if v >= num_vertices {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    num_vertices,
                });
            }
            set.insert(v);
        }
        sets.push(set);
    }
    IncidencePolytope::new(dim, sets, num_vertices)
}

impl IncidencePolytope {
    pub fn new(dim: usize, facets: Vec<VertexSet>, num_vertices: usize) -> Result<Self> {
        for f in &facets {
            if f.bound() > num_vertices {
                return Err(Error::IndexOutOfRange {
                    index: f.bound() - 1,
                    num_vertices,
                });
            }
        }
        let p = Self {
            dim,
            num_vertices,
            facets,
        };
        p.validate()?;
        Ok(p)
    }

    /// Used by constructions that preserve polytopality. Validated in debug
    /// builds.
    pub(crate) fn from_parts(dim: usize, facets: Vec<VertexSet>, num_vertices: usize) -> Self {
        let p = Self {
            dim,
            num_vertices,
            facets,
        };
        debug_assert_eq!(p.validate(), Ok(()), "construction broke an invariant");
        p
    }

    /// No validation at all; for reductions whose input may be a
    /// user-asserted incidence structure rather than a polytope.
    pub(crate) fn from_parts_unchecked(
        dim: usize,
        facets: Vec<VertexSet>,
        num_vertices: usize,
    ) -> Self {
        Self {
            dim,
            num_vertices,
            facets,
        }
    }

    pub fn point() -> Self {
        Self {
            dim: 0,
            num_vertices: 1,
            facets: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_facets(&self) -> usize {
        self.facets.len()
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn is_point(&self) -> bool {
        self.dim == 0
    }

    /// Vertex excess `num_vertices - dim - 1`.
    pub fn alpha(&self) -> usize {
        self.num_vertices - self.dim - 1
    }

    /// Facet excess `num_facets - dim - 1`. Zero for the point.
    pub fn beta(&self) -> usize {
        self.facets.len().saturating_sub(self.dim + 1)
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.num_vertices)
    }

    /// For each vertex, the indices of the facets containing it.
    pub fn vertex_facets(&self) -> Vec<VertexSet> {
        let mut cols = vec![VertexSet::new(); self.num_vertices];
        for (i, f) in self.facets.iter().enumerate() {
            for v in f {
                cols[v].insert(i);
            }
        }
        cols
    }

    /// Facets as sorted index lists, themselves sorted.
    pub fn sorted_facet_lists(&self) -> Vec<Vec<usize>> {
        let mut lists: Vec<Vec<usize>> = self.facets.iter().map(VertexSet::to_vec).collect();
        lists.sort();
        lists
    }

    /// Checks every structural invariant, naming the first violated clause.
    pub fn validate(&self) -> Result<()> {
        let violation = |clause: &str| Err(Error::InvariantViolation(clause.to_string()));
        let n = self.num_vertices;
        let d = self.dim;
        if n == 0 {
            return violation("no vertices");
        }
        if d == 0 {
            if n != 1 || !self.facets.is_empty() {
                return violation("point convention (dim 0 needs one vertex and no facets)");
            }
            return Ok(());
        }
        if n < d + 1 {
            return violation("fewer than dim+1 vertices");
        }
        if self.facets.len() < d + 1 {
            return violation("fewer than dim+1 facets");
        }
        for f in &self.facets {
            if f.bound() > n {
                return violation("facet index out of range");
            }
            if f.is_empty() {
                return violation("empty facet");
            }
            if f.len() == n {
                return violation("facet equals the whole vertex set");
            }
        }
        for (i, a) in self.facets.iter().enumerate() {
            for b in &self.facets[i + 1..] {
                if a == b {
                    return violation("duplicate facet");
                }
                if a.is_subset(b) || b.is_subset(a) {
                    return violation("facet containment");
                }
            }
        }
        if self.facets.iter().any(|f| f.len() < d) {
            return violation("facet with fewer than dim vertices");
        }
        let cols = self.vertex_facets();
        if cols.iter().any(|c| c.len() < d) {
            return violation("vertex on fewer than dim facets");
        }
        let common = self
            .facets
            .iter()
            .skip(1)
            .fold(self.facets[0].clone(), |acc, f| acc.intersection(f));
        if !common.is_empty() {
            return violation("nonempty intersection of all facets");
        }
        Ok(())
    }
}

/// The `d`-simplex: `d+1` vertices and every `d`-subset as a facet.
pub fn simplex(d: usize) -> IncidencePolytope {
    if d == 0 {
        return IncidencePolytope::point();
    }
    let all = VertexSet::full(d + 1);
    let facets = (0..=d)
        .map(|skip| {
            let mut f = all.clone();
            f.remove(skip);
            f
        })
        .collect();
    IncidencePolytope::from_parts(d, facets, d + 1)
}
