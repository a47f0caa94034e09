//! Polytope constructions and predicates acting on incidence data.

use crate::error::{Error, Result};
use crate::polytope::IncidencePolytope;
use crate::vertex_set::VertexSet;

/// Transposed incidences: vertex `i` of the result is facet `i` of `p`, and
/// facet `v` of the result is the set of facets of `p` containing vertex `v`.
pub fn polar(p: &IncidencePolytope) -> Result<IncidencePolytope> {
    if p.is_point() {
        return Err(Error::UndefinedForPoint);
    }
    Ok(IncidencePolytope::from_parts(
        p.dim(),
        p.vertex_facets(),
        p.num_facets(),
    ))
}

/// The point's single "facet" in a join is its empty face.
fn join_facets(p: &IncidencePolytope) -> Vec<VertexSet> {
    if p.is_point() {
        vec![VertexSet::new()]
    } else {
        p.facets().to_vec()
    }
}

/// Join `p * q`. Vertices of `q` follow those of `p`.
pub fn join(p: &IncidencePolytope, q: &IncidencePolytope) -> IncidencePolytope {
    let np = p.num_vertices();
    let vp = p.vertex_set();
    let vq = q.vertex_set().shifted(np);
    let facets = join_facets(p)
        .iter()
        .map(|f| f.union(&vq))
        .chain(join_facets(q).iter().map(|g| vp.union(&g.shifted(np))))
        .collect();
    IncidencePolytope::from_parts(p.dim() + q.dim() + 1, facets, np + q.num_vertices())
}

/// Pyramid over `p`; the apex is vertex 0.
pub fn pyramid(p: &IncidencePolytope) -> IncidencePolytope {
    join(&IncidencePolytope::point(), p)
}

/// `count`-fold iterated pyramid.
pub fn pyramid_tower(p: &IncidencePolytope, count: usize) -> IncidencePolytope {
    (0..count).fold(p.clone(), |acc, _| pyramid(&acc))
}

/// Cartesian product. Vertex `(i, j)` gets index `i * |V(q)| + j`.
pub fn product(p: &IncidencePolytope, q: &IncidencePolytope) -> IncidencePolytope {
    let (np, nq) = (p.num_vertices(), q.num_vertices());
    let mut facets = Vec::with_capacity(p.num_facets() + q.num_facets());
    for f in p.facets() {
        facets.push(
            f.iter()
                .flat_map(|i| (0..nq).map(move |j| i * nq + j))
                .collect(),
        );
    }
    for g in q.facets() {
        facets.push(
            (0..np)
                .flat_map(|i| g.iter().map(move |j| i * nq + j))
                .collect(),
        );
    }
    IncidencePolytope::from_parts(p.dim() + q.dim(), facets, np * nq)
}

/// Free sum, computed as the polar of the product of polars. Vertices of
/// `q` follow those of `p`.
pub fn free_sum(p: &IncidencePolytope, q: &IncidencePolytope) -> Result<IncidencePolytope> {
    polar(&product(&polar(p)?, &polar(q)?))
}

/// Graph of `p` by the combinatorial edge rule: `{u, w}` is an edge iff no
/// third vertex lies on every facet containing both.
pub fn edges(p: &IncidencePolytope) -> Result<Vec<(usize, usize)>> {
    if p.is_point() {
        return Err(Error::UndefinedForPoint);
    }
    let cols = p.vertex_facets();
    Ok(edges_from_columns(&cols))
}

pub(crate) fn edges_from_columns(cols: &[VertexSet]) -> Vec<(usize, usize)> {
    let n = cols.len();
    let mut out = Vec::new();
    for u in 0..n {
        for w in u + 1..n {
            let common = cols[u].intersection(&cols[w]);
            let blocked = (0..n).any(|x| x != u && x != w && common.is_subset(&cols[x]));
            if !blocked {
                out.push((u, w));
            }
        }
    }
    out
}

/// Vertex figure `p / v`: its vertices are the edges of `p` at `v` (in
/// order of the other endpoint) and its facets are the facets of `p`
/// containing `v`.
pub fn vertex_figure(p: &IncidencePolytope, v: usize) -> Result<IncidencePolytope> {
    if p.is_point() {
        return Err(Error::UndefinedForPoint);
    }
    if v >= p.num_vertices() {
        return Err(Error::IndexOutOfRange {
            index: v,
            num_vertices: p.num_vertices(),
        });
    }
    if p.dim() == 1 {
        return Ok(IncidencePolytope::point());
    }
    let neighbors: Vec<usize> = edges(p)?
        .into_iter()
        .filter_map(|(a, b)| match (a == v, b == v) {
            (true, _) => Some(b),
            (_, true) => Some(a),
            _ => None,
        })
        .collect();
    let mut index = vec![usize::MAX; p.num_vertices()];
    for (i, &w) in neighbors.iter().enumerate() {
        index[w] = i;
    }
    let facets = p
        .facets()
        .iter()
        .filter(|f| f.contains(v))
        .map(|f| {
            f.iter()
                .filter(|&w| index[w] != usize::MAX)
                .map(|w| index[w])
                .collect()
        })
        .collect();
    IncidencePolytope::new(p.dim() - 1, facets, neighbors.len())
}

/// Smallest vertex lying on all facets but one, if any.
pub fn apex(p: &IncidencePolytope) -> Option<usize> {
    if p.is_point() {
        return None;
    }
    let m = p.num_facets();
    p.vertex_facets().iter().position(|c| c.len() + 1 == m)
}

pub fn is_pyramid(p: &IncidencePolytope) -> bool {
    apex(p).is_some()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripResult {
    pub apex_count: usize,
    pub core: IncidencePolytope,
}

/// Removes apexes one at a time (smallest index first) until none is left
/// or the point is reached. `p` is the `apex_count`-fold pyramid over
/// `core`.
pub fn strip_core(p: &IncidencePolytope) -> StripResult {
    let mut core = p.clone();
    let mut apex_count = 0;
    while let Some(top) = apex(&core) {
        let base_index = core
            .facets()
            .iter()
            .position(|f| !f.contains(top))
            .expect("apex misses exactly one facet");
        let base = core.facets()[base_index].clone();
        apex_count += 1;
        if core.dim() == 1 {
            core = IncidencePolytope::point();
            break;
        }
        let mut index = vec![usize::MAX; core.num_vertices()];
        for (i, w) in base.iter().enumerate() {
            index[w] = i;
        }
        let facets = core
            .facets()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != base_index)
            .map(|(_, f)| f.intersection(&base).map(|w| index[w]))
            .collect();
        core = IncidencePolytope::from_parts_unchecked(core.dim() - 1, facets, base.len());
    }
    StripResult { apex_count, core }
}

/// Every vertex has at least one non-neighbor in the graph.
pub fn is_unneighborly(p: &IncidencePolytope) -> Result<bool> {
    let n = p.num_vertices();
    let mut degree = vec![0usize; n];
    for (u, w) in edges(p)? {
        degree[u] += 1;
        degree[w] += 1;
    }
    Ok(degree.iter().all(|&d| d + 1 < n))
}
