//! Non-pyramidal polytopes attaining the lower bound `lower_f(alpha, beta)`.

use crate::bounds::lower_f;
use crate::error::{Error, Result};
use crate::ops::{free_sum, join, product, strip_core};
use crate::polytope::{simplex, IncidencePolytope};

fn square() -> IncidencePolytope {
    product(&simplex(1), &simplex(1))
}

fn joined_squares(copies: usize, tail: IncidencePolytope) -> IncidencePolytope {
    (0..copies).fold(tail, |acc, _| join(&square(), &acc))
}

/// Witness for `(alpha, beta)`, both at least 1:
///
/// | case              | polytope                                              |
/// |-------------------|-------------------------------------------------------|
/// | `alpha >= beta = 1` | `Δ_alpha × Δ_1`                                     |
/// | `beta > alpha = 1`  | `Δ_beta ⊕ Δ_1`                                      |
/// | `alpha >= beta > 1` | `(beta-1)` squares joined with `Δ_{alpha-beta+1} × Δ_1` |
/// | `beta > alpha > 1`  | `(alpha-1)` squares joined with `Δ_{beta-alpha+1} ⊕ Δ_1` |
///
/// When `alpha == beta` the `alpha >= beta` rows are used.
pub fn witness(alpha: u32, beta: u32) -> Result<IncidencePolytope> {
    if alpha == 0 || beta == 0 {
        return Err(Error::OutOfDomain(format!(
            "witness needs alpha, beta >= 1, got ({alpha}, {beta})"
        )));
    }
    let (a, b) = (alpha as usize, beta as usize);
    let segment = simplex(1);
    Ok(if b == 1 {
        product(&simplex(a), &segment)
    } else if a == 1 {
        free_sum(&simplex(b), &segment)?
    } else if a >= b {
        joined_squares(b - 1, product(&simplex(a - b + 1), &segment))
    } else {
        joined_squares(a - 1, free_sum(&simplex(b - a + 1), &segment)?)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub alpha: u32,
    pub beta: u32,
    pub witness: IncidencePolytope,
    pub dim: usize,
    pub num_vertices: usize,
    pub num_facets: usize,
    pub is_pyramid: bool,
    pub matches: bool,
}

pub fn verify_witness(alpha: u32, beta: u32) -> Result<WitnessReport> {
    let w = witness(alpha, beta)?;
    let (dim, num_vertices, num_facets) = (w.dim(), w.num_vertices(), w.num_facets());
    let pyramid = strip_core(&w).apex_count > 0;
    let matches = num_vertices == dim + 1 + alpha as usize
        && num_facets == dim + 1 + beta as usize
        && !pyramid
        && dim as u64 == lower_f(alpha, beta);
    Ok(WitnessReport {
        alpha,
        beta,
        witness: w,
        dim,
        num_vertices,
        num_facets,
        is_pyramid: pyramid,
        matches,
    })
}
