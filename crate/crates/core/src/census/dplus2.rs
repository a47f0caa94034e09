//! Polytopes with `d + 2` vertices: iterated pyramids over free sums of
//! two simplices.

use crate::ops::{free_sum, pyramid_tower};
use crate::polytope::{simplex, IncidencePolytope};

/// `pyramids`-fold pyramid over `Δ_m ⊕ Δ_n` with `1 <= m <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DPlusTwoSpec {
    pub pyramids: usize,
    pub m: usize,
    pub n: usize,
}

impl DPlusTwoSpec {
    pub fn dim(&self) -> usize {
        self.pyramids + self.m + self.n
    }

    pub fn num_facets(&self) -> usize {
        (self.m + 1) * (self.n + 1) + self.pyramids
    }

    pub fn polytope(&self) -> IncidencePolytope {
        let sum = free_sum(&simplex(self.m), &simplex(self.n)).expect("summands have dim >= 1");
        pyramid_tower(&sum, self.pyramids)
    }
}

pub fn dplus2_specs(d: usize) -> Vec<DPlusTwoSpec> {
    let mut out = Vec::new();
    for m in 1..=d / 2 {
        for n in m..=d - m {
            out.push(DPlusTwoSpec {
                pyramids: d - m - n,
                m,
                n,
            });
        }
    }
    out
}

/// All `⌊d²/4⌋` types of `d`-polytopes with `d + 2` vertices; empty for
/// `d < 2`.
pub fn dplus2_types(d: usize) -> Vec<(DPlusTwoSpec, IncidencePolytope)> {
    dplus2_specs(d)
        .into_iter()
        .map(|s| (s, s.polytope()))
        .collect()
}
