//! Exhaustive census of combinatorial types with at most `d + 3` vertices.
//!
//! Non-pyramids are generated directly: the point (`alpha = 0`), free sums
//! of two simplices (`alpha = 1`) and reduced wheels (`alpha = 2`). Every
//! other type is a pyramid tower over exactly one of these.

pub mod cache;
pub mod dplus2;
pub mod wheel;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::d_bracket;
use crate::canon::{canonical_key, CanonicalKey};
use crate::error::{Error, Result};
use crate::ops::{free_sum, is_unneighborly, pyramid_tower, strip_core};
use crate::polytope::{simplex, IncidencePolytope};

pub use cache::{CensusCache, CACHE_ENV};
pub use dplus2::{dplus2_specs, dplus2_types, DPlusTwoSpec};
pub use wheel::{
    enumerate_wheels, enumerate_wheels_filtered, wheel_is_polytopal, wheel_to_polytope, Wheel,
    WheelFilter,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Wheel,
    Dplus2,
    Constructor,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Wheel => "wheel",
            Source::Dplus2 => "dplus2",
            Source::Constructor => "constructor",
        }
    }
}

/// One combinatorial type. Ordered by dimension, vertex and facet counts,
/// then key, which is the order every census function returns.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CensusRecord {
    pub dim: usize,
    pub num_vertices: usize,
    pub num_facets: usize,
    pub alpha: usize,
    pub beta: usize,
    pub nonpyramid: bool,
    pub source: Source,
    pub key: CanonicalKey,
}

/// Serialized shape of a record: one JSON object per line.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct RecordLine {
    key: String,
    dim: usize,
    v: usize,
    f: usize,
    alpha: usize,
    beta: usize,
    nonpyramid: bool,
    source: Source,
}

impl RecordLine {
    pub(crate) fn into_record(self) -> Result<CensusRecord> {
        let key = CanonicalKey::from_hex(&self.key)?;
        let record = CensusRecord {
            dim: self.dim,
            num_vertices: self.v,
            num_facets: self.f,
            alpha: self.alpha,
            beta: self.beta,
            nonpyramid: self.nonpyramid,
            source: self.source,
            key,
        };
        let p = record.polytope()?;
        let consistent = p.dim() == record.dim
            && p.num_vertices() == record.num_vertices
            && p.num_facets() == record.num_facets
            && p.alpha() == record.alpha
            && p.beta() == record.beta;
        if !consistent {
            return Err(Error::InvariantViolation(format!(
                "record fields disagree with key {}",
                self.key
            )));
        }
        Ok(record)
    }
}

impl CensusRecord {
    pub fn from_polytope(p: &IncidencePolytope, source: Source) -> Self {
        Self {
            dim: p.dim(),
            num_vertices: p.num_vertices(),
            num_facets: p.num_facets(),
            alpha: p.alpha(),
            beta: p.beta(),
            nonpyramid: strip_core(p).apex_count == 0,
            source,
            key: canonical_key(p),
        }
    }

    /// The canonically labelled polytope.
    pub fn polytope(&self) -> Result<IncidencePolytope> {
        self.key.to_polytope()
    }

    pub fn to_json_line(&self) -> String {
        let line = RecordLine {
            key: self.key.to_hex(),
            dim: self.dim,
            v: self.num_vertices,
            f: self.num_facets,
            alpha: self.alpha,
            beta: self.beta,
            nonpyramid: self.nonpyramid,
            source: self.source,
        };
        serde_json::to_string(&line).expect("record serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        serde_json::from_str::<RecordLine>(line)?.into_record()
    }
}

fn records_of(polytopes: Vec<IncidencePolytope>, source: Source) -> Vec<CensusRecord> {
    let mut out: Vec<_> = polytopes
        .par_iter()
        .map(|p| CensusRecord::from_polytope(p, source))
        .collect();
    out.sort();
    out.dedup_by(|a, b| a.key == b.key);
    out
}

/// Records of the non-pyramidal `(n-3)`-polytopes with `n` vertices and
/// at most `beta_cap` facets beyond `d + 1`.
pub fn wheel_records(n: usize, beta_cap: Option<usize>) -> Vec<CensusRecord> {
    let filter = WheelFilter {
        max_facets: beta_cap.map(|b| n - 2 + b),
    };
    let polytopes = enumerate_wheels_filtered(n, filter)
        .par_iter()
        .map(|w| wheel_to_polytope(w).expect("enumerated wheels are polytopal"))
        .collect();
    records_of(polytopes, Source::Wheel)
}

/// Census engine with an optional on-disk cache for the wheel stage.
#[derive(Clone, Debug, Default)]
pub struct Census {
    cache: Option<CensusCache>,
}

/// Exact counts per dimension for `d <= upper + 1`, with their maximum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KExact {
    pub alpha: usize,
    pub beta: usize,
    pub counts: Vec<(usize, usize)>,
    pub max: usize,
}

fn check_alpha(alpha: usize) -> Result<()> {
    if alpha > 2 {
        Err(Error::UnsupportedAlpha(alpha))
    } else {
        Ok(())
    }
}

impl Census {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache(cache: CensusCache) -> Self {
        Self { cache: Some(cache) }
    }

    pub fn cache(&self) -> Option<&CensusCache> {
        self.cache.as_ref()
    }

    fn wheels(&self, n: usize, beta_cap: Option<usize>) -> Result<Vec<CensusRecord>> {
        let Some(cache) = &self.cache else {
            return Ok(wheel_records(n, beta_cap));
        };
        if let Some(mut hit) = cache.load(Source::Wheel, n, beta_cap)? {
            hit.sort();
            return Ok(hit);
        }
        let fresh = wheel_records(n, beta_cap);
        cache.store(Source::Wheel, n, beta_cap, &fresh)?;
        Ok(fresh)
    }

    /// Non-pyramidal `d`-polytopes with exactly `d + 1 + alpha` vertices.
    pub fn nonpyramidal(
        &self,
        alpha: usize,
        d: usize,
        beta_cap: Option<usize>,
    ) -> Result<Vec<CensusRecord>> {
        check_alpha(alpha)?;
        let fits = |beta: usize| beta_cap.is_none_or(|b| beta <= b);
        Ok(match alpha {
            0 if d == 0 => vec![CensusRecord::from_polytope(
                &IncidencePolytope::point(),
                Source::Constructor,
            )],
            0 => Vec::new(),
            1 => {
                let sums = (1..=d / 2)
                    .filter(|&m| fits(m * (d - m)))
                    .map(|m| {
                        free_sum(&simplex(m), &simplex(d - m)).expect("summands have dim >= 1")
                    })
                    .collect();
                records_of(sums, Source::Dplus2)
            }
            _ if d < 2 => Vec::new(),
            _ => self.wheels(d + 3, beta_cap)?,
        })
    }

    /// All `d`-polytopes with exactly `d + 1 + alpha` vertices: pyramid
    /// towers over the non-pyramids of every dimension up to `d`.
    pub fn types_exact_alpha(
        &self,
        alpha: usize,
        d: usize,
        beta_cap: Option<usize>,
    ) -> Result<Vec<CensusRecord>> {
        let mut bases = Vec::new();
        for lower in 0..=d {
            bases.extend(self.nonpyramidal(alpha, lower, beta_cap)?);
        }
        let towers = bases
            .par_iter()
            .map(|r| {
                let base = r.polytope()?;
                let tower = pyramid_tower(&base, d - r.dim);
                Ok(CensusRecord::from_polytope(&tower, r.source))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut out = towers;
        out.sort();
        out.dedup_by(|a, b| a.key == b.key);
        Ok(out)
    }

    /// All `d`-polytopes with at most `d + 1 + alpha_cap` vertices and, if
    /// given, at most `d + 1 + beta_cap` facets.
    pub fn census(
        &self,
        alpha_cap: usize,
        d: usize,
        beta_cap: Option<usize>,
    ) -> Result<Vec<CensusRecord>> {
        check_alpha(alpha_cap)?;
        let mut by_key = BTreeMap::new();
        for alpha in 0..=alpha_cap {
            for r in self.types_exact_alpha(alpha, d, beta_cap)? {
                by_key.entry(r.key.clone()).or_insert(r);
            }
        }
        let mut out: Vec<_> = by_key.into_values().collect();
        out.sort();
        Ok(out)
    }

    /// Largest `d <= d_max` admitting a non-pyramid with at most `d + 3`
    /// vertices and at most `d + 1 + beta` facets. `d_max` defaults to the
    /// upper end of the bracket for `(2, beta)`.
    pub fn compute_d2(&self, beta: usize, d_max: Option<usize>) -> Result<usize> {
        let beta32 = u32::try_from(beta).map_err(|_| Error::OutOfDomain(format!("beta {beta}")))?;
        if beta < 2 {
            return Err(Error::OutOfDomain(format!(
                "compute_D2 needs beta >= 2, got {beta}"
            )));
        }
        let d_max = d_max.unwrap_or(d_bracket(2, beta32).upper as usize);
        for d in (1..=d_max).rev() {
            for alpha in 1..=2 {
                if !self.nonpyramidal(alpha, d, Some(beta))?.is_empty() {
                    return Ok(d);
                }
            }
        }
        Ok(0)
    }

    /// Largest `d <= d_max` with an unneighborly `d`-polytope on exactly
    /// `d + alpha + 1` vertices, or 0 if there is none. Pyramids are never
    /// unneighborly, so only non-pyramids are examined.
    pub fn marcus_scan(&self, alpha: usize, d_max: usize) -> Result<usize> {
        if !(1..=2).contains(&alpha) {
            return Err(Error::UnsupportedAlpha(alpha));
        }
        for d in (1..=d_max).rev() {
            for r in self.nonpyramidal(alpha, d, None)? {
                if is_unneighborly(&r.polytope()?)? {
                    return Ok(d);
                }
            }
        }
        Ok(0)
    }

    /// Unneighborly non-pyramids on exactly `d + alpha + 1` vertices.
    pub fn unneighborly(&self, alpha: usize, d: usize) -> Result<Vec<CensusRecord>> {
        let mut out = Vec::new();
        for r in self.nonpyramidal(alpha, d, None)? {
            if is_unneighborly(&r.polytope()?)? {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Number of `d`-polytopes with at most `d + 1 + alpha_cap` vertices and
    /// at most `d + 1 + beta_cap` facets. When only `beta_cap` is small the
    /// count is taken over polars.
    pub fn count_types(&self, d: usize, alpha_cap: usize, beta_cap: usize) -> Result<usize> {
        if alpha_cap <= 2 {
            Ok(self.census(alpha_cap, d, Some(beta_cap))?.len())
        } else if beta_cap <= 2 {
            Ok(self.census(beta_cap, d, Some(alpha_cap))?.len())
        } else {
            Err(Error::UnsupportedAlpha(alpha_cap.min(beta_cap)))
        }
    }

    /// Per-dimension counts for `1 <= d <= upper + 1` and their maximum.
    /// This is the exact constant only for the dimensions scanned.
    pub fn k_exact(&self, alpha: usize, beta: usize) -> Result<KExact> {
        let a = u32::try_from(alpha).map_err(|_| Error::OutOfDomain(format!("alpha {alpha}")))?;
        let b = u32::try_from(beta).map_err(|_| Error::OutOfDomain(format!("beta {beta}")))?;
        let upper = d_bracket(a, b).upper as usize;
        let mut counts = Vec::new();
        for d in 1..=upper + 1 {
            counts.push((d, self.count_types(d, alpha, beta)?));
        }
        let max = counts.iter().map(|c| c.1).max().unwrap_or(0);
        Ok(KExact {
            alpha,
            beta,
            counts,
            max,
        })
    }
}

pub fn census(alpha_cap: usize, d: usize, beta_cap: Option<usize>) -> Result<Vec<CensusRecord>> {
    Census::new().census(alpha_cap, d, beta_cap)
}

#[allow(non_snake_case)]
pub fn compute_D2(beta: usize, d_max: Option<usize>) -> Result<usize> {
    Census::new().compute_d2(beta, d_max)
}

pub fn marcus_scan(alpha: usize, d_max: usize) -> Result<usize> {
    Census::new().marcus_scan(alpha, d_max)
}

pub fn count_types(d: usize, alpha_cap: usize, beta_cap: usize) -> Result<usize> {
    Census::new().count_types(d, alpha_cap, beta_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::pyramid;
    use crate::polytope::make_polytope;

    fn square() -> IncidencePolytope {
        make_polytope(2, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], 4).unwrap()
    }

    #[test]
    fn census_examples() {
        let three = census(1, 3, Some(1)).unwrap();
        let keys: Vec<_> = three.iter().map(|r| r.key.clone()).collect();
        assert_eq!(three.len(), 2);
        assert!(keys.contains(&canonical_key(&simplex(3))));
        assert!(keys.contains(&canonical_key(&pyramid(&square()))));

        assert_eq!(census(2, 2, Some(2)).unwrap().len(), 3);
        for d in 1..6 {
            assert_eq!(census(0, d, None).unwrap().len(), 1);
            assert_eq!(census(0, d, Some(0)).unwrap().len(), 1);
        }
        assert_eq!(census(3, 3, None), Err(Error::UnsupportedAlpha(3)));
    }

    #[test]
    fn counts() {
        assert_eq!(count_types(3, 1, 1), Ok(2));
        assert_eq!(count_types(2, 2, 2), Ok(3));
        for d in 1..5 {
            for b in 0..4 {
                assert_eq!(count_types(d, 0, b), Ok(1));
            }
        }
        assert_eq!(count_types(4, 3, 3), Err(Error::UnsupportedAlpha(3)));
    }

    #[test]
    fn counts_are_symmetric_under_polarity() {
        for d in 2..6 {
            for a in 0..=2 {
                for b in 0..=2 {
                    assert_eq!(count_types(d, a, b), count_types(d, b, a));
                }
            }
            let direct = census(1, d, Some(4)).unwrap().len();
            assert_eq!(count_types(d, 4, 1), Ok(direct));
        }
    }

    #[test]
    fn record_json_round_trip() {
        for r in census(2, 4, None).unwrap() {
            let line = r.to_json_line();
            assert!(line.starts_with("{\"key\":\""));
            assert_eq!(CensusRecord::from_json_line(&line).unwrap(), r);
        }
    }

    #[test]
    fn inconsistent_line_is_rejected() {
        let r = CensusRecord::from_polytope(&square(), Source::Constructor);
        let bad = r.to_json_line().replace("\"f\":4", "\"f\":5");
        assert!(matches!(
            CensusRecord::from_json_line(&bad),
            Err(Error::InvariantViolation(_))
        ));
    }

    #[test]
    fn small_marcus_and_d2() {
        assert_eq!(marcus_scan(1, 6), Ok(2));
        assert_eq!(marcus_scan(2, 4), Ok(4));
        assert_eq!(marcus_scan(3, 4), Err(Error::UnsupportedAlpha(3)));
        assert_eq!(compute_D2(2, None), Ok(5));
        assert_eq!(compute_D2(3, None), Ok(6));
    }
}
