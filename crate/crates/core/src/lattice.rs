//! Brute-force face lattice, used as a small-instance oracle.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::polytope::IncidencePolytope;
use crate::vertex_set::VertexSet;

pub const DEFAULT_ORACLE_LIMIT: usize = 16;

/// Faces ordered by rank, then by vertex set. Rank 0 is the empty face and
/// the whole vertex set has rank `dim + 1`.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    faces: Vec<VertexSet>,
    ranks: Vec<usize>,
}

impl FaceLattice {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn rank(&self) -> usize {
        *self.ranks.last().unwrap()
    }

    pub fn faces(&self) -> impl Iterator<Item = (&VertexSet, usize)> {
        self.faces.iter().zip(self.ranks.iter().copied())
    }

    pub fn faces_of_rank(&self, r: usize) -> Vec<&VertexSet> {
        self.faces()
            .filter(|&(_, k)| k == r)
            .map(|(f, _)| f)
            .collect()
    }

    /// Number of faces of each rank, bottom to top.
    pub fn rank_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.rank() + 1];
        for &r in &self.ranks {
            counts[r] += 1;
        }
        counts
    }

    /// Rank-2 faces as vertex pairs.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .faces_of_rank(2)
            .into_iter()
            .filter_map(|f| match f.to_vec()[..] {
                [a, b] => Some((a, b)),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }
}

pub fn face_lattice(p: &IncidencePolytope) -> Result<FaceLattice> {
    face_lattice_with_limit(p, DEFAULT_ORACLE_LIMIT)
}

/// Closes the facets under intersection, adds the empty face and the whole
/// vertex set, and checks that the containment order is graded with top
/// rank `dim + 1` and the singletons as atoms.
pub fn face_lattice_with_limit(p: &IncidencePolytope, limit: usize) -> Result<FaceLattice> {
    let n = p.num_vertices();
    if n > limit {
        return Err(Error::OracleLimitExceeded {
            limit,
            num_vertices: n,
        });
    }
    let mut all: BTreeSet<VertexSet> = BTreeSet::new();
    all.insert(VertexSet::new());
    all.insert(p.vertex_set());
    let mut frontier: Vec<VertexSet> = p.facets().to_vec();
    for f in &frontier {
        all.insert(f.clone());
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for a in &frontier {
            for f in p.facets() {
                let c = a.intersection(f);
                if all.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }

    // Sorting by size puts every face after all of its proper subfaces.
    let mut faces: Vec<VertexSet> = all.into_iter().collect();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let k = faces.len();
    let mut rank_of: HashMap<&VertexSet, usize> = HashMap::with_capacity(k);
    let mut ranks = vec![0usize; k];
    rank_of.insert(&faces[0], 0);
    for i in 1..k {
        let face = &faces[i];
        // In an intersection-closed family the lower covers of a face are
        // the maximal sets among its intersections with facets.
        let meets: Vec<VertexSet> = p
            .facets()
            .iter()
            .filter(|g| !face.is_subset(g))
            .map(|g| face.intersection(g))
            .collect();
        let meets = if meets.is_empty() {
            vec![VertexSet::new()]
        } else {
            meets
        };
        let mut cover_ranks = meets
            .iter()
            .filter(|a| !meets.iter().any(|b| a.len() < b.len() && a.is_subset(b)))
            .map(|a| rank_of[a]);
        let r = cover_ranks.next().expect("some lower cover");
        if cover_ranks.any(|q| q != r) {
            return Err(Error::LatticeNotGraded(format!(
                "face {face:?} covers faces of different ranks"
            )));
        }
        ranks[i] = r + 1;
        rank_of.insert(face, r + 1);
    }
    let top = ranks[k - 1];
    if top != p.dim() + 1 {
        return Err(Error::LatticeNotGraded(format!(
            "top has rank {top}, expected dim + 1 = {}",
            p.dim() + 1
        )));
    }
    let atoms: Vec<&VertexSet> = (0..k)
        .filter(|&i| ranks[i] == 1)
        .map(|i| &faces[i])
        .collect();
    if atoms.len() != n || atoms.iter().any(|a| a.len() != 1) {
        return Err(Error::LatticeNotGraded(
            "atoms are not exactly the singletons".into(),
        ));
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| (ranks[i], faces[i].to_vec()));
    Ok(FaceLattice {
        faces: order.iter().map(|&i| faces[i].clone()).collect(),
        ranks: order.iter().map(|&i| ranks[i]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::{make_polytope, simplex};

    #[test]
    fn triangle_is_boolean() {
        let l = face_lattice(&simplex(2)).unwrap();
        assert_eq!(l.rank_counts(), vec![1, 3, 3, 1]);
        assert_eq!(l.rank(), 3);
    }

    #[test]
    fn square_and_prism() {
        let sq = make_polytope(2, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], 4).unwrap();
        assert_eq!(face_lattice(&sq).unwrap().rank_counts(), vec![1, 4, 4, 1]);
        let prism = make_polytope(
            3,
            &[
                vec![0, 1, 2],
                vec![3, 4, 5],
                vec![0, 1, 3, 4],
                vec![1, 2, 4, 5],
                vec![0, 2, 3, 5],
            ],
            6,
        )
        .unwrap();
        let l = face_lattice(&prism).unwrap();
        assert_eq!(l.rank_counts(), vec![1, 6, 9, 5, 1]);
        assert_eq!(l.len(), 22);
        assert_eq!(l.edges().len(), 9);
    }

    #[test]
    fn point_lattice() {
        let l = face_lattice(&simplex(0)).unwrap();
        assert_eq!(l.rank_counts(), vec![1, 1]);
    }

    #[test]
    fn wrong_dimension_is_rejected() {
        // prism incidences declared as a 2-polytope pass the cheap checks
        let bogus = make_polytope(
            2,
            &[
                vec![0, 1, 2],
                vec![3, 4, 5],
                vec![0, 1, 3, 4],
                vec![1, 2, 4, 5],
                vec![0, 2, 3, 5],
            ],
            6,
        )
        .unwrap();
        assert!(matches!(
            face_lattice(&bogus),
            Err(Error::LatticeNotGraded(_))
        ));
    }

    #[test]
    fn limit() {
        assert!(matches!(
            face_lattice_with_limit(&simplex(5), 4),
            Err(Error::OracleLimitExceeded { .. })
        ));
    }
}
