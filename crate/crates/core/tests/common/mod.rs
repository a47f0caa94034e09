#![allow(dead_code)]

use polyfew_core::{free_sum, join, product, simplex, IncidencePolytope, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Vertex `v` becomes `vperm[v]`; facet `i` moves to position `fperm[i]`.
pub fn relabel(p: &IncidencePolytope, vperm: &[usize], fperm: &[usize]) -> IncidencePolytope {
    let mut facets = vec![VertexSet::new(); p.num_facets()];
    for (i, f) in p.facets().iter().enumerate() {
        facets[fperm[i]] = f.map(|v| vperm[v]);
    }
    IncidencePolytope::new(p.dim(), facets, p.num_vertices()).unwrap()
}

pub fn shuffle(p: &IncidencePolytope, rng: &mut impl Rng) -> IncidencePolytope {
    let mut vperm: Vec<usize> = (0..p.num_vertices()).collect();
    let mut fperm: Vec<usize> = (0..p.num_facets()).collect();
    vperm.shuffle(rng);
    fperm.shuffle(rng);
    relabel(p, &vperm, &fperm)
}

/// Tries every vertex bijection. Only for small vertex counts.
pub fn brute_isomorphic(p: &IncidencePolytope, q: &IncidencePolytope) -> bool {
    if (p.dim(), p.num_vertices(), p.num_facets()) != (q.dim(), q.num_vertices(), q.num_facets()) {
        return false;
    }
    let mut target = q.facets().to_vec();
    target.sort();
    let n = p.num_vertices();
    let mut perm: Vec<usize> = (0..n).collect();
    fn search(
        k: usize,
        perm: &mut Vec<usize>,
        p: &IncidencePolytope,
        target: &[VertexSet],
    ) -> bool {
        if k == perm.len() {
            let mut image: Vec<_> = p.facets().iter().map(|f| f.map(|v| perm[v])).collect();
            image.sort();
            return image == target;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            if search(k + 1, perm, p, target) {
                return true;
            }
            perm.swap(k, i);
        }
        false
    }
    search(0, &mut perm, p, &target)
}

const MAX_ELEMENTS: usize = 40;

/// Random composition of joins, products and free sums over simplices
/// with total dimension at most `max_dim`.
pub fn random_polytope(rng: &mut impl Rng, max_dim: usize) -> IncidencePolytope {
    let max_dim = max_dim.max(1);
    if max_dim < 2 || rng.gen_bool(0.3) {
        return simplex(rng.gen_range(1..=max_dim.min(4)));
    }
    let left = rng.gen_range(1..max_dim);
    let a = random_polytope(rng, left);
    let b = random_polytope(rng, max_dim - a.dim());
    let too_big =
        |p: &IncidencePolytope| p.num_vertices() > MAX_ELEMENTS || p.num_facets() > MAX_ELEMENTS;
    let joined = || join(&a, &b);
    let out = match rng.gen_range(0..3) {
        0 if a.dim() + b.dim() < max_dim => joined(),
        1 => product(&a, &b),
        _ => free_sum(&a, &b).unwrap(),
    };
    if too_big(&out) || out.dim() > max_dim {
        if a.dim() + b.dim() < max_dim {
            let j = joined();
            if !too_big(&j) {
                return j;
            }
        }
        return a;
    }
    out
}

pub fn corpus(seed: u64, size: usize, max_dim: usize) -> Vec<IncidencePolytope> {
    let mut r = rng(seed);
    (0..size)
        .map(|_| random_polytope(&mut r, max_dim))
        .collect()
}

pub fn square() -> IncidencePolytope {
    product(&simplex(1), &simplex(1))
}
