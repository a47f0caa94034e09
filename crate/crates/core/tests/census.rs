mod common;

use std::collections::BTreeSet;

use common::{brute_isomorphic, square};
use num_bigint::BigUint;
use polyfew_core::census::*;
use polyfew_core::*;

fn keys(records: &[CensusRecord]) -> BTreeSet<CanonicalKey> {
    records.iter().map(|r| r.key.clone()).collect()
}

#[test]
fn dplus2_brute_force_dedup() {
    for d in 2..=6 {
        // every ordered pair of summands and every pyramid depth, deduplicated
        // by trying all vertex bijections
        let mut classes: Vec<IncidencePolytope> = Vec::new();
        for m in 1..d {
            for n in 1..=d - m {
                let p = pyramid_tower(&free_sum(&simplex(m), &simplex(n)).unwrap(), d - m - n);
                if !classes.iter().any(|q| brute_isomorphic(&p, q)) {
                    classes.push(p);
                }
            }
        }
        assert_eq!(classes.len(), d * d / 4, "d = {d}");
        let generated: Vec<_> = dplus2_types(d).into_iter().map(|(_, p)| p).collect();
        assert_eq!(generated.len(), classes.len());
        for p in &generated {
            assert_eq!(classes.iter().filter(|q| brute_isomorphic(p, q)).count(), 1);
        }
    }
}

#[test]
fn dplus2_keys_are_distinct() {
    for d in 2..=10 {
        let types = dplus2_types(d);
        let distinct: BTreeSet<_> = types.iter().map(|(_, p)| canonical_key(p)).collect();
        assert_eq!(distinct.len(), d * d / 4);
        assert_eq!(distinct.len(), types.len());
    }
}

#[test]
fn census_types_are_pairwise_distinct_by_brute_force() {
    let census = Census::new();
    for d in 2..=4 {
        let records = census.census(2, d, None).unwrap();
        let polytopes: Vec<_> = records.iter().map(|r| r.polytope().unwrap()).collect();
        for (i, p) in polytopes.iter().enumerate() {
            for q in &polytopes[i + 1..] {
                assert!(!brute_isomorphic(p, q));
            }
        }
    }
}

#[test]
fn wheel_examples() {
    assert!(enumerate_wheels(4).is_empty());
    let five = wheel_records(5, None);
    assert_eq!(five.len(), 1);
    let p = five[0].polytope().unwrap();
    assert_eq!((p.dim(), p.num_vertices(), p.num_facets()), (2, 5, 5));
    assert_eq!(wheel_records(6, None).len(), 6);
}

#[test]
fn wheel_polytopes_are_nonpyramidal() {
    for n in 5..=10 {
        let wheels = enumerate_wheels(n);
        let mut seen = BTreeSet::new();
        for w in &wheels {
            let p = wheel_to_polytope(w).unwrap();
            p.validate().unwrap();
            assert_eq!((p.dim(), p.num_vertices()), (n - 3, n));
            assert!(p.facets().iter().all(|f| f.len() >= p.dim()));
            assert_eq!(strip_core(&p).apex_count, 0);
            assert!(seen.insert(canonical_key(&p)), "two wheels share a type");
        }
    }
}

#[test]
fn pyramid_recursion() {
    let census = Census::new();
    // published counts of d-polytopes with d + 3 vertices
    let published = [(3, 7), (4, 31), (5, 116), (6, 379), (7, 1133)];
    let mut lower = census.types_exact_alpha(2, 2, None).unwrap();
    for (d, count) in published {
        let total = census.types_exact_alpha(2, d, None).unwrap();
        let nonpyr = census.nonpyramidal(2, d, None).unwrap();
        assert_eq!(total.len(), nonpyr.len() + lower.len(), "d = {d}");
        let pyramids: BTreeSet<_> = lower
            .iter()
            .map(|r| canonical_key(&pyramid(&r.polytope().unwrap())))
            .collect();
        let expected: BTreeSet<_> = pyramids.union(&keys(&nonpyr)).cloned().collect();
        assert_eq!(keys(&total), expected);
        assert_eq!(total.len(), count);
        lower = total;
    }
}

#[test]
fn records_are_consistent() {
    for d in 1..=6 {
        for r in census(2, d, None).unwrap() {
            let p = r.polytope().unwrap();
            assert_eq!(
                (r.dim, r.num_vertices, r.num_facets),
                (p.dim(), p.num_vertices(), p.num_facets())
            );
            assert_eq!((r.alpha, r.beta), (p.alpha(), p.beta()));
            assert_eq!(r.nonpyramid, !is_pyramid(&p));
            assert!(r.alpha <= 2);
        }
    }
}

#[test]
fn census_examples() {
    let three = census(1, 3, Some(1)).unwrap();
    assert_eq!(
        keys(&three),
        [
            canonical_key(&simplex(3)),
            canonical_key(&pyramid(&square()))
        ]
        .into()
    );
    let two = census(2, 2, Some(2)).unwrap();
    let pentagon = wheel_records(5, None)[0].key.clone();
    assert_eq!(
        keys(&two),
        [
            canonical_key(&simplex(2)),
            canonical_key(&square()),
            pentagon
        ]
        .into()
    );
    for d in 1..=8 {
        assert_eq!(census(0, d, None).unwrap().len(), 1);
        assert_eq!(census(0, d, Some(5)).unwrap().len(), 1);
    }
    assert_eq!(census(3, 4, None), Err(Error::UnsupportedAlpha(3)));
}

#[test]
fn count_examples() {
    assert_eq!(count_types(3, 1, 1), Ok(2));
    assert_eq!(count_types(2, 2, 2), Ok(3));
    for d in 1..=6 {
        for b in 0..=5 {
            assert_eq!(count_types(d, 0, b), Ok(1));
        }
    }
    assert_eq!(count_types(5, 3, 4), Err(Error::UnsupportedAlpha(3)));
}

#[test]
fn marcus_examples() {
    assert_eq!(marcus_scan(2, 7), Ok(5));
    assert_eq!(marcus_scan(1, 6), Ok(2));
    assert_eq!(marcus_scan(2, 4), Ok(4));
    let census = Census::new();
    assert!(!census.unneighborly(2, 5).unwrap().is_empty());
    for d in 6..=8 {
        assert!(census.unneighborly(2, d).unwrap().is_empty());
        for r in census.types_exact_alpha(2, d.min(7), None).unwrap() {
            assert!(!is_unneighborly(&r.polytope().unwrap()).unwrap());
        }
    }
}

#[test]
fn d2_matches_bracket_and_witness() {
    for beta in 2..=8u32 {
        let d = compute_D2(beta as usize, None).unwrap() as u64;
        let bracket = d_bracket(2, beta);
        assert!(bracket.lower <= d && d <= bracket.upper);
        let report = verify_witness(2, beta).unwrap();
        assert!(report.matches);
        assert!(d >= report.dim as u64);
    }
    assert_eq!(compute_D2(6, Some(4)), Ok(4));
    assert!(matches!(compute_D2(1, None), Err(Error::OutOfDomain(_))));
}

#[test]
fn nonpyramids_respect_upper_bracket() {
    for n in 5..=12 {
        for r in wheel_records(n, None) {
            let upper = d_bracket(2, r.beta as u32).upper;
            assert!(r.dim as u64 <= upper, "{r:?}");
        }
    }
}

#[test]
fn crude_bound_dominates_counts() {
    for a in 0..=2usize {
        for b in 0..=4usize {
            let bound = crude_k_bound(a as u32, b as u32);
            for d in 1..=7 {
                let count = count_types(d, a, b).unwrap();
                assert!(BigUint::from(count) <= bound);
            }
        }
    }
}

#[test]
fn stabilization() {
    let counts: Vec<_> = (5..=9).map(|d| count_types(d, 2, 2).unwrap()).collect();
    assert_eq!(counts[1], counts[2]);
    assert_eq!(counts[2], counts[3]);
    assert_eq!(counts[3], counts[4]);
    let k = Census::new().k_exact(2, 2).unwrap();
    assert_eq!(k.counts.len(), 7);
    assert_eq!(k.max, counts[1]);
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                let wheels = enumerate_wheels(10);
                let records = census(2, 6, None).unwrap();
                (wheels, records)
            })
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn cache_reuses_results() {
    let dir = tempfile::tempdir().unwrap();
    let cached = Census::with_cache(CensusCache::open(dir.path()).unwrap());
    let plain = Census::new();
    let first = cached.census(2, 6, Some(3)).unwrap();
    assert_eq!(first, plain.census(2, 6, Some(3)).unwrap());
    assert!(dir.path().join("wheel-09.jsonl").exists());
    assert!(dir.path().join("wheel-09.complete").exists());
    assert_eq!(cached.census(2, 6, Some(3)).unwrap(), first);
    assert_eq!(
        cached.census(2, 6, None).unwrap(),
        plain.census(2, 6, None).unwrap()
    );
    assert_eq!(
        cached.census(2, 6, Some(2)).unwrap(),
        plain.census(2, 6, Some(2)).unwrap()
    );
}
