use polyfew_core::*;

#[test]
fn witness_grid_matches() {
    for a in 1..=12 {
        for b in 1..=12 {
            let r = verify_witness(a, b).unwrap();
            assert!(r.matches, "({a}, {b}): {r:?}");
            assert_eq!(r.dim as u64, lower_f(a, b));
            r.witness.validate().unwrap();
        }
    }
}

#[test]
fn witness_case_formulas() {
    // alpha >= beta = 1: 2 alpha + 2 vertices, alpha + 3 facets
    for a in 1..=10u32 {
        let w = witness(a, 1).unwrap();
        assert_eq!(
            (w.num_vertices(), w.num_facets()),
            (2 * a as usize + 2, a as usize + 3)
        );
    }
    // alpha >= beta > 1: 2 beta + 2 alpha vertices, 3 beta + alpha facets
    for b in 2..=8u32 {
        for a in b..=10 {
            let w = witness(a, b).unwrap();
            let (a, b) = (a as usize, b as usize);
            assert_eq!(w.dim(), 2 * b + a - 1);
            assert_eq!(
                (w.num_vertices(), w.num_facets()),
                (2 * b + 2 * a, 3 * b + a)
            );
        }
    }
}

#[test]
fn witnesses_are_polar_pairs() {
    for a in 1..=8 {
        for b in 1..=8 {
            let w = witness(a, b).unwrap();
            let dual = polar(&witness(b, a).unwrap()).unwrap();
            assert_eq!(canonical_key(&w), canonical_key(&dual), "({a}, {b})");
        }
    }
}

#[test]
fn bracket_grid() {
    for a in 0..=64 {
        for b in 0..=64 {
            let br = d_bracket(a, b);
            assert!(br.lower <= br.upper, "({a}, {b})");
            assert_eq!(br.lower, lower_f(b, a));
        }
    }
}

#[test]
fn marcus_branches_meet() {
    assert_eq!(marcus_limit(5).unwrap(), 3 * 5 - 1);
    assert_eq!(marcus_limit(5).unwrap(), 10 + 4);
}
