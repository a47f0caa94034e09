//! Bound functions for the largest dimension `D(alpha, beta)` of a
//! non-pyramid with at most `d+1+alpha` vertices and `d+1+beta` facets.
//!
//! Arguments are `u32` and results `u64`, so every evaluation is exact:
//! `C(x, 2) + y + 3` stays below `2^64` for all `u32` inputs.

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};

fn choose2(x: u32) -> u64 {
    let x = u64::from(x);
    x * x.saturating_sub(1) / 2
}

/// Upper-bound function: `0` if either argument is zero, `3x + y - 2` for
/// `1 <= x <= 5`, and `C(x, 2) + y + 3` for `x >= 5`.
#[allow(non_snake_case)]
pub fn upper_F(x: u32, y: u32) -> u64 {
    let (xw, yw) = (u64::from(x), u64::from(y));
    match x {
        _ if x == 0 || y == 0 => 0,
        1..=5 => 3 * xw + yw - 2,
        _ => choose2(x) + yw + 3,
    }
}

/// Lower-bound function, symmetric in its arguments.
pub fn lower_f(x: u32, y: u32) -> u64 {
    let (xw, yw) = (u64::from(x), u64::from(y));
    if x == 0 || y == 0 {
        0
    } else if x == 1 || y == 1 {
        xw + yw
    } else if x >= y {
        xw + 2 * yw - 1
    } else {
        2 * xw + yw - 1
    }
}

/// Largest dimension of an unneighborly polytope with `d + a + 1` vertices.
pub fn marcus_limit(a: u32) -> Result<u64> {
    match a {
        0 => Err(Error::UndefinedForZero),
        1..=5 => Ok(3 * u64::from(a) - 1),
        _ => Ok(choose2(a) + 4),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsBracket {
    pub alpha: u32,
    pub beta: u32,
    pub lower: u64,
    pub upper: u64,
}

pub fn d_bracket(alpha: u32, beta: u32) -> BoundsBracket {
    BoundsBracket {
        alpha,
        beta,
        lower: lower_f(alpha, beta),
        upper: upper_F(alpha, beta).min(upper_F(beta, alpha)),
    }
}

/// Exponent of the crude bound on the number of types,
/// `(D + alpha + 1) * (D + beta + 1)` with `D` the upper bracket value.
pub fn crude_k_log2(alpha: u32, beta: u32) -> u128 {
    let d = u128::from(d_bracket(alpha, beta).upper);
    (d + u128::from(alpha) + 1) * (d + u128::from(beta) + 1)
}

/// `2^crude_k_log2(alpha, beta)`.
pub fn crude_k_bound(alpha: u32, beta: u32) -> BigUint {
    let exp = crude_k_log2(alpha, beta);
    let exp = u64::try_from(exp).expect("exponent fits in u64 for u32 inputs");
    BigUint::from(1u8) << exp
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn upper_examples() {
        assert_eq!(upper_F(2, 3), 7);
        assert_eq!(upper_F(0, 9), 0);
        assert_eq!(upper_F(9, 0), 0);
        assert_eq!(upper_F(6, 2), 20);
    }

    #[test]
    fn upper_branches_meet_at_five() {
        for y in 1..50 {
            assert_eq!(3 * 5 + u64::from(y) - 2, choose2(5) + u64::from(y) + 3);
            assert_eq!(upper_F(5, y), 13 + u64::from(y));
        }
    }

    #[test]
    fn lower_examples() {
        assert_eq!(lower_f(1, 7), 8);
        assert_eq!(lower_f(3, 2), 6);
        assert_eq!(lower_f(2, 3), 6);
        assert_eq!(lower_f(0, 4), 0);
    }

    #[test]
    fn lower_is_symmetric() {
        for x in 0..40 {
            for y in 0..40 {
                assert_eq!(lower_f(x, y), lower_f(y, x));
            }
        }
    }

    #[test]
    fn marcus_examples() {
        assert_eq!(marcus_limit(1), Ok(2));
        assert_eq!(marcus_limit(5), Ok(14));
        assert_eq!(choose2(5) + 4, 14);
        assert_eq!(marcus_limit(6), Ok(19));
        assert_eq!(marcus_limit(0), Err(Error::UndefinedForZero));
    }

    #[test]
    fn brackets() {
        assert_eq!((d_bracket(1, 1).lower, d_bracket(1, 1).upper), (2, 2));
        assert_eq!((d_bracket(2, 3).lower, d_bracket(2, 3).upper), (6, 7));
        assert_eq!((d_bracket(0, 5).lower, d_bracket(0, 5).upper), (0, 0));
    }

    #[test]
    fn crude_bound() {
        assert_eq!(crude_k_bound(1, 1), BigUint::from(1u32 << 16));
        assert_eq!(crude_k_bound(0, 0), BigUint::from(2u32));
        assert_eq!(crude_k_log2(2, 2), 81);
        assert_eq!(crude_k_bound(2, 2), BigUint::from(1u128 << 81));
    }

    #[test]
    fn extreme_arguments_do_not_overflow() {
        let big = u32::MAX;
        assert_eq!(upper_F(big, big), choose2(big) + u64::from(big) + 3);
        assert!(lower_f(big, big) > 0);
        assert!(crude_k_log2(big, big) > 0);
    }
}
