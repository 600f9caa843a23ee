//! The Verma-module engine: normal ordering, Shapovalov pairings, Kac
//! matrices and determinant, singular vectors, norms of logarithmic
//! primaries, and the Gaiotto-state recursion.

pub mod engine;
pub mod gaiotto;
pub mod norm;
pub mod shapovalov;
pub mod singular;

pub use engine::{normal_order_apply, normal_order_apply_hc, VermaMap, VirWord};
pub use gaiotto::{gaiotto_at, gaiotto_coeff, virasoro_recursion_check, RecursionReport};
pub use norm::{
    extract_a, norm_logprimary, rrs_formula, shapovalov_closed_form_check, theorem_main_check,
    TheoremMainReport,
};
pub use shapovalov::{kac_det_check, kac_matrix, kac_matrix_hc, shapovalov, KacDetOutcome, KacMatrix};
pub use singular::{
    leading_term_check, singular_vector, t_negation_check, verify_singular, SingularVector,
};

use crate::algebra::laurent::LaurentPoly;
use crate::algebra::rational::{rat, rat_i64};

/// `c(t) = 13 - 6(t + 1/t)`.
pub fn central_charge() -> LaurentPoly {
    LaurentPoly::from_t_terms([(1, rat_i64(-6)), (0, rat_i64(13)), (-1, rat_i64(-6))])
}

/// `h_{r,s}(t) = ((r - s t)^2 - (t - 1)^2) / 4t`, expanded as the Laurent
/// polynomial `(s^2-1)/4 t + (1-rs)/2 + (r^2-1)/4 t^-1`.
pub fn h_rs(r: u32, s: u32) -> LaurentPoly {
    let (r, s) = (r as i64, s as i64);
    LaurentPoly::from_t_terms([
        (1, rat(s * s - 1, 4)),
        (0, rat(1 - r * s, 2)),
        (-1, rat(r * r - 1, 4)),
    ])
}

/// Ordered pairs `(r, s)` with `r*s <= n`, grouped by increasing level
/// `r*s` and then by `r`.
pub fn rs_pairs(n: u32) -> Vec<(u32, u32)> {
    let mut pairs = Vec::new();
    for level in 1..=n {
        for r in 1..=level {
            if level % r == 0 {
                pairs.push((r, level / r));
            }
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h_rs_closed_form_matches_definition() {
        // direct evaluation of ((r - s t)^2 - (t - 1)^2) / 4t at sample points
        for (r, s) in [(1, 1), (1, 2), (2, 1), (3, 4), (5, 2)] {
            let poly = h_rs(r, s);
            for t0 in [rat(2, 1), rat(-3, 5), rat(7, 2)] {
                let (rf, sf) = (rat_i64(r as i64), rat_i64(s as i64));
                let num = (&rf - &sf * &t0) * (&rf - &sf * &t0)
                    - (&t0 - rat_i64(1)) * (&t0 - rat_i64(1));
                let want = num / (rat_i64(4) * &t0);
                assert_eq!(poly.eval_t(&t0).unwrap(), want);
            }
        }
    }

    #[test]
    fn h_one_one_vanishes() {
        assert!(h_rs(1, 1).is_zero());
    }

    #[test]
    fn h_symmetry_under_inversion() {
        // h_{r,s}(t) = h_{s,r}(1/t)
        for (r, s) in [(1, 2), (2, 3), (4, 1)] {
            assert_eq!(h_rs(r, s), h_rs(s, r).subst_t_inv());
        }
    }

    #[test]
    fn central_charge_symmetric() {
        let c = central_charge();
        assert_eq!(c, c.subst_t_inv());
        assert_eq!(c.eval_t(&rat(1, 1)).unwrap(), rat(1, 1));
    }

    #[test]
    fn rs_pairs_counts() {
        assert_eq!(rs_pairs(1), vec![(1, 1)]);
        assert_eq!(rs_pairs(4).len(), 8);
        assert_eq!(rs_pairs(6).len(), 14);
        assert_eq!(rs_pairs(8).len(), 20);
    }
}
