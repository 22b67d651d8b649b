//! Cross-module consistency: the rank-bound chain ties the search results,
//! the exact tuple counts and the analytic minimization together without
//! ever computing a function rank directly.

use capbound::counting::{g_rank_upper_bound, lambda_exact, saddle_bound, LambdaQuery};
use capbound::{
    greedy_m_general, is_m_general, max_m_general_exact, minimize_h, theorem_bound,
    trivial_lower_bound,
};
use num_traits::ToPrimitive;

/// For every m-general set S the search produces (q odd or m even), the
/// chain |S| - 2m + 3 <= m * Lambda(n, q-1, floor((q-1)n/m)) must hold; this
/// checks the two rank lemmas jointly without computing any rank.
#[test]
fn rank_chain_on_search_witnesses() {
    let params = [
        (2u32, 3u32, 3u32),
        (3, 3, 3),
        (3, 2, 4),
        (2, 5, 3),
        (4, 2, 4),
        (2, 9, 3),
    ];
    for (n, q, m) in params {
        let mut witnesses = vec![max_m_general_exact(n, q, m, 0).unwrap()];
        witnesses.push(greedy_m_general(n, q, m, 42, 5).unwrap());
        for r in witnesses {
            assert!(is_m_general(&r.witness, m as usize));
            let lhs = r.best_size as i64 - 2 * m as i64 + 3;
            let rhs = g_rank_upper_bound(n, q, m).unwrap();
            assert!(
                lhs <= 0 || rhs >= lhs.to_biguint().unwrap(),
                "chain failed at ({n},{q},{m}): |S| = {}",
                r.best_size
            );
        }
    }
}

trait ToBig {
    fn to_biguint(self) -> Option<num_bigint::BigUint>;
}

impl ToBig for i64 {
    fn to_biguint(self) -> Option<num_bigint::BigUint> {
        u64::try_from(self).ok().map(num_bigint::BigUint::from)
    }
}

/// Exact maxima sit strictly between the counting lower bound and the
/// analytic upper bound whenever the parity condition holds.
#[test]
fn exact_maxima_between_bounds() {
    for (n, q, m) in [
        (2u32, 3u32, 3u32),
        (3, 3, 3),
        (3, 2, 4),
        (2, 5, 3),
        (2, 4, 4),
        (2, 7, 3),
    ] {
        let r = max_m_general_exact(n, q, m, 0).unwrap();
        assert!(r.exact);
        let lower = trivial_lower_bound(n, q, m).unwrap().to_u64().unwrap() as usize;
        let upper = theorem_bound(n, q, m).unwrap().theorem_bound;
        assert!(
            lower <= r.best_size && (r.best_size as f64) < upper,
            "({n},{q},{m}): {lower} <= {} < {upper} violated",
            r.best_size
        );
    }
}

/// Being m-general implies being k-general for every 3 <= k <= m, checked
/// on randomly grown 4-general sets.
#[test]
fn m_general_implies_k_general_on_random_sets() {
    for (n, q, seed) in [(3u32, 2u32, 1u64), (4, 2, 2), (3, 3, 3), (2, 5, 4)] {
        let r = greedy_m_general(n, q, 4, seed, 3).unwrap();
        assert!(is_m_general(&r.witness, 4));
        assert!(is_m_general(&r.witness, 3), "4-general set failed 3-generality at ({n},{q})");
    }
}

/// The exact integer count never exceeds the saddle estimate at the
/// h-minimizer, which never exceeds m h_min^n (the floor on the exponent
/// only helps); checked for n up to 50.
#[test]
fn count_below_saddle_below_analytic() {
    for q in [2u32, 3, 5, 8, 9, 16] {
        for m in [3u32, 4, 5, 8] {
            if q % 2 == 0 && m % 2 == 1 {
                continue;
            }
            let (x0, h_min) = minimize_h(m, q, 1e-12).unwrap();
            for n in [1u32, 2, 5, 10, 25, 50] {
                let gamma = (q as u64 - 1) * n as u64 / m as u64;
                let query = LambdaQuery::new(n as u64, q as u64 - 1, gamma).unwrap();
                let exact = lambda_exact(&query).to_f64().unwrap();
                let saddle = saddle_bound(&query, x0).unwrap();
                let analytic = h_min.powi(n as i32);
                assert!(
                    exact <= saddle * (1.0 + 1e-9),
                    "count above saddle at ({n},{q},{m})"
                );
                assert!(
                    saddle <= analytic * (1.0 + 1e-9),
                    "saddle {saddle} above analytic {analytic} at ({n},{q},{m})"
                );
            }
        }
    }
}
