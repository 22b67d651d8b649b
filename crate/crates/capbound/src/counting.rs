//! Exact counts of bounded integer tuples via generating-function
//! coefficients, the floating saddle-point estimate, and the derived
//! integer rank bound m * Lambda(n, q-1, floor((q-1)n/m)).

use core::fmt;

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq)]
pub enum CountingError {
    /// The saddle parameter t must lie strictly inside (0, 1).
    DomainError(f64),
    /// Parameters outside the supported range (m < 3, q not a prime power, ...).
    ParameterRange(&'static str),
}

impl fmt::Display for CountingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountingError::DomainError(t) => write!(f, "t = {t} is outside (0, 1)"),
            CountingError::ParameterRange(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for CountingError {}

/// Parameters of a count: the number of alpha-tuples with entries in
/// {0, ..., beta} and sum at most gamma.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaQuery {
    pub alpha: u64,
    pub beta: u64,
    pub gamma: u64,
}

impl LambdaQuery {
    /// alpha must be at least 1.
    pub fn new(alpha: u64, beta: u64, gamma: u64) -> Result<LambdaQuery, CountingError> {
        if alpha == 0 {
            return Err(CountingError::ParameterRange("alpha must be at least 1"));
        }
        Ok(LambdaQuery { alpha, beta, gamma })
    }
}

/// Exact tuple count: the sum of the first gamma+1 coefficients of
/// ((1 - x^(beta+1)) / (1 - x))^alpha, by iterated convolution with the
/// (beta+1)-term window, truncated at degree min(gamma, alpha*beta).
pub fn lambda_exact(q: &LambdaQuery) -> BigUint {
    let LambdaQuery { alpha, beta, gamma } = *q;
    // degrees above alpha*beta are impossible; above gamma, irrelevant
    let top = core::cmp::min(gamma, alpha.saturating_mul(beta)) as usize;
    let mut coeff: Vec<BigUint> = vec![BigUint::zero(); top + 1];
    coeff[0] = BigUint::one();
    for _ in 0..alpha {
        // multiply by 1 + x + ... + x^beta via a sliding window sum
        let mut next: Vec<BigUint> = Vec::with_capacity(top + 1);
        let mut window = BigUint::zero();
        for (i, c) in coeff.iter().enumerate() {
            window += c;
            if let Some(drop) = i.checked_sub(beta as usize + 1) {
                window -= &coeff[drop];
            }
            next.push(window.clone());
        }
        coeff = next;
    }
    coeff.into_iter().sum()
}

/// The saddle-point estimate t^(-gamma) * ((1 - t^(beta+1)) / (1 - t))^alpha
/// for t in (0, 1), an upper bound for [`lambda_exact`] at every such t. The
/// geometric factor is computed as the explicit (beta+1)-term sum so the
/// value stays stable as t approaches 1.
pub fn saddle_bound(q: &LambdaQuery, t: f64) -> Result<f64, CountingError> {
    if !(t > 0.0 && t < 1.0) {
        return Err(CountingError::DomainError(t));
    }
    let mut geo = 0.0f64;
    let mut power = 1.0f64;
    for _ in 0..=q.beta {
        geo += power;
        power *= t;
    }
    let log_value = -(q.gamma as f64) * libm::log(t) + q.alpha as f64 * libm::log(geo);
    Ok(libm::exp(log_value))
}

/// Prime-power test; returns (p, k) with q = p^k when q is one.
pub fn is_prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 0u32;
    let mut v = q;
    let mut d = 2u32;
    while d as u64 * d as u64 <= q as u64 {
        if v % d == 0 {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return Some((q, 1)); // q itself is prime
    }
    let mut k = 0u32;
    while v % p == 0 {
        v /= p;
        k += 1;
    }
    if v == 1 {
        Some((p, k))
    } else {
        None
    }
}

/// The exact integer bound m * Lambda(n, q-1, floor((q-1)n/m)) on the rank
/// of the annihilator-counting function G of any S in AG(n,q).
pub fn g_rank_upper_bound(n: u32, q: u32, m: u32) -> Result<BigUint, CountingError> {
    if m < 3 {
        return Err(CountingError::ParameterRange("m must be at least 3"));
    }
    if n < 1 {
        return Err(CountingError::ParameterRange("n must be at least 1"));
    }
    if is_prime_power(q).is_none() {
        return Err(CountingError::ParameterRange("q must be a prime power"));
    }
    let gamma = (q as u64 - 1) * n as u64 / m as u64;
    let query = LambdaQuery::new(n as u64, q as u64 - 1, gamma)?;
    Ok(BigUint::from(m) * lambda_exact(&query))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SplitMix64;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    /// Direct enumeration of all (beta+1)^alpha tuples.
    pub(crate) fn lambda_brute(alpha: u64, beta: u64, gamma: u64) -> u64 {
        let mut count = 0u64;
        let mut tuple = vec![0u64; alpha as usize];
        loop {
            if tuple.iter().sum::<u64>() <= gamma {
                count += 1;
            }
            let mut i = tuple.len();
            loop {
                if i == 0 {
                    return count;
                }
                i -= 1;
                tuple[i] += 1;
                if tuple[i] <= beta {
                    break;
                }
                tuple[i] = 0;
            }
        }
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(
            lambda_exact(&LambdaQuery::new(2, 2, 2).unwrap())
                .to_u64()
                .unwrap(),
            6
        );
        // vacuous sum cap
        assert_eq!(
            lambda_exact(&LambdaQuery::new(3, 2, 6).unwrap())
                .to_u64()
                .unwrap(),
            27
        );
        // only the all-zero tuple
        assert_eq!(
            lambda_exact(&LambdaQuery::new(4, 3, 0).unwrap())
                .to_u64()
                .unwrap(),
            1
        );
        // cumulative coefficients of (1+x+x^2)^3 up to degree 3: 1+3+6+7
        assert_eq!(
            lambda_exact(&LambdaQuery::new(3, 2, 3).unwrap())
                .to_u64()
                .unwrap(),
            17
        );
    }

    #[test]
    fn lambda_zero_alpha_rejected() {
        assert!(LambdaQuery::new(0, 2, 2).is_err());
    }

    #[test]
    fn lambda_matches_brute_force_grid() {
        for alpha in 1..=5u64 {
            for beta in 0..=4u64 {
                for gamma in 0..=alpha * beta {
                    let q = LambdaQuery::new(alpha, beta, gamma).unwrap();
                    assert_eq!(
                        lambda_exact(&q).to_u64().unwrap(),
                        lambda_brute(alpha, beta, gamma),
                        "({alpha},{beta},{gamma})"
                    );
                }
            }
        }
    }

    #[test]
    fn saddle_examples() {
        let q = LambdaQuery::new(2, 2, 2).unwrap();
        let b = saddle_bound(&q, 0.5).unwrap();
        assert!((b - 12.25).abs() < 1e-12);
        assert!(b >= lambda_exact(&q).to_f64().unwrap());

        // gamma = 0: every factor is at least 1
        for t in [0.1, 0.5, 0.9, 0.999] {
            let q = LambdaQuery::new(3, 4, 0).unwrap();
            assert!(saddle_bound(&q, t).unwrap() >= 1.0);
        }

        assert!(saddle_bound(&q, 0.0).is_err());
        assert!(saddle_bound(&q, 1.0).is_err());
        assert!(saddle_bound(&q, -0.3).is_err());
    }

    #[test]
    fn saddle_dominates_exact_randomized() {
        let mut g = SplitMix64::new(0xCAB5);
        for _ in 0..200 {
            let alpha = 1 + g.below(8);
            let beta = g.below(9);
            let gamma = g.below(alpha * beta + 1);
            let t = (1 + g.below(998)) as f64 / 1000.0;
            let q = LambdaQuery::new(alpha, beta, gamma).unwrap();
            let exact = lambda_exact(&q).to_f64().unwrap();
            let bound = saddle_bound(&q, t).unwrap();
            assert!(
                bound * (1.0 + 1e-12) >= exact,
                "saddle {bound} < exact {exact} at ({alpha},{beta},{gamma}), t={t}"
            );
        }
    }

    #[test]
    fn g_rank_upper_bound_examples() {
        assert_eq!(g_rank_upper_bound(1, 3, 3).unwrap().to_u64().unwrap(), 3);
        assert_eq!(g_rank_upper_bound(2, 3, 3).unwrap().to_u64().unwrap(), 9);
        assert!(g_rank_upper_bound(2, 6, 3).is_err()); // 6 is not a prime power
        assert!(g_rank_upper_bound(2, 3, 2).is_err());
    }

    #[test]
    fn prime_power_detection() {
        assert_eq!(is_prime_power(2), Some((2, 1)));
        assert_eq!(is_prime_power(9), Some((3, 2)));
        assert_eq!(is_prime_power(16), Some((2, 4)));
        assert_eq!(is_prime_power(1009), Some((1009, 1)));
        assert_eq!(is_prime_power(6), None);
        assert_eq!(is_prime_power(12), None);
        assert_eq!(is_prime_power(1), None);
        assert_eq!(is_prime_power(0), None);
    }

    proptest! {
        // complement bijection e -> beta - e
        #[test]
        fn lambda_symmetry(alpha in 1u64..6, beta in 0u64..6, frac in 0.0f64..1.0) {
            let total = alpha * beta;
            prop_assume!(total > 0);
            let gamma = ((total - 1) as f64 * frac) as u64;
            let lhs = lambda_exact(&LambdaQuery::new(alpha, beta, gamma).unwrap())
                + lambda_exact(&LambdaQuery::new(alpha, beta, total - gamma - 1).unwrap());
            let rhs = BigUint::from(beta + 1).pow(alpha as u32);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn lambda_monotone(alpha in 1u64..6, beta in 0u64..6, gamma in 0u64..30) {
            let base = lambda_exact(&LambdaQuery::new(alpha, beta, gamma).unwrap());
            let more_sum = lambda_exact(&LambdaQuery::new(alpha, beta, gamma + 1).unwrap());
            let more_cap = lambda_exact(&LambdaQuery::new(alpha, beta + 1, gamma).unwrap());
            prop_assert!(base <= more_sum);
            prop_assert!(base <= more_cap);
        }
    }
}
