//! The analytic core: minimizing h_q(t) = t^(-(q-1)/m) (1-t^q)/(1-t) over
//! (0,1) by root-finding on its critical polynomial r_q, the exponential
//! upper bound 2m + m h_min^n on the size of an m-general set in AG(n,q),
//! the growth-rate exponent log_q(h_min), the fixed point alpha driving the
//! large-q asymptotics, and the table generators built on these.

use core::fmt;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::counting::{g_rank_upper_bound, is_prime_power};

/// Default root-finding tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum BoundError {
    /// Evaluation point outside (0, 1).
    DomainError(f64),
    /// The rank argument needs q odd or m even; q even with m odd is the
    /// excluded case.
    ParityUnsupported { q: u32, m: u32 },
    /// Parameters outside the supported range.
    ParameterRange(&'static str),
    /// The sign bracket (-, +) for the critical polynomial could not be
    /// established; the parameters are outside the bound's regime.
    BracketFailure { m: u32, q: u32 },
}

impl fmt::Display for BoundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundError::DomainError(t) => write!(f, "t = {t} is outside (0, 1)"),
            BoundError::ParityUnsupported { q, m } => {
                write!(
                    f,
                    "q = {q} even with m = {m} odd is the excluded parity case"
                )
            }
            BoundError::ParameterRange(msg) => write!(f, "{msg}"),
            BoundError::BracketFailure { m, q } => {
                write!(
                    f,
                    "no sign bracket for the critical polynomial at m = {m}, q = {q}"
                )
            }
        }
    }
}

impl core::error::Error for BoundError {}

/// Integer power by squaring; exact algorithm, a few ulps of drift.
fn powu(x: f64, mut e: u32) -> f64 {
    let mut base = x;
    let mut acc = 1.0;
    while e > 0 {
        if e & 1 == 1 {
            acc *= base;
        }
        base *= base;
        e >>= 1;
    }
    acc
}

/// h_q(t) = t^(-(q-1)/m) * (1 + t + ... + t^(q-1)) for t in (0, 1). The
/// geometric factor is the explicit q-term sum, which stays stable where the
/// naive (1-t^q)/(1-t) quotient loses precision near t = 1.
pub fn h_q(m: u32, q: u32, t: f64) -> Result<f64, BoundError> {
    if !(t > 0.0 && t < 1.0) {
        return Err(BoundError::DomainError(t));
    }
    let mut geo = 0.0;
    let mut power = 1.0;
    for _ in 0..q {
        geo += power;
        power *= t;
    }
    let exponent = -((q - 1) as f64) / m as f64;
    Ok(libm::pow(t, exponent) * geo)
}

/// The critical polynomial of h_q:
/// r_q(x) = (q+m-1)x - (q-1) - x^q ((q-1)(m-1)(1-x) + m).
/// h_q'(x) has the sign of r_q(x) on (0,1).
pub fn r_q(m: u32, q: u32, x: f64) -> f64 {
    let (mf, qf) = (m as f64, q as f64);
    (qf + mf - 1.0) * x - (qf - 1.0) - powu(x, q) * ((qf - 1.0) * (mf - 1.0) * (1.0 - x) + mf)
}

fn r_q_derivative(m: u32, q: u32, x: f64) -> f64 {
    let (mf, qf) = (m as f64, q as f64);
    let w = (qf - 1.0) * (mf - 1.0) * (1.0 - x) + mf;
    (qf + mf - 1.0) - powu(x, q - 1) * (qf * w - x * (qf - 1.0) * (mf - 1.0))
}

/// Locates the unique minimum of h_q on (0,1): bisection on r_q over the
/// bracket [(q-1)/(q+m-1), 1-delta] down to `tol`, polished by two Newton
/// steps. Returns (x0, h_q(x0)). Deterministic for given inputs.
pub fn minimize_h(m: u32, q: u32, tol: f64) -> Result<(f64, f64), BoundError> {
    if m < 3 {
        return Err(BoundError::ParameterRange("m must be at least 3"));
    }
    if q < 2 {
        return Err(BoundError::ParameterRange("q must be at least 2"));
    }
    if !(tol > 0.0) {
        return Err(BoundError::ParameterRange("tolerance must be positive"));
    }
    let lo0 = (q as f64 - 1.0) / (q as f64 + m as f64 - 1.0);
    if !(r_q(m, q, lo0) < 0.0) {
        return Err(BoundError::BracketFailure { m, q });
    }
    // r_q(1) = 0 exactly, so back off until the sign is positive
    let mut delta = 1e-6;
    let mut hi0 = 1.0 - delta;
    let mut retries = 0;
    while !(r_q(m, q, hi0) > 0.0) {
        delta /= 2.0;
        hi0 = 1.0 - delta;
        retries += 1;
        if retries > 40 {
            return Err(BoundError::BracketFailure { m, q });
        }
    }

    let (mut lo, mut hi) = (lo0, hi0);
    let mut iterations = 0;
    while hi - lo > tol && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        if r_q(m, q, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let mut x0 = 0.5 * (lo + hi);
    for _ in 0..2 {
        let d = r_q_derivative(m, q, x0);
        if d == 0.0 {
            break;
        }
        let next = x0 - r_q(m, q, x0) / d;
        if next.is_finite()
            && next > lo0
            && next < hi0
            && libm::fabs(r_q(m, q, next)) <= libm::fabs(r_q(m, q, x0))
        {
            x0 = next;
        }
    }
    let h_min = h_q(m, q, x0)?;
    Ok((x0, h_min))
}

/// Residual of the fixed-point equation for alpha:
/// f(x) = x - (m^2 - mx + x) e^(x - m).
pub fn alpha_equation(m: u32, x: f64) -> f64 {
    let mf = m as f64;
    x - (mf * mf - mf * x + x) * libm::exp(x - mf)
}

/// f'(x) = 1 - e^(x - m) (m^2 - mx + x - m + 1); lies in (0.25, 1) on (0,1).
pub fn alpha_equation_derivative(m: u32, x: f64) -> f64 {
    let mf = m as f64;
    1.0 - libm::exp(x - mf) * (mf * mf - mf * x + x - mf + 1.0)
}

/// The unique root in (0,1) of x = (m^2 - mx + x) e^(x - m), by bisection.
pub fn solve_alpha(m: u32, tol: f64) -> f64 {
    assert!(m >= 3, "the fixed point is used for m >= 3");
    assert!(tol > 0.0);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    debug_assert!(alpha_equation(m, lo) < 0.0 && alpha_equation(m, hi) > 0.0);
    let mut iterations = 0;
    while hi - lo > tol && iterations < 200 {
        let mid = 0.5 * (lo + hi);
        if alpha_equation(m, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    0.5 * (lo + hi)
}

/// Leading coefficient (m^2 - alpha m + alpha) / (m e^(1 - alpha/m)) of the
/// large-q growth-rate bound; h_min(m, q) is asymptotically q divided by
/// this value.
pub fn asymptotic_base(m: u32) -> f64 {
    let alpha = solve_alpha(m, DEFAULT_TOL);
    let mf = m as f64;
    (mf * mf - alpha * mf + alpha) / (mf * libm::exp(1.0 - alpha / mf))
}

fn check_parity(q: u32, m: u32) -> Result<(), BoundError> {
    if q % 2 == 1 || m % 2 == 0 {
        Ok(())
    } else {
        Err(BoundError::ParityUnsupported { q, m })
    }
}

fn check_prime_power(q: u32) -> Result<(), BoundError> {
    if is_prime_power(q).is_none() {
        return Err(BoundError::ParameterRange("q must be a prime power"));
    }
    Ok(())
}

/// Raw growth-rate exponent log_q(h_min(m, q)). Display rounding is a
/// separate concern; see [`round_up_3dp`].
pub fn mu_upper(m: u32, q: u32) -> Result<f64, BoundError> {
    check_prime_power(q)?;
    check_parity(q, m)?;
    let (_, h_min) = minimize_h(m, q, DEFAULT_TOL)?;
    Ok(libm::log(h_min) / libm::log(q as f64))
}

/// Rounds toward +infinity at the third decimal. Upper bounds are displayed
/// this way so the printed figure is still a valid bound.
pub fn round_up_3dp(x: f64) -> f64 {
    libm::ceil(x * 1000.0) / 1000.0
}

/// Rounds toward -infinity at the third decimal: the display convention for
/// the asymptotic base, which sits inside 1 - log_q(base) and must be
/// understated for the displayed bound to stay valid.
pub fn round_down_3dp(x: f64) -> f64 {
    libm::floor(x * 1000.0) / 1000.0
}

/// One fully evaluated (n, q, m) bound.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: u32,
    pub q: u32,
    pub m: u32,
    /// Critical point of h_q in ((q-1)/(q+m-1), 1).
    pub x0: f64,
    /// Minimized base h_q(x0).
    pub h_min: f64,
    /// 2m + m * h_min^n; exceeds the size of every m-general set in AG(n,q).
    pub theorem_bound: f64,
    /// log_q(h_min), the growth-rate exponent bound.
    pub mu_upper: f64,
    /// Fixed point of the asymptotic equation (depends on m only).
    pub alpha: f64,
    /// Leading coefficient of the large-q bound (depends on m only).
    pub asymptotic_base: f64,
    /// Exact integer rank bound m * Lambda(n, q-1, floor((q-1)n/m)).
    pub lambda_value: BigUint,
    /// Reparametrized critical point beta = x0 (q+m-1) - q + 1 in (0, m).
    pub beta: f64,
    pub parity_supported: bool,
}

impl BoundReport {
    /// The bound in its displayed shape, e.g. "8 + 4*(1.755)^n" for
    /// (q, m) = (2, 4). The base is rounded up so the form stays valid.
    pub fn display_form(&self) -> String {
        format!(
            "{} + {}*({:.3})^n",
            2 * self.m,
            self.m,
            round_up_3dp(self.h_min)
        )
    }
}

/// Evaluates the full bound chain at (n, q, m): the analytic bound
/// 2m + m h_min^n, the growth exponent, the fixed point data and the exact
/// integer rank bound it majorizes.
pub fn theorem_bound(n: u32, q: u32, m: u32) -> Result<BoundReport, BoundError> {
    if m < 3 || m > n + 2 {
        return Err(BoundError::ParameterRange("m must satisfy 3 <= m <= n+2"));
    }
    check_prime_power(q)?;
    check_parity(q, m)?;
    let (x0, h_min) = minimize_h(m, q, DEFAULT_TOL)?;
    let bound = 2.0 * m as f64 + m as f64 * powu(h_min, n);
    let mu = libm::log(h_min) / libm::log(q as f64);
    let alpha = solve_alpha(m, DEFAULT_TOL);
    let base = asymptotic_base(m);
    let lambda_value =
        g_rank_upper_bound(n, q, m).map_err(|_| BoundError::ParameterRange("invalid (n,q,m)"))?;
    // the analytic bound dominates the exact count it majorizes
    let lambda_f = lambda_value.to_f64().unwrap_or(f64::INFINITY);
    let analytic = m as f64 * powu(h_min, n);
    assert!(
        analytic >= lambda_f * (1.0 - 1e-9),
        "analytic bound {analytic} fell below the exact rank bound {lambda_f}"
    );
    let beta = x0 * (q as f64 + m as f64 - 1.0) - q as f64 + 1.0;
    Ok(BoundReport {
        n,
        q,
        m,
        x0,
        h_min,
        theorem_bound: bound,
        mu_upper: mu,
        alpha,
        asymptotic_base: base,
        lambda_value,
        beta,
        parity_supported: true,
    })
}

/// One cell of the growth-rate table; unfilled cells (q even, m odd) carry
/// no bound.
#[derive(Debug, Clone, PartialEq)]
pub struct TableCell {
    pub m: u32,
    pub q: u32,
    pub parity_supported: bool,
    pub x0: Option<f64>,
    pub h_min: Option<f64>,
    pub mu_raw: Option<f64>,
    /// mu rounded up at the third decimal, the displayed figure.
    pub mu_display: Option<f64>,
}

/// The exact-style growth-rate table: one cell per (m, q), m outer, q inner.
/// Parity-excluded cells are emitted unfilled rather than dropped.
pub fn mu_table(ms: &[u32], qs: &[u32]) -> Result<Vec<TableCell>, BoundError> {
    for &m in ms {
        if m < 3 {
            return Err(BoundError::ParameterRange("every m must be at least 3"));
        }
    }
    for &q in qs {
        check_prime_power(q)?;
    }
    let mut cells = Vec::with_capacity(ms.len() * qs.len());
    for &m in ms {
        for &q in qs {
            if check_parity(q, m).is_err() {
                cells.push(TableCell {
                    m,
                    q,
                    parity_supported: false,
                    x0: None,
                    h_min: None,
                    mu_raw: None,
                    mu_display: None,
                });
                continue;
            }
            let (x0, h_min) = minimize_h(m, q, DEFAULT_TOL)?;
            let mu = libm::log(h_min) / libm::log(q as f64);
            cells.push(TableCell {
                m,
                q,
                parity_supported: true,
                x0: Some(x0),
                h_min: Some(h_min),
                mu_raw: Some(mu),
                mu_display: Some(round_up_3dp(mu)),
            });
        }
    }
    Ok(cells)
}

/// One row of the asymptotic (large q) table.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticRow {
    pub m: u32,
    pub alpha: f64,
    /// The bound reads mu_m(q) <= 1 - log_q(base) for large q.
    pub base: f64,
}

/// The asymptotic-style table: one row per m.
pub fn asymptotic_table(ms: &[u32]) -> Result<Vec<AsymptoticRow>, BoundError> {
    for &m in ms {
        if m < 3 {
            return Err(BoundError::ParameterRange("every m must be at least 3"));
        }
    }
    Ok(ms
        .iter()
        .map(|&m| AsymptoticRow {
            m,
            alpha: solve_alpha(m, DEFAULT_TOL),
            base: asymptotic_base(m),
        })
        .collect())
}
