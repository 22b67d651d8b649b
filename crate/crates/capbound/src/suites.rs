//! Named verification batteries: each suite bundles the invariant checks of
//! one subsystem into pass/fail records, for the CLI `verify` command and
//! the acceptance tests.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::bounds::{
    alpha_equation_derivative, h_q, minimize_h, mu_upper, r_q, solve_alpha, DEFAULT_TOL,
};
use crate::counting::{g_rank_upper_bound, lambda_exact, saddle_bound, LambdaQuery};
use crate::field::{matrix_rank, nullspace_dim, FieldElement, FieldSpec, FqMatrix};
use crate::geometry::{enumerate_points, for_each_combination, is_m_general, PointSet};
use crate::indicator::{
    char2_odd_identity, check_g_routes, check_t_equals_g, t2_rank_formula, CheckMode, CheckVerdict,
    EVAL_BUDGET,
};
use crate::rng::SplitMix64;
use crate::search::greedy_m_general;

/// One named check with its outcome.
#[derive(Debug, Clone)]
pub struct SuiteCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
    /// Tuple of point indices witnessing a failed equality sweep.
    pub counterexample: Option<Vec<usize>>,
}

impl SuiteCheck {
    fn ok(name: String, detail: String) -> SuiteCheck {
        SuiteCheck {
            name,
            pass: true,
            detail,
            counterexample: None,
        }
    }

    fn fail(name: String, detail: String) -> SuiteCheck {
        SuiteCheck {
            name,
            pass: false,
            detail,
            counterexample: None,
        }
    }

    fn from_verdict(name: String, v: &CheckVerdict) -> SuiteCheck {
        match v {
            CheckVerdict::Pass { cases } => SuiteCheck::ok(name, format!("{cases} cases")),
            CheckVerdict::Fail { tuple, lhs, rhs } => SuiteCheck {
                name,
                pass: false,
                detail: format!(
                    "counterexample at {tuple:?}: {} vs {}",
                    lhs.index(),
                    rhs.index()
                ),
                counterexample: Some(tuple.clone()),
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Runs the named suite ("fields", "indicators", "char2", "lambda",
/// "analysis" or "all"); None for an unknown name. `budget` caps the tuple
/// sweeps of the indicator and characteristic-2 batteries.
pub fn run_suite(name: &str, budget: Option<u64>) -> Option<Vec<SuiteReport>> {
    let budget = budget.unwrap_or(EVAL_BUDGET);
    match name {
        "fields" => Some(vec![fields_suite()]),
        "indicators" => Some(vec![indicators_suite(budget)]),
        "char2" => Some(vec![char2_suite(budget)]),
        "lambda" => Some(vec![lambda_suite()]),
        "analysis" => Some(vec![analysis_suite()]),
        "all" => Some(vec![
            fields_suite(),
            indicators_suite(budget),
            char2_suite(budget),
            lambda_suite(),
            analysis_suite(),
        ]),
        _ => None,
    }
}

// ---------------------------------------------------------------- fields

const AXIOM_FIELDS: [(u32, u32); 10] = [
    (2, 1),
    (3, 1),
    (2, 2),
    (5, 1),
    (7, 1),
    (2, 3),
    (3, 2),
    (11, 1),
    (13, 1),
    (2, 4),
];

pub fn fields_suite() -> SuiteReport {
    let mut checks = Vec::new();
    for (p, k) in AXIOM_FIELDS {
        let f = FieldSpec::make_field(p, k).expect("axiom grid fields are valid");
        checks.push(field_axioms_check(&f));
        checks.push(cyclic_group_check(&f));
    }
    checks.push(rank_invariance_check());
    checks.push(rank_nullity_check());
    SuiteReport {
        suite: "fields",
        checks,
    }
}

/// Exhaustive commutativity, distributivity and inverses for one small field.
fn field_axioms_check(f: &FieldSpec) -> SuiteCheck {
    let name = format!("field axioms q={}", f.q());
    let one = f.one();
    for a in f.elements() {
        for b in f.elements() {
            if f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a) {
                return SuiteCheck::fail(name, format!("commutativity at {a:?}, {b:?}"));
            }
            for c in f.elements() {
                let lhs = f.mul(a, f.add(b, c).unwrap()).unwrap();
                let rhs = f.add(f.mul(a, b).unwrap(), f.mul(a, c).unwrap()).unwrap();
                if lhs != rhs {
                    return SuiteCheck::fail(name, format!("distributivity at {a:?},{b:?},{c:?}"));
                }
            }
            if !a.is_zero() && f.mul(a, f.inv(a).unwrap()).unwrap() != one {
                return SuiteCheck::fail(name, format!("inverse at {a:?}"));
            }
        }
    }
    SuiteCheck::ok(name, format!("{} triples", (f.q() as u64).pow(3)))
}

/// The multiplicative group has an element of order exactly q-1.
fn cyclic_group_check(f: &FieldSpec) -> SuiteCheck {
    let name = format!("multiplicative group cyclic q={}", f.q());
    let target = (f.q() - 1) as u64;
    for g in f.elements().skip(1) {
        let mut x = g;
        let mut order = 1u64;
        while x != f.one() {
            x = f.mul(x, g).unwrap();
            order += 1;
            if order > target {
                break;
            }
        }
        if order == target {
            return SuiteCheck::ok(name, format!("generator index {}", g.index()));
        }
    }
    SuiteCheck::fail(name, String::from("no generator found"))
}

/// Rank is invariant under row swaps and nonzero row scalings.
fn rank_invariance_check() -> SuiteCheck {
    let name = String::from("rank invariance under row swap/scale");
    let mut g = SplitMix64::new(0x5EED_0001);
    for trial in 0..50 {
        let (p, k) = AXIOM_FIELDS[g.below(4) as usize];
        let f = FieldSpec::make_field(p, k).unwrap();
        let rows = 1 + g.below(5) as usize;
        let cols = 1 + g.below(5) as usize;
        let entries: Vec<FieldElement> = (0..rows * cols)
            .map(|_| f.element(g.below(f.q() as u64) as u32))
            .collect();
        let m = FqMatrix::new(f.clone(), rows, cols, entries.clone()).unwrap();
        let base = matrix_rank(&m);

        let (r1, r2) = (g.below(rows as u64) as usize, g.below(rows as u64) as usize);
        let mut swapped = entries.clone();
        for j in 0..cols {
            swapped.swap(r1 * cols + j, r2 * cols + j);
        }
        let m2 = FqMatrix::new(f.clone(), rows, cols, swapped).unwrap();
        if matrix_rank(&m2) != base {
            return SuiteCheck::fail(name, format!("swap changed rank in trial {trial}"));
        }

        let scale = f.element(1 + g.below((f.q() - 1) as u64) as u32);
        let target = g.below(rows as u64) as usize;
        let mut scaled = entries;
        for j in 0..cols {
            scaled[target * cols + j] = f.mul(scaled[target * cols + j], scale).unwrap();
        }
        let m3 = FqMatrix::new(f, rows, cols, scaled).unwrap();
        if matrix_rank(&m3) != base {
            return SuiteCheck::fail(name, format!("scaling changed rank in trial {trial}"));
        }
    }
    SuiteCheck::ok(name, String::from("50 randomized trials"))
}

/// nullspace_dim(v_1..v_j) + rank(rows) = j.
fn rank_nullity_check() -> SuiteCheck {
    let name = String::from("rank plus nullity");
    let mut g = SplitMix64::new(0x5EED_0002);
    for trial in 0..50 {
        let (p, k) = AXIOM_FIELDS[g.below(4) as usize];
        let f = FieldSpec::make_field(p, k).unwrap();
        let count = g.below(5) as usize;
        let n = 1 + g.below(4) as usize;
        let vectors: Vec<Vec<FieldElement>> = (0..count)
            .map(|_| {
                (0..n)
                    .map(|_| f.element(g.below(f.q() as u64) as u32))
                    .collect()
            })
            .collect();
        let m = FqMatrix::new(f.clone(), count, n, vectors.concat()).unwrap();
        if nullspace_dim(&f, &vectors) + matrix_rank(&m) != count {
            return SuiteCheck::fail(name, format!("identity failed in trial {trial}"));
        }
    }
    SuiteCheck::ok(name, String::from("50 randomized trials"))
}

// ------------------------------------------------------------ indicators

pub fn indicators_suite(budget: u64) -> SuiteReport {
    let mut checks = g_routes_grid(budget);
    checks.extend(t2_rank_grid());
    checks.extend(witness_t_equals_g_battery(20, budget));
    checks.push(negative_control_check());
    SuiteReport {
        suite: "indicators",
        checks,
    }
}

/// The two evaluation routes of G agree on every tuple of every subset with
/// at most 4 points of AG(n,q), n <= 2, q in {2,3,4}, at arity 3.
pub fn g_routes_grid(budget: u64) -> Vec<SuiteCheck> {
    let mut checks = Vec::new();
    for (p, k) in [(2u32, 1u32), (3, 1), (2, 2)] {
        let f = FieldSpec::make_field(p, k).expect("grid fields are valid");
        for n in 1..=2usize {
            let name = format!("G direct = G nullity, q={} n={n}", f.q());
            let all = enumerate_points(n, &f).expect("tiny spaces enumerate");
            let mut sets = 0u64;
            let mut tuples = 0u64;
            let mut skipped = 0u64;
            let mut failure: Option<SuiteCheck> = None;
            for size in 0..=4usize.min(all.len()) {
                for_each_combination(all.len(), size, &mut |subset| {
                    let s = all.subset(subset);
                    if (s.len() as u64).pow(3) > budget {
                        skipped += 1;
                        return true;
                    }
                    match check_g_routes(&s, 3, CheckMode::Exhaustive) {
                        Ok(CheckVerdict::Pass { cases }) => {
                            sets += 1;
                            tuples += cases;
                            true
                        }
                        Ok(v @ CheckVerdict::Fail { .. }) => {
                            failure = Some(SuiteCheck::from_verdict(
                                format!("{name} subset {subset:?}"),
                                &v,
                            ));
                            false
                        }
                        Err(e) => {
                            failure = Some(SuiteCheck::fail(name.clone(), format!("{e}")));
                            false
                        }
                    }
                });
                if failure.is_some() {
                    break;
                }
            }
            checks.push(match failure {
                Some(f) => f,
                // a sweep that dropped subsets is not the exhaustive claim
                None if skipped > 0 => SuiteCheck::fail(
                    name,
                    format!("{skipped} subsets skipped by the tuple budget"),
                ),
                None => SuiteCheck::ok(name, format!("{sets} subsets, {tuples} tuples")),
            });
        }
    }
    checks
}

/// Pair-matrix rank follows |B| - [|B| = 1 mod p] for |B| <= 12 over
/// F_2, F_3, F_5.
pub fn t2_rank_grid() -> Vec<SuiteCheck> {
    let mut checks = Vec::new();
    for (p, k, n) in [(2u32, 1u32, 4usize), (3, 1, 3), (5, 1, 2)] {
        let f = FieldSpec::make_field(p, k).expect("grid fields are valid");
        let name = format!("pair matrix rank formula p={p}");
        let all = enumerate_points(n, &f).expect("tiny spaces enumerate");
        let mut ok = true;
        let mut detail = String::new();
        for b in 1..=12usize {
            let set = all.subset(&(0..b).collect::<Vec<_>>());
            let rank = t2_rank_formula(&set);
            let expected = b - usize::from(b % p as usize == 1);
            if rank != expected {
                ok = false;
                detail = format!("|B|={b}: rank {rank} != {expected}");
                break;
            }
        }
        checks.push(if ok {
            SuiteCheck::ok(name, String::from("|B| = 1..12"))
        } else {
            SuiteCheck::fail(name, detail)
        });
    }
    checks
}

/// Deterministic parameter/seed list that yields `count` verified m-general
/// sets with the parity condition, from greedy growth.
pub fn m_general_witnesses(count: usize) -> Vec<(PointSet, u32)> {
    let params: [(u32, u32, u32); 7] = [
        (2, 3, 3),
        (3, 3, 3),
        (2, 5, 3),
        (3, 2, 4),
        (4, 2, 4),
        (2, 7, 3),
        (2, 9, 3),
    ];
    let mut out = Vec::new();
    let mut seed = 1u64;
    'outer: loop {
        for &(n, q, m) in &params {
            let r = greedy_m_general(n, q, m, seed, 3).expect("witness parameters are valid");
            assert!(is_m_general(&r.witness, m as usize));
            out.push((r.witness, m));
            if out.len() == count {
                break 'outer;
            }
        }
        seed += 1;
    }
    out
}

/// T = G holds exhaustively on greedy-grown, independently verified
/// m-general sets.
pub fn witness_t_equals_g_battery(count: usize, budget: u64) -> Vec<SuiteCheck> {
    let mut checks = Vec::new();
    for (i, (witness, m)) in m_general_witnesses(count).into_iter().enumerate() {
        let name = format!(
            "T = G on m-general witness {i} (q={} n={} m={m} size={})",
            witness.field().q(),
            witness.dim(),
            witness.len()
        );
        if (witness.len() as u128).pow(m) > budget as u128 {
            checks.push(SuiteCheck::fail(
                name,
                String::from("tuple budget exceeded"),
            ));
            continue;
        }
        match check_t_equals_g(&witness, m as usize, CheckMode::Exhaustive) {
            Ok(v) => checks.push(SuiteCheck::from_verdict(name, &v)),
            Err(e) => checks.push(SuiteCheck::fail(name, format!("{e}"))),
        }
    }
    checks
}

/// Negative control: a set with a collinear triple must produce a
/// counterexample with T = 1 and G = 0.
fn negative_control_check() -> SuiteCheck {
    let name = String::from("T != G detected on a non-general set");
    let f = FieldSpec::make_field(3, 1).expect("F_3 exists");
    let all = enumerate_points(2, &f).expect("9 points");
    // (0,0), (1,1), (2,2) are collinear
    let s = all.subset(&[0, 4, 8, 1]);
    match check_t_equals_g(&s, 3, CheckMode::Exhaustive) {
        Ok(CheckVerdict::Fail { lhs, rhs, .. }) if lhs.index() == 1 && rhs.index() == 0 => {
            SuiteCheck::ok(name, String::from("counterexample found as expected"))
        }
        other => SuiteCheck::fail(name, format!("unexpected outcome {other:?}")),
    }
}

// ----------------------------------------------------------------- char2

pub fn char2_suite(budget: u64) -> SuiteReport {
    let mut checks = char2_grid(budget);
    checks.push(char2_wrong_characteristic_check());
    checks.push(char2_extension_field_check(budget));
    SuiteReport {
        suite: "char2",
        checks,
    }
}

/// The odd-arity collapse holds exhaustively for every S with at most 4
/// points of AG(n,2), n <= 3, at arities 3 and 5.
pub fn char2_grid(budget: u64) -> Vec<SuiteCheck> {
    let f = FieldSpec::make_field(2, 1).expect("F_2 exists");
    let mut checks = Vec::new();
    for n in 1..=3usize {
        let all = enumerate_points(n, &f).expect("tiny spaces enumerate");
        for k_half in [1usize, 2] {
            let name = format!("char-2 collapse n={n} arity={}", 2 * k_half + 1);
            let mut sets = 0u64;
            let mut skipped = 0u64;
            let mut failure: Option<SuiteCheck> = None;
            for size in 0..=4usize.min(all.len()) {
                for_each_combination(all.len(), size, &mut |subset| {
                    let s = all.subset(subset);
                    if (s.len() as u128).pow(2 * k_half as u32 + 1) > budget as u128 {
                        skipped += 1;
                        return true;
                    }
                    match char2_odd_identity(&s, k_half) {
                        Ok(CheckVerdict::Pass { .. }) => {
                            sets += 1;
                            true
                        }
                        Ok(v @ CheckVerdict::Fail { .. }) => {
                            failure = Some(SuiteCheck::from_verdict(
                                format!("{name} subset {subset:?}"),
                                &v,
                            ));
                            false
                        }
                        Err(e) => {
                            failure = Some(SuiteCheck::fail(name.clone(), format!("{e}")));
                            false
                        }
                    }
                });
                if failure.is_some() {
                    break;
                }
            }
            checks.push(match failure {
                Some(f) => f,
                None if skipped > 0 => SuiteCheck::fail(
                    name,
                    format!("{skipped} subsets skipped by the tuple budget"),
                ),
                None => SuiteCheck::ok(name, format!("{sets} subsets")),
            });
        }
    }
    checks
}

fn char2_wrong_characteristic_check() -> SuiteCheck {
    let name = String::from("char-2 collapse refuses odd characteristic");
    let f = FieldSpec::make_field(3, 1).expect("F_3 exists");
    let all = enumerate_points(1, &f).expect("3 points");
    match char2_odd_identity(&all, 1) {
        Err(crate::indicator::IndicatorError::WrongCharacteristic { p: 3 }) => {
            SuiteCheck::ok(name, String::from("rejected as expected"))
        }
        other => SuiteCheck::fail(name, format!("unexpected outcome {other:?}")),
    }
}

/// The collapse is about characteristic, not field size: it holds over F_4.
fn char2_extension_field_check(budget: u64) -> SuiteCheck {
    let name = String::from("char-2 collapse over F_4");
    let f = FieldSpec::make_field(2, 2).expect("F_4 exists");
    let all = enumerate_points(1, &f).expect("4 points");
    if (all.len() as u128).pow(3) > budget as u128 {
        return SuiteCheck::fail(name, String::from("tuple budget exceeded"));
    }
    match char2_odd_identity(&all, 1) {
        Ok(v) => SuiteCheck::from_verdict(name, &v),
        Err(e) => SuiteCheck::fail(name, format!("{e}")),
    }
}

// ---------------------------------------------------------------- lambda

pub fn lambda_suite() -> SuiteReport {
    let mut checks = vec![lambda_brute_grid()];
    checks.push(lambda_symmetry_check());
    checks.push(lambda_monotonicity_check());
    checks.push(saddle_dominance_check(200));
    checks.push(rank_bound_consistency_check());
    SuiteReport {
        suite: "lambda",
        checks,
    }
}

fn lambda_brute(alpha: u64, beta: u64, gamma: u64) -> u64 {
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

/// Generating-function counts agree with direct enumeration for all
/// alpha <= 5, beta <= 4, gamma <= alpha*beta.
pub fn lambda_brute_grid() -> SuiteCheck {
    let name = String::from("tuple counts match brute-force enumeration");
    let mut cases = 0u64;
    for alpha in 1..=5u64 {
        for beta in 0..=4u64 {
            for gamma in 0..=alpha * beta {
                let q = LambdaQuery::new(alpha, beta, gamma).expect("alpha >= 1");
                let exact = lambda_exact(&q);
                let brute = lambda_brute(alpha, beta, gamma);
                if exact != BigUint::from(brute) {
                    return SuiteCheck::fail(
                        name,
                        format!("({alpha},{beta},{gamma}): {exact} != {brute}"),
                    );
                }
                cases += 1;
            }
        }
    }
    SuiteCheck::ok(name, format!("{cases} queries"))
}

/// Complement bijection: Lambda(a,b,g) + Lambda(a,b,ab-g-1) = (b+1)^a.
fn lambda_symmetry_check() -> SuiteCheck {
    let name = String::from("complement symmetry");
    for alpha in 1..=5u64 {
        for beta in 1..=4u64 {
            for gamma in 0..alpha * beta {
                let lhs = lambda_exact(&LambdaQuery::new(alpha, beta, gamma).unwrap())
                    + lambda_exact(
                        &LambdaQuery::new(alpha, beta, alpha * beta - gamma - 1).unwrap(),
                    );
                if lhs != BigUint::from(beta + 1).pow(alpha as u32) {
                    return SuiteCheck::fail(name, format!("failed at ({alpha},{beta},{gamma})"));
                }
            }
        }
    }
    SuiteCheck::ok(name, String::from("alpha <= 5, beta <= 4"))
}

fn lambda_monotonicity_check() -> SuiteCheck {
    let name = String::from("monotone in gamma and beta");
    for alpha in 1..=4u64 {
        for beta in 0..=4u64 {
            for gamma in 0..=alpha * beta {
                let base = lambda_exact(&LambdaQuery::new(alpha, beta, gamma).unwrap());
                if lambda_exact(&LambdaQuery::new(alpha, beta, gamma + 1).unwrap()) < base
                    || lambda_exact(&LambdaQuery::new(alpha, beta + 1, gamma).unwrap()) < base
                {
                    return SuiteCheck::fail(name, format!("failed at ({alpha},{beta},{gamma})"));
                }
            }
        }
    }
    SuiteCheck::ok(name, String::from("alpha <= 4, beta <= 4"))
}

/// The saddle estimate dominates the exact count on seeded random queries.
pub fn saddle_dominance_check(trials: u64) -> SuiteCheck {
    let name = String::from("saddle estimate dominates exact count");
    let mut g = SplitMix64::new(0x5ADD1E);
    for _ in 0..trials {
        let alpha = 1 + g.below(8);
        let beta = g.below(9);
        let gamma = g.below(alpha * beta + 1);
        let t = (1 + g.below(998)) as f64 / 1000.0;
        let q = LambdaQuery::new(alpha, beta, gamma).unwrap();
        let exact = lambda_exact(&q).to_f64().unwrap_or(f64::INFINITY);
        let bound = saddle_bound(&q, t).expect("t is in (0,1)");
        if bound * (1.0 + 1e-12) < exact {
            return SuiteCheck::fail(
                name,
                format!("({alpha},{beta},{gamma}) at t={t}: {bound} < {exact}"),
            );
        }
    }
    SuiteCheck::ok(name, format!("{trials} randomized queries"))
}

/// The exact integer rank bound never exceeds m times the minimized
/// analytic base to the n-th power.
fn rank_bound_consistency_check() -> SuiteCheck {
    let name = String::from("integer rank bound below analytic bound");
    let mut g = SplitMix64::new(0x5ADD2E);
    for _ in 0..100 {
        let m = 3 + g.below(6) as u32;
        let q = [2u32, 3, 4, 5, 7, 8, 9][g.below(7) as usize];
        let n = 1 + g.below(12) as u32;
        let exact = g_rank_upper_bound(n, q, m)
            .unwrap()
            .to_f64()
            .unwrap_or(f64::INFINITY);
        let (_, h_min) = minimize_h(m, q, DEFAULT_TOL).unwrap();
        let analytic = m as f64 * libm::pow(h_min, n as f64);
        if analytic * (1.0 + 1e-9) < exact {
            return SuiteCheck::fail(name, format!("({n},{q},{m}): {analytic} < {exact}"));
        }
    }
    SuiteCheck::ok(name, String::from("100 randomized parameter triples"))
}

// -------------------------------------------------------------- analysis

const ANALYSIS_QS: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

pub fn analysis_suite() -> SuiteReport {
    let mut checks = vec![bracket_grid()];
    checks.push(convexity_grid());
    checks.push(derivative_window_check());
    checks.push(mu_monotonicity_check());
    checks.push(leading_order_check());
    SuiteReport {
        suite: "analysis",
        checks,
    }
}

/// Sign bracket (-, +) for the critical polynomial across the table grid.
pub fn bracket_grid() -> SuiteCheck {
    let name = String::from("critical polynomial sign bracket");
    for m in 3..=12u32 {
        for q in ANALYSIS_QS {
            if q % 2 == 0 && m % 2 == 1 {
                continue;
            }
            let lo = (q as f64 - 1.0) / (q as f64 + m as f64 - 1.0);
            if !(r_q(m, q, lo) < 0.0) || !(r_q(m, q, 1.0 - 1e-6) > 0.0) {
                return SuiteCheck::fail(name, format!("bracket failed at m={m} q={q}"));
            }
        }
    }
    SuiteCheck::ok(name, String::from("m = 3..12 across the table grid"))
}

/// Nonnegative second differences of h on a 1000-point grid of (0.01, 0.99).
pub fn convexity_grid() -> SuiteCheck {
    let name = String::from("h convex on (0.01, 0.99)");
    const POINTS: usize = 1000;
    let step = 0.98 / (POINTS + 1) as f64;
    for m in 3..=12u32 {
        for q in ANALYSIS_QS {
            if q % 2 == 0 && m % 2 == 1 {
                continue;
            }
            let mut prev2 = h_q(m, q, 0.01).expect("in range");
            let mut prev1 = h_q(m, q, 0.01 + step).expect("in range");
            for i in 2..POINTS + 2 {
                let x = 0.01 + step * i as f64;
                let cur = h_q(m, q, x).expect("in range");
                let second = prev2 - 2.0 * prev1 + cur;
                if second < -1e-9 * libm::fabs(prev1).max(1.0) {
                    return SuiteCheck::fail(
                        name,
                        format!("negative second difference at m={m} q={q} x={x}"),
                    );
                }
                prev2 = prev1;
                prev1 = cur;
            }
        }
    }
    SuiteCheck::ok(name, String::from("1000-point grid, m = 3..12"))
}

/// The fixed-point equation has derivative strictly inside (0.25, 1).
pub fn derivative_window_check() -> SuiteCheck {
    let name = String::from("fixed-point derivative window (0.25, 1)");
    for m in 3..=8u32 {
        for i in 1..=1000usize {
            let x = i as f64 / 1001.0;
            let d = alpha_equation_derivative(m, x);
            if !(d > 0.25 && d < 1.0) {
                return SuiteCheck::fail(name, format!("f'({x}) = {d} at m={m}"));
            }
        }
    }
    SuiteCheck::ok(name, String::from("1000-point grid, m = 3..8"))
}

/// Growth exponents decrease in m and increase in q across the table grid.
pub fn mu_monotonicity_check() -> SuiteCheck {
    let name = String::from("growth exponent monotone in m and q");
    let qs = [2u32, 3, 4, 5, 7, 8, 9, 11];
    let mut mus = [[None::<f64>; 8]; 6];
    for (mi, m) in (3..=8u32).enumerate() {
        for (qi, &q) in qs.iter().enumerate() {
            if q % 2 == 1 || m % 2 == 0 {
                mus[mi][qi] = Some(mu_upper(m, q).expect("grid cells are valid"));
            }
        }
    }
    for mi in 0..6 {
        let filled: Vec<f64> = mus[mi].iter().flatten().copied().collect();
        for w in filled.windows(2) {
            if !(w[0] < w[1]) {
                return SuiteCheck::fail(name, format!("not increasing in q at m={}", mi + 3));
            }
        }
    }
    for qi in 0..8 {
        let filled: Vec<f64> = (0..6).filter_map(|mi| mus[mi][qi]).collect();
        for w in filled.windows(2) {
            if !(w[0] > w[1]) {
                return SuiteCheck::fail(name, format!("not decreasing in m at q={}", qs[qi]));
            }
        }
    }
    SuiteCheck::ok(name, String::from("full table grid"))
}

/// h_min(m,q)/q approaches the reciprocal asymptotic base at rate 5/q.
pub fn leading_order_check() -> SuiteCheck {
    let name = String::from("leading-order coefficient of h_min");
    for q in [101u32, 1009] {
        for m in 3..=8u32 {
            let (_, h_min) = minimize_h(m, q, DEFAULT_TOL).expect("bracket holds");
            let alpha = solve_alpha(m, DEFAULT_TOL);
            let mf = m as f64;
            let lead = mf * libm::exp(1.0 - alpha / mf) / (mf * mf - alpha * mf + alpha);
            let err = libm::fabs(h_min / q as f64 - lead);
            if err > 5.0 / q as f64 {
                return SuiteCheck::fail(
                    name,
                    format!("m={m} q={q}: error {err} > {}", 5.0 / q as f64),
                );
            }
        }
    }
    SuiteCheck::ok(name, String::from("q in {101, 1009}, m = 3..8"))
}
