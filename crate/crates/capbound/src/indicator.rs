//! The tuple indicator functions on a point set S: the distinctness
//! indicator T (1 exactly when all m arguments differ) and the polynomial G
//! that counts, modulo the characteristic, the coefficient tuples
//! annihilating the difference vectors of its arguments. On an m-general set
//! the two coincide; this module provides both of G's evaluation routes (the
//! literal polynomial and the nullity characterization), equality checkers,
//! the pair-matrix rank base case, and the characteristic-2 collapse of the
//! odd-arity indicator.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::{matrix_rank, rank_idx, FieldElement, FqMatrix};
use crate::geometry::{Point, PointSet};
use crate::rng::SplitMix64;

/// Cap on elementary evaluations (tuples, or brackets for the direct route).
pub const EVAL_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndicatorError {
    /// An argument point does not belong to the domain set S.
    NotInDomain,
    /// The requested sweep exceeds [`EVAL_BUDGET`].
    BudgetExceeded { needed: u128, cap: u64 },
    /// The identity only holds in characteristic 2.
    WrongCharacteristic { p: u32 },
    /// The matrix flattening bound is only defined for 2-variable tables.
    ArityUnsupported { arity: usize },
}

impl fmt::Display for IndicatorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndicatorError::NotInDomain => write!(f, "argument point is not in the domain set"),
            IndicatorError::BudgetExceeded { needed, cap } => {
                write!(f, "{needed} evaluations exceed the budget of {cap}")
            }
            IndicatorError::WrongCharacteristic { p } => {
                write!(
                    f,
                    "identity requires characteristic 2, field has characteristic {p}"
                )
            }
            IndicatorError::ArityUnsupported { arity } => {
                write!(
                    f,
                    "matrix rank bound needs arity 2, table has arity {arity}"
                )
            }
        }
    }
}

impl core::error::Error for IndicatorError {}

/// Verdict of an equality sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckVerdict {
    Pass {
        cases: u64,
    },
    /// First counterexample, as indices into the domain set.
    Fail {
        tuple: Vec<usize>,
        lhs: FieldElement,
        rhs: FieldElement,
    },
}

impl CheckVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, CheckVerdict::Pass { .. })
    }
}

/// How an equality check walks the tuple space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    /// Every tuple in S^m, lexicographic order.
    Exhaustive,
    /// `count` pseudorandom tuples from the seeded generator (splitmix64).
    Sampled { count: u64, seed: u64 },
}

/// Dense value table of a k-variable function on S^k.
#[derive(Debug, Clone)]
pub struct FunctionTable {
    domain: PointSet,
    arity: usize,
    values: Vec<FieldElement>,
}

impl FunctionTable {
    /// Tabulates f over all |S|^arity index tuples (first index most
    /// significant in the storage order).
    pub fn tabulate(
        domain: &PointSet,
        arity: usize,
        mut f: impl FnMut(&[usize]) -> FieldElement,
    ) -> Result<FunctionTable, IndicatorError> {
        assert!(arity >= 1, "arity must be at least 1");
        let needed = (domain.len() as u128)
            .checked_pow(arity as u32)
            .unwrap_or(u128::MAX);
        if needed > EVAL_BUDGET as u128 {
            return Err(IndicatorError::BudgetExceeded {
                needed,
                cap: EVAL_BUDGET,
            });
        }
        let mut values = Vec::with_capacity(needed as usize);
        for_each_tuple(domain.len(), arity, &mut |t| {
            values.push(f(t));
            true
        });
        Ok(FunctionTable {
            domain: domain.clone(),
            arity,
            values,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn domain(&self) -> &PointSet {
        &self.domain
    }

    pub fn value(&self, tuple: &[usize]) -> FieldElement {
        assert_eq!(tuple.len(), self.arity);
        let n = self.domain.len();
        let mut idx = 0usize;
        for &t in tuple {
            assert!(t < n);
            idx = idx * n + t;
        }
        self.values[idx]
    }

    /// True iff the table is invariant under every permutation of its
    /// arguments (checked exhaustively; meant for tiny domains).
    pub fn is_symmetric(&self) -> bool {
        let n = self.domain.len();
        let mut ok = true;
        for_each_tuple(n, self.arity, &mut |t| {
            let v = self.value(t);
            // compare against all single swaps; swaps generate the full group
            let mut s = t.to_vec();
            for i in 0..self.arity {
                for j in i + 1..self.arity {
                    s.swap(i, j);
                    if self.value(&s) != v {
                        ok = false;
                        return false;
                    }
                    s.swap(i, j);
                }
            }
            true
        });
        ok
    }
}

/// Resolves argument points to indices in S.
fn resolve(s: &PointSet, xs: &[&Point]) -> Result<Vec<usize>, IndicatorError> {
    xs.iter()
        .map(|p| s.index_of(p).ok_or(IndicatorError::NotInDomain))
        .collect()
}

/// T on an index tuple: 1 if all entries are pairwise distinct, else 0.
pub(crate) fn eval_t_idx(s: &PointSet, tuple: &[usize]) -> FieldElement {
    for i in 0..tuple.len() {
        for j in i + 1..tuple.len() {
            if tuple[i] == tuple[j] {
                return s.field().zero();
            }
        }
    }
    s.field().one()
}

/// The distinctness indicator: 1 in F_q iff all m argument points are
/// pairwise distinct. A single argument is vacuously distinct.
pub fn eval_t(s: &PointSet, xs: &[&Point]) -> Result<FieldElement, IndicatorError> {
    let tuple = resolve(s, xs)?;
    Ok(eval_t_idx(s, &tuple))
}

/// G via its nullity characterization: with d the dimension of the space of
/// coefficient tuples annihilating {x_i - x_m}, the value is q^d mod p
/// embedded in F_q, i.e. 1 exactly when the differences are independent.
pub(crate) fn eval_g_rank_idx(s: &PointSet, tuple: &[usize]) -> FieldElement {
    let field = s.field();
    let m = tuple.len();
    let n = s.dim();
    if m == 1 {
        return field.one(); // no difference vectors, zero-dimensional nullspace
    }
    let last = s.point(tuple[m - 1]);
    let mut rows = Vec::with_capacity((m - 1) * n);
    for &i in &tuple[..m - 1] {
        let p = s.point(i);
        for j in 0..n {
            rows.push(field.idx_sub(p.coord(j).index(), last.coord(j).index()));
        }
    }
    let rank = rank_idx(field, m - 1, n, &mut rows);
    let d = (m - 1 - rank) as u64;
    let residue = pow_mod(field.q() as u64 % field.p() as u64, d, field.p() as u64);
    field.element(residue as u32)
}

/// See [`eval_g_rank_idx`]; arguments are points of S.
pub fn eval_g_rank(s: &PointSet, xs: &[&Point]) -> Result<FieldElement, IndicatorError> {
    let tuple = resolve(s, xs)?;
    Ok(eval_g_rank_idx(s, &tuple))
}

/// G by literal evaluation of its defining polynomial:
/// sum over (t_1..t_{m-1}) in F_q^{m-1} of
/// prod_{j=1}^n [1 - (sum_i t_i (x_ij - x_mj))^{q-1}].
pub(crate) fn eval_g_direct_idx(
    s: &PointSet,
    tuple: &[usize],
) -> Result<FieldElement, IndicatorError> {
    let field = s.field();
    let q = field.q();
    let m = tuple.len();
    let n = s.dim();
    let needed = (q as u128)
        .checked_pow(m as u32 - 1)
        .and_then(|t| t.checked_mul(n as u128))
        .unwrap_or(u128::MAX);
    if needed > EVAL_BUDGET as u128 {
        return Err(IndicatorError::BudgetExceeded {
            needed,
            cap: EVAL_BUDGET,
        });
    }

    let last = s.point(tuple[m - 1]);
    // difference vectors, row per t-coefficient
    let mut diffs = Vec::with_capacity((m - 1) * n);
    for &i in &tuple[..m - 1] {
        let p = s.point(i);
        for j in 0..n {
            diffs.push(field.idx_sub(p.coord(j).index(), last.coord(j).index()));
        }
    }

    let one = 1u32;
    let mut acc = 0u32; // running sum, as an element index
    let mut t = vec![0u32; m - 1];
    loop {
        // product over coordinates of 1 - (t . column_j)^(q-1)
        let mut prod = one;
        for j in 0..n {
            let mut dot = 0u32;
            for (i, &ti) in t.iter().enumerate() {
                dot = field.idx_add(dot, field.idx_mul(ti, diffs[i * n + j]));
            }
            let bracket = field.idx_sub(one, field.idx_pow(dot, (q - 1) as u64));
            prod = field.idx_mul(prod, bracket);
        }
        acc = field.idx_add(acc, prod);

        // odometer over F_q^(m-1); empty tuple space runs exactly once
        let mut i = t.len();
        loop {
            if i == 0 {
                return Ok(field.element(acc));
            }
            i -= 1;
            t[i] += 1;
            if t[i] < q {
                break;
            }
            t[i] = 0;
        }
    }
}

/// See [`eval_g_direct_idx`]; arguments are points of S.
pub fn eval_g_direct(s: &PointSet, xs: &[&Point]) -> Result<FieldElement, IndicatorError> {
    let tuple = resolve(s, xs)?;
    eval_g_direct_idx(s, &tuple)
}

/// Compares T against G (nullity route) on tuples of S^m. Expected to pass
/// exactly when S is m-general; on other sets it reports the first
/// counterexample in lexicographic tuple order.
pub fn check_t_equals_g(
    s: &PointSet,
    m: usize,
    mode: CheckMode,
) -> Result<CheckVerdict, IndicatorError> {
    sweep(s, m, mode, |set, tuple| {
        (eval_t_idx(set, tuple), Ok(eval_g_rank_idx(set, tuple)))
    })
}

/// Compares the two evaluation routes of G on tuples of S^m; they must agree
/// on every tuple of every set.
pub fn check_g_routes(
    s: &PointSet,
    m: usize,
    mode: CheckMode,
) -> Result<CheckVerdict, IndicatorError> {
    sweep(s, m, mode, |set, tuple| {
        (eval_g_rank_idx(set, tuple), eval_g_direct_idx(set, tuple))
    })
}

fn sweep(
    s: &PointSet,
    m: usize,
    mode: CheckMode,
    mut pair: impl FnMut(&PointSet, &[usize]) -> (FieldElement, Result<FieldElement, IndicatorError>),
) -> Result<CheckVerdict, IndicatorError> {
    assert!(m >= 1);
    match mode {
        CheckMode::Exhaustive => {
            let needed = (s.len() as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
            if needed > EVAL_BUDGET as u128 {
                return Err(IndicatorError::BudgetExceeded {
                    needed,
                    cap: EVAL_BUDGET,
                });
            }
            let mut cases = 0u64;
            let mut failure: Option<CheckVerdict> = None;
            let mut inner_err: Option<IndicatorError> = None;
            for_each_tuple(s.len(), m, &mut |tuple| {
                let (lhs, rhs) = pair(s, tuple);
                match rhs {
                    Ok(rhs) if rhs == lhs => {
                        cases += 1;
                        true
                    }
                    Ok(rhs) => {
                        failure = Some(CheckVerdict::Fail {
                            tuple: tuple.to_vec(),
                            lhs,
                            rhs,
                        });
                        false
                    }
                    Err(e) => {
                        inner_err = Some(e);
                        false
                    }
                }
            });
            if let Some(e) = inner_err {
                return Err(e);
            }
            Ok(failure.unwrap_or(CheckVerdict::Pass { cases }))
        }
        CheckMode::Sampled { count, seed } => {
            if s.is_empty() {
                return Ok(CheckVerdict::Pass { cases: 0 });
            }
            let mut g = SplitMix64::new(seed);
            let mut tuple = vec![0usize; m];
            for _ in 0..count {
                for slot in tuple.iter_mut() {
                    *slot = g.below(s.len() as u64) as usize;
                }
                let (lhs, rhs) = pair(s, &tuple);
                let rhs = rhs?;
                if lhs != rhs {
                    return Ok(CheckVerdict::Fail { tuple, lhs, rhs });
                }
            }
            Ok(CheckVerdict::Pass { cases: count })
        }
    }
}

/// Rank of the |B| x |B| matrix of pair-distinctness values (zeros on the
/// diagonal, ones elsewhere). The result always equals |B| minus one exactly
/// when |B| = 1 mod p, which is asserted before returning.
pub fn t2_rank_formula(b: &PointSet) -> usize {
    let field = b.field().clone();
    let n = b.len();
    let m = FqMatrix::from_fn(field.clone(), n, n, |i, j| {
        if i == j {
            field.zero()
        } else {
            field.one()
        }
    })
    .expect("entries built from the matrix field");
    let rank = matrix_rank(&m);
    let expected = n - usize::from(n % field.p() as usize == 1);
    assert_eq!(
        rank, expected,
        "pair matrix rank must follow the mod-p formula"
    );
    rank
}

/// Exhaustively verifies, over S^(2k+1) in characteristic 2, that the odd
/// distinctness indicator collapses to the sum of its even restrictions:
/// T_{2k+1}(x_1..x_{2k+1}) = sum_i T_{2k}(x_1..omit x_i..x_{2k+1}).
pub fn char2_odd_identity(s: &PointSet, k_half: usize) -> Result<CheckVerdict, IndicatorError> {
    assert!(k_half >= 1, "identity is about arity 2k+1 with k >= 1");
    let field = s.field();
    if field.p() != 2 {
        return Err(IndicatorError::WrongCharacteristic { p: field.p() });
    }
    let m = 2 * k_half + 1;
    let needed = (s.len() as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if needed > EVAL_BUDGET as u128 {
        return Err(IndicatorError::BudgetExceeded {
            needed,
            cap: EVAL_BUDGET,
        });
    }
    let mut cases = 0u64;
    let mut failure: Option<CheckVerdict> = None;
    let mut omitted = vec![0usize; m - 1];
    for_each_tuple(s.len(), m, &mut |tuple| {
        let lhs = eval_t_idx(s, tuple);
        let mut rhs = field.zero();
        for omit in 0..m {
            let mut w = 0;
            for (r, &t) in tuple.iter().enumerate() {
                if r != omit {
                    omitted[w] = t;
                    w += 1;
                }
            }
            rhs = field
                .add(rhs, eval_t_idx(s, &omitted))
                .expect("values share the domain field");
        }
        if lhs == rhs {
            cases += 1;
            true
        } else {
            failure = Some(CheckVerdict::Fail {
                tuple: tuple.to_vec(),
                lhs,
                rhs,
            });
            false
        }
    });
    Ok(failure.unwrap_or(CheckVerdict::Pass { cases }))
}

/// Rank of the value matrix of a 2-variable table: a certified lower bound
/// for the table's 2-rank.
pub fn flatten_rank_lower_bound(t: &FunctionTable) -> Result<usize, IndicatorError> {
    if t.arity != 2 {
        return Err(IndicatorError::ArityUnsupported { arity: t.arity });
    }
    let n = t.domain.len();
    let field = t.domain.field().clone();
    let m = FqMatrix::new(field, n, n, t.values.clone()).expect("table values share the field");
    Ok(matrix_rank(&m))
}

/// Visits all len-tuples over {0..base} in lexicographic order (last slot
/// fastest). The callback returns false to stop early.
pub(crate) fn for_each_tuple(
    base: usize,
    len: usize,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if len == 0 {
        return visit(&[]);
    }
    if base == 0 {
        return true;
    }
    let mut t = vec![0usize; len];
    loop {
        if !visit(&t) {
            return false;
        }
        let mut i = len;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            t[i] += 1;
            if t[i] < base {
                break;
            }
            t[i] = 0;
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    let mut b = base % modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % modulus;
        }
        b = b * b % modulus;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::geometry::{enumerate_points, is_m_general};

    fn plane_f3() -> PointSet {
        enumerate_points(2, &FieldSpec::make_field(3, 1).unwrap()).unwrap()
    }

    fn set_from(all: &PointSet, coords: &[[u32; 2]]) -> PointSet {
        PointSet::new(
            all.field().clone(),
            2,
            coords
                .iter()
                .map(|c| all.point_from_indices(c).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn t_examples() {
        let all = plane_f3();
        let x = all.point(0);
        let y = all.point(4);
        assert!(eval_t(&all, &[x, x, y]).unwrap().is_zero());
        let z = all.point(7);
        assert_eq!(eval_t(&all, &[x, y, z]).unwrap(), all.field().one());
        assert_eq!(eval_t(&all, &[x]).unwrap(), all.field().one());
    }

    #[test]
    fn not_in_domain() {
        let all = plane_f3();
        let s = set_from(&all, &[[0, 0], [1, 0]]);
        let outside = all.point_from_indices(&[2, 2]).unwrap();
        assert_eq!(
            eval_t(&s, &[&outside, s.point(0), s.point(1)]).unwrap_err(),
            IndicatorError::NotInDomain
        );
    }

    #[test]
    fn g_rank_examples() {
        let all = plane_f3();
        let f = all.field();
        // affinely independent triple
        let a = all.point_from_indices(&[0, 0]).unwrap();
        let b = all.point_from_indices(&[1, 0]).unwrap();
        let c = all.point_from_indices(&[0, 1]).unwrap();
        assert_eq!(eval_g_rank(&all, &[&a, &b, &c]).unwrap(), f.one());
        // collinear distinct triple: nullity 1, q^1 = 0 mod 3
        let d = all.point_from_indices(&[1, 1]).unwrap();
        let e = all.point_from_indices(&[2, 2]).unwrap();
        assert!(eval_g_rank(&all, &[&a, &d, &e]).unwrap().is_zero());
    }

    #[test]
    fn g_rank_equal_points_char2() {
        // two equal points over F_2, n = 2: nullity 1, so 2 mod 2 = 0
        let f2 = FieldSpec::make_field(2, 1).unwrap();
        let all = enumerate_points(2, &f2).unwrap();
        let a = all.point(3);
        assert!(eval_g_rank(&all, &[a, a]).unwrap().is_zero());
    }

    #[test]
    fn g_direct_matches_rank_route_on_plane() {
        let all = plane_f3();
        match check_g_routes(&all, 3, CheckMode::Exhaustive).unwrap() {
            CheckVerdict::Pass { cases } => assert_eq!(cases, 729),
            CheckVerdict::Fail { tuple, lhs, rhs } => {
                panic!("routes disagree at {tuple:?}: {lhs:?} vs {rhs:?}")
            }
        }
    }

    #[test]
    fn g_routes_agree_over_f5_exhaustively() {
        let f5 = FieldSpec::make_field(5, 1).unwrap();
        let line = enumerate_points(1, &f5).unwrap();
        // every subset of up to 4 points of AG(1,5), arities 2 and 3
        for size in 1..=4usize {
            crate::geometry::for_each_combination(line.len(), size, &mut |subset| {
                let s = line.subset(subset);
                for m in 2..=3 {
                    assert!(
                        check_g_routes(&s, m, CheckMode::Exhaustive).unwrap().passed(),
                        "disagreement on subset {subset:?} at arity {m}"
                    );
                }
                true
            });
        }
    }

    #[test]
    fn g_routes_agree_sampled_on_larger_fields() {
        // beyond the exhaustive grid: seeded random tuples over F_9 and F_7
        for (p, k, n) in [(3u32, 2u32, 2usize), (7, 1, 2)] {
            let f = FieldSpec::make_field(p, k).unwrap();
            let all = enumerate_points(n, &f).unwrap();
            let verdict =
                check_g_routes(&all, 3, CheckMode::Sampled { count: 150, seed: 0xD1CE }).unwrap();
            assert!(verdict.passed(), "q={} mismatch: {verdict:?}", f.q());
        }
    }

    #[test]
    fn g_direct_duplicate_argument_counts_annihilators() {
        let all = plane_f3();
        let a = all.point_from_indices(&[0, 0]).unwrap();
        let b = all.point_from_indices(&[1, 0]).unwrap();
        // x_1 = x_3: differences {0, b-a}; nullity 1 so the count is q = 3 = 0 mod 3
        let direct = eval_g_direct(&all, &[&a, &b, &a]).unwrap();
        assert!(direct.is_zero());
        assert_eq!(direct, eval_g_rank(&all, &[&a, &b, &a]).unwrap());
    }

    #[test]
    fn t_equals_g_on_cap() {
        let all = plane_f3();
        let cap = set_from(&all, &[[0, 0], [1, 0], [0, 1], [1, 1]]);
        assert!(is_m_general(&cap, 3));
        match check_t_equals_g(&cap, 3, CheckMode::Exhaustive).unwrap() {
            CheckVerdict::Pass { cases } => assert_eq!(cases, 64),
            other => panic!("expected pass, got {other:?}"),
        }
    }

    #[test]
    fn t_differs_from_g_on_collinear_set() {
        let all = plane_f3();
        let s = set_from(&all, &[[0, 0], [1, 1], [2, 2], [0, 1]]);
        assert!(!is_m_general(&s, 3));
        match check_t_equals_g(&s, 3, CheckMode::Exhaustive).unwrap() {
            CheckVerdict::Fail { tuple, lhs, rhs } => {
                // first failing tuple is the collinear triple (0,1,2)
                assert_eq!(tuple, vec![0, 1, 2]);
                assert_eq!(lhs, all.field().one());
                assert!(rhs.is_zero());
            }
            other => panic!("expected fail, got {other:?}"),
        }
    }

    #[test]
    fn t_equals_g_tiny_sets_pass() {
        let all = plane_f3();
        let empty = PointSet::empty(all.field().clone(), 2).unwrap();
        assert!(check_t_equals_g(&empty, 3, CheckMode::Exhaustive)
            .unwrap()
            .passed());
        let single = set_from(&all, &[[2, 1]]);
        assert!(check_t_equals_g(&single, 3, CheckMode::Exhaustive)
            .unwrap()
            .passed());
    }

    #[test]
    fn sampled_mode_is_deterministic() {
        let all = plane_f3();
        let a = check_t_equals_g(&all, 3, CheckMode::Sampled { count: 50, seed: 9 }).unwrap();
        let b = check_t_equals_g(&all, 3, CheckMode::Sampled { count: 50, seed: 9 }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn t2_rank_examples() {
        let all = plane_f3();
        assert_eq!(
            t2_rank_formula(&set_from(&all, &[[0, 0], [1, 0], [0, 1], [1, 1]])),
            3
        );
        assert_eq!(
            t2_rank_formula(&set_from(&all, &[[0, 0], [1, 0], [0, 1]])),
            3
        );
        assert_eq!(t2_rank_formula(&set_from(&all, &[[0, 0]])), 0);
    }

    #[test]
    fn char2_identity_examples() {
        let f2 = FieldSpec::make_field(2, 1).unwrap();
        let all2 = enumerate_points(2, &f2).unwrap();
        let s = all2.subset(&[0, 1, 2]);
        match char2_odd_identity(&s, 1).unwrap() {
            CheckVerdict::Pass { cases } => assert_eq!(cases, 27),
            other => panic!("expected pass, got {other:?}"),
        }
        let single = all2.subset(&[3]);
        assert!(char2_odd_identity(&single, 1).unwrap().passed());

        let all3 = plane_f3();
        assert_eq!(
            char2_odd_identity(&all3, 1).unwrap_err(),
            IndicatorError::WrongCharacteristic { p: 3 }
        );
    }

    #[test]
    fn char2_identity_extension_field() {
        // F_4 has characteristic 2, so the identity holds there too
        let f4 = FieldSpec::make_field(2, 2).unwrap();
        let all = enumerate_points(1, &f4).unwrap();
        let s = all.subset(&[0, 1, 2]);
        assert!(char2_odd_identity(&s, 1).unwrap().passed());
    }

    #[test]
    fn flatten_rank_examples() {
        let all = plane_f3();
        let b = set_from(&all, &[[0, 0], [1, 0], [0, 1], [1, 1]]);
        let f = b.field().clone();
        let t2 = FunctionTable::tabulate(&b, 2, |t| eval_t_idx(&b, t)).unwrap();
        assert_eq!(flatten_rank_lower_bound(&t2).unwrap(), 3);

        let ones = FunctionTable::tabulate(&b, 2, |_| f.one()).unwrap();
        assert_eq!(flatten_rank_lower_bound(&ones).unwrap(), 1);

        let zeros = FunctionTable::tabulate(&b, 2, |_| f.zero()).unwrap();
        assert_eq!(flatten_rank_lower_bound(&zeros).unwrap(), 0);

        let t3 = FunctionTable::tabulate(&b, 3, |t| eval_t_idx(&b, t)).unwrap();
        assert_eq!(
            flatten_rank_lower_bound(&t3).unwrap_err(),
            IndicatorError::ArityUnsupported { arity: 3 }
        );
    }

    #[test]
    fn tables_are_symmetric() {
        let all = plane_f3();
        let s = set_from(&all, &[[0, 0], [1, 0], [0, 1], [1, 1]]);
        let t = FunctionTable::tabulate(&s, 3, |t| eval_t_idx(&s, t)).unwrap();
        assert!(t.is_symmetric());
        let g = FunctionTable::tabulate(&s, 3, |t| eval_g_rank_idx(&s, t)).unwrap();
        assert!(g.is_symmetric());
    }
}
