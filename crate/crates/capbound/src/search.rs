//! Lower-bound witness generation: exact maximal m-general sets in tiny
//! AG(n,q) by deterministic lexicographic backtracking, plus seeded greedy
//! growth for spaces too large to exhaust. Exact results sandwich the
//! analytic upper bound from below.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bounds::{theorem_bound, BoundError};
use crate::counting::is_prime_power;
use crate::field::{rank_idx, FieldError, FieldSpec};
use crate::geometry::{for_each_combination, is_m_general, GeometryError, PointSet};
use crate::rng::{self, SplitMix64};

/// Exact search represents candidate sets as point bitmasks, so the space
/// may have at most 128 points.
pub const EXACT_SPACE_CAP: u32 = 128;

/// Default backtracking node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq)]
pub enum SearchError {
    ParameterRange(&'static str),
    /// q^n exceeds [`EXACT_SPACE_CAP`].
    SpaceTooLarge {
        points: u128,
        cap: u32,
    },
    Field(FieldError),
    Geometry(GeometryError),
    Bound(BoundError),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::ParameterRange(msg) => write!(f, "{msg}"),
            SearchError::SpaceTooLarge { points, cap } => {
                write!(
                    f,
                    "space of {points} points exceeds the exact-search cap of {cap}"
                )
            }
            SearchError::Field(e) => write!(f, "{e}"),
            SearchError::Geometry(e) => write!(f, "{e}"),
            SearchError::Bound(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SearchError {}

impl From<FieldError> for SearchError {
    fn from(e: FieldError) -> Self {
        SearchError::Field(e)
    }
}

impl From<GeometryError> for SearchError {
    fn from(e: GeometryError) -> Self {
        SearchError::Geometry(e)
    }
}

impl From<BoundError> for SearchError {
    fn from(e: BoundError) -> Self {
        SearchError::Bound(e)
    }
}

/// Identifies the pseudorandom stream behind a greedy run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RngConfig {
    pub algorithm: &'static str,
    pub seed: u64,
    pub restarts: u32,
}

/// Outcome of a search; `exact` is true only when the whole space was
/// exhausted within the node budget, in which case `best_size` is the true
/// maximum.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub n: u32,
    pub q: u32,
    pub m: u32,
    pub best_size: usize,
    pub witness: PointSet,
    pub exact: bool,
    pub nodes_visited: u64,
    /// Node budget the run was given (0 = unlimited, greedy runs).
    pub budget: u64,
    pub rng: Option<RngConfig>,
}

/// Point-indexed view of a small AG(n,q): coordinates of every point in the
/// lexicographic enumeration order, plus affine-flat masks.
struct MaskSpace {
    field: FieldSpec,
    n: usize,
    npoints: usize,
    /// npoints * n element indices, row per point.
    coords: Vec<u32>,
    /// line-through-pair memo for m = 3 (index a * npoints + b), lazily filled
    line_memo: Vec<u128>,
}

impl MaskSpace {
    fn new(field: &FieldSpec, n: u32) -> Result<MaskSpace, SearchError> {
        let q = field.q() as u128;
        let total = q.checked_pow(n).unwrap_or(u128::MAX);
        if total > EXACT_SPACE_CAP as u128 {
            return Err(SearchError::SpaceTooLarge {
                points: total,
                cap: EXACT_SPACE_CAP,
            });
        }
        let npoints = total as usize;
        let n = n as usize;
        let mut coords = Vec::with_capacity(npoints * n);
        for v in 0..npoints as u64 {
            let mut divisor = (field.q() as u64).pow(n as u32 - 1);
            let mut rem = v;
            for _ in 0..n {
                coords.push((rem / divisor) as u32);
                rem %= divisor;
                divisor = if divisor > 1 {
                    divisor / field.q() as u64
                } else {
                    1
                };
            }
        }
        Ok(MaskSpace {
            field: field.clone(),
            n,
            npoints,
            coords,
            line_memo: Vec::new(),
        })
    }

    fn coord(&self, point: usize, j: usize) -> u32 {
        self.coords[point * self.n + j]
    }

    fn point_of_coords(&self, c: &[u32]) -> usize {
        let mut v = 0u64;
        for &x in c {
            v = v * self.field.q() as u64 + x as u64;
        }
        v as usize
    }

    /// Mask of points a candidate must avoid because of the (m-1)-subset
    /// `span_set`: its affine span when the subset is in general position,
    /// everything otherwise (a degenerate subset can never be completed).
    fn flat_mask(&mut self, span_set: &[usize]) -> u128 {
        let d = span_set.len() - 1;
        if d == 1 && self.npoints <= 128 {
            // memoized lines for the m = 3 case, the hot path
            let (a, b) = (span_set[0], span_set[1]);
            if self.line_memo.is_empty() {
                self.line_memo = vec![0u128; self.npoints * self.npoints];
            }
            let key = a * self.npoints + b;
            if self.line_memo[key] != 0 {
                return self.line_memo[key];
            }
            let mask = self.span_mask(span_set);
            self.line_memo[key] = mask;
            self.line_memo[b * self.npoints + a] = mask;
            return mask;
        }
        // rank of the difference vectors decides degeneracy
        let base = span_set[d];
        let mut rows = Vec::with_capacity(d * self.n);
        for &s in &span_set[..d] {
            for j in 0..self.n {
                rows.push(self.field.idx_sub(self.coord(s, j), self.coord(base, j)));
            }
        }
        let rank = rank_idx(&self.field, d, self.n, &mut rows);
        if rank < d {
            return u128::MAX; // degenerate: no candidate can ever extend this
        }
        self.span_mask(span_set)
    }

    /// Mask of the affine span of the given points (all q^d combinations of
    /// the difference vectors off the last point).
    fn span_mask(&self, span_set: &[usize]) -> u128 {
        let d = span_set.len() - 1;
        let q = self.field.q();
        let base = span_set[d];
        let mut mask = 0u128;
        let mut t = vec![0u32; d];
        let mut point = vec![0u32; self.n];
        loop {
            for j in 0..self.n {
                let mut x = self.coord(base, j);
                for (i, &ti) in t.iter().enumerate() {
                    let diff = self
                        .field
                        .idx_sub(self.coord(span_set[i], j), self.coord(base, j));
                    x = self.field.idx_add(x, self.field.idx_mul(ti, diff));
                }
                point[j] = x;
            }
            mask |= 1u128 << self.point_of_coords(&point);

            let mut i = t.len();
            loop {
                if i == 0 {
                    return mask;
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

    /// Union of the avoid-masks of all new (m-1)-subsets formed by adding
    /// `newest` to `chosen`.
    fn forbidden_after(&mut self, chosen: &[usize], newest: usize, m: usize) -> u128 {
        if chosen.len() + 1 < m - 1 {
            return 0;
        }
        let mut add = 0u128;
        let mut span_set = vec![0usize; m - 1];
        for_each_combination(chosen.len(), m - 2, &mut |subset| {
            for (w, &i) in subset.iter().enumerate() {
                span_set[w] = chosen[i];
            }
            span_set[m - 2] = newest;
            add |= self.flat_mask(&span_set);
            true
        });
        add
    }

    fn witness(&self, chosen: &[usize]) -> PointSet {
        let mut s = PointSet::empty(self.field.clone(), self.n).expect("n >= 1");
        for &c in chosen {
            let coords: Vec<u32> = (0..self.n).map(|j| self.coord(c, j)).collect();
            let p = s.point_from_indices(&coords).expect("coords are in range");
            s.push(p).expect("chosen points are distinct");
        }
        s
    }
}

fn validate(n: u32, q: u32, m: u32) -> Result<(u32, u32), SearchError> {
    if m < 3 || m > n + 2 {
        return Err(SearchError::ParameterRange("m must satisfy 3 <= m <= n+2"));
    }
    is_prime_power(q).ok_or(SearchError::ParameterRange("q must be a prime power"))
}

/// Exhaustive depth-first backtracking over lexicographically increasing
/// point sequences: a candidate is admissible iff every (m-1)-subset of the
/// current set together with it is in general position (tracked
/// incrementally as avoid-masks). Prunes a branch when the current size plus
/// the remaining admissible count cannot beat the best found. Deterministic;
/// if the node budget runs out the best set so far is returned with
/// `exact = false` (still a valid lower bound).
pub fn max_m_general_exact(
    n: u32,
    q: u32,
    m: u32,
    budget: u64,
) -> Result<SearchResult, SearchError> {
    let (p, k) = validate(n, q, m)?;
    let field = FieldSpec::make_field(p, k)?;
    max_m_general_exact_with(&field, n, m, budget)
}

/// As [`max_m_general_exact`] but in a caller-supplied field (for instance a
/// non-canonical modulus; exact sizes are representation-independent).
pub fn max_m_general_exact_with(
    field: &FieldSpec,
    n: u32,
    m: u32,
    budget: u64,
) -> Result<SearchResult, SearchError> {
    if m < 3 || m > n + 2 {
        return Err(SearchError::ParameterRange("m must satisfy 3 <= m <= n+2"));
    }
    let mut space = MaskSpace::new(field, n)?;
    let mut best: Vec<usize> = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    let mut nodes = 0u64;
    let mut truncated = false;
    dfs(
        &mut space,
        m as usize,
        &mut chosen,
        0,
        0,
        &mut best,
        &mut nodes,
        budget,
        &mut truncated,
    );

    let witness = space.witness(&best);
    // never trust search state: re-verify through the rank-based oracle
    assert!(
        is_m_general(&witness, m as usize),
        "witness failed independent verification"
    );
    Ok(SearchResult {
        n,
        q: field.q(),
        m,
        best_size: best.len(),
        witness,
        exact: !truncated,
        nodes_visited: nodes,
        budget,
        rng: None,
    })
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    space: &mut MaskSpace,
    m: usize,
    chosen: &mut Vec<usize>,
    forbidden: u128,
    start: usize,
    best: &mut Vec<usize>,
    nodes: &mut u64,
    budget: u64,
    truncated: &mut bool,
) {
    *nodes += 1;
    if budget > 0 && *nodes > budget {
        *truncated = true;
        return;
    }
    if chosen.len() > best.len() {
        *best = chosen.clone();
    }
    let all: u128 = if space.npoints == 128 {
        u128::MAX
    } else {
        (1u128 << space.npoints) - 1
    };
    let avail = !forbidden & all;
    for c in start..space.npoints {
        if (avail >> c) & 1 == 0 {
            continue;
        }
        // admissible candidates at or beyond c, an upper bound on growth
        let remaining = (avail >> c).count_ones() as usize;
        if chosen.len() + remaining < best.len() {
            break;
        }
        let add = space.forbidden_after(chosen, c, m);
        chosen.push(c);
        dfs(
            space,
            m,
            chosen,
            forbidden | add | (1u128 << c),
            c + 1,
            best,
            nodes,
            budget,
            truncated,
        );
        chosen.pop();
        if *truncated {
            return;
        }
    }
}

/// Coordinate rows for spaces too large for masks but within the
/// enumeration cap; admissibility falls back to rank checks.
struct FlatSpace {
    field: FieldSpec,
    n: usize,
    npoints: usize,
    coords: Vec<u32>,
}

impl FlatSpace {
    fn new(field: &FieldSpec, n: u32) -> Result<FlatSpace, SearchError> {
        let q = field.q() as u128;
        let total = q.checked_pow(n).unwrap_or(u128::MAX);
        if total > crate::geometry::ENUMERATION_CAP as u128 {
            return Err(SearchError::SpaceTooLarge {
                points: total,
                cap: crate::geometry::ENUMERATION_CAP as u32,
            });
        }
        let npoints = total as usize;
        let n = n as usize;
        let mut coords = Vec::with_capacity(npoints * n);
        for v in 0..npoints as u64 {
            let mut divisor = (field.q() as u64).pow(n as u32 - 1);
            let mut rem = v;
            for _ in 0..n {
                coords.push((rem / divisor) as u32);
                rem %= divisor;
                divisor = if divisor > 1 {
                    divisor / field.q() as u64
                } else {
                    1
                };
            }
        }
        Ok(FlatSpace {
            field: field.clone(),
            n,
            npoints,
            coords,
        })
    }

    fn coord(&self, point: usize, j: usize) -> u32 {
        self.coords[point * self.n + j]
    }

    /// True iff every (m-1)-subset of `chosen` together with `c` is in
    /// general position, i.e. chosen + c stays m-general.
    fn admissible(&self, chosen: &[usize], c: usize, m: usize) -> bool {
        if chosen.contains(&c) {
            return false;
        }
        if chosen.len() + 1 < m {
            return true; // too few points for an m-subset
        }
        let mut rows = vec![0u32; (m - 1) * self.n];
        for_each_combination(chosen.len(), m - 1, &mut |w| {
            for (r, &wi) in w.iter().enumerate() {
                let s = chosen[wi];
                for j in 0..self.n {
                    rows[r * self.n + j] = self.field.idx_sub(self.coord(s, j), self.coord(c, j));
                }
            }
            rank_idx(&self.field, m - 1, self.n, &mut rows) == m - 1
        })
    }

    fn witness(&self, chosen: &[usize]) -> PointSet {
        let mut s = PointSet::empty(self.field.clone(), self.n).expect("n >= 1");
        for &c in chosen {
            let coords: Vec<u32> = (0..self.n).map(|j| self.coord(c, j)).collect();
            let p = s.point_from_indices(&coords).expect("coords are in range");
            s.push(p).expect("chosen points are distinct");
        }
        s
    }
}

/// Seeded greedy growth: per restart, points are shuffled (splitmix64) and
/// inserted whenever the set stays m-general; the best witness over all
/// restarts is returned. Never exact; reproducible for a given
/// (seed, restarts). Works on any space within the enumeration cap.
pub fn greedy_m_general(
    n: u32,
    q: u32,
    m: u32,
    seed: u64,
    restarts: u32,
) -> Result<SearchResult, SearchError> {
    let (p, k) = validate(n, q, m)?;
    let field = FieldSpec::make_field(p, k)?;
    greedy_m_general_with(&field, n, m, seed, restarts)
}

/// As [`greedy_m_general`] but in a caller-supplied field.
pub fn greedy_m_general_with(
    field: &FieldSpec,
    n: u32,
    m: u32,
    seed: u64,
    restarts: u32,
) -> Result<SearchResult, SearchError> {
    if m < 3 || m > n + 2 {
        return Err(SearchError::ParameterRange("m must satisfy 3 <= m <= n+2"));
    }
    if restarts == 0 {
        return Err(SearchError::ParameterRange(
            "at least one restart is required",
        ));
    }
    let space = FlatSpace::new(field, n)?;
    let mut best: Vec<usize> = Vec::new();
    let mut nodes = 0u64;
    for r in 0..restarts {
        let mut order: Vec<usize> = (0..space.npoints).collect();
        let mut g = SplitMix64::new(SplitMix64::derive(seed, r as u64));
        g.shuffle(&mut order);
        let mut chosen: Vec<usize> = Vec::new();
        for c in order {
            nodes += 1;
            if space.admissible(&chosen, c, m as usize) {
                chosen.push(c);
            }
        }
        if chosen.len() > best.len() {
            best = chosen;
        }
    }
    best.sort_unstable();
    let witness = space.witness(&best);
    assert!(
        is_m_general(&witness, m as usize),
        "witness failed independent verification"
    );
    Ok(SearchResult {
        n,
        q: field.q(),
        m,
        best_size: best.len(),
        witness,
        exact: false,
        nodes_visited: nodes,
        budget: 0,
        rng: Some(RngConfig {
            algorithm: rng::ALGORITHM,
            seed,
            restarts,
        }),
    })
}

/// Result of comparing the best known lower bound against the analytic
/// upper bound at (n, q, m).
#[derive(Debug, Clone)]
pub struct SandwichReport {
    pub n: u32,
    pub q: u32,
    pub m: u32,
    /// Best known m-general set size (exact maximum when `lower_exact`).
    pub lower: usize,
    pub lower_exact: bool,
    /// The analytic bound 2m + m h_min^n.
    pub upper: f64,
    pub gap_ratio: f64,
    pub pass: bool,
}

/// Checks lower < upper at (n, q, m): the lower bound comes from exact
/// search when the space fits the mask engine, otherwise from seeded greedy
/// growth. Parity-excluded parameters propagate as errors.
pub fn sandwich_check(n: u32, q: u32, m: u32) -> Result<SandwichReport, SearchError> {
    let report = theorem_bound(n, q, m)?;
    let total = (q as u128).checked_pow(n).unwrap_or(u128::MAX);
    let result = if total <= EXACT_SPACE_CAP as u128 {
        max_m_general_exact(n, q, m, DEFAULT_NODE_BUDGET)?
    } else {
        greedy_m_general(n, q, m, 0, 20)?
    };
    let lower = result.best_size;
    let upper = report.theorem_bound;
    Ok(SandwichReport {
        n,
        q,
        m,
        lower,
        lower_exact: result.exact,
        upper,
        gap_ratio: if lower > 0 {
            upper / lower as f64
        } else {
            f64::INFINITY
        },
        pass: (lower as f64) < upper,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_small_caps() {
        let r = max_m_general_exact(2, 3, 3, 0).unwrap();
        assert_eq!(r.best_size, 4);
        assert!(r.exact);

        let r = max_m_general_exact(3, 2, 4, 0).unwrap();
        assert_eq!(r.best_size, 4);
        assert!(r.exact);

        // binary spaces have two-point lines, so the whole space is a cap
        let r = max_m_general_exact(3, 2, 3, 0).unwrap();
        assert_eq!(r.best_size, 8);

        // AG(2,4): an affine hyperoval of q + 2 = 6 points
        let r = max_m_general_exact(2, 4, 3, 0).unwrap();
        assert_eq!(r.best_size, 6);

        // AG(2,5): a conic with an external line removed, q + 1 = 6
        let r = max_m_general_exact(2, 5, 3, 0).unwrap();
        assert_eq!(r.best_size, 6);
    }

    #[test]
    fn exact_maximal_cap_dim3() {
        let r = max_m_general_exact(3, 3, 3, 0).unwrap();
        assert_eq!(r.best_size, 9); // q^2
        assert!(r.exact);
        assert!(is_m_general(&r.witness, 3));
    }

    #[test]
    fn exact_m_equals_n_plus_2_is_degenerate() {
        // every m-subset spans at most an n-flat, so only vacuous sets exist
        let r = max_m_general_exact(1, 3, 3, 0).unwrap();
        assert_eq!(r.best_size, 2);
        let r = max_m_general_exact(2, 3, 4, 0).unwrap();
        assert_eq!(r.best_size, 3);
    }

    #[test]
    fn exact_is_deterministic() {
        let a = max_m_general_exact(2, 3, 3, 0).unwrap();
        let b = max_m_general_exact(2, 3, 3, 0).unwrap();
        assert_eq!(a.nodes_visited, b.nodes_visited);
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn exact_budget_truncation() {
        let full = max_m_general_exact(3, 3, 3, 0).unwrap();
        let r = max_m_general_exact(3, 3, 3, 50).unwrap();
        assert!(!r.exact);
        assert!(r.nodes_visited <= 51);
        assert!(r.best_size <= full.best_size);
        assert!(is_m_general(&r.witness, 3));
    }

    #[test]
    fn exact_space_cap() {
        assert!(matches!(
            max_m_general_exact(5, 3, 3, 0),
            Err(SearchError::SpaceTooLarge { .. })
        ));
    }

    #[test]
    fn parameter_validation() {
        assert!(max_m_general_exact(2, 3, 5, 0).is_err()); // m > n+2
        assert!(max_m_general_exact(2, 3, 2, 0).is_err()); // m < 3
        assert!(max_m_general_exact(2, 6, 3, 0).is_err()); // not a prime power
        assert!(greedy_m_general(2, 3, 3, 0, 0).is_err()); // no restarts
    }

    #[test]
    fn greedy_reaches_known_maxima() {
        let r = greedy_m_general(2, 3, 3, 7, 10).unwrap();
        assert_eq!(r.best_size, 4);
        assert!(!r.exact);
        assert_eq!(r.rng.as_ref().unwrap().algorithm, "splitmix64");

        let r = greedy_m_general(3, 3, 3, 123, 50).unwrap();
        assert!(r.best_size >= 8, "greedy found only {}", r.best_size);
        assert!(is_m_general(&r.witness, 3));
    }

    #[test]
    fn greedy_is_reproducible() {
        let a = greedy_m_general(3, 3, 3, 9, 5).unwrap();
        let b = greedy_m_general(3, 3, 3, 9, 5).unwrap();
        assert_eq!(a.best_size, b.best_size);
        assert_eq!(a.witness, b.witness);
    }

    #[test]
    fn exact_monotone_in_dimension() {
        // AG(n,q) embeds in AG(n+1,q)
        let mut prev = 0;
        for n in 1..=3 {
            let r = max_m_general_exact(n, 3, 3, 0).unwrap();
            assert!(r.best_size >= prev);
            prev = r.best_size;
        }
        let m4_dim2 = max_m_general_exact(2, 2, 4, 0).unwrap().best_size;
        let m4_dim3 = max_m_general_exact(3, 2, 4, 0).unwrap().best_size;
        assert!(m4_dim3 >= m4_dim2);
    }

    #[test]
    fn exact_invariant_under_modulus_relabeling() {
        // F_8 has two monic irreducible cubics; the maximum cap size in
        // AG(2,8) must not depend on which one represents the field
        let f_a = FieldSpec::with_modulus(2, 3, &[1, 1, 0, 1]).unwrap(); // x^3+x+1
        let f_b = FieldSpec::with_modulus(2, 3, &[1, 0, 1, 1]).unwrap(); // x^3+x^2+1
        let a = max_m_general_exact_with(&f_a, 2, 3, 0).unwrap();
        let b = max_m_general_exact_with(&f_b, 2, 3, 0).unwrap();
        assert!(a.exact && b.exact);
        assert_eq!(a.best_size, b.best_size);
        assert_eq!(a.best_size, 10); // affine hyperoval, q + 2
    }

    #[test]
    fn sandwich_examples() {
        let r = sandwich_check(3, 3, 3).unwrap();
        assert!(r.pass);
        assert_eq!(r.lower, 9);
        assert!(r.lower_exact);
        assert!((r.upper - 68.738703).abs() < 1e-3);

        let r = sandwich_check(3, 2, 4).unwrap();
        assert!(r.pass);
        assert_eq!(r.lower, 4);
        assert!((r.upper - 29.613104).abs() < 1e-3);

        let r = sandwich_check(2, 3, 3).unwrap();
        assert!(r.pass);
        assert_eq!(r.lower, 4);
        assert!((r.upper - 28.771804).abs() < 1e-3);

        assert!(matches!(
            sandwich_check(3, 2, 3),
            Err(SearchError::Bound(BoundError::ParityUnsupported { .. }))
        ));
    }

    #[test]
    fn witnesses_beat_trivial_lower_bound() {
        use num_traits::ToPrimitive;
        for (n, q, m) in [(2u32, 3u32, 3u32), (3, 3, 3), (3, 2, 4)] {
            let r = max_m_general_exact(n, q, m, 0).unwrap();
            let lower = crate::geometry::trivial_lower_bound(n, q, m)
                .unwrap()
                .to_u64()
                .unwrap() as usize;
            assert!(
                r.best_size >= lower,
                "({n},{q},{m}): {} < {lower}",
                r.best_size
            );
        }
    }
}
