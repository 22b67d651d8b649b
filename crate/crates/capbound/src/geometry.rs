//! Points of AG(n,q), general-position tests, m-general verification and the
//! greedy counting lower bound.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::field::{rank_idx, FieldElement, FieldSpec};

/// Hard cap on q^n for full point enumeration.
pub const ENUMERATION_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeometryError {
    /// Points with different dimensions or fields were mixed.
    AmbientMismatch,
    /// A point already present was pushed into a PointSet.
    DuplicatePoint,
    /// q^n exceeds [`ENUMERATION_CAP`].
    BudgetExceeded { needed: u128, cap: u64 },
    /// Parameters outside the supported range, e.g. m not in [3, n+2].
    ParameterRange(&'static str),
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::AmbientMismatch => write!(f, "points live in different ambient spaces"),
            GeometryError::DuplicatePoint => write!(f, "point set already contains this point"),
            GeometryError::BudgetExceeded { needed, cap } => {
                write!(f, "enumeration of {needed} points exceeds the cap of {cap}")
            }
            GeometryError::ParameterRange(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for GeometryError {}

/// A point of AG(n,q): an n-vector of field elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<FieldElement>,
}

impl Point {
    /// A point from its coordinates; they must be nonempty and share a field.
    pub fn new(coords: Vec<FieldElement>) -> Result<Point, GeometryError> {
        if coords.is_empty() {
            return Err(GeometryError::ParameterRange(
                "points need at least one coordinate",
            ));
        }
        let fid = coords[0].field_id();
        if coords.iter().any(|c| c.field_id() != fid) {
            return Err(GeometryError::AmbientMismatch);
        }
        Ok(Point { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn coord(&self, j: usize) -> FieldElement {
        self.coords[j]
    }
}

/// An ordered, duplicate-free collection of points of one ambient space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    field: FieldSpec,
    dim: usize,
    points: Vec<Point>,
}

impl PointSet {
    pub fn empty(field: FieldSpec, dim: usize) -> Result<PointSet, GeometryError> {
        if dim == 0 {
            return Err(GeometryError::ParameterRange(
                "ambient dimension must be at least 1",
            ));
        }
        Ok(PointSet {
            field,
            dim,
            points: Vec::new(),
        })
    }

    pub fn new(
        field: FieldSpec,
        dim: usize,
        points: Vec<Point>,
    ) -> Result<PointSet, GeometryError> {
        let mut s = PointSet::empty(field, dim)?;
        for p in points {
            s.push(p)?;
        }
        Ok(s)
    }

    /// Appends a point, rejecting wrong ambient spaces and duplicates.
    pub fn push(&mut self, p: Point) -> Result<(), GeometryError> {
        if p.dim() != self.dim || p.coords.iter().any(|c| c.field_id() != self.field.id()) {
            return Err(GeometryError::AmbientMismatch);
        }
        if self.points.contains(&p) {
            return Err(GeometryError::DuplicatePoint);
        }
        self.points.push(p);
        Ok(())
    }

    /// Convenience: a point of this ambient space from element indices.
    pub fn point_from_indices(&self, indices: &[u32]) -> Result<Point, GeometryError> {
        if indices.len() != self.dim {
            return Err(GeometryError::AmbientMismatch);
        }
        Point::new(indices.iter().map(|&i| self.field.element(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.iter().position(|x| x == p)
    }

    /// The sub-PointSet picked out by `indices` (order preserved).
    pub fn subset(&self, indices: &[usize]) -> PointSet {
        PointSet {
            field: self.field.clone(),
            dim: self.dim,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
        }
    }
}

/// All q^n points of AG(n,q) in lexicographic order (first coordinate most
/// significant, last coordinate cycling fastest).
pub fn enumerate_points(n: usize, field: &FieldSpec) -> Result<PointSet, GeometryError> {
    if n == 0 {
        return Err(GeometryError::ParameterRange(
            "ambient dimension must be at least 1",
        ));
    }
    let q = field.q() as u128;
    let needed = q.checked_pow(n as u32).unwrap_or(u128::MAX);
    if needed > ENUMERATION_CAP as u128 {
        return Err(GeometryError::BudgetExceeded {
            needed,
            cap: ENUMERATION_CAP,
        });
    }
    let mut points = Vec::with_capacity(needed as usize);
    for v in 0..needed as u64 {
        let mut coords = Vec::with_capacity(n);
        let mut rem = v;
        let mut divisor = (q as u64).pow(n as u32 - 1);
        for _ in 0..n {
            coords.push(field.element((rem / divisor) as u32));
            rem %= divisor;
            divisor = if divisor > 1 { divisor / q as u64 } else { 1 };
        }
        points.push(Point { coords });
    }
    Ok(PointSet {
        field: field.clone(),
        dim: n,
        points,
    })
}

/// True iff the difference vectors {x_i - x_m : i < m} of the m given points
/// are linearly independent (rank m-1). A single point is in general
/// position; a repeated point yields a zero difference and hence false.
pub fn in_general_position(field: &FieldSpec, pts: &[&Point]) -> Result<bool, GeometryError> {
    let m = pts.len();
    if m == 0 {
        return Ok(true);
    }
    let n = pts[0].dim();
    for p in pts {
        if p.dim() != n || p.coords.iter().any(|c| c.field_id() != field.id()) {
            return Err(GeometryError::AmbientMismatch);
        }
    }
    if m == 1 {
        return Ok(true);
    }
    if m - 1 > n {
        return Ok(false); // more difference vectors than the dimension allows
    }
    let last = pts[m - 1];
    let mut rows = Vec::with_capacity((m - 1) * n);
    for p in &pts[..m - 1] {
        for j in 0..n {
            rows.push(field.idx_sub(p.coord(j).index(), last.coord(j).index()));
        }
    }
    Ok(rank_idx(field, m - 1, n, &mut rows) == m - 1)
}

/// True iff every m-point subset of S is in general position. Subsets are
/// visited in lexicographic index order and the scan short-circuits on the
/// first failure; sets with fewer than m points are vacuously m-general.
pub fn is_m_general(s: &PointSet, m: usize) -> bool {
    if s.len() < m {
        return true;
    }
    let mut ok = true;
    for_each_combination(s.len(), m, &mut |subset| {
        let refs: Vec<&Point> = subset.iter().map(|&i| s.point(i)).collect();
        match in_general_position(s.field(), &refs) {
            Ok(true) => true,
            _ => {
                ok = false;
                false
            }
        }
    });
    ok
}

/// Visits all k-subsets of {0..n} in lexicographic order. The callback
/// returns false to stop early; the function returns false iff it stopped.
pub(crate) fn for_each_combination(
    n: usize,
    k: usize,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if k > n {
        return true;
    }
    if k == 0 {
        return visit(&[]);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !visit(&idx) {
            return false;
        }
        // advance odometer
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Smallest s such that q^(m-2) * C(s, m-1) >= q^n, computed exactly. The
/// greedy covering argument guarantees an m-general set of at least this
/// size exists in AG(n,q).
pub fn trivial_lower_bound(n: u32, q: u32, m: u32) -> Result<BigUint, GeometryError> {
    if q < 2 {
        return Err(GeometryError::ParameterRange("q must be at least 2"));
    }
    if m < 3 || m > n + 2 {
        return Err(GeometryError::ParameterRange(
            "m must satisfy 3 <= m <= n+2",
        ));
    }
    let r = (m - 1) as u64;
    // q^(m-2) C(s, m-1) >= q^n  <=>  C(s, m-1) >= q^(n-m+2); the exponent is
    // written n+2-m so it cannot underflow at the m = n+2 boundary
    let target = BigUint::from(q).pow(n + 2 - m);

    // C(s, r) is monotone in s, so exponential search for an upper end and
    // then binary search for the least s with C(s, r) >= target.
    let mut hi = BigUint::from(r);
    while binomial(&hi, r) < target {
        hi *= 2u32;
    }
    let mut lo = BigUint::from(r);
    while lo < hi {
        let mid = (&lo + &hi) / 2u32;
        if binomial(&mid, r) >= target {
            hi = mid;
        } else {
            lo = mid + 1u32;
        }
    }
    Ok(lo)
}

/// C(s, r) for s >= r.
fn binomial(s: &BigUint, r: u64) -> BigUint {
    let mut num = BigUint::one();
    for i in 0..r {
        num *= s - BigUint::from(i);
    }
    let den: BigUint = (1..=r).map(BigUint::from).product();
    num / den
}
