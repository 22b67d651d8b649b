//! Exact arithmetic in F_{p^k} and finite-field linear algebra.
//!
//! Fields are represented by a [`FieldSpec`] holding the characteristic p,
//! the extension degree k and a monic irreducible modulus of degree k over
//! F_p. Elements are stored by their canonical index sum(c_i * p^i) where
//! (c_0, ..., c_{k-1}) is the polynomial-basis coefficient vector; the
//! coefficients are recovered on demand. The supported range is q = p^k
//! up to 2^16, and fields with q <= 256 cache full add/mul tables, which
//! keeps exhaustive sweeps over small fields cheap.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Largest supported field size q = p^k.
pub const MAX_Q: u32 = 1 << 16;

/// Full arithmetic tables are cached for q up to this size.
const TABLE_Q: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    /// p is not prime.
    CompositeP(u32),
    /// Extension degree k = 0.
    DegreeZero,
    /// p^k exceeds [`MAX_Q`].
    FieldTooLarge { p: u32, k: u32 },
    /// Supplied modulus is not irreducible over F_p.
    NotIrreducible,
    /// Supplied modulus is not monic of degree k with coefficients in [0, p).
    BadModulus,
    /// Operands belong to different field specs.
    FieldMismatch,
    /// Multiplicative inverse of zero requested.
    ZeroInverse,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::CompositeP(p) => write!(f, "{p} is not prime"),
            FieldError::DegreeZero => write!(f, "extension degree must be at least 1"),
            FieldError::FieldTooLarge { p, k } => {
                write!(f, "{p}^{k} exceeds the supported field size {MAX_Q}")
            }
            FieldError::NotIrreducible => write!(f, "modulus is reducible over F_p"),
            FieldError::BadModulus => {
                write!(
                    f,
                    "modulus must be monic of degree k with coefficients in [0, p)"
                )
            }
            FieldError::FieldMismatch => write!(f, "operands belong to different fields"),
            FieldError::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
        }
    }
}

impl core::error::Error for FieldError {}

/// An element of a finite field, tagged with the id of its [`FieldSpec`] so
/// cross-field mixups surface as [`FieldError::FieldMismatch`] instead of
/// silent garbage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    index: u32,
    field: u64,
}

impl FieldElement {
    /// Canonical index sum(c_i * p^i) of this element.
    pub fn index(self) -> u32 {
        self.index
    }

    /// Id of the owning [`FieldSpec`].
    pub fn field_id(self) -> u64 {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }
}

/// A concrete finite field F_{p^k} with its modulus polynomial.
#[derive(Clone)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, coefficients low degree first, length k+1.
    modulus: Vec<u32>,
    id: u64,
    // tables are empty when q > TABLE_Q
    add_t: Vec<u16>,
    mul_t: Vec<u16>,
    neg_t: Vec<u16>,
    inv_t: Vec<u16>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("q", &self.q)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for FieldSpec {}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// ---- construction-time polynomial helpers over F_p (dense, low degree first)

fn poly_degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

/// Remainder of a mod b where b is monic. Both low degree first.
fn poly_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let db = poly_degree(b).expect("monic divisor");
    let mut r: Vec<u32> = a.to_vec();
    while let Some(dr) = poly_degree(&r) {
        if dr < db {
            break;
        }
        let c = r[dr];
        // r -= c * x^{dr-db} * b
        for j in 0..=db {
            let t = (c as u64 * b[j] as u64) % p as u64;
            r[dr - db + j] = ((r[dr - db + j] as u64 + p as u64 - t) % p as u64) as u32;
        }
    }
    r
}

/// Trial division against every monic polynomial of degree 1..=k/2.
fn poly_is_irreducible(m: &[u32], p: u32) -> bool {
    let k = match poly_degree(m) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if m[0] == 0 && k > 1 {
        return false; // divisible by x
    }
    for d in 1..=k / 2 {
        // all monic divisors of degree d, low coefficients counted in base p
        let count = (p as u64).pow(d as u32);
        for w in 0..count {
            let mut div = vec![0u32; d + 1];
            let mut v = w;
            for c in div.iter_mut().take(d) {
                *c = (v % p as u64) as u32;
                v /= p as u64;
            }
            div[d] = 1;
            if poly_degree(&poly_rem(m, &div, p)).is_none() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree k over F_p, where
/// coefficient vectors (c_0, ..., c_{k-1}) are compared low degree first.
fn canonical_modulus(p: u32, k: u32) -> Vec<u32> {
    let k = k as usize;
    let count = (p as u64).pow(k as u32);
    for w in 0..count {
        // decode so that c_0 is the most significant comparison key
        let mut m = vec![0u32; k + 1];
        let mut v = w;
        for i in (0..k).rev() {
            m[i] = (v % p as u64) as u32;
            v /= p as u64;
        }
        m[k] = 1;
        if poly_is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists over F_p")
}

impl FieldSpec {
    /// Builds F_{p^k} with the canonical (lexicographically smallest monic
    /// irreducible, coefficients compared low degree first) modulus. The
    /// choice is deterministic across runs and needs no polynomial tables.
    pub fn make_field(p: u32, k: u32) -> Result<FieldSpec, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::CompositeP(p));
        }
        if k == 0 {
            return Err(FieldError::DegreeZero);
        }
        match (p as u64).checked_pow(k) {
            Some(q) if q <= MAX_Q as u64 => {}
            _ => return Err(FieldError::FieldTooLarge { p, k }),
        }
        Ok(Self::build(p, k, canonical_modulus(p, k)))
    }

    /// Builds F_{p^k} with a caller-supplied monic irreducible modulus
    /// (coefficients low degree first, length k+1). Distinct moduli give
    /// distinct field ids; their elements do not mix.
    pub fn with_modulus(p: u32, k: u32, modulus: &[u32]) -> Result<FieldSpec, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::CompositeP(p));
        }
        if k == 0 {
            return Err(FieldError::DegreeZero);
        }
        match (p as u64).checked_pow(k) {
            Some(q) if q <= MAX_Q as u64 => {}
            _ => return Err(FieldError::FieldTooLarge { p, k }),
        }
        if modulus.len() != k as usize + 1
            || modulus[k as usize] != 1
            || modulus.iter().any(|&c| c >= p)
        {
            return Err(FieldError::BadModulus);
        }
        if !poly_is_irreducible(modulus, p) {
            return Err(FieldError::NotIrreducible);
        }
        Ok(Self::build(p, k, modulus.to_vec()))
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> FieldSpec {
        let q = (p as u64).pow(k) as u32;
        let mut mod_value = 0u64;
        for &c in modulus.iter().rev() {
            mod_value = mod_value * p as u64 + c as u64;
        }
        let id = (mod_value << 21) | ((p as u64) << 5) | k as u64;
        let mut spec = FieldSpec {
            p,
            k,
            q,
            modulus,
            id,
            add_t: Vec::new(),
            mul_t: Vec::new(),
            neg_t: Vec::new(),
            inv_t: Vec::new(),
        };
        if q <= TABLE_Q {
            let n = q as usize;
            let mut add_t = vec![0u16; n * n];
            let mut mul_t = vec![0u16; n * n];
            for a in 0..q {
                for b in 0..q {
                    add_t[(a * q + b) as usize] = spec.add_raw(a, b) as u16;
                    mul_t[(a * q + b) as usize] = spec.mul_raw(a, b) as u16;
                }
            }
            let mut neg_t = vec![0u16; n];
            let mut inv_t = vec![0u16; n];
            for a in 0..q {
                neg_t[a as usize] =
                    (0..q).find(|&b| add_t[(a * q + b) as usize] == 0).unwrap() as u16;
                if a != 0 {
                    inv_t[a as usize] =
                        (1..q).find(|&b| mul_t[(a * q + b) as usize] == 1).unwrap() as u16;
                }
            }
            spec.add_t = add_t;
            spec.mul_t = mul_t;
            spec.neg_t = neg_t;
            spec.inv_t = inv_t;
        }
        spec
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Monic modulus polynomial, coefficients low degree first (length k+1).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Fingerprint of (p, k, modulus); equal ids mean interchangeable elements.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            index: 0,
            field: self.id,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            index: 1,
            field: self.id,
        }
    }

    /// Element with the given canonical index.
    ///
    /// Panics if `index >= q`.
    pub fn element(&self, index: u32) -> FieldElement {
        assert!(
            index < self.q,
            "element index {index} out of range for q={}",
            self.q
        );
        FieldElement {
            index,
            field: self.id,
        }
    }

    /// Element from polynomial-basis coefficients (low degree first). Missing
    /// trailing coefficients are zero; values are reduced mod p.
    ///
    /// Panics if more than k coefficients are supplied.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        assert!(coeffs.len() <= self.k as usize, "too many coefficients");
        let mut index = 0u32;
        for &c in coeffs.iter().rev() {
            index = index * self.p + c % self.p;
        }
        FieldElement {
            index,
            field: self.id,
        }
    }

    /// Polynomial-basis coefficient vector of `e`, low degree first, length k.
    ///
    /// Panics if `e` belongs to a different field.
    pub fn coeffs(&self, e: FieldElement) -> Vec<u32> {
        assert_eq!(e.field, self.id, "element from a different field");
        let mut v = e.index;
        let mut out = vec![0u32; self.k as usize];
        for c in out.iter_mut() {
            *c = v % self.p;
            v /= self.p;
        }
        out
    }

    /// All q elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q).map(move |i| FieldElement {
            index: i,
            field: self.id,
        })
    }

    fn check(&self, e: FieldElement) -> Result<u32, FieldError> {
        if e.field == self.id {
            Ok(e.index)
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        Ok(self.element(self.idx_add(a, b)))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        Ok(self.element(self.idx_add(a, self.idx_neg(b))))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement, FieldError> {
        let (a, b) = (self.check(a)?, self.check(b)?);
        Ok(self.element(self.idx_mul(a, b)))
    }

    pub fn neg(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        let a = self.check(a)?;
        Ok(self.element(self.idx_neg(a)))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        let a = self.check(a)?;
        if a == 0 {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.element(self.idx_inv(a)))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> Result<FieldElement, FieldError> {
        let a = self.check(a)?;
        Ok(self.element(self.idx_pow(a, e)))
    }

    // ---- index arithmetic (trusted fast paths; indices must be < q)

    pub(crate) fn idx_add(&self, a: u32, b: u32) -> u32 {
        if !self.add_t.is_empty() {
            return self.add_t[(a * self.q + b) as usize] as u32;
        }
        self.add_raw(a, b)
    }

    pub(crate) fn idx_mul(&self, a: u32, b: u32) -> u32 {
        if !self.mul_t.is_empty() {
            return self.mul_t[(a * self.q + b) as usize] as u32;
        }
        self.mul_raw(a, b)
    }

    pub(crate) fn idx_neg(&self, a: u32) -> u32 {
        if !self.neg_t.is_empty() {
            return self.neg_t[a as usize] as u32;
        }
        let mut digits = [0u32; 16];
        self.decode(a, &mut digits);
        for d in digits.iter_mut().take(self.k as usize) {
            *d = (self.p - *d) % self.p;
        }
        self.encode(&digits)
    }

    pub(crate) fn idx_sub(&self, a: u32, b: u32) -> u32 {
        self.idx_add(a, self.idx_neg(b))
    }

    /// Fermat inverse a^(q-2); `a` must be nonzero.
    pub(crate) fn idx_inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        if !self.inv_t.is_empty() {
            return self.inv_t[a as usize] as u32;
        }
        self.idx_pow(a, (self.q - 2) as u64)
    }

    pub(crate) fn idx_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.idx_mul(acc, base);
            }
            base = self.idx_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn decode(&self, mut v: u32, out: &mut [u32; 16]) {
        for d in out.iter_mut().take(self.k as usize) {
            *d = v % self.p;
            v /= self.p;
        }
    }

    fn encode(&self, digits: &[u32; 16]) -> u32 {
        let mut v = 0u32;
        for i in (0..self.k as usize).rev() {
            v = v * self.p + digits[i];
        }
        v
    }

    fn add_raw(&self, a: u32, b: u32) -> u32 {
        let (mut da, mut db) = ([0u32; 16], [0u32; 16]);
        self.decode(a, &mut da);
        self.decode(b, &mut db);
        for i in 0..self.k as usize {
            da[i] = (da[i] + db[i]) % self.p;
        }
        self.encode(&da)
    }

    fn mul_raw(&self, a: u32, b: u32) -> u32 {
        let (mut da, mut db) = ([0u32; 16], [0u32; 16]);
        self.decode(a, &mut da);
        self.decode(b, &mut db);
        let k = self.k as usize;
        let p = self.p as u64;
        let mut prod = [0u64; 31];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] += da[i] as u64 * db[j] as u64;
            }
        }
        // reduce by the monic modulus, top down
        for i in (k..2 * k - 1).rev() {
            let c = prod[i] % p;
            if c != 0 {
                for j in 0..k {
                    prod[i - k + j] += c * (p - self.modulus[j] as u64);
                }
            }
            prod[i] = 0;
        }
        let mut digits = [0u32; 16];
        for i in 0..k {
            digits[i] = (prod[i] % p) as u32;
        }
        self.encode(&digits)
    }
}

/// A rows x cols matrix with entries in one field.
#[derive(Clone)]
pub struct FqMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "FqMatrix({}x{} over F_{})",
            self.rows, self.cols, self.field.q
        )
    }
}

impl FqMatrix {
    /// Row-major construction; every entry must belong to `field`.
    ///
    /// Panics if `entries.len() != rows * cols`.
    pub fn new(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<FqMatrix, FieldError> {
        assert_eq!(
            entries.len(),
            rows * cols,
            "entry count does not match shape"
        );
        let mut raw = Vec::with_capacity(entries.len());
        for e in entries {
            raw.push(field.check(e)?);
        }
        Ok(FqMatrix {
            field,
            rows,
            cols,
            entries: raw,
        })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> FqMatrix {
        FqMatrix {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> FqMatrix {
        let mut m = FqMatrix::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> FieldElement,
    ) -> Result<FqMatrix, FieldError> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        FqMatrix::new(field, rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        assert!(i < self.rows && j < self.cols);
        self.field.element(self.entries[i * self.cols + j])
    }

    pub fn set(&mut self, i: usize, j: usize, e: FieldElement) -> Result<(), FieldError> {
        assert!(i < self.rows && j < self.cols);
        self.entries[i * self.cols + j] = self.field.check(e)?;
        Ok(())
    }
}

/// Row echelon rank over raw element indices. Pivot choice is the first
/// nonzero entry scanning top to bottom, columns left to right.
pub(crate) fn rank_idx(field: &FieldSpec, rows: usize, cols: usize, a: &mut [u32]) -> usize {
    let mut r = 0usize;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let pivot = (r..rows).find(|&i| a[i * cols + col] != 0);
        let Some(pivot) = pivot else { continue };
        if pivot != r {
            for j in 0..cols {
                a.swap(r * cols + j, pivot * cols + j);
            }
        }
        let inv = field.idx_inv(a[r * cols + col]);
        for j in col..cols {
            a[r * cols + j] = field.idx_mul(a[r * cols + j], inv);
        }
        for i in r + 1..rows {
            let c = a[i * cols + col];
            if c != 0 {
                for j in col..cols {
                    let t = field.idx_mul(c, a[r * cols + j]);
                    a[i * cols + j] = field.idx_sub(a[i * cols + j], t);
                }
            }
        }
        r += 1;
    }
    r
}

/// Rank of a matrix by Gaussian elimination with exact field arithmetic;
/// 0 for empty or all-zero matrices.
pub fn matrix_rank(m: &FqMatrix) -> usize {
    let mut work = m.entries.clone();
    rank_idx(&m.field, m.rows, m.cols, &mut work)
}

/// Dimension of { t : sum(t_i v_i) = 0 } for the given vectors, i.e.
/// (number of vectors) - rank of the matrix whose rows are the vectors.
/// The empty list has no coordinates t, so the dimension is 0.
///
/// Panics if the vectors are ragged or contain foreign elements.
pub fn nullspace_dim(field: &FieldSpec, vectors: &[Vec<FieldElement>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let n = vectors[0].len();
    let mut raw = Vec::with_capacity(vectors.len() * n);
    for v in vectors {
        assert_eq!(v.len(), n, "vectors must all have the same length");
        for &e in v {
            raw.push(field.check(e).expect("vector entries must share the field"));
        }
    }
    let rank = rank_idx(field, vectors.len(), n, &mut raw);
    vectors.len() - rank
}
