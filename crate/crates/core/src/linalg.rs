//! Dense linear algebra over a prime field GF(p).
//!
//! Entries are stored reduced in `[0, p)` as `u64`; `p < 2^32` keeps every
//! product inside a `u64`. Randomness is always an explicit seed so that a
//! matrix is reproducible from `(seed, p, rows, cols)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::face::Face;

/// Default modulus: the Mersenne prime `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// The field of integers modulo a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl PrimeField {
    /// Validates that `p` is a prime below `2^32`.
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::Input(format!("modulus {p} must be below 2^32")));
        }
        if !is_prime(p) {
            return Err(Error::Input(format!("modulus {p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn default_field() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }

    pub fn modulus(self) -> u64 {
        self.p
    }

    pub fn reduce(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            return None;
        }
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce(t0))
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// `dst -= factor * src`, entrywise.
    #[inline]
    fn axpy_sub(self, dst: &mut [u64], factor: u64, src: &[u64]) {
        if factor == 0 {
            return;
        }
        for (d, &s) in dst.iter_mut().zip(src) {
            if s != 0 {
                *d = self.sub(*d, self.mul(factor, s));
            }
        }
    }
}

/// Dense row-major matrix over a [`PrimeField`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl PrimeMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        PrimeMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from signed entries, reducing each modulo `p`.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, field.reduce(x));
            }
        }
        m
    }

    /// Entries drawn uniformly from `[0, p)` by a ChaCha8 stream seeded with `seed`.
    pub fn random(field: PrimeField, rows: usize, cols: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let data = (0..rows * cols)
            .map(|_| rng.gen_range(0..field.p))
            .collect();
        PrimeMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        debug_assert!(x < self.field.p);
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &PrimeMatrix) -> Result<PrimeMatrix> {
        if self.cols != other.rows {
            return Err(Error::Domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, other.get(k, j))));
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Rank by Gaussian elimination, pivoting on the first nonzero entry.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut a = self.data.clone();
        let cols = self.cols;
        let mut rank = 0;
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(piv) = (rank..self.rows).find(|&r| a[r * cols + c] != 0) else {
                continue;
            };
            if piv != rank {
                for j in 0..cols {
                    a.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(a[rank * cols + c]).unwrap();
            for r in rank + 1..self.rows {
                let x = a[r * cols + c];
                if x == 0 {
                    continue;
                }
                let factor = f.mul(x, inv);
                let (top, bottom) = a.split_at_mut(r * cols);
                f.axpy_sub(
                    &mut bottom[c..cols],
                    factor,
                    &top[rank * cols + c..rank * cols + cols],
                );
            }
            rank += 1;
        }
        rank
    }

    /// Indices of the columns that are not in the span of the earlier
    /// selected columns, scanning in index order. These are the pivot
    /// columns of the reduced row-echelon form.
    pub fn greedy_pivot_columns(&self) -> Vec<usize> {
        let mut basis = IncrementalBasis::new(self.field, self.rows);
        (0..self.cols)
            .filter(|&j| basis.insert(self.column(j)))
            .collect()
    }

    /// Determinant of a square matrix.
    pub fn det(&self) -> Result<u64> {
        if self.rows != self.cols {
            return Err(Error::Domain(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(det_in_place(self.field, &mut self.data.clone(), self.rows))
    }

    /// Determinant of the square submatrix on `rowset` x `colset`
    /// (1-based row and column indices).
    pub fn minor_det(&self, rowset: Face, colset: Face) -> Result<u64> {
        let k = rowset.len();
        if colset.len() != k {
            return Err(Error::Domain(format!(
                "minor needs equal row and column counts, got {k} and {}",
                colset.len()
            )));
        }
        if rowset.max_vertex().unwrap_or(0) > self.rows || colset.max_vertex().unwrap_or(0) > self.cols {
            return Err(Error::Domain("minor index outside the matrix".into()));
        }
        let mut buf = Vec::with_capacity(k * k);
        for i in rowset.vertices() {
            for j in colset.vertices() {
                buf.push(self.get(i - 1, j - 1));
            }
        }
        Ok(det_in_place(self.field, &mut buf, k))
    }
}

/// Determinant of a `k x k` row-major buffer, destroying it.
pub(crate) fn det_in_place(f: PrimeField, a: &mut [u64], k: usize) -> u64 {
    let mut det = 1 % f.p;
    for c in 0..k {
        let Some(piv) = (c..k).find(|&r| a[r * k + c] != 0) else {
            return 0;
        };
        if piv != c {
            for j in c..k {
                a.swap(piv * k + j, c * k + j);
            }
            det = f.neg(det);
        }
        let pv = a[c * k + c];
        det = f.mul(det, pv);
        let inv = f.inv(pv).unwrap();
        for r in c + 1..k {
            let x = a[r * k + c];
            if x == 0 {
                continue;
            }
            let factor = f.mul(x, inv);
            let (top, bottom) = a.split_at_mut(r * k);
            f.axpy_sub(&mut bottom[c..k], factor, &top[c * k + c..c * k + k]);
        }
    }
    det
}

/// A growing set of linearly independent vectors kept in echelon form.
///
/// Each stored vector has a pivot coordinate where it is 1 and where every
/// later-inserted vector is 0, so membership is a single sweep.
#[derive(Clone, Debug)]
pub struct IncrementalBasis {
    field: PrimeField,
    dim: usize,
    vectors: Vec<(usize, Vec<u64>)>,
}

impl IncrementalBasis {
    pub fn new(field: PrimeField, dim: usize) -> Self {
        IncrementalBasis {
            field,
            dim,
            vectors: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Reduces `v` against the basis; returns the residue.
    pub fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        assert_eq!(v.len(), self.dim);
        for (p, b) in &self.vectors {
            let x = v[*p];
            self.field.axpy_sub(&mut v, x, b);
        }
        v
    }

    /// Adds `v` if it is independent of the basis. Returns whether it was added.
    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(v[p]).unwrap();
        for x in v.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.vectors.push((p, v));
        true
    }
}
