//! Dense exact linear algebra over prime fields `GF(p)`.
//!
//! Every other module reduces its work to the kernels here: rank, nullspace and
//! Kronecker products. Elimination is deterministic: at each column the first row
//! (top to bottom) with a nonzero entry is taken as pivot, so outputs are
//! reproducible bit for bit.

use std::fmt;

use thiserror::Error;

/// Largest supported modulus.
pub const MAX_MODULUS: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds 2^16")]
    ModulusTooLarge(u64),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// The prime field `GF(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if p > MAX_MODULUS {
            return Err(LinalgError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in GF({})", self.p);
        self.pow(a, self.p as u64 - 2)
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major matrix with entries reduced mod `p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    /// Builds a matrix from arbitrary integers, reducing each entry mod `p`.
    pub fn from_flat(
        field: PrimeField,
        rows: usize,
        cols: usize,
        entries: &[i64],
    ) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::Shape(format!(
                "{} entries given for a {}x{} matrix",
                entries.len(),
                rows,
                cols
            )));
        }
        Ok(Matrix {
            field,
            rows,
            cols,
            data: entries.iter().map(|&x| field.reduce(x)).collect(),
        })
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(LinalgError::Shape(format!(
                "row {} has {} entries, expected {}",
                bad,
                rows[bad].len(),
                cols
            )));
        }
        let flat: Vec<i64> = rows.iter().flatten().copied().collect();
        Self::from_flat(field, rows.len(), cols, &flat)
    }

    /// Builds a matrix whose columns are the given vectors (already reduced).
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            debug_assert_eq!(c.len(), rows);
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j) % field.p();
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.data[i * self.cols + j] = value % self.field.p();
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Matrix product. Panics if the inner dimensions disagree.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let p = self.field.p() as u64;
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                for (slot, &b) in acc.iter_mut().zip(other.row(k)) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (j, &v) in acc.iter().enumerate() {
                out.data[i * other.cols + j] = v as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|i| {
                let s = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p);
                s as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// Adds `c * other` into `self` in place.
    pub fn add_scaled(&mut self, other: &Matrix, c: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(b, c));
        }
    }

    /// Kronecker product, left index major: entry `((i1, i2), (j1, j2))` is
    /// `a[i1][j1] * b[i2][j2]` with row index `i1 * b.rows + i2`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(f, rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..other.rows {
                    let r = i1 * other.rows + i2;
                    for j2 in 0..other.cols {
                        let c = j1 * other.cols + j2;
                        out.data[r * cols + c] = f.mul(a, other.get(i2, j2));
                    }
                }
            }
        }
        out
    }

    /// Concatenates matrices side by side. All must share the row count.
    pub fn hstack(field: PrimeField, rows: usize, parts: &[&Matrix]) -> Matrix {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let mut offset = 0;
        for m in parts {
            assert_eq!(m.rows, rows, "hstack row mismatch");
            for i in 0..rows {
                out.data[i * cols + offset..i * cols + offset + m.cols].copy_from_slice(m.row(i));
            }
            offset += m.cols;
        }
        out
    }

    /// Stacks matrices vertically. All must share the column count.
    pub fn vstack(field: PrimeField, cols: usize, parts: &[&Matrix]) -> Matrix {
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for m in parts {
            assert_eq!(m.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&m.data);
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.reduce_in_place(true);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Eliminating along the shorter side is cheaper and rank is invariant.
        if self.rows > self.cols * 2 {
            return self.transpose().reduce_in_place(false).len();
        }
        self.clone().reduce_in_place(false).len()
    }

    /// Columns form a basis of `{x : self * x = 0}`.
    pub fn nullspace_basis(&self) -> Matrix {
        let f = self.field;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                let v = r.get(row, fc);
                if v != 0 {
                    out.set(pc, k, f.neg(v));
                }
            }
        }
        out
    }

    /// Gaussian elimination in place; returns pivot columns. With `full` the
    /// result is reduced (zeros above pivots too) and pivots are normalized to 1.
    fn reduce_in_place(&mut self, full: bool) -> Vec<usize> {
        let f = self.field;
        let p = f.p() as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(found) = (pivot_row..self.rows).find(|&r| self.data[r * cols + col] != 0)
            else {
                continue;
            };
            if found != pivot_row {
                for j in col..cols {
                    self.data.swap(found * cols + j, pivot_row * cols + j);
                }
            }
            let inv = f.inv(self.data[pivot_row * cols + col]);
            if inv != 1 {
                for j in col..cols {
                    let x = &mut self.data[pivot_row * cols + j];
                    *x = f.mul(*x, inv);
                }
            }
            let (head, tail) = self.data.split_at_mut(pivot_row * cols);
            let (prow, rest) = tail.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let factor = row[col];
                if factor == 0 {
                    return;
                }
                let neg = p - factor as u64;
                for j in col..cols {
                    let b = prow[j];
                    if b != 0 {
                        row[j] = ((row[j] as u64 + neg * b as u64) % p) as u32;
                    }
                }
            };
            for row in rest.chunks_mut(cols) {
                eliminate(row);
            }
            if full {
                for row in head.chunks_mut(cols) {
                    eliminate(row);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }
}

/// Incrementally grown subspace of `GF(p)^n`, kept in echelon form with unit pivots.
///
/// Rows are stored in insertion order; each new row is reduced against all
/// earlier rows, so sequential reduction in insertion order is exact.
#[derive(Debug, Clone)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Pivot column of each basis vector.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Echelon basis, in insertion order.
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient);
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = w[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &r) in w.iter_mut().zip(row).skip(pc) {
                if r != 0 {
                    *x = f.add(*x, f.mul(neg, r));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns `true` if the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let mut w = self.reduce(v);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.field.inv(w[pc]);
        for x in w.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        self.rows.push(w);
        self.pivots.push(pc);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn field_rejects_composites_and_large_moduli() {
        assert_eq!(PrimeField::new(4), Err(LinalgError::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(LinalgError::NotPrime(1)));
        assert_eq!(
            PrimeField::new(65537),
            Err(LinalgError::ModulusTooLarge(65537))
        );
        assert!(PrimeField::new(65521).is_ok());
        let f = gf(7);
        assert_eq!(f.reduce(-1), 6);
        assert_eq!(f.mul(f.inv(3), 3), 1);
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::identity(gf(2), 3).rank(), 3);
        assert_eq!(Matrix::zeros(gf(5), 2, 5).rank(), 0);
        let m = Matrix::from_rows(gf(5), &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn nullspace_examples() {
        assert_eq!(Matrix::identity(gf(3), 2).nullspace_basis().cols(), 0);
        let z = Matrix::zeros(gf(2), 1, 3).nullspace_basis();
        assert_eq!(z.cols(), 3);
        assert_eq!(z.rank(), 3);
        let m = Matrix::from_rows(gf(2), &[vec![1, 1]]).unwrap();
        let k = m.nullspace_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![1, 1]);
    }

    #[test]
    fn kronecker_examples() {
        let f = gf(7);
        assert_eq!(
            Matrix::identity(f, 2).kronecker(&Matrix::identity(f, 3)),
            Matrix::identity(f, 6)
        );
        let f5 = gf(5);
        let a = Matrix::from_rows(f5, &[vec![2]]).unwrap();
        let b = Matrix::from_rows(f5, &[vec![3]]).unwrap();
        assert_eq!(a.kronecker(&b), Matrix::from_rows(f5, &[vec![1]]).unwrap());
        let s = Matrix::from_rows(f5, &[vec![0, 1], vec![1, 0]]).unwrap();
        let one = Matrix::identity(f5, 1);
        assert_eq!(s.kronecker(&one), s);
    }

    #[test]
    fn entries_are_reduced_on_ingestion() {
        let m = Matrix::from_rows(gf(3), &[vec![-1, 7], vec![3, 4]]).unwrap();
        assert_eq!(m.entries(), &[2, 1, 0, 1]);
        assert!(Matrix::from_rows(gf(3), &[vec![1], vec![1, 2]]).is_err());
    }

    #[test]
    fn subspace_tracks_span() {
        let f = gf(3);
        let mut s = Subspace::new(f, 3);
        assert!(s.insert(&[1, 2, 0]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 0, 1])); // (1,2,0) + (0,1,1)
        assert!(s.contains(&[2, 1, 0]));
        assert!(!s.contains(&[0, 0, 1]));
        assert_eq!(s.dim(), 2);
    }

    fn matrix_strategy() -> impl Strategy<Value = Matrix> {
        (prop::sample::select(vec![2u64, 3, 5, 7]), 0usize..6, 0usize..6).prop_flat_map(
            |(p, r, c)| {
                prop::collection::vec(0i64..p as i64, r * c).prop_map(move |v| {
                    Matrix::from_flat(PrimeField::new(p).unwrap(), r, c, &v).unwrap()
                })
            },
        )
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in matrix_strategy()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in matrix_strategy()) {
            let k = m.nullspace_basis();
            prop_assert_eq!(m.cols(), m.rank() + k.cols());
            prop_assert!(m.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn kronecker_rank_multiplies(a in matrix_strategy(), seed in 0i64..1000) {
            let f = a.field();
            let b = Matrix::from_fn(f, 3, 2, |i, j| ((seed + 3 * i as i64 + 5 * j as i64 * seed) % f.p() as i64) as u32);
            prop_assert_eq!(a.kronecker(&b).rank(), a.rank() * b.rank());
            let c = Matrix::identity(f, 2);
            prop_assert_eq!(a.kronecker(&b).kronecker(&c), a.kronecker(&b.kronecker(&c)));
        }
    }
}
