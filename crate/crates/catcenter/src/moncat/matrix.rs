//! Exact dense matrices over a prime field and the Kronecker tensor.
//!
//! Index convention (normative): the basis vector `e_i ⊗ e_j` of
//! `F^m ⊗ F^n` has index `i * n + j`. Under this convention `kron` is
//! strictly associative, so equations between pasted 2-cells can be checked
//! on the nose.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_MAX_PRIME: u32 = 7;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)?;
        f.debug_list().entries(self.to_rows()).finish()
    }
}

impl Matrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        Matrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Build from a row list; entries are reduced mod p. Every row must have
    /// length `cols` (needed to express 0-row matrices).
    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Malformed(format!("matrix row of length {} where {cols} expected", r.len())));
            }
            data.extend(r.iter().map(|x| x % p));
        }
        Ok(Matrix { p, rows: rows.len(), cols, data })
    }

    /// Row-major entries, reduced mod p.
    pub fn from_entries(p: u32, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Malformed("entry count does not match the shape".into()));
        }
        Ok(Matrix { p, rows, cols, data: entries.into_iter().map(|x| x % p).collect() })
    }

    /// The symmetric braiding `F^m ⊗ F^n → F^n ⊗ F^m`, `e_i⊗e_j ↦ e_j⊗e_i`.
    pub fn swap(p: u32, m: usize, n: usize) -> Self {
        let mut s = Self::zeros(p, m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                s.set(j * m + i, i * n + j, 1);
            }
        }
        s
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(|r| r.to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `self · rhs` (apply `rhs` first).
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows || self.p != rhs.p {
            return Err(Error::NotComposable(format!("{}x{} · {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let p = self.p as u64;
        let mut out = Matrix::zeros(self.p, self.rows, rhs.cols);
        let mut acc = vec![0u64; rhs.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|x| *x = 0);
            for l in 0..self.cols {
                let a = self.data[i * self.cols + l] as u64;
                if a == 0 {
                    continue;
                }
                let row = &rhs.data[l * rhs.cols..(l + 1) * rhs.cols];
                for (x, &b) in acc.iter_mut().zip(row) {
                    *x += a * b as u64;
                }
            }
            for (j, x) in acc.iter().enumerate() {
                out.data[i * rhs.cols + j] = (x % p) as u32;
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix> {
        if (self.rows, self.cols, self.p) != (rhs.rows, rhs.cols, rhs.p) {
            return Err(Error::NotComposable("matrix sum of different shapes".into()));
        }
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| (a + b) % self.p).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let p = self.p as u64;
        let data = self.data.iter().map(|&a| ((a as u64 * s as u64) % p) as u32).collect();
        Matrix { data, ..self.clone() }
    }

    /// Inverse by Gauss-Jordan elimination, if the matrix is invertible.
    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let p = self.p as u64;
        let mut a: Vec<Vec<u64>> = self.to_rows().into_iter().map(|r| r.into_iter().map(u64::from).collect()).collect();
        let mut inv: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| (i == j) as u64).collect()).collect();
        for col in 0..n {
            let piv = (col..n).find(|&r| a[r][col] != 0)?;
            a.swap(col, piv);
            inv.swap(col, piv);
            let s = mod_inverse(a[col][col], p);
            for j in 0..n {
                a[col][j] = a[col][j] * s % p;
                inv[col][j] = inv[col][j] * s % p;
            }
            for r in 0..n {
                if r != col && a[r][col] != 0 {
                    let f = a[r][col];
                    for j in 0..n {
                        a[r][j] = (a[r][j] + p * p - f * a[col][j] % p) % p;
                        inv[r][j] = (inv[r][j] + p * p - f * inv[col][j] % p) % p;
                    }
                }
            }
        }
        let data = inv.into_iter().flatten().map(|x| x as u32).collect();
        Some(Matrix { p: self.p, rows: n, cols: n, data })
    }

    /// Every matrix of the given shape, in lexicographic order of entries.
    pub fn all(p: u32, rows: usize, cols: usize) -> impl Iterator<Item = Matrix> {
        let len = rows * cols;
        let total = (p as u64).checked_pow(len as u32).unwrap_or(u64::MAX);
        (0..total).map(move |mut code| {
            let mut data = vec![0u32; len];
            for x in data.iter_mut().rev() {
                *x = (code % p as u64) as u32;
                code /= p as u64;
            }
            Matrix { p, rows, cols, data }
        })
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime: a^(p-2)
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Kronecker product under the row-major convention: row `(i, k)` of the
/// result is `i · rows(b) + k`, column `(j, l)` is `j · cols(b) + l`.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (r, c) = (a.rows * b.rows, a.cols * b.cols);
    let p = a.p as u64;
    let mut out = Matrix::zeros(a.p, r, c);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j) as u64;
            if x == 0 {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let y = b.get(k, l) as u64;
                    out.data[(i * b.rows + k) * c + j * b.cols + l] = (x * y % p) as u32;
                }
            }
        }
    }
    out
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The strict monoidal category of finite-dimensional F_p-vector spaces
/// with chosen bases: objects are dimensions, morphisms `m → n` are `n×m`
/// matrices, ⊗ is [`kron`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatBackend {
    p: u32,
}

impl MatBackend {
    pub fn new(p: u32) -> Result<Self> {
        Self::with_max_prime(p, DEFAULT_MAX_PRIME)
    }

    pub fn with_max_prime(p: u32, max: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        if p > max {
            return Err(Error::Precondition(format!("p = {p} exceeds the configured bound {max}")));
        }
        Ok(MatBackend { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn identity(&self, n: usize) -> Matrix {
        Matrix::identity(self.p, n)
    }

    pub fn swap(&self, m: usize, n: usize) -> Matrix {
        Matrix::swap(self.p, m, n)
    }

    pub fn matrix(&self, cols: usize, rows: &[Vec<u32>]) -> Result<Matrix> {
        Matrix::from_rows(self.p, cols, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unit_is_neutral_for_kron() {
        let m = Matrix::from_rows(2, 2, &[vec![1, 1], vec![0, 1]]).unwrap();
        let one = Matrix::identity(2, 1);
        assert_eq!(kron(&one, &m), m);
        assert_eq!(kron(&m, &one), m);
    }

    #[test]
    fn swap_of_swaps_is_an_involutive_permutation() {
        // the 2×2 transposition matrix
        let s = Matrix::from_rows(2, 2, &[vec![0, 1], vec![1, 0]]).unwrap();
        let k = kron(&s, &s);
        assert_eq!((k.rows(), k.cols()), (4, 4));
        assert_eq!(k.mul(&k).unwrap(), Matrix::identity(2, 4));
        // each row and column has exactly one 1
        for i in 0..k.rows() {
            assert_eq!((0..k.cols()).filter(|&j| k.get(i, j) == 1).count(), 1);
        }
    }

    #[test]
    fn swap_moves_basis_vectors() {
        let s = Matrix::swap(3, 2, 3);
        // e_1 ⊗ e_2 (index 1*3+2 = 5) ↦ e_2 ⊗ e_1 (index 2*2+1 = 5)
        assert_eq!(s.get(5, 5), 1);
        // e_0 ⊗ e_1 (index 1) ↦ e_1 ⊗ e_0 (index 2)
        assert_eq!(s.get(2, 1), 1);
        assert_eq!(s.mul(&Matrix::swap(3, 3, 2)).unwrap(), Matrix::identity(3, 6));
    }

    #[test]
    fn inverse_mod_p() {
        let m = Matrix::from_rows(5, 2, &[vec![2, 1], vec![1, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(5, 2));
        let singular = Matrix::from_rows(2, 2, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn backend_rejects_bad_primes() {
        assert!(MatBackend::new(4).is_err());
        assert!(MatBackend::new(11).is_err());
        assert!(MatBackend::with_max_prime(11, 13).is_ok());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Matrix::all(2, 1, 2).count(), 4);
        assert_eq!(Matrix::all(3, 1, 1).count(), 3);
    }

    fn mat(p: u32, r: usize, c: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(0..p, r * c).prop_map(move |v| Matrix::from_entries(p, r, c, v).unwrap())
    }

    proptest! {
        #[test]
        fn interchange_over_f2(a in mat(2, 2, 2), b in mat(2, 2, 2), c in mat(2, 2, 2), d in mat(2, 2, 2)) {
            // (A⊗B)(C⊗D) = AC⊗BD, both sides evaluated directly
            let lhs = kron(&a, &b).mul(&kron(&c, &d)).unwrap();
            let rhs = kron(&a.mul(&c).unwrap(), &b.mul(&d).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn kron_is_strictly_associative(a in mat(3, 2, 1), b in mat(3, 1, 2), c in mat(3, 2, 2)) {
            prop_assert_eq!(kron(&kron(&a, &b), &c), kron(&a, &kron(&b, &c)));
        }

        #[test]
        fn kron_is_bilinear(a in mat(5, 2, 2), a2 in mat(5, 2, 2), b in mat(5, 1, 2), s in 0u32..5) {
            prop_assert_eq!(kron(&a.add(&a2).unwrap(), &b), kron(&a, &b).add(&kron(&a2, &b)).unwrap());
            prop_assert_eq!(kron(&a.scale(s), &b), kron(&a, &b).scale(s));
        }

        #[test]
        fn kron_by_entry_formula(a in mat(7, 2, 3), b in mat(7, 3, 2)) {
            let k = kron(&a, &b);
            for i in 0..2 { for j in 0..3 { for x in 0..3 { for y in 0..2 {
                prop_assert_eq!(k.get(i * 3 + x, j * 2 + y), a.get(i, j) * b.get(x, y) % 7);
            }}}}
        }
    }
}
