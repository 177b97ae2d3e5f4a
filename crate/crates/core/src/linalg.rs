//! Small dense complex matrices.
//!
//! Everything in this crate works with a handful of antennas, so a plain
//! row-major `Vec` is all that is needed. The only factorization carried here
//! is the Gram-Schmidt orthonormalization used to draw Haar-distributed
//! unitary matrices.

use std::ops::{Index, IndexMut, Mul};

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    /// Builds a matrix from row-major entries. Panics if the length is wrong.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), rows * cols, "row-major data has wrong length");
        Self { rows, cols, data }
    }

    /// Draws a matrix with i.i.d. `CN(0, 1)` entries: `(g1 + i g2) / sqrt(2)`
    /// with `g1`, `g2` independent standard normals, real part first.
    pub fn standard_complex_gaussian<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Self {
        let mut m = Self::zeros(rows, cols);
        fill_standard_complex_gaussian(&mut m.data, rng);
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Matrix product, `None` when the inner dimensions differ.
    pub fn checked_mul(&self, rhs: &CMatrix) -> Option<CMatrix> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        self.mul_into(rhs, &mut out);
        Some(out)
    }

    /// Writes `self * rhs` into `out`, which must already have the right shape.
    pub fn mul_into(&self, rhs: &CMatrix, out: &mut CMatrix) {
        assert!(self.cols == rhs.rows && out.rows == self.rows && out.cols == rhs.cols);
        for o in out.data.iter_mut() {
            *o = Complex64::new(0.0, 0.0);
        }
        for i in 0..self.rows {
            for (k, &l) in self.row(i).iter().enumerate() {
                let rhs_row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                let out_row = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                for (o, &r) in out_row.iter_mut().zip(rhs_row) {
                    *o += l * r;
                }
            }
        }
    }

    /// Largest entry modulus of `self^H self - I`.
    pub fn unitarity_defect(&self) -> f64 {
        let gram = self.adjoint() * self;
        let id = CMatrix::identity(gram.rows);
        gram.data
            .iter()
            .zip(&id.data)
            .map(|(g, e)| (g - e).norm())
            .fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul<&CMatrix> for &CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.checked_mul(rhs).expect("matrix dimensions do not agree")
    }
}

impl Mul<&CMatrix> for CMatrix {
    type Output = CMatrix;

    fn mul(self, rhs: &CMatrix) -> CMatrix {
        &self * rhs
    }
}

pub(crate) fn fill_standard_complex_gaussian<R: Rng + ?Sized>(out: &mut [Complex64], rng: &mut R) {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    for z in out {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        *z = Complex64::new(re * scale, im * scale);
    }
}

/// Orthonormalizes the columns of a square matrix with twice-iterated
/// classical Gram-Schmidt.
///
/// The triangular factor implied by Gram-Schmidt has a real positive
/// diagonal, which is exactly the phase convention that makes the `Q` factor
/// of a complex Ginibre matrix Haar distributed.
pub fn orthonormalize_columns(z: &CMatrix) -> CMatrix {
    let n = z.rows();
    let m = z.cols();
    let mut cols: Vec<Vec<Complex64>> = (0..m).map(|j| z.column(j)).collect();
    for j in 0..m {
        for _ in 0..2 {
            for k in 0..j {
                let proj: Complex64 = cols[k]
                    .iter()
                    .zip(&cols[j])
                    .map(|(q, v)| q.conj() * v)
                    .sum();
                let (done, rest) = cols.split_at_mut(j);
                for (v, q) in rest[0].iter_mut().zip(&done[k]) {
                    *v -= proj * q;
                }
            }
        }
        let norm = cols[j].iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        for v in cols[j].iter_mut() {
            *v /= norm;
        }
    }
    CMatrix::from_fn(n, m, |i, j| cols[j][i])
}
