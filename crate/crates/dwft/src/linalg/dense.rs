use num_complex::Complex64;
use rayon::prelude::*;

use super::LinalgError;

/// Minimum trailing-block size before the elimination update is worth
/// fanning out to the thread pool.
const PAR_THRESHOLD: usize = 96;

/// A square complex matrix in row-major storage.
#[derive(Clone, Debug)]
pub struct DenseMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(n: usize) -> Self {
        DenseMatrix {
            n,
            data: vec![Complex64::ZERO; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Complex64] {
        &mut self.data[i * self.n..(i + 1) * self.n]
    }

    /// The full row-major backing storage.
    pub fn as_mut_slice(&mut self) -> &mut [Complex64] {
        &mut self.data
    }

    /// Matrix-vector product `A x`.
    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        let dot = |row: &[Complex64]| -> Complex64 {
            row.iter().zip(x).map(|(&a, &b)| a * b).sum()
        };
        if self.n >= PAR_THRESHOLD {
            self.data.par_chunks(self.n).map(dot).collect()
        } else {
            self.data.chunks(self.n).map(dot).collect()
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest column absolute sum.
    pub fn norm_one(&self) -> f64 {
        let mut sums = vec![0.0f64; self.n];
        for row in self.data.chunks(self.n) {
            for (s, z) in sums.iter_mut().zip(row) {
                *s += z.norm();
            }
        }
        sums.into_iter().fold(0.0, f64::max)
    }
}

/// An LU factorization with partial pivoting: row interchanges `ipiv` applied
/// in order give `P A = L U`, stored packed (unit lower diagonal implicit).
#[derive(Clone, Debug)]
pub struct LuFactors {
    n: usize,
    lu: Vec<Complex64>,
    ipiv: Vec<usize>,
}

impl LuFactors {
    /// Factors `a`, failing when a pivot falls below machine-epsilon scale
    /// relative to the largest entry of `a`.
    pub fn factor(a: &DenseMatrix) -> Result<Self, LinalgError> {
        let n = a.n;
        let mut lu = a.data.clone();
        let mut ipiv = vec![0usize; n];
        let tol = a.max_abs() * n as f64 * f64::EPSILON;

        for k in 0..n {
            // partial pivoting on column k
            let mut best = k;
            let mut best_mag = lu[k * n + k].norm_sqr();
            for i in k + 1..n {
                let mag = lu[i * n + k].norm_sqr();
                if mag > best_mag {
                    best = i;
                    best_mag = mag;
                }
            }
            let pivot_abs = best_mag.sqrt();
            if pivot_abs <= tol {
                return Err(LinalgError::Singular {
                    step: k,
                    pivot: pivot_abs,
                });
            }
            ipiv[k] = best;
            if best != k {
                for j in 0..n {
                    lu.swap(k * n + j, best * n + j);
                }
            }

            let pivot_inv = Complex64::ONE / lu[k * n + k];
            let (head, tail) = lu.split_at_mut((k + 1) * n);
            let pivot_row = &head[k * n..(k + 1) * n];
            let eliminate = |row: &mut [Complex64]| {
                let l = row[k] * pivot_inv;
                row[k] = l;
                for (x, &u) in row[k + 1..].iter_mut().zip(&pivot_row[k + 1..]) {
                    *x -= l * u;
                }
            };
            if n - k > PAR_THRESHOLD {
                tail.par_chunks_mut(n).for_each(eliminate);
            } else {
                tail.chunks_mut(n).for_each(eliminate);
            }
        }
        Ok(LuFactors { n, lu, ipiv })
    }

    /// Solves `A x = b`.
    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(b.len(), self.n, "dimension mismatch");
        let n = self.n;
        let mut x = b.to_vec();
        for k in 0..n {
            x.swap(k, self.ipiv[k]);
        }
        // forward: L y = P b (unit diagonal)
        for i in 1..n {
            let row = &self.lu[i * n..i * n + i];
            let s: Complex64 = row.iter().zip(&x[..i]).map(|(&l, &v)| l * v).sum();
            x[i] -= s;
        }
        // backward: U x = y
        for i in (0..n).rev() {
            let row = &self.lu[i * n + i + 1..(i + 1) * n];
            let s: Complex64 = row.iter().zip(&x[i + 1..]).map(|(&u, &v)| u * v).sum();
            x[i] = (x[i] - s) / self.lu[i * n + i];
        }
        x
    }

    /// Solves `A^H x = b` on the same factors (`A^H = U^H L^H P`).
    pub fn solve_adjoint(&self, b: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(b.len(), self.n, "dimension mismatch");
        let n = self.n;
        let mut x = b.to_vec();
        // U^H w = b: U^H is lower triangular with diagonal conj(U_ii)
        for i in 0..n {
            let mut s = x[i];
            for j in 0..i {
                s -= self.lu[j * n + i].conj() * x[j];
            }
            x[i] = s / self.lu[i * n + i].conj();
        }
        // L^H v = w: upper triangular, unit diagonal
        for i in (0..n).rev() {
            let mut s = x[i];
            for j in i + 1..n {
                s -= self.lu[j * n + i].conj() * x[j];
            }
            x[i] = s;
        }
        // x = P^T v: undo the interchanges in reverse
        for k in (0..n).rev() {
            x.swap(k, self.ipiv[k]);
        }
        x
    }

    /// Hager-style estimate of `||A^{-1}||_1` from the factors (a handful of
    /// solves with `A` and `A^H`).
    pub fn inverse_norm_one_estimate(&self) -> f64 {
        let n = self.n;
        if n == 0 {
            return 0.0;
        }
        let mut x = vec![Complex64::new(1.0 / n as f64, 0.0); n];
        let mut est = 0.0f64;
        let mut last_pos = usize::MAX;
        for iter in 0..5 {
            let y = self.solve(&x);
            let y_norm: f64 = y.iter().map(|z| z.norm()).sum();
            if iter > 0 && y_norm <= est {
                break;
            }
            est = est.max(y_norm);
            let xi: Vec<Complex64> = y
                .iter()
                .map(|z| {
                    let m = z.norm();
                    if m == 0.0 {
                        Complex64::ONE
                    } else {
                        z / m
                    }
                })
                .collect();
            let z = self.solve_adjoint(&xi);
            let (pos, z_max) = z
                .iter()
                .enumerate()
                .map(|(i, v)| (i, v.norm()))
                .fold((0, 0.0), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
            let progress: f64 = z
                .iter()
                .zip(&x)
                .map(|(zi, xi)| (zi.conj() * xi).re)
                .sum();
            if iter > 0 && (z_max <= progress || pos == last_pos) {
                break;
            }
            last_pos = pos;
            x = vec![Complex64::ZERO; n];
            x[pos] = Complex64::ONE;
        }
        est
    }
}
