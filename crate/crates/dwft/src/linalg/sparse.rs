use num_complex::Complex64;

use super::LinalgError;

/// A sparse complex matrix in compressed sparse column form. Row indices are
/// sorted within each column and duplicates are merged at construction.
#[derive(Clone, Debug)]
pub struct CscMatrix {
    n: usize,
    col_ptr: Vec<usize>,
    rows: Vec<usize>,
    vals: Vec<Complex64>,
}

impl CscMatrix {
    /// Builds from per-column entry lists (row, value).
    pub fn from_columns(n: usize, columns: Vec<Vec<(usize, Complex64)>>) -> Self {
        assert_eq!(columns.len(), n);
        let mut col_ptr = Vec::with_capacity(n + 1);
        let mut rows = Vec::new();
        let mut vals = Vec::new();
        col_ptr.push(0);
        for mut col in columns {
            col.sort_by_key(|&(r, _)| r);
            let mut last: Option<usize> = None;
            for (r, v) in col {
                assert!(r < n, "row index out of range");
                if last == Some(r) {
                    let tail = vals.last_mut().unwrap();
                    *tail += v;
                } else {
                    rows.push(r);
                    vals.push(v);
                    last = Some(r);
                }
            }
            col_ptr.push(rows.len());
        }
        CscMatrix {
            n,
            col_ptr,
            rows,
            vals,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nnz(&self) -> usize {
        self.rows.len()
    }

    pub fn col(&self, j: usize) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        let range = self.col_ptr[j]..self.col_ptr[j + 1];
        self.rows[range.clone()]
            .iter()
            .zip(&self.vals[range])
            .map(|(&r, &v)| (r, v))
    }

    pub fn max_nnz_per_col(&self) -> usize {
        (0..self.n)
            .map(|j| self.col_ptr[j + 1] - self.col_ptr[j])
            .max()
            .unwrap_or(0)
    }

    /// `y = S x` by column scatter.
    pub fn mul_vec(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.n, "dimension mismatch");
        let mut y = vec![Complex64::ZERO; self.n];
        for (j, &xj) in x.iter().enumerate() {
            if xj == Complex64::ZERO {
                continue;
            }
            for (r, v) in self.col(j) {
                y[r] += v * xj;
            }
        }
        y
    }

    pub fn max_abs(&self) -> f64 {
        self.vals.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Sparse LU with partial pivoting, left-looking over columns
/// (Gilbert-Peierls). `p[k]` is the original row chosen as the k-th pivot;
/// L has an implicit unit diagonal and original row indices, U is stored by
/// column with pivot-order row indices and a separate diagonal.
#[derive(Clone, Debug)]
pub struct SparseLu {
    n: usize,
    l_colptr: Vec<usize>,
    l_rows: Vec<usize>,
    l_vals: Vec<Complex64>,
    u_colptr: Vec<usize>,
    u_rows: Vec<usize>,
    u_vals: Vec<Complex64>,
    u_diag: Vec<Complex64>,
    p: Vec<usize>,
}

impl SparseLu {
    pub fn factor(a: &CscMatrix) -> Result<Self, LinalgError> {
        let n = a.n;
        let tol = a.max_abs() * n as f64 * f64::EPSILON;

        // pinv[original row] = pivot step, or usize::MAX while unassigned
        let mut pinv = vec![usize::MAX; n];
        let mut p = vec![0usize; n];

        let mut l_colptr = vec![0usize];
        let mut l_rows: Vec<usize> = Vec::new();
        let mut l_vals: Vec<Complex64> = Vec::new();
        let mut u_colptr = vec![0usize];
        let mut u_rows: Vec<usize> = Vec::new();
        let mut u_vals: Vec<Complex64> = Vec::new();
        let mut u_diag: Vec<Complex64> = Vec::with_capacity(n);

        // dense workspace plus visitation stamps
        let mut x = vec![Complex64::ZERO; n];
        let mut row_stamp = vec![usize::MAX; n];
        let mut col_stamp = vec![usize::MAX; n];
        let mut touched_rows: Vec<usize> = Vec::new();
        let mut reach: Vec<usize> = Vec::new();
        let mut dfs_stack: Vec<usize> = Vec::new();

        for j in 0..n {
            // scatter A(:, j)
            touched_rows.clear();
            reach.clear();
            for (r, v) in a.col(j) {
                x[r] = v;
                row_stamp[r] = j;
                touched_rows.push(r);
            }

            // reachability over already-pivotal columns; dependencies only
            // point from earlier pivots to later ones, so an ascending sweep
            // of the reached set is a valid elimination order
            for (r, _) in a.col(j) {
                let k0 = pinv[r];
                if k0 == usize::MAX || col_stamp[k0] == j {
                    continue;
                }
                dfs_stack.push(k0);
                col_stamp[k0] = j;
                while let Some(k) = dfs_stack.pop() {
                    reach.push(k);
                    let range = l_colptr[k]..l_colptr[k + 1];
                    for &r2 in &l_rows[range] {
                        let k2 = pinv[r2];
                        if k2 != usize::MAX && col_stamp[k2] != j {
                            col_stamp[k2] = j;
                            dfs_stack.push(k2);
                        }
                    }
                }
            }
            reach.sort_unstable();

            // numeric left-looking update
            for &k in &reach {
                let pk = p[k];
                if row_stamp[pk] != j {
                    x[pk] = Complex64::ZERO;
                    row_stamp[pk] = j;
                    touched_rows.push(pk);
                }
                let xk = x[pk];
                if xk != Complex64::ZERO {
                    let range = l_colptr[k]..l_colptr[k + 1];
                    for (&r, &lv) in l_rows[range.clone()].iter().zip(&l_vals[range]) {
                        if row_stamp[r] != j {
                            x[r] = Complex64::ZERO;
                            row_stamp[r] = j;
                            touched_rows.push(r);
                        }
                        x[r] -= xk * lv;
                    }
                }
            }

            // pivot among rows not yet assigned
            let mut pivot_row = usize::MAX;
            let mut pivot_mag = 0.0f64;
            for &r in &touched_rows {
                if pinv[r] == usize::MAX {
                    let m = x[r].norm_sqr();
                    if m > pivot_mag || pivot_row == usize::MAX {
                        pivot_mag = m;
                        pivot_row = r;
                    }
                }
            }
            let pivot_abs = pivot_mag.sqrt();
            if pivot_row == usize::MAX || pivot_abs <= tol {
                return Err(LinalgError::Singular {
                    step: j,
                    pivot: pivot_abs,
                });
            }
            let pivot = x[pivot_row];
            pinv[pivot_row] = j;
            p[j] = pivot_row;
            u_diag.push(pivot);

            // U column: reached pivots in ascending order
            for &k in &reach {
                let v = x[p[k]];
                if v != Complex64::ZERO {
                    u_rows.push(k);
                    u_vals.push(v);
                }
            }
            u_colptr.push(u_rows.len());

            // L column: remaining rows scaled by the pivot
            touched_rows.sort_unstable();
            for &r in &touched_rows {
                if pinv[r] == usize::MAX && x[r] != Complex64::ZERO {
                    l_rows.push(r);
                    l_vals.push(x[r] / pivot);
                }
            }
            l_colptr.push(l_rows.len());

            for &r in &touched_rows {
                x[r] = Complex64::ZERO;
            }
        }

        Ok(SparseLu {
            n,
            l_colptr,
            l_rows,
            l_vals,
            u_colptr,
            u_rows,
            u_vals,
            u_diag,
            p,
        })
    }

    /// Solves `S c = y`.
    pub fn solve(&self, y: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(y.len(), self.n, "dimension mismatch");
        let n = self.n;
        // forward through L in original row indexing
        let mut x = y.to_vec();
        for k in 0..n {
            let xk = x[self.p[k]];
            if xk == Complex64::ZERO {
                continue;
            }
            let range = self.l_colptr[k]..self.l_colptr[k + 1];
            for (&r, &v) in self.l_rows[range.clone()].iter().zip(&self.l_vals[range]) {
                x[r] -= xk * v;
            }
        }
        // gather to pivot order, then back-substitute through U columns
        let mut w: Vec<Complex64> = (0..n).map(|k| x[self.p[k]]).collect();
        let mut c = vec![Complex64::ZERO; n];
        for k in (0..n).rev() {
            let ck = w[k] / self.u_diag[k];
            c[k] = ck;
            if ck != Complex64::ZERO {
                let range = self.u_colptr[k]..self.u_colptr[k + 1];
                for (&r, &v) in self.u_rows[range.clone()].iter().zip(&self.u_vals[range]) {
                    w[r] -= ck * v;
                }
            }
        }
        c
    }
}
