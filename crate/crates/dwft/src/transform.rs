//! The discrete transform: sampling the basis on the uniform grid, plan
//! construction with a reusable factorization, and the FFT-factored fast
//! path `A = F * S` for power-of-two grid sizes.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};
use thiserror::Error;

use crate::linalg::{CscMatrix, DenseMatrix, LinalgError, LuFactors, SparseLu};

/// Absolute tail bound used when a basis series on a non-power-of-two grid
/// never collapses and has to be cut off.
const GRID_SERIES_TOLERANCE: f64 = 1e-12;

/// Condition estimates above this are flagged as ill-conditioned; the
/// transform still proceeds.
pub const CONDITION_WARN_THRESHOLD: f64 = 1e12;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum TransformError {
    #[error("transform matrix is numerically singular: {0}")]
    Singular(#[from] LinalgError),
}

/// A length-n sample vector, tagged when the source data were real.
#[derive(Clone, Debug, PartialEq)]
pub struct DataVector {
    pub values: Vec<Complex64>,
    pub real_tagged: bool,
}

impl DataVector {
    pub fn from_real(values: Vec<f64>) -> Self {
        DataVector {
            values: values.into_iter().map(|v| Complex64::new(v, 0.0)).collect(),
            real_tagged: true,
        }
    }

    pub fn from_complex(values: Vec<Complex64>) -> Self {
        DataVector {
            values,
            real_tagged: false,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.values.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// How the infinite basis series is evaluated on the grid.
///
/// On the grid `i/n` every series frequency acts modulo `n`, so the two
/// readings genuinely differ: `GridExact` sums the whole series (terms with
/// `k*2^m ≡ 0 mod n` collapse into a constant tail), while `Bandlimited`
/// stops once the frequency leaves the signed band `(-n/2, n/2]`, which is
/// the same convention the coefficient transform applies to indices out of
/// range. `Bandlimited` is the mode that makes the transform favor
/// self-similar data in compression; `GridExact` is the literal sampling of
/// the continuum basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BasisSampling {
    #[default]
    GridExact,
    Bandlimited,
}

/// Signed frequency assigned to matrix column `j`: `j` for `j <= n/2`, else
/// `j - n`, mirroring the DFT conjugate-pair layout (Nyquist maps to +n/2).
pub fn column_frequency(j: usize, n: usize) -> i64 {
    assert!(j < n, "column index out of range");
    if j <= n / 2 {
        j as i64
    } else {
        j as i64 - n as i64
    }
}

/// The basis function for frequency `k`, reduced to grid frequencies: a
/// sparse list of `(q, c)` with `0 <= q < n` meaning `c * exp(2*pi*i*q*x)`
/// on the grid. This is simultaneously column `j` of the sparse factor `S`
/// and the recipe for column `j` of the dense matrix.
fn column_spectrum(k: i64, n: usize, a: f64, sampling: BasisSampling) -> Vec<(usize, Complex64)> {
    let mut acc: BTreeMap<usize, f64> = BTreeMap::new();
    let mut add = |q: usize, v: f64| {
        let slot = acc.entry(q).or_insert(0.0);
        *slot += v;
    };

    if k == 0 {
        return vec![(0, Complex64::ONE)];
    }
    let odd = k % 2 != 0;
    let scale = if odd { (1.0 - a * a).sqrt() } else { 1.0 - a * a };

    match sampling {
        BasisSampling::GridExact => {
            let mut q = k.rem_euclid(n as i64) as usize;
            let mut coef = scale;
            loop {
                if q == 0 {
                    // every remaining term is the constant 1 on the grid
                    add(0, if a > 0.0 { coef / (1.0 - a) } else { coef });
                    break;
                }
                add(q, coef);
                if a == 0.0 {
                    break;
                }
                coef *= a;
                q = (q * 2) % n;
                if coef / (1.0 - a) <= GRID_SERIES_TOLERANCE {
                    break;
                }
            }
        }
        BasisSampling::Bandlimited => {
            let mut q = k;
            let mut coef = scale;
            while q.unsigned_abs() <= n as u64 / 2 {
                add(q.rem_euclid(n as i64) as usize, coef);
                if a == 0.0 || coef == 0.0 {
                    break;
                }
                coef *= a;
                q *= 2;
            }
        }
    }
    if !odd {
        add((k / 2).rem_euclid(n as i64) as usize, -a);
    }

    acc.into_iter()
        .filter(|&(_, v)| v != 0.0)
        .map(|(q, v)| (q, Complex64::new(v, 0.0)))
        .collect()
}

fn roots_table(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|r| Complex64::from_polar(1.0, std::f64::consts::TAU * r as f64 / n as f64))
        .collect()
}

fn synthesize(spectrum: &[(usize, Complex64)], i: usize, n: usize, table: &[Complex64]) -> Complex64 {
    spectrum
        .iter()
        .map(|&(q, c)| c * table[(q as u64 * i as u64 % n as u64) as usize])
        .sum()
}

/// Samples the basis function for frequency `k` at the grid points `i/n`.
///
/// For power-of-two `n` under [`BasisSampling::GridExact`] the value is the
/// exact sum of the infinite series (the chain `k*2^m mod n` reaches zero and
/// the remaining geometric tail is added in closed form); other grid sizes
/// truncate the series at an absolute 1e-12 tail bound.
pub fn sample_basis_on_grid(k: i64, n: usize, a: f64, sampling: BasisSampling) -> Vec<Complex64> {
    assert!(n >= 1, "grid size must be positive");
    assert!((0.0..1.0).contains(&a), "self-similarity parameter a={a} outside [0,1)");
    let spectrum = column_spectrum(k, n, a, sampling);
    let table = roots_table(n);
    (0..n).map(|i| synthesize(&spectrum, i, n, &table)).collect()
}

/// Precomputed artifacts for a fixed `(n, a)`: the dense sampled matrix, its
/// LU factorization, a one-norm condition estimate, and optionally the
/// sparse FFT factor.
pub struct TransformPlan {
    n: usize,
    a: f64,
    sampling: BasisSampling,
    matrix: DenseMatrix,
    lu: LuFactors,
    condition_estimate: f64,
    sparse_factor: Option<SparseFactor>,
}

impl TransformPlan {
    /// Builds a plan with the default grid-exact sampling.
    pub fn build(n: usize, a: f64, want_fast: bool) -> Result<Self, TransformError> {
        Self::build_with(n, a, want_fast, BasisSampling::default())
    }

    pub fn build_with(
        n: usize,
        a: f64,
        want_fast: bool,
        sampling: BasisSampling,
    ) -> Result<Self, TransformError> {
        assert!(n >= 1, "grid size must be positive");
        assert!((0.0..1.0).contains(&a), "self-similarity parameter a={a} outside [0,1)");

        let spectra: Vec<Vec<(usize, Complex64)>> = (0..n)
            .into_par_iter()
            .map(|j| column_spectrum(column_frequency(j, n), n, a, sampling))
            .collect();
        let table = roots_table(n);

        let mut matrix = DenseMatrix::zeros(n);
        matrix
            .as_mut_slice()
            .par_chunks_mut(n)
            .enumerate()
            .for_each(|(i, row)| {
                for (j, spectrum) in spectra.iter().enumerate() {
                    row[j] = synthesize(spectrum, i, n, &table);
                }
            });

        let lu = LuFactors::factor(&matrix)?;
        let condition_estimate = matrix.norm_one() * lu.inverse_norm_one_estimate();
        let sparse_factor = (want_fast && n.is_power_of_two())
            .then(|| SparseFactor::from_columns(n, spectra));

        Ok(TransformPlan {
            n,
            a,
            sampling,
            matrix,
            lu,
            condition_estimate,
            sparse_factor,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn sampling(&self) -> BasisSampling {
        self.sampling
    }

    pub fn matrix(&self) -> &DenseMatrix {
        &self.matrix
    }

    pub fn condition_estimate(&self) -> f64 {
        self.condition_estimate
    }

    pub fn is_ill_conditioned(&self) -> bool {
        self.condition_estimate > CONDITION_WARN_THRESHOLD
    }

    pub fn sparse_factor(&self) -> Option<&SparseFactor> {
        self.sparse_factor.as_ref()
    }

    /// Forward transform: solves `A c = b` on the cached factorization.
    pub fn dwft(&self, b: &DataVector) -> DataVector {
        assert_eq!(b.len(), self.n, "data length does not match plan size");
        DataVector::from_complex(self.lu.solve(&b.values))
    }

    /// Inverse transform: `A c`.
    pub fn idwft(&self, c: &DataVector) -> DataVector {
        assert_eq!(c.len(), self.n, "data length does not match plan size");
        DataVector::from_complex(self.matrix.mul_vec(&c.values))
    }
}

/// The sparse half of the factorization `A = F * S`, where `F` is the
/// unnormalized inverse-DFT synthesis matrix `F[i][q] = exp(2*pi*i*i*q/n)`
/// and `S` holds each basis function's grid-frequency coefficients
/// (at most `log2(n) + 1` nonzeros per column).
pub struct SparseFactor {
    s: CscMatrix,
    fft_forward: Arc<dyn Fft<f64>>,
    fft_inverse: Arc<dyn Fft<f64>>,
    solver: OnceLock<Result<SparseLu, TransformError>>,
}

impl SparseFactor {
    fn from_columns(n: usize, spectra: Vec<Vec<(usize, Complex64)>>) -> Self {
        let mut planner = FftPlanner::new();
        SparseFactor {
            s: CscMatrix::from_columns(n, spectra),
            fft_forward: planner.plan_fft_forward(n),
            fft_inverse: planner.plan_fft_inverse(n),
            solver: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.s.n()
    }

    pub fn nnz(&self) -> usize {
        self.s.nnz()
    }

    pub fn max_nnz_per_col(&self) -> usize {
        self.s.max_nnz_per_col()
    }

    /// Entries `(grid frequency, coefficient)` of column `j` of `S`.
    pub fn column_entries(&self, j: usize) -> impl Iterator<Item = (usize, Complex64)> + '_ {
        self.s.col(j)
    }

    /// `A c` in `O(n log n)`: sparse product `S c`, then fast synthesis.
    pub fn fast_idwft(&self, c: &DataVector) -> DataVector {
        assert_eq!(c.len(), self.s.n(), "data length does not match factor size");
        let mut buf = self.s.mul_vec(&c.values);
        self.fft_inverse.process(&mut buf);
        DataVector::from_complex(buf)
    }

    /// `A^{-1} b` in near-linear time: fast analysis `y = F^{-1} b`, then a
    /// sparse triangular solve of `S c = y`.
    pub fn fast_dwft(&self, b: &DataVector) -> Result<DataVector, TransformError> {
        assert_eq!(b.len(), self.s.n(), "data length does not match factor size");
        let lu = self
            .solver
            .get_or_init(|| SparseLu::factor(&self.s).map_err(TransformError::from))
            .as_ref()
            .map_err(Clone::clone)?;
        let mut buf = b.values.clone();
        self.fft_forward.process(&mut buf);
        let inv_n = 1.0 / self.s.n() as f64;
        for z in buf.iter_mut() {
            *z *= inv_n;
        }
        Ok(DataVector::from_complex(lu.solve(&buf)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_data(n: usize, seed: u64) -> DataVector {
        let mut rng = StdRng::seed_from_u64(seed);
        DataVector::from_complex(
            (0..n)
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        )
    }

    fn rel_err(got: &[Complex64], want: &[Complex64]) -> f64 {
        let num: f64 = got
            .iter()
            .zip(want)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt();
        let den: f64 = want.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        num / den.max(f64::MIN_POSITIVE)
    }

    #[test]
    fn column_frequency_convention() {
        assert_eq!(column_frequency(0, 8), 0);
        assert_eq!(column_frequency(3, 8), 3);
        assert_eq!(column_frequency(4, 8), 4); // Nyquist stays positive
        assert_eq!(column_frequency(5, 8), -3);
        assert_eq!(column_frequency(7, 8), -1);
    }

    #[test]
    fn grid_sample_is_dft_column_at_a_zero() {
        let v = sample_basis_on_grid(1, 8, 0.0, BasisSampling::GridExact);
        for (i, z) in v.iter().enumerate() {
            let w = Complex64::from_polar(1.0, std::f64::consts::TAU * i as f64 / 8.0);
            assert!((z - w).norm() < 1e-15);
        }
    }

    #[test]
    fn grid_sample_series_value_at_origin() {
        // full series at x=0: sqrt(1-a^2)/(1-a) = sqrt(3) at a=0.5
        let v = sample_basis_on_grid(1, 1024, 0.5, BasisSampling::GridExact);
        assert!((v[0].re - 3f64.sqrt()).abs() < 1e-12, "got {}", v[0]);
        assert!(v[0].im.abs() < 1e-12);
    }

    #[test]
    fn grid_sample_matches_truncated_series_oracle() {
        // brute force with exact integer frequency reduction, cut at 1e-15
        let (n, a, k) = (8usize, 0.5f64, 1i64);
        let oracle: Vec<Complex64> = (0..n)
            .map(|i| {
                let scale = (1.0 - a * a).sqrt();
                let mut acc = Complex64::ZERO;
                let mut coef = scale;
                let mut m = 0u32;
                while coef / (1.0 - a) > 1e-15 {
                    let q = ((k as i128) << m).rem_euclid(n as i128) as u64;
                    let theta = std::f64::consts::TAU * (q * i as u64 % n as u64) as f64 / n as f64;
                    acc += coef * Complex64::from_polar(1.0, theta);
                    coef *= a;
                    m += 1;
                }
                acc
            })
            .collect();
        let got = sample_basis_on_grid(k, n, a, BasisSampling::GridExact);
        for (g, o) in got.iter().zip(&oracle) {
            assert!((g - o).norm() <= 1e-12, "got {g}, oracle {o}");
        }
    }

    #[test]
    fn grid_sample_non_power_of_two_truncates_by_tolerance() {
        // n=6, k=1: the chain 1, 2, 4, 2, 4, ... never reaches 0 mod 6, so
        // the series is cut once the remaining tail drops below 1e-12
        let (n, a, k) = (6usize, 0.5f64, 1i64);
        let got = sample_basis_on_grid(k, n, a, BasisSampling::GridExact);
        let oracle: Vec<Complex64> = (0..n)
            .map(|i| {
                let scale = (1.0 - a * a).sqrt();
                let mut acc = Complex64::ZERO;
                let mut coef = scale;
                let mut m = 0u32;
                while coef / (1.0 - a) > 1e-15 {
                    let q = ((k as i128) << m).rem_euclid(n as i128) as u64;
                    let theta = std::f64::consts::TAU * (q * i as u64 % n as u64) as f64 / n as f64;
                    acc += coef * Complex64::from_polar(1.0, theta);
                    coef *= a;
                    m += 1;
                }
                acc
            })
            .collect();
        for (g, o) in got.iter().zip(&oracle) {
            assert!((g - o).norm() <= 1e-11, "got {g}, oracle {o}");
        }
        // and no constant fold-in appears for this chain
        let spec = column_spectrum(k, n, a, BasisSampling::GridExact);
        assert!(spec.iter().all(|&(q, _)| q != 0));
    }

    #[test]
    fn column_frequency_odd_grid() {
        assert_eq!(column_frequency(0, 7), 0);
        assert_eq!(column_frequency(3, 7), 3);
        assert_eq!(column_frequency(4, 7), -3);
        assert_eq!(column_frequency(6, 7), -1);
    }

    #[test]
    fn bandlimited_stops_at_the_band_edge() {
        // n=8, k=1: frequencies 1, 2, 4 retained, 8 dropped, no tail
        let spec = column_spectrum(1, 8, 0.5, BasisSampling::Bandlimited);
        let s = 0.75f64.sqrt();
        assert_eq!(spec.len(), 3);
        assert_eq!(spec[0].0, 1);
        assert!((spec[0].1.re - s).abs() < 1e-15);
        assert_eq!(spec[1].0, 2);
        assert!((spec[1].1.re - s * 0.5).abs() < 1e-15);
        assert_eq!(spec[2].0, 4);
        assert!((spec[2].1.re - s * 0.25).abs() < 1e-15);
    }

    #[test]
    fn plan_column_zero_is_all_ones() {
        for sampling in [BasisSampling::GridExact, BasisSampling::Bandlimited] {
            let plan = TransformPlan::build_with(8, 0.5, false, sampling).unwrap();
            for i in 0..8 {
                assert!((plan.matrix().at(i, 0) - Complex64::ONE).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn plan_at_a_zero_is_dft_synthesis() {
        let plan = TransformPlan::build(4, 0.0, false).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let w = Complex64::from_polar(
                    1.0,
                    std::f64::consts::TAU * (i * j % 4) as f64 / 4.0,
                );
                assert!((plan.matrix().at(i, j) - w).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn factorization_inverts_matrix_columns() {
        let plan = TransformPlan::build(8, 0.5, false).unwrap();
        for j in 0..8 {
            let col: Vec<Complex64> = (0..8).map(|i| plan.matrix().at(i, j)).collect();
            let c = plan.dwft(&DataVector::from_complex(col));
            for (idx, z) in c.values.iter().enumerate() {
                let want = if idx == j { 1.0 } else { 0.0 };
                assert!((z - Complex64::new(want, 0.0)).norm() <= 1e-9, "col {j} idx {idx}");
            }
        }
    }

    #[test]
    fn dwft_of_ones_is_first_unit_vector() {
        let plan = TransformPlan::build(8, 0.5, false).unwrap();
        let c = plan.dwft(&DataVector::from_real(vec![1.0; 8]));
        assert!((c.values[0] - Complex64::ONE).norm() < 1e-10);
        assert!(c.values[1..].iter().all(|z| z.norm() < 1e-10));
    }

    #[test]
    fn dwft_dft_example_n4() {
        let plan = TransformPlan::build(4, 0.0, false).unwrap();
        let b = DataVector::from_complex(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(0.0, -1.0),
        ]);
        let c = plan.dwft(&b);
        for (idx, z) in c.values.iter().enumerate() {
            let want = if idx == 1 { 1.0 } else { 0.0 };
            assert!((z - Complex64::new(want, 0.0)).norm() < 1e-14, "idx {idx} got {z}");
        }
    }

    #[test]
    fn idwft_of_unit_vector_is_ones() {
        let plan = TransformPlan::build(8, 0.7, false).unwrap();
        let mut c = vec![Complex64::ZERO; 8];
        c[0] = Complex64::ONE;
        let b = plan.idwft(&DataVector::from_complex(c));
        for z in &b.values {
            assert!((z - Complex64::ONE).norm() < 1e-14);
        }
    }

    #[test]
    fn round_trip_small_sizes() {
        for sampling in [BasisSampling::GridExact, BasisSampling::Bandlimited] {
            for n in [1usize, 2, 3, 7, 8, 64] {
                for a in [0.0, 0.3, 0.9] {
                    let plan = TransformPlan::build_with(n, a, false, sampling).unwrap();
                    let b = random_data(n, (n as u64) * 31 + (a * 10.0) as u64);
                    let rt = plan.idwft(&plan.dwft(&b));
                    let e = rel_err(&rt.values, &b.values);
                    assert!(e <= 1e-10, "n={n} a={a} {sampling:?}: {e:e}");
                }
            }
        }
    }

    #[test]
    fn conjugate_column_symmetry() {
        for sampling in [BasisSampling::GridExact, BasisSampling::Bandlimited] {
            let n = 16;
            let plan = TransformPlan::build_with(n, 0.6, false, sampling).unwrap();
            for j in 1..n / 2 {
                for i in 0..n {
                    let d = (plan.matrix().at(i, n - j) - plan.matrix().at(i, j).conj()).norm();
                    assert!(d <= 1e-14, "{sampling:?} i={i} j={j} d={d:e}");
                }
            }
        }
    }

    #[test]
    fn condition_estimate_is_modest_here() {
        let plan = TransformPlan::build(64, 0.9, false).unwrap();
        assert!(plan.condition_estimate() >= 1.0);
        assert!(!plan.is_ill_conditioned(), "cond = {:e}", plan.condition_estimate());
    }

    #[test]
    fn sparse_factor_identity_at_a_zero() {
        let plan = TransformPlan::build(16, 0.0, true).unwrap();
        let f = plan.sparse_factor().unwrap();
        assert_eq!(f.nnz(), 16);
        for j in 0..16 {
            let entries: Vec<_> = f.column_entries(j).collect();
            assert_eq!(entries, vec![(j, Complex64::ONE)]);
        }
    }

    #[test]
    fn sparse_factor_column_example() {
        // n=8, a=0.5, column j=1 under grid-exact sampling:
        // rows 1, 2, 4 carry sqrt(0.75)*a^m and the tail a^3/(1-a) lands on row 0
        let plan = TransformPlan::build(8, 0.5, true).unwrap();
        let f = plan.sparse_factor().unwrap();
        let col: Vec<_> = f.column_entries(1).collect();
        let s = 0.75f64.sqrt();
        let expect = [(0usize, s * 0.25), (1, s), (2, s * 0.5), (4, s * 0.25)];
        assert_eq!(col.len(), expect.len());
        for ((q, c), (eq, ec)) in col.iter().zip(expect) {
            assert_eq!(*q, eq);
            assert!((c.re - ec).abs() < 1e-15 && c.im == 0.0);
        }
    }

    #[test]
    fn sparse_factor_nnz_bound() {
        for sampling in [BasisSampling::GridExact, BasisSampling::Bandlimited] {
            for n in [8usize, 64, 256] {
                let plan = TransformPlan::build_with(n, 0.5, true, sampling).unwrap();
                let f = plan.sparse_factor().unwrap();
                let bound = (n.trailing_zeros() + 1) as usize;
                assert!(
                    f.max_nnz_per_col() <= bound,
                    "{sampling:?} n={n}: {} > {bound}",
                    f.max_nnz_per_col()
                );
            }
        }
    }

    #[test]
    fn dense_reconstruction_matches_factor() {
        for sampling in [BasisSampling::GridExact, BasisSampling::Bandlimited] {
            let n = 32;
            let plan = TransformPlan::build_with(n, 0.5, true, sampling).unwrap();
            let f = plan.sparse_factor().unwrap();
            let table = roots_table(n);
            let mut worst = 0.0f64;
            for j in 0..n {
                let spectrum: Vec<_> = f.column_entries(j).collect();
                for i in 0..n {
                    let fs = synthesize(&spectrum, i, n, &table);
                    worst = worst.max((fs - plan.matrix().at(i, j)).norm());
                }
            }
            assert!(worst <= 1e-12, "{sampling:?}: max |F*S - A| = {worst:e}");
        }
    }

    #[test]
    fn fast_paths_match_dense_paths() {
        for sampling in [BasisSampling::GridExact, BasisSampling::Bandlimited] {
            for a in [0.0, 0.5] {
                let n = 64;
                let plan = TransformPlan::build_with(n, a, true, sampling).unwrap();
                let f = plan.sparse_factor().unwrap();
                let b = random_data(n, 99);
                let dense_f = plan.dwft(&b);
                let fast_f = f.fast_dwft(&b).unwrap();
                assert!(rel_err(&fast_f.values, &dense_f.values) <= 1e-9);
                let dense_i = plan.idwft(&b);
                let fast_i = f.fast_idwft(&b);
                assert!(rel_err(&fast_i.values, &dense_i.values) <= 1e-9);
            }
        }
    }

    #[test]
    fn fast_dwft_of_ones_is_unit_vector() {
        let plan = TransformPlan::build(64, 0.5, true).unwrap();
        let f = plan.sparse_factor().unwrap();
        let c = f.fast_dwft(&DataVector::from_real(vec![1.0; 64])).unwrap();
        assert!((c.values[0] - Complex64::ONE).norm() <= 1e-10);
        assert!(c.values[1..].iter().all(|z| z.norm() <= 1e-10));
    }

    #[test]
    fn no_sparse_factor_for_non_power_of_two() {
        let plan = TransformPlan::build(12, 0.5, true).unwrap();
        assert!(plan.sparse_factor().is_none());
    }
}
