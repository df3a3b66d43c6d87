//! Discrete Weierstrass Fourier Transform (DWFT).
//!
//! The classical Fourier basis `e_k(x) = exp(2*pi*i*k*x)` is replaced by the
//! self-similar family obtained from the series `sum_m a^m e_k(2^m x)` for a
//! parameter `a` in `[0, 1)`, orthonormalized over `L^2([0,1])`. Sampling the
//! orthonormal functions on the uniform grid `i/n` gives an invertible n-by-n
//! matrix `A`; the forward transform solves `A c = b` and the inverse applies
//! `A`. At `a = 0` both reduce to the classical DFT pair (up to the `1/n`
//! normalization).
//!
//! The crate provides:
//!
//! - [`spectral`]: exact sparse representations of the basis functions, inner
//!   products, and the coefficient-domain transform.
//! - [`transform`]: the sampled matrix, plan construction with a reusable LU
//!   factorization and condition estimate, and an FFT-factored fast path for
//!   power-of-two grid sizes (`A = F * S` with `S` sparse).
//! - [`compress`]: lossy compression by zeroing the middle coefficient band,
//!   reconstruction error vectors, and DWFT-vs-DFT error curves.
//! - [`signals`]: built-in test signals and CSV ingestion.
//!
//! ```
//! use dwft::{DataVector, TransformPlan};
//!
//! let plan = TransformPlan::build(8, 0.5, false).unwrap();
//! let b = DataVector::from_real(vec![1.0; 8]);
//! let c = plan.dwft(&b);
//! // the constant signal is the first basis function
//! assert!((c.values[0].re - 1.0).abs() < 1e-12);
//! assert!(c.values[1..].iter().all(|z| z.norm() < 1e-12));
//! ```

pub mod compress;
mod linalg;
pub mod signals;
pub mod spectral;
pub mod transform;

pub use compress::{error_curve, CompressError, CompressionResult, ErrorCurve, ErrorCurveOptions};
pub use num_complex::Complex64;
pub use signals::{SignalError, SignalKind, SignalSpec};
pub use spectral::{BasisParams, Frequency, SpectralFunction};
pub use transform::{BasisSampling, DataVector, SparseFactor, TransformError, TransformPlan};
