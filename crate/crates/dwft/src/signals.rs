//! Built-in test signals and CSV ingestion.

use std::fs;
use std::path::PathBuf;

use thiserror::Error;

use crate::transform::DataVector;

/// Term-size cutoff for the self-similar cosine series.
const WEIERSTRASS_TERM_CUTOFF: f64 = 1e-15;

#[derive(Debug, Error)]
pub enum SignalError {
    #[error("cannot parse value at line {line}: {content:?}")]
    Parse { line: usize, content: String },
    #[error("input contains no records")]
    EmptyInput,
    #[error("reading input: {0}")]
    Io(#[from] std::io::Error),
    #[error("invalid signal parameter: {0}")]
    InvalidParam(String),
}

/// The built-in signal families.
#[derive(Clone, Debug, PartialEq)]
pub enum SignalKind {
    /// `f(x) = x - 0.5`.
    Linear,
    /// `f(x) = sin(x) + 0.01 sin(105 x)`, `x` in radians (a slow ramp plus a
    /// small fast ripple; there is deliberately no `2*pi` factor).
    LowHighSine,
    /// 0 on `[0, 1/2]`, 1 on `(1/2, 1]`.
    Step,
    /// `f(x) = sum_k r^k cos(pi * 2^k x)`, truncated once `r^K` drops below
    /// 1e-15 (or at an explicit depth).
    Weierstrass { ratio: f64, depth: Option<usize> },
    /// One real value per line, optional single header line.
    Csv { path: PathBuf },
}

/// A signal request: which family and how many samples (`Csv` takes its
/// length from the file instead).
#[derive(Clone, Debug, PartialEq)]
pub struct SignalSpec {
    pub kind: SignalKind,
    pub n: usize,
}

/// Samples the requested signal at `x_i = i/n`, producing a real-tagged
/// vector.
pub fn generate(spec: &SignalSpec) -> Result<DataVector, SignalError> {
    if let SignalKind::Csv { path } = &spec.kind {
        return load_csv(path.as_path());
    }
    let n = spec.n;
    if n == 0 {
        return Err(SignalError::InvalidParam("sample count must be positive".into()));
    }
    let xs = (0..n).map(|i| i as f64 / n as f64);
    let values: Vec<f64> = match &spec.kind {
        SignalKind::Linear => xs.map(|x| x - 0.5).collect(),
        SignalKind::LowHighSine => xs.map(|x| x.sin() + 0.01 * (105.0 * x).sin()).collect(),
        SignalKind::Step => xs.map(|x| if x <= 0.5 { 0.0 } else { 1.0 }).collect(),
        SignalKind::Weierstrass { ratio, depth } => {
            let r = *ratio;
            if !(0.0..1.0).contains(&r) || r == 0.0 {
                return Err(SignalError::InvalidParam(format!(
                    "weierstrass ratio r={r} outside (0,1)"
                )));
            }
            let depth = depth.unwrap_or_else(|| weierstrass_depth(r));
            xs.map(|x| {
                let mut acc = 0.0;
                let mut rk = 1.0;
                for k in 0..depth {
                    acc += rk * (std::f64::consts::PI * f64::exp2(k as f64) * x).cos();
                    rk *= r;
                }
                acc
            })
            .collect()
        }
        SignalKind::Csv { .. } => unreachable!(),
    };
    Ok(DataVector::from_real(values))
}

/// Smallest `K` with `r^K < 1e-15`.
pub fn weierstrass_depth(r: f64) -> usize {
    let mut k = 0usize;
    let mut rk = 1.0;
    while rk >= WEIERSTRASS_TERM_CUTOFF {
        rk *= r;
        k += 1;
    }
    k
}

/// Reads one real value per line. A non-numeric first line is treated as a
/// header and skipped; blank lines are ignored.
pub fn load_csv(path: &std::path::Path) -> Result<DataVector, SignalError> {
    let text = fs::read_to_string(path)?;
    let mut values = Vec::new();
    let mut first_record = true;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        match line.parse::<f64>() {
            Ok(v) => values.push(v),
            Err(_) if first_record => {} // header
            Err(_) => {
                return Err(SignalError::Parse {
                    line: idx + 1,
                    content: line.to_string(),
                })
            }
        }
        first_record = false;
    }
    if values.is_empty() {
        return Err(SignalError::EmptyInput);
    }
    Ok(DataVector::from_real(values))
}
