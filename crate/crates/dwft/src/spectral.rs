//! The self-similar spectral basis and its coefficient transform.
//!
//! Everything here is exact in the sense that functions are finite maps from
//! integer frequencies to complex coefficients; truncating the defining
//! series is the only approximation, and the truncation depth is controlled
//! by [`BasisParams`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_complex::Complex64;

/// A signed integer frequency in cycles per unit interval, stored as
/// `odd * 2^exp` so that dyadic multiples of a base frequency never overflow.
/// Deep truncations reach frequencies like `2^280`, far past `i64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Frequency {
    odd: i64,
    exp: u32,
}

impl Frequency {
    pub const ZERO: Frequency = Frequency { odd: 0, exp: 0 };

    pub fn new(value: i64) -> Self {
        if value == 0 {
            return Self::ZERO;
        }
        let exp = value.trailing_zeros();
        Frequency {
            odd: value >> exp,
            exp,
        }
    }

    /// The frequency doubled (one step along the self-similar chain).
    pub fn double(self) -> Self {
        if self.odd == 0 {
            self
        } else {
            Frequency {
                odd: self.odd,
                exp: self.exp + 1,
            }
        }
    }

    pub fn is_zero(self) -> bool {
        self.odd == 0
    }

    /// Exact integer value when it fits in an `i64`.
    pub fn to_i64(self) -> Option<i64> {
        if self.odd == 0 {
            return Some(0);
        }
        self.odd.checked_shl(self.exp).filter(|v| v >> self.exp == self.odd)
    }

    /// Approximate value as a float; exact below 2^53, saturating above the
    /// f64 exponent range.
    pub fn as_f64(self) -> f64 {
        // Cap the exponent so the phase stays finite; beyond f64 resolution
        // any consistent value serves (such terms cancel between expansions
        // that share the frequency).
        let e = self.exp.min(900) as i32;
        self.odd as f64 * f64::exp2(e as f64)
    }
}

fn cmp_abs(a: &Frequency, b: &Frequency) -> Ordering {
    let (oa, ob) = (a.odd.unsigned_abs(), b.odd.unsigned_abs());
    let bits = |o: u64| 64 - o.leading_zeros() as u64;
    let (la, lb) = (bits(oa) + a.exp as u64, bits(ob) + b.exp as u64);
    la.cmp(&lb).then_with(|| {
        // equal bit lengths, so aligning the exponents cannot overflow
        if a.exp >= b.exp {
            (oa << (a.exp - b.exp)).cmp(&ob)
        } else {
            oa.cmp(&(ob << (b.exp - a.exp)))
        }
    })
}

impl Ord for Frequency {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.odd.signum(), other.odd.signum());
        match sa.cmp(&sb) {
            Ordering::Equal if sa == 0 => Ordering::Equal,
            Ordering::Equal if sa > 0 => cmp_abs(self, other),
            Ordering::Equal => cmp_abs(self, other).reverse(),
            unequal => unequal,
        }
    }
}

impl PartialOrd for Frequency {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for Frequency {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.to_i64() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}*2^{}", self.odd, self.exp),
        }
    }
}

/// How the infinite series defining a basis function is truncated.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Truncation {
    /// Keep exactly this many terms of the `m`-series (at least one).
    Depth(usize),
    /// Keep terms until the remaining tail `a^m / (1 - a)` drops below this
    /// absolute bound.
    Tolerance(f64),
}

/// Basis construction parameters: the self-similarity weight `a` and the
/// truncation policy. The dyadic scale is fixed at 2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BasisParams {
    a: f64,
    truncation: Truncation,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

impl BasisParams {
    /// Tolerance-driven truncation at the default 1e-12 tail bound.
    ///
    /// Panics unless `0 <= a < 1`.
    pub fn new(a: f64) -> Self {
        Self::with_tolerance(a, DEFAULT_TOLERANCE)
    }

    pub fn with_tolerance(a: f64, eps: f64) -> Self {
        assert!((0.0..1.0).contains(&a), "self-similarity parameter a={a} outside [0,1)");
        assert!(eps > 0.0, "tolerance must be positive");
        BasisParams {
            a,
            truncation: Truncation::Tolerance(eps),
        }
    }

    pub fn with_depth(a: f64, depth: usize) -> Self {
        assert!((0.0..1.0).contains(&a), "self-similarity parameter a={a} outside [0,1)");
        BasisParams {
            a,
            truncation: Truncation::Depth(depth.max(1)),
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// Effective number of retained series terms: the smallest `M >= 1` with
    /// `a^M / (1 - a) <= eps` when tolerance-driven (1 for `a = 0`).
    pub fn depth(&self) -> usize {
        match self.truncation {
            Truncation::Depth(m) => m.max(1),
            Truncation::Tolerance(eps) => {
                if self.a == 0.0 {
                    return 1;
                }
                let mut m = 1usize;
                let mut tail = self.a / (1.0 - self.a);
                while tail > eps {
                    tail *= self.a;
                    m += 1;
                }
                m
            }
        }
    }
}

/// A trigonometric polynomial in exact sparse form: a finite map from
/// frequency `q` to coefficient `c`, denoting `sum_q c * exp(2*pi*i*q*x)`.
/// No stored coefficient is exactly zero.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct SpectralFunction {
    terms: BTreeMap<Frequency, Complex64>,
}

fn phase(q: Frequency, x: f64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * q.as_f64() * x)
}

impl SpectralFunction {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        let mut f = Self::default();
        f.add_term(Frequency::ZERO, c);
        f
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Frequency, Complex64)>,
    {
        let mut f = Self::default();
        for (q, c) in terms {
            f.add_term(q, c);
        }
        f
    }

    /// Adds `c` at frequency `q`, merging with an existing coefficient and
    /// dropping the entry if the sum is exactly zero.
    pub fn add_term(&mut self, q: Frequency, c: Complex64) {
        if c == Complex64::ZERO {
            return;
        }
        let slot = self.terms.entry(q).or_insert(Complex64::ZERO);
        *slot += c;
        if *slot == Complex64::ZERO {
            self.terms.remove(&q);
        }
    }

    pub fn coefficient(&self, q: Frequency) -> Complex64 {
        self.terms.get(&q).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Frequency, Complex64)> + '_ {
        self.terms.iter().map(|(&q, &c)| (q, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Pointwise value `sum_q c_q exp(2*pi*i*q*x)`.
    pub fn evaluate(&self, x: f64) -> Complex64 {
        self.terms
            .iter()
            .map(|(&q, &c)| c * phase(q, x))
            .sum()
    }

    /// Exact `L^2([0,1])` inner product `<f, g> = sum_q f_q * conj(g_q)`,
    /// using orthonormality of the pure exponentials.
    pub fn inner_product(&self, other: &Self) -> Complex64 {
        // merge-join over the two sorted term lists
        let mut acc = Complex64::ZERO;
        let mut lhs = self.terms.iter().peekable();
        let mut rhs = other.terms.iter().peekable();
        while let (Some(&(qa, ca)), Some(&(qb, cb))) = (lhs.peek(), rhs.peek()) {
            match qa.cmp(qb) {
                Ordering::Less => {
                    lhs.next();
                }
                Ordering::Greater => {
                    rhs.next();
                }
                Ordering::Equal => {
                    acc += ca * cb.conj();
                    lhs.next();
                    rhs.next();
                }
            }
        }
        acc
    }

    pub fn norm(&self) -> f64 {
        self.inner_product(self).re.sqrt()
    }
}

/// The normalized self-similar function built on `e_k`: the constant 1 for
/// `k = 0`, otherwise `sqrt(1-a^2) * sum_{m<M} a^m e_{k*2^m}`.
pub fn basis_hat(k: i64, params: &BasisParams) -> SpectralFunction {
    if k == 0 {
        return SpectralFunction::constant(Complex64::ONE);
    }
    let a = params.a();
    let depth = params.depth();
    let scale = (1.0 - a * a).sqrt();
    let mut f = SpectralFunction::zero();
    let mut q = Frequency::new(k);
    let mut coef = scale;
    for m in 0..depth {
        f.add_term(q, Complex64::new(coef, 0.0));
        if a == 0.0 && m == 0 {
            break;
        }
        coef *= a;
        q = q.double();
    }
    f
}

/// The orthonormalized basis function: `1` for `k = 0`, `basis_hat(k)` for
/// odd `k`, and `(1-a^2) * sum_{m<M} a^m e_{k*2^m} - a * e_{k/2}` for even
/// nonzero `k` (the Gram-Schmidt combination `(hat_k - a*hat_{k/2}) /
/// sqrt(1-a^2)` in closed form).
pub fn basis_tilde(k: i64, params: &BasisParams) -> SpectralFunction {
    if k == 0 {
        return SpectralFunction::constant(Complex64::ONE);
    }
    if k % 2 != 0 {
        return basis_hat(k, params);
    }
    let a = params.a();
    let depth = params.depth();
    let scale = 1.0 - a * a;
    let mut f = SpectralFunction::zero();
    let mut q = Frequency::new(k);
    let mut coef = scale;
    for m in 0..depth {
        f.add_term(q, Complex64::new(coef, 0.0));
        if a == 0.0 && m == 0 {
            break;
        }
        coef *= a;
        q = q.double();
    }
    f.add_term(Frequency::new(k / 2), Complex64::new(-a, 0.0));
    f
}

/// A finite map from signed integer index to complex coefficient.
pub type CoefficientMap = BTreeMap<i64, Complex64>;

/// Transforms classical Fourier coefficients into the self-similar basis:
/// for odd `k`, `sqrt(1-a^2) * sum_m a^m alpha_{k*2^m}`; for even nonzero
/// `k`, `(1-a^2) * sum_m a^m alpha_{k*2^m} - a * alpha_{k/2}`; the index-0
/// coefficient passes through. Indices outside the input range are zero, so
/// the series are finite and the result is exact.
pub fn alpha_to_walpha(alpha: &CoefficientMap, params: &BasisParams) -> CoefficientMap {
    let a = params.a();
    let range = alpha.keys().map(|k| k.abs()).max().unwrap_or(0);
    let mut out = CoefficientMap::new();
    if range == 0 {
        if let Some(&c) = alpha.get(&0) {
            if c != Complex64::ZERO {
                out.insert(0, c);
            }
        }
        return out;
    }
    // an even index in (range, 2*range] still receives -a * alpha_{k/2}
    for k in -2 * range..=2 * range {
        let value = if k == 0 {
            alpha.get(&0).copied().unwrap_or(Complex64::ZERO)
        } else {
            let mut series = Complex64::ZERO;
            let mut q = k;
            let mut coef = 1.0;
            while q.abs() <= range {
                if let Some(&c) = alpha.get(&q) {
                    series += coef * c;
                }
                if a == 0.0 {
                    break;
                }
                coef *= a;
                q = match q.checked_mul(2) {
                    Some(next) => next,
                    None => break,
                };
            }
            if k % 2 != 0 {
                (1.0 - a * a).sqrt() * series
            } else {
                let correction = alpha.get(&(k / 2)).copied().unwrap_or(Complex64::ZERO);
                (1.0 - a * a) * series - a * correction
            }
        };
        if value != Complex64::ZERO {
            out.insert(k, value);
        }
    }
    out
}

/// Evaluates the expansion `sum_k walpha_k * tilde_e_k(x)` at `x`.
pub fn partial_sum(walpha: &CoefficientMap, params: &BasisParams, x: f64) -> Complex64 {
    walpha
        .iter()
        .map(|(&k, &c)| c * basis_tilde(k, params).evaluate(x))
        .sum()
}
