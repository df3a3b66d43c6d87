//! Command-line front end: generate signals, run transforms, compress,
//! sweep error curves, and benchmark the fast path.
//!
//! Exit codes: 0 success, 1 usage error, 2 data/parse error, 3 numerical
//! failure (singular transform matrix).

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dwft::compress::{approximate, error_curve, CompressError, ErrorCurveOptions};
use dwft::signals::{generate, SignalError, SignalKind, SignalSpec};
use dwft::transform::{BasisSampling, DataVector, TransformPlan};

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "dwft",
    version,
    about = "Discrete Weierstrass Fourier Transform toolkit",
    long_about = "Generate test signals, apply the self-similar spectral transform, \
                  compress by coefficient truncation, and compare against the classical DFT."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a test signal and emit its samples
    Gen {
        #[command(flatten)]
        signal: SignalArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Forward transform a signal and emit its coefficients
    Transform {
        #[command(flatten)]
        signal: SignalArgs,
        #[command(flatten)]
        pipeline: PipelineArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Keep k coefficients, reconstruct, and emit the residual
    Compress {
        #[command(flatten)]
        signal: SignalArgs,
        #[command(flatten)]
        pipeline: PipelineArgs,
        /// Number of kept terms (1 ..= n/2+1)
        #[arg(short, long)]
        k: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sweep the reconstruction error over all k for DWFT and DFT
    ErrorCurve {
        #[command(flatten)]
        signal: SignalArgs,
        #[command(flatten)]
        pipeline: PipelineArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Time the dense and FFT-factored transform paths
    Bench {
        /// Grid sizes to time
        #[arg(long, value_delimiter = ',', default_value = "256,1024,4096")]
        sizes: Vec<usize>,
        /// Self-similarity parameter
        #[arg(long, default_value_t = 0.5)]
        a: f64,
        /// Timed repetitions per method (median reported)
        #[arg(long, default_value_t = 9)]
        reps: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum SignalName {
    /// f(x) = x - 0.5
    Linear,
    /// f(x) = sin(x) + 0.01 sin(105 x)
    LowHighSine,
    /// 0 on [0, 1/2], 1 on (1/2, 1]
    Step,
    /// f(x) = sum r^k cos(pi 2^k x)
    Weierstrass,
    /// one value per line from --file
    Csv,
}

#[derive(Args)]
struct SignalArgs {
    /// Signal family
    #[arg(long, value_enum, default_value_t = SignalName::Linear)]
    signal: SignalName,
    /// Sample count
    #[arg(long, default_value_t = 1024)]
    n: usize,
    /// Amplitude ratio of the self-similar signal
    #[arg(long, default_value_t = 0.42)]
    r: f64,
    /// CSV input path (with --signal csv)
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FastMode {
    /// FFT-factored path for power-of-two n, dense otherwise
    Auto,
    On,
    Off,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum SamplingName {
    /// Truncate the basis series at the grid band edge |k 2^m| <= n/2
    Bandlimited,
    /// Sum the basis series exactly on the grid (aliased tail folds in)
    GridExact,
}

#[derive(Args)]
struct PipelineArgs {
    /// Self-similarity parameter in [0, 1)
    #[arg(long)]
    a: f64,
    #[arg(long, value_enum, default_value_t = FastMode::Auto)]
    fast: FastMode,
    #[arg(long, value_enum, default_value_t = SamplingName::Bandlimited)]
    sampling: SamplingName,
}

#[derive(Args)]
struct OutputArgs {
    /// Output path (default: stdout)
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

enum CliError {
    Usage(String),
    Data(String),
    Numeric(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Data(m) | CliError::Numeric(m) => m,
        }
    }
}

impl From<SignalError> for CliError {
    fn from(e: SignalError) -> Self {
        match e {
            SignalError::InvalidParam(_) => CliError::Usage(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

impl From<dwft::TransformError> for CliError {
    fn from(e: dwft::TransformError) -> Self {
        CliError::Numeric(e.to_string())
    }
}

impl From<CompressError> for CliError {
    fn from(e: CompressError) -> Self {
        match e {
            CompressError::OutOfRange { .. } => CliError::Usage(e.to_string()),
            CompressError::Transform(t) => t.into(),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Data(format!("writing output: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let benign = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if benign { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

/// 17 significant digits, enough to round-trip an f64 exactly.
fn fmt(x: f64) -> String {
    format!("{x:.16e}")
}

fn open_output(args: &OutputArgs) -> Result<Box<dyn Write>, CliError> {
    Ok(match &args.output {
        Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|e| {
            CliError::Data(format!("cannot create {}: {e}", path.display()))
        })?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn signal_spec(args: &SignalArgs) -> Result<SignalSpec, CliError> {
    let kind = match args.signal {
        SignalName::Linear => SignalKind::Linear,
        SignalName::LowHighSine => SignalKind::LowHighSine,
        SignalName::Step => SignalKind::Step,
        SignalName::Weierstrass => SignalKind::Weierstrass {
            ratio: args.r,
            depth: None,
        },
        SignalName::Csv => {
            let path = args.file.clone().ok_or_else(|| {
                CliError::Usage("--signal csv requires --file <path>".to_string())
            })?;
            SignalKind::Csv { path }
        }
    };
    Ok(SignalSpec { kind, n: args.n })
}

fn signal_label(args: &SignalArgs) -> String {
    match args.signal {
        SignalName::Linear => "linear".into(),
        SignalName::LowHighSine => "low-high-sine".into(),
        SignalName::Step => "step".into(),
        SignalName::Weierstrass => format!("weierstrass(r={})", args.r),
        SignalName::Csv => format!(
            "csv({})",
            args.file.as_deref().unwrap_or(std::path::Path::new("?")).display()
        ),
    }
}

fn resolve_pipeline(p: &PipelineArgs, n: usize) -> (f64, bool, BasisSampling) {
    let fast = match p.fast {
        FastMode::Auto => n.is_power_of_two(),
        FastMode::On => true,
        FastMode::Off => false,
    };
    let sampling = match p.sampling {
        SamplingName::Bandlimited => BasisSampling::Bandlimited,
        SamplingName::GridExact => BasisSampling::GridExact,
    };
    (p.a, fast, sampling)
}

fn build_plan(n: usize, a: f64, fast: bool, sampling: BasisSampling) -> Result<TransformPlan, CliError> {
    if !(0.0..1.0).contains(&a) {
        return Err(CliError::Usage(format!("--a {a} outside [0, 1)")));
    }
    let plan = TransformPlan::build_with(n, a, fast, sampling)?;
    if plan.is_ill_conditioned() {
        eprintln!(
            "warning: condition estimate {:.3e} exceeds 1e12; results may be inaccurate",
            plan.condition_estimate()
        );
    }
    Ok(plan)
}

/// Forward transform through the fast path when present, falling back to the
/// dense solve if the sparse factorization fails.
fn forward(plan: &TransformPlan, b: &DataVector) -> DataVector {
    if let Some(factor) = plan.sparse_factor() {
        match factor.fast_dwft(b) {
            Ok(c) => return c,
            Err(e) => eprintln!("warning: fast path failed ({e}); using dense solve"),
        }
    }
    plan.dwft(b)
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Gen { signal, output } => run_gen(&signal, &output),
        Command::Transform {
            signal,
            pipeline,
            output,
        } => run_transform(&signal, &pipeline, &output),
        Command::Compress {
            signal,
            pipeline,
            k,
            output,
        } => run_compress(&signal, &pipeline, k, &output),
        Command::ErrorCurve {
            signal,
            pipeline,
            output,
        } => run_error_curve(&signal, &pipeline, &output),
        Command::Bench {
            sizes,
            a,
            reps,
            output,
        } => run_bench(&sizes, a, reps, &output),
    }
}

#[derive(Serialize)]
struct GenReport {
    schema_version: u32,
    command: &'static str,
    signal: String,
    n: usize,
    values: Vec<f64>,
}

fn run_gen(signal: &SignalArgs, output: &OutputArgs) -> Result<(), CliError> {
    let b = generate(&signal_spec(signal)?)?;
    let mut out = open_output(output)?;
    match output.format {
        Format::Csv => {
            writeln!(out, "i,value")?;
            for (i, z) in b.values.iter().enumerate() {
                writeln!(out, "{i},{}", fmt(z.re))?;
            }
        }
        Format::Json => {
            let report = GenReport {
                schema_version: SCHEMA_VERSION,
                command: "gen",
                signal: signal_label(signal),
                n: b.len(),
                values: b.values.iter().map(|z| z.re).collect(),
            };
            serde_json::to_writer_pretty(&mut out, &report)
                .map_err(|e| CliError::Data(e.to_string()))?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct TransformReport {
    schema_version: u32,
    command: &'static str,
    signal: String,
    n: usize,
    a: f64,
    sampling: &'static str,
    condition_estimate: f64,
    coefficients: Vec<(f64, f64)>,
}

fn sampling_label(s: BasisSampling) -> &'static str {
    match s {
        BasisSampling::Bandlimited => "bandlimited",
        BasisSampling::GridExact => "grid-exact",
    }
}

fn run_transform(
    signal: &SignalArgs,
    pipeline: &PipelineArgs,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let b = generate(&signal_spec(signal)?)?;
    let (a, fast, sampling) = resolve_pipeline(pipeline, b.len());
    let plan = build_plan(b.len(), a, fast, sampling)?;
    let c = forward(&plan, &b);
    let mut out = open_output(output)?;
    match output.format {
        Format::Csv => {
            writeln!(out, "index,re,im")?;
            for (i, z) in c.values.iter().enumerate() {
                writeln!(out, "{i},{},{}", fmt(z.re), fmt(z.im))?;
            }
        }
        Format::Json => {
            let report = TransformReport {
                schema_version: SCHEMA_VERSION,
                command: "transform",
                signal: signal_label(signal),
                n: b.len(),
                a,
                sampling: sampling_label(sampling),
                condition_estimate: plan.condition_estimate(),
                coefficients: c.values.iter().map(|z| (z.re, z.im)).collect(),
            };
            serde_json::to_writer_pretty(&mut out, &report)
                .map_err(|e| CliError::Data(e.to_string()))?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct CompressReport {
    schema_version: u32,
    command: &'static str,
    signal: String,
    n: usize,
    a: f64,
    sampling: &'static str,
    k: usize,
    error_norm: f64,
    imag_norm: f64,
    original: Vec<f64>,
    reconstruction: Vec<f64>,
    error: Vec<f64>,
}

fn run_compress(
    signal: &SignalArgs,
    pipeline: &PipelineArgs,
    k: usize,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let b = generate(&signal_spec(signal)?)?;
    let (a, fast, sampling) = resolve_pipeline(pipeline, b.len());
    let plan = build_plan(b.len(), a, fast, sampling)?;
    let result = approximate(&plan, &b, k)?;
    let mut out = open_output(output)?;
    match output.format {
        Format::Csv => {
            writeln!(out, "i,original,reconstruction,error")?;
            for i in 0..b.len() {
                writeln!(
                    out,
                    "{i},{},{},{}",
                    fmt(b.values[i].re),
                    fmt(result.reconstruction.values[i].re),
                    fmt(result.error_vector[i].re)
                )?;
            }
            writeln!(out, "# error_norm={}", fmt(result.error_norm))?;
            writeln!(out, "# imag_norm={}", fmt(result.imag_norm))?;
        }
        Format::Json => {
            let report = CompressReport {
                schema_version: SCHEMA_VERSION,
                command: "compress",
                signal: signal_label(signal),
                n: b.len(),
                a,
                sampling: sampling_label(sampling),
                k,
                error_norm: result.error_norm,
                imag_norm: result.imag_norm,
                original: b.values.iter().map(|z| z.re).collect(),
                reconstruction: result.reconstruction.values.iter().map(|z| z.re).collect(),
                error: result.error_vector.iter().map(|z| z.re).collect(),
            };
            serde_json::to_writer_pretty(&mut out, &report)
                .map_err(|e| CliError::Data(e.to_string()))?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct CurveRow {
    k: usize,
    mu_dwft: f64,
    mu_dft: f64,
}

#[derive(Serialize)]
struct CurveReport {
    schema_version: u32,
    command: &'static str,
    signal: String,
    n: usize,
    a: f64,
    sampling: &'static str,
    crossover: usize,
    rows: Vec<CurveRow>,
}

fn run_error_curve(
    signal: &SignalArgs,
    pipeline: &PipelineArgs,
    output: &OutputArgs,
) -> Result<(), CliError> {
    let b = generate(&signal_spec(signal)?)?;
    let (a, fast, sampling) = resolve_pipeline(pipeline, b.len());
    if !(0.0..1.0).contains(&a) {
        return Err(CliError::Usage(format!("--a {a} outside [0, 1)")));
    }
    let options = ErrorCurveOptions { fast, sampling };
    let curve = match error_curve(a, &b, &options) {
        Ok(c) => c,
        Err(CompressError::Transform(e)) if fast => {
            eprintln!("warning: fast path failed ({e}); using dense sweep");
            error_curve(a, &b, &ErrorCurveOptions { fast: false, sampling })?
        }
        Err(e) => return Err(e.into()),
    };
    let mut out = open_output(output)?;
    match output.format {
        Format::Csv => {
            writeln!(out, "k,mu_dwft,mu_dft")?;
            for k in 1..=curve.max_k() {
                writeln!(
                    out,
                    "{k},{},{}",
                    fmt(curve.mu_dwft_at(k)),
                    fmt(curve.mu_dft_at(k))
                )?;
            }
            writeln!(out, "# crossover={}", curve.crossover)?;
        }
        Format::Json => {
            let report = CurveReport {
                schema_version: SCHEMA_VERSION,
                command: "error-curve",
                signal: signal_label(signal),
                n: curve.n,
                a,
                sampling: sampling_label(sampling),
                crossover: curve.crossover,
                rows: (1..=curve.max_k())
                    .map(|k| CurveRow {
                        k,
                        mu_dwft: curve.mu_dwft_at(k),
                        mu_dft: curve.mu_dft_at(k),
                    })
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut out, &report)
                .map_err(|e| CliError::Data(e.to_string()))?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct BenchRow {
    n: usize,
    method: &'static str,
    seconds: f64,
}

#[derive(Serialize)]
struct BenchReport {
    schema_version: u32,
    command: &'static str,
    a: f64,
    rows: Vec<BenchRow>,
}

fn median_time(reps: usize, mut f: impl FnMut()) -> f64 {
    let mut times: Vec<f64> = (0..reps.max(1))
        .map(|_| {
            let t = Instant::now();
            f();
            t.elapsed().as_secs_f64()
        })
        .collect();
    times.sort_by(f64::total_cmp);
    times[times.len() / 2]
}

fn run_bench(sizes: &[usize], a: f64, reps: usize, output: &OutputArgs) -> Result<(), CliError> {
    if !(0.0..1.0).contains(&a) {
        return Err(CliError::Usage(format!("--a {a} outside [0, 1)")));
    }
    let mut rows = Vec::new();
    for &n in sizes {
        if n == 0 {
            return Err(CliError::Usage("--sizes entries must be positive".into()));
        }
        let build_start = Instant::now();
        let plan = build_plan(n, a, true, BasisSampling::Bandlimited)?;
        rows.push(BenchRow {
            n,
            method: "build_plan",
            seconds: build_start.elapsed().as_secs_f64(),
        });

        let b = generate(&SignalSpec {
            kind: SignalKind::Weierstrass {
                ratio: 0.42,
                depth: None,
            },
            n,
        })?;
        let c = plan.dwft(&b);

        rows.push(BenchRow {
            n,
            method: "dense_idwft",
            seconds: median_time(reps, || {
                std::hint::black_box(plan.idwft(std::hint::black_box(&c)));
            }),
        });
        rows.push(BenchRow {
            n,
            method: "dense_dwft",
            seconds: median_time(reps, || {
                std::hint::black_box(plan.dwft(std::hint::black_box(&b)));
            }),
        });
        if let Some(factor) = plan.sparse_factor() {
            // first call factors S; keep that out of the timed region
            factor.fast_dwft(&b)?;
            rows.push(BenchRow {
                n,
                method: "fast_idwft",
                seconds: median_time(reps, || {
                    std::hint::black_box(factor.fast_idwft(std::hint::black_box(&c)));
                }),
            });
            rows.push(BenchRow {
                n,
                method: "fast_dwft",
                seconds: median_time(reps, || {
                    std::hint::black_box(factor.fast_dwft(std::hint::black_box(&b)).unwrap());
                }),
            });
        }
    }
    let mut out = open_output(output)?;
    match output.format {
        Format::Csv => {
            writeln!(out, "n,method,seconds")?;
            for row in &rows {
                writeln!(out, "{},{},{}", row.n, row.method, fmt(row.seconds))?;
            }
        }
        Format::Json => {
            let report = BenchReport {
                schema_version: SCHEMA_VERSION,
                command: "bench",
                a,
                rows,
            };
            serde_json::to_writer_pretty(&mut out, &report)
                .map_err(|e| CliError::Data(e.to_string()))?;
            writeln!(out)?;
        }
    }
    out.flush()?;
    Ok(())
}
