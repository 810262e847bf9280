use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use linf_cli::bench::BenchSpec;
use linf_cli::job::{error_json, exit_code};
use linf_cli::{run, Command, Input, JobConfig};
use linf_core::numeric::{GridSpec, Spacing};
use linf_core::param::ParamRange;
use linf_core::{BigRational, Error};

/// Certified L-infinity norms of rational transfer matrices.
#[derive(Parser, Debug)]
#[command(name = "linf", version)]
struct Cli {
    /// Significant digits of decimal renderings.
    #[arg(long, default_value_t = 10, global = true)]
    digits: u32,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Exact norm with certificate.
    Compute {
        /// Matrix file, or `-` for standard input.
        input: Option<String>,
        /// Matrix text given inline instead of a file.
        #[arg(long, conflicts_with = "input")]
        expr: Option<String>,
        /// Re-check the certificate from the emitted JSON.
        #[arg(long)]
        verify: bool,
    },
    /// Decide whether a level lies above, below or at the norm.
    Certify {
        input: Option<String>,
        #[arg(long, conflicts_with = "input")]
        expr: Option<String>,
        /// Level as `p/q` or a decimal.
        #[arg(long)]
        gamma: String,
    },
    /// Partition a parameter range into cells of constant root index.
    Param {
        input: Option<String>,
        #[arg(long, conflicts_with = "input")]
        expr: Option<String>,
        /// Parameter name used in the matrix text.
        #[arg(long)]
        param: String,
        /// `lo,hi`; either end may be empty, `-inf` or `inf`.
        #[arg(long, default_value = ",", allow_hyphen_values = true)]
        range: String,
    },
    /// Floating-point frequency sweep.
    Sweep {
        input: Option<String>,
        #[arg(long, conflicts_with = "input")]
        expr: Option<String>,
        /// `lo,hi,points`
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value_t = SpacingArg::Log)]
        spacing: SpacingArg,
        /// Golden-section refinement around the best grid point.
        #[arg(long)]
        refine: bool,
    },
    /// Random benchmark systems, symbolic against sweep.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "2,3")]
        sizes: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        degrees: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Per-instance time limit in seconds for the symbolic computation.
        #[arg(long)]
        timeout: Option<f64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpacingArg {
    Log,
    Linear,
}

fn parse_err(message: String) -> Error {
    Error::Parse { line: 0, column: 0, message }
}

fn input(path: Option<String>, expr: Option<String>) -> Result<Input, Error> {
    match (path, expr) {
        (_, Some(e)) => Ok(Input::Inline(e)),
        (Some(p), None) => Ok(Input::from_arg(&p)),
        (None, None) => Err(parse_err("missing input: give a file, `-` or --expr".into())),
    }
}

fn rational(s: &str) -> Result<BigRational, Error> {
    let s = s.trim();
    let bad = || parse_err(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: linf_core::BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: linf_core::BigInt = d.trim().parse().map_err(|_| bad())?;
        if d == 0.into() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    let g = linf_cli::parse::parse_polynomial(s, &linf_core::poly::Var::s(), &linf_core::poly::Var::g())
        .map_err(|_| bad())?;
    if g.total_degree().unwrap_or(0) != 0 {
        return Err(bad());
    }
    Ok(g.eval(&BigRational::from_integer(0.into()), &BigRational::from_integer(0.into())))
}

fn range(s: &str) -> Result<ParamRange, Error> {
    let (lo, hi) = s.split_once(',').ok_or_else(|| parse_err(format!("range must be lo,hi: {s:?}")))?;
    let end = |t: &str, infinite: &[&str]| -> Result<Option<BigRational>, Error> {
        let t = t.trim();
        if t.is_empty() || infinite.contains(&t) {
            Ok(None)
        } else {
            rational(t).map(Some)
        }
    };
    ParamRange::new(end(lo, &["-inf"])?, end(hi, &["inf", "+inf"])?)
}

fn grid(s: Option<&str>, spacing: SpacingArg) -> Result<GridSpec, Error> {
    let spacing = match spacing {
        SpacingArg::Log => Spacing::Log,
        SpacingArg::Linear => Spacing::Linear,
    };
    let Some(s) = s else {
        return Ok(GridSpec { spacing, ..GridSpec::default() });
    };
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || parse_err(format!("grid must be lo,hi,points: {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].parse().map_err(|_| bad())?;
    let points: usize = parts[2].parse().map_err(|_| bad())?;
    Ok(GridSpec { lo, hi, points, spacing, include_zero: false })
}

fn config(cli: Cli) -> Result<JobConfig, Error> {
    let command = match cli.command {
        Cmd::Compute { input: i, expr, verify } => Command::Compute { input: input(i, expr)?, verify },
        Cmd::Certify { input: i, expr, gamma } => {
            Command::Certify { input: input(i, expr)?, gamma: rational(&gamma)? }
        }
        Cmd::Param { input: i, expr, param, range: r } => {
            Command::Param { input: input(i, expr)?, param, range: range(&r)? }
        }
        Cmd::Sweep { input: i, expr, grid: g, spacing, refine } => {
            Command::Sweep { input: input(i, expr)?, grid: grid(g.as_deref(), spacing)?, refine }
        }
        Cmd::Bench { sizes, degrees, seed, timeout } => {
            let timeout = match timeout {
                Some(t) if t.is_finite() && t > 0.0 => Some(Duration::from_secs_f64(t)),
                Some(t) => return Err(Error::Domain(format!("timeout must be positive, got {t}"))),
                None => None,
            };
            Command::Bench(BenchSpec { sizes, degrees, seed, timeout })
        }
    };
    Ok(JobConfig { command, digits: cli.digits })
}

fn emit(code: i32, v: &serde_json::Value) -> ExitCode {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("LINF_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    let job = match config(cli) {
        Ok(j) => j,
        Err(e) => {
            eprintln!("{e}");
            return emit(exit_code(&e), &error_json(&e));
        }
    };
    let out = run(&job);
    if out.code != 0 {
        if let Some(m) = out.output["message"].as_str() {
            eprintln!("{m}");
        }
    }
    emit(out.code, &out.output)
}
