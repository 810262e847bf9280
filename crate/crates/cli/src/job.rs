//! Job configuration and execution.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use linf_core::norm::{certify_value, linf_norm};
use linf_core::numeric::{sweep_norm, GridSpec};
use linf_core::param::{ParamAnalysis, ParamRange};
use linf_core::poly::Var;
use linf_core::realroots::exact_string;
use linf_core::transfer::TransferMatrix;
use linf_core::{BigRational, Error, Result};
use serde_json::{json, Value};

use crate::bench::{run_bench, BenchSpec};
use crate::json;
use crate::parse::{parse_param_matrix, parse_transfer_matrix};

#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Path(PathBuf),
    Stdin,
    Inline(String),
}

impl Input {
    /// `-` is standard input.
    pub fn from_arg(arg: &str) -> Self {
        if arg == "-" {
            Input::Stdin
        } else {
            Input::Path(arg.into())
        }
    }

    fn read(&self) -> std::io::Result<String> {
        match self {
            Input::Path(p) => fs::read_to_string(p),
            Input::Stdin => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s)?;
                Ok(s)
            }
            Input::Inline(s) => Ok(s.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Compute { input: Input, verify: bool },
    Certify { input: Input, gamma: BigRational },
    Param { input: Input, param: String, range: ParamRange },
    Sweep { input: Input, grid: GridSpec, refine: bool },
    Bench(BenchSpec),
}

#[derive(Clone, Debug, PartialEq)]
pub struct JobConfig {
    pub command: Command,
    pub digits: u32,
}

impl JobConfig {
    pub fn new(command: Command) -> Self {
        JobConfig { command, digits: 10 }
    }

    pub fn validate(&self) -> Result<()> {
        if self.digits == 0 {
            return Err(Error::Domain("digits must be at least 1".into()));
        }
        if let Command::Bench(spec) = &self.command {
            spec.validate()?;
        }
        Ok(())
    }
}

/// Exit status and JSON document of a finished job.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub output: Value,
}

/// 1 for malformed input, 2 for inputs outside the supported domain, 3 for
/// internal invariant violations.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => 1,
        Error::Domain(_) | Error::PoleOnAxis { .. } | Error::Improper { .. } | Error::Degenerate(_) => 2,
        Error::Internal(_) => 3,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::Domain(_) => "domain",
        Error::PoleOnAxis { .. } => "pole_on_axis",
        Error::Improper { .. } => "improper",
        Error::Degenerate(_) => "degenerate",
        Error::Internal(_) => "internal",
    }
}

pub fn error_json(e: &Error) -> Value {
    let mut v = json!({"error": error_kind(e), "message": e.to_string()});
    match e {
        Error::Parse { line, column, .. } => {
            v["line"] = json!(line);
            v["column"] = json!(column);
        }
        Error::PoleOnAxis { row, col, omega } => {
            v["row"] = json!(row);
            v["col"] = json!(col);
            v["omega"] = json!(omega);
        }
        Error::Improper { row, col } => {
            v["row"] = json!(row);
            v["col"] = json!(col);
        }
        _ => {}
    }
    v
}

fn read_matrix(input: &Input) -> Result<TransferMatrix> {
    let text = read_text(input)?;
    parse_transfer_matrix(&text)
}

fn read_text(input: &Input) -> Result<String> {
    input.read().map_err(|e| Error::Parse { line: 0, column: 0, message: format!("cannot read input: {e}") })
}

fn execute(job: &JobConfig) -> Result<(i32, Value)> {
    job.validate()?;
    let digits = job.digits;
    match &job.command {
        Command::Compute { input, verify } => {
            let g = read_matrix(input)?;
            let cert = linf_norm(&g, digits)?;
            let mut v = json::certificate(&cert, digits);
            v["command"] = json!("compute");
            v["matrix"] = json!(g.to_string());
            let mut code = 0;
            if *verify {
                let ok = json::verify_certificate(&v);
                v["verified"] = json!(ok);
                if !ok {
                    code = 3;
                }
            }
            Ok((code, v))
        }
        Command::Certify { input, gamma } => {
            let g = read_matrix(input)?;
            let start = Instant::now();
            let pos = certify_value(&g, gamma)?;
            Ok((
                0,
                json!({
                    "command": "certify",
                    "matrix": g.to_string(),
                    "gamma": exact_string(gamma),
                    "position": pos.as_str(),
                    "timings_ms": {"total": start.elapsed().as_secs_f64() * 1e3},
                }),
            ))
        }
        Command::Param { input, param, range } => {
            let text = read_text(input)?;
            let g = parse_param_matrix(&text, &Var::new(param))?;
            let start = Instant::now();
            let analysis = ParamAnalysis::of_matrix(&g, range)?;
            let mut v = json::param_analysis(&analysis, digits);
            v["command"] = json!("param");
            v["timings_ms"] = json!({"total": start.elapsed().as_secs_f64() * 1e3});
            Ok((0, v))
        }
        Command::Sweep { input, grid, refine } => {
            let g = read_matrix(input)?;
            let start = Instant::now();
            let r = sweep_norm(&g, grid, *refine)?;
            Ok((
                0,
                json!({
                    "command": "sweep",
                    "matrix": g.to_string(),
                    "estimate": r.estimate,
                    "argmax_omega": r.argmax_omega,
                    "grid": {
                        "lo": grid.lo,
                        "hi": grid.hi,
                        "points": grid.points,
                        "spacing": match grid.spacing {
                            linf_core::numeric::Spacing::Log => "log",
                            linf_core::numeric::Spacing::Linear => "linear",
                        },
                        "include_zero": grid.include_zero,
                    },
                    "refined": r.refined,
                    "timings_ms": {"total": start.elapsed().as_secs_f64() * 1e3},
                }),
            ))
        }
        Command::Bench(spec) => {
            let mut v = run_bench(spec, digits)?;
            v["command"] = json!("bench");
            Ok((0, v))
        }
    }
}

pub fn run(job: &JobConfig) -> Outcome {
    match execute(job) {
        Ok((code, output)) => Outcome { code, output },
        Err(e) => Outcome { code: exit_code(&e), output: error_json(&e) },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inline(s: &str) -> Input {
        Input::Inline(s.into())
    }

    #[test]
    fn compute_second_order_system() {
        let out = run(&JobConfig::new(Command::Compute { input: inline("1/(2*s^2+3*s+2)"), verify: true }));
        assert_eq!(out.code, 0);
        assert_eq!(out.output["value_decimal"], "0.5000000000");
        assert_eq!(out.output["provenance"], "critical_point");
        assert_eq!(out.output["value_defining_poly"], json!(["-1", "2"]));
        assert_eq!(out.output["verified"], true);
        assert_eq!(out.output["rejected"][0]["reason"], "no_real_omega");
    }

    #[test]
    fn exit_codes() {
        let parse = run(&JobConfig::new(Command::Compute { input: inline("1/(s+"), verify: false }));
        assert_eq!(parse.code, 1);
        assert_eq!(parse.output["error"], "parse");
        let pole = run(&JobConfig::new(Command::Compute { input: inline("1/(s^2+1)"), verify: false }));
        assert_eq!(pole.code, 2);
        assert_eq!(pole.output["error"], "pole_on_axis");
        let improper = run(&JobConfig::new(Command::Compute { input: inline("s^2/(s+1)"), verify: false }));
        assert_eq!(improper.code, 2);
        let bad = JobConfig { digits: 0, ..JobConfig::new(Command::Compute { input: inline("1"), verify: false }) };
        assert_eq!(run(&bad).code, 2);
        let missing = run(&JobConfig::new(Command::Compute {
            input: Input::Path("/nonexistent/linf".into()),
            verify: false,
        }));
        assert_eq!(missing.code, 1);
    }

    #[test]
    fn certify_levels() {
        let job = |num: i64, den: i64| {
            run(&JobConfig::new(Command::Certify {
                input: inline("1/(2*s^2+3*s+2)"),
                gamma: BigRational::new(num.into(), den.into()),
            }))
        };
        assert_eq!(job(1, 1).output["position"], "above");
        assert_eq!(job(1, 4).output["position"], "below");
        assert_eq!(job(1, 2).output["position"], "equal-within-isolation");
    }

    #[test]
    fn verify_rejects_tampered_certificates() {
        let out = run(&JobConfig::new(Command::Compute { input: inline("1/(s^2+s+1)"), verify: true }));
        assert_eq!(out.output["verified"], true);
        let mut v = out.output.clone();
        v["value_interval"] = json!(["100", "101"]);
        assert!(!json::verify_certificate(&v));
    }
}
