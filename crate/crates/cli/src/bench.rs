//! Random benchmark systems: square matrices with integer numerator
//! coefficients in `[-10, 10]` and denominators `prod (s + k)`, `k` in
//! `1..=10`. Each entry of degree `d` has `d` poles and a numerator of
//! degree below `d`.

use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use linf_core::norm::linf_norm;
use linf_core::numeric::{sweep_norm, GridSpec};
use linf_core::poly::{UniPoly, Var};
use linf_core::transfer::{RationalFunction, TransferMatrix};
use linf_core::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq)]
pub struct BenchSpec {
    pub sizes: Vec<usize>,
    pub degrees: Vec<usize>,
    pub seed: u64,
    pub timeout: Option<Duration>,
}

impl Default for BenchSpec {
    fn default() -> Self {
        BenchSpec { sizes: vec![2, 3], degrees: vec![2, 3, 4], seed: 1, timeout: None }
    }
}

impl BenchSpec {
    pub fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() || self.degrees.is_empty() {
            return Err(Error::Domain("bench needs at least one size and one degree".into()));
        }
        if self.sizes.contains(&0) || self.degrees.contains(&0) {
            return Err(Error::Domain("bench sizes and degrees must be at least 1".into()));
        }
        Ok(())
    }
}

fn random_entry(rng: &mut ChaCha8Rng, degree: usize) -> RationalFunction {
    let s = Var::s();
    let den = (0..degree).fold(UniPoly::from_ints(s.clone(), &[1]), |acc, _| {
        let k: i64 = rng.gen_range(1..=10);
        &acc * &UniPoly::from_ints(s.clone(), &[k, 1])
    });
    let mut num: Vec<i64> = (0..degree).map(|_| rng.gen_range(-10..=10)).collect();
    if num.iter().all(|&c| c == 0) {
        num[0] = 1;
    }
    RationalFunction::new(&UniPoly::from_ints(s, &num), &den).expect("nonzero denominator")
}

/// The `size x size` system of the given degree; a fixed function of the
/// generator state.
pub fn random_matrix(rng: &mut ChaCha8Rng, size: usize, degree: usize) -> TransferMatrix {
    let entries = (0..size * size).map(|_| random_entry(rng, degree)).collect();
    TransferMatrix::new(size, size, entries).expect("consistent dimensions")
}

/// All benchmark systems in input order (sizes outer, degrees inner).
pub fn generate(spec: &BenchSpec) -> Vec<(usize, usize, TransferMatrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::new();
    for &n in &spec.sizes {
        for &d in &spec.degrees {
            out.push((n, d, random_matrix(&mut rng, n, d)));
        }
    }
    out
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn symbolic(g: &TransferMatrix, digits: u32, timeout: Option<Duration>) -> (Value, Option<f64>, Duration) {
    let start = Instant::now();
    let result = match timeout {
        None => Some(linf_norm(g, digits)),
        Some(t) => {
            let (tx, rx) = mpsc::channel();
            let g = g.clone();
            thread::spawn(move || {
                let _ = tx.send(linf_norm(&g, digits));
            });
            rx.recv_timeout(t).ok()
        }
    };
    let elapsed = start.elapsed();
    match result {
        None => (json!({"status": "timeout"}), None, elapsed),
        Some(Err(e)) => (json!({"status": "error", "message": e.to_string()}), None, elapsed),
        Some(Ok(c)) => (
            json!({
                "status": "ok",
                "value_decimal": c.decimal(),
                "provenance": c.provenance().as_str(),
            }),
            Some(c.value().to_f64()),
            elapsed,
        ),
    }
}

/// One record per (size, degree): the system, its certified norm, the
/// refined sweep estimate and their relative gap.
pub fn run_bench(spec: &BenchSpec, digits: u32) -> Result<Value> {
    spec.validate()?;
    let jobs = generate(spec);
    let records: Vec<Value> = jobs
        .par_iter()
        .map(|(n, d, g)| {
            let (sym, exact, t_sym) = symbolic(g, digits, spec.timeout);
            let t0 = Instant::now();
            let sweep = sweep_norm(g, &GridSpec::default(), true);
            let t_sweep = t0.elapsed();
            let (sweep_json, est) = match sweep {
                Ok(r) => (json!(r.estimate), Some(r.estimate)),
                Err(e) => (json!({"error": e.to_string()}), None),
            };
            let gap = exact.zip(est).map(|(x, y)| ((x - y) / x).abs());
            json!({
                "size": n,
                "degree": d,
                "matrix": g.to_string(),
                "symbolic": sym,
                "sweep_estimate": sweep_json,
                "relative_gap": gap,
                "agree_1e-6": gap.map(|r| r < 1e-6),
                "timings_ms": {"symbolic": ms(t_sym), "sweep": ms(t_sweep)},
            })
        })
        .collect();
    Ok(json!({
        "seed": spec.seed,
        "sizes": spec.sizes,
        "degrees": spec.degrees,
        "records": records,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_is_deterministic() {
        let spec = BenchSpec { sizes: vec![2, 3], degrees: vec![1, 2], seed: 7, timeout: None };
        let a: Vec<String> = generate(&spec).iter().map(|(_, _, g)| g.to_string()).collect();
        let b: Vec<String> = generate(&spec).iter().map(|(_, _, g)| g.to_string()).collect();
        assert_eq!(a, b);
        let other = BenchSpec { seed: 8, ..spec };
        let c: Vec<String> = generate(&other).iter().map(|(_, _, g)| g.to_string()).collect();
        assert_ne!(a, c);
    }

    #[test]
    fn entries_are_stable_and_strictly_proper() {
        let spec = BenchSpec { sizes: vec![3], degrees: vec![3], seed: 3, timeout: None };
        for (_, _, g) in generate(&spec) {
            for e in g.entries() {
                assert!(e.is_strictly_proper());
                assert!(linf_core::transfer::check_rl_membership(&TransferMatrix::scalar(e.clone())).is_ok());
            }
        }
    }

    #[test]
    fn rejects_empty_spec() {
        let spec = BenchSpec { sizes: vec![], ..BenchSpec::default() };
        assert!(spec.validate().is_err());
        let spec = BenchSpec { degrees: vec![0], ..BenchSpec::default() };
        assert!(spec.validate().is_err());
    }
}
