//! Floating-point baseline: largest singular value on a frequency grid with
//! optional golden-section refinement.

use num_complex::Complex64;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::UniPoly;
use crate::transfer::{check_rl_membership, TransferMatrix};

/// Largest singular value of a dense complex matrix given by rows.
pub fn sigma_max(m: &[Vec<Complex64>]) -> Result<f64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if rows == 0 || cols == 0 || m.iter().any(|r| r.len() != cols) {
        return Err(Error::domain("sigma_max needs a nonempty rectangular matrix"));
    }
    if m.iter().flatten().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::domain("non-finite matrix entry"));
    }
    // H = M^H M = A + iB, embedded as the real symmetric [[A, -B], [B, A]]
    let n = cols;
    let mut s = vec![vec![0.0; 2 * n]; 2 * n];
    for i in 0..n {
        for j in 0..n {
            let h: Complex64 = (0..rows).map(|k| m[k][i].conj() * m[k][j]).sum();
            s[i][j] = h.re;
            s[i + n][j + n] = h.re;
            s[i][j + n] = -h.im;
            s[i + n][j] = h.im;
        }
    }
    let eig = jacobi_eigenvalues(s, 1e-12);
    let top = eig.into_iter().fold(0.0f64, f64::max);
    Ok(top.max(0.0).sqrt())
}

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, run
/// until the off-diagonal mass is below `tol` times the diagonal mass.
fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let diag: f64 = (0..n).map(|i| a[i][i] * a[i][i]).sum();
        if off <= tol * tol * diag || off == 0.0 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q] == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Spacing {
    Log,
    Linear,
}

/// Frequency grid `points` samples over `[lo, hi]`, plus `w = 0` if asked.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
    pub spacing: Spacing,
    pub include_zero: bool,
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec { lo: 1e-6, hi: 1e6, points: 10_000, spacing: Spacing::Log, include_zero: true }
    }
}

impl GridSpec {
    pub fn log(lo: f64, hi: f64, points: usize) -> Self {
        GridSpec { lo, hi, points, spacing: Spacing::Log, include_zero: false }
    }

    pub fn linear(lo: f64, hi: f64, points: usize) -> Self {
        GridSpec { lo, hi, points, spacing: Spacing::Linear, include_zero: false }
    }

    fn validate(&self) -> Result<()> {
        let ok = self.lo.is_finite()
            && self.hi.is_finite()
            && self.lo >= 0.0
            && self.lo <= self.hi
            && self.points >= 1
            && (self.spacing == Spacing::Linear || self.lo > 0.0);
        if ok {
            Ok(())
        } else {
            Err(Error::domain(format!("invalid grid {self:?}")))
        }
    }

    /// Grid points in increasing order.
    pub fn points(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.points + 1);
        if self.include_zero && self.lo > 0.0 {
            out.push(0.0);
        }
        if self.points == 1 {
            out.push(self.lo);
            return out;
        }
        let last = (self.points - 1) as f64;
        for k in 0..self.points {
            let t = k as f64 / last;
            out.push(match self.spacing {
                Spacing::Log => {
                    let (a, b) = (self.lo.log10(), self.hi.log10());
                    10f64.powf(a + t * (b - a))
                }
                Spacing::Linear => self.lo + t * (self.hi - self.lo),
            });
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepResult {
    pub estimate: f64,
    pub argmax_omega: f64,
    pub grid: GridSpec,
    pub refined: bool,
}

/// `G(i w)` in floating point.
struct FloatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(Vec<f64>, Vec<f64>)>,
}

fn float_coeffs(p: &UniPoly) -> Vec<f64> {
    p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
}

fn horner(c: &[f64], z: Complex64) -> Complex64 {
    c.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
}

impl FloatMatrix {
    fn new(g: &TransferMatrix) -> Self {
        FloatMatrix {
            rows: g.rows(),
            cols: g.cols(),
            entries: g
                .entries()
                .iter()
                .map(|e| (float_coeffs(e.num()), float_coeffs(e.den())))
                .collect(),
        }
    }

    fn sigma(&self, w: f64) -> f64 {
        let z = Complex64::new(0.0, w);
        let m: Vec<Vec<Complex64>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let (n, d) = &self.entries[i * self.cols + j];
                        horner(n, z) / horner(d, z)
                    })
                    .collect()
            })
            .collect();
        sigma_max(&m).unwrap_or(f64::NAN)
    }
}

/// Golden-section search for the maximum of `f` on `[a, b]`.
fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = b - r * (b - a);
    let mut x2 = a + r * (b - a);
    let (mut f1, mut f2) = (f(x1), f(x2));
    let mut iters = 0;
    while b - a > 1e-10 * (1.0 + a.abs().max(b.abs())) && iters < 500 {
        iters += 1;
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - r * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + r * (b - a);
            f2 = f(x2);
        }
    }
    if f1 >= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Largest `sigma_max(G(i w))` over the grid; with `refine`, a golden-section
/// search between the neighbors of the best grid point.
pub fn sweep_norm(g: &TransferMatrix, grid: &GridSpec, refine: bool) -> Result<SweepResult> {
    check_rl_membership(g).into_result()?;
    grid.validate()?;
    let fm = FloatMatrix::new(g);
    let pts = grid.points();
    let vals: Vec<f64> = pts.par_iter().map(|&w| fm.sigma(w)).collect();
    let mut best = 0;
    for (k, v) in vals.iter().enumerate() {
        if *v > vals[best] || vals[best].is_nan() {
            best = k;
        }
    }
    let mut estimate = vals[best];
    let mut argmax = pts[best];
    if refine && pts.len() > 1 {
        let a = pts[best.saturating_sub(1)];
        let b = pts[(best + 1).min(pts.len() - 1)];
        let (w, v) = golden_max(|w| fm.sigma(w), a, b);
        if v > estimate {
            estimate = v;
            argmax = w;
        }
    }
    if !estimate.is_finite() {
        return Err(Error::internal("sweep produced a non-finite value"));
    }
    Ok(SweepResult { estimate, argmax_omega: argmax, grid: *grid, refined: refine })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transfer::RationalFunction;
    use crate::poly::Var;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn small_matrices() {
        assert!((sigma_max(&[vec![c(2.0)]]).unwrap() - 2.0).abs() < 1e-12);
        let m = vec![vec![c(0.0), c(1.0)], vec![c(0.0), c(0.0)]];
        assert!((sigma_max(&m).unwrap() - 1.0).abs() < 1e-12);
        let m = vec![vec![c(-3.0), c(0.0)], vec![c(0.0), c(0.5)]];
        assert!((sigma_max(&m).unwrap() - 3.0).abs() < 1e-12);
        // rank one: u v^H with |u| = sqrt 2, |v| = sqrt 5
        let i = Complex64::new(0.0, 1.0);
        let m = vec![vec![c(1.0), i * 2.0], vec![i, c(-2.0)]];
        assert!((sigma_max(&m).unwrap() - 10f64.sqrt()).abs() < 1e-12);
        assert!(sigma_max(&[vec![c(f64::NAN)]]).is_err());
        assert!(sigma_max(&[]).is_err());
    }

    #[test]
    fn grid_points() {
        let g = GridSpec::default();
        let p = g.points();
        assert_eq!(p.len(), 10_001);
        assert_eq!(p[0], 0.0);
        assert!((p[1] - 1e-6).abs() < 1e-18 && (p[10_000] - 1e6).abs() < 1e-6);
        assert_eq!(GridSpec::linear(0.0, 1.0, 3).points(), vec![0.0, 0.5, 1.0]);
        assert!(GridSpec::log(0.0, 1.0, 3).validate().is_err());
    }

    #[test]
    fn second_order_refined() {
        let s = Var::s();
        let den = UniPoly::from_ints(s.clone(), &[2, 3, 2]);
        let g = TransferMatrix::scalar(RationalFunction::new(&UniPoly::from_ints(s, &[1]), &den).unwrap());
        let r = sweep_norm(&g, &GridSpec::default(), true).unwrap();
        assert!((r.estimate - 0.5).abs() < 1e-6, "{r:?}");
        assert!(r.refined);
    }
}
