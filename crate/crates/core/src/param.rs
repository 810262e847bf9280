//! One-parameter norm analysis: the parameter line is split into open cells
//! on which the norm is a fixed ordered root of `R(xi, g)`.

use std::cmp::Ordering;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;

use crate::elim::{discriminant_generic, resultant_generic};
use crate::error::{Error, Result};
use crate::norm::{linf_norm, linf_norm_of_numerator, NormCertificate, Provenance};
use crate::poly::dense::transpose;
use crate::poly::{BiPoly, Dense, Ring, UniPoly, Var};
use crate::realroots::{isolate_real_roots, AlgebraicNumber};
use crate::transfer::{phi::phi_numerator, RationalFunction, TransferMatrix};

type Z1 = Dense<BigInt>;
type Z2 = Dense<Z1>;
type Z3 = Dense<Z2>;

/// Transfer matrix whose entries are rational in `s` with coefficients
/// polynomial in one parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamTransferMatrix {
    rows: usize,
    cols: usize,
    param: Var,
    entries: Vec<(BiPoly, BiPoly)>,
}

fn check_param(param: &Var) -> Result<()> {
    if [Var::s(), Var::w(), Var::g()].contains(param) {
        return Err(Error::domain(format!("parameter name {param} is reserved")));
    }
    Ok(())
}

impl ParamTransferMatrix {
    /// Row-major `(numerator, denominator)` pairs in `(s, param)`.
    pub fn new(rows: usize, cols: usize, param: Var, entries: Vec<(BiPoly, BiPoly)>) -> Result<Self> {
        check_param(&param)?;
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::domain(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let s = Var::s();
        let mut out = Vec::with_capacity(entries.len());
        for (num, den) in entries {
            if den.is_zero() {
                return Err(Error::domain("zero denominator"));
            }
            out.push((num.aligned(&s, &param)?, den.aligned(&s, &param)?));
        }
        Ok(ParamTransferMatrix { rows, cols, param, entries: out })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn param(&self) -> &Var {
        &self.param
    }

    pub fn entries(&self) -> &[(BiPoly, BiPoly)] {
        &self.entries
    }

    /// The matrix at `param = xi`.
    pub fn specialize(&self, xi: &BigRational) -> Result<TransferMatrix> {
        let mut out = Vec::with_capacity(self.entries.len());
        for (num, den) in &self.entries {
            let n = num.eval_partial(&self.param, xi)?.with_var(Var::s());
            let d = den.eval_partial(&self.param, xi)?.with_var(Var::s());
            if d.is_zero() {
                return Err(Error::domain(format!("a denominator vanishes at {} = {xi}", self.param)));
            }
            out.push(RationalFunction::new(&n, &d)?);
        }
        TransferMatrix::new(self.rows, self.cols, out)
    }

    fn integer_entries(&self) -> Result<Vec<(Z2, Z2)>> {
        let s = Var::s();
        self.entries
            .iter()
            .map(|(num, den)| {
                if num.is_zero() {
                    return Ok((Dense::zero(), Dense::constant(Dense::constant(BigInt::one()))));
                }
                let (cn, n) = num.to_zz(&s)?;
                let (cd, d) = den.to_zz(&s)?;
                let r = cn / cd;
                let a = Dense::constant(Dense::constant(r.numer().clone()));
                let b = Dense::constant(Dense::constant(r.denom().clone()));
                Ok((n.times(&a), d.times(&b)))
            })
            .collect()
    }
}

/// `n(w, g; xi)` stored with outer `w`, middle `g`, inner `xi`.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamNumerator {
    param: Var,
    n: Z3,
}

impl ParamNumerator {
    /// Terms `(c, i, j, k)` standing for `c w^i g^j xi^k`.
    pub fn from_terms(param: Var, terms: &[(BigRational, u32, u32, u32)]) -> Result<Self> {
        check_param(&param)?;
        let den = terms.iter().fold(BigInt::one(), |acc, t| acc.lcm(t.0.denom()));
        let dim = |f: fn(&(BigRational, u32, u32, u32)) -> u32| {
            terms.iter().map(f).max().map_or(0, |d| d as usize + 1)
        };
        let (di, dj, dk) = (dim(|t| t.1), dim(|t| t.2), dim(|t| t.3));
        let mut grid = vec![vec![vec![BigInt::zero(); dk]; dj]; di];
        for (c, i, j, k) in terms {
            let v = (c * BigRational::from_integer(den.clone())).to_integer();
            grid[*i as usize][*j as usize][*k as usize] += v;
        }
        let n = Dense::new(
            grid.into_iter()
                .map(|row| Dense::new(row.into_iter().map(Dense::new).collect()))
                .collect(),
        );
        Ok(ParamNumerator { param, n })
    }

    /// Numerator of `det(g^2 I - G(-s)^T G(s))` on `s = i w`, with the
    /// parameter kept symbolic.
    pub fn from_matrix(g: &ParamTransferMatrix) -> Result<Self> {
        let entries = g.integer_entries()?;
        let out = phi_numerator(g.rows, g.cols, &entries)?;
        Ok(ParamNumerator { param: g.param.clone(), n: transpose(&out.n) })
    }

    pub fn param(&self) -> &Var {
        &self.param
    }

    pub fn is_zero(&self) -> bool {
        self.n.is_zero_poly()
    }

    /// `n` at `param = xi`, as a polynomial in `(w, g)`.
    pub fn specialize(&self, xi: &BigRational) -> BiPoly {
        let w = Var::w();
        let g = Var::g();
        let mut terms = Vec::new();
        for (i, row) in self.n.coeffs().iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                let v = eval_z1(c, xi);
                if !v.is_zero() {
                    terms.push(((i as u32, j as u32), v));
                }
            }
        }
        BiPoly::from_terms(w, g, terms)
    }
}

fn eval_z1(p: &Z1, x: &BigRational) -> BigRational {
    p.coeffs()
        .iter()
        .rev()
        .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
}

fn z1_to_uni(var: &Var, p: &Z1) -> UniPoly {
    UniPoly::from_dense(var.clone(), p)
}

/// Parameter interval; `None` is an infinite end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRange {
    lo: Option<BigRational>,
    hi: Option<BigRational>,
}

impl ParamRange {
    pub fn new(lo: Option<BigRational>, hi: Option<BigRational>) -> Result<Self> {
        if let (Some(a), Some(b)) = (&lo, &hi) {
            if a >= b {
                return Err(Error::domain(format!("empty parameter range ({a}, {b})")));
            }
        }
        Ok(ParamRange { lo, hi })
    }

    pub fn all() -> Self {
        ParamRange { lo: None, hi: None }
    }

    pub fn positive() -> Self {
        ParamRange { lo: Some(BigRational::zero()), hi: None }
    }

    pub fn lo(&self) -> Option<&BigRational> {
        self.lo.as_ref()
    }

    pub fn hi(&self) -> Option<&BigRational> {
        self.hi.as_ref()
    }

    fn contains_algebraic(&self, a: &AlgebraicNumber) -> bool {
        self.lo.as_ref().is_none_or(|l| a.cmp_rational(l) == Ordering::Greater)
            && self.hi.as_ref().is_none_or(|h| a.cmp_rational(h) == Ordering::Less)
    }
}

/// End point of a cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(AlgebraicNumber),
    PosInf,
}

impl Bound {
    pub fn as_finite(&self) -> Option<&AlgebraicNumber> {
        match self {
            Bound::Finite(a) => Some(a),
            _ => None,
        }
    }

    pub fn to_decimal(&self, digits: u32) -> String {
        match self {
            Bound::NegInf => "-inf".into(),
            Bound::PosInf => "inf".into(),
            Bound::Finite(a) => a.to_decimal(digits),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(10))
    }
}

/// Open cell `(lo, hi)` of the parameter line.
#[derive(Clone, Debug)]
pub struct ParamCell {
    lo: Bound,
    hi: Bound,
    inner: (Option<BigRational>, Option<BigRational>),
    sample: BigRational,
    root_index: usize,
    root_count: usize,
    value: AlgebraicNumber,
    provenance: Provenance,
}

impl ParamCell {
    pub fn lo(&self) -> &Bound {
        &self.lo
    }

    pub fn hi(&self) -> &Bound {
        &self.hi
    }

    pub fn sample(&self) -> &BigRational {
        &self.sample
    }

    /// 1-based position of the norm among the real roots of
    /// `squarefree(R)(sample, g)`, counted from below; 0 when the norm at the
    /// sample is not a root of `R` (an asymptote or the limit at infinity).
    pub fn root_index(&self) -> usize {
        self.root_index
    }

    pub fn root_count(&self) -> usize {
        self.root_count
    }

    /// The norm at the sample.
    pub fn value_at_sample(&self) -> &AlgebraicNumber {
        &self.value
    }

    pub fn provenance_at_sample(&self) -> Provenance {
        self.provenance
    }

    /// Rationals `a`, `b` with `lo <= a < b <= hi`, strictly inside when the
    /// bound is irrational; `None` for an infinite end.
    pub fn rational_bounds(&self) -> (Option<&BigRational>, Option<&BigRational>) {
        (self.inner.0.as_ref(), self.inner.1.as_ref())
    }

    /// Whether `xi` lies strictly inside the cell.
    pub fn contains(&self, xi: &BigRational) -> bool {
        let above = match &self.lo {
            Bound::NegInf => true,
            Bound::PosInf => false,
            Bound::Finite(a) => a.cmp_rational(xi) == Ordering::Less,
        };
        let below = match &self.hi {
            Bound::NegInf => false,
            Bound::PosInf => true,
            Bound::Finite(b) => b.cmp_rational(xi) == Ordering::Greater,
        };
        above && below
    }
}

/// Rationals strictly between two bounds (or equal to a rational bound):
/// `a < A < B < b` for irrational ends, `A = a` for rational ones.
fn separate(lo: &Bound, hi: &Bound) -> (Option<BigRational>, Option<BigRational>) {
    let mut lo_a = lo.as_finite().cloned();
    let mut hi_a = hi.as_finite().cloned();
    loop {
        let a = lo_a.as_ref().map(|x| x.as_rational().unwrap_or_else(|| x.interval().hi().clone()));
        let b = hi_a.as_ref().map(|x| x.as_rational().unwrap_or_else(|| x.interval().lo().clone()));
        match (&a, &b) {
            (Some(p), Some(q)) if p >= q => {
                lo_a = lo_a.map(|x| x.bisect());
                hi_a = hi_a.map(|x| x.bisect());
            }
            _ => return (a, b),
        }
    }
}

/// The dyadic rational `m / 2^k` in the open interval with the smallest `k`,
/// then the smallest `|m|`. Half-infinite intervals get the nearest integer.
fn simplest_dyadic(lo: Option<&BigRational>, hi: Option<&BigRational>) -> BigRational {
    let int = BigRational::from_integer;
    match (lo, hi) {
        (None, None) => BigRational::zero(),
        (Some(a), None) => {
            if a.is_negative() {
                BigRational::zero()
            } else {
                int(a.floor().to_integer() + 1)
            }
        }
        (None, Some(b)) => {
            if b.is_positive() {
                BigRational::zero()
            } else {
                int(b.ceil().to_integer() - 1)
            }
        }
        (Some(a), Some(b)) => {
            let mut scale = BigInt::one();
            loop {
                let s = int(scale.clone());
                let lo_m: BigInt = (a * &s).floor().to_integer() + 1;
                let hi_m: BigInt = (b * &s).ceil().to_integer() - 1;
                if lo_m <= hi_m {
                    let m = if lo_m.is_positive() {
                        lo_m
                    } else if hi_m.is_negative() {
                        hi_m
                    } else {
                        BigInt::zero()
                    };
                    return BigRational::new(m, scale);
                }
                scale <<= 1;
            }
        }
    }
}

/// Result of partitioning: cells, `R` and the boundary polynomial.
#[derive(Clone, Debug)]
pub struct ParamAnalysis {
    param: Var,
    matrix: Option<ParamTransferMatrix>,
    numerator: ParamNumerator,
    range: ParamRange,
    candidates: BiPoly,
    boundary_poly: UniPoly,
    boundaries: Vec<AlgebraicNumber>,
    cells: Vec<ParamCell>,
}

/// The eliminants of a parametric numerator.
struct Eliminants {
    /// square-free `R` in `(g, xi)`, outer `g`
    r: Z2,
    /// product of everything whose real roots may change the root structure
    boundary: Z1,
}

fn eliminants(n: &Z3) -> Result<Eliminants> {
    if n.is_zero_poly() {
        return Err(Error::Degenerate("numerator vanishes identically".into()));
    }
    let nbar = n.squarefree_part();
    let (content, pp) = nbar.content_primitive();
    // R = content * Res_w(pp, d pp / dw); the content holds the w-free factors
    let res = if pp.degree().unwrap_or(0) >= 1 {
        resultant_generic(&pp, &pp.derivative())
    } else {
        Dense::constant(Dense::constant(BigInt::one()))
    };
    let r_full = res.times(&content);
    if r_full.is_zero_poly() {
        return Err(Error::internal("parametric resultant vanishes identically"));
    }
    let r = r_full.squarefree_part();
    let (r_cont, r_pp) = r.content_primitive();
    let mut factors: Vec<Z1> = vec![r_cont, r_pp.lc()];
    if let Some(d) = discriminant_generic(&r_pp) {
        factors.push(d);
    }
    let lc_w = nbar.lc();
    let (l_cont, l_pp) = lc_w.content_primitive();
    factors.push(l_cont);
    factors.push(l_pp.lc());
    if let Some(d) = discriminant_generic(&l_pp.squarefree_part()) {
        factors.push(d);
    }
    factors.push(content.content());
    let mut boundary = Dense::constant(BigInt::one());
    for f in factors {
        if f.is_zero_poly() {
            return Err(Error::internal("boundary factor vanishes identically"));
        }
        if !f.is_constant() {
            boundary = boundary.times(&f.squarefree_part()).squarefree_part();
        }
    }
    Ok(Eliminants { r, boundary })
}

/// Real roots of `squarefree(R)(xi, g)` in increasing order.
fn roots_at(r: &BiPoly, param: &Var, xi: &BigRational) -> Result<Vec<AlgebraicNumber>> {
    let p = r.eval_partial(param, xi)?.with_var(Var::g());
    if p.is_zero() {
        return Err(Error::Degenerate(format!("R vanishes identically at {param} = {xi}")));
    }
    if p.is_constant() {
        return Ok(Vec::new());
    }
    isolate_real_roots(&p.squarefree_part()?)
}

impl ParamAnalysis {
    /// Partition `range` for a parametric transfer matrix; each cell's norm
    /// at its sample comes from the full algorithm on the specialized matrix.
    pub fn of_matrix(g: &ParamTransferMatrix, range: &ParamRange) -> Result<Self> {
        let numerator = ParamNumerator::from_matrix(g)?;
        Self::build(numerator, Some(g.clone()), range)
    }

    /// Partition `range` for a bare numerator. Without a matrix the largest
    /// singular value at infinity is taken as 0.
    pub fn of_numerator(n: &ParamNumerator, range: &ParamRange) -> Result<Self> {
        Self::build(n.clone(), None, range)
    }

    fn build(numerator: ParamNumerator, matrix: Option<ParamTransferMatrix>, range: &ParamRange) -> Result<Self> {
        let param = numerator.param.clone();
        let el = eliminants(&numerator.n)?;
        let candidates = BiPoly::from_zz(Var::g(), param.clone(), &el.r);
        let boundary_poly = z1_to_uni(&param, &el.boundary);
        let boundaries: Vec<AlgebraicNumber> = if boundary_poly.is_constant() {
            Vec::new()
        } else {
            isolate_real_roots(&boundary_poly)?
                .into_iter()
                .filter(|a| range.contains_algebraic(a))
                .map(|a| a.simplify())
                .collect()
        };
        let mut ends = vec![range.lo.clone().map_or(Bound::NegInf, |r| {
            Bound::Finite(AlgebraicNumber::from_rational(param.clone(), r))
        })];
        ends.extend(boundaries.iter().cloned().map(Bound::Finite));
        ends.push(range.hi.clone().map_or(Bound::PosInf, |r| {
            Bound::Finite(AlgebraicNumber::from_rational(param.clone(), r))
        }));
        let zero = AlgebraicNumber::from_rational(Var::g(), BigRational::zero());
        let cells = ends
            .par_windows(2)
            .map(|w| -> Result<ParamCell> {
                let (lo, hi) = (w[0].clone(), w[1].clone());
                let inner = separate(&lo, &hi);
                let sample = simplest_dyadic(inner.0.as_ref(), inner.1.as_ref());
                let cert = match &matrix {
                    Some(m) => linf_norm(&m.specialize(&sample)?, 10)?,
                    None => linf_norm_of_numerator(&numerator.specialize(&sample), &zero, 10)?,
                };
                let roots = roots_at(&candidates, &param, &sample)?;
                let value = cert.value().clone();
                let root_index = roots
                    .iter()
                    .position(|r| r.compare(&value) == Ordering::Equal)
                    .map_or(0, |i| i + 1);
                Ok(ParamCell {
                    lo,
                    hi,
                    inner,
                    sample,
                    root_index,
                    root_count: roots.len(),
                    value,
                    provenance: cert.provenance(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ParamAnalysis {
            param,
            matrix,
            numerator,
            range: range.clone(),
            candidates,
            boundary_poly,
            boundaries,
            cells,
        })
    }

    pub fn param(&self) -> &Var {
        &self.param
    }

    pub fn range(&self) -> &ParamRange {
        &self.range
    }

    pub fn numerator(&self) -> &ParamNumerator {
        &self.numerator
    }

    /// Square-free `R(g, xi)`.
    pub fn candidate_poly(&self) -> &BiPoly {
        &self.candidates
    }

    /// Square-free product whose real roots are the potential boundaries.
    pub fn boundary_poly(&self) -> &UniPoly {
        &self.boundary_poly
    }

    /// Boundaries strictly inside the range, increasing.
    pub fn boundaries(&self) -> &[AlgebraicNumber] {
        &self.boundaries
    }

    pub fn cells(&self) -> &[ParamCell] {
        &self.cells
    }

    /// The norm at `xi`: the indexed root when `xi` is inside a cell whose
    /// norm is a root of `R`, otherwise the full algorithm.
    pub fn norm_at(&self, xi: &BigRational, digits: u32) -> Result<NormCertificate> {
        let start = Instant::now();
        if let Ok(value) = norm_at(&self.cells, &self.candidates, xi) {
            let n = self.numerator.specialize(xi);
            let sigma_inf = match &self.matrix {
                Some(m) => crate::transfer::sigma_at_infinity(&m.specialize(xi)?)?,
                None => AlgebraicNumber::from_rational(Var::g(), BigRational::zero()),
            };
            return NormCertificate::indexed(value.simplify(), digits, n, sigma_inf, start.elapsed());
        }
        self.full_norm_at(xi, digits)
    }

    /// The full algorithm at `xi`.
    pub fn full_norm_at(&self, xi: &BigRational, digits: u32) -> Result<NormCertificate> {
        let outside = self.range.lo.as_ref().is_some_and(|l| xi < l)
            || self.range.hi.as_ref().is_some_and(|h| xi > h);
        if outside {
            return Err(Error::domain(format!("{} = {xi} is outside the analyzed range", self.param)));
        }
        match &self.matrix {
            Some(m) => linf_norm(&m.specialize(xi)?, digits),
            None => {
                let zero = AlgebraicNumber::from_rational(Var::g(), BigRational::zero());
                linf_norm_of_numerator(&self.numerator.specialize(xi), &zero, digits)
            }
        }
    }
}

/// Cells of the partition of `range` for `n`.
pub fn partition_parameter(n: &ParamNumerator, range: &ParamRange) -> Result<Vec<ParamCell>> {
    Ok(ParamAnalysis::of_numerator(n, range)?.cells)
}

/// The `root_index`-th real root of `squarefree(R)(xi, g)` for the cell
/// strictly containing `xi`. `r` has variables `g` and the parameter.
pub fn norm_at(cells: &[ParamCell], r: &BiPoly, xi: &BigRational) -> Result<AlgebraicNumber> {
    let Some(cell) = cells.iter().find(|c| c.contains(xi)) else {
        return Err(Error::domain(format!("{xi} is not strictly inside any cell")));
    };
    if cell.root_index == 0 {
        return Err(Error::domain(format!(
            "on the cell containing {xi} the norm is not a root of R"
        )));
    }
    let param = r
        .vars()
        .iter()
        .find(|v| **v != Var::g())
        .cloned()
        .ok_or_else(|| Error::domain("R must involve g and the parameter"))?;
    let roots = roots_at(r, &param, xi)?;
    if roots.len() != cell.root_count {
        return Err(Error::internal(format!(
            "root count {} at {xi} differs from {} at the cell sample",
            roots.len(),
            cell.root_count
        )));
    }
    Ok(roots[cell.root_index - 1].clone())
}
