//! Certified L-infinity norm: candidates from a resultant, certification by
//! Sturm-Habicht root counting, asymptotes and the limit at infinity.

use std::cmp::Ordering;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::elim::{count_real_roots, sturm_habicht, SignedSequence};
use crate::error::{Error, Result};
use crate::poly::{gcd_uni, BiPoly, UniPoly, Var};
use crate::realroots::{compare, isolate_real_roots, sign_at, AlgebraicNumber};
use crate::sign::Sign;
use crate::transfer::{check_rl_membership, phi_det_numerator, sigma_at_infinity, TransferMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Maximum of a singular value at a finite frequency.
    CriticalPoint,
    /// A root of the leading coefficient of `n` in `w`.
    Asymptote,
    /// The largest singular value of `G(i oo)`.
    ConstantLimit,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::CriticalPoint => "critical_point",
            Provenance::Asymptote => "asymptote",
            Provenance::ConstantLimit => "constant_limit",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RejectReason {
    NoRealOmega,
    Negative,
    BelowSigmaInfinity,
}

impl RejectReason {
    pub fn as_str(self) -> &'static str {
        match self {
            RejectReason::NoRealOmega => "no_real_omega",
            RejectReason::Negative => "negative",
            RejectReason::BelowSigmaInfinity => "below_sigma_infinity",
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rejected {
    pub value: AlgebraicNumber,
    pub reason: RejectReason,
}

/// Wall-clock time per pipeline stage, in execution order.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Timings {
    stages: Vec<(&'static str, Duration)>,
}

impl Timings {
    fn record<T>(&mut self, stage: &'static str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        self.stages.push((stage, t.elapsed()));
        out
    }

    pub fn stages(&self) -> &[(&'static str, Duration)] {
        &self.stages
    }

    pub fn total(&self) -> Duration {
        self.stages.iter().map(|(_, d)| *d).sum()
    }
}

#[derive(Clone, Debug)]
pub struct NormCertificate {
    value: AlgebraicNumber,
    decimal: String,
    provenance: Provenance,
    omega_witness: Option<AlgebraicNumber>,
    rejected: Vec<Rejected>,
    timings: Timings,
    numerator: BiPoly,
    squarefree: BiPoly,
    sigma_infinity: AlgebraicNumber,
}

impl NormCertificate {
    pub fn value(&self) -> &AlgebraicNumber {
        &self.value
    }

    pub fn decimal(&self) -> &str {
        &self.decimal
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn omega_witness(&self) -> Option<&AlgebraicNumber> {
        self.omega_witness.as_ref()
    }

    pub fn rejected(&self) -> &[Rejected] {
        &self.rejected
    }

    pub fn timings(&self) -> &Timings {
        &self.timings
    }

    /// `n(w, g)` before the square-free reduction.
    pub fn numerator(&self) -> &BiPoly {
        &self.numerator
    }

    pub fn squarefree_numerator(&self) -> &BiPoly {
        &self.squarefree
    }

    pub fn sigma_infinity(&self) -> &AlgebraicNumber {
        &self.sigma_infinity
    }

    /// Certificate for a value read off an indexed root (parametric lookup).
    pub(crate) fn indexed(
        value: AlgebraicNumber,
        digits: u32,
        numerator: BiPoly,
        sigma_infinity: AlgebraicNumber,
        elapsed: Duration,
    ) -> Result<Self> {
        let squarefree = numerator.squarefree_part()?;
        Ok(NormCertificate {
            decimal: value.to_decimal(digits),
            value,
            provenance: Provenance::CriticalPoint,
            omega_witness: None,
            rejected: Vec::new(),
            timings: Timings { stages: vec![("lookup", elapsed)] },
            numerator,
            squarefree,
            sigma_infinity,
        })
    }

    /// The decimal rendering at a different precision.
    pub fn decimal_with(&self, digits: u32) -> String {
        self.value.to_decimal(digits)
    }
}

/// `n-bar` split into its `w`-free content and a primitive part, plus the
/// Sturm-Habicht sequence of the primitive part when it depends on `w`.
pub(crate) struct Curve {
    pub n: BiPoly,
    pub nbar: BiPoly,
    pub content: UniPoly,
    pub primitive: BiPoly,
    pub sh: Option<SignedSequence<BiPoly>>,
}

impl Curve {
    pub fn new(n: BiPoly) -> Result<Self> {
        let (w, g) = (Var::w(), Var::g());
        let nbar = n.squarefree_part()?.aligned(&w, &g)?;
        let (_, zz) = nbar.to_zz(&w)?;
        let (content, prim) = zz.content_primitive();
        let primitive = BiPoly::from_zz(w.clone(), g.clone(), &prim);
        let sh = if prim.degree().unwrap_or(0) >= 1 {
            Some(sturm_habicht(&primitive, &w)?)
        } else {
            None
        };
        Ok(Curve { n, nbar, content: UniPoly::from_dense(g, &content), primitive, sh })
    }

    /// `Lc_w(n-bar)`
    pub fn leading_coeff(&self) -> Result<UniPoly> {
        self.nbar.leading_coeff(&Var::w())
    }

    /// A nonzero multiple of `Res_w(p, dp/dw)` for the primitive part `p`
    /// (the last principal Sturm-Habicht coefficient); `None` when `p` does
    /// not depend on `w`.
    pub fn candidate_poly(&self) -> Option<UniPoly> {
        self.sh.as_ref().map(|s| s.principal(0).clone())
    }

    /// Whether `n-bar(., gamma)` has a real root.
    pub fn has_real_omega(&self, gamma: &AlgebraicNumber) -> Result<bool> {
        if sign_at(&self.content, gamma).is_zero() {
            return Ok(true);
        }
        match &self.sh {
            Some(sh) => Ok(sh.count_real_roots_at(gamma)? >= 1),
            None => Ok(false),
        }
    }
}

fn max_nonneg(roots: &[AlgebraicNumber]) -> Option<AlgebraicNumber> {
    roots.iter().rev().find(|r| r.sign() != Sign::Neg).cloned()
}

/// Real roots of `n-bar(w, gamma)` at which `d n-bar / d w` also vanishes,
/// or any real root. Only for rational `gamma`.
fn omega_witness(curve: &Curve, gamma: &BigRational) -> Result<Option<AlgebraicNumber>> {
    let w = Var::w();
    let p = curve.primitive.eval_partial(&Var::g(), gamma)?.with_var(w.clone());
    if p.is_zero() {
        return Ok(Some(AlgebraicNumber::from_rational(w, BigRational::zero())));
    }
    if p.is_constant() {
        return Ok(None);
    }
    let dp = p.derivative();
    let crit = if dp.is_zero() { p.clone() } else { gcd_uni(&p, &dp)? };
    for q in [&crit, &p] {
        if q.is_constant() {
            continue;
        }
        let roots = isolate_real_roots(q)?;
        // prefer the nonnegative one (n is even in w)
        if let Some(r) = max_nonneg(&roots).or_else(|| roots.last().cloned()) {
            return Ok(Some(r.simplify()));
        }
    }
    Ok(None)
}

/// The L-infinity norm of `g`, exact, with a decimal rendering to `digits`
/// significant digits.
pub fn linf_norm(g: &TransferMatrix, digits: u32) -> Result<NormCertificate> {
    let mut t = Timings::default();
    check_rl_membership(g).into_result()?;
    let sigma_inf = t.record("sigma_infinity", || sigma_at_infinity(g))?;
    let numerator = t.record("numerator", || phi_det_numerator(g, false))?;
    norm_from_numerator(numerator.n(), sigma_inf, digits, t)
}

/// The norm from `n(w, g)` and the largest singular value at infinity.
pub fn linf_norm_of_numerator(
    n: &BiPoly,
    sigma_inf: &AlgebraicNumber,
    digits: u32,
) -> Result<NormCertificate> {
    norm_from_numerator(n, sigma_inf.clone(), digits, Timings::default())
}

fn norm_from_numerator(
    n: &BiPoly,
    sigma_inf: AlgebraicNumber,
    digits: u32,
    mut t: Timings,
) -> Result<NormCertificate> {
    let n = n.aligned(&Var::w(), &Var::g())?;
    if n.is_zero() {
        return Err(Error::Degenerate("det(g^2 I - G~ G) vanishes identically".into()));
    }
    let curve = t.record("sturm_habicht", || Curve::new(n))?;
    let asym = t.record("asymptotes", || -> Result<_> {
        let lc = curve.leading_coeff()?;
        Ok(if lc.is_constant() { None } else { max_nonneg(&isolate_real_roots(&lc)?) })
    })?;
    let candidates = t.record("candidates", || -> Result<Vec<AlgebraicNumber>> {
        let Some(r) = curve.candidate_poly() else {
            return Ok(Vec::new());
        };
        if r.is_zero() {
            return Err(Error::internal("candidate resultant vanishes identically"));
        }
        let mut roots = isolate_real_roots(&r)?;
        roots.retain(|x| x.sign() == Sign::Pos);
        roots.reverse();
        Ok(roots)
    })?;

    let mut floor = sigma_inf.clone();
    if let Some(a) = &asym {
        if compare(a, &floor) == Ordering::Greater {
            floor = a.clone();
        }
    }
    let mut rejected = Vec::new();
    let critical = t.record("certification", || -> Result<Option<AlgebraicNumber>> {
        for c in &candidates {
            if compare(c, &floor) != Ordering::Greater {
                break;
            }
            if curve.has_real_omega(c)? {
                return Ok(Some(c.clone()));
            }
            rejected.push(Rejected { value: c.simplify(), reason: RejectReason::NoRealOmega });
        }
        Ok(None)
    })?;

    let (value, provenance) = match (&critical, &asym) {
        (Some(c), _) => (c.clone(), Provenance::CriticalPoint),
        (None, Some(a)) if compare(a, &sigma_inf) == Ordering::Greater => {
            (a.clone(), Provenance::Asymptote)
        }
        _ => (sigma_inf.clone(), Provenance::ConstantLimit),
    };
    if provenance == Provenance::ConstantLimit
        && candidates.is_empty()
        && asym.is_none()
        && curve.sh.is_some()
        && sigma_inf.is_zero()
    {
        return Err(Error::internal("no candidate for a nonconstant numerator"));
    }
    let value = t.record("simplify", || value.simplify());
    let omega_witness = match (provenance, value.as_rational()) {
        (Provenance::CriticalPoint, Some(r)) => t.record("witness", || omega_witness(&curve, &r))?,
        _ => None,
    };
    let decimal = t.record("decimal", || value.to_decimal(digits));
    Ok(NormCertificate {
        value,
        decimal,
        provenance,
        omega_witness,
        rejected,
        timings: t,
        numerator: curve.n.clone(),
        squarefree: curve.nbar.clone(),
        sigma_infinity: sigma_inf,
    })
}

/// Position of a level relative to the norm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    Above,
    Below,
    EqualWithinIsolation,
}

impl Position {
    pub fn as_str(self) -> &'static str {
        match self {
            Position::Above => "above",
            Position::Below => "below",
            Position::EqualWithinIsolation => "equal-within-isolation",
        }
    }
}

/// `gamma > ||G||` iff `gamma > sigma(G(i oo))` and `n(., gamma)` has no real
/// root.
fn is_above(curve: &Curve, sigma_inf: &AlgebraicNumber, gamma: &BigRational) -> Result<bool> {
    if sigma_inf.cmp_rational(gamma) != Ordering::Less {
        return Ok(false);
    }
    let p = curve.nbar.eval_partial(&Var::g(), gamma)?;
    if p.is_zero() {
        return Ok(false);
    }
    Ok(count_real_roots(&p)? == 0)
}

/// Decide where `gamma` lies relative to the norm without computing it.
///
/// Equality is decided exactly: the norm is always a root of the product of
/// the candidate polynomial, `Lc_w(n-bar)` and the characteristic polynomial
/// at infinity, so `gamma` equals it iff `gamma` is such a root and the
/// levels between `gamma` and the next root are above the norm.
pub fn certify_value(g: &TransferMatrix, gamma: &BigRational) -> Result<Position> {
    if !gamma.is_positive() {
        return Err(Error::domain("gamma must be positive"));
    }
    check_rl_membership(g).into_result()?;
    let sigma_inf = sigma_at_infinity(g)?;
    let numerator = phi_det_numerator(g, false)?;
    let curve = Curve::new(numerator.n().clone())?;
    if is_above(&curve, &sigma_inf, gamma)? {
        return Ok(Position::Above);
    }
    let gv = Var::g();
    let mut all = curve.leading_coeff()?;
    if let Some(r) = curve.candidate_poly() {
        all = &all * &r;
    }
    all = &all * &sigma_inf.defining().with_var(gv.clone());
    if !all.eval(gamma).is_zero() {
        return Ok(Position::Below);
    }
    let above_next = isolate_real_roots(&all)?
        .into_iter()
        .find(|r| r.cmp_rational(gamma) == Ordering::Greater);
    let probe = match above_next {
        None => gamma + BigRational::one(),
        Some(r) => {
            let mut r = r;
            while r.interval().lo() <= gamma {
                r = r.bisect();
            }
            (gamma + r.interval().lo()) / BigRational::from_integer(BigInt::from(2))
        }
    };
    Ok(if is_above(&curve, &sigma_inf, &probe)? {
        Position::EqualWithinIsolation
    } else {
        Position::Below
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transfer::RationalFunction;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn example4() -> TransferMatrix {
        let s = |c: &[i64]| UniPoly::from_ints(Var::s(), c);
        TransferMatrix::scalar(RationalFunction::new(&s(&[1]), &s(&[2, 3, 2])).unwrap())
    }

    #[test]
    fn example_four_norm_is_one_half() {
        let cert = linf_norm(&example4(), 10).unwrap();
        assert_eq!(cert.value().as_rational(), Some(q(1, 2)));
        assert_eq!(cert.decimal(), "0.5000000000");
        assert_eq!(cert.provenance(), Provenance::CriticalPoint);
        assert_eq!(cert.omega_witness().and_then(|w| w.as_rational()), Some(q(0, 1)));
        assert_eq!(cert.rejected().len(), 1);
        let r = &cert.rejected()[0];
        assert_eq!(r.reason, RejectReason::NoRealOmega);
        assert_eq!(*r.value.defining(), UniPoly::from_ints(Var::g(), &[-16, 0, 63]));
    }

    #[test]
    fn constant_system() {
        let g = TransferMatrix::scalar(RationalFunction::constant(q(-3, 2)));
        let cert = linf_norm(&g, 5).unwrap();
        assert_eq!(cert.value().as_rational(), Some(q(3, 2)));
        assert_eq!(cert.provenance(), Provenance::ConstantLimit);
    }

    #[test]
    fn certify_example_four() {
        let g = example4();
        assert_eq!(certify_value(&g, &q(1, 1)).unwrap(), Position::Above);
        assert_eq!(certify_value(&g, &q(1, 4)).unwrap(), Position::Below);
        assert_eq!(certify_value(&g, &q(1, 2)).unwrap(), Position::EqualWithinIsolation);
        assert!(certify_value(&g, &q(0, 1)).is_err());
    }
}
