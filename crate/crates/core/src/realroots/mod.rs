//! Real root isolation and exact arithmetic on real algebraic numbers.

mod decimal;
pub(crate) mod descartes;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Dense, UniPoly, Var};
use crate::sign::Sign;
use descartes::{
    deflate_at_one, descartes_interval, descartes_unit, halve, root_bound_log2, sign_at_rational,
    taylor_shift_one, to_unit_interval,
};

pub use decimal::{exact_string, format_significant};

/// Interval with rational endpoints. `lo == hi` marks an exact rational
/// root; otherwise the root lies strictly inside.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsolatingInterval {
    lo: BigRational,
    hi: BigRational,
}

impl IsolatingInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Result<Self> {
        if lo > hi {
            return Err(Error::domain("interval endpoints out of order"));
        }
        Ok(IsolatingInterval { lo, hi })
    }

    pub fn point(r: BigRational) -> Self {
        IsolatingInterval { lo: r.clone(), hi: r }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }
}

/// A real algebraic number: a root of a square-free integer polynomial
/// together with an interval that isolates it.
///
/// Refinement never mutates; it returns a new value. Equality and ordering
/// compare the represented real numbers exactly.
#[derive(Clone)]
pub struct AlgebraicNumber {
    defining: UniPoly,
    zz: Dense<BigInt>,
    interval: IsolatingInterval,
    lo_sign: Sign,
}

impl AlgebraicNumber {
    /// Validates that `interval` isolates exactly one root of the square-free
    /// part of `defining`.
    pub fn new(defining: &UniPoly, interval: IsolatingInterval) -> Result<Self> {
        let sqf = defining.squarefree_part()?;
        if sqf.is_constant() {
            return Err(Error::domain("defining polynomial has no roots"));
        }
        let (_, zz) = sqf.to_primitive();
        if interval.is_point() {
            if !sign_at_rational(&zz, &interval.lo).is_zero() {
                return Err(Error::domain("point interval is not a root"));
            }
            return Ok(AlgebraicNumber::from_rational(sqf.var().clone(), interval.lo));
        }
        let (slo, shi) = (sign_at_rational(&zz, &interval.lo), sign_at_rational(&zz, &interval.hi));
        if slo.is_zero() || shi.is_zero() || slo == shi {
            return Err(Error::domain("endpoints do not bracket a simple root"));
        }
        if count_roots_open(&zz, &interval.lo, &interval.hi) != 1 {
            return Err(Error::domain("interval contains more than one root"));
        }
        Ok(AlgebraicNumber { defining: UniPoly::from_dense(sqf.var().clone(), &zz), zz, interval, lo_sign: slo })
    }

    /// The rational `r` with defining polynomial `den * v - num`.
    pub fn from_rational(var: Var, r: BigRational) -> Self {
        let zz = Dense::new(vec![-r.numer().clone(), r.denom().clone()]);
        AlgebraicNumber {
            defining: UniPoly::from_dense(var, &zz),
            zz,
            interval: IsolatingInterval::point(r),
            lo_sign: Sign::Zero,
        }
    }

    /// Internal constructor; the caller guarantees the isolation invariant.
    fn isolated(var: &Var, zz: &Dense<BigInt>, lo: BigRational, hi: BigRational) -> Self {
        let lo_sign = sign_at_rational(zz, &lo);
        debug_assert!(!lo_sign.is_zero());
        AlgebraicNumber {
            defining: UniPoly::from_dense(var.clone(), zz),
            zz: zz.clone(),
            interval: IsolatingInterval { lo, hi },
            lo_sign,
        }
    }

    pub fn defining(&self) -> &UniPoly {
        &self.defining
    }

    pub fn interval(&self) -> &IsolatingInterval {
        &self.interval
    }

    pub fn var(&self) -> &Var {
        self.defining.var()
    }

    /// Same number, defining polynomial renamed to `var`.
    pub fn with_var(&self, var: Var) -> Self {
        let mut a = self.clone();
        a.defining = a.defining.with_var(var);
        a
    }

    /// The exact value when the number is known to be rational.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.interval.is_point() {
            return Some(self.interval.lo.clone());
        }
        if self.zz.degree() == Some(1) {
            let c = self.zz.coeffs();
            return Some(BigRational::new(-c[0].clone(), c[1].clone()));
        }
        None
    }

    /// One bisection step.
    pub fn bisect(&self) -> Self {
        if self.interval.is_point() {
            return self.clone();
        }
        let mid = self.interval.midpoint();
        let s = sign_at_rational(&self.zz, &mid);
        if s.is_zero() {
            return AlgebraicNumber::from_rational(self.var().clone(), mid);
        }
        let mut out = self.clone();
        if s == self.lo_sign {
            out.interval.lo = mid;
        } else {
            out.interval.hi = mid;
        }
        out
    }

    /// Bisect until the interval is no wider than `w`.
    pub fn refined(&self, w: &BigRational) -> Self {
        let mut a = self.clone();
        while !a.interval.is_point() && a.interval.width() > *w {
            a = a.bisect();
        }
        a
    }

    /// Bisect until the width is at most `2^-bits` times the larger endpoint
    /// magnitude (or `2^-bits` near zero).
    pub fn refined_bits(&self, bits: u32) -> Self {
        let scale = BigRational::from_integer(BigInt::one() << bits);
        let mut a = self.clone();
        while !a.interval.is_point() {
            let mag = a.interval.lo.abs().max(a.interval.hi.abs()).max(BigRational::one());
            if a.interval.width() * &scale <= mag {
                break;
            }
            a = a.bisect();
        }
        a
    }

    /// Interval of width below `10^-digits` around the same root.
    pub fn refine_to(&self, digits: u32) -> IsolatingInterval {
        let w = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize));
        let mut a = self.clone();
        while !a.interval.is_point() && a.interval.width() >= w {
            a = a.bisect();
        }
        a.interval
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, r: &BigRational) -> Ordering {
        let iv = &self.interval;
        if iv.is_point() {
            return iv.lo.cmp(r);
        }
        if *r <= iv.lo {
            return Ordering::Greater;
        }
        if *r >= iv.hi {
            return Ordering::Less;
        }
        let s = sign_at_rational(&self.zz, r);
        if s.is_zero() {
            Ordering::Equal
        } else if s == self.lo_sign {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }

    pub fn sign(&self) -> Sign {
        Sign::from_ordering(self.cmp_rational(&BigRational::zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.sign().is_zero()
    }

    /// Exact order of two algebraic numbers.
    pub fn compare(&self, other: &AlgebraicNumber) -> Ordering {
        compare(self, other)
    }

    /// `-self`
    pub fn negated(&self) -> Self {
        if let Some(r) = self.as_rational() {
            return AlgebraicNumber::from_rational(self.var().clone(), -r);
        }
        let zz = self.zz.reflect().primitive();
        AlgebraicNumber::isolated(self.var(), &zz, -self.interval.hi.clone(), -self.interval.lo.clone())
    }

    /// `c * self` for a rational `c`.
    pub fn scaled(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return AlgebraicNumber::from_rational(self.var().clone(), BigRational::zero());
        }
        if let Some(r) = self.as_rational() {
            return AlgebraicNumber::from_rational(self.var().clone(), r * c);
        }
        // p(x / c)
        let q = self.defining.compose_linear(&BigRational::zero(), &c.recip());
        let (_, zz) = q.to_primitive();
        let zz = zz.primitive();
        let (lo, hi) = (&self.interval.lo * c, &self.interval.hi * c);
        let (lo, hi) = if c.is_negative() { (hi, lo) } else { (lo, hi) };
        AlgebraicNumber::isolated(self.var(), &zz, lo, hi)
    }

    /// Replace an irrational-looking representation by the exact rational
    /// when the number is rational (rational root test within a size budget).
    pub fn simplify(&self) -> Self {
        if let Some(r) = self.as_rational() {
            return AlgebraicNumber::from_rational(self.var().clone(), r);
        }
        let lc = self.zz.lc().abs();
        if lc.bits() > 512 {
            return self.clone();
        }
        // Distinct rationals with denominators dividing lc are 1/lc^2 apart.
        let w = BigRational::new(BigInt::one(), &lc * &lc * 2);
        let a = self.refined(&w);
        if let Some(r) = a.as_rational() {
            return AlgebraicNumber::from_rational(self.var().clone(), r);
        }
        let lcq = BigRational::from_integer(lc.clone());
        let k = (a.interval.lo.clone() * &lcq).ceil();
        let cand = k / lcq;
        if cand < a.interval.hi && sign_at_rational(&self.zz, &cand).is_zero() {
            return AlgebraicNumber::from_rational(self.var().clone(), cand);
        }
        a
    }

    /// `digits` significant digits, `%g` style.
    pub fn to_decimal(&self, digits: u32) -> String {
        if let Some(r) = self.as_rational() {
            return format_significant(&r, digits);
        }
        let ten = num_traits::pow(BigRational::from_integer(10.into()), digits as usize + 1);
        let mut a = self.clone();
        for _ in 0..4000 {
            if let Some(r) = a.as_rational() {
                return format_significant(&r, digits);
            }
            let (lo, hi) = (&a.interval.lo, &a.interval.hi);
            let excludes_zero = lo.is_positive() || hi.is_negative();
            if excludes_zero {
                let mag = lo.abs().min(hi.abs());
                if a.interval.width() * &ten < mag {
                    let (sl, sh) = (format_significant(lo, digits), format_significant(hi, digits));
                    if sl == sh {
                        return sl;
                    }
                }
            }
            a = a.bisect();
        }
        format_significant(&a.interval.midpoint(), digits)
    }

    /// Nearest-ish `f64` (relative error around `2^-52`).
    pub fn to_f64(&self) -> f64 {
        let mut a = self.clone();
        for _ in 0..4000 {
            if let Some(r) = a.as_rational() {
                return r.to_f64().unwrap_or(f64::NAN);
            }
            let (lo, hi) = (&a.interval.lo, &a.interval.hi);
            if lo.is_positive() || hi.is_negative() {
                let mag = lo.abs().min(hi.abs());
                let tol = mag / BigRational::from_integer(BigInt::one() << 60);
                if a.interval.width() < tol {
                    break;
                }
            }
            a = a.bisect();
        }
        a.interval.midpoint().to_f64().unwrap_or(f64::NAN)
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        compare(self, other) == Ordering::Equal
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        compare(self, other)
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(r) => write!(f, "{}", exact_string(&r)),
            None => write!(
                f,
                "root of {} in ({}, {})",
                self.defining,
                exact_string(&self.interval.lo),
                exact_string(&self.interval.hi)
            ),
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(10))
    }
}

/// Exact sign of `p` at an algebraic number. The variable names of `p` and
/// `a` are not compared.
pub fn sign_at(p: &UniPoly, a: &AlgebraicNumber) -> Sign {
    if p.is_zero() {
        return Sign::Zero;
    }
    let (c, q) = p.to_primitive();
    sign_at_zz(&q, a) * Sign::of(&c)
}

pub(crate) fn sign_at_zz(q: &Dense<BigInt>, a: &AlgebraicNumber) -> Sign {
    if q.degree().unwrap_or(0) == 0 {
        return Sign::of(&BigRational::from_integer(q.coeff(0)));
    }
    let mut cur = a.clone();
    // Cheap path: a few refinements often separate `a` from the roots of `q`.
    for _ in 0..4 {
        if let Some(r) = cur.as_rational() {
            return sign_at_rational(q, &r);
        }
        if descartes_interval(q, &cur.interval.lo, &cur.interval.hi) == 0 {
            return sign_at_rational(q, &cur.interval.midpoint());
        }
        cur = cur.bisect();
    }
    if let Some(r) = cur.as_rational() {
        return sign_at_rational(q, &r);
    }
    // common when q is a multiple of the defining polynomial
    if q.degree() >= cur.zz.degree() && q.div_exact_poly(&cur.zz).is_some() {
        return Sign::Zero;
    }
    let g = q.gcd_poly(&cur.zz);
    if g.degree().unwrap_or(0) >= 1 {
        let s = sign_at_rational(&g, &cur.interval.lo) * sign_at_rational(&g, &cur.interval.hi);
        if s == Sign::Neg {
            return Sign::Zero;
        }
    }
    loop {
        if let Some(r) = cur.as_rational() {
            return sign_at_rational(q, &r);
        }
        if descartes_interval(q, &cur.interval.lo, &cur.interval.hi) == 0 {
            return sign_at_rational(q, &cur.interval.midpoint());
        }
        cur = cur.bisect();
    }
}

/// Exact order of two algebraic numbers.
pub fn compare(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    if let Some(r) = b.as_rational() {
        return a.cmp_rational(&r);
    }
    if let Some(r) = a.as_rational() {
        return b.cmp_rational(&r).reverse();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    if a.interval.hi <= b.interval.lo {
        return Ordering::Less;
    }
    if b.interval.hi <= a.interval.lo {
        return Ordering::Greater;
    }
    // Overlapping: equal iff a is a root of gcd(defs) lying in b's interval.
    let g = a.zz.gcd_poly(&b.zz);
    if g.degree().unwrap_or(0) >= 1
        && a.cmp_rational(&b.interval.lo) == Ordering::Greater
        && a.cmp_rational(&b.interval.hi) == Ordering::Less
        && sign_at_zz(&g, &a).is_zero()
    {
        return Ordering::Equal;
    }
    loop {
        a = a.bisect();
        b = b.bisect();
        if let Some(r) = b.as_rational() {
            return a.cmp_rational(&r);
        }
        if let Some(r) = a.as_rational() {
            return b.cmp_rational(&r).reverse();
        }
        if a.interval.hi <= b.interval.lo {
            return Ordering::Less;
        }
        if b.interval.hi <= a.interval.lo {
            return Ordering::Greater;
        }
    }
}

/// Number of roots of a square-free integer polynomial in the open
/// interval `(lo, hi)`.
pub(crate) fn count_roots_open(p: &Dense<BigInt>, lo: &BigRational, hi: &BigRational) -> usize {
    let unit = to_unit_interval(p, lo, hi);
    let mut count = 0;
    let mut stack = vec![unit];
    while let Some(q) = stack.pop() {
        match descartes_unit(&q) {
            0 => {}
            1 => count += 1,
            _ => {
                let (l, r, mid_root) = split(&q);
                if mid_root {
                    count += 1;
                }
                stack.push(l);
                stack.push(r);
            }
        }
    }
    count
}

/// Children of a unit-interval node; the flag reports a root at `1/2`,
/// which is divided out of both children.
fn split(q: &[BigInt]) -> (Vec<BigInt>, Vec<BigInt>, bool) {
    let mut left = halve(q);
    let mut right = taylor_shift_one(&left);
    let mid_root = right[0].is_zero();
    if mid_root {
        left = deflate_at_one(&left);
        right.remove(0);
    }
    (left, right, mid_root)
}

/// Positive roots of `q` (with `q(0) != 0`): exact rational roots found at
/// dyadic split points, and isolating intervals for the rest.
fn isolate_positive(q: &Dense<BigInt>) -> (Vec<BigRational>, Vec<(BigRational, BigRational)>) {
    let mut rationals = Vec::new();
    let mut intervals = Vec::new();
    if q.degree().unwrap_or(0) == 0 {
        return (rationals, intervals);
    }
    let k = root_bound_log2(q);
    let scaled: Vec<BigInt> = q
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| c << (k as usize * i))
        .collect();
    let bound = BigRational::from_integer(BigInt::one() << k as usize);
    // (poly on (0,1), numerator c, depth d) for the interval B*(c/2^d, (c+1)/2^d)
    let mut stack: Vec<(Vec<BigInt>, BigInt, usize)> = vec![(scaled, BigInt::zero(), 0)];
    while let Some((poly, c, d)) = stack.pop() {
        let at = |num: &BigInt, depth: usize| -> BigRational {
            &bound * BigRational::new(num.clone(), BigInt::one() << depth)
        };
        match descartes_unit(&poly) {
            0 => {}
            1 => intervals.push((at(&c, d), at(&(&c + 1), d))),
            _ => {
                let (l, r, mid_root) = split(&poly);
                let c2: BigInt = &c * 2;
                if mid_root {
                    rationals.push(at(&(&c2 + 1), d + 1));
                }
                stack.push((r, &c2 + 1, d + 1));
                stack.push((l, c2, d + 1));
            }
        }
    }
    (rationals, intervals)
}

/// All distinct real roots of `p`, ascending.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<AlgebraicNumber>> {
    if p.is_zero() {
        return Err(Error::domain("root isolation of the zero polynomial"));
    }
    let var = p.var().clone();
    let (_, prim) = p.to_primitive();
    let mut q = prim.squarefree_part();
    if q.degree().unwrap_or(0) == 0 {
        return Ok(Vec::new());
    }
    let mut rationals = Vec::new();
    if q.coeff(0).is_zero() {
        rationals.push(BigRational::zero());
        q = Dense::new(q.coeffs()[1..].to_vec());
    }
    let (pos_r, pos_i) = isolate_positive(&q);
    let (neg_r, neg_i) = isolate_positive(&q.reflect());
    rationals.extend(pos_r);
    rationals.extend(neg_r.into_iter().map(|r| -r));
    // Defining polynomial for the irrational roots: rational roots divided out,
    // so no interval endpoint is a root of it.
    let mut def = q.clone();
    for r in rationals.iter().filter(|r| !r.is_zero()) {
        let lin = Dense::new(vec![-r.numer().clone(), r.denom().clone()]);
        def = def.div_exact_poly(&lin).expect("rational root divides");
    }
    let def = def.primitive();
    let mut out: Vec<AlgebraicNumber> = rationals
        .into_iter()
        .map(|r| AlgebraicNumber::from_rational(var.clone(), r))
        .collect();
    for (lo, hi) in pos_i {
        out.push(AlgebraicNumber::isolated(&var, &def, lo, hi));
    }
    for (lo, hi) in neg_i {
        out.push(AlgebraicNumber::isolated(&var, &def, -hi, -lo));
    }
    out.sort_by(|a, b| {
        (&a.interval.lo, &a.interval.hi).cmp(&(&b.interval.lo, &b.interval.hi))
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::g(), c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn product(fs: &[UniPoly]) -> UniPoly {
        fs.iter().fold(g(&[1]), |a, b| &a * b)
    }

    fn sqrt_16_63() -> AlgebraicNumber {
        isolate_real_roots(&g(&[-16, 0, 63])).unwrap().pop().unwrap()
    }

    #[test]
    fn candidate_polynomial_roots() {
        let p = product(&[g(&[0, 1]), g(&[-1, 2]), g(&[1, 2]), g(&[-16, 0, 63])]);
        let roots = isolate_real_roots(&p).unwrap();
        assert_eq!(roots.len(), 5);
        assert_eq!(roots[1].as_rational(), Some(q(-1, 2)));
        assert_eq!(roots[2].as_rational(), Some(q(0, 1)));
        assert_eq!(roots[3].as_rational(), Some(q(1, 2)));
        assert_eq!(roots[4], sqrt_16_63());
        assert_eq!(roots[0], sqrt_16_63().negated());
        for w in roots.windows(2) {
            assert_eq!(compare(&w[0], &w[1]), Ordering::Less);
        }
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&g(&[1, 0, 1])).unwrap().is_empty());
        assert!(isolate_real_roots(&g(&[])).is_err());
    }

    #[test]
    fn quartic_roots_by_bisection_oracle() {
        // y^4 - 4y^2 + 1, roots +-sqrt(2 +- sqrt 3)
        let roots = isolate_real_roots(&g(&[1, 0, -4, 0, 1])).unwrap();
        let approx: Vec<f64> = roots.iter().map(|r| r.to_f64()).collect();
        let s3 = 3f64.sqrt();
        let expect = [-(2.0 + s3).sqrt(), -(2.0 - s3).sqrt(), (2.0 - s3).sqrt(), (2.0 + s3).sqrt()];
        for (a, e) in approx.iter().zip(expect) {
            assert!((a - e).abs() < 1e-12, "{a} vs {e}");
        }
    }

    #[test]
    fn signs_at_algebraic_points() {
        let half = AlgebraicNumber::from_rational(Var::g(), q(1, 2));
        assert_eq!(sign_at(&g(&[-1, 2]), &half), Sign::Zero);
        assert_eq!(sign_at(&g(&[-16, 0, 63]), &half), Sign::Neg);
        assert_eq!(sign_at(&g(&[0, 1]), &sqrt_16_63()), Sign::Pos);
        // a multiple of the defining polynomial vanishes
        let m = product(&[g(&[-16, 0, 63]), g(&[3, 1])]);
        assert_eq!(sign_at(&m, &sqrt_16_63()), Sign::Zero);
        assert_eq!(sign_at(&g(&[-4, 0, 0, 0, 63]), &sqrt_16_63()), Sign::Pos);
    }

    #[test]
    fn comparisons() {
        let half = AlgebraicNumber::from_rational(Var::g(), q(1, 2));
        assert_eq!(compare(&sqrt_16_63(), &half), Ordering::Greater);
        assert_eq!(compare(&half, &half.clone()), Ordering::Equal);
        let zero = AlgebraicNumber::from_rational(Var::g(), q(0, 1));
        assert_eq!(compare(&zero, &half.negated()), Ordering::Greater);
        // same number from different defining polynomials
        let other = isolate_real_roots(&product(&[g(&[-16, 0, 63]), g(&[-7, 0, 1])]))
            .unwrap()
            .into_iter()
            .find(|r| r.to_f64() > 0.0 && r.to_f64() < 1.0)
            .unwrap();
        assert_eq!(compare(&other, &sqrt_16_63()), Ordering::Equal);
    }

    #[test]
    fn refinement_widths() {
        let iv = sqrt_16_63().refine_to(9);
        assert!(iv.width() < q(1, 1_000_000_000));
        assert!(iv.lo() < &q(503_952_631, 1_000_000_000));
        assert!(iv.hi() > &q(503_952_630, 1_000_000_000));
        let half = AlgebraicNumber::from_rational(Var::g(), q(1, 2));
        assert_eq!(half.refine_to(5), IsolatingInterval::point(q(1, 2)));
        let mhalf = half.negated().refine_to(3);
        assert!(mhalf.lo() <= &q(-1, 2) && mhalf.hi() >= &q(-1, 2));
    }

    #[test]
    fn decimal_output() {
        assert_eq!(sqrt_16_63().to_decimal(9), "0.503952631");
        let half = AlgebraicNumber::from_rational(Var::g(), q(1, 2));
        assert_eq!(half.to_decimal(10), "0.5000000000");
    }

    #[test]
    fn rational_roots_off_the_dyadic_grid_simplify() {
        let r = isolate_real_roots(&g(&[-1, 3])).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].as_rational(), Some(q(1, 3)));
        // (3g - 1)(g^2 - 2): 1/3 is isolated as an interval of the cubic
        let roots = isolate_real_roots(&product(&[g(&[-1, 3]), g(&[-2, 0, 1])])).unwrap();
        let third = roots.iter().find(|r| r.cmp_rational(&q(1, 3)) == Ordering::Equal).unwrap();
        assert_eq!(third.simplify().as_rational(), Some(q(1, 3)));
    }

    #[test]
    fn constructor_validates() {
        let p = g(&[-2, 0, 1]);
        assert!(AlgebraicNumber::new(&p, IsolatingInterval::new(q(1, 1), q(2, 1)).unwrap()).is_ok());
        assert!(AlgebraicNumber::new(&p, IsolatingInterval::new(q(-2, 1), q(2, 1)).unwrap()).is_err());
        assert!(AlgebraicNumber::new(&p, IsolatingInterval::new(q(2, 1), q(3, 1)).unwrap()).is_err());
    }
}
