//! Rational transfer functions and matrices over `Q(s)`, membership checks,
//! and the norm numerator `n(w, g)`.

pub(crate) mod phi;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::bareiss_det;
use crate::poly::{gcd_uni, BiPoly, Dense, UniPoly, Var};
use crate::realroots::{isolate_real_roots, AlgebraicNumber};

/// `num / den` in `s`, reduced, with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

fn in_s(p: &UniPoly) -> Result<UniPoly> {
    if p.is_constant() || *p.var() == Var::s() {
        Ok(p.with_var(Var::s()))
    } else {
        Err(Error::domain(format!("expected a polynomial in s, got one in {}", p.var())))
    }
}

impl RationalFunction {
    pub fn new(num: &UniPoly, den: &UniPoly) -> Result<Self> {
        let (num, den) = (in_s(num)?, in_s(den)?);
        if den.is_zero() {
            return Err(Error::domain("zero denominator"));
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = gcd_uni(&num, &den)?;
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let inv = BigRational::one() / den.lc();
        Ok(RationalFunction { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: &UniPoly) -> Result<Self> {
        RationalFunction::new(p, &UniPoly::constant(Var::s(), BigRational::one()))
    }

    pub fn constant(c: BigRational) -> Self {
        RationalFunction {
            num: UniPoly::constant(Var::s(), c),
            den: UniPoly::constant(Var::s(), BigRational::one()),
        }
    }

    pub fn zero() -> Self {
        RationalFunction::constant(BigRational::zero())
    }

    pub fn one() -> Self {
        RationalFunction::constant(BigRational::one())
    }

    /// The Laplace variable itself.
    pub fn s() -> Self {
        RationalFunction {
            num: UniPoly::variable(Var::s()),
            den: UniPoly::constant(Var::s(), BigRational::one()),
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_proper(&self) -> bool {
        self.num.degree().unwrap_or(0) <= self.den.degree().unwrap_or(0)
    }

    pub fn is_strictly_proper(&self) -> bool {
        self.is_zero() || self.num.degree().unwrap_or(0) < self.den.degree().unwrap_or(0)
    }

    /// `r(-s)`
    pub fn reflect(&self) -> Self {
        let neg = |p: &UniPoly| p.compose_linear(&BigRational::zero(), &-BigRational::one());
        RationalFunction::new(&neg(&self.num), &neg(&self.den)).expect("nonzero denominator")
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("division by zero"));
        }
        RationalFunction::new(&self.den, &self.num)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(RationalFunction::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RationalFunction::new(&self.num.scale(c), &self.den).expect("nonzero denominator")
    }

    /// `lim_{s -> oo}`; `None` for improper functions.
    pub fn limit_at_infinity(&self) -> Option<BigRational> {
        let (dn, dd) = (self.num.degree().unwrap_or(0), self.den.degree().unwrap_or(0));
        match (self.is_zero(), dn.cmp(&dd)) {
            (true, _) | (false, std::cmp::Ordering::Less) => Some(BigRational::zero()),
            (false, std::cmp::Ordering::Equal) => Some(self.num.lc() / self.den.lc()),
            (false, std::cmp::Ordering::Greater) => None,
        }
    }

    /// Exact value at a rational point; `None` at a pole.
    pub fn eval(&self, s: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(s);
        (!d.is_zero()).then(|| self.num.eval(s) / d)
    }

    /// `(a N, b D)` with `N`, `D` primitive integer polynomials and
    /// `num/den = a N / (b D)`.
    pub(crate) fn integer_parts(&self) -> (Dense<BigInt>, Dense<BigInt>) {
        let (cn, n) = self.num.to_primitive();
        let (cd, d) = self.den.to_primitive();
        let r = cn / cd;
        (n.scale(r.numer()), d.scale(r.denom()))
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::new(&num, &(&self.den * &rhs.den)).expect("nonzero denominator")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&(&self.num * &rhs.num), &(&self.den * &rhs.den))
            .expect("nonzero denominator")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

/// A `rows x cols` matrix of rational functions, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TransferMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl TransferMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<RationalFunction>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::domain("empty transfer matrix"));
        }
        if entries.len() != rows * cols {
            return Err(Error::domain(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(TransferMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(i) = rows.iter().position(|row| row.len() != c) {
            return Err(Error::domain(format!(
                "row {} has {} entries, expected {c}",
                i + 1,
                rows[i].len()
            )));
        }
        TransferMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn scalar(g: RationalFunction) -> Self {
        TransferMatrix { rows: 1, cols: 1, entries: vec![g] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.entry(i, j).clone())
            .collect();
        TransferMatrix { rows: self.cols, cols: self.rows, entries }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TransferMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// `diag(self, other)`
    pub fn block_diag(&self, other: &TransferMatrix) -> Self {
        let (rows, cols) = (self.rows + other.rows, self.cols + other.cols);
        let mut entries = vec![RationalFunction::zero(); rows * cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries[i * cols + j] = self.entry(i, j).clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                entries[(i + self.rows) * cols + j + self.cols] = other.entry(i, j).clone();
            }
        }
        TransferMatrix { rows, cols, entries }
    }
}

impl fmt::Display for TransferMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TransferMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TransferMatrix[{}x{}]({self})", self.rows, self.cols)
    }
}

/// `G~(s) = G(-s)^T`
pub fn conjugate(g: &TransferMatrix) -> TransferMatrix {
    let t = g.transpose();
    TransferMatrix {
        rows: t.rows,
        cols: t.cols,
        entries: t.entries.iter().map(RationalFunction::reflect).collect(),
    }
}

/// Outcome of the membership check. Entries are reported 0-based.
#[derive(Clone, Debug, PartialEq)]
pub enum Membership {
    Ok,
    PoleOnAxis { row: usize, col: usize, omega: AlgebraicNumber },
    Improper { row: usize, col: usize },
}

impl Membership {
    pub fn is_ok(&self) -> bool {
        matches!(self, Membership::Ok)
    }

    pub fn into_result(self) -> Result<()> {
        match self {
            Membership::Ok => Ok(()),
            Membership::PoleOnAxis { row, col, omega } => Err(Error::PoleOnAxis {
                row,
                col,
                omega: omega.to_decimal(10),
            }),
            Membership::Improper { row, col } => Err(Error::Improper { row, col }),
        }
    }
}

/// `|d(i w)|^2` as a polynomial in `w`.
pub fn squared_modulus_on_axis(d: &UniPoly) -> UniPoly {
    let w = Var::w();
    let (mut re, mut im) = (vec![BigRational::zero(); d.coeffs().len()], vec![BigRational::zero(); d.coeffs().len()]);
    for (k, c) in d.coeffs().iter().enumerate() {
        // i^k
        match k % 4 {
            0 => re[k] = c.clone(),
            1 => im[k] = c.clone(),
            2 => re[k] = -c,
            _ => im[k] = -c,
        }
    }
    let (re, im) = (UniPoly::new(w.clone(), re), UniPoly::new(w, im));
    &(&re * &re) + &(&im * &im)
}

/// Improperness and imaginary-axis poles, entry by entry.
pub fn check_rl_membership(g: &TransferMatrix) -> Membership {
    for i in 0..g.rows {
        for j in 0..g.cols {
            let e = g.entry(i, j);
            if !e.is_proper() {
                return Membership::Improper { row: i, col: j };
            }
            if e.is_zero() || e.den().is_constant() {
                continue;
            }
            let m = squared_modulus_on_axis(e.den());
            let roots = isolate_real_roots(&m).expect("nonzero polynomial");
            if let Some(omega) = roots.into_iter().next_back() {
                return Membership::PoleOnAxis { row: i, col: j, omega: omega.simplify() };
            }
        }
    }
    Membership::Ok
}

/// `n(w, g)` with `det(g^2 I - G(-iw)^T G(iw)) = n / d`, together with `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct NormNumerator {
    n: BiPoly,
    d_check: UniPoly,
}

impl NormNumerator {
    /// Variables `(w, g)`.
    pub fn n(&self) -> &BiPoly {
        &self.n
    }

    pub fn d_check(&self) -> &UniPoly {
        &self.d_check
    }
}

/// Exact numerator of `det Phi_g(i w)`, optionally square-free.
pub fn phi_det_numerator(g: &TransferMatrix, strict_squarefree: bool) -> Result<NormNumerator> {
    check_rl_membership(g).into_result()?;
    let entries: Vec<(Dense<BigInt>, Dense<BigInt>)> =
        g.entries.iter().map(RationalFunction::integer_parts).collect();
    let out = phi::phi_numerator(g.rows, g.cols, &entries)?;
    let n = BiPoly::from_zz(Var::g(), Var::w(), &out.n).aligned(&Var::w(), &Var::g())?;
    let n = if strict_squarefree { n.squarefree_part()? } else { n };
    Ok(NormNumerator { n, d_check: UniPoly::from_dense(Var::w(), &out.d) })
}

/// Largest singular value of `lim_{w -> oo} G(i w)`, as an exact algebraic
/// number in `g`.
pub fn sigma_at_infinity(g: &TransferMatrix) -> Result<AlgebraicNumber> {
    let mut lim = Vec::with_capacity(g.entries.len());
    for (k, e) in g.entries.iter().enumerate() {
        match e.limit_at_infinity() {
            Some(v) => lim.push(v),
            None => return Err(Error::Improper { row: k / g.cols, col: k % g.cols }),
        }
    }
    let zero = || AlgebraicNumber::from_rational(Var::g(), BigRational::zero());
    if lim.iter().all(Zero::is_zero) {
        return Ok(zero());
    }
    let (rows, cols) = (g.rows, g.cols);
    let l = |i: usize, j: usize| &lim[i * cols + j];
    // det(x I - L^T L) over Q[x], then x = g^2
    let m: Vec<Vec<Dense<BigRational>>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let gram: BigRational = (0..rows).map(|k| l(k, i) * l(k, j)).sum();
                    let mut c = vec![-gram];
                    if i == j {
                        c.push(BigRational::one());
                    }
                    Dense::new(c)
                })
                .collect()
        })
        .collect();
    let chi = bareiss_det(m);
    let in_g = UniPoly::new(Var::g(), chi.expand_square().coeffs().to_vec());
    let top = isolate_real_roots(&in_g)?
        .pop()
        .ok_or_else(|| Error::internal("Gram matrix has no real eigenvalue"))?;
    if top.sign().is_zero() || top.as_rational().is_some_and(|r| r.is_negative()) {
        return Ok(zero());
    }
    Ok(top.simplify())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::s(), c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(&s(n), &s(d)).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn wg(terms: &[(i64, u32, u32)]) -> BiPoly {
        BiPoly::from_int_terms(Var::w(), Var::g(), terms)
    }

    #[test]
    fn reduces_and_normalizes() {
        // (2s + 2) / (4s^2 + 4s) = (1/2) / s
        let r = rf(&[2, 2], &[0, 4, 4]);
        assert_eq!(*r.den(), s(&[0, 1]));
        assert_eq!(*r.num(), UniPoly::constant(Var::s(), q(1, 2)));
        assert!(RationalFunction::new(&s(&[1]), &s(&[])).is_err());
    }

    #[test]
    fn conjugation() {
        let g = TransferMatrix::scalar(rf(&[1], &[1, 1]));
        assert_eq!(conjugate(&g).entry(0, 0), &rf(&[-1], &[-1, 1]));
        let h = TransferMatrix::scalar(rf(&[0, 1], &[1, 1, 1]));
        assert_eq!(conjugate(&h).entry(0, 0), &rf(&[0, -1], &[1, -1, 1]));
        let m = TransferMatrix::from_rows(vec![
            vec![rf(&[1], &[1, 1]), rf(&[0, 1], &[2, 1])],
            vec![rf(&[3], &[1]), rf(&[1, 1], &[5, 1, 1])],
        ])
        .unwrap();
        assert_eq!(conjugate(&conjugate(&m)), m);
        assert_eq!(conjugate(&m.transpose()), conjugate(&m).transpose());
    }

    #[test]
    fn membership() {
        let pole = check_rl_membership(&TransferMatrix::scalar(rf(&[1], &[1, 0, 1])));
        match pole {
            Membership::PoleOnAxis { omega, .. } => {
                assert_eq!(omega.as_rational(), Some(q(1, 1)))
            }
            other => panic!("{other:?}"),
        }
        assert!(check_rl_membership(&TransferMatrix::scalar(rf(&[1], &[2, 3, 2]))).is_ok());
        let ill = RationalFunction::new(
            &s(&[0, 0, 1]),
            &(&UniPoly::new(Var::s(), vec![q(-1, 10_000_000), BigRational::zero(), BigRational::one()])
                * &s(&[-10_000_000, 0, 1])),
        )
        .unwrap();
        assert!(check_rl_membership(&TransferMatrix::scalar(ill)).is_ok());
        assert_eq!(
            check_rl_membership(&TransferMatrix::scalar(rf(&[0, 0, 1], &[1, 1]))),
            Membership::Improper { row: 0, col: 0 }
        );
    }

    #[test]
    fn example_numerator() {
        let g = TransferMatrix::scalar(rf(&[1], &[2, 3, 2]));
        let n = phi_det_numerator(&g, false).unwrap();
        assert_eq!(*n.n(), wg(&[(4, 4, 2), (1, 2, 2), (4, 0, 2), (-1, 0, 0)]));
    }

    #[test]
    fn constant_and_first_order_numerators() {
        let c = TransferMatrix::scalar(RationalFunction::constant(q(3, 1)));
        assert_eq!(*phi_det_numerator(&c, false).unwrap().n(), wg(&[(1, 0, 2), (-9, 0, 0)]));
        let g = TransferMatrix::scalar(rf(&[1], &[1, 1]));
        assert_eq!(
            *phi_det_numerator(&g, false).unwrap().n(),
            wg(&[(1, 2, 2), (1, 0, 2), (-1, 0, 0)])
        );
    }

    #[test]
    fn rejects_poles_and_degenerate_phi() {
        let g = TransferMatrix::scalar(rf(&[1], &[1, 0, 1]));
        assert!(matches!(phi_det_numerator(&g, false), Err(Error::PoleOnAxis { .. })));
    }

    #[test]
    fn sigma_at_infinity_examples() {
        let strictly = TransferMatrix::scalar(rf(&[1], &[1, 1]));
        assert!(sigma_at_infinity(&strictly).unwrap().is_zero());
        let bi = TransferMatrix::scalar(rf(&[2, 1], &[1, 1]));
        assert_eq!(sigma_at_infinity(&bi).unwrap().as_rational(), Some(q(1, 1)));
        let c = TransferMatrix::scalar(RationalFunction::constant(q(2, 1)));
        assert_eq!(sigma_at_infinity(&c).unwrap().as_rational(), Some(q(2, 1)));
        // [[1, 1]] has singular value sqrt 2
        let row = TransferMatrix::from_rows(vec![vec![RationalFunction::one(), RationalFunction::one()]])
            .unwrap();
        let v = sigma_at_infinity(&row).unwrap();
        assert!((v.to_f64() - 2f64.sqrt()).abs() < 1e-14);
    }
}
