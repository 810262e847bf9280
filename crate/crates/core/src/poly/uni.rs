use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::dense::{primitive_to_rational, rational_to_primitive, Dense};
use super::var::Var;
use crate::error::{Error, Result};

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are ascending and never end in zero; the zero polynomial has
/// an empty coefficient list and degree `None`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    var: Var,
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(var: Var, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { var, coeffs }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        UniPoly::new(
            var,
            coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        )
    }

    pub fn zero(var: Var) -> Self {
        UniPoly { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: BigRational) -> Self {
        UniPoly::new(var, vec![c])
    }

    /// `c * var^k`
    pub fn monomial(var: Var, c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::new(var, coeffs)
    }

    pub fn variable(var: Var) -> Self {
        UniPoly::monomial(var, BigRational::one(), 1)
    }

    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn with_var(&self, var: Var) -> Self {
        UniPoly { var, coeffs: self.coeffs.clone() }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `None` is the minus-infinity degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, at: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.var.clone(),
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(i.into()))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        UniPoly::new(self.var.clone(), self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.lc();
        self.scale(&(BigRational::one() / lc))
    }

    /// `p = scale * prim` with `prim` primitive over `Z` and positive
    /// leading coefficient.
    pub fn to_primitive(&self) -> (BigRational, Dense<BigInt>) {
        rational_to_primitive(&self.coeffs)
    }

    pub fn from_dense(var: Var, p: &Dense<BigInt>) -> Self {
        UniPoly::new(var, primitive_to_rational(p, &BigRational::one()))
    }

    pub fn from_dense_scaled(var: Var, p: &Dense<BigInt>, scale: &BigRational) -> Self {
        UniPoly::new(var, primitive_to_rational(p, scale))
    }

    /// Primitive integer normal form (positive leading coefficient).
    pub fn primitive(&self) -> Self {
        let (_, prim) = self.to_primitive();
        UniPoly::from_dense(self.var.clone(), &prim)
    }

    pub fn to_dense_q(&self) -> Dense<BigRational> {
        Dense::new(self.coeffs.clone())
    }

    pub fn from_dense_q(var: Var, p: &Dense<BigRational>) -> Self {
        UniPoly::new(var, p.coeffs().to_vec())
    }

    /// Euclidean division over `Q`.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let Some(dd) = d.degree() else {
            return Err(Error::domain("division by the zero polynomial"));
        };
        let mut r = self.coeffs.clone();
        let Some(dn) = self.degree() else {
            return Ok((UniPoly::zero(self.var.clone()), UniPoly::zero(self.var.clone())));
        };
        if dn < dd {
            return Ok((UniPoly::zero(self.var.clone()), self.clone()));
        }
        let inv = BigRational::one() / d.lc();
        let mut q = vec![BigRational::zero(); dn - dd + 1];
        for top in (dd..=dn).rev() {
            if r[top].is_zero() {
                continue;
            }
            let qc = &r[top] * &inv;
            for (i, c) in d.coeffs.iter().enumerate() {
                r[top - dd + i] -= &qc * c;
            }
            q[top - dd] = qc;
        }
        Ok((UniPoly::new(self.var.clone(), q), UniPoly::new(self.var.clone(), r)))
    }

    /// Monic gcd over `Q`, computed on primitive integer images.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        gcd_uni(self, other)
    }

    pub fn squarefree_part(&self) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(Error::domain("square-free part of the zero polynomial"));
        }
        let (_, prim) = self.to_primitive();
        Ok(UniPoly::from_dense(self.var.clone(), &prim.squarefree_part()))
    }

    /// `p(a + b x)`
    pub fn compose_linear(&self, a: &BigRational, b: &BigRational) -> Self {
        UniPoly::from_dense_q(
            self.var.clone(),
            &self.to_dense_q().compose_linear(a, b),
        )
    }

    /// `self(inner)`, a polynomial in `inner`'s variable.
    pub fn compose(&self, inner: &UniPoly) -> Self {
        let mut acc = UniPoly::zero(inner.var.clone());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UniPoly::constant(inner.var.clone(), c.clone());
        }
        acc
    }

    fn check_var(&self, other: &UniPoly) -> Var {
        if self.var == other.var || other.is_constant() {
            self.var.clone()
        } else if self.is_constant() {
            other.var.clone()
        } else {
            panic!("mixing polynomials in {} and {}", self.var, other.var)
        }
    }
}

/// Monic greatest common divisor over `Q`.
pub fn gcd_uni(p: &UniPoly, q: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::domain("gcd of two zero polynomials"));
    }
    let var = p.check_var(q);
    let (_, a) = p.to_primitive();
    let (_, b) = q.to_primitive();
    let g = a.gcd_poly(&b);
    Ok(UniPoly::from_dense(var, &g).monic())
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let var = self.check_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(var, (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let var = self.check_var(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new(var, (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let var = self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(var);
        }
        let mut c = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(var, c)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.var.clone(), self.coeffs.iter().map(|c| -c).collect())
    }
}

pub(crate) fn fmt_rational_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

/// Writes a monomial list in the crate's text syntax.
pub(crate) fn fmt_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (BigRational, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if mono.is_empty() {
            write!(f, "{}", fmt_rational_coeff(&a))?;
        } else if a.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{}*{}", fmt_rational_coeff(&a), mono)?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub(crate) fn fmt_power(var: &Var, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .map(|(k, c)| (c.clone(), fmt_power(&self.var, k))),
        )
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::new("x"), c)
    }

    #[test]
    fn gcd_example_pair() {
        let g = gcd_uni(&x(&[-1, 0, 0, 0, 1]), &x(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(g, x(&[-1, 0, 1]));
    }

    #[test]
    fn gcd_with_zero_is_monic_input() {
        let p = x(&[4, 2]);
        let g = gcd_uni(&p, &UniPoly::zero(Var::new("x"))).unwrap();
        assert_eq!(g, x(&[2, 1]));
    }

    #[test]
    fn gcd_by_hand() {
        // (x-1)^2 (x+3) = x^3 + x^2 - 5x + 3, (x-1)(x+5) = x^2 + 4x - 5
        let g = gcd_uni(&x(&[3, -5, 1, 1]), &x(&[-5, 4, 1])).unwrap();
        assert_eq!(g, x(&[-1, 1]));
    }

    #[test]
    fn gcd_of_zeros_is_an_error() {
        let z = UniPoly::zero(Var::new("x"));
        assert!(matches!(gcd_uni(&z, &z), Err(Error::Domain(_))));
    }

    #[test]
    fn squarefree_removes_repeats() {
        // (x-1)^2 (x+2)
        let p = &(&x(&[-1, 1]) * &x(&[-1, 1])) * &x(&[2, 1]);
        assert_eq!(p.squarefree_part().unwrap(), x(&[-2, 1, 1]));
        let sf = x(&[-2, 1, 1]);
        assert_eq!(sf.squarefree_part().unwrap(), sf);
        assert!(UniPoly::zero(Var::new("x")).squarefree_part().is_err());
    }

    #[test]
    fn display_uses_text_syntax() {
        let p = UniPoly::new(
            Var::new("g"),
            vec![
                BigRational::from_integer((-1).into()),
                BigRational::new(1.into(), 2.into()),
                BigRational::from_integer(4.into()),
            ],
        );
        assert_eq!(p.to_string(), "4*g^2 + (1/2)*g - 1");
    }

    #[test]
    fn div_rem_over_rationals() {
        let (q, r) = x(&[1, 0, 1]).div_rem(&x(&[1, 2])).unwrap();
        assert_eq!(&(&q * &x(&[1, 2])) + &r, x(&[1, 0, 1]));
        assert_eq!(r.degree(), Some(0));
    }
}
