use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::dense::Dense;
use super::uni::{fmt_power, fmt_terms, UniPoly};
use super::var::Var;
use crate::error::{Error, Result};

/// Sparse bivariate polynomial over `Q`.
///
/// Keys are exponent pairs `(e0, e1)` for `(vars[0], vars[1])`. Zero
/// coefficients are never stored. Equality ignores the order in which the
/// two variables are listed.
#[derive(Clone)]
pub struct BiPoly {
    vars: [Var; 2],
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BiPoly {
    pub fn zero(x: Var, y: Var) -> Self {
        assert!(x != y, "bivariate polynomial needs two distinct variables");
        BiPoly { vars: [x, y], terms: BTreeMap::new() }
    }

    pub fn from_terms(
        x: Var,
        y: Var,
        terms: impl IntoIterator<Item = ((u32, u32), BigRational)>,
    ) -> Self {
        let mut p = BiPoly::zero(x, y);
        for (k, c) in terms {
            p.add_term(k, c);
        }
        p
    }

    /// Convenience constructor from integer triples `(c, e0, e1)`.
    pub fn from_int_terms(x: Var, y: Var, terms: &[(i64, u32, u32)]) -> Self {
        BiPoly::from_terms(
            x,
            y,
            terms
                .iter()
                .map(|&(c, a, b)| ((a, b), BigRational::from_integer(c.into()))),
        )
    }

    pub fn constant(x: Var, y: Var, c: BigRational) -> Self {
        BiPoly::from_terms(x, y, [((0, 0), c)])
    }

    /// The polynomial `v` itself, where `v` is one of `x`, `y`.
    pub fn variable(x: Var, y: Var, v: &Var) -> Self {
        let k = if *v == x { (1, 0) } else if *v == y { (0, 1) } else {
            panic!("{v} is neither {x} nor {y}")
        };
        BiPoly::from_terms(x, y, [(k, BigRational::one())])
    }

    /// Embed a univariate polynomial in one of the two variables.
    pub fn from_uni(x: Var, y: Var, p: &UniPoly) -> Self {
        let idx = if *p.var() == x {
            0
        } else if *p.var() == y || p.is_constant() {
            1
        } else {
            panic!("{} is neither {x} nor {y}", p.var())
        };
        BiPoly::from_terms(
            x,
            y,
            p.coeffs().iter().enumerate().map(|(k, c)| {
                let k = k as u32;
                (if idx == 0 { (k, 0) } else { (0, k) }, c.clone())
            }),
        )
    }

    /// Inverse of [`BiPoly::as_univariate_in`]: `sum_k coeffs[k] * main^k`
    /// with coefficients in `other`.
    pub fn from_univariate_in(main: Var, other: Var, coeffs: &[UniPoly]) -> Self {
        let mut p = BiPoly::zero(main, other);
        for (k, c) in coeffs.iter().enumerate() {
            for (j, a) in c.coeffs().iter().enumerate() {
                p.add_term((k as u32, j as u32), a.clone());
            }
        }
        p
    }

    fn add_term(&mut self, k: (u32, u32), c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &[Var; 2] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<(u32, u32), BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn index_of(&self, v: &Var) -> Result<usize> {
        self.vars
            .iter()
            .position(|x| x == v)
            .ok_or_else(|| Error::domain(format!("{v} is not a variable of this polynomial")))
    }

    fn other(&self, idx: usize) -> Var {
        self.vars[1 - idx].clone()
    }

    /// Same polynomial with the variable order `[x, y]`.
    pub fn aligned(&self, x: &Var, y: &Var) -> Result<Self> {
        if self.vars[0] == *x && self.vars[1] == *y {
            return Ok(self.clone());
        }
        if self.vars[0] == *y && self.vars[1] == *x {
            return Ok(BiPoly {
                vars: [x.clone(), y.clone()],
                terms: self.terms.iter().map(|(&(a, b), c)| ((b, a), c.clone())).collect(),
            });
        }
        Err(Error::domain(format!(
            "variables {:?} do not match {x}, {y}",
            self.vars
        )))
    }

    fn exp(k: (u32, u32), idx: usize) -> u32 {
        if idx == 0 {
            k.0
        } else {
            k.1
        }
    }

    pub fn degree_in(&self, v: &Var) -> Result<Option<usize>> {
        let idx = self.index_of(v)?;
        Ok(self.terms.keys().map(|&k| Self::exp(k, idx) as usize).max())
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(a, b)| (a + b) as usize).max()
    }

    /// Whether only even powers of `v` occur.
    pub fn is_even_in(&self, v: &Var) -> Result<bool> {
        let idx = self.index_of(v)?;
        Ok(self.terms.keys().all(|&k| Self::exp(k, idx) % 2 == 0))
    }

    /// Coefficients of `v^0, v^1, ...` as polynomials in the other variable.
    pub fn as_univariate_in(&self, v: &Var) -> Result<Vec<UniPoly>> {
        let idx = self.index_of(v)?;
        let other = self.other(idx);
        let Some(deg) = self.degree_in(v)? else {
            return Ok(Vec::new());
        };
        let mut rows: Vec<Vec<BigRational>> = vec![Vec::new(); deg + 1];
        for (&k, c) in &self.terms {
            let (e, f) = if idx == 0 { k } else { (k.1, k.0) };
            let row = &mut rows[e as usize];
            if row.len() <= f as usize {
                row.resize(f as usize + 1, BigRational::zero());
            }
            row[f as usize] = c.clone();
        }
        Ok(rows.into_iter().map(|r| UniPoly::new(other.clone(), r)).collect())
    }

    /// Coefficient of `v^k` as a polynomial in the other variable.
    pub fn coeff_in(&self, v: &Var, k: usize) -> Result<UniPoly> {
        let idx = self.index_of(v)?;
        let other = self.other(idx);
        let mut c = Vec::new();
        for (&key, a) in &self.terms {
            let (e, f) = if idx == 0 { key } else { (key.1, key.0) };
            if e as usize == k {
                if c.len() <= f as usize {
                    c.resize(f as usize + 1, BigRational::zero());
                }
                c[f as usize] = a.clone();
            }
        }
        Ok(UniPoly::new(other, c))
    }

    pub fn leading_coeff(&self, v: &Var) -> Result<UniPoly> {
        match self.degree_in(v)? {
            None => Err(Error::domain("leading coefficient of the zero polynomial")),
            Some(d) => self.coeff_in(v, d),
        }
    }

    pub fn partial_derivative(&self, v: &Var) -> Result<Self> {
        let idx = self.index_of(v)?;
        let mut out = BiPoly::zero(self.vars[0].clone(), self.vars[1].clone());
        for (&k, c) in &self.terms {
            let e = Self::exp(k, idx);
            if e == 0 {
                continue;
            }
            let nk = if idx == 0 { (k.0 - 1, k.1) } else { (k.0, k.1 - 1) };
            out.add_term(nk, c * BigRational::from_integer(e.into()));
        }
        Ok(out)
    }

    /// Substitute `v = a`, leaving a polynomial in the other variable.
    pub fn eval_partial(&self, v: &Var, a: &BigRational) -> Result<UniPoly> {
        let idx = self.index_of(v)?;
        let other = self.other(idx);
        let coeffs = self.as_univariate_in(&other)?;
        Ok(UniPoly::new(other, coeffs.iter().map(|c| c.eval(a)).collect()))
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * pow_q(x, a) * pow_q(y, b);
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        BiPoly::from_terms(
            self.vars[0].clone(),
            self.vars[1].clone(),
            self.terms.iter().map(|(&k, a)| (k, a * c)),
        )
    }

    /// `self = scale * P` with `P` integral and content one, outer variable
    /// `main`, inner the other variable.
    pub fn to_zz(&self, main: &Var) -> Result<(BigRational, Dense<Dense<BigInt>>)> {
        let idx = self.index_of(main)?;
        let mut den = BigInt::one();
        for c in self.terms.values() {
            den = den.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let v = (c * BigRational::from_integer(den.clone())).to_integer();
            g = g.gcd(&v);
        }
        if g.is_zero() {
            return Ok((BigRational::zero(), Dense::zero()));
        }
        let scale = BigRational::new(g.clone(), den.clone());
        let deg = self.degree_in(main)?.unwrap_or(0);
        let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); deg + 1];
        for (&k, c) in &self.terms {
            let (e, f) = if idx == 0 { k } else { (k.1, k.0) };
            let v = (c / &scale).to_integer();
            let row = &mut rows[e as usize];
            if row.len() <= f as usize {
                row.resize(f as usize + 1, BigInt::zero());
            }
            row[f as usize] = v;
        }
        Ok((scale, Dense::new(rows.into_iter().map(Dense::new).collect())))
    }

    /// Build from a recursive integer polynomial: outer variable `main`,
    /// inner `other`.
    pub fn from_zz(main: Var, other: Var, p: &Dense<Dense<BigInt>>) -> Self {
        let mut out = BiPoly::zero(main, other);
        for (e, row) in p.coeffs().iter().enumerate() {
            for (f, c) in row.coeffs().iter().enumerate() {
                out.add_term((e as u32, f as u32), BigRational::from_integer(c.clone()));
            }
        }
        out
    }

    /// Square-free part over `Q`, normalized to integer coefficients with
    /// content one and positive leading coefficient in `vars[0]`.
    pub fn squarefree_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::domain("square-free part of the zero polynomial"));
        }
        let main = self.vars[0].clone();
        let other = self.vars[1].clone();
        let (_, p) = self.to_zz(&main)?;
        Ok(BiPoly::from_zz(main, other, &p.squarefree_part()))
    }

    /// Primitive integer normal form with positive leading coefficient in
    /// `vars[0]` (ties broken by the inner leading coefficient).
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let main = self.vars[0].clone();
        let other = self.vars[1].clone();
        let (_, p) = self.to_zz(&main).expect("own variable");
        let p = if p.lc().lc() < BigInt::zero() {
            p.map(|c| c.map(|x| -x))
        } else {
            p
        };
        BiPoly::from_zz(main, other, &p)
    }

    fn align_pair(&self, rhs: &BiPoly) -> BiPoly {
        if rhs.is_zero() {
            return BiPoly::zero(self.vars[0].clone(), self.vars[1].clone());
        }
        rhs.aligned(&self.vars[0], &self.vars[1])
            .unwrap_or_else(|e| panic!("{e}"))
    }
}

fn pow_q(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

impl PartialEq for BiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        match other.aligned(&self.vars[0], &self.vars[1]) {
            Ok(o) => o.terms == self.terms,
            Err(_) => false,
        }
    }
}

impl Eq for BiPoly {}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let rhs = self.align_pair(rhs);
        let mut out = self.clone();
        for (k, c) in rhs.terms {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let rhs = self.align_pair(rhs);
        let mut out = self.clone();
        for (k, c) in rhs.terms {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let rhs = self.align_pair(rhs);
        let mut out = BiPoly::zero(self.vars[0].clone(), self.vars[1].clone());
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-BigRational::one())
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(
            f,
            self.terms.iter().rev().map(|(&(a, b), c)| {
                let pa = fmt_power(&self.vars[0], a as usize);
                let pb = fmt_power(&self.vars[1], b as usize);
                let mono = match (pa.is_empty(), pb.is_empty()) {
                    (true, _) => pb,
                    (_, true) => pa,
                    _ => format!("{pa}*{pb}"),
                };
                (c.clone(), mono)
            }),
        )
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[{}, {}]({self})", self.vars[0], self.vars[1])
    }
}
