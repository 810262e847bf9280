use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::chain::{determinantal, sturm_habicht_chain, subresultant_chain};
use super::{other_var, scale_pow};
use crate::error::{Error, Result};
use crate::poly::{BiPoly, Dense, UniPoly, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SequenceKind {
    Subresultant,
    SturmHabicht,
}

/// Polynomial types a [`SignedSequence`] can hold.
pub trait SequencePoly: Clone + Debug + PartialEq {
    /// Type of the formal leading coefficients.
    type Coeff: Clone + Debug + PartialEq;
}

impl SequencePoly for UniPoly {
    type Coeff = BigRational;
}

impl SequencePoly for BiPoly {
    type Coeff = UniPoly;
}

/// Subresultant or Sturm-Habicht sequence indexed by `j`.
///
/// `polys()[j]` has degree at most `j` in the elimination variable (except
/// the top entry of a subresultant sequence, which is the larger input), and
/// `principal_coeffs()[j]` is its coefficient of degree `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct SignedSequence<P: SequencePoly> {
    kind: SequenceKind,
    var: Var,
    polys: Vec<P>,
    principal: Vec<P::Coeff>,
    inputs: (P, P),
}

impl<P: SequencePoly> SignedSequence<P> {
    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    /// The elimination variable.
    pub fn var(&self) -> &Var {
        &self.var
    }

    pub fn polys(&self) -> &[P] {
        &self.polys
    }

    pub fn poly(&self, j: usize) -> &P {
        &self.polys[j]
    }

    pub fn principal_coeffs(&self) -> &[P::Coeff] {
        &self.principal
    }

    pub fn principal(&self, j: usize) -> &P::Coeff {
        &self.principal[j]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// The two polynomials the sequence was built from (larger degree first;
    /// for Sturm-Habicht, `p` and its derivative).
    pub fn inputs(&self) -> (&P, &P) {
        (&self.inputs.0, &self.inputs.1)
    }
}

impl SignedSequence<UniPoly> {
    /// Principal coefficients from the top index down to `j = 0`.
    pub fn principal_top_down(&self) -> Vec<BigRational> {
        self.principal.iter().rev().cloned().collect()
    }

    /// Largest `k` with nonzero principal coefficient among `j < top`; the
    /// corresponding entry is the gcd of the inputs over `Q`.
    pub fn gcd_index(&self) -> Option<usize> {
        let top = self.polys.len() - 1;
        (0..top).find(|&j| !self.principal[j].is_zero())
    }
}

impl SignedSequence<BiPoly> {
    /// Substitute `param = a` into every entry.
    ///
    /// When `a` is a root of the leading coefficient of either input, the
    /// sequence is recomputed from the specialized inputs instead.
    pub fn specialize(&self, param: &Var, a: &BigRational) -> Result<SignedSequence<UniPoly>> {
        if *param == self.var {
            return Err(Error::domain("cannot specialize the elimination variable"));
        }
        let (p, q) = (&self.inputs.0, &self.inputs.1);
        let drops = |x: &BiPoly| -> Result<bool> {
            Ok(!x.is_zero() && x.leading_coeff(&self.var)?.eval(a).is_zero())
        };
        if drops(p)? || drops(q)? {
            let ps = p.eval_partial(param, a)?;
            return match self.kind {
                SequenceKind::SturmHabicht => sturm_habicht_uni(&ps),
                SequenceKind::Subresultant => {
                    subresultant_sequence_uni(&ps, &q.eval_partial(param, a)?)
                }
            };
        }
        let polys = self
            .polys
            .iter()
            .map(|x| x.eval_partial(param, a))
            .collect::<Result<Vec<_>>>()?;
        let principal = self
            .principal
            .iter()
            .map(|c| c.eval(a))
            .collect();
        Ok(SignedSequence {
            kind: self.kind,
            var: self.var.clone(),
            polys,
            principal,
            inputs: (p.eval_partial(param, a)?, q.eval_partial(param, a)?),
        })
    }

    /// Apply the ring map `param -> r(param)` to every coefficient.
    pub fn substitute(&self, param: &Var, r: &UniPoly) -> Result<SignedSequence<BiPoly>> {
        if *param == self.var {
            return Err(Error::domain("cannot substitute the elimination variable"));
        }
        let map = |x: &BiPoly| -> Result<BiPoly> {
            let coeffs: Vec<UniPoly> = x
                .as_univariate_in(&self.var)?
                .iter()
                .map(|c| c.compose(r).with_var(param.clone()))
                .collect();
            BiPoly::from_univariate_in(self.var.clone(), param.clone(), &coeffs)
                .aligned(&x.vars()[0], &x.vars()[1])
        };
        Ok(SignedSequence {
            kind: self.kind,
            var: self.var.clone(),
            polys: self.polys.iter().map(map).collect::<Result<_>>()?,
            principal: self
                .principal
                .iter()
                .map(|c| c.compose(r).with_var(param.clone()))
                .collect(),
            inputs: (map(&self.inputs.0)?, map(&self.inputs.1)?),
        })
    }
}

/// Free-function form of [`SignedSequence::specialize`].
pub fn specialize_sequence(
    seq: &SignedSequence<BiPoly>,
    param: &Var,
    a: &BigRational,
) -> Result<SignedSequence<UniPoly>> {
    seq.specialize(param, a)
}

/// Subresultant sequence of two univariate polynomials.
///
/// Entries `0..=n` are `Sres_j` with `n` the smaller degree; entry `n + 1` is
/// the larger-degree input. Inputs are reordered so the larger degree comes
/// first; on equal degrees the first argument is taken as the larger.
pub fn subresultant_sequence_uni(p: &UniPoly, q: &UniPoly) -> Result<SignedSequence<UniPoly>> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::domain("subresultant sequence of a zero polynomial"));
    }
    let (a, b) = if p.degree() >= q.degree() { (p, q) } else { (q, p) };
    let var = if a.is_constant() { b.var().clone() } else { a.var().clone() };
    let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
    let (ca, da) = a.to_primitive();
    let (cb, db) = b.to_primitive();
    let (polys, principal) = raw_subresultants(&da, &db);
    let mut out_polys = Vec::with_capacity(n + 2);
    let mut out_principal = Vec::with_capacity(n + 2);
    for (j, (x, c)) in polys.iter().zip(principal).enumerate() {
        let s = scale_pow(&ca, n as i64 - j as i64) * scale_pow(&cb, m as i64 - j as i64);
        out_polys.push(UniPoly::from_dense_scaled(var.clone(), x, &s));
        out_principal.push(BigRational::from_integer(c) * s);
    }
    if m == n {
        // Convention: the top two entries are the inputs themselves.
        out_polys[n] = b.with_var(var.clone());
        out_principal[n] = b.coeff(n);
    }
    out_polys.push(a.with_var(var.clone()));
    out_principal.push(a.coeff(n + 1));
    Ok(SignedSequence {
        kind: SequenceKind::Subresultant,
        var: var.clone(),
        polys: out_polys,
        principal: out_principal,
        inputs: (a.with_var(var.clone()), b.with_var(var)),
    })
}

/// Subresultant sequence in `v`; entries are bivariate, principal
/// coefficients are polynomials in the other variable.
pub fn subresultant_sequence(p: &BiPoly, q: &BiPoly, v: &Var) -> Result<SignedSequence<BiPoly>> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::domain("subresultant sequence of a zero polynomial"));
    }
    let q = q.aligned(&p.vars()[0], &p.vars()[1])?;
    let (a, b) = if p.degree_in(v)? >= q.degree_in(v)? { (p.clone(), q) } else { (q, p.clone()) };
    let other = other_var(&a, v);
    let (m, n) = (a.degree_in(v)?.unwrap(), b.degree_in(v)?.unwrap());
    let (ca, da) = a.to_zz(v)?;
    let (cb, db) = b.to_zz(v)?;
    let (polys, principal) = raw_subresultants(&da, &db);
    let mut out_polys = Vec::with_capacity(n + 2);
    let mut out_principal = Vec::with_capacity(n + 2);
    for (j, (x, c)) in polys.iter().zip(principal).enumerate() {
        let s = scale_pow(&ca, n as i64 - j as i64) * scale_pow(&cb, m as i64 - j as i64);
        out_polys.push(
            BiPoly::from_zz(v.clone(), other.clone(), x)
                .scale(&s)
                .aligned(&a.vars()[0], &a.vars()[1])?,
        );
        out_principal.push(UniPoly::from_dense_scaled(other.clone(), &c, &s));
    }
    if m == n {
        out_polys[n] = b.clone();
        out_principal[n] = b.coeff_in(v, n)?;
    }
    out_polys.push(a.clone());
    out_principal.push(a.coeff_in(v, n + 1)?);
    Ok(SignedSequence {
        kind: SequenceKind::Subresultant,
        var: v.clone(),
        polys: out_polys,
        principal: out_principal,
        inputs: (a, b),
    })
}

/// `Sres_0..=Sres_n` of integral inputs with `deg a >= deg b`; on equal
/// degrees index `n` is left as a placeholder for the caller.
fn raw_subresultants<R: crate::poly::Ring>(a: &Dense<R>, b: &Dense<R>) -> (Vec<Dense<R>>, Vec<R>) {
    let m = a.degree().unwrap();
    let n = b.degree().unwrap();
    if m > n {
        return subresultant_chain(a, b);
    }
    let mut polys: Vec<Dense<R>> = (0..n).map(|j| determinantal(a, b, j)).collect();
    let mut principal: Vec<R> = polys.iter().enumerate().map(|(j, x)| x.coeff(j)).collect();
    polys.push(b.clone());
    principal.push(b.lc());
    (polys, principal)
}

/// Sturm-Habicht sequence of a univariate polynomial of positive degree.
pub fn sturm_habicht_uni(p: &UniPoly) -> Result<SignedSequence<UniPoly>> {
    let Some(d) = p.degree().filter(|&d| d >= 1) else {
        return Err(Error::domain("Sturm-Habicht sequence needs positive degree"));
    };
    let (c, dp) = p.to_primitive();
    let (polys, principal) = sturm_habicht_chain(&dp);
    let var = p.var().clone();
    let mut out_polys = Vec::with_capacity(d + 1);
    let mut out_principal = Vec::with_capacity(d + 1);
    for (j, (x, s)) in polys.iter().zip(principal).enumerate().take(d) {
        let f = scale_pow(&c, 2 * d as i64 - 1 - 2 * j as i64);
        out_polys.push(UniPoly::from_dense_scaled(var.clone(), x, &f));
        out_principal.push(BigRational::from_integer(s) * f);
    }
    out_polys.push(p.clone());
    out_principal.push(p.lc());
    Ok(SignedSequence {
        kind: SequenceKind::SturmHabicht,
        var,
        polys: out_polys,
        principal: out_principal,
        inputs: (p.clone(), p.derivative()),
    })
}

/// Sturm-Habicht sequence of `p` viewed as a polynomial in `v`.
pub fn sturm_habicht(p: &BiPoly, v: &Var) -> Result<SignedSequence<BiPoly>> {
    let Some(d) = p.degree_in(v)?.filter(|&d| d >= 1) else {
        return Err(Error::domain(format!("Sturm-Habicht sequence needs positive degree in {v}")));
    };
    let other = other_var(p, v);
    let (c, dp) = p.to_zz(v)?;
    let (polys, principal) = sturm_habicht_chain(&dp);
    let mut out_polys = Vec::with_capacity(d + 1);
    let mut out_principal = Vec::with_capacity(d + 1);
    for (j, (x, s)) in polys.iter().zip(principal).enumerate().take(d) {
        let f = scale_pow(&c, 2 * d as i64 - 1 - 2 * j as i64);
        out_polys.push(
            BiPoly::from_zz(v.clone(), other.clone(), x)
                .scale(&f)
                .aligned(&p.vars()[0], &p.vars()[1])?,
        );
        out_principal.push(UniPoly::from_dense_scaled(other.clone(), &s, &f));
    }
    out_polys.push(p.clone());
    out_principal.push(p.leading_coeff(v)?);
    Ok(SignedSequence {
        kind: SequenceKind::SturmHabicht,
        var: v.clone(),
        polys: out_polys,
        principal: out_principal,
        inputs: (p.clone(), p.partial_derivative(v)?),
    })
}

#[allow(dead_code)]
fn _assert_send_sync() {
    fn f<T: Send + Sync>() {}
    f::<SignedSequence<BiPoly>>();
    f::<SignedSequence<UniPoly>>();
    let _ = BigInt::zero();
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Var::new("x"), c)
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&c| BigRational::from_integer(c.into())).collect()
    }

    /// x^4 - (y+2) x^3 + (2y+1) x^2 - (y+2) x + 2y
    fn example_p() -> BiPoly {
        BiPoly::from_int_terms(
            Var::new("x"),
            Var::new("y"),
            &[
                (1, 4, 0),
                (-1, 3, 1),
                (-2, 3, 0),
                (2, 2, 1),
                (1, 2, 0),
                (-1, 1, 1),
                (-2, 1, 0),
                (2, 0, 1),
            ],
        )
    }

    #[test]
    fn cyclotomic_subresultants() {
        let s = subresultant_sequence_uni(&x(&[-1, 0, 0, 0, 1]), &x(&[-1, 0, 0, 0, 0, 0, 1])).unwrap();
        assert!(s.poly(0).is_zero());
        assert!(s.poly(1).is_zero());
        assert_eq!(*s.poly(2), x(&[-1, 0, 1]));
        assert_eq!(*s.poly(3), x(&[1, 0, -1]));
        assert_eq!(*s.poly(4), x(&[-1, 0, 0, 0, 1]));
        assert_eq!(*s.poly(5), x(&[-1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(s.gcd_index(), Some(2));
    }

    #[test]
    fn coprime_linear_pair() {
        let s = subresultant_sequence_uni(&x(&[0, 1]), &x(&[1, 1])).unwrap();
        assert!(!s.principal(0).is_zero());
        assert_eq!(s.poly(0).degree(), Some(0));
    }

    #[test]
    fn example_sequence_resultant() {
        let p = example_p();
        let q = p.partial_derivative(&Var::new("x")).unwrap();
        let s = subresultant_sequence(&p, &q, &Var::new("x")).unwrap();
        // -100 (y-2)^2 (y^2+1)^2
        let y = |c: &[i64]| UniPoly::from_ints(Var::new("y"), c);
        let a = y(&[-2, 1]);
        let b = y(&[1, 0, 1]);
        let expect = [&a, &a, &b, &b].iter().fold(y(&[-100]), |acc, f| &acc * f);
        assert_eq!(*s.principal(0), expect);
        let sres1_lc = y(&[128, 40, -74, 40, -2]);
        assert_eq!(*s.principal(1), sres1_lc);
        assert_eq!(*s.principal(2), y(&[-4, 4, -3]));
    }

    #[test]
    fn example_sturm_habicht_principals() {
        let s = sturm_habicht(&example_p(), &Var::new("x")).unwrap();
        let y = |c: &[i64]| UniPoly::from_ints(Var::new("y"), c);
        let top_down: Vec<UniPoly> = s.principal_coeffs().iter().rev().cloned().collect();
        assert_eq!(top_down[0], y(&[1]));
        assert_eq!(top_down[1], y(&[4]));
        assert_eq!(top_down[2], y(&[4, -4, 3]));
        assert_eq!(top_down[3], y(&[-128, -40, 74, -40, 2]));
        let at2 = s.specialize(&Var::new("y"), &BigRational::from_integer(2.into())).unwrap();
        assert_eq!(at2.principal_top_down(), ints(&[1, 4, 8, -200, 0]));
        let at3 = s.specialize(&Var::new("y"), &BigRational::from_integer(3.into())).unwrap();
        // -100 (y-2)^2 (y^2+1)^2 at y = 3 is -10000; only the signs enter C
        assert_eq!(at3.principal_top_down(), ints(&[1, 4, 19, -500, -10000]));
    }

    #[test]
    fn identity_substitution_is_a_no_op() {
        let s = sturm_habicht(&example_p(), &Var::new("x")).unwrap();
        let id = UniPoly::variable(Var::new("y"));
        assert_eq!(s.substitute(&Var::new("y"), &id).unwrap(), s);
    }

    #[test]
    fn degenerate_specialization_falls_back() {
        // (y - 1) x^2 + x + y: the leading coefficient vanishes at y = 1.
        let p = BiPoly::from_int_terms(
            Var::new("x"),
            Var::new("y"),
            &[(1, 2, 1), (-1, 2, 0), (1, 1, 0), (1, 0, 1)],
        );
        let s = sturm_habicht(&p, &Var::new("x")).unwrap();
        let one = BigRational::from_integer(1.into());
        let spec = s.specialize(&Var::new("y"), &one).unwrap();
        let direct = sturm_habicht_uni(&p.eval_partial(&Var::new("y"), &one).unwrap()).unwrap();
        assert_eq!(spec, direct);
        assert_eq!(spec.len(), 2);
    }

    #[test]
    fn scaled_inputs_keep_determinantal_values() {
        // Sylvester determinant of (2x^2 - 2, 3x) by hand: -18.
        let a = x(&[-2, 0, 2]);
        let b = x(&[0, 3]);
        let s = subresultant_sequence_uni(&a, &b).unwrap();
        let res = super::super::resultant_uni(&a, &b).unwrap();
        assert_eq!(*s.principal(0), res);
        assert_eq!(res, BigRational::from_integer((-18).into()));
    }
}
