//! Sylvester matrices, resultants, discriminants, subresultant and
//! Sturm-Habicht sequences, and real-root counting by sign variations.

pub(crate) mod chain;
mod count;
mod sequence;
mod sylvester;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{BiPoly, Dense, Ring, UniPoly, Var};

pub use count::{count_real_roots, count_real_roots_at, sign_variation_c};
pub use sequence::{
    specialize_sequence, sturm_habicht, sturm_habicht_uni, subresultant_sequence,
    subresultant_sequence_uni, SequenceKind, SequencePoly, SignedSequence,
};
pub use sylvester::SylvesterMatrix;

/// Resultant of two integer polynomials over any coefficient ring, with the
/// Sylvester-matrix sign convention (rows of `a` first).
pub fn resultant_generic<R: Ring>(a: &Dense<R>, b: &Dense<R>) -> R {
    chain::resultant(a, b)
}

/// `(-1)^(p(p-1)/2) lc(p)^-1 Res(p, p')`; `None` below degree 2.
pub fn discriminant_generic<R: Ring>(p: &Dense<R>) -> Option<R> {
    let d = p.degree()?;
    if d < 2 {
        return None;
    }
    let r = chain::resultant(p, &p.derivative());
    let r = r.div_exact(&p.lc()).expect("lc divides Res(p, p')");
    Some(chain::signed(chain::eps_negative(d), r))
}

/// `Res_v(p, q)` as a polynomial in the other variable.
pub fn resultant(p: &BiPoly, q: &BiPoly, v: &Var) -> Result<UniPoly> {
    let (dp, dq) = (p.degree_in(v)?, q.degree_in(v)?);
    let (Some(dp), Some(dq)) = (dp, dq) else {
        return Err(Error::domain("resultant of a zero polynomial"));
    };
    if dp == 0 && dq == 0 {
        return Err(Error::domain(format!("both inputs are constant in {v}")));
    }
    let other = other_var(p, v);
    let q = q.aligned(&p.vars()[0], &p.vars()[1])?;
    let (cp, a) = p.to_zz(v)?;
    let (cq, b) = q.to_zz(v)?;
    let r = chain::resultant(&a, &b);
    // Res(c a, d b) = c^deg b d^deg a Res(a, b)
    let scale = num_traits::pow(cp, dq) * num_traits::pow(cq, dp);
    Ok(UniPoly::from_dense_scaled(other, &r, &scale))
}

/// Univariate resultant.
pub fn resultant_uni(p: &UniPoly, q: &UniPoly) -> Result<BigRational> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::domain("resultant of a zero polynomial"));
    };
    if dp == 0 && dq == 0 {
        return Err(Error::domain("both inputs are constant"));
    }
    let (cp, a) = p.to_primitive();
    let (cq, b) = q.to_primitive();
    let r = chain::resultant(&a, &b);
    let scale = num_traits::pow(cp, dq) * num_traits::pow(cq, dp);
    Ok(BigRational::from_integer(r) * scale)
}

/// Discriminant of a univariate polynomial of degree at least two.
pub fn discriminant(p: &UniPoly) -> Result<BigRational> {
    let d = p.degree().unwrap_or(0);
    if d < 2 {
        return Err(Error::domain("discriminant needs degree at least 2"));
    }
    let (c, a) = p.to_primitive();
    let disc = discriminant_generic(&a).expect("degree checked");
    // disc(c a) = c^(2d - 2) disc(a)
    Ok(BigRational::from_integer(disc) * num_traits::pow(c, 2 * d - 2))
}

/// Discriminant with respect to `v`, a polynomial in the other variable.
pub fn discriminant_bi(p: &BiPoly, v: &Var) -> Result<UniPoly> {
    let d = p.degree_in(v)?.unwrap_or(0);
    if d < 2 {
        return Err(Error::domain(format!("discriminant needs degree at least 2 in {v}")));
    }
    let (c, a) = p.to_zz(v)?;
    let disc = discriminant_generic(&a).expect("degree checked");
    Ok(UniPoly::from_dense_scaled(
        other_var(p, v),
        &disc,
        &num_traits::pow(c, 2 * d - 2),
    ))
}

pub(crate) fn other_var(p: &BiPoly, v: &Var) -> Var {
    if p.vars()[0] == *v {
        p.vars()[1].clone()
    } else {
        p.vars()[0].clone()
    }
}

pub(crate) fn scale_pow(c: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(c.clone(), e as usize)
    } else {
        <BigRational as One>::one() / num_traits::pow(c.clone(), (-e) as usize)
    }
}

#[allow(dead_code)]
pub(crate) fn int_poly(p: &Dense<BigInt>) -> Vec<BigRational> {
    p.coeffs().iter().cloned().map(BigRational::from_integer).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(terms: &[(i64, u32, u32)]) -> BiPoly {
        BiPoly::from_int_terms(Var::new("x"), Var::new("y"), terms)
    }

    #[test]
    fn resultant_of_hyperbola_and_circle() {
        let p = xy(&[(1, 1, 1), (-1, 0, 0)]);
        let q = xy(&[(1, 2, 0), (1, 0, 2), (-4, 0, 0)]);
        let r = resultant(&p, &q, &Var::new("x")).unwrap();
        assert_eq!(r, UniPoly::from_ints(Var::new("y"), &[1, 0, -4, 0, 1]));
        let sylvester = SylvesterMatrix::new(&p, &q, &Var::new("x")).unwrap();
        assert_eq!(sylvester.determinant(), r);
    }

    #[test]
    fn resultant_of_linear_forms_by_hand() {
        let r = resultant(&xy(&[(1, 1, 0), (-1, 0, 1)]), &xy(&[(1, 1, 0), (1, 0, 1)]), &Var::new("x"))
            .unwrap();
        assert_eq!(r, UniPoly::from_ints(Var::new("y"), &[0, 2]));
    }

    #[test]
    fn resultant_rejects_constants() {
        let c = xy(&[(3, 0, 1)]);
        assert!(matches!(resultant(&c, &c, &Var::new("x")), Err(Error::Domain(_))));
    }

    #[test]
    fn discriminants() {
        let x = Var::new("x");
        assert_eq!(
            discriminant(&UniPoly::from_ints(x.clone(), &[-2, 0, 1])).unwrap(),
            BigRational::from_integer(8.into())
        );
        assert_eq!(
            discriminant(&UniPoly::from_ints(x.clone(), &[1, -2, 1])).unwrap(),
            BigRational::from_integer(0.into())
        );
        assert!(discriminant(&UniPoly::from_ints(x.clone(), &[1, 1])).is_err());
        // non-monic: disc(3x^2 + 2x - 1) = 4 + 12 = 16
        assert_eq!(
            discriminant(&UniPoly::from_ints(x, &[-1, 2, 3])).unwrap(),
            BigRational::from_integer(16.into())
        );
    }

    #[test]
    fn nested_discriminant_of_generic_quadratic() {
        // x^2 + a x + b over Z[b][a]: the result is a^2 - 4b.
        let z = |v: i64| BigInt::from(v);
        let b_poly = |c: &[i64]| Dense::new(c.iter().map(|&v| z(v)).collect::<Vec<_>>());
        let a_coeff = |c: Vec<Dense<BigInt>>| Dense::new(c);
        let p: Dense<Dense<Dense<BigInt>>> = Dense::new(vec![
            a_coeff(vec![b_poly(&[0, 1])]), // b
            a_coeff(vec![b_poly(&[]), b_poly(&[1])]), // a
            a_coeff(vec![b_poly(&[1])]),
        ]);
        let d = discriminant_generic(&p).unwrap();
        let expect = a_coeff(vec![b_poly(&[0, -4]), b_poly(&[]), b_poly(&[1])]);
        assert_eq!(d, expect);
    }

    #[test]
    fn bivariate_discriminant() {
        // x^2 + y x + 1 in x: y^2 - 4
        let p = xy(&[(1, 2, 0), (1, 1, 1), (1, 0, 0)]);
        let d = discriminant_bi(&p, &Var::new("x")).unwrap();
        assert_eq!(d, UniPoly::from_ints(Var::new("y"), &[-4, 0, 1]));
    }
}
