use super::sequence::{sturm_habicht, sturm_habicht_uni, SequenceKind, SignedSequence};
use super::other_var;
use crate::error::{Error, Result};
use crate::poly::{BiPoly, UniPoly, Var};
use crate::realroots::{sign_at, AlgebraicNumber};
use crate::sign::Sign;

/// Generalized sign variation count of a sequence listed from the top index
/// down. Trailing zeros are dropped; a block of `g` zeros between nonzero
/// `a` and `b` contributes nothing when `g` is odd and
/// `(-1)^(g/2) sign(a b)` otherwise.
pub fn sign_variation_c(signs: &[Sign]) -> Result<i64> {
    match signs.first() {
        None => return Ok(0),
        Some(Sign::Zero) => return Err(Error::domain("sign sequence starts with zero")),
        _ => {}
    }
    let mut total = 0i64;
    let mut last = (0usize, signs[0]);
    for (i, &s) in signs.iter().enumerate().skip(1) {
        if s.is_zero() {
            continue;
        }
        let gap = i - last.0 - 1;
        if gap.is_multiple_of(2) {
            let sgn = if (gap / 2).is_multiple_of(2) { 1 } else { -1 };
            total += sgn * (last.1 * s).as_i32() as i64;
        }
        last = (i, s);
    }
    Ok(total)
}

fn count_from_signs(signs: &[Sign]) -> Result<usize> {
    let c = sign_variation_c(signs)?;
    usize::try_from(c).map_err(|_| Error::internal(format!("negative root count {c}")))
}

/// Number of distinct real roots of a univariate polynomial.
pub fn count_real_roots(p: &UniPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::domain("root count of the zero polynomial"));
    }
    if p.is_constant() {
        return Ok(0);
    }
    let seq = sturm_habicht_uni(p)?;
    let signs: Vec<Sign> = seq.principal_top_down().iter().map(Sign::of).collect();
    count_from_signs(&signs)
}

/// Number of distinct real roots of `p(., gamma)` as a polynomial in `v`.
pub fn count_real_roots_at(p: &BiPoly, v: &Var, gamma: &AlgebraicNumber) -> Result<usize> {
    if p.degree_in(v)?.unwrap_or(0) == 0 {
        return constant_case(p, v, gamma);
    }
    sturm_habicht(p, v)?.count_real_roots_at(gamma)
}

fn constant_case(p: &BiPoly, v: &Var, gamma: &AlgebraicNumber) -> Result<usize> {
    if p.is_zero() || sign_at(&p.coeff_in(v, 0)?, gamma).is_zero() {
        return Err(Error::Degenerate(format!("polynomial vanishes identically at {gamma:?}")));
    }
    Ok(0)
}

impl SignedSequence<BiPoly> {
    /// Root count of the first input specialized at `gamma`, with signs of
    /// the principal coefficients decided exactly.
    ///
    /// If the leading coefficient vanishes at `gamma`, the input is truncated
    /// to its highest coefficient not vanishing there and its sequence is
    /// recomputed.
    pub fn count_real_roots_at(&self, gamma: &AlgebraicNumber) -> Result<usize> {
        if self.kind() != SequenceKind::SturmHabicht {
            return Err(Error::domain("root counting needs a Sturm-Habicht sequence"));
        }
        let v = self.var();
        let p = self.inputs().0;
        // one refinement shared by all the sign evaluations below
        let gamma = &gamma.refined_bits(64);
        let lc = p.leading_coeff(v)?;
        if !sign_at(&lc, gamma).is_zero() {
            let signs: Vec<Sign> = self
                .principal_coeffs()
                .iter()
                .rev()
                .map(|c| sign_at(c, gamma))
                .collect();
            return count_from_signs(&signs);
        }
        let coeffs = p.as_univariate_in(v)?;
        let Some(k) = (0..coeffs.len()).rev().find(|&k| !sign_at(&coeffs[k], gamma).is_zero()) else {
            return Err(Error::Degenerate(format!("polynomial vanishes identically at {gamma:?}")));
        };
        if k == 0 {
            return Ok(0);
        }
        let other = other_var(p, v);
        let truncated = BiPoly::from_univariate_in(v.clone(), other, &coeffs[..=k])
            .aligned(&p.vars()[0], &p.vars()[1])?;
        sturm_habicht(&truncated, v)?.count_real_roots_at(gamma)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn signs(v: &[i64]) -> Vec<Sign> {
        v.iter().map(|&x| Sign::of(&BigRational::from_integer(x.into()))).collect()
    }

    #[test]
    fn generalized_count_examples() {
        assert_eq!(sign_variation_c(&signs(&[1, 4, 8, -200, 0])).unwrap(), 1);
        assert_eq!(sign_variation_c(&signs(&[1, 4, 19, -500, -1000])).unwrap(), 2);
        assert_eq!(sign_variation_c(&signs(&[1])).unwrap(), 0);
        assert!(sign_variation_c(&signs(&[0, 1])).is_err());
    }

    #[test]
    fn zero_blocks() {
        // one zero between: no contribution
        assert_eq!(sign_variation_c(&signs(&[1, 0, -1])).unwrap(), 0);
        // two zeros between equal signs: -1
        assert_eq!(sign_variation_c(&signs(&[1, 0, 0, 1])).unwrap(), -1);
        assert_eq!(sign_variation_c(&signs(&[1, 0, 0, -1])).unwrap(), 1);
    }

    #[test]
    fn univariate_counts() {
        let x = Var::new("x");
        assert_eq!(count_real_roots(&UniPoly::from_ints(x.clone(), &[-1, 0, 1])).unwrap(), 2);
        assert_eq!(count_real_roots(&UniPoly::from_ints(x.clone(), &[1, 0, 1])).unwrap(), 0);
        // (x - 1)^2 (x + 2): two distinct
        assert_eq!(count_real_roots(&UniPoly::from_ints(x, &[2, -3, 0, 1])).unwrap(), 2);
    }

    fn example_p() -> BiPoly {
        BiPoly::from_int_terms(
            Var::new("x"),
            Var::new("y"),
            &[(1, 4, 0), (-1, 3, 1), (-2, 3, 0), (2, 2, 1), (1, 2, 0), (-1, 1, 1), (-2, 1, 0), (2, 0, 1)],
        )
    }

    #[test]
    fn counts_at_rational_points() {
        let p = example_p();
        let at = |r: i64| AlgebraicNumber::from_rational(Var::new("y"), BigRational::from_integer(r.into()));
        assert_eq!(count_real_roots_at(&p, &Var::new("x"), &at(3)).unwrap(), 2);
        assert_eq!(count_real_roots_at(&p, &Var::new("x"), &at(2)).unwrap(), 1);
    }

    #[test]
    fn truncates_when_leading_coefficient_vanishes() {
        // (y^2 - 2) x^2 + x - 1 at y = sqrt 2 is x - 1
        let p = BiPoly::from_int_terms(
            Var::new("x"),
            Var::new("y"),
            &[(1, 2, 2), (-2, 2, 0), (1, 1, 0), (-1, 0, 0)],
        );
        let r2 = crate::realroots::isolate_real_roots(&UniPoly::from_ints(Var::new("y"), &[-2, 0, 1]))
            .unwrap()
            .pop()
            .unwrap();
        assert_eq!(count_real_roots_at(&p, &Var::new("x"), &r2).unwrap(), 1);
        let zero = BiPoly::from_int_terms(Var::new("x"), Var::new("y"), &[(1, 1, 2), (-2, 1, 0)]);
        assert!(matches!(
            count_real_roots_at(&zero, &Var::new("x"), &r2),
            Err(Error::Degenerate(_))
        ));
    }
}
