//! Dense univariate polynomials over a generic [`Ring`].
//!
//! Nesting gives the recursive multivariate representations used by the
//! elimination code: `Dense<BigInt>` is `Z[y]`, `Dense<Dense<BigInt>>` is
//! `Z[y][x]`, and so on. Coefficients are stored in ascending order and the
//! vector never ends with a zero, so the zero polynomial is the empty vector
//! and its degree is `None` (minus infinity).

use num_bigint::BigInt;
use num_rational::BigRational;

use super::ring::{GcdRing, Ring};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Dense<R> {
    c: Vec<R>,
}

impl<R: Ring> Dense<R> {
    pub fn new(mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        Dense { c }
    }

    pub fn zero() -> Self {
        Dense { c: Vec::new() }
    }

    pub fn constant(r: R) -> Self {
        Dense::new(vec![r])
    }

    /// `r * x^k`
    pub fn monomial(r: R, k: usize) -> Self {
        if r.is_zero() {
            return Dense::zero();
        }
        let mut c = vec![R::zero(); k + 1];
        c[k] = r;
        Dense { c }
    }

    pub fn x() -> Self {
        Dense::monomial(R::one(), 1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.c
    }

    pub fn is_zero_poly(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> R {
        self.c.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> R {
        self.c.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Dense<S> {
        Dense::new(self.c.iter().map(f).collect())
    }

    pub fn scale(&self, r: &R) -> Self {
        if r.is_zero() {
            return Dense::zero();
        }
        Dense::new(self.c.iter().map(|x| x.times(r)).collect())
    }

    pub fn div_exact_scalar(&self, r: &R) -> Option<Self> {
        if r.is_one() {
            return Some(self.clone());
        }
        let mut out = Vec::with_capacity(self.c.len());
        for x in &self.c {
            out.push(x.div_exact(r)?);
        }
        Some(Dense { c: out })
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero_poly() {
            return Dense::zero();
        }
        let mut c = vec![R::zero(); k];
        c.extend(self.c.iter().cloned());
        Dense { c }
    }

    pub fn derivative(&self) -> Self {
        Dense::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x.times(&R::from_int(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, at: &R) -> R {
        let mut acc = R::zero();
        for x in self.c.iter().rev() {
            acc = acc.times(at).plus(x);
        }
        acc
    }

    /// `p(-x)`
    pub fn reflect(&self) -> Self {
        Dense {
            c: self
                .c
                .iter()
                .enumerate()
                .map(|(i, x)| if i % 2 == 1 { x.negate() } else { x.clone() })
                .collect(),
        }
    }

    /// Whether only even powers carry nonzero coefficients.
    pub fn is_even(&self) -> bool {
        self.c.iter().skip(1).step_by(2).all(|x| x.is_zero())
    }

    /// For an even polynomial `p(x) = q(x^2)`, return `q`.
    pub fn even_part_compressed(&self) -> Self {
        Dense::new(self.c.iter().step_by(2).cloned().collect())
    }

    /// `q(x) -> q(x^2)`
    pub fn expand_square(&self) -> Self {
        let mut c = Vec::with_capacity(2 * self.c.len());
        for (i, x) in self.c.iter().enumerate() {
            if i > 0 {
                c.push(R::zero());
            }
            c.push(x.clone());
        }
        Dense::new(c)
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn prem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-division by zero polynomial");
        let Some(da) = self.degree() else {
            return Dense::zero();
        };
        if da < db {
            return self.clone();
        }
        let lb = b.lc();
        let mut r = self.c.clone();
        for top in (db..=da).rev() {
            let lead = std::mem::replace(&mut r[top], R::zero());
            for x in r[..top].iter_mut() {
                if !x.is_zero() {
                    *x = x.times(&lb);
                }
            }
            if !lead.is_zero() {
                let off = top - db;
                for (i, bc) in b.c[..db].iter().enumerate() {
                    if !bc.is_zero() {
                        r[off + i] = r[off + i].minus(&lead.times(bc));
                    }
                }
            }
        }
        Dense::new(r)
    }

    /// Exact polynomial division; `None` unless `b` divides `self`.
    pub fn div_exact_poly(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let Some(da) = self.degree() else {
            return Some(Dense::zero());
        };
        if da < db {
            return None;
        }
        let lb = b.lc();
        let mut r = self.c.clone();
        let mut q = vec![R::zero(); da - db + 1];
        for top in (db..=da).rev() {
            if r[top].is_zero() {
                continue;
            }
            let qc = r[top].div_exact(&lb)?;
            let off = top - db;
            for (i, bc) in b.c.iter().enumerate() {
                r[off + i] = r[off + i].minus(&qc.times(bc));
            }
            q[off] = qc;
        }
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Dense::new(q))
    }

    /// Compose with `a + b x`.
    pub fn compose_linear(&self, a: &R, b: &R) -> Self {
        let lin = Dense::new(vec![a.clone(), b.clone()]);
        let mut acc = Dense::zero();
        for x in self.c.iter().rev() {
            acc = acc.times(&lin).plus(&Dense::constant(x.clone()));
        }
        acc
    }

    /// Compose with a polynomial.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Dense::zero();
        for x in self.c.iter().rev() {
            acc = acc.times(inner).plus(&Dense::constant(x.clone()));
        }
        acc
    }
}

impl<R: Ring> Ring for Dense<R> {
    fn zero() -> Self {
        Dense::zero()
    }

    fn one() -> Self {
        Dense::constant(R::one())
    }

    fn from_int(v: i64) -> Self {
        Dense::constant(R::from_int(v))
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn plus(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), rhs.c.get(i)) {
                (Some(a), Some(b)) => a.plus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Dense::new(c)
    }

    fn minus(&self, rhs: &Self) -> Self {
        let n = self.c.len().max(rhs.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), rhs.c.get(i)) {
                (Some(a), Some(b)) => a.minus(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.negate(),
                (None, None) => unreachable!(),
            });
        }
        Dense::new(c)
    }

    fn times(&self, rhs: &Self) -> Self {
        if self.c.is_empty() || rhs.c.is_empty() {
            return Dense::zero();
        }
        let mut c = vec![R::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                c[i + j] = c[i + j].plus(&a.times(b));
            }
        }
        Dense::new(c)
    }

    fn negate(&self) -> Self {
        Dense {
            c: self.c.iter().map(|x| x.negate()).collect(),
        }
    }

    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_constant() {
            return self.div_exact_scalar(&rhs.c.first().cloned()?);
        }
        self.div_exact_poly(rhs)
    }
}

impl<R: GcdRing> Dense<R> {
    /// Gcd of the coefficients (canonical associate); zero for the zero polynomial.
    pub fn content(&self) -> R {
        let mut g = R::zero();
        for x in &self.c {
            g = if g.is_zero() { x.normalized() } else { g.gcd(x) };
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with canonical sign (positive leading associate).
    pub fn primitive(&self) -> Self {
        if self.is_zero_poly() {
            return Dense::zero();
        }
        let mut cont = self.content();
        if self.lc().is_negative() {
            cont = cont.negate();
        }
        self.div_exact_scalar(&cont)
            .expect("content divides every coefficient")
    }

    pub fn content_primitive(&self) -> (R, Self) {
        if self.is_zero_poly() {
            return (R::zero(), Dense::zero());
        }
        let mut cont = self.content();
        if self.lc().is_negative() {
            cont = cont.negate();
        }
        let prim = self
            .div_exact_scalar(&cont)
            .expect("content divides every coefficient");
        (cont, prim)
    }

    /// Gcd by the primitive polynomial remainder sequence.
    pub fn gcd_poly(&self, other: &Self) -> Self {
        if self.is_zero_poly() {
            return other.normalized();
        }
        if other.is_zero_poly() {
            return self.normalized();
        }
        let (ca, mut a) = self.content_primitive();
        let (cb, mut b) = other.content_primitive();
        let c = ca.gcd(&cb);
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero_poly() {
            if b.degree() == Some(0) {
                return Dense::constant(c);
            }
            let r = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().scale(&c)
    }

    /// Square-free part: content handled recursively, the primitive part
    /// via `p / gcd(p, p')`.
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero_poly() {
            return Dense::zero();
        }
        let (cont, prim) = self.content_primitive();
        let cont_sqf = cont.squarefree();
        if prim.degree() == Some(0) {
            return Dense::constant(cont_sqf).normalized();
        }
        let g = prim.gcd_poly(&prim.derivative());
        let reduced = prim
            .div_exact_poly(&g)
            .expect("gcd divides the polynomial")
            .primitive();
        reduced.scale(&cont_sqf).normalized()
    }
}

impl<R: GcdRing> GcdRing for Dense<R> {
    fn gcd(&self, rhs: &Self) -> Self {
        self.gcd_poly(rhs)
    }

    fn is_negative(&self) -> bool {
        self.c.last().is_some_and(|x| x.is_negative())
    }

    fn squarefree(&self) -> Self {
        self.squarefree_part()
    }
}

/// Integer polynomial with its rational scale: `p = scale * prim`.
pub fn rational_to_primitive(coeffs: &[BigRational]) -> (BigRational, Dense<BigInt>) {
    use num_integer::Integer;
    use num_traits::{One, Zero};
    let mut den = <BigInt as One>::one();
    for c in coeffs {
        den = den.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let d = Dense::new(ints);
    if d.is_zero_poly() {
        return (<BigRational as Zero>::zero(), d);
    }
    let (cont, prim) = d.content_primitive();
    (BigRational::new(cont, den), prim)
}

/// Dense integer polynomial scaled back to rational coefficients.
pub fn primitive_to_rational(p: &Dense<BigInt>, scale: &BigRational) -> Vec<BigRational> {
    p.coeffs()
        .iter()
        .map(|c| BigRational::from_integer(c.clone()) * scale)
        .collect()
}

/// Swap the two variables of a bivariate dense polynomial:
/// `sum_i sum_j a_ij y^j x^i` (outer `x`) becomes outer `y`.
pub fn transpose<R: Ring>(p: &Dense<Dense<R>>) -> Dense<Dense<R>> {
    let inner = p
        .coeffs()
        .iter()
        .map(|c| c.coeffs().len())
        .max()
        .unwrap_or(0);
    let mut rows: Vec<Vec<R>> = vec![vec![R::zero(); p.coeffs().len()]; inner];
    for (i, c) in p.coeffs().iter().enumerate() {
        for (j, a) in c.coeffs().iter().enumerate() {
            rows[j][i] = a.clone();
        }
    }
    Dense::new(rows.into_iter().map(Dense::new).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(c: &[i64]) -> Dense<BigInt> {
        Dense::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = zp(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(zp(&[0, 0]).degree(), None);
    }

    #[test]
    fn prem_matches_hand_computation() {
        // prem(x^2 + 1, 2x + 1) = 4(x^2+1) mod (2x+1) = 5
        let r = zp(&[1, 0, 1]).prem(&zp(&[1, 2]));
        assert_eq!(r, zp(&[5]));
    }

    #[test]
    fn exact_division() {
        let a = zp(&[-1, 0, 1]);
        let b = zp(&[-1, 1]);
        assert_eq!(a.div_exact_poly(&b), Some(zp(&[1, 1])));
        assert_eq!(a.div_exact_poly(&zp(&[2, 1])), None);
    }

    #[test]
    fn gcd_of_cyclotomic_pair() {
        let g = zp(&[-1, 0, 0, 0, 1]).gcd_poly(&zp(&[-1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(g, zp(&[-1, 0, 1]));
    }

    #[test]
    fn squarefree_of_repeated_factor() {
        // (x-1)^2 (x+2) = x^3 - 3x + 2
        let p = zp(&[2, -3, 0, 1]);
        assert_eq!(p.squarefree_part(), zp(&[-2, 1, 1]));
    }

    #[test]
    fn bivariate_gcd_and_transpose() {
        // p = (x + y)(x - 1), q = (x + y)(x + 2) with outer x
        let y = |c: &[i64]| zp(c);
        let p = Dense::new(vec![y(&[0, -1]), y(&[-1, 1]), y(&[1])]);
        let q = Dense::new(vec![y(&[0, 2]), y(&[2, 1]), y(&[1])]);
        let g = p.gcd_poly(&q);
        assert_eq!(g, Dense::new(vec![y(&[0, 1]), y(&[1])]));
        let t = transpose(&g);
        assert_eq!(t, Dense::new(vec![y(&[0, 1]), y(&[1])]));
    }
}
