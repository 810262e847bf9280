use num_rational::BigRational;

use super::chain::sylvester_rows;
use super::other_var;
use crate::error::{Error, Result};
use crate::linalg::bareiss_det;
use crate::poly::{BiPoly, Dense, UniPoly, Var};

/// The `(p+q) x (p+q)` Sylvester matrix of two polynomials in `v`, entries
/// in the other variable. Rows of the first input come first.
#[derive(Clone, Debug, PartialEq)]
pub struct SylvesterMatrix {
    p: usize,
    q: usize,
    var: Var,
    entries: Vec<Vec<UniPoly>>,
}

impl SylvesterMatrix {
    pub fn new(a: &BiPoly, b: &BiPoly, v: &Var) -> Result<Self> {
        let b = b.aligned(&a.vars()[0], &a.vars()[1])?;
        let (Some(p), Some(q)) = (a.degree_in(v)?, b.degree_in(v)?) else {
            return Err(Error::domain("Sylvester matrix of a zero polynomial"));
        };
        let other = other_var(a, v);
        let to_dense = |x: &BiPoly| -> Result<Dense<Dense<BigRational>>> {
            Ok(Dense::new(
                x.as_univariate_in(v)?
                    .iter()
                    .map(|c| c.to_dense_q())
                    .collect(),
            ))
        };
        let rows = sylvester_rows(&to_dense(a)?, &to_dense(&b)?, 0);
        let entries = rows
            .into_iter()
            .map(|r| r.iter().map(|c| UniPoly::from_dense_q(other.clone(), c)).collect())
            .collect();
        Ok(SylvesterMatrix { p, q, var: other, entries })
    }

    /// Univariate case; entries are constants.
    pub fn from_uni(a: &UniPoly, b: &UniPoly) -> Result<Self> {
        let v = a.var().clone();
        let other = Var::new(&format!("{v}_"));
        let lift = |x: &UniPoly| BiPoly::from_uni(v.clone(), other.clone(), &x.with_var(v.clone()));
        SylvesterMatrix::new(&lift(a), &lift(b), &v)
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn entries(&self) -> &[Vec<UniPoly>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Determinant by fraction-free elimination over `Q[y]`.
    pub fn determinant(&self) -> UniPoly {
        let m: Vec<Vec<Dense<BigRational>>> = self
            .entries
            .iter()
            .map(|r| r.iter().map(UniPoly::to_dense_q).collect())
            .collect();
        UniPoly::from_dense_q(self.var.clone(), &bareiss_det(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_and_rows() {
        let x = Var::new("x");
        let s = SylvesterMatrix::from_uni(
            &UniPoly::from_ints(x.clone(), &[-2, 0, 1]),
            &UniPoly::from_ints(x, &[0, 2]),
        )
        .unwrap();
        assert_eq!(s.size(), 3);
        assert_eq!(s.degrees(), (2, 1));
        assert_eq!(s.determinant().coeff(0), BigRational::from_integer((-8).into()));
    }
}
