//! Generic subresultant kernels over an integral domain.
//!
//! [`signed_chain`] is the signed subresultant recurrence with exact
//! divisions (no determinant is ever expanded). [`determinantal`] builds the
//! same objects from minors of the Sylvester matrix and serves as the
//! independent oracle and as the equal-degree path.

use crate::linalg::bareiss_det;
use crate::poly::{Dense, Ring};

/// `(-1)^(i(i-1)/2)`
pub(crate) fn eps_negative(i: usize) -> bool {
    (i * i.saturating_sub(1) / 2) % 2 == 1
}

pub(crate) fn signed<R: Ring>(neg: bool, x: R) -> R {
    if neg {
        x.negate()
    } else {
        x
    }
}

/// `-Rem(c * a, b) / den` over the fraction field, computed exactly in `R`.
fn neg_rem_scaled<R: Ring>(c: &R, a: &Dense<R>, b: &Dense<R>, den: &R) -> Dense<R> {
    let e = a.degree().unwrap_or(0) - b.degree().unwrap_or(0);
    let scale = b.lc().pow(e as u32 + 1).times(den);
    a.prem(b)
        .scale(c)
        .div_exact_scalar(&scale)
        .expect("subresultant division is exact")
        .negate()
}

/// Signed subresultants `sRes_j(p, q)`, `j = 0..=deg p`, and their formal
/// leading coefficients `s_j`. Requires `deg q < deg p`.
///
/// `s_p` is reported as `1`, the normalization used inside the recurrence.
pub(crate) fn signed_chain<R: Ring>(p: &Dense<R>, q: &Dense<R>) -> (Vec<Dense<R>>, Vec<R>) {
    let dp = p.degree().expect("signed subresultants of the zero polynomial");
    assert!(dp >= 1, "first argument must have positive degree");
    assert!(q.degree().is_none_or(|d| d < dp), "requires deg q < deg p");

    let mut sres = vec![Dense::zero(); dp + 1];
    let mut s = vec![R::zero(); dp + 1];
    let mut t = vec![R::zero(); dp + 1];
    sres[dp] = p.clone();
    s[dp] = R::one();
    t[dp] = R::one();
    sres[dp - 1] = q.clone();
    t[dp - 1] = q.lc();
    if q.degree() == Some(dp - 1) {
        s[dp - 1] = t[dp - 1].clone();
    }

    let mut i = dp + 1;
    let mut j = dp;
    while j >= 1 && !sres[j - 1].is_zero_poly() {
        let k = sres[j - 1].degree().unwrap();
        let c = if k == j - 1 {
            s[j - 1] = t[j - 1].clone();
            s[j - 1].times(&s[j - 1])
        } else {
            s[j - 1] = R::zero();
            for delta in 1..j - k {
                let v = t[j - 1]
                    .times(&t[j - delta])
                    .div_exact(&s[j])
                    .expect("subresultant division is exact");
                t[j - delta - 1] = signed(delta % 2 == 1, v);
            }
            s[k] = t[k].clone();
            sres[k] = sres[j - 1]
                .scale(&s[k])
                .div_exact_scalar(&t[j - 1])
                .expect("subresultant division is exact");
            t[j - 1].times(&s[k])
        };
        if k == 0 {
            break;
        }
        let den = s[j].times(&t[i - 1]);
        sres[k - 1] = neg_rem_scaled(&c, &sres[i - 1], &sres[j - 1], &den);
        t[k - 1] = sres[k - 1].lc();
        i = j;
        j = k;
    }
    (sres, s)
}

/// Sturm-Habicht sequence `StHa_j(p)`, `j = 0..=deg p`, with principal
/// coefficients. `stha_p` is `lc(p)`.
pub(crate) fn sturm_habicht_chain<R: Ring>(p: &Dense<R>) -> (Vec<Dense<R>>, Vec<R>) {
    let (polys, mut principal) = signed_chain(p, &p.derivative());
    let dp = polys.len() - 1;
    principal[dp] = p.lc();
    (polys, principal)
}

/// Subresultants in the determinantal convention, `j = 0..=deg b`, for
/// `deg a > deg b`: `Sres_j = eps(m - j) * sRes_j`.
pub(crate) fn subresultant_chain<R: Ring>(a: &Dense<R>, b: &Dense<R>) -> (Vec<Dense<R>>, Vec<R>) {
    let m = a.degree().expect("nonzero");
    let n = b.degree().expect("nonzero");
    debug_assert!(n < m);
    let (sres, s) = signed_chain(a, b);
    let polys = (0..=n)
        .map(|j| {
            let neg = eps_negative(m - j);
            if neg {
                sres[j].negate()
            } else {
                sres[j].clone()
            }
        })
        .collect();
    let principal = (0..=n).map(|j| signed(eps_negative(m - j), s[j].clone())).collect();
    (polys, principal)
}

/// Rows `x^(n-j-1) a, ..., a, x^(m-j-1) b, ..., b` of the `j`-th Sylvester
/// submatrix, columns from `x^(m+n-j-1)` down to `x^0`.
pub(crate) fn sylvester_rows<R: Ring>(a: &Dense<R>, b: &Dense<R>, j: usize) -> Vec<Vec<R>> {
    let m = a.degree().unwrap_or(0);
    let n = b.degree().unwrap_or(0);
    let width = m + n - j;
    let mut rows = Vec::with_capacity(width);
    let mut push = |poly: &Dense<R>, count: usize| {
        for r in (0..count).rev() {
            let mut row = vec![R::zero(); width];
            // x^r * poly occupies exponents r..=r+deg
            for (e, c) in poly.coeffs().iter().enumerate() {
                row[width - 1 - (e + r)] = c.clone();
            }
            rows.push(row);
        }
    };
    push(a, n - j);
    push(b, m - j);
    rows
}

/// `j`-th subresultant from minors of the Sylvester matrix.
/// Defined for `j < min(m, n)`, and for `j = n` when `m > n`.
pub(crate) fn determinantal<R: Ring>(a: &Dense<R>, b: &Dense<R>, j: usize) -> Dense<R> {
    let rows = sylvester_rows(a, b, j);
    let size = rows.len();
    if size == 0 {
        return Dense::zero();
    }
    let width = rows[0].len();
    let lead = size - 1;
    let mut coeffs = Vec::with_capacity(j + 1);
    for i in 0..=j {
        let col = width - 1 - i;
        let m: Vec<Vec<R>> = rows
            .iter()
            .map(|r| {
                let mut v: Vec<R> = r[..lead].to_vec();
                v.push(r[col].clone());
                v
            })
            .collect();
        coeffs.push(bareiss_det(m));
    }
    Dense::new(coeffs)
}

/// Resultant via the signed chain, with the conventions
/// `Res(a, b) = (-1)^(mn) Res(b, a)` and `Res(a, c) = c^m` for constant `c`.
pub(crate) fn resultant<R: Ring>(a: &Dense<R>, b: &Dense<R>) -> R {
    let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
        return R::zero();
    };
    if n == 0 {
        return b.lc().pow(m as u32);
    }
    if m == 0 {
        return a.lc().pow(n as u32);
    }
    if m < n {
        return signed(m * n % 2 == 1, resultant(b, a));
    }
    if m == n {
        // Row reduction against `a` lowers the degree of `b`.
        let b1 = b.scale(&a.lc()).minus(&a.scale(&b.lc()));
        let Some(n1) = b1.degree() else {
            return R::zero();
        };
        return resultant(a, &b1)
            .div_exact(&a.lc().pow(n1 as u32))
            .expect("exact by row reduction");
    }
    let (_, s) = signed_chain(a, b);
    signed(eps_negative(m), s[0].clone())
}
