//! Integer-polynomial kernels for Descartes-rule isolation.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::Dense;
use crate::sign::Sign;

/// Sign of `p(a/b)` with `b > 0`, in integer arithmetic.
pub(crate) fn sign_at_rational(p: &Dense<BigInt>, r: &BigRational) -> Sign {
    let c = p.coeffs();
    if c.is_empty() {
        return Sign::Zero;
    }
    let (a, b) = (r.numer(), r.denom());
    // H = sum c_i a^i b^(n-i)
    let mut h = c[c.len() - 1].clone();
    let mut bp = BigInt::one();
    for ci in c[..c.len() - 1].iter().rev() {
        bp *= b;
        h = h * a + ci * &bp;
    }
    Sign::of(&BigRational::from_integer(h))
}

/// `p(x + 1)`
pub(crate) fn taylor_shift_one(p: &[BigInt]) -> Vec<BigInt> {
    let mut c = p.to_vec();
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = c[j + 1].clone();
            c[j] += t;
        }
    }
    c
}

/// Sign variations of a coefficient list, zeros skipped.
pub(crate) fn variations(c: &[BigInt]) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for x in c {
        let s = if x.is_zero() { 0 } else if x.is_negative() { -1 } else { 1 };
        if s != 0 {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
    }
    v
}

/// Descartes bound for the number of roots of `q` in `(0, 1)`.
pub(crate) fn descartes_unit(q: &[BigInt]) -> usize {
    let mut rev = q.to_vec();
    rev.reverse();
    variations(&taylor_shift_one(&rev))
}

/// Integer polynomial proportional to `p(lo + (hi - lo) t)`.
pub(crate) fn to_unit_interval(p: &Dense<BigInt>, lo: &BigRational, hi: &BigRational) -> Vec<BigInt> {
    let d = lo.denom().lcm(hi.denom());
    let a = (lo * BigRational::from_integer(d.clone())).to_integer();
    let e = ((hi - lo) * BigRational::from_integer(d.clone())).to_integer();
    let c = p.coeffs();
    if c.is_empty() {
        return Vec::new();
    }
    // H = sum c_i (a + e t)^i d^(n-i), by Horner on polynomials in t
    let mut h: Vec<BigInt> = vec![c[c.len() - 1].clone()];
    let mut dp = BigInt::one();
    for ci in c[..c.len() - 1].iter().rev() {
        dp *= &d;
        let mut next = vec![BigInt::zero(); h.len() + 1];
        for (k, hk) in h.iter().enumerate() {
            next[k] += hk * &a;
            next[k + 1] += hk * &e;
        }
        next[0] += ci * &dp;
        h = next;
    }
    h
}

/// Descartes bound on `(lo, hi)`.
pub(crate) fn descartes_interval(p: &Dense<BigInt>, lo: &BigRational, hi: &BigRational) -> usize {
    descartes_unit(&to_unit_interval(p, lo, hi))
}

/// Smallest `k` with `2^k` a strict bound on the absolute values of the
/// roots (Cauchy).
pub(crate) fn root_bound_log2(p: &Dense<BigInt>) -> u64 {
    let c = p.coeffs();
    let lc = c[c.len() - 1].abs();
    let mut m = BigRational::zero();
    for x in &c[..c.len() - 1] {
        let r = BigRational::new(x.abs(), lc.clone());
        if r > m {
            m = r;
        }
    }
    let bound = m + BigRational::one();
    let mut k = 0u64;
    let mut pow = BigRational::one();
    while pow <= bound {
        pow *= BigRational::from_integer(2.into());
        k += 1;
    }
    k
}

/// `2^n q(t/2)`
pub(crate) fn halve(q: &[BigInt]) -> Vec<BigInt> {
    let n = q.len().saturating_sub(1);
    q.iter()
        .enumerate()
        .map(|(i, c)| c << (n - i))
        .collect()
}

/// Exact division by `t - 1`.
pub(crate) fn deflate_at_one(q: &[BigInt]) -> Vec<BigInt> {
    let n = q.len() - 1;
    let mut out = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (1..=n).rev() {
        carry += &q[i];
        out[i - 1] = carry.clone();
    }
    debug_assert!((carry + &q[0]).is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn shift_and_variations() {
        // (x+1)^2 = x^2 + 2x + 1
        assert_eq!(taylor_shift_one(&z(&[0, 0, 1])), z(&[1, 2, 1]));
        assert_eq!(variations(&z(&[1, 0, -1, 2])), 2);
    }

    #[test]
    fn unit_interval_count() {
        // 4x^2 - 1 has exactly the root 1/2 in (0, 1)
        assert_eq!(descartes_unit(&z(&[-1, 0, 4])), 1);
        // x^2 + 1 has none
        assert_eq!(descartes_unit(&z(&[1, 0, 1])), 0);
    }

    #[test]
    fn deflation() {
        // (t - 1)(t + 2) = t^2 + t - 2
        assert_eq!(deflate_at_one(&z(&[-2, 1, 1])), z(&[2, 1]));
    }

    #[test]
    fn rational_sign() {
        let p = Dense::new(z(&[-16, 0, 63]));
        assert_eq!(
            sign_at_rational(&p, &BigRational::new(1.into(), 2.into())),
            Sign::Neg
        );
    }
}
