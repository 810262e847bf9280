//! Decimal rendering of exact rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

fn pow10(e: u32) -> BigInt {
    num_traits::pow(BigInt::from(10), e as usize)
}

/// `floor(log10 |x|)` for nonzero `x`.
pub(crate) fn decimal_exponent(x: &BigRational) -> i64 {
    let a = x.abs();
    let (n, d) = (a.numer(), a.denom());
    // bit-length estimate, then exact correction
    let est = ((n.bits() as f64 - d.bits() as f64) * std::f64::consts::LOG10_2).floor() as i64;
    let mut e = est;
    let ten_pow = |k: i64| -> BigRational {
        if k >= 0 {
            BigRational::from_integer(pow10(k as u32))
        } else {
            BigRational::new(BigInt::one(), pow10((-k) as u32))
        }
    };
    while ten_pow(e) > a {
        e -= 1;
    }
    while ten_pow(e + 1) <= a {
        e += 1;
    }
    e
}

/// `|x|` rounded to `digits` significant digits: `(mantissa, exponent)` with
/// `10^(digits-1) <= mantissa < 10^digits`. Ties round away from zero.
fn round_significant(x: &BigRational, digits: u32) -> (BigInt, i64) {
    let mut e = decimal_exponent(x);
    let shift = digits as i64 - 1 - e;
    let scaled = if shift >= 0 {
        x.abs() * BigRational::from_integer(pow10(shift as u32))
    } else {
        x.abs() / BigRational::from_integer(pow10((-shift) as u32))
    };
    let (q, r) = scaled.numer().div_rem(scaled.denom());
    let mut m = q;
    if BigRational::new(r * 2, scaled.denom().clone()) >= BigRational::one() {
        m += 1;
    }
    if m == pow10(digits) {
        m /= 10;
        e += 1;
    }
    (m, e)
}

/// `%g`-style rendering with exactly `digits` significant digits (trailing
/// zeros kept). Fixed notation when `-5 <= exponent < digits`.
pub fn format_significant(x: &BigRational, digits: u32) -> String {
    let digits = digits.max(1);
    if x.is_zero() {
        return if digits == 1 {
            "0".to_string()
        } else {
            format!("0.{}", "0".repeat(digits as usize - 1))
        };
    }
    let (m, e) = round_significant(x, digits);
    let s = m.to_string();
    let sign = if x.is_negative() { "-" } else { "" };
    if (-5..digits as i64).contains(&e) {
        if e >= 0 {
            let (int, frac) = s.split_at(e as usize + 1);
            if frac.is_empty() {
                format!("{sign}{int}")
            } else {
                format!("{sign}{int}.{frac}")
            }
        } else {
            format!("{sign}0.{}{s}", "0".repeat((-e - 1) as usize))
        }
    } else {
        let (head, tail) = s.split_at(1);
        if tail.is_empty() {
            format!("{sign}{head}e{e}")
        } else {
            format!("{sign}{head}.{tail}e{e}")
        }
    }
}

/// Exact decimal string of a rational with a terminating expansion, or a
/// `p/q` string otherwise.
pub fn exact_string(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
