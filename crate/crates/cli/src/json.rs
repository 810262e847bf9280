//! JSON rendering of exact results. Exact data is carried as strings.

use linf_core::norm::{NormCertificate, Timings};
use linf_core::param::{Bound, ParamAnalysis, ParamCell};
use linf_core::poly::UniPoly;
use linf_core::realroots::{exact_string, AlgebraicNumber, IsolatingInterval};
use linf_core::{BigInt, BigRational, Sign};
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

/// Coefficients in ascending powers, as exact strings.
pub fn coeff_list(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(exact_string(c))).collect())
}

/// An interval around `a` whose relative width is below `10^-digits`.
pub fn tight_interval(a: &AlgebraicNumber, digits: u32) -> IsolatingInterval {
    let scale = BigRational::from_integer(num_traits::pow(BigInt::from(10), digits as usize));
    let mut cur = a.clone();
    for _ in 0..20_000 {
        let iv = cur.interval();
        if iv.is_point() {
            break;
        }
        let (lo, hi) = (iv.lo(), iv.hi());
        let same_sign = (lo.is_positive() && hi.is_positive()) || (lo.is_negative() && hi.is_negative());
        if same_sign && iv.width() * &scale <= lo.abs().min(hi.abs()) {
            break;
        }
        cur = cur.bisect();
    }
    cur.interval().clone()
}

pub fn algebraic(a: &AlgebraicNumber, digits: u32) -> Value {
    let iv = tight_interval(a, digits);
    json!({
        "decimal": a.to_decimal(digits),
        "variable": a.var().name(),
        "defining_poly": coeff_list(a.defining()),
        "interval": [exact_string(iv.lo()), exact_string(iv.hi())],
    })
}

pub fn timings(t: &Timings) -> Value {
    let mut m = Map::new();
    for (name, d) in t.stages() {
        m.insert((*name).to_string(), json!(d.as_secs_f64() * 1e3));
    }
    m.insert("total".into(), json!(t.total().as_secs_f64() * 1e3));
    Value::Object(m)
}

pub fn certificate(c: &NormCertificate, digits: u32) -> Value {
    let value = algebraic(c.value(), digits);
    json!({
        "value_decimal": c.decimal(),
        "value_variable": value["variable"],
        "value_defining_poly": value["defining_poly"],
        "value_interval": value["interval"],
        "provenance": c.provenance().as_str(),
        "omega_witness": c.omega_witness().map(|w| algebraic(w, digits)),
        "rejected": c.rejected().iter().map(|r| {
            let mut v = algebraic(&r.value, digits);
            v["reason"] = json!(r.reason.as_str());
            v
        }).collect::<Vec<_>>(),
        "sigma_infinity": algebraic(c.sigma_infinity(), digits),
        "timings_ms": timings(c.timings()),
    })
}

fn parse_rational(v: &Value) -> Option<BigRational> {
    let s = v.as_str()?;
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.parse().ok()?;
            let d: BigInt = d.parse().ok()?;
            (!d.is_zero()).then(|| BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Re-checks a certificate from its JSON alone: the defining polynomial
/// changes sign across the interval, or vanishes at a point interval.
pub fn verify_certificate(v: &Value) -> bool {
    let Some(coeffs) = v["value_defining_poly"].as_array() else {
        return false;
    };
    let Some(coeffs) = coeffs.iter().map(parse_rational).collect::<Option<Vec<_>>>() else {
        return false;
    };
    let (Some(lo), Some(hi)) = (parse_rational(&v["value_interval"][0]), parse_rational(&v["value_interval"][1]))
    else {
        return false;
    };
    let p = UniPoly::new(linf_core::poly::Var::g(), coeffs);
    if p.is_constant() || lo > hi {
        return false;
    }
    let at = |r: &BigRational| Sign::of(&p.eval(r));
    if lo == hi {
        return at(&lo) == Sign::Zero;
    }
    let (a, b) = (at(&lo), at(&hi));
    a != Sign::Zero && b != Sign::Zero && a != b
}

fn bound(b: &Bound, digits: u32) -> Value {
    match b {
        Bound::NegInf => json!("-inf"),
        Bound::PosInf => json!("inf"),
        Bound::Finite(a) => algebraic(a, digits),
    }
}

fn cell(c: &ParamCell, digits: u32) -> Value {
    json!({
        "lo": bound(c.lo(), digits),
        "hi": bound(c.hi(), digits),
        "sample": exact_string(c.sample()),
        "root_index": c.root_index(),
        "root_count": c.root_count(),
        "value_at_sample": algebraic(c.value_at_sample(), digits),
        "provenance_at_sample": c.provenance_at_sample().as_str(),
    })
}

pub fn param_analysis(a: &ParamAnalysis, digits: u32) -> Value {
    json!({
        "param": a.param().name(),
        "range": [
            a.range().lo().map_or("-inf".to_string(), exact_string),
            a.range().hi().map_or("inf".to_string(), exact_string),
        ],
        "candidate_poly": a.candidate_poly().to_string(),
        "boundary_poly": coeff_list(a.boundary_poly()),
        "boundaries": a.boundaries().iter().map(|b| algebraic(b, digits)).collect::<Vec<_>>(),
        "cells": a.cells().iter().map(|c| cell(c, digits)).collect::<Vec<_>>(),
    })
}
