use std::cmp::Ordering;

use linf_core::elim::{
    count_real_roots, sign_variation_c, sturm_habicht_uni, subresultant_sequence,
    subresultant_sequence_uni,
};
use linf_core::norm::linf_norm;
use linf_core::numeric::{sweep_norm, GridSpec};
use linf_core::poly::{BiPoly, UniPoly, Var};
use linf_core::realroots::{compare, isolate_real_roots};
use linf_core::transfer::{conjugate, phi_det_numerator, RationalFunction, TransferMatrix};
use linf_core::{BigRational, Sign};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn bivariate() -> impl Strategy<Value = BiPoly> {
    prop::collection::vec((-5i64..=5, 0u32..=3, 0u32..=2), 1..7).prop_map(|t| {
        BiPoly::from_int_terms(Var::new("x"), Var::new("y"), &t)
    })
}

fn univariate() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 2..8)
        .prop_filter("nonconstant", |c| c[1..].iter().any(|&x| x != 0))
        .prop_map(|c| UniPoly::from_ints(Var::new("x"), &c))
}

/// Proper SISO system with poles at `-k`, `k` in `1..=6`.
fn stable_siso(max_degree: usize) -> impl Strategy<Value = RationalFunction> {
    (prop::collection::vec(1i64..=6, 1..=max_degree), prop::collection::vec(-5i64..=5, 1..=max_degree + 1))
        .prop_filter_map("nonzero", |(poles, num)| {
            let s = Var::s();
            let den = poles
                .iter()
                .fold(UniPoly::from_ints(s.clone(), &[1]), |acc, &k| &acc * &UniPoly::from_ints(s.clone(), &[k, 1]));
            let mut num = num;
            num.truncate(poles.len() + 1);
            let num = UniPoly::from_ints(s, &num);
            (!num.is_zero()).then(|| RationalFunction::new(&num, &den).unwrap())
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn specialization_commutes(p in bivariate(), r in bivariate(), a in -4i64..=4) {
        let (x, y) = (Var::new("x"), Var::new("y"));
        let dp = p.degree_in(&x).unwrap().unwrap_or(0);
        let dr = r.degree_in(&x).unwrap().unwrap_or(0);
        prop_assume!(dp >= 1 && dr >= 1);
        let a = q(a, 1);
        let lp = p.leading_coeff(&x).unwrap().eval(&a);
        let lr = r.leading_coeff(&x).unwrap().eval(&a);
        prop_assume!(lp != q(0, 1) && lr != q(0, 1));
        let seq = subresultant_sequence(&p, &r, &x).unwrap();
        let spec = seq.specialize(&y, &a).unwrap();
        let direct = subresultant_sequence_uni(
            &p.eval_partial(&y, &a).unwrap().with_var(x.clone()),
            &r.eval_partial(&y, &a).unwrap().with_var(x.clone()),
        ).unwrap();
        prop_assert_eq!(spec.polys().len(), direct.polys().len());
        for (u, v) in spec.polys().iter().zip(direct.polys()) {
            prop_assert_eq!(u.with_var(x.clone()), v.with_var(x.clone()));
        }
    }

    #[test]
    fn sign_count_matches_isolation(p in univariate()) {
        let n = count_real_roots(&p).unwrap();
        prop_assert_eq!(n, isolate_real_roots(&p).unwrap().len());
        let signs: Vec<Sign> = sturm_habicht_uni(&p).unwrap().principal_top_down().iter().map(Sign::of).collect();
        prop_assert_eq!(sign_variation_c(&signs).unwrap(), n as i64);
    }

    #[test]
    fn root_comparison_is_a_total_order(p in univariate(), r in univariate()) {
        let mut all = isolate_real_roots(&p).unwrap();
        all.extend(isolate_real_roots(&r).unwrap());
        for a in &all {
            prop_assert_eq!(compare(a, a), Ordering::Equal);
            for b in &all {
                prop_assert_eq!(compare(a, b), compare(b, a).reverse());
                let fa = a.to_f64();
                let fb = b.to_f64();
                if (fa - fb).abs() > 1e-9 * (1.0 + fa.abs()) {
                    prop_assert_eq!(compare(a, b), fa.partial_cmp(&fb).unwrap());
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn norm_scales(g in stable_siso(3), c in prop::sample::select(vec![q(2, 1), q(-3, 2), q(1, 7)])) {
        let g = TransferMatrix::scalar(g);
        let v = linf_norm(&g, 10).unwrap();
        let w = linf_norm(&g.scale(&c), 10).unwrap();
        let abs_c = if c < q(0, 1) { -c.clone() } else { c.clone() };
        prop_assert_eq!(w.value().compare(&v.value().scaled(&abs_c)), Ordering::Equal);
    }

    #[test]
    fn norm_of_block_diagonal_is_the_max(a in stable_siso(2), b in stable_siso(2)) {
        let (a, b) = (TransferMatrix::scalar(a), TransferMatrix::scalar(b));
        let na = linf_norm(&a, 10).unwrap();
        let nb = linf_norm(&b, 10).unwrap();
        let nd = linf_norm(&a.block_diag(&b), 10).unwrap();
        let max = if na.value() >= nb.value() { na.value() } else { nb.value() };
        prop_assert_eq!(nd.value().compare(max), Ordering::Equal);
    }

    #[test]
    fn conjugate_is_an_involution(a in stable_siso(2), b in stable_siso(2)) {
        let g = TransferMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![b, a]]).unwrap();
        prop_assert_eq!(conjugate(&conjugate(&g)), g);
    }

    #[test]
    fn numerator_is_even_in_omega(a in stable_siso(3), b in stable_siso(2)) {
        let g = TransferMatrix::from_rows(vec![vec![a, b]]).unwrap();
        let n = phi_det_numerator(&g, false).unwrap();
        prop_assert!(n.n().is_even_in(&Var::w()).unwrap());
    }

    #[test]
    fn sweep_agrees_with_symbolic(g in stable_siso(4)) {
        let g = TransferMatrix::scalar(g);
        let exact = linf_norm(&g, 10).unwrap().value().to_f64();
        let sw = sweep_norm(&g, &GridSpec::default(), true).unwrap().estimate;
        prop_assert!(sw <= exact * (1.0 + 1e-6), "{} > {}", sw, exact);
        prop_assert!((sw - exact).abs() <= 1e-6 * exact, "{} vs {}", sw, exact);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn transpose_preserves_norm(a in stable_siso(1), b in stable_siso(1), c in stable_siso(1), d in stable_siso(1)) {
        let g = TransferMatrix::from_rows(vec![vec![a, b], vec![c, d]]).unwrap();
        let n = linf_norm(&g, 10).unwrap();
        let t = linf_norm(&g.transpose(), 10).unwrap();
        prop_assert_eq!(n.value().compare(t.value()), Ordering::Equal);
        let pg = phi_det_numerator(&g, true).unwrap();
        let pt = phi_det_numerator(&g.transpose(), true).unwrap();
        prop_assert_eq!(pg.n().normalized(), pt.n().normalized());
    }
}
