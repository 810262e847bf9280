use linf_core::norm::linf_norm;
use linf_core::param::{norm_at, Bound, ParamAnalysis, ParamRange, ParamTransferMatrix};
use linf_core::poly::{BiPoly, UniPoly, Var};
use linf_core::realroots::isolate_real_roots;
use linf_core::BigRational;
use std::cmp::Ordering;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// 1 / ((s^2 + 2 x s + 1)(s + 1))
fn damping() -> ParamTransferMatrix {
    let (s, x) = (Var::s(), Var::new("x"));
    let num = BiPoly::from_int_terms(s.clone(), x.clone(), &[(1, 0, 0)]);
    let den = BiPoly::from_int_terms(
        s,
        x.clone(),
        &[(1, 3, 0), (2, 2, 1), (1, 2, 0), (2, 1, 1), (1, 1, 0), (1, 0, 0)],
    );
    ParamTransferMatrix::new(1, 1, x, vec![(num, den)]).unwrap()
}

fn root_of(coeffs: &[i64], k: usize) -> linf_core::realroots::AlgebraicNumber {
    isolate_real_roots(&UniPoly::from_ints(Var::new("x"), coeffs)).unwrap()[k].clone()
}

#[test]
fn damping_partition() {
    let an = ParamAnalysis::of_matrix(&damping(), &ParamRange::positive()).unwrap();
    let expected = [root_of(&[-1, 2], 0), root_of(&[-1, 1], 0), root_of(&[-5, 0, 4], 1)];
    assert_eq!(an.boundaries().len(), 3);
    for (b, e) in an.boundaries().iter().zip(&expected) {
        assert_eq!(b.compare(e), Ordering::Equal, "{b} vs {e}");
    }
    let idx: Vec<usize> = an.cells().iter().map(|c| c.root_index()).collect();
    assert_eq!(idx, vec![7, 3, 4, 5]);
    assert_eq!(an.cells()[0].lo(), &Bound::Finite(linf_core::realroots::AlgebraicNumber::from_rational(Var::new("x"), q(0, 1))));
    assert_eq!(an.cells()[3].hi(), &Bound::PosInf);
    let samples: Vec<BigRational> = an.cells().iter().map(|c| c.sample().clone()).collect();
    assert_eq!(samples, vec![q(1, 4), q(3, 4), q(17, 16), q(2, 1)]);
}

#[test]
fn damping_lookup_matches_full_algorithm() {
    let g = damping();
    let an = ParamAnalysis::of_matrix(&g, &ParamRange::positive()).unwrap();
    for xi in [q(1, 10), q(1, 3), q(3, 5), q(9, 10), q(21, 20), q(11, 10), q(2, 1), q(7, 1)] {
        let looked = norm_at(an.cells(), an.candidate_poly(), &xi).unwrap();
        let full = linf_norm(&g.specialize(&xi).unwrap(), 10).unwrap();
        assert_eq!(looked.compare(full.value()), Ordering::Equal, "xi = {xi}");
    }
    let c = an.norm_at(&q(1, 10), 10).unwrap();
    assert!(c.decimal().starts_with("3.57"), "{}", c.decimal());
    let c = an.norm_at(&q(1, 100000), 10).unwrap();
    assert!(c.decimal().starts_with("35355.33"), "{}", c.decimal());
    // on a boundary the full algorithm is used
    let c = an.norm_at(&q(1, 2), 10).unwrap();
    let full = linf_norm(&g.specialize(&q(1, 2)).unwrap(), 10).unwrap();
    assert_eq!(c.value(), full.value());
    assert!(norm_at(an.cells(), an.candidate_poly(), &q(1, 1)).is_err());
    assert!(an.norm_at(&q(-1, 1), 10).is_err());
}

#[test]
fn shrinking_the_range_keeps_indices() {
    let g = damping();
    let range = ParamRange::new(Some(q(3, 4)), Some(q(3, 2))).unwrap();
    let an = ParamAnalysis::of_matrix(&g, &range).unwrap();
    let idx: Vec<usize> = an.cells().iter().map(|c| c.root_index()).collect();
    assert_eq!(idx, vec![3, 4, 5]);
    assert_eq!(an.boundaries().len(), 2);
}
