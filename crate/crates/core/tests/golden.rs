use std::time::Instant;

use linf_core::norm::{linf_norm, Provenance};
use linf_core::poly::{UniPoly, Var};
use linf_core::transfer::{RationalFunction, TransferMatrix};
use linf_core::BigRational;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn s(c: &[BigRational]) -> UniPoly {
    UniPoly::new(Var::s(), c.to_vec())
}

fn si(c: &[i64]) -> UniPoly {
    UniPoly::from_ints(Var::s(), c)
}

fn rf(n: &UniPoly, d: &UniPoly) -> RationalFunction {
    RationalFunction::new(n, d).unwrap()
}

fn zhou_doyle() -> TransferMatrix {
    TransferMatrix::from_rows(vec![
        vec![
            rf(&si(&[10, 10]), &s(&[q(100, 1), q(1, 5), q(1, 1)])),
            rf(&si(&[1]), &si(&[1, 1])),
        ],
        vec![
            rf(&si(&[2, 1]), &s(&[q(10, 1), q(1, 10), q(1, 1)])),
            rf(&si(&[5, 5]), &(&si(&[2, 1]) * &si(&[3, 1]))),
        ],
    ])
    .unwrap()
}

fn damping(xi: BigRational) -> TransferMatrix {
    let two_xi = xi * q(2, 1);
    let quad = s(&[q(1, 1), two_xi, q(1, 1)]);
    TransferMatrix::scalar(rf(&si(&[1]), &(&quad * &si(&[1, 1]))))
}

#[test]
fn zhou_doyle_norm() {
    let t = Instant::now();
    let cert = linf_norm(&zhou_doyle(), 10).unwrap();
    eprintln!("zhou-doyle {} in {:?} {:?}", cert.decimal(), t.elapsed(), cert.timings());
    assert_eq!(cert.decimal_with(4), "50.25");
    assert_eq!(cert.provenance(), Provenance::CriticalPoint);
}

#[test]
fn ill_conditioned_norm() {
    let t = Instant::now();
    let d = &s(&[q(-1, 10_000_000), q(0, 1), q(1, 1)]) * &si(&[-10_000_000, 0, 1]);
    let g = TransferMatrix::scalar(rf(&si(&[0, 0, 1]), &d));
    let cert = linf_norm(&g, 10).unwrap();
    eprintln!("ill {} in {:?}", cert.decimal(), t.elapsed());
    assert_eq!(cert.decimal(), "9.999998000e-8");
}

#[test]
fn damping_law() {
    let printed = [3.57, 35.36, 353.55, 3535.53, 35355.34];
    // independent oracle: 40-digit root of d|den(iw)|^2/dw near w = 1, then |G|
    let oracle = [3.575787201175268, 35.35931700735801, 353.5537883413105, 3535.533945707495, 35355.33906330485];
    for (k, (p, o)) in printed.iter().zip(oracle).enumerate() {
        let xi = BigRational::new(1.into(), num_traits::pow(linf_core::BigInt::from(10), k + 1));
        let cert = linf_norm(&damping(xi), 10).unwrap();
        let v = cert.value().to_f64();
        assert!(((v - p) / p).abs() < 5e-3, "{v} vs printed {p}");
        assert!(((v - o) / o).abs() < 1e-9, "{v} vs oracle {o}");
    }
}

#[test]
fn tiny_damping_completes() {
    let t = Instant::now();
    let xi = BigRational::new(1.into(), num_traits::pow(linf_core::BigInt::from(10), 100));
    let cert = linf_norm(&damping(xi), 10).unwrap();
    eprintln!("xi=1e-100 {} in {:?}", cert.decimal(), t.elapsed());
    assert!(cert.decimal().ends_with("e99"));
}

#[test]
fn sweep_on_golden_systems() {
    use linf_core::numeric::{sweep_norm, GridSpec};
    let zd = zhou_doyle();
    let sparse = sweep_norm(&zd, &GridSpec::log(1e-2, 1e3, 100), false).unwrap();
    let dense = sweep_norm(&zd, &GridSpec::default(), true).unwrap();
    eprintln!("zhou-doyle sweep sparse {} dense {}", sparse.estimate, dense.estimate);
    assert!(sparse.estimate < 50.0);
    assert!((dense.estimate - 50.25).abs() < 1e-3);
    let exact = 50.24960386;
    assert!(dense.estimate <= exact * (1.0 + 1e-6) && dense.estimate >= exact * (1.0 - 1e-4));
    let d = &s(&[q(-1, 10_000_000), q(0, 1), q(1, 1)]) * &si(&[-10_000_000, 0, 1]);
    let ill = sweep_norm(&TransferMatrix::scalar(rf(&si(&[0, 0, 1]), &d)), &GridSpec::default(), false).unwrap();
    eprintln!("ill-conditioned sweep {:e} at {}", ill.estimate, ill.argmax_omega);
}
