//! Numerator of `det(g^2 I - G(-s)^T G(s))` on the imaginary axis, generic
//! over the coefficient ring of the entries.

use crate::error::{Error, Result};
use crate::linalg::bareiss_det;
use crate::poly::{Dense, GcdRing, Ring};

/// `n` with outer variable `g` and inner `w`, and the matching denominator
/// `d(w)`, so that `det Phi_g(i w) = n(w, g) / d(w)` with `n`, `d` coprime.
pub(crate) struct PhiNumerator<K> {
    pub n: Dense<Dense<K>>,
    pub d: Dense<K>,
}

fn lcm<K: GcdRing>(a: &Dense<K>, b: &Dense<K>) -> Dense<K> {
    let g = a.gcd_poly(b);
    a.times(&b.div_exact(&g).expect("gcd divides")).normalized()
}

/// Even polynomial `p(s)` rewritten as `p(i w)`.
fn on_imaginary_axis<K: Ring>(p: &Dense<K>) -> Option<Dense<K>> {
    if !p.is_even() {
        return None;
    }
    Some(Dense::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 4 == 2 { c.negate() } else { c.clone() })
            .collect(),
    ))
}

/// `entries` is row-major `rows x cols`, each `(num, den)` over `K[s]`.
pub(crate) fn phi_numerator<K: GcdRing>(
    rows: usize,
    cols: usize,
    entries: &[(Dense<K>, Dense<K>)],
) -> Result<PhiNumerator<K>> {
    let at = |k: usize, j: usize| &entries[k * cols + j];
    // G = N C^-1 with C = diag(c_j), c_j the lcm of column j's denominators
    let c: Vec<Dense<K>> = (0..cols)
        .map(|j| (0..rows).fold(Dense::constant(K::one()), |acc, k| lcm(&acc, &at(k, j).1)))
        .collect();
    let n: Vec<Vec<Dense<K>>> = (0..rows)
        .map(|k| {
            (0..cols)
                .map(|j| {
                    let (num, den) = at(k, j);
                    num.times(&c[j].div_exact(den).expect("denominator divides the lcm"))
                })
                .collect()
        })
        .collect();
    let n_ref: Vec<Vec<Dense<K>>> = n.iter().map(|r| r.iter().map(Dense::reflect).collect()).collect();
    // P = g^2 C(-s) C(s) - N(-s)^T N(s), entries in K[s][g]
    let p: Vec<Vec<Dense<Dense<K>>>> = (0..cols)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    let mut gram = Dense::zero();
                    for k in 0..rows {
                        gram = gram.plus(&n_ref[k][i].times(&n[k][j]));
                    }
                    let mut coeffs = vec![gram.negate()];
                    if i == j {
                        coeffs.push(Dense::zero());
                        coeffs.push(c[j].reflect().times(&c[j]));
                    }
                    Dense::new(coeffs)
                })
                .collect()
        })
        .collect();
    let det = bareiss_det(p);
    if det.is_zero_poly() {
        return Err(Error::Degenerate(
            "det(g^2 I - G~ G) vanishes identically".into(),
        ));
    }
    let d_total = c
        .iter()
        .fold(Dense::constant(K::one()), |acc, cj| acc.times(&cj.reflect().times(cj)));
    // the content of det divides its leading coefficient in g, which is d_total
    let g = det.content().gcd_poly(&d_total);
    let det = det.div_exact_scalar(&g).ok_or_else(|| Error::internal("content division"))?;
    let d = d_total.div_exact(&g).ok_or_else(|| Error::internal("denominator division"))?;
    let n = Dense::new(
        det.coeffs()
            .iter()
            .map(|x| on_imaginary_axis(x))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::internal("det Phi is not even in s"))?,
    );
    let d = on_imaginary_axis(&d).ok_or_else(|| Error::internal("denominator is not even in s"))?;
    Ok(PhiNumerator { n: n.primitive(), d: d.normalized() })
}
