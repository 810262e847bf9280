//! Fraction-free determinants over an integral domain.

use rayon::prelude::*;

use crate::poly::Ring;

/// Determinant by Bareiss elimination; every division is exact.
pub fn bareiss_det<R: Ring>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return R::zero();
            };
            m.swap(k, p);
            negate = !negate;
        }
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        let step = |row: &mut Vec<R>| {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = row[j].times(pivot).minus(&lead.times(&pivot_row[j]));
                row[j] = v
                    .div_exact(&prev)
                    .expect("Bareiss division is exact");
            }
            row[k] = R::zero();
        };
        if n - k > 6 {
            rest.par_iter_mut().for_each(step);
        } else {
            rest.iter_mut().for_each(step);
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.negate()
    } else {
        d
    }
}

/// Laplace expansion along the first row; an oracle for small matrices.
pub fn cofactor_det<R: Ring>(m: &[Vec<R>]) -> R {
    let n = m.len();
    match n {
        0 => R::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = R::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(j, _)| j != c)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][c].times(&cofactor_det(&minor));
                acc = if c % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Dense;
    use num_bigint::BigInt;
    use rand::{Rng as _, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn integer_determinants() {
        let m = vec![vec![z(2), z(0), z(1)], vec![z(1), z(3), z(2)], vec![z(1), z(1), z(2)]];
        assert_eq!(bareiss_det(m.clone()), z(6));
        assert_eq!(cofactor_det(&m), z(6));
        // zero pivot forces a row swap
        let m = vec![vec![z(0), z(1)], vec![z(1), z(0)]];
        assert_eq!(bareiss_det(m), z(-1));
        let singular = vec![vec![z(1), z(2)], vec![z(2), z(4)]];
        assert_eq!(bareiss_det(singular), z(0));
    }

    #[test]
    fn agrees_with_cofactor_on_random_polynomial_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..30 {
            let n = rng.gen_range(1..=4);
            let m: Vec<Vec<Dense<BigInt>>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let d = rng.gen_range(0..3);
                            Dense::new((0..=d).map(|_| z(rng.gen_range(-3..=3))).collect())
                        })
                        .collect()
                })
                .collect();
            assert_eq!(bareiss_det(m.clone()), cofactor_det(&m));
        }
    }
}
