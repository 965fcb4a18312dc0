//! Exact dense linear algebra over a [`Field`].

use crate::error::{Error, Result};
use crate::scalars::Field;

/// Row-major dense matrix.
pub type Matrix<F> = Vec<Vec<F>>;

/// Solves `A X = B` for square nonsingular `A` and any number of right-hand
/// sides (the columns of `B`).
///
/// Forward elimination is fraction-free (Bareiss), so over `Q[r]` every
/// intermediate entry stays a polynomial. The pivot in each column is the
/// nonzero entry of least [`Field::weight`].
pub fn solve<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Result<Matrix<F>> {
    let size = a.len();
    if a.iter().any(|row| row.len() != size) {
        return Err(Error::InvalidArgument("matrix must be square".into()));
    }
    if b.len() != size {
        return Err(Error::LengthMismatch {
            expected: size,
            found: b.len(),
        });
    }
    let width = b.first().map_or(0, Vec::len);
    let mut m: Matrix<F> = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb).cloned().collect())
        .collect();
    let cols = size + width;
    let mut prev = F::one();
    for k in 0..size {
        let pivot = (k..size)
            .filter(|&i| !m[i][k].is_zero())
            .min_by_key(|&i| m[i][k].weight())
            .ok_or(Error::Singular)?;
        m.swap(k, pivot);
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        for row in lower.iter_mut() {
            let factor = row[k].clone();
            for j in k + 1..cols {
                let v = pivot_row[k].clone() * &row[j];
                let v = if factor.is_zero() {
                    v
                } else {
                    v - factor.clone() * &pivot_row[j]
                };
                row[j] = v.exact_div(&prev);
            }
            row[k] = F::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x: Matrix<F> = vec![vec![F::zero(); width]; size];
    for c in 0..width {
        for i in (0..size).rev() {
            let mut acc = m[i][size + c].clone();
            for j in i + 1..size {
                if !m[i][j].is_zero() && !x[j][c].is_zero() {
                    acc -= &(m[i][j].clone() * &x[j][c]);
                }
            }
            x[i][c] = acc / &m[i][i];
        }
    }
    Ok(x)
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let inner = b.len();
    let width = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "dimension mismatch");
            (0..width)
                .map(|j| {
                    let mut acc = F::zero();
                    for (k, v) in row.iter().enumerate() {
                        if !v.is_zero() && !b[k][j].is_zero() {
                            acc += &(v.clone() * &b[k][j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn mat_sub<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x.clone() - y.clone()).collect())
        .collect()
}

pub fn is_zero_matrix<F: Field>(a: &Matrix<F>) -> bool {
    a.iter().all(|row| row.iter().all(F::is_zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Param, RatFunc, Rational};
    use num_traits::One;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn solves_small_system() {
        // 2x + y = 5, x - y = 1  gives  x = 2, y = 1
        let a = vec![vec![q(2), q(1)], vec![q(1), q(-1)]];
        let b = vec![vec![q(5)], vec![q(1)]];
        assert_eq!(solve(&a, &b).unwrap(), vec![vec![q(2)], vec![q(1)]]);
    }

    #[test]
    fn needs_row_swap() {
        let a = vec![vec![q(0), q(1)], vec![q(1), q(0)]];
        let b = vec![vec![q(3), q(1)], vec![q(4), q(0)]];
        assert_eq!(solve(&a, &b).unwrap(), vec![vec![q(4), q(0)], vec![q(3), q(1)]]);
    }

    #[test]
    fn singular_is_reported() {
        let a = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
        let b = vec![vec![q(1)], vec![q(2)]];
        assert_eq!(solve(&a, &b), Err(Error::Singular));
    }

    #[test]
    fn rational_function_entries() {
        // [[1, r], [r, 1]] x = [1, 1]  gives  x = (1/(1+r), 1/(1+r))
        let r = RatFunc::param(Param::R);
        let one = RatFunc::one();
        let a = vec![vec![one.clone(), r.clone()], vec![r.clone(), one.clone()]];
        let b = vec![vec![one.clone()], vec![one.clone()]];
        let x = solve(&a, &b).unwrap();
        let expected = one.clone() / (one.clone() + &r);
        assert_eq!(x, vec![vec![expected.clone()], vec![expected]]);
        let residual = mat_sub(&mat_mul(&a, &x), &b);
        assert!(is_zero_matrix(&residual));
    }
}
