//! Small dense determinants.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use crate::scalar::{ComplexScalar, Scalar};

/// Determinant by Gaussian elimination with largest-modulus pivoting.
///
/// Exact in exact mode; the pivot choice only matters for floats.
pub fn determinant<S: Scalar>(mut m: Vec<Vec<ComplexScalar<S>>>) -> ComplexScalar<S> {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut det = ComplexScalar::<S>::one();
    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .max_by(|&a, &b| {
                let ma = m[a][col].norm_sqr().to_f64();
                let mb = m[b][col].norm_sqr().to_f64();
                ma.total_cmp(&mb)
            });
        let Some(p) = pivot else {
            return ComplexScalar::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let piv = m[col][col].clone();
        det = det * &piv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &piv;
            let (top, bottom) = m.split_at_mut(r);
            for (x, p) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x = &*x - &factor * p;
            }
        }
    }
    det
}

/// 3×3 determinant by cofactor expansion along the first row.
///
/// Works over any commutative ring, including symbolic polynomials.
pub fn det3_cofactor<T>(m: &[[T; 3]; 3]) -> T
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    let minor = |r0: usize, c0: usize, r1: usize, c1: usize| -> T {
        &(&m[r0][c0] * &m[r1][c1]) - &(&m[r0][c1] * &m[r1][c0])
    };
    let t0 = &m[0][0] * &minor(1, 1, 2, 2);
    let t1 = &m[0][1] * &minor(1, 0, 2, 2);
    let t2 = &m[0][2] * &minor(1, 0, 2, 1);
    &(&t0 - &t1) + &t2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, real, ExactScalar};

    fn ex(rows: &[&[i64]]) -> Vec<Vec<ComplexScalar<ExactScalar>>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| real(rat(x, 1))).collect())
            .collect()
    }

    #[test]
    fn elimination_matches_cofactor() {
        let m = ex(&[&[2, -1, 3], &[0, 4, 5], &[1, 1, -2]]);
        let arr = [
            [m[0][0].clone(), m[0][1].clone(), m[0][2].clone()],
            [m[1][0].clone(), m[1][1].clone(), m[1][2].clone()],
            [m[2][0].clone(), m[2][1].clone(), m[2][2].clone()],
        ];
        // 2(-8-5) + 1(0-5) + 3(0-4) = -26 - 5 - 12
        assert_eq!(determinant(m), real(rat(-43, 1)));
        assert_eq!(det3_cofactor(&arr), real(rat(-43, 1)));
    }

    #[test]
    fn singular_and_permuted() {
        assert!(determinant(ex(&[&[1, 2], &[2, 4]])).is_zero());
        assert_eq!(determinant(ex(&[&[0, 1], &[1, 0]])), real(rat(-1, 1)));
        assert_eq!(determinant(ex(&[&[7]])), real(rat(7, 1)));
    }
}
