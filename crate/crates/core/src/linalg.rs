//! Exact determinants via fraction-free Gaussian elimination.
//!
//! Rational matrices are scaled row-by-row to integer matrices first, so the
//! elimination itself stays in the integers (Bareiss), where every division
//! is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant of a square integer matrix by the Bareiss algorithm.
///
/// Consumes the matrix. Panics if the matrix is not square.
pub fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    for row in &m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
    }
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1i8;
    let mut prev_pivot = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (quot, rem) = num.div_rem(&prev_pivot);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[i][j] = quot;
            }
            m[i][k] = BigInt::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Determinant of a square rational matrix, exactly.
///
/// Each row is multiplied by the least common multiple of its denominators;
/// the integer determinant is then divided by the product of the scalings.
pub fn det_rational(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut scaled: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut scale = BigInt::one();
    for row in m {
        assert_eq!(row.len(), n, "determinant of a non-square matrix");
        let mut lcm = BigInt::one();
        for x in row {
            lcm = lcm.lcm(x.denom());
        }
        scaled.push(row.iter().map(|x| (x * &lcm).to_integer()).collect());
        scale *= &lcm;
    }
    BigRational::new(det_bigint(scaled), scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_integer_determinants() {
        assert_eq!(det_bigint(int_matrix(&[&[5]])), BigInt::from(5));
        assert_eq!(
            det_bigint(int_matrix(&[&[1, 2], &[3, 4]])),
            BigInt::from(-2)
        );
        assert_eq!(
            det_bigint(int_matrix(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 4]])),
            BigInt::from(18)
        );
        assert_eq!(det_bigint(Vec::new()), BigInt::one());
    }

    #[test]
    fn singular_matrix_gives_zero() {
        assert_eq!(
            det_bigint(int_matrix(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]])),
            BigInt::zero()
        );
    }

    #[test]
    fn pivoting_handles_zero_leading_entry() {
        assert_eq!(
            det_bigint(int_matrix(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            det_bigint(int_matrix(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])),
            BigInt::from(-1)
        );
    }

    #[test]
    fn rational_determinant_matches_cofactor_expansion() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let one = BigRational::one();
        // | 1/2 1/3 |
        // | 1   1   | = 1/2 - 1/3 = 1/6.
        let m = vec![vec![half, third], vec![one.clone(), one]];
        assert_eq!(
            det_rational(&m),
            BigRational::new(BigInt::from(1), BigInt::from(6))
        );
    }

    #[test]
    fn vandermonde_determinant() {
        // det V(x_i) = prod_{i<j} (x_j - x_i) for x = 1, 2, 4: (2-1)(4-1)(4-2) = 6.
        let m = int_matrix(&[&[1, 1, 1], &[1, 2, 4], &[1, 4, 16]]);
        assert_eq!(det_bigint(m), BigInt::from(6));
    }
}
