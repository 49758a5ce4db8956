//! Sylvester resultants of binary forms with polynomial coefficients in the
//! eigenvalue parameter, by evaluation at integer samples and Lagrange
//! interpolation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::det_rational;
use crate::polynomial::{interpolate, MultiPoly, RatPoly};

use super::OracleResultant;

/// Sylvester matrix of two coefficient vectors (ascending degree, declared
/// degrees = length - 1). The first `deg(b)` rows carry `a`, so the
/// determinant equals `lc(a)^(deg b) * prod over roots of a of b`.
pub(super) fn sylvester_matrix<T: Clone + Zero>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    let da = a.len() - 1;
    let db = b.len() - 1;
    let size = da + db;
    let mut m = vec![vec![T::zero(); size]; size];
    for r in 0..db {
        for (j, c) in a.iter().rev().enumerate() {
            m[r][r + j] = c.clone();
        }
    }
    for r in 0..da {
        for (j, c) in b.iter().rev().enumerate() {
            m[db + r][r + j] = c.clone();
        }
    }
    m
}

/// Exact resultant in the eigenvalue parameter of two binary forms whose
/// coefficients are rational polynomials in that parameter. Returns the
/// monic normalization and the discarded leading coefficient; a resultant
/// that is identically zero is reported as a degenerate system.
pub fn sylvester_resultant(p: &MultiPoly, q: &MultiPoly) -> Result<OracleResultant> {
    sylvester_resultant_from(p, q, 0)
}

/// As [`sylvester_resultant`], with the integer sample points starting at
/// `start` (the result must not depend on the choice).
pub fn sylvester_resultant_from(p: &MultiPoly, q: &MultiPoly, start: i64) -> Result<OracleResultant> {
    let a = p.binary_coeff_vector()?;
    let b = q.binary_coeff_vector()?;
    let da = a.len() - 1;
    let db = b.len() - 1;
    if da == 0 && db == 0 {
        return Err(Error::InvalidParam(
            "both forms are constant; the resultant is trivial".into(),
        ));
    }
    let lambda_bound = db * max_lambda_degree(&a) + da * max_lambda_degree(&b);

    let eval_at = |t: &BigRational| -> BigRational {
        let av: Vec<BigRational> = a.iter().map(|c| c.eval(t)).collect();
        let bv: Vec<BigRational> = b.iter().map(|c| c.eval(t)).collect();
        det_rational(&sylvester_matrix(&av, &bv))
    };

    let mut points = Vec::with_capacity(lambda_bound + 1);
    for k in 0..=lambda_bound as i64 {
        let t = BigRational::from_integer(BigInt::from(start + k));
        let v = eval_at(&t);
        points.push((t, v));
    }
    let result = interpolate(&points)?;

    // One extra sample guards the degree bound and the interpolation.
    let extra = BigRational::from_integer(BigInt::from(start + lambda_bound as i64 + 1));
    if result.eval(&extra) != eval_at(&extra) {
        return Err(Error::InvalidData(
            "interpolated resultant fails at a verification sample".into(),
        ));
    }

    match result.monic() {
        Some((monic, leading)) => Ok(OracleResultant { monic, leading }),
        None => Err(Error::ZeroResultant),
    }
}

fn max_lambda_degree(coeffs: &[RatPoly]) -> usize {
    coeffs.iter().filter_map(|c| c.degree()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resultants::Hypermatrix;
    use num_traits::One;

    #[test]
    fn all_ones_2_3_gives_golden_quartic() {
        let a = Hypermatrix::all_ones(2, 3).unwrap();
        let sys = a.eigen_system();
        let res = sylvester_resultant(&sys[0], &sys[1]).unwrap();
        // lambda^4 - 4 lambda^3, the monic form of lambda^3 (lambda - 4).
        assert_eq!(res.monic, RatPoly::from_i64(&[0, 0, 0, -4, 1]));
    }

    #[test]
    fn all_ones_2_2_is_the_matrix_characteristic_polynomial() {
        let a = Hypermatrix::all_ones(2, 2).unwrap();
        let sys = a.eigen_system();
        let res = sylvester_resultant(&sys[0], &sys[1]).unwrap();
        assert_eq!(res.monic, RatPoly::from_i64(&[0, -2, 1]));
    }

    #[test]
    fn coprime_monomials_have_unit_resultant() {
        // p = x0^2, q = x1^2 (no lambda at all).
        let mut p = MultiPoly::new(2);
        p.add_term(vec![2, 0], RatPoly::from_i64(&[1]));
        let mut q = MultiPoly::new(2);
        q.add_term(vec![0, 2], RatPoly::from_i64(&[1]));
        let res = sylvester_resultant(&p, &q).unwrap();
        assert_eq!(res.monic, RatPoly::from_i64(&[1]));
        assert_eq!(res.leading, BigRational::one());
    }

    #[test]
    fn shared_factor_reports_zero_resultant() {
        // p = x0 (x0 + x1), q = x0 x1 share the line x0 = 0.
        let mut p = MultiPoly::new(2);
        p.add_term(vec![2, 0], RatPoly::from_i64(&[1]));
        p.add_term(vec![1, 1], RatPoly::from_i64(&[1]));
        let mut q = MultiPoly::new(2);
        q.add_term(vec![1, 1], RatPoly::from_i64(&[1]));
        assert!(matches!(
            sylvester_resultant(&p, &q),
            Err(Error::ZeroResultant)
        ));
    }

    #[test]
    fn sample_shift_does_not_change_the_result() {
        let a = Hypermatrix::all_ones(2, 4).unwrap();
        let sys = a.eigen_system();
        let r0 = sylvester_resultant_from(&sys[0], &sys[1], 0).unwrap();
        let r1 = sylvester_resultant_from(&sys[0], &sys[1], 1).unwrap();
        assert_eq!(r0, r1);
    }
}
