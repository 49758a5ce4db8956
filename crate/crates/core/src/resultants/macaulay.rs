//! Macaulay resultants of N >= 3 homogeneous forms by the classical
//! two-determinant quotient, sampled at integer values of the eigenvalue
//! parameter and reconstructed by interpolation.
//!
//! In degree `d = sum (d_i - 1) + 1` every monomial is divisible by
//! `x_i^(d_i)` for at least one i; each monomial is assigned to its lowest
//! such i, and the row for it is the monomial multiple
//! `(x^a / x_i^(d_i)) F_i` expanded over all degree-d monomials. The
//! resultant is `det(M) / det(M')`, where the minor M' keeps the rows and
//! columns indexed by monomials divisible by `x_i^(d_i)` for at least two
//! distinct i. Sample points where the minor vanishes are skipped and
//! replaced, never perturbed.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::det_rational;
use crate::polynomial::{interpolate, MultiPoly};
use crate::walks::binomial;

use super::OracleResultant;

/// Cap on the number of degree-d monomials (matrix dimension).
pub const MACAULAY_DIMENSION_GUARD: u64 = 500;

/// All exponent vectors of total degree d in n variables, lexicographically
/// sorted (deterministic row/column order).
fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            let mut full = prefix.clone();
            full.push(d);
            out.push(full);
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            rec(n - 1, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::new(), &mut out);
    out
}

struct MacaulayStructure {
    monomials: Vec<Vec<u32>>,
    /// For each row monomial: (equation index, multiplier exponent).
    rows: Vec<(usize, Vec<u32>)>,
    /// Indices of monomials divisible by x_i^(d_i) for at least two i.
    non_reduced: Vec<usize>,
}

fn build_structure(system: &[MultiPoly], degrees: &[u32]) -> Result<MacaulayStructure> {
    let n = system.len();
    let d: u32 = degrees.iter().map(|&di| di - 1).sum::<u32>() + 1;
    let count = binomial(d as u64 + n as u64 - 1, n as u64 - 1);
    if count > MACAULAY_DIMENSION_GUARD.into() {
        return Err(Error::GuardExceeded {
            what: "Macaulay matrix dimension",
            value: count.to_u128().unwrap_or(u128::MAX),
            limit: MACAULAY_DIMENSION_GUARD as u128,
        });
    }
    let monomials = monomials_of_degree(n, d);
    let mut rows = Vec::with_capacity(monomials.len());
    let mut non_reduced = Vec::new();
    for (idx, mono) in monomials.iter().enumerate() {
        let mut divisible = mono
            .iter()
            .zip(degrees)
            .enumerate()
            .filter(|(_, (&e, &di))| e >= di)
            .map(|(i, _)| i);
        let class = divisible.next().ok_or_else(|| {
            Error::InvalidData(format!(
                "degree-{d} monomial {mono:?} divisible by no x_i^(d_i); \
                 the system degrees are inconsistent"
            ))
        })?;
        if divisible.next().is_some() {
            non_reduced.push(idx);
        }
        let mut multiplier = mono.clone();
        multiplier[class] -= degrees[class];
        rows.push((class, multiplier));
    }
    Ok(MacaulayStructure {
        monomials,
        rows,
        non_reduced,
    })
}

/// Evaluate the Macaulay matrix at a fixed parameter value and return
/// (det M, det M').
fn determinant_pair(
    structure: &MacaulayStructure,
    system_at: &[BTreeMap<Vec<u32>, BigRational>],
) -> (BigRational, BigRational) {
    let size = structure.monomials.len();
    let col_index: BTreeMap<&Vec<u32>, usize> = structure
        .monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let mut matrix = vec![vec![BigRational::zero(); size]; size];
    for (r, (class, multiplier)) in structure.rows.iter().enumerate() {
        for (exps, coeff) in &system_at[*class] {
            let shifted: Vec<u32> = exps.iter().zip(multiplier).map(|(a, b)| a + b).collect();
            let c = col_index[&shifted];
            matrix[r][c] = coeff.clone();
        }
    }
    let minor: Vec<Vec<BigRational>> = structure
        .non_reduced
        .iter()
        .map(|&r| {
            structure
                .non_reduced
                .iter()
                .map(|&c| matrix[r][c].clone())
                .collect()
        })
        .collect();
    let det_minor = det_rational(&minor);
    let det_full = det_rational(&matrix);
    (det_full, det_minor)
}

fn validate_system(system: &[MultiPoly]) -> Result<Vec<u32>> {
    let n = system.len();
    if n < 3 {
        return Err(Error::InvalidParam(format!(
            "the Macaulay construction needs at least 3 equations, got {n}"
        )));
    }
    let mut degrees = Vec::with_capacity(n);
    for (i, f) in system.iter().enumerate() {
        if f.num_vars() != n {
            return Err(Error::InvalidParam(format!(
                "equation {i} has {} variables, expected {n}",
                f.num_vars()
            )));
        }
        let deg = f.homogeneous_degree().ok_or_else(|| {
            Error::InvalidParam(format!("equation {i} is not homogeneous"))
        })?;
        if deg == 0 {
            return Err(Error::InvalidParam(format!("equation {i} is constant")));
        }
        degrees.push(deg);
    }
    Ok(degrees)
}

/// Exact Macaulay resultant in the eigenvalue parameter, monic-normalized.
pub fn macaulay_resultant(system: &[MultiPoly]) -> Result<OracleResultant> {
    macaulay_resultant_from(system, 0)
}

/// As [`macaulay_resultant`], with integer sampling starting at `start`.
pub fn macaulay_resultant_from(system: &[MultiPoly], start: i64) -> Result<OracleResultant> {
    let degrees = validate_system(system)?;
    let structure = build_structure(system, &degrees)?;

    // det M has parameter degree at most the sum of the row degrees; that
    // also bounds the quotient.
    let bound: usize = structure
        .rows
        .iter()
        .map(|(class, _)| system[*class].lambda_degree())
        .sum();
    let needed = bound + 1;
    let max_attempts = needed + 64;

    let mut points: Vec<(BigRational, BigRational)> = Vec::with_capacity(needed);
    let mut extra: Option<(BigRational, BigRational)> = None;
    for k in 0..max_attempts as i64 {
        if points.len() > needed {
            break;
        }
        let t = BigRational::from_integer(BigInt::from(start + k));
        let system_at: Vec<_> = system.iter().map(|f| f.eval_lambda(&t)).collect();
        let (det_full, det_minor) = determinant_pair(&structure, &system_at);
        if det_minor.is_zero() {
            continue;
        }
        let value = det_full / det_minor;
        if points.len() < needed {
            points.push((t, value));
        } else {
            extra = Some((t, value));
        }
    }
    if points.len() < needed {
        return Err(Error::InsufficientSamples {
            needed,
            got: points.len(),
        });
    }
    let result = interpolate(&points)?;
    // The verification sample catches a wrong degree bound or a skipped
    // pathological point.
    match extra {
        Some((t, v)) => {
            if result.eval(&t) != v {
                return Err(Error::InvalidData(
                    "interpolated Macaulay quotient fails at a verification sample".into(),
                ));
            }
        }
        None => {
            return Err(Error::InsufficientSamples {
                needed: needed + 1,
                got: needed,
            })
        }
    }

    match result.monic() {
        Some((monic, leading)) => Ok(OracleResultant { monic, leading }),
        None => Err(Error::ZeroResultant),
    }
}

/// Single-sample Macaulay quotient `det M(t) / det M'(t)`; errors where the
/// minor vanishes. Used to spot-check systems whose full interpolation is
/// out of desk range.
pub fn macaulay_point_quotient(system: &[MultiPoly], t: &BigRational) -> Result<BigRational> {
    let degrees = validate_system(system)?;
    let structure = build_structure(system, &degrees)?;
    let system_at: Vec<_> = system.iter().map(|f| f.eval_lambda(t)).collect();
    let (det_full, det_minor) = determinant_pair(&structure, &system_at);
    if det_minor.is_zero() {
        return Err(Error::InvalidParam(format!(
            "the Macaulay minor vanishes at t = {t}; pick another sample"
        )));
    }
    Ok(det_full / det_minor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::RatPoly;
    use crate::resultants::{Hypergraph, Hypermatrix};

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 4).len(), 15);
        assert_eq!(monomials_of_degree(5, 6).len(), 210);
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
    }

    #[test]
    fn zero_hypermatrix_has_pure_power_resultant() {
        // All equations are lambda x_i^2, so the quotient is lambda^12 for
        // N = 3, m = 3. The minor vanishes at t = 0; the sampler must skip.
        let a = Hypermatrix::zero(3, 3).unwrap();
        let res = macaulay_resultant(&a.eigen_system()).unwrap();
        let mut expect = vec![0i64; 13];
        expect[12] = 1;
        assert_eq!(res.monic, RatPoly::from_i64(&expect));
    }

    #[test]
    fn single_seed_sunflower_charpoly() {
        let s = Hypergraph::sunflower(1, 1, 3).unwrap();
        let a = s.adjacency_hypermatrix().unwrap();
        let res = macaulay_resultant(&a.eigen_system()).unwrap();
        // lambda^3 (lambda^3 - 1)^3 expanded.
        assert_eq!(
            res.monic,
            RatPoly::from_i64(&[0, 0, 0, -1, 0, 0, 3, 0, 0, -3, 0, 0, 1])
        );
    }

    #[test]
    fn linear_case_matches_matrix_determinant() {
        // m = 2 reduces to det(lambda I - J); for N = 3 that is
        // lambda^2 (lambda - 3).
        let a = Hypermatrix::all_ones(3, 2).unwrap();
        let res = macaulay_resultant(&a.eigen_system()).unwrap();
        assert_eq!(res.monic, RatPoly::from_i64(&[0, 0, -3, 1]));
    }

    #[test]
    fn sample_shift_invariance() {
        let a = Hypermatrix::all_ones(3, 3).unwrap();
        let r0 = macaulay_resultant_from(&a.eigen_system(), 0).unwrap();
        let r1 = macaulay_resultant_from(&a.eigen_system(), 1).unwrap();
        assert_eq!(r0, r1);
    }

    #[test]
    fn rejects_binary_systems() {
        let a = Hypermatrix::all_ones(2, 3).unwrap();
        assert!(macaulay_resultant(&a.eigen_system()).is_err());
    }

    #[test]
    fn point_quotient_matches_full_polynomial() {
        let a = Hypermatrix::all_ones(3, 3).unwrap();
        let sys = a.eigen_system();
        let full = macaulay_resultant(&sys).unwrap();
        let t = BigRational::from_integer(BigInt::from(5));
        let q = macaulay_point_quotient(&sys, &t).unwrap();
        assert_eq!(q, full.monic.eval(&t) * full.leading);
    }
}
