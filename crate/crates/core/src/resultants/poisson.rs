//! Numeric verification of the product formula for a pair of binary forms:
//! the resultant equals the leading-slice resultant raised to the other
//! form's degree, times the product of the distinguished dehomogenized form
//! over the affine zero set of the other.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::resultants::numeric::{det_complex, polynomial_roots};
use crate::resultants::sylvester::sylvester_matrix;

/// Check the product formula on one pair of binary forms and return the
/// relative error between the two sides.
///
/// `f0` and `f1` are ascending coefficient vectors of the dehomogenized
/// forms (index = power of the second variable); the declared degrees are
/// the vector lengths minus one. The leading coefficient of `f1` must be
/// nonzero (the formula's hypothesis); instances where `f1` has nearly
/// repeated roots are rejected so the caller can redraw.
pub fn poisson_check_binary(f0: &[f64], f1: &[f64]) -> Result<f64> {
    if f0.is_empty() || f1.is_empty() {
        return Err(Error::InvalidParam("forms must have coefficients".into()));
    }
    let d0 = f0.len() - 1;
    let d1 = f1.len() - 1;
    if f1[d1] == 0.0 {
        return Err(Error::InvalidParam(
            "the second form's pure power coefficient vanishes; the formula's hypothesis fails"
                .into(),
        ));
    }
    if d0 == 0 && d1 == 0 {
        return Err(Error::InvalidParam("both forms are constants".into()));
    }

    let cf0: Vec<Complex64> = f0.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    let cf1: Vec<Complex64> = f1.iter().map(|&x| Complex64::new(x, 0.0)).collect();

    // Left side: the Sylvester determinant, rows ordered so that the
    // identity det = lc(f1)^(d0) * prod over roots of f1 of f0 is
    // sign-exact.
    let lhs = det_complex(sylvester_matrix(&cf1, &cf0));

    // Right side: root-finding on f1 and a direct product.
    let roots = polynomial_roots(&cf1);
    let mut min_sep = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            min_sep = min_sep.min((roots[i] - roots[j]).norm());
        }
    }
    if min_sep < 1e-6 {
        return Err(Error::RepeatedRoots { min_sep });
    }
    let mut rhs = Complex64::new(f1[d1], 0.0).powu(d0 as u32);
    for r in &roots {
        let mut val = Complex64::new(0.0, 0.0);
        for c in cf0.iter().rev() {
            val = val * r + c;
        }
        rhs *= val;
    }

    Ok((lhs - rhs).norm() / lhs.norm().max(1.0))
}

/// Draw one random integer-coefficient instance (degrees 2 and 3,
/// coefficients in [-5, 5]) and check it, redrawing until the hypothesis
/// holds and the roots are separated. Returns the relative error.
pub fn random_poisson_trial<R: Rng>(rng: &mut R) -> f64 {
    loop {
        let f0: Vec<f64> = (0..3).map(|_| rng.gen_range(-5..=5) as f64).collect();
        let f1: Vec<f64> = (0..4).map(|_| rng.gen_range(-5..=5) as f64).collect();
        match poisson_check_binary(&f0, &f1) {
            Ok(err) => return err,
            Err(Error::InvalidParam(_)) | Err(Error::RepeatedRoots { .. }) => continue,
            Err(e) => panic!("unexpected failure in a random trial: {e}"),
        }
    }
}
