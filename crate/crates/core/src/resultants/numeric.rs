//! Floating-point helpers for the numeric product-formula check: polynomial
//! root finding (Durand-Kerner) and complex determinants.

use num_complex::Complex64;

/// All complex roots of a polynomial given by ascending coefficients with a
/// nonzero leading coefficient, by simultaneous Durand-Kerner iteration.
///
/// Deterministic: fixed starting configuration, fixed iteration cap.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let degree = coeffs.len() - 1;
    assert!(
        coeffs[degree].norm() > 0.0,
        "leading coefficient must be nonzero"
    );
    if degree == 0 {
        return Vec::new();
    }
    // Monic normalization.
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / coeffs[degree]).collect();
    if degree == 1 {
        return vec![-monic[0]];
    }

    let radius = 1.0 + monic.iter().take(degree).map(|c| c.norm()).fold(0.0, f64::max);
    let mut roots: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / degree as f64;
            Complex64::from_polar(radius, angle)
        })
        .collect();

    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };

    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for k in 0..degree {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..degree {
                if j != k {
                    denom *= roots[k] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                // Coincident iterates: nudge deterministically.
                roots[k] += Complex64::new(1e-6, 1e-6);
                max_step = f64::MAX;
                continue;
            }
            let step = eval(roots[k]) / denom;
            roots[k] -= step;
            max_step = max_step.max(step.norm() / (1.0 + roots[k].norm()));
        }
        if max_step < 1e-14 {
            break;
        }
    }
    roots
}

/// Determinant of a square complex matrix by LU elimination with partial
/// pivoting. Consumes the matrix.
pub fn det_complex(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let pivot_row = (k..n)
            .max_by(|&a, &b| {
                m[a][k]
                    .norm()
                    .partial_cmp(&m[b][k].norm())
                    .expect("norms are not NaN")
            })
            .expect("range is nonempty");
        if m[pivot_row][k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot_row != k {
            m.swap(k, pivot_row);
            det = -det;
        }
        det *= m[k][k];
        for i in k + 1..n {
            let factor = m[i][k] / m[k][k];
            for j in k..n {
                let delta = factor * m[k][j];
                m[i][j] -= delta;
            }
        }
    }
    det
}
