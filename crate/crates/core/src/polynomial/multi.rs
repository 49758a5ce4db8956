//! Sparse multivariate polynomials whose coefficients are exact univariate
//! polynomials in a distinguished parameter (written `lambda` throughout).
//!
//! This is the shape of an eigenvalue system: each equation is homogeneous
//! in the vector variables and linear (or constant) in lambda. Exponent
//! vectors are kept in a sorted map so iteration order, and therefore every
//! downstream computation, is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_rational::BigRational;

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::polynomial::RatPoly;

/// Multivariate polynomial: a map from exponent vectors to coefficient
/// polynomials in lambda. Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct MultiPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, RatPoly>,
}

impl MultiPoly {
    pub fn new(num_vars: usize) -> Self {
        MultiPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    /// Add `coeff * x^exps` into the polynomial.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: RatPoly) {
        assert_eq!(
            exps.len(),
            self.num_vars,
            "exponent vector length must equal the variable count"
        );
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    o.insert(sum);
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &RatPoly)> {
        self.terms.iter()
    }

    /// Largest total degree over the stored terms, `None` if zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// If every term has the same total degree, that degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Largest degree in lambda over all coefficients.
    pub fn lambda_degree(&self) -> usize {
        self.terms
            .values()
            .filter_map(|p| p.degree())
            .max()
            .unwrap_or(0)
    }

    /// Multiply by the monomial `x^shift`.
    pub fn mul_monomial(&self, shift: &[u32]) -> Self {
        assert_eq!(shift.len(), self.num_vars);
        let mut out = MultiPoly::new(self.num_vars);
        for (exps, coeff) in &self.terms {
            let shifted: Vec<u32> = exps.iter().zip(shift).map(|(a, b)| a + b).collect();
            out.terms.insert(shifted, coeff.clone());
        }
        out
    }

    /// Substitute the constant `value` (0 or 1) for variable `k` and drop
    /// that variable from the exponent vectors.
    ///
    /// Substituting 0 keeps only the terms free of the variable;
    /// substituting 1 merges terms that differ only in that exponent.
    pub fn substitute(&self, k: usize, value: u32) -> Result<Self> {
        if k >= self.num_vars {
            return Err(Error::InvalidParam(format!(
                "variable index {k} out of range for {} variables",
                self.num_vars
            )));
        }
        if value > 1 {
            return Err(Error::InvalidParam(
                "substitution value must be 0 or 1".into(),
            ));
        }
        let mut out = MultiPoly::new(self.num_vars - 1);
        for (exps, coeff) in &self.terms {
            if value == 0 && exps[k] > 0 {
                continue;
            }
            let mut reduced = exps.clone();
            reduced.remove(k);
            out.add_term(reduced, coeff.clone());
        }
        Ok(out)
    }

    /// Evaluate every coefficient polynomial at a fixed lambda, leaving a
    /// plain rational-coefficient monomial map (zero values dropped).
    pub fn eval_lambda(&self, lambda: &BigRational) -> BTreeMap<Vec<u32>, BigRational> {
        self.terms
            .iter()
            .filter_map(|(exps, coeff)| {
                let v = coeff.eval(lambda);
                if num_traits::Zero::is_zero(&v) {
                    None
                } else {
                    Some((exps.clone(), v))
                }
            })
            .collect()
    }

    /// Numeric evaluation at complex lambda and coordinates.
    pub fn eval_complex(&self, lambda: Complex64, xs: &[Complex64]) -> Complex64 {
        assert_eq!(xs.len(), self.num_vars);
        let mut acc = Complex64::new(0.0, 0.0);
        for (exps, coeff) in &self.terms {
            let mut term = coeff.eval_complex(lambda);
            for (x, &e) in xs.iter().zip(exps) {
                term *= x.powu(e);
            }
            acc += term;
        }
        acc
    }

    /// Exact evaluation at cyclotomic-integer lambda and coordinates.
    ///
    /// Requires every rational coefficient to be an integer (true for the
    /// eigen-systems built from integer hypermatrices); errors otherwise.
    pub fn eval_cyclotomic(&self, lambda: &CycInt, xs: &[CycInt]) -> Result<CycInt> {
        assert_eq!(xs.len(), self.num_vars);
        let q = lambda.order();
        let mut acc = CycInt::zero(q)?;
        for (exps, coeff) in &self.terms {
            let coeff_int = coeff.to_integer()?;
            let mut term = coeff_int.eval_map(lambda, |c| {
                CycInt::from_integer(q, c.clone()).expect("order already validated")
            });
            for (x, &e) in xs.iter().zip(exps) {
                term = &term * &x.pow(e as u64);
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Coefficient vector of a binary form, indexed by the exponent of the
    /// second variable. Errors unless the polynomial is homogeneous in two
    /// variables.
    pub fn binary_coeff_vector(&self) -> Result<Vec<RatPoly>> {
        if self.num_vars != 2 {
            return Err(Error::InvalidParam(format!(
                "expected a binary form, got {} variables",
                self.num_vars
            )));
        }
        let degree = self.homogeneous_degree().ok_or_else(|| {
            Error::InvalidParam("binary form must be homogeneous".into())
        })? as usize;
        let mut out = vec![RatPoly::zero(); degree + 1];
        for (exps, coeff) in &self.terms {
            out[exps[1] as usize] = coeff.clone();
        }
        Ok(out)
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "[{coeff:?}]")?;
            for (i, &e) in exps.iter().enumerate() {
                if e == 1 {
                    write!(f, "*x{i}")?;
                } else if e > 1 {
                    write!(f, "*x{i}^{e}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}
