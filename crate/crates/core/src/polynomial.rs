//! Exact dense univariate polynomials and sparse multivariate polynomials.
//!
//! Univariate polynomials are generic over a coefficient ring (`BigInt`,
//! `BigRational`, or [`CycInt`]); coefficients are stored densely by degree
//! with the leading coefficient nonzero (the zero polynomial is the empty
//! vector). Multivariate polynomials live in [`multi`].

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cyclotomic::CycInt;
use crate::error::{Error, Result};
use crate::serde_util::{bigint_to_number, number_to_bigint, RatJson};

pub mod multi;

pub use multi::MultiPoly;

/// Coefficient ring interface for [`Poly`].
///
/// `zero_like`/`one_like` produce identities compatible with an existing
/// element; cyclotomic integers need this because their additive identity
/// depends on the root order.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Coeff for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for BigRational {
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Coeff for CycInt {
    fn zero_like(&self) -> Self {
        CycInt::zero(self.order()).expect("order of an existing element is valid")
    }
    fn one_like(&self) -> Self {
        CycInt::one(self.order()).expect("order of an existing element is valid")
    }
    fn is_zero(&self) -> bool {
        CycInt::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Dense exact univariate polynomial; index = degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<C: Coeff> {
    coeffs: Vec<C>,
}

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = Poly<BigInt>;
/// Polynomial with exact rational coefficients.
pub type RatPoly = Poly<BigRational>;
/// Polynomial with cyclotomic-integer coefficients.
pub type CycPoly = Poly<CycInt>;

impl<C: Coeff> Poly<C> {
    /// Build from coefficients (index = degree), trimming trailing zeros.
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map(Coeff::is_zero).unwrap_or(false) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Option<&C> {
        self.coeffs.get(k)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out: Vec<C> = Vec::with_capacity(long.coeffs.len());
        for (i, c) in long.coeffs.iter().enumerate() {
            match short.coeffs.get(i) {
                Some(d) => out.push(c.add(d)),
                None => out.push(c.clone()),
            }
        }
        Self::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(Coeff::neg).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.mul(k)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let la = self.coeffs.len();
        let lb = rhs.coeffs.len();
        let mut out: Vec<C> = Vec::with_capacity(la + lb - 1);
        for k in 0..la + lb - 1 {
            let lo = k.saturating_sub(lb - 1);
            let hi = k.min(la - 1);
            let mut acc: Option<C> = None;
            for i in lo..=hi {
                let term = self.coeffs[i].mul(&rhs.coeffs[k - i]);
                acc = Some(match acc {
                    Some(a) => a.add(&term),
                    None => term,
                });
            }
            out.push(acc.expect("index range is nonempty"));
        }
        Self::new(out)
    }

    /// Multiply by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Raise to a natural power. `pow(0)` of a nonzero polynomial is 1;
    /// `pow(0)` of the zero polynomial panics (no coefficient to borrow an
    /// identity from).
    pub fn pow(&self, mut exp: u64) -> Self {
        if exp == 0 {
            let one = self
                .coeffs
                .first()
                .expect("0^0 is undefined for polynomials")
                .one_like();
            return Self::constant(one);
        }
        let mut base = self.clone();
        let mut acc: Option<Self> = None;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = Some(match acc {
                    Some(a) => a.mul(&base),
                    None => base.clone(),
                });
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc.expect("exp > 0")
    }

    /// Horner evaluation at a point of the coefficient ring.
    pub fn eval(&self, x: &C) -> C {
        self.eval_map(x, C::clone)
    }

    /// Horner evaluation after mapping coefficients into another ring.
    pub fn eval_map<D: Coeff>(&self, x: &D, embed: impl Fn(&C) -> D) -> D {
        let mut iter = self.coeffs.iter().rev();
        let mut acc = match iter.next() {
            Some(c) => embed(c),
            None => return x.zero_like(),
        };
        for c in iter {
            acc = acc.mul(x).add(&embed(c));
        }
        acc
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl IntPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> RatPoly {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Lift into the cyclotomic ring of order q.
    pub fn to_cyclotomic(&self, q: u32) -> Result<CycPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| CycInt::from_integer(q, c.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }
}

impl RatPoly {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// Project onto integer coefficients; errors if any denominator is not 1.
    pub fn to_integer(&self) -> Result<IntPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(Error::NonIntegerCoeff(c.to_string()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }

    /// Divide by the leading coefficient; `None` for the zero polynomial.
    pub fn monic(&self) -> Option<(RatPoly, BigRational)> {
        let lead = self.leading()?.clone();
        let inv = BigRational::one() / lead.clone();
        Some((self.scale(&inv), lead))
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }
}

impl CycPoly {
    /// Project onto integer coefficients; errors if any coefficient has a
    /// component outside the rational integers.
    pub fn to_integer(&self) -> Result<IntPoly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.to_integer()
                    .ok_or_else(|| Error::NonIntegerCoeff(c.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Lagrange interpolation through exact rational points.
///
/// The abscissae must be pairwise distinct; the result is the unique
/// polynomial of degree < points.len() through all of them.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> Result<RatPoly> {
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in points.iter().skip(i + 1) {
            if xi == xj {
                return Err(Error::DuplicateAbscissa(xi.to_string()));
            }
        }
    }
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if Zero::is_zero(yi) {
            continue;
        }
        // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j).
        let mut basis = RatPoly::constant(BigRational::one());
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if j == i {
                continue;
            }
            basis = basis.mul(&RatPoly::new(vec![-xj.clone(), BigRational::one()]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    Ok(acc)
}

/// The product of `p(u x)` over all q-th roots of unity `u`, computed by
/// direct substitution and multiplication in the order-r cyclotomic ring.
///
/// The result only has monomials whose degree is a multiple of r, and if
/// `p = a (x - b_1) ... (x - b_d)` it equals
/// `a^r (-1)^((r-1) d) (x^r - b_1^r) ... (x^r - b_d^r)`.
pub fn rou_product_transform_cyc(p: &CycPoly, r: u32) -> Result<CycPoly> {
    if r == 0 {
        return Err(Error::InvalidParam("transform order r must be positive".into()));
    }
    if let Some(c) = p.coeffs().first() {
        if c.order() != r {
            return Err(Error::DomainMismatch(format!(
                "coefficients have order {}, transform order is {r}",
                c.order()
            )));
        }
    }
    if p.is_zero() {
        return Ok(CycPoly::zero());
    }
    let mut acc = CycPoly::constant(CycInt::one(r)?);
    for j in 0..r {
        let substituted = CycPoly::new(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| c.rotate(((j as u64 * i as u64) % r as u64) as u32))
                .collect(),
        );
        acc = acc.mul(&substituted);
    }
    Ok(acc)
}

/// Integer-coefficient front end for [`rou_product_transform_cyc`]; the
/// product is fixed by every symmetry of the roots of unity, so the result
/// projects back onto the integers.
pub fn rou_product_transform(p: &IntPoly, r: u32) -> Result<IntPoly> {
    if r == 0 {
        return Err(Error::InvalidParam("transform order r must be positive".into()));
    }
    let lifted = p.to_cyclotomic(r)?;
    rou_product_transform_cyc(&lifted, r)?.to_integer()
}

/// A univariate exact polynomial together with its coefficient domain,
/// mirroring the wire schema
/// `{"domain": "int" | "rat" | {"cyc": q}, "coeffs": [...]}`.
#[derive(Clone, PartialEq)]
pub enum ExactPoly {
    Int(IntPoly),
    Rat(RatPoly),
    Cyc { q: u32, poly: CycPoly },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum DomainTag {
    Named(String),
    Cyc { cyc: u32 },
}

impl Serialize for ExactPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExactPoly", 2)?;
        match self {
            ExactPoly::Int(p) => {
                st.serialize_field("domain", "int")?;
                let coeffs: Vec<serde_json::Number> =
                    p.coeffs().iter().map(bigint_to_number).collect();
                st.serialize_field("coeffs", &coeffs)?;
            }
            ExactPoly::Rat(p) => {
                st.serialize_field("domain", "rat")?;
                let coeffs: Vec<RatJson> = p.coeffs().iter().map(RatJson::from_rational).collect();
                st.serialize_field("coeffs", &coeffs)?;
            }
            ExactPoly::Cyc { q, poly } => {
                st.serialize_field("domain", &DomainTag::Cyc { cyc: *q })?;
                st.serialize_field("coeffs", poly.coeffs())?;
            }
        }
        st.end()
    }
}

impl<'de> Deserialize<'de> for ExactPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            domain: DomainTag,
            coeffs: serde_json::Value,
        }
        let wire = Wire::deserialize(d)?;
        match wire.domain {
            DomainTag::Named(name) if name == "int" => {
                let nums: Vec<serde_json::Number> =
                    serde_json::from_value(wire.coeffs).map_err(D::Error::custom)?;
                let coeffs = nums
                    .iter()
                    .map(|n| number_to_bigint(n).map_err(D::Error::custom))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                Ok(ExactPoly::Int(Poly::new(coeffs)))
            }
            DomainTag::Named(name) if name == "rat" => {
                let rats: Vec<RatJson> =
                    serde_json::from_value(wire.coeffs).map_err(D::Error::custom)?;
                let coeffs = rats
                    .iter()
                    .map(|r| r.to_rational().map_err(D::Error::custom))
                    .collect::<std::result::Result<Vec<_>, _>>()?;
                Ok(ExactPoly::Rat(Poly::new(coeffs)))
            }
            DomainTag::Named(name) => Err(D::Error::custom(format!("unknown domain {name:?}"))),
            DomainTag::Cyc { cyc } => {
                let coeffs: Vec<CycInt> =
                    serde_json::from_value(wire.coeffs).map_err(D::Error::custom)?;
                for c in &coeffs {
                    if c.order() != cyc {
                        return Err(D::Error::custom(format!(
                            "coefficient order {} does not match domain cyc={cyc}",
                            c.order()
                        )));
                    }
                }
                Ok(ExactPoly::Cyc {
                    q: cyc,
                    poly: Poly::new(coeffs),
                })
            }
        }
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactPoly::Int(p) => write!(f, "{p:?}"),
            ExactPoly::Rat(p) => write!(f, "{p:?}"),
            ExactPoly::Cyc { q, poly } => write!(f, "cyc({q}) {poly:?}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn eval_at_root_is_zero() {
        // x^2 - 4x has roots 0 and 4.
        let p = IntPoly::from_i64(&[0, -4, 1]);
        assert!(Zero::is_zero(&p.eval(&BigInt::from(4))));
        assert!(Zero::is_zero(&p.eval(&BigInt::from(0))));
    }

    #[test]
    fn product_of_linear_factors() {
        let a = IntPoly::from_i64(&[-1, 1]);
        let b = IntPoly::from_i64(&[1, 1]);
        assert_eq!(a.mul(&b), IntPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn eval_over_cyclotomic_ring() {
        // (x - c) with c = -2 in the q=2 ring, evaluated at x = 0, gives 2.
        let c = CycInt::from_integer(2, -2).unwrap();
        let p = CycPoly::new(vec![c.neg(), CycInt::one(2).unwrap()]);
        assert_eq!(
            p.eval(&CycInt::zero(2).unwrap()),
            CycInt::from_integer(2, 2).unwrap()
        );
    }

    #[test]
    fn interpolate_parabola() {
        let pts: Vec<(BigRational, BigRational)> = [(0, 0), (1, -3), (2, -4), (3, -3), (4, 0)]
            .iter()
            .map(|&(x, y)| (rat(x), rat(y)))
            .collect();
        let p = interpolate(&pts).unwrap();
        assert_eq!(p, RatPoly::from_i64(&[0, -4, 1]));
    }

    #[test]
    fn interpolate_constant() {
        let pts = vec![(rat(0), rat(1)), (rat(1), rat(1))];
        assert_eq!(interpolate(&pts).unwrap(), RatPoly::from_i64(&[1]));
    }

    #[test]
    fn interpolate_degree_twelve() {
        // Sample x^3 (x^3 - 1)^3 at 0..=12 and reconstruct it exactly.
        let p = IntPoly::from_i64(&[0, 0, 0, -1, 0, 0, 3, 0, 0, -3, 0, 0, 1]).to_rational();
        let pts: Vec<_> = (0..=12).map(|t| (rat(t), p.eval(&rat(t)))).collect();
        assert_eq!(interpolate(&pts).unwrap(), p);
    }

    #[test]
    fn interpolate_rejects_duplicate_abscissae() {
        let pts = vec![(rat(1), rat(1)), (rat(1), rat(2))];
        assert!(matches!(
            interpolate(&pts),
            Err(Error::DuplicateAbscissa(_))
        ));
    }

    #[test]
    fn rou_transform_of_x_minus_one() {
        // (x - 1)(-x - 1) = 1 - x^2: the direct product of substitutions.
        let p = IntPoly::from_i64(&[-1, 1]);
        assert_eq!(
            rou_product_transform(&p, 2).unwrap(),
            IntPoly::from_i64(&[1, 0, -1])
        );
    }

    #[test]
    fn rou_transform_of_x_squared() {
        let p = IntPoly::from_i64(&[0, 0, 1]);
        let got = rou_product_transform(&p, 3).unwrap();
        assert_eq!(got, IntPoly::from_i64(&[0, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn rou_transform_order_one_is_identity() {
        let p = IntPoly::from_i64(&[3, -2, 5]);
        assert_eq!(rou_product_transform(&p, 1).unwrap(), p);
    }

    #[test]
    fn rou_transform_supports_multiples_of_r_only() {
        let p = IntPoly::from_i64(&[2, -1, 0, 3]);
        let got = rou_product_transform(&p, 4).unwrap();
        for (k, c) in got.coeffs().iter().enumerate() {
            if k % 4 != 0 {
                assert!(Zero::is_zero(c), "coefficient at degree {k} should vanish");
            }
        }
        assert_eq!(got.degree(), Some(12));
    }

    #[test]
    fn exact_poly_json_round_trip() {
        let p = ExactPoly::Int(IntPoly::from_i64(&[0, 0, 0, -4, 1]));
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"domain":"int","coeffs":[0,0,0,-4,1]}"#);
        let back: ExactPoly = serde_json::from_str(&text).unwrap();
        assert!(back == p);

        let r = ExactPoly::Rat(RatPoly::new(vec![BigRational::new(
            BigInt::from(1),
            BigInt::from(2),
        )]));
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"domain":"rat","coeffs":[{"num":1,"den":2}]}"#);
        let back: ExactPoly = serde_json::from_str(&text).unwrap();
        assert!(back == r);

        let c = ExactPoly::Cyc {
            q: 3,
            poly: CycPoly::constant(CycInt::root_of_unity(3, 1).unwrap()),
        };
        let text = serde_json::to_string(&c).unwrap();
        let back: ExactPoly = serde_json::from_str(&text).unwrap();
        assert!(back == c);
    }

    #[test]
    fn shift_and_pow() {
        let p = IntPoly::from_i64(&[1, 1]); // 1 + x
        let sq = p.pow(2);
        assert_eq!(sq, IntPoly::from_i64(&[1, 2, 1]));
        assert_eq!(sq.shift_up(2), IntPoly::from_i64(&[0, 0, 1, 2, 1]));
        assert_eq!(p.pow(0), IntPoly::from_i64(&[1]));
    }
}
