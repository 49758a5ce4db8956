//! Exact arithmetic in the ring of integers extended by a primitive q-th
//! root of unity.
//!
//! Elements are stored in the power basis `1, z, ..., z^(phi(q)-1)` after
//! reduction modulo the q-th cyclotomic polynomial, where `z` is the chosen
//! primitive q-th root of unity and `phi` is Euler's totient. The reduced
//! form is canonical: two values are equal as ring elements iff their `q`
//! and coefficient vectors are identical, so equality, hashing, and ordering
//! are plain structural operations.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::serde_util::{bigint_to_number, number_to_bigint};

/// Coefficients of the q-th cyclotomic polynomial, ascending degree, monic.
///
/// Computed by dividing `x^q - 1` by the cyclotomic polynomials of the
/// proper divisors of q, and cached per q.
pub fn cyclotomic_polynomial(q: u32) -> Result<Arc<Vec<BigInt>>> {
    if q == 0 {
        return Err(Error::ZeroOrder);
    }
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&q) {
        return Ok(hit.clone());
    }

    // x^q - 1, then exact division by Phi_d for each proper divisor d.
    let mut poly = vec![BigInt::zero(); q as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[q as usize] = BigInt::from(1);
    for d in 1..q {
        if q % d == 0 {
            let phi_d = cyclotomic_polynomial(d)?;
            poly = divide_monic_exact(&poly, &phi_d);
        }
    }

    let arc = Arc::new(poly);
    cache.lock().unwrap().insert(q, arc.clone());
    Ok(arc)
}

/// Euler's totient of q, read off as the degree of the cyclotomic polynomial.
pub fn euler_phi(q: u32) -> Result<usize> {
    Ok(cyclotomic_polynomial(q)?.len() - 1)
}

/// Exact division of integer polynomials where the divisor is monic and
/// divides the dividend. Panics if the division leaves a remainder.
fn divide_monic_exact(dividend: &[BigInt], divisor: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(divisor.last().map(|c| c == &BigInt::from(1)).unwrap_or(false));
    let mut rem: Vec<BigInt> = dividend.to_vec();
    let dd = divisor.len() - 1;
    assert!(rem.len() > dd, "divisor degree exceeds dividend degree");
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = std::mem::replace(&mut rem[i], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        for (j, d) in divisor.iter().enumerate().take(dd) {
            let delta = &c * d;
            rem[i - dd + j] -= delta;
        }
        quot[i - dd] = c;
    }
    assert!(
        rem.iter().all(BigInt::is_zero),
        "non-exact division in cyclotomic polynomial construction"
    );
    quot
}

/// An exact element of the ring of integers adjoined a primitive q-th root
/// of unity, in canonical reduced form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycInt {
    q: u32,
    coeffs: Vec<BigInt>,
}

impl CycInt {
    /// The additive identity of the order-q ring.
    pub fn zero(q: u32) -> Result<Self> {
        let phi = euler_phi(q)?;
        Ok(CycInt {
            q,
            coeffs: vec![BigInt::zero(); phi],
        })
    }

    /// The multiplicative identity of the order-q ring.
    pub fn one(q: u32) -> Result<Self> {
        Self::from_integer(q, BigInt::from(1))
    }

    /// Embed a rational integer into the order-q ring.
    pub fn from_integer(q: u32, value: impl Into<BigInt>) -> Result<Self> {
        let mut out = Self::zero(q)?;
        out.coeffs[0] = value.into();
        Ok(out)
    }

    /// The root of unity z^j.
    pub fn root_of_unity(q: u32, j: u32) -> Result<Self> {
        let mut power = vec![BigInt::zero(); q as usize];
        power[(j % q.max(1)) as usize] = BigInt::from(1);
        Self::reduce(q, &power)
    }

    /// Canonicalize `sum_j power_coeffs[j] * z^j`. The input must have
    /// length exactly q; reduction modulo the cyclotomic polynomial yields
    /// the canonical representative.
    pub fn reduce(q: u32, power_coeffs: &[BigInt]) -> Result<Self> {
        if q == 0 {
            return Err(Error::ZeroOrder);
        }
        if power_coeffs.len() != q as usize {
            return Err(Error::LengthMismatch {
                expected: q as usize,
                got: power_coeffs.len(),
            });
        }
        Self::reduce_any(q, power_coeffs.to_vec())
    }

    /// Reduction of a power-basis vector of arbitrary length (internal: used
    /// by multiplication, rotation, and the Galois maps).
    fn reduce_any(q: u32, mut v: Vec<BigInt>) -> Result<Self> {
        let phi_q = cyclotomic_polynomial(q)?;
        let phi = phi_q.len() - 1;
        for i in (phi..v.len()).rev() {
            let c = std::mem::replace(&mut v[i], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            for (j, d) in phi_q.iter().enumerate().take(phi) {
                let delta = &c * d;
                v[i - phi + j] -= delta;
            }
        }
        v.truncate(phi);
        v.resize(phi, BigInt::zero());
        Ok(CycInt { q, coeffs: v })
    }

    /// The root order q.
    pub fn order(&self) -> u32 {
        self.q
    }

    /// Canonical coefficients in the power basis `1, z, ..., z^(phi(q)-1)`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigInt::is_zero)
    }

    /// Returns the value as a rational integer if it is one, i.e. if all
    /// coefficients beyond the constant one vanish.
    pub fn to_integer(&self) -> Option<BigInt> {
        if self.coeffs[1..].iter().all(BigInt::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Multiply by the rational integer `k`.
    pub fn scale(&self, k: &BigInt) -> Self {
        CycInt {
            q: self.q,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// z^j times self.
    pub fn rotate(&self, j: u32) -> Self {
        let j = j % self.q;
        if j == 0 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); j as usize];
        v.extend(self.coeffs.iter().cloned());
        Self::reduce_any(self.q, v).expect("order already validated")
    }

    /// Apply the ring automorphism sending z to z^k; requires gcd(k, q) = 1.
    pub fn galois(&self, k: u32) -> Result<Self> {
        let k = k % self.q;
        if self.q > 1 && (k == 0 || num_integer::gcd(k, self.q) != 1) {
            return Err(Error::InvalidParam(format!(
                "galois exponent {k} is not coprime to {q}",
                q = self.q
            )));
        }
        let mut v = vec![BigInt::zero(); self.q as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let idx = ((i as u64 * k as u64) % self.q as u64) as usize;
            v[idx] += c;
        }
        Self::reduce_any(self.q, v)
    }

    /// Complex conjugation (z maps to z^(q-1)).
    pub fn conj(&self) -> Self {
        if self.q <= 2 {
            return self.clone();
        }
        self.galois(self.q - 1).expect("q-1 is coprime to q")
    }

    /// Raise to a natural power by repeated squaring.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.q).expect("order already validated");
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// The canonical representative of the rotation orbit `{z^j * a}`,
    /// together with the orbit size (q for nonzero values, 1 for zero).
    ///
    /// The representative is the entrywise-lexicographically smallest
    /// coefficient vector among the rotations, comparing index 0 first and
    /// integers by value.
    pub fn orbit_canonical(&self) -> (Self, u32) {
        if self.is_zero() {
            return (self.clone(), 1);
        }
        let mut best = self.clone();
        let mut cur = self.clone();
        for _ in 1..self.q {
            cur = cur.rotate(1);
            if cur.coeffs < best.coeffs {
                best = cur.clone();
            }
        }
        (best, self.q)
    }

    /// Floating-point image under `z -> exp(2 pi i / q)`.
    ///
    /// The error is bounded by about `8 * ulp * sum(|coeffs|)`; coefficients
    /// far beyond 2^52 lose precision in the conversion itself.
    pub fn embed(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc += embedded_root(self.q, j as u32) * c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    fn assert_same_order(&self, rhs: &Self) {
        assert_eq!(
            self.q, rhs.q,
            "mismatched root orders {} and {}",
            self.q, rhs.q
        );
    }
}

/// `exp(2 pi i j / q)` with the axis-aligned roots returned exactly.
fn embedded_root(q: u32, j: u32) -> Complex64 {
    let j = j % q;
    if (4u64 * j as u64) % q as u64 == 0 {
        return match (4u64 * j as u64 / q as u64) % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let angle = 2.0 * std::f64::consts::PI * (j as f64) / (q as f64);
    Complex64::new(angle.cos(), angle.sin())
}

impl Add for &CycInt {
    type Output = CycInt;
    fn add(self, rhs: &CycInt) -> CycInt {
        self.assert_same_order(rhs);
        CycInt {
            q: self.q,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycInt {
    type Output = CycInt;
    fn sub(self, rhs: &CycInt) -> CycInt {
        self.assert_same_order(rhs);
        CycInt {
            q: self.q,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycInt {
    type Output = CycInt;
    fn neg(self) -> CycInt {
        CycInt {
            q: self.q,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &CycInt {
    type Output = CycInt;
    fn mul(self, rhs: &CycInt) -> CycInt {
        self.assert_same_order(rhs);
        if self.is_zero() || rhs.is_zero() {
            return CycInt::zero(self.q).expect("order already validated");
        }
        let mut conv = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        CycInt::reduce_any(self.q, conv).expect("order already validated")
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycInt(q={}, {})", self.q, self)
    }
}

impl fmt::Display for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            match j {
                0 => write!(f, "{abs}")?,
                _ => {
                    if abs != BigInt::from(1) {
                        write!(f, "{abs}*")?;
                    }
                    write!(f, "z")?;
                    if j > 1 {
                        write!(f, "^{j}")?;
                    }
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycIntWire {
    q: u32,
    coeffs: Vec<serde_json::Number>,
}

impl Serialize for CycInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycIntWire {
            q: self.q,
            coeffs: self.coeffs.iter().map(bigint_to_number).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = CycIntWire::deserialize(d)?;
        let phi = euler_phi(wire.q).map_err(D::Error::custom)?;
        if wire.coeffs.len() != phi {
            return Err(D::Error::custom(format!(
                "expected {phi} coefficients for q={}, got {}",
                wire.q,
                wire.coeffs.len()
            )));
        }
        let coeffs = wire
            .coeffs
            .iter()
            .map(|n| number_to_bigint(n).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(CycInt { q: wire.q, coeffs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(q: u32, power: &[i64]) -> CycInt {
        let v: Vec<BigInt> = power.iter().map(|&x| BigInt::from(x)).collect();
        CycInt::reduce(q, &v).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        let as_i64 = |q: u32| -> Vec<i64> {
            cyclotomic_polynomial(q)
                .unwrap()
                .iter()
                .map(|c| c.to_i64().unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn reduce_when_z2_is_minus_one() {
        // q=2: z = -1, so 3 + z equals 2.
        assert_eq!(cyc(2, &[3, 1]), CycInt::from_integer(2, 2).unwrap());
    }

    #[test]
    fn reduce_z3_squared() {
        // z^2 = -1 - z modulo x^2 + x + 1.
        let z2 = cyc(3, &[0, 0, 1]);
        assert_eq!(z2.coeffs(), &[BigInt::from(-1), BigInt::from(-1)]);
    }

    #[test]
    fn reduce_sum_of_all_roots_is_zero() {
        for q in 2..=12u32 {
            let ones = vec![BigInt::from(1); q as usize];
            assert!(
                CycInt::reduce(q, &ones).unwrap().is_zero(),
                "sum of all {q}-th roots of unity"
            );
        }
    }

    #[test]
    fn reduce_rejects_zero_order_and_bad_length() {
        assert!(matches!(
            CycInt::reduce(0, &[]),
            Err(Error::ZeroOrder)
        ));
        assert!(matches!(
            CycInt::reduce(3, &[BigInt::from(1)]),
            Err(Error::LengthMismatch { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn pow_of_one_plus_z3() {
        // (1 + z)^3 = -1 in the q=3 ring, since 1 + z = -z^2.
        let x = cyc(3, &[1, 1, 0]);
        assert_eq!(x.pow(3), CycInt::from_integer(3, -1).unwrap());
    }

    #[test]
    fn pow_of_plain_integer() {
        let two = CycInt::from_integer(2, 2).unwrap();
        assert_eq!(two.pow(2), CycInt::from_integer(2, 4).unwrap());
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        let i = cyc(4, &[0, 1, 0, 0]);
        assert_eq!(&i * &i, CycInt::from_integer(4, -1).unwrap());
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(
            CycInt::one(3).unwrap().rotate(1),
            CycInt::root_of_unity(3, 1).unwrap()
        );
        assert_eq!(
            CycInt::from_integer(2, 5).unwrap().rotate(1),
            CycInt::from_integer(2, -5).unwrap()
        );
        let one_plus_i = cyc(4, &[1, 1, 0, 0]);
        assert_eq!(one_plus_i.rotate(2), (&one_plus_i).neg());
    }

    #[test]
    fn rotate_full_turn_is_identity() {
        let x = cyc(5, &[3, -2, 0, 7, 1]);
        assert_eq!(x.rotate(5), x);
    }

    #[test]
    fn orbit_of_negative_integer_under_sign_flip() {
        let a = CycInt::from_integer(2, -3).unwrap();
        let (rep, size) = a.orbit_canonical();
        assert_eq!(rep, a);
        assert_eq!(size, 2);
    }

    #[test]
    fn orbit_of_zero_is_singleton() {
        let (rep, size) = CycInt::zero(3).unwrap().orbit_canonical();
        assert!(rep.is_zero());
        assert_eq!(size, 1);
    }

    #[test]
    fn orbit_of_imaginary_unit() {
        let i = cyc(4, &[0, 1, 0, 0]);
        let (rep, size) = i.orbit_canonical();
        assert_eq!(size, 4);
        // Orbit is {i, -1, -i, 1}; the min-lex coefficient vector is (-1, 0).
        assert_eq!(rep, CycInt::from_integer(4, -1).unwrap());
    }

    #[test]
    fn embed_examples() {
        let four = CycInt::from_integer(2, 4).unwrap().embed();
        assert!((four - Complex64::new(4.0, 0.0)).norm() < 1e-15);

        let i = cyc(4, &[0, 1, 0, 0]).embed();
        assert!((i - Complex64::new(0.0, 1.0)).norm() < 1e-15);

        let x = cyc(3, &[1, 1, 0]).embed();
        let expected = Complex64::new(0.5, 0.8660254037844386);
        assert!((x - expected).norm() < 1e-12);
    }

    #[test]
    fn conjugation_fixes_integers_and_flips_roots() {
        let z = CycInt::root_of_unity(5, 1).unwrap();
        assert_eq!(z.conj(), CycInt::root_of_unity(5, 4).unwrap());
        let n = CycInt::from_integer(5, 42).unwrap();
        assert_eq!(n.conj(), n);
        // z * conj(z) = |z|^2 = 1 for a root of unity.
        assert_eq!(&z * &z.conj(), CycInt::one(5).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let x = cyc(3, &[1, 1, 0]);
        let text = serde_json::to_string(&x).unwrap();
        assert_eq!(text, r#"{"q":3,"coeffs":[1,1]}"#);
        let back: CycInt = serde_json::from_str(&text).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn json_rejects_wrong_coefficient_count() {
        let err = serde_json::from_str::<CycInt>(r#"{"q":3,"coeffs":[1]}"#);
        assert!(err.is_err());
    }

    #[test]
    fn big_coefficients_survive_json() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let x = CycInt::from_integer(4, big.clone()).unwrap();
        let text = serde_json::to_string(&x).unwrap();
        let back: CycInt = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_integer().unwrap(), big);
    }
}
