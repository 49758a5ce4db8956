//! Serde glue for arbitrary-precision numbers.
//!
//! JSON output keeps integers as plain JSON numbers of unbounded size
//! (serde_json's `arbitrary_precision` feature) and rationals as
//! `{"num": ..., "den": ...}` objects.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Number;

/// Convert a big integer to a JSON number token, losslessly.
pub fn bigint_to_number(x: &BigInt) -> Number {
    if let Some(v) = x.to_i64() {
        return Number::from(v);
    }
    // Beyond i64 we rely on arbitrary-precision number tokens.
    serde_json::from_str::<Number>(&x.to_string()).expect("decimal digits form a number token")
}

/// Parse a JSON number token back into a big integer.
pub fn number_to_bigint(n: &Number) -> Result<BigInt, String> {
    let s = n.to_string();
    s.parse::<BigInt>()
        .map_err(|_| format!("expected an integer, got {s}"))
}

pub mod bigint_num {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        bigint_to_number(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let n = Number::deserialize(d)?;
        number_to_bigint(&n).map_err(D::Error::custom)
    }
}

pub mod bigint_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let nums: Vec<Number> = xs.iter().map(bigint_to_number).collect();
        nums.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let nums = Vec::<Number>::deserialize(d)?;
        nums.iter()
            .map(|n| number_to_bigint(n).map_err(D::Error::custom))
            .collect()
    }
}

/// Wire form of a rational number.
#[derive(Serialize, Deserialize)]
pub struct RatJson {
    pub num: Number,
    pub den: Number,
}

impl RatJson {
    pub fn from_rational(r: &BigRational) -> Self {
        RatJson {
            num: bigint_to_number(r.numer()),
            den: bigint_to_number(r.denom()),
        }
    }

    pub fn to_rational(&self) -> Result<BigRational, String> {
        let num = number_to_bigint(&self.num)?;
        let den = number_to_bigint(&self.den)?;
        if den == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        Ok(BigRational::new(num, den))
    }
}

pub mod rational_numden {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        RatJson::from_rational(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let j = RatJson::deserialize(d)?;
        j.to_rational().map_err(D::Error::custom)
    }
}
