//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational number, always in lowest terms with positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| int(x)).collect()
}

/// Parses `"3"`, `"-7/2"` or `"0.25"`.
pub fn parse_scalar(s: &str) -> Result<Scalar> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| Error::Parse(format!("bad scalar `{s}`")))?;
        let d: BigInt = d.trim().parse().map_err(|_| Error::Parse(format!("bad scalar `{s}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(Scalar::new(n, d));
    }
    if let Some((ip, fp)) = s.split_once('.') {
        let neg = ip.starts_with('-');
        let digits = format!("{}{}", ip.trim_start_matches('-'), fp);
        let n: BigInt = digits.parse().map_err(|_| Error::Parse(format!("bad scalar `{s}`")))?;
        let d = num_traits::pow(BigInt::from(10), fp.len());
        let v = Scalar::new(n, d);
        return Ok(if neg { -v } else { v });
    }
    let n: BigInt = s.parse().map_err(|_| Error::Parse(format!("bad scalar `{s}`")))?;
    Ok(Scalar::from_integer(n))
}

pub fn fmt_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `(a, b, ...)`.
pub fn fmt_point(p: &[Scalar]) -> String {
    format!("({})", p.iter().map(fmt_scalar).collect::<Vec<_>>().join(", "))
}

pub fn is_integral(x: &Scalar) -> bool {
    x.is_integer()
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

/// JSON form of a scalar: integers may be plain numbers, anything else a string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarRepr(pub Scalar);

impl Serialize for ScalarRepr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_scalar(&self.0))
    }
}

impl<'de> Deserialize<'de> for ScalarRepr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let s = match &v {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            other => return Err(serde::de::Error::custom(format!("expected scalar, got {other}"))),
        };
        parse_scalar(&s).map(ScalarRepr).map_err(serde::de::Error::custom)
    }
}

pub fn to_reprs(v: &[Scalar]) -> Vec<ScalarRepr> {
    v.iter().cloned().map(ScalarRepr).collect()
}

pub fn from_reprs(v: Vec<ScalarRepr>) -> Vec<Scalar> {
    v.into_iter().map(|r| r.0).collect()
}
