//! JSON forms: `{"layout":[..], "terms":[{"exp":[..],"num":"..","den":".."}], "den_factors":[..]}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{AffineLinearForm, Frf, Polynomial, Scalar, ScalarRepr, VariableLayout};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u16>,
    pub num: String,
    #[serde(default = "one_str")]
    pub den: String,
}

fn one_str() -> String {
    "1".into()
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorJson {
    pub coeffs: Vec<ScalarRepr>,
    pub constant: ScalarRepr,
    #[serde(default = "one_u32")]
    pub mult: u32,
}

fn one_u32() -> u32 {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub layout: Vec<usize>,
    pub terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub den_factors: Vec<FactorJson>,
}

impl Polynomial {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            layout: self.layout().row_sizes().to_vec(),
            terms: self
                .terms()
                .map(|(m, c)| TermJson { exp: m.exps().to_vec(), num: c.numer().to_string(), den: c.denom().to_string() })
                .collect(),
            den_factors: vec![],
        }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let layout = VariableLayout::new(&j.layout)?;
        let terms = j
            .terms
            .iter()
            .map(|t| {
                let n: BigInt = t.num.parse().map_err(|_| Error::Parse(format!("bad numerator {}", t.num)))?;
                let d: BigInt = t.den.parse().map_err(|_| Error::Parse(format!("bad denominator {}", t.den)))?;
                if d == BigInt::from(0) {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Ok((t.exp.clone(), Scalar::new(n, d)))
            })
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(&layout, terms)
    }
}

impl Frf {
    pub fn to_json(&self) -> PolyJson {
        let mut j = self.numerator().to_json();
        j.den_factors = self
            .denominator()
            .iter()
            .map(|(l, &m)| FactorJson {
                coeffs: super::scalar::to_reprs(l.coeffs()),
                constant: ScalarRepr(l.constant().clone()),
                mult: m,
            })
            .collect();
        j
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let num = Polynomial::from_json(j)?;
        let mut den = BTreeMap::new();
        let mut scale = Scalar::from_integer(1.into());
        for f in &j.den_factors {
            let coeffs: Vec<Scalar> = f.coeffs.iter().map(|r| r.0.clone()).collect();
            if coeffs.len() != num.nvars() {
                return Err(Error::DimensionMismatch { expected: num.nvars(), got: coeffs.len() });
            }
            let (s, l) = AffineLinearForm::normalized(coeffs, f.constant.0.clone())
                .ok_or_else(|| Error::Parse("constant denominator factor".into()))?;
            scale *= num_traits::pow(s, f.mult as usize);
            *den.entry(l).or_insert(0) += f.mult;
        }
        Ok(Frf::new(num.scale(&scale.recip()), den))
    }
}
