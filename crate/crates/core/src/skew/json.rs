//! `[{"coeff": <rational function>, "g": <word>, "shift": [..]}, ..]`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{SkewElement, SkewTerm};
use crate::arith::json::PolyJson;
use crate::arith::scalar::{from_reprs, to_reprs};
use crate::arith::{Frf, ScalarRepr};
use crate::error::{Error, Result};
use crate::groups::ReflectionGroup;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SkewTermJson {
    pub coeff: PolyJson,
    #[serde(default)]
    pub g: Vec<usize>,
    pub shift: Vec<ScalarRepr>,
}

impl SkewElement {
    pub fn to_json(&self) -> Vec<SkewTermJson> {
        self.terms()
            .map(|(g, s, f)| SkewTermJson { coeff: f.to_json(), g: self.group().word(g).to_vec(), shift: to_reprs(s) })
            .collect()
    }

    pub fn from_json(group: &Arc<ReflectionGroup>, terms: &[SkewTermJson]) -> Result<Self> {
        let terms = terms
            .iter()
            .map(|t| {
                let coeff = Frf::from_json(&t.coeff)?;
                if coeff.layout() != group.layout() {
                    return Err(Error::Config("coefficient layout differs from the group layout".into()));
                }
                let shift = from_reprs(t.shift.clone());
                if shift.len() != group.dim() {
                    return Err(Error::DimensionMismatch { expected: group.dim(), got: shift.len() });
                }
                Ok(SkewTerm { coeff, g: group.from_word(&t.g)?, shift })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SkewElement::from_terms(group, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::RootSystem;
    use crate::skew::divided_diff_word;

    #[test]
    fn roundtrip() {
        let g = ReflectionGroup::generate(RootSystem::type_a_product(&[3]).unwrap()).unwrap();
        let d = divided_diff_word(&g, g.longest());
        let s = serde_json::to_string(&d.to_json()).unwrap();
        let back: Vec<SkewTermJson> = serde_json::from_str(&s).unwrap();
        assert_eq!(SkewElement::from_json(&g, &back).unwrap(), d);
    }
}
