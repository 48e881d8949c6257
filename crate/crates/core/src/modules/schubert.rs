//! Schubert polynomials `𝒫_w = ∂_{w⁻¹w₀} Δ` and the basis functionals `ev₀ ∘ ∂_w`.

use std::collections::VecDeque;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::arith::{Frf, Polynomial, Scalar};
use crate::error::Result;
use crate::groups::ReflectionGroup;
use crate::skew::poly_divided_diff_word;
use crate::skew::poly_divided_difference;

/// Direction of the translation in `ev_e ∘ ∂_w ∘ φ_ξ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FunctionalConvention {
    /// Read the germ at `ξ` through `x ↦ x + ξ`.
    #[default]
    ToOrigin,
    /// Read the germ at `−ξ` through `x ↦ x − ξ`.
    FromOrigin,
}

impl FunctionalConvention {
    /// The orbit point whose germ the functional labelled `xi` reads.
    pub fn support(self, xi: &[Scalar]) -> Vec<Scalar> {
        match self {
            Self::ToOrigin => xi.to_vec(),
            Self::FromOrigin => xi.iter().map(|c| -c).collect(),
        }
    }
}

/// `ev₀ ∂_w [y ↦ F(ξ + y)]`, using only the degree `ℓ(w)` part of the Taylor jet.
pub fn functional_value(group: &ReflectionGroup, w: usize, point: &[Scalar], germ: &Frf) -> Result<Scalar> {
    let d = group.length(w) as u32;
    let jet = germ.taylor(point, d)?.homogeneous_part(d);
    Ok(poly_divided_diff_word(group, w, &jet).as_constant().expect("degree drops to zero"))
}

pub struct Schubert {
    polys: Vec<Polynomial>,
    norms: Vec<OnceLock<Scalar>>,
}

impl Schubert {
    /// All `𝒫_w`, walking down from `𝒫_{w₀} = Δ` with `𝒫_{ws} = ∂_s 𝒫_w` when `ℓ(ws) < ℓ(w)`.
    pub fn new(group: &ReflectionGroup) -> Self {
        let n = group.order();
        let mut polys: Vec<Option<Polynomial>> = vec![None; n];
        let w0 = group.longest();
        polys[w0] = Some(group.root_system().delta());
        let mut queue = VecDeque::from([w0]);
        while let Some(w) = queue.pop_front() {
            for (s, &r) in group.simple_reflections().iter().enumerate() {
                let ws = group.mul(w, r);
                if group.length(ws) < group.length(w) && polys[ws].is_none() {
                    polys[ws] = Some(poly_divided_difference(group, s, polys[w].as_ref().unwrap()));
                    queue.push_back(ws);
                }
            }
        }
        Self {
            polys: polys.into_iter().map(|p| p.expect("every element lies below w0")).collect(),
            norms: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn poly(&self, w: usize) -> &Polynomial {
        &self.polys[w]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// `c_w = ev₀ ∂_w 𝒫_w`.
    pub fn norm(&self, group: &ReflectionGroup, w: usize) -> &Scalar {
        self.norms[w].get_or_init(|| {
            poly_divided_diff_word(group, w, &self.polys[w]).as_constant().expect("∂_w 𝒫_w is constant")
        })
    }
}
