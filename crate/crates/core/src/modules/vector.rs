//! Elements of `M` (fiber classes) and `M*` (combinations of basis functionals).

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::germ::Point;
use crate::arith::scalar::{from_reprs, to_reprs};
use crate::arith::{fmt_scalar, Scalar, ScalarRepr};
use crate::error::Result;
use crate::groups::ReflectionGroup;

/// `ev_e ∘ ∂_w ∘ φ_ξ` with `ξ` the label point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FunctionalBasisElement {
    pub point: Point,
    pub w: usize,
}

/// One entry of the module-vector JSON format.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VectorEntryJson {
    pub point: Vec<ScalarRepr>,
    pub w: Vec<usize>,
    pub coeff: ScalarRepr,
}

fn add_coeff<K: Ord>(map: &mut BTreeMap<K, Scalar>, k: K, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(k).or_insert_with(Scalar::zero);
    *e += c;
}

fn prune<K: Ord + Clone>(map: &mut BTreeMap<K, Scalar>) {
    map.retain(|_, v| !v.is_zero());
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FunctionalVector {
    coeffs: BTreeMap<FunctionalBasisElement, Scalar>,
}

impl FunctionalVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(f: FunctionalBasisElement) -> Self {
        let mut v = Self::new();
        v.add(f, Scalar::from_integer(1.into()));
        v
    }

    pub fn add(&mut self, f: FunctionalBasisElement, c: Scalar) {
        add_coeff(&mut self.coeffs, f, c);
        prune(&mut self.coeffs);
    }

    pub fn get(&self, f: &FunctionalBasisElement) -> Scalar {
        self.coeffs.get(f).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FunctionalBasisElement, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::new();
        for (f, a) in &self.coeffs {
            out.add(f.clone(), a * c);
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (f, a) in &other.coeffs {
            add_coeff(&mut out.coeffs, f.clone(), a.clone());
        }
        prune(&mut out.coeffs);
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-Scalar::from_integer(1.into())))
    }

    pub fn to_json(&self, group: &ReflectionGroup) -> Vec<VectorEntryJson> {
        self.coeffs
            .iter()
            .map(|(f, c)| VectorEntryJson { point: to_reprs(&f.point), w: group.word(f.w).to_vec(), coeff: ScalarRepr(c.clone()) })
            .collect()
    }

    pub fn from_json(group: &ReflectionGroup, entries: &[VectorEntryJson]) -> Result<Self> {
        let mut out = Self::new();
        for e in entries {
            let w = group.from_word(&e.w)?;
            out.add(FunctionalBasisElement { point: from_reprs(e.point.clone()), w }, e.coeff.0.clone());
        }
        Ok(out)
    }

    pub fn display(&self, group: &ReflectionGroup) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(f, c)| {
                let p: Vec<String> = f.point.iter().map(fmt_scalar).collect();
                format!("{}·α[({}), {:?}]", fmt_scalar(c), p.join(","), group.word(f.w))
            })
            .collect();
        parts.join(" + ")
    }
}

/// A class in the fiber over the orbit of `point` (a parabolic representative), in
/// Schubert coordinates: `coords[w] = α_w(F) / c_w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberClass {
    pub point: Point,
    pub coords: BTreeMap<usize, Scalar>,
}

impl FiberClass {
    pub fn is_zero(&self) -> bool {
        self.coords.values().all(|c| c.is_zero())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiberVector {
    classes: BTreeMap<Point, BTreeMap<usize, Scalar>>,
}

impl FiberVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, point: Point, w: usize, c: Scalar) {
        let m = self.classes.entry(point.clone()).or_default();
        add_coeff(m, w, c);
        prune(m);
        if m.is_empty() {
            self.classes.remove(&point);
        }
    }

    pub fn add_class(&mut self, class: &FiberClass) {
        for (w, c) in &class.coords {
            self.add(class.point.clone(), *w, c.clone());
        }
    }

    pub fn from_class(class: &FiberClass) -> Self {
        let mut v = Self::new();
        v.add_class(class);
        v
    }

    pub fn classes(&self) -> impl Iterator<Item = FiberClass> + '_ {
        self.classes.iter().map(|(p, m)| FiberClass { point: p.clone(), coords: m.clone() })
    }

    pub fn class_at(&self, point: &[Scalar]) -> Option<&BTreeMap<usize, Scalar>> {
        self.classes.get(point)
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.classes.values().map(|m| m.len()).sum()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::new();
        for (p, m) in &self.classes {
            for (w, a) in m {
                out.add(p.clone(), *w, a * c);
            }
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, m) in &other.classes {
            for (w, a) in m {
                out.add(p.clone(), *w, a.clone());
            }
        }
        out
    }

    pub fn to_json(&self, group: &ReflectionGroup) -> Vec<VectorEntryJson> {
        self.classes
            .iter()
            .flat_map(|(p, m)| {
                m.iter().map(move |(w, c)| VectorEntryJson {
                    point: to_reprs(p),
                    w: group.word(*w).to_vec(),
                    coeff: ScalarRepr(c.clone()),
                })
            })
            .collect()
    }

    pub fn from_json(group: &ReflectionGroup, entries: &[VectorEntryJson]) -> Result<Self> {
        let mut out = Self::new();
        for e in entries {
            out.add(from_reprs(e.point.clone()), group.from_word(&e.w)?, e.coeff.0.clone());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, int, ints};
    use crate::groups::RootSystem;

    #[test]
    fn cancellation_drops_entries() {
        let f = FunctionalBasisElement { point: ints(&[0, 1]), w: 0 };
        let mut v = FunctionalVector::basis(f.clone());
        v.add(f.clone(), int(-1));
        assert!(v.is_empty());
        let mut m = FiberVector::new();
        m.add(ints(&[0, 1]), 1, frac(1, 2));
        m.add(ints(&[0, 1]), 1, frac(-1, 2));
        assert!(m.is_empty());
    }

    #[test]
    fn json_round_trip() {
        let g = ReflectionGroup::generate(RootSystem::type_a_product(&[2]).unwrap()).unwrap();
        let mut v = FunctionalVector::new();
        v.add(FunctionalBasisElement { point: ints(&[0, 3]), w: g.longest() }, frac(2, 3));
        v.add(FunctionalBasisElement { point: ints(&[1, 1]), w: 0 }, int(5));
        let text = serde_json::to_string(&v.to_json(&g)).unwrap();
        let back: Vec<VectorEntryJson> = serde_json::from_str(&text).unwrap();
        assert_eq!(FunctionalVector::from_json(&g, &back).unwrap(), v);
    }
}
