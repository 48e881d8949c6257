//! Germ collections and the action of skew elements on them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::json::PolyJson;
use crate::arith::scalar::{from_reprs, to_reprs};
use crate::arith::{Frf, Polynomial, Scalar, ScalarRepr, VariableLayout};
use crate::error::{show_point, Error, Result};
use crate::groups::ReflectionGroup;
use crate::skew::SkewElement;

pub type Point = Vec<Scalar>;

fn add_points(a: &[Scalar], b: &[Scalar]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_points(a: &[Scalar], b: &[Scalar]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Finitely many germs, one rational function per point, each holomorphic at its point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GermSum {
    layout: VariableLayout,
    germs: BTreeMap<Point, Frf>,
}

impl GermSum {
    pub fn new(layout: &VariableLayout) -> Self {
        Self { layout: layout.clone(), germs: BTreeMap::new() }
    }

    pub fn single(point: Point, f: Frf) -> Self {
        let mut s = Self::new(f.layout());
        s.add(point, f);
        s
    }

    pub fn add(&mut self, point: Point, f: Frf) {
        if f.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.germs.entry(point) {
            Entry::Vacant(v) => {
                v.insert(f);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &f;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn layout(&self) -> &VariableLayout {
        &self.layout
    }

    pub fn get(&self, p: &[Scalar]) -> Option<&Frf> {
        self.germs.get(p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, &Frf)> {
        self.germs.iter()
    }

    pub fn len(&self) -> usize {
        self.germs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.germs.is_empty()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::new(&self.layout);
        for (p, f) in &self.germs {
            out.add(p.clone(), f.scale(c));
        }
        out
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, f) in &other.germs {
            out.add(p.clone(), f.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&-Scalar::from_integer(1.into())))
    }

    /// `(g·F)_{g q} = g·F_q`.
    pub fn act(&self, group: &ReflectionGroup, g: usize) -> Self {
        let mut out = Self::new(&self.layout);
        for (p, f) in &self.germs {
            out.add(group.act_point(g, p), group.act_frf(g, f));
        }
        out
    }

    pub fn restrict<F: Fn(&Point) -> bool>(&self, keep: F) -> Self {
        Self {
            layout: self.layout.clone(),
            germs: self.germs.iter().filter(|(p, _)| keep(p)).map(|(p, f)| (p.clone(), f.clone())).collect(),
        }
    }

    /// `A(F)` at every reachable point; each result must be holomorphic at its point.
    pub fn apply(&self, op: &SkewElement) -> Result<Self> {
        let grp = op.group();
        let mut out = Self::new(&self.layout);
        for (g, zeta, c) in op.terms() {
            for (q, f) in &self.germs {
                let y = add_points(&grp.act_point(g, q), zeta);
                out.add(y, c * &grp.transport(g, zeta, f));
            }
        }
        for (y, h) in &out.germs {
            if !h.is_holomorphic_at(y) {
                return Err(Error::NotHolomorphicAtGerm { target: show_point(y) });
            }
        }
        Ok(out)
    }

    /// The germ of `A(F)` at a single target point.
    pub fn apply_at(&self, op: &SkewElement, target: &[Scalar]) -> Result<Frf> {
        let grp = op.group();
        let mut acc = Frf::zero(&self.layout);
        for (g, zeta, c) in op.terms() {
            let q = grp.act_point(grp.inv(g), &sub_points(target, zeta));
            if let Some(f) = self.germs.get(&q) {
                acc = &acc + &(c * &grp.transport(g, zeta, f));
            }
        }
        if !acc.is_holomorphic_at(target) {
            return Err(Error::NotHolomorphicAtGerm { target: show_point(target) });
        }
        Ok(acc)
    }
}

/// A `G`-invariant germ collection over one orbit, stored by its germ at a point with
/// parabolic stabilizer. Each orbit point carries one germ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InvariantGerm {
    base: Point,
    rep: Frf,
}

impl InvariantGerm {
    /// Moves `(point, rep)` to the parabolic representative of the orbit and validates
    /// holomorphy and stabilizer invariance.
    pub fn new(group: &ReflectionGroup, point: &[Scalar], rep: Frf) -> Result<Self> {
        let (base, h) = group.parabolic_rep(point)?;
        let rep = group.act_frf(h, &rep);
        if !rep.is_holomorphic_at(&base) {
            return Err(Error::NotHolomorphicAtGerm { target: show_point(&base) });
        }
        let stab = group.stabilizer(&base);
        let j = group.parabolic_type(&stab).expect("representative is parabolic");
        for s in j {
            if group.act_frf(group.simple_reflection(s), &rep) != rep {
                return Err(Error::NotInvariantGerm(show_point(&base)));
            }
        }
        Ok(Self { base, rep })
    }

    pub fn polynomial(group: &ReflectionGroup, point: &[Scalar], p: Polynomial) -> Result<Self> {
        Self::new(group, point, p.into())
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn rep(&self) -> &Frf {
        &self.rep
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self { base: self.base.clone(), rep: self.rep.scale(c) }
    }

    /// The germ at an arbitrary orbit point, or `None` off the orbit.
    pub fn germ_at(&self, group: &ReflectionGroup, q: &[Scalar]) -> Option<Frf> {
        let (p, h) = group.parabolic_rep(q).ok()?;
        (p == self.base).then(|| group.act_frf(group.inv(h), &self.rep))
    }

    /// All orbit points with their germs.
    pub fn expand(&self, group: &ReflectionGroup) -> GermSum {
        let mut out = GermSum::new(self.rep.layout());
        for (y, g) in group.orbit(&self.base) {
            out.add(y, group.act_frf(g, &self.rep));
        }
        out
    }

    /// The germ of `A(F)` at `target`, using only the sources that land there.
    pub fn apply_at(&self, group: &ReflectionGroup, op: &SkewElement, target: &[Scalar]) -> Result<Frf> {
        let grp = op.group();
        let mut acc = Frf::zero(self.rep.layout());
        for (g, zeta, c) in op.terms() {
            let q = grp.act_point(grp.inv(g), &sub_points(target, zeta));
            if let Some(f) = self.germ_at(group, &q) {
                acc = &acc + &(c * &grp.transport(g, zeta, &f));
            }
        }
        if !acc.is_holomorphic_at(target) {
            return Err(Error::NotHolomorphicAtGerm { target: show_point(target) });
        }
        Ok(acc)
    }
}

/// `A(F)` for an invariant operator, one germ per target orbit (zero germs dropped).
pub fn apply_operator_to_germ(group: &ReflectionGroup, op: &SkewElement, f: &InvariantGerm) -> Result<Vec<InvariantGerm>> {
    let grp = op.group();
    let mut targets: BTreeMap<Point, ()> = BTreeMap::new();
    for (q, _) in group.orbit(f.base()) {
        for (g, zeta, _) in op.terms() {
            let y = add_points(&grp.act_point(g, &q), zeta);
            targets.insert(group.parabolic_rep(&y)?.0, ());
        }
    }
    let mut out = Vec::new();
    for y in targets.into_keys() {
        let h = f.apply_at(group, op, &y)?;
        if !h.is_zero() {
            out.push(InvariantGerm { base: y, rep: h });
        }
    }
    Ok(out)
}

/// Germ JSON: `{"point":[..], "local_rep": <polynomial or rational function>}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GermJson {
    pub point: Vec<ScalarRepr>,
    pub local_rep: PolyJson,
}

impl InvariantGerm {
    pub fn to_json(&self) -> GermJson {
        GermJson { point: to_reprs(&self.base), local_rep: self.rep.to_json() }
    }

    pub fn from_json(group: &ReflectionGroup, j: &GermJson) -> Result<Self> {
        let rep = Frf::from_json(&j.local_rep)?;
        let point = from_reprs(j.point.clone());
        if point.len() != group.dim() || rep.layout() != group.layout() {
            return Err(Error::DimensionMismatch { expected: group.dim(), got: point.len() });
        }
        Self::new(group, &point, rep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ints};
    use crate::groups::RootSystem;
    use crate::skew::{GzGenerators, OgzGenerators};

    #[test]
    fn multiplication_operator() {
        let g = ReflectionGroup::generate(RootSystem::type_a_product(&[2]).unwrap()).unwrap();
        let l = g.layout().clone();
        let h = &Polynomial::var(&l, 0) + &Polynomial::var(&l, 1);
        let f = InvariantGerm::polynomial(&g, &ints(&[3, 1]), Polynomial::var(&l, 0)).unwrap();
        assert_eq!(f.base(), &ints(&[1, 3]));
        let out = apply_operator_to_germ(&g, &SkewElement::poly(&g, h.clone()), &f).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].base(), f.base());
        assert_eq!(out[0].rep(), &f.rep().mul_poly(&h));
    }

    #[test]
    fn rejects_non_invariant_local_rep() {
        let g = ReflectionGroup::generate(RootSystem::type_a_product(&[2]).unwrap()).unwrap();
        let x1 = Polynomial::var(g.layout(), 0);
        assert!(matches!(InvariantGerm::polynomial(&g, &ints(&[1, 1]), x1), Err(Error::NotInvariantGerm(_))));
    }

    #[test]
    fn gl4_e34_cancels_on_repeated_coordinates() {
        // constant germ at the point with row 3 = (1,0,0); a target has row 3 = (1,1,0)
        let gz = GzGenerators::new(4).unwrap();
        let g = gz.group.clone();
        let l = g.layout().clone();
        let mut xi = vec![int(0); l.dim()];
        xi[l.index(2, 0)] = int(1);
        let f = InvariantGerm::polynomial(&g, &xi, Polynomial::one(&l)).unwrap();
        let out = apply_operator_to_germ(&g, gz.get(3, 4), &f).unwrap();
        let mut eta = vec![int(0); l.dim()];
        eta[l.index(2, 0)] = int(1);
        eta[l.index(2, 1)] = int(1);
        let eta = g.parabolic_rep(&eta).unwrap().0;
        let hit = out.iter().find(|h| h.base() == &eta).expect("repeated-coordinate target reached");
        assert!(hit.rep().is_holomorphic_at(&eta));
    }

    #[test]
    fn unsymmetrized_term_leaves_a_pole() {
        let o = OgzGenerators::new(&[2, 2], int(1)).unwrap();
        let g = o.group.clone();
        let (gi, shift, c) = o.e[0].terms().next().unwrap();
        let single = SkewElement::term(&g, c.clone(), gi, shift.clone());
        let l = g.layout().clone();
        // targets with x1 = x2 are reached from (0,1,..) and (1,0,..); only the sum cancels
        let f = InvariantGerm::polynomial(&g, &ints(&[0, 1, 0, 0]), Polynomial::one(&l)).unwrap();
        assert!(matches!(apply_operator_to_germ(&g, &single, &f), Err(Error::NotHolomorphicAtGerm { .. })));
        assert!(apply_operator_to_germ(&g, &o.e[0], &f).is_ok());
    }

    #[test]
    fn apply_matches_expanded_apply() {
        let o = OgzGenerators::new(&[2, 2], int(1)).unwrap();
        let g = o.group.clone();
        let l = g.layout().clone();
        let p = &Polynomial::var(&l, 2) * &Polynomial::var(&l, 3);
        let f = InvariantGerm::polynomial(&g, &ints(&[0, 1, 2, 2]), p).unwrap();
        let full = f.expand(&g).apply(&o.e[0]).unwrap();
        for h in apply_operator_to_germ(&g, &o.e[0], &f).unwrap() {
            assert_eq!(full.get(h.base()), Some(h.rep()));
        }
    }
}
