//! Elements `Σ f_i · g_i · φ_{ξ_i}` of the skew group ring over `G ⋉ ℷ`.
//!
//! A term `(f, g, ξ)` acts on functions by `F ↦ f(x) · F(g⁻¹(x − ξ))`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;

use crate::arith::{Frf, Polynomial, Scalar};
use crate::groups::ReflectionGroup;

pub type ShiftVector = Vec<Scalar>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTerm {
    pub coeff: Frf,
    pub g: usize,
    pub shift: ShiftVector,
}

#[derive(Clone)]
pub struct SkewElement {
    group: Arc<ReflectionGroup>,
    terms: BTreeMap<(usize, ShiftVector), Frf>,
}

impl PartialEq for SkewElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.terms == other.terms
    }
}

impl Eq for SkewElement {}

impl SkewElement {
    pub fn zero(group: &Arc<ReflectionGroup>) -> Self {
        Self { group: group.clone(), terms: BTreeMap::new() }
    }

    pub fn term(group: &Arc<ReflectionGroup>, coeff: Frf, g: usize, shift: ShiftVector) -> Self {
        let mut a = Self::zero(group);
        a.add_term(g, shift, coeff);
        a
    }

    /// `1 · e · φ_0`.
    pub fn identity(group: &Arc<ReflectionGroup>) -> Self {
        Self::coeff(group, Frf::one(group.layout()))
    }

    /// Multiplication operator `f · e · φ_0`.
    pub fn coeff(group: &Arc<ReflectionGroup>, f: Frf) -> Self {
        Self::term(group, f, 0, vec![Scalar::zero(); group.dim()])
    }

    pub fn poly(group: &Arc<ReflectionGroup>, p: Polynomial) -> Self {
        Self::coeff(group, p.into())
    }

    pub fn translation(group: &Arc<ReflectionGroup>, shift: ShiftVector) -> Self {
        Self::term(group, Frf::one(group.layout()), 0, shift)
    }

    pub fn group_elem(group: &Arc<ReflectionGroup>, g: usize) -> Self {
        Self::term(group, Frf::one(group.layout()), g, vec![Scalar::zero(); group.dim()])
    }

    fn add_term(&mut self, g: usize, shift: ShiftVector, c: Frf) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((g, shift)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn group(&self) -> &Arc<ReflectionGroup> {
        &self.group
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order: group element index, then shift.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &ShiftVector, &Frf)> {
        self.terms.iter().map(|((g, s), f)| (*g, s, f))
    }

    pub fn to_terms(&self) -> Vec<SkewTerm> {
        self.terms().map(|(g, s, f)| SkewTerm { coeff: f.clone(), g, shift: s.clone() }).collect()
    }

    pub fn from_terms(group: &Arc<ReflectionGroup>, terms: impl IntoIterator<Item = SkewTerm>) -> Self {
        let mut a = Self::zero(group);
        for t in terms {
            a.add_term(t.g, t.shift, t.coeff);
        }
        a
    }

    pub fn coefficient(&self, g: usize, shift: &[Scalar]) -> Option<&Frf> {
        self.terms.get(&(g, shift.to_vec()))
    }

    /// Every term has group part `e`.
    pub fn is_pure_translation(&self) -> bool {
        self.terms.keys().all(|(g, _)| *g == 0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(&self.group);
        for ((g, s), f) in &self.terms {
            out.add_term(*g, s.clone(), f.scale(c));
        }
        out
    }

    /// `f ∘ A`, multiplying every coefficient on the left.
    pub fn left_mul_coeff(&self, f: &Frf) -> Self {
        let mut out = Self::zero(&self.group);
        for ((g, s), c) in &self.terms {
            out.add_term(*g, s.clone(), f * c);
        }
        out
    }

    /// `g · A`: coefficients transported, shifts mapped, group parts conjugated.
    pub fn g_action(&self, g: usize) -> Self {
        if g == 0 {
            return self.clone();
        }
        let grp = &self.group;
        let ginv = grp.inv(g);
        let mut out = Self::zero(grp);
        for ((h, s), f) in &self.terms {
            let conj = grp.mul(grp.mul(g, *h), ginv);
            out.add_term(conj, grp.act_point(g, s), grp.act_frf(g, f));
        }
        out
    }

    /// `Σ_{g ∈ G} g · A`.
    pub fn symmetrize(&self) -> Self {
        (0..self.group.order()).fold(Self::zero(&self.group), |acc, g| &acc + &self.g_action(g))
    }

    /// Sum of the distinct elements `g · A`, i.e. `symmetrize` divided by the order of the
    /// stabilizer of `A`.
    pub fn orbit_sum(&self) -> Self {
        let mut seen: Vec<Self> = Vec::new();
        for g in 0..self.group.order() {
            let b = self.g_action(g);
            if !seen.contains(&b) {
                seen.push(b);
            }
        }
        seen.iter().fold(Self::zero(&self.group), |acc, b| &acc + b)
    }

    pub fn is_invariant(&self) -> bool {
        self.group.simple_reflections().iter().all(|&s| self.g_action(s) == *self)
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `A(F)` for a single rational function `F`.
    pub fn apply(&self, f: &Frf) -> Frf {
        let mut acc = Frf::zero(self.group.layout());
        for ((g, s), c) in &self.terms {
            acc = &acc + &(c * &self.group.transport(*g, s, f));
        }
        acc
    }

    fn check_group(&self, other: &Self) {
        assert!(Arc::ptr_eq(&self.group, &other.group), "skew elements over different groups");
    }
}

impl<'a> Add<&'a SkewElement> for &'a SkewElement {
    type Output = SkewElement;
    fn add(self, rhs: &SkewElement) -> SkewElement {
        self.check_group(rhs);
        let mut out = self.clone();
        for ((g, s), f) in &rhs.terms {
            out.add_term(*g, s.clone(), f.clone());
        }
        out
    }
}

impl<'a> Sub<&'a SkewElement> for &'a SkewElement {
    type Output = SkewElement;
    fn sub(self, rhs: &SkewElement) -> SkewElement {
        self.check_group(rhs);
        let mut out = self.clone();
        for ((g, s), f) in &rhs.terms {
            out.add_term(*g, s.clone(), -f);
        }
        out
    }
}

impl Neg for &SkewElement {
    type Output = SkewElement;
    fn neg(self) -> SkewElement {
        let mut out = SkewElement::zero(&self.group);
        for ((g, s), f) in &self.terms {
            out.add_term(*g, s.clone(), -f);
        }
        out
    }
}

/// `(f,g,ξ)(f′,g′,ξ′) = (f · f′(g⁻¹(x−ξ)), gg′, ξ + gξ′)`.
impl<'a> Mul<&'a SkewElement> for &'a SkewElement {
    type Output = SkewElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &SkewElement) -> SkewElement {
        self.check_group(rhs);
        let grp = &self.group;
        let mut out = SkewElement::zero(grp);
        for ((g, s), f) in &self.terms {
            for ((g2, s2), f2) in &rhs.terms {
                let moved = grp.act_point(*g, s2);
                let shift: ShiftVector = s.iter().zip(&moved).map(|(a, b)| a + b).collect();
                let coeff = f * &grp.transport(*g, s, f2);
                out.add_term(grp.mul(*g, *g2), shift, coeff);
            }
        }
        out
    }
}

impl fmt::Display for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((g, s), c)| {
                let shift: Vec<String> = s.iter().map(crate::arith::fmt_scalar).collect();
                format!("[{c}]·g{:?}·φ({})", self.group.word(*g), shift.join(","))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SkewElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewElement({self})")
    }
}
