//! Divided differences, as skew elements and directly on polynomials.

use std::sync::Arc;

use super::SkewElement;
use crate::arith::{Frf, Polynomial};
use crate::groups::ReflectionGroup;

/// `∂_s = (1/γ_s)(e − s)`.
pub fn divided_difference(group: &Arc<ReflectionGroup>, s: usize) -> SkewElement {
    let gamma = group.root_system().gamma_poly(&group.root_system().simple_roots()[s]);
    let inv = Frf::from(gamma).inv().expect("γ is linear");
    &SkewElement::coeff(group, inv.clone()) - &SkewElement::term(group, inv, group.simple_reflection(s), vec![num_traits::Zero::zero(); group.dim()])
}

/// `∂_{s_1} ∘ ⋯ ∘ ∂_{s_k}` for an arbitrary word; zero when the word is not reduced.
pub fn divided_diff_of_word(group: &Arc<ReflectionGroup>, word: &[usize]) -> SkewElement {
    word.iter()
        .fold(SkewElement::identity(group), |acc, &s| &acc * &divided_difference(group, s))
}

/// `∂_w` along the stored reduced word of `w`.
pub fn divided_diff_word(group: &Arc<ReflectionGroup>, w: usize) -> SkewElement {
    divided_diff_of_word(group, group.word(w))
}

/// `∂_w · X`: iterates `X ↦ (1/γ_s)(X − s·X)` from the right end of the word.
pub fn divided_diff_action(group: &Arc<ReflectionGroup>, w: usize, x: &SkewElement) -> SkewElement {
    let mut acc = x.clone();
    for &s in group.word(w).iter().rev() {
        let gamma = group.root_system().gamma_poly(&group.root_system().simple_roots()[s]);
        let inv = Frf::from(gamma).inv().expect("γ is linear");
        let diff = &acc - &acc.g_action(group.simple_reflection(s));
        acc = diff.left_mul_coeff(&inv);
    }
    acc
}

/// `(f − s·f)/γ_s` on a polynomial.
pub fn poly_divided_difference(group: &ReflectionGroup, s: usize, f: &Polynomial) -> Polynomial {
    let rs = group.root_system();
    let (scale, form) = rs.gamma_form(&rs.simple_roots()[s]);
    let diff = f - &group.act_poly(group.simple_reflection(s), f);
    diff.exact_divide(&form).expect("divided differences of polynomials are polynomials").scale(&scale.recip())
}

/// `∂_w f` on a polynomial, applying the rightmost letter first.
pub fn poly_divided_diff_word(group: &ReflectionGroup, w: usize, f: &Polynomial) -> Polynomial {
    group.word(w).iter().rev().fold(f.clone(), |acc, &s| poly_divided_difference(group, s, &acc))
}
