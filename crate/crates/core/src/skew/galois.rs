use super::SkewElement;
use crate::arith::Frf;
use crate::groups::{d_chi, Character};

/// True iff `X` is an invariant element of pure translations and `d_χ · X` has polynomial
/// coefficients.
pub fn validate_rational_galois_generator(x: &SkewElement, chi: &Character) -> bool {
    if !x.is_pure_translation() || !x.is_invariant() {
        return false;
    }
    let d = Frf::from(d_chi(x.group(), chi));
    x.terms().all(|(_, _, c)| (&d * c).is_polynomial())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ints, Polynomial};
    use crate::groups::{ReflectionGroup, RootSystem};
    use crate::skew::OgzGenerators;

    #[test]
    fn ogz_generators_are_galois() {
        let o = OgzGenerators::new(&[2, 2], int(1)).unwrap();
        let chi = Character::sign(&o.group);
        for x in o.all() {
            assert!(validate_rational_galois_generator(&x, &chi));
        }
    }

    #[test]
    fn invariant_multiplication_is_galois() {
        let g = ReflectionGroup::generate(RootSystem::type_a_product(&[2]).unwrap()).unwrap();
        let l = g.layout().clone();
        let h = &Polynomial::var(&l, 0) * &Polynomial::var(&l, 1);
        assert!(validate_rational_galois_generator(&SkewElement::poly(&g, h), &Character::trivial(&g)));
    }

    #[test]
    fn shifted_root_denominator_is_not_cleared() {
        let g = ReflectionGroup::generate(RootSystem::type_a_product(&[2]).unwrap()).unwrap();
        let l = g.layout().clone();
        let f = Frf::from(Polynomial::linear(&l, &ints(&[1, -1]), &int(-1))).inv().unwrap();
        let x = SkewElement::coeff(&g, f).symmetrize();
        assert!(!validate_rational_galois_generator(&x, &Character::sign(&g)));
    }
}
