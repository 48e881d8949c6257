use super::ReflectionGroup;
use crate::arith::Polynomial;
use crate::error::{Error, Result};

/// A linear character with values `±1`, given on the simple reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<i8>,
}

impl Character {
    /// Checks that the values extend to a homomorphism `G → {±1}`.
    pub fn new(g: &ReflectionGroup, values: Vec<i8>) -> Result<Self> {
        if values.len() != g.rank() || values.iter().any(|&v| v != 1 && v != -1) {
            return Err(Error::InconsistentCharacter);
        }
        let chi = Self { values };
        for w in 0..g.order() {
            for s in 0..g.rank() {
                let ws = g.mul(w, g.simple_reflection(s));
                if chi.eval(g, ws) != chi.eval(g, w) * chi.values[s] {
                    return Err(Error::InconsistentCharacter);
                }
            }
        }
        Ok(chi)
    }

    pub fn trivial(g: &ReflectionGroup) -> Self {
        Self { values: vec![1; g.rank()] }
    }

    /// `det`, equal to `-1` on every reflection.
    pub fn sign(g: &ReflectionGroup) -> Self {
        Self { values: vec![-1; g.rank()] }
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn eval(&self, g: &ReflectionGroup, w: usize) -> i8 {
        g.word(w).iter().map(|&s| self.values[s]).product()
    }
}

/// `d_χ = Π γ_x` over positive roots `x` with `χ(σ_x) = −1`.
pub fn d_chi(g: &ReflectionGroup, chi: &Character) -> Polynomial {
    let rs = g.root_system();
    rs.positive_roots()
        .iter()
        .filter(|x| chi.eval(g, g.reflection(x)) == -1)
        .fold(Polynomial::one(g.layout()), |acc, x| &acc * &rs.gamma_poly(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::RootSystem;

    #[test]
    fn sign_and_trivial() {
        let g = ReflectionGroup::generate(RootSystem::type_a_product(&[3]).unwrap()).unwrap();
        assert_eq!(d_chi(&g, &Character::trivial(&g)), Polynomial::one(g.layout()));
        assert_eq!(d_chi(&g, &Character::sign(&g)), g.root_system().delta());
        let s2 = ReflectionGroup::generate(RootSystem::type_a_product(&[2]).unwrap()).unwrap();
        let l = s2.layout().clone();
        assert_eq!(d_chi(&s2, &Character::sign(&s2)), &Polynomial::var(&l, 0) - &Polynomial::var(&l, 1));
    }

    #[test]
    fn braid_consistency() {
        // in S3 both simple reflections are conjugate, so mixed values cannot extend
        let g = ReflectionGroup::generate(RootSystem::type_a_product(&[3]).unwrap()).unwrap();
        assert!(matches!(Character::new(&g, vec![1, -1]), Err(Error::InconsistentCharacter)));
        assert!(Character::new(&g, vec![-1, -1]).is_ok());
        // in B2 the two classes of reflections are independent
        let b2 = ReflectionGroup::generate(
            RootSystem::new(crate::arith::VariableLayout::flat(2), vec![crate::arith::ints(&[1, -1]), crate::arith::ints(&[0, 1])], None).unwrap(),
        )
        .unwrap();
        let chi = Character::new(&b2, vec![1, -1]).unwrap();
        let l = b2.layout().clone();
        let expect = &Polynomial::var(&l, 0) * &Polynomial::var(&l, 1);
        assert_eq!(d_chi(&b2, &chi), expect);
    }
}
