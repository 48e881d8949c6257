//! Seeded random polynomials, invariants and germs for property checks.

use rand::Rng;

use super::germ::InvariantGerm;
use crate::arith::{Polynomial, Scalar, VariableLayout};
use crate::error::Result;
use crate::groups::{ReflectionGroup, Subgroup};

/// A polynomial with up to `terms` monomials of total degree `≤ degree` and small integer
/// coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, layout: &VariableLayout, degree: u32, terms: usize) -> Polynomial {
    let n = layout.dim();
    let mut out = Polynomial::zero(layout);
    for _ in 0..terms {
        let d = rng.gen_range(0..=degree);
        let mut exps = vec![0u16; n];
        for _ in 0..d {
            exps[rng.gen_range(0..n)] += 1;
        }
        let c: i64 = loop {
            let c = rng.gen_range(-4i64..=4);
            if c != 0 {
                break c;
            }
        };
        let t = Polynomial::from_terms(layout, vec![(exps, Scalar::from_integer(c.into()))]).expect("valid exponents");
        out = &out + &t;
    }
    out
}

/// `Σ_{h∈H} h·f`.
pub fn reynolds(group: &ReflectionGroup, h: &Subgroup, f: &Polynomial) -> Polynomial {
    h.elements().iter().fold(Polynomial::zero(f.layout()), |acc, &g| &acc + &group.act_poly(g, f))
}

/// A nonzero `G`-invariant polynomial of positive degree (falls back to a power sum).
pub fn random_invariant<R: Rng>(rng: &mut R, group: &ReflectionGroup, degree: u32) -> Polynomial {
    let whole = group.whole();
    for _ in 0..8 {
        let p = reynolds(group, &whole, &random_poly(rng, group.layout(), degree, 3));
        if p.total_degree().unwrap_or(0) > 0 {
            return p;
        }
    }
    let l = group.layout();
    (0..l.dim()).fold(Polynomial::zero(l), |acc, i| &acc + &Polynomial::var(l, i).pow(2))
}

/// A random invariant germ over the orbit of `point`: a random polynomial symmetrized over
/// the stabilizer of the parabolic representative.
pub fn random_germ<R: Rng>(rng: &mut R, group: &ReflectionGroup, point: &[Scalar], degree: u32) -> Result<InvariantGerm> {
    let (base, _) = group.parabolic_rep(point)?;
    let stab = group.stabilizer(&base);
    let mut p = Polynomial::zero(group.layout());
    while p.is_zero() {
        p = reynolds(group, &stab, &random_poly(rng, group.layout(), degree, 4));
    }
    InvariantGerm::polynomial(group, &base, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ints;
    use crate::groups::RootSystem;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_samples_are_reproducible_and_invariant() {
        let g = ReflectionGroup::generate(RootSystem::type_a_product(&[3]).unwrap()).unwrap();
        let a = random_germ(&mut ChaCha8Rng::seed_from_u64(7), &g, &ints(&[0, 0, 1]), 3).unwrap();
        let b = random_germ(&mut ChaCha8Rng::seed_from_u64(7), &g, &ints(&[0, 0, 1]), 3).unwrap();
        assert_eq!(a, b);
        let inv = random_invariant(&mut ChaCha8Rng::seed_from_u64(1), &g, 3);
        for &s in g.simple_reflections() {
            assert_eq!(g.act_poly(s, &inv), inv);
        }
    }
}
