//! Fibers, basis functionals and the action of E12 on the restricted dual.

use gz_engine::arith::{fmt_point, ints};
use gz_engine::modules::sample::random_germ;
use gz_engine::modules::{FiberVector, FunctionalBasisElement, FunctionalVector, ModuleEngine};
use gz_engine::skew::GzGenerators;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> gz_engine::Result<()> {
    let gz = GzGenerators::new(2)?;
    let g = gz.group.clone();
    let e = ModuleEngine::new(g.clone());
    for p in [ints(&[3, 0, 1]), ints(&[0, 1, 1])] {
        println!("fiber over {}: dimension {}", fmt_point(&p), e.fiber_basis(&p)?.len());
    }
    let alpha = FunctionalBasisElement { point: ints(&[3, 0, 1]), w: 0 };
    let out = e.act_on_functional(gz.get(1, 2), &alpha)?;
    println!("α(3,0,1) ∘ E12 = {}", out.display(&g));

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let germ = random_germ(&mut rng, &g, &ints(&[2, 0, 1]), 2)?;
    let m = FiberVector::from_class(&e.reduce_to_fiber(&germ)?);
    let am = e.act_on_fiber_vector(gz.get(1, 2), &m)?;
    let lhs = e.pair(&out, &m);
    let rhs = e.pair(&FunctionalVector::basis(alpha), &am);
    println!("⟨α∘E12, m⟩ = {lhs}, ⟨α, E12·m⟩ = {rhs}");
    Ok(())
}
