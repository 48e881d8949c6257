//! Reflection groups, reduced words, divided differences and Schubert polynomials.

use gz_engine::groups::{ReflectionGroup, RootSystem};
use gz_engine::modules::ModuleEngine;
use gz_engine::skew::{divided_diff_of_word, divided_diff_word};

fn main() -> gz_engine::Result<()> {
    for (name, rs) in [("S3", RootSystem::type_a_product(&[3])?), ("B2", RootSystem::dihedral(4)?)] {
        let g = ReflectionGroup::generate(rs)?;
        let w0 = g.longest();
        println!("{name}: |G| = {}, w0 = {:?}, reduced words of w0: {:?}", g.order(), g.word(w0), g.all_reduced_words(w0));
        let m = g.length(w0);
        let braid = |a: usize| (0..m).map(|i| if i % 2 == 0 { a } else { 1 - a }).collect::<Vec<_>>();
        assert_eq!(divided_diff_of_word(&g, &braid(0)), divided_diff_of_word(&g, &braid(1)));
        println!("  braid relation holds; ∂_s∂_s = 0: {}", divided_diff_of_word(&g, &[0, 0]).is_zero());
        println!("  ∂_w0 has {} terms", divided_diff_word(&g, w0).num_terms());
    }

    let g = ReflectionGroup::generate(RootSystem::type_a_product(&[3])?)?;
    let e = ModuleEngine::new(g.clone());
    println!("Schubert polynomials of S3:");
    for w in 0..g.order() {
        println!("  {:<10} {:<30} norm {}", format!("{:?}", g.word(w)), e.schubert().poly(w).to_string(), e.norm(w));
    }
    Ok(())
}
