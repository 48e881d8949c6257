//! Generators of U(gl_n) in the skew group ring and their commutation relations.

use std::time::Instant;

use gz_engine::skew::{check_gl_relations, GzGenerators};

fn main() -> gz_engine::Result<()> {
    for n in [2, 3] {
        let t = Instant::now();
        let gz = GzGenerators::new(n)?.with_commutators();
        let (checked, failures) = check_gl_relations(&gz.e, n);
        println!("gl_{n}: {checked} relations, {} failures, {:.3}s", failures.len(), t.elapsed().as_secs_f64());
    }
    let gz = GzGenerators::new(2)?;
    println!("E12 = {}", gz.get(1, 2));
    println!("E21 = {}", gz.get(2, 1));
    println!("[E12, E21] = {}", gz.get(1, 2).commutator(gz.get(2, 1)));
    println!("E11 - E22 = {}", gz.get(1, 1) - gz.get(2, 2));
    Ok(())
}
