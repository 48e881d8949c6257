//! The symmetrized operator Σ τ·(Δ_v/Δ pφ_v) against ∂_w ∘ pφ_v on S3.

use gz_engine::commands::{check_structure_theorem, LoadedConfig};

fn main() -> gz_engine::Result<()> {
    let cfg = LoadedConfig::parse(
        r#"{"group": {"type_a_product": [3]}, "v": [0, 0, 1], "p": "x1 + x2",
            "points": [[0, 1, 3], [0, 0, 1], [1, 1, 2], [0, 0, 0]]}"#,
    )?;
    let r = check_structure_theorem(&cfg.config, 0, 20)?;
    println!("recovered scalar a = {:?}", r.scalar.map(|a| a.to_string()));
    println!("expected ∂_w Δ_v = {}", r.expected);
    println!("{} germ samples, {} mismatches", r.samples, r.mismatches);
    println!("{} functionals, {} disagreements between the two routes", r.route_checks, r.route_mismatches);
    Ok(())
}
