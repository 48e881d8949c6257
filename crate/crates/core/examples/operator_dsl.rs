//! Operators written in the expression language and resolved from a config.

use gz_engine::commands::{parse_skew, LoadedConfig};
use gz_engine::groups::{ReflectionGroup, RootSystem};
use gz_engine::skew::divided_diff_word;

fn main() -> gz_engine::Result<()> {
    let g = ReflectionGroup::generate(RootSystem::type_a_product(&[2])?)?;
    let a = parse_skew(&g, "1/(x1 - x2) - 1/(x1 - x2) * s(1)")?;
    println!("1/(x1-x2) - 1/(x1-x2)·s1 = {a}");
    println!("equals ∂_1: {}", a == divided_diff_word(&g, g.simple_reflection(0)));
    println!("ddiff(1) ∘ x1 * phi(1, 0) = {}", parse_skew(&g, "ddiff(1) ∘ x1 * phi(1, 0)")?);

    let cfg = LoadedConfig::parse(
        r#"{"operators": [{"builder": "ogz", "rows": [1, 2]}, {"builder": "dsl", "expr": "x[2,1] + x[2,2]"}]}"#,
    )?;
    let r = cfg.config.resolve()?;
    for (name, op) in &r.operators {
        println!("{name}: {op}");
    }
    println!("config hash {}", cfg.hash);
    Ok(())
}
