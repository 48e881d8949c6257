//! Γ-graphs on a window around v and the simplicity certificate.

use gz_engine::arith::{frac, int, ints};
use gz_engine::simplicity::{build_gamma_regular, certify_canonical_module, check_regular_conditions};
use gz_engine::skew::OgzGenerators;

fn main() -> gz_engine::Result<()> {
    let o = OgzGenerators::new(&[1, 2], int(1))?;
    let gens = o.all();
    let v = vec![frac(1, 3), frac(1, 5), frac(2, 7)];
    let graph = build_gamma_regular(&gens, &v, 2)?;
    println!("{}", graph.to_dot());
    let r = check_regular_conditions(&gens, &v, 3)?;
    println!("generic v, R = 3: {}", serde_json::to_string_pretty(&r)?);
    let s = certify_canonical_module(&gens, &ints(&[0, 0, 0]), 3)?;
    println!("integral v, R = 3: verdict {:?}, conditions {:?}", s.verdict, s.conditions);
    Ok(())
}
