//! Invariant germs at points with repeated coordinates stay holomorphic under the
//! symmetrized generators, while a single unsymmetrized term leaves a pole.

use gz_engine::arith::{fmt_point, int, ints, Polynomial};
use gz_engine::modules::{apply_operator_to_germ, GermSum, InvariantGerm};
use gz_engine::skew::OgzGenerators;
use gz_engine::Error;

fn main() -> gz_engine::Result<()> {
    let o = OgzGenerators::new(&[2, 2], int(1))?;
    let g = o.group.clone();
    let l = g.layout();
    let base = ints(&[0, 1, 0, 0]);
    let germ = InvariantGerm::polynomial(&g, &base, &Polynomial::var(l, 2) + &Polynomial::var(l, 3))?;
    for (k, a) in o.all().iter().enumerate() {
        let out = apply_operator_to_germ(&g, a, &germ)?;
        for h in out {
            println!("generator {k}: germ at {} -> {}", fmt_point(h.base()), h.rep());
        }
    }
    // one orbit term of E1 alone
    let (h, s, c) = o.e[0].terms().next().unwrap();
    let single = gz_engine::skew::SkewElement::term(&g, c.clone(), h, s.clone());
    let f = GermSum::single(base.clone(), Polynomial::one(l).into()).act(&g, 0);
    let f = gz_engine::modules::symmetrize_over(&g, &g.whole(), &f);
    match f.apply(&single) {
        Err(Error::NotHolomorphicAtGerm { target }) => println!("single term: pole at target {target:?}"),
        other => println!("single term: {:?}", other.map(|x| x.len())),
    }
    Ok(())
}
