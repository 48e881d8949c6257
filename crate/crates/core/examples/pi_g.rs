//! The shift lattice of OGZ(1,2), π_G, its inverse and Υ.

use gz_engine::arith::{fmt_point, int, ints, Polynomial};
use gz_engine::modules::{lattice_stabilizer, pi_g, pi_g_inverse, upsilon, InvariantGerm, ShiftLattice};
use gz_engine::skew::OgzGenerators;

fn main() -> gz_engine::Result<()> {
    let o = OgzGenerators::new(&[1, 2], int(1))?;
    let g = o.group.clone();
    let lat = ShiftLattice::from_generators(&o.all())?;
    println!("lattice basis: {:?}", lat.basis().iter().map(|b| fmt_point(b)).collect::<Vec<_>>());
    let l = g.layout();
    for v in [ints(&[0, 0, 1]), ints(&[0, 2, 2])] {
        let h = lattice_stabilizer(&g, &v, &lat)?;
        let f = InvariantGerm::polynomial(&g, &v, &Polynomial::var(l, 1) * &Polynomial::var(l, 2))?.expand(&g);
        let pf = pi_g(&f, &v, &lat);
        println!("v = {}: |G_ℷv| = {}, {} germs -> {} after π_G", fmt_point(&v), h.order(), f.len(), pf.len());
        println!("  π_G⁻¹ π_G F = F: {}", pi_g_inverse(&g, &pf, &v, &lat)? == f);
        for a in o.all() {
            let lhs = pi_g(&f.apply(&a)?, &v, &lat);
            println!("  π_G(A F) = A π_G(F): {}", lhs == pf.apply(&a)?);
        }
        println!("  Υ(π_G F) has {} germs", upsilon(&g, &h, &pf, &v, &lat)?.len());
    }
    Ok(())
}
