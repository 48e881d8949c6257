//! The shift lattice, `π_G`, its inverse, restriction to subgroups and `Υ`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::germ::{GermSum, Point};
use crate::arith::{linalg, scalar::is_integral, Scalar};
use crate::error::{Error, Result};
use crate::groups::{ReflectionGroup, Subgroup};
use crate::skew::SkewElement;

/// The ℤ-span of a set of rational shift vectors, kept as a Hermite-reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftLattice {
    basis: Vec<Vec<Scalar>>,
}

impl ShiftLattice {
    pub fn new(generators: &[Vec<Scalar>]) -> Result<Self> {
        let dim = generators.first().map(|v| v.len()).ok_or(Error::DegenerateLattice)?;
        let den = generators
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let mut rows: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|v| v.iter().map(|x| (x * Scalar::from_integer(den.clone())).to_integer()).collect())
            .collect();
        let mut basis = Vec::new();
        let mut col = 0;
        while col < dim && !rows.is_empty() {
            // Euclid on column `col` until a single row has a nonzero entry there
            loop {
                rows.retain(|r| r.iter().any(|x| !x.is_zero()));
                let nz: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
                if nz.len() <= 1 {
                    if let Some(&i) = nz.first() {
                        let mut r = rows.swap_remove(i);
                        if r[col].is_negative() {
                            r.iter_mut().for_each(|x| *x = -&*x);
                        }
                        basis.push(r);
                    }
                    break;
                }
                let p = *nz.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
                for &i in &nz {
                    if i == p {
                        continue;
                    }
                    let q = rows[i][col].div_floor(&rows[p][col]);
                    let pr = rows[p].clone();
                    for (x, y) in rows[i].iter_mut().zip(&pr) {
                        *x -= &q * y;
                    }
                }
            }
            col += 1;
        }
        if basis.is_empty() {
            return Err(Error::DegenerateLattice);
        }
        let basis = basis
            .into_iter()
            .map(|r| r.into_iter().map(|x| Scalar::new(x, den.clone())).collect())
            .collect();
        Ok(Self { basis })
    }

    /// Lattice spanned by every shift occurring in the generators.
    pub fn from_generators(generators: &[SkewElement]) -> Result<Self> {
        let shifts: Vec<Vec<Scalar>> = generators
            .iter()
            .flat_map(|a| a.terms().map(|(_, s, _)| s.clone()).collect::<Vec<_>>())
            .filter(|s| s.iter().any(|x| !x.is_zero()))
            .collect();
        Self::new(&shifts)
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Integer coordinates of `x`, if it lies in the lattice.
    pub fn coordinates(&self, x: &[Scalar]) -> Option<Vec<Scalar>> {
        let c = linalg::solve_in_span(&self.basis, x)?;
        c.iter().all(is_integral).then_some(c)
    }

    pub fn contains(&self, x: &[Scalar]) -> bool {
        self.coordinates(x).is_some()
    }

    pub fn same_coset(&self, a: &[Scalar], b: &[Scalar]) -> bool {
        let d: Point = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.contains(&d)
    }

    pub fn point(&self, v: &[Scalar], coords: &[i64]) -> Point {
        let mut p = v.to_vec();
        for (b, &c) in self.basis.iter().zip(coords) {
            for (x, y) in p.iter_mut().zip(b) {
                *x += y * Scalar::from_integer(c.into());
            }
        }
        p
    }
}

/// `G_{ℷ·v} = {g : g·v − v ∈ ℷ}`.
pub fn lattice_stabilizer(group: &ReflectionGroup, v: &[Scalar], lattice: &ShiftLattice) -> Result<Subgroup> {
    let elems = (0..group.order()).filter(|&g| lattice.same_coset(&group.act_point(g, v), v)).collect();
    group.subgroup_from_elements(elems)
}

/// `Σ_{h∈H} h·F`.
pub fn symmetrize_over(group: &ReflectionGroup, h: &Subgroup, f: &GermSum) -> GermSum {
    h.elements().iter().fold(GermSum::new(f.layout()), |acc, &g| acc.plus(&f.act(group, g)))
}

/// Restriction of germ data to `ℷ·v`.
pub fn pi_g(f: &GermSum, v: &[Scalar], lattice: &ShiftLattice) -> GermSum {
    f.restrict(|p| lattice.same_coset(p, v))
}

/// `(1/|G_{ℷ·v}|) Σ_{g∈G} g·F′`.
pub fn pi_g_inverse(group: &ReflectionGroup, f: &GermSum, v: &[Scalar], lattice: &ShiftLattice) -> Result<GermSum> {
    let k = lattice_stabilizer(group, v, lattice)?.order();
    let total = symmetrize_over(group, &group.whole(), f);
    Ok(total.scale(&Scalar::new(BigInt::one(), BigInt::from(k))))
}

/// Germ data for `G` viewed as data for `H ⊆ G`: restriction to `(H ⋉ ℷ)·v`, after checking
/// `H`-invariance.
pub fn inclusion_p(group: &ReflectionGroup, h: &Subgroup, f: &GermSum, v: &[Scalar], lattice: &ShiftLattice) -> Result<GermSum> {
    for &g in h.elements() {
        if &f.act(group, g) != f {
            return Err(Error::NotInvariantGerm(crate::error::show_point(v)));
        }
    }
    let cosets: Vec<Point> = h.elements().iter().map(|&g| group.act_point(g, v)).collect();
    Ok(f.restrict(|p| cosets.iter().any(|c| lattice.same_coset(p, c))))
}

/// `Υ = P ∘ π_G⁻¹`.
pub fn upsilon(group: &ReflectionGroup, h: &Subgroup, f: &GermSum, v: &[Scalar], lattice: &ShiftLattice) -> Result<GermSum> {
    inclusion_p(group, h, &pi_g_inverse(group, f, v, lattice)?, v, lattice)
}

/// Applies every generator to `H`-invariant samples; the first generator producing a pole
/// is reported.
pub fn validate_module_structure(generators: &[SkewElement], samples: &[GermSum]) -> Result<()> {
    for (i, a) in generators.iter().enumerate() {
        for s in samples {
            match s.apply(a) {
                Ok(_) => {}
                Err(Error::NotHolomorphicAtGerm { .. }) => return Err(Error::ModuleStructureMissing(i)),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, int, ints, Polynomial};
    use crate::modules::germ::InvariantGerm;
    use crate::skew::OgzGenerators;

    #[test]
    fn lattice_membership() {
        let l = ShiftLattice::new(&[ints(&[2, 0]), ints(&[0, 3]), ints(&[2, 3])]).unwrap();
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&ints(&[4, -3])));
        assert!(!l.contains(&ints(&[1, 0])));
        let h = ShiftLattice::new(&[vec![frac(1, 2), int(0)], ints(&[1, 1])]).unwrap();
        assert!(h.contains(&ints(&[0, 1])));
        assert!(!h.contains(&[frac(1, 4), int(0)]));
        assert!(matches!(ShiftLattice::new(&[ints(&[0, 0])]), Err(Error::DegenerateLattice)));
    }

    #[test]
    fn round_trips() {
        let o = OgzGenerators::new(&[1, 2], int(1)).unwrap();
        let g = o.group.clone();
        let lat = ShiftLattice::from_generators(&o.all()).unwrap();
        assert_eq!(lat.rank(), 1);
        let v = ints(&[0, 2, 2]);
        let stab = lattice_stabilizer(&g, &v, &lat).unwrap();
        assert_eq!(stab.order(), g.order());
        let x = |i| Polynomial::var(g.layout(), i);
        let f = InvariantGerm::polynomial(&g, &v, &x(1) * &x(2)).unwrap().expand(&g);
        let f2 = InvariantGerm::polynomial(&g, &ints(&[3, 2, 2]), x(0)).unwrap().expand(&g);
        let f = f.plus(&f2);
        // G_{ℷv} = G: π_G is the identity and π_G⁻¹ undoes it
        assert_eq!(pi_g(&f, &v, &lat), f);
        assert_eq!(pi_g_inverse(&g, &pi_g(&f, &v, &lat), &v, &lat).unwrap(), f);
    }

    #[test]
    fn half_integral_orbit() {
        let o = OgzGenerators::new(&[1, 2], int(1)).unwrap();
        let g = o.group.clone();
        let lat = ShiftLattice::from_generators(&o.all()).unwrap();
        let v = vec![int(0), frac(1, 2), int(0)];
        let stab = lattice_stabilizer(&g, &v, &lat).unwrap();
        assert_eq!(stab.order(), 1);
        let x = |i| Polynomial::var(g.layout(), i);
        let f = InvariantGerm::polynomial(&g, &v, x(0)).unwrap().expand(&g);
        let pf = pi_g(&f, &v, &lat);
        assert_eq!(pf.len(), 1);
        assert_eq!(pi_g_inverse(&g, &pf, &v, &lat).unwrap(), f);
        for a in o.all() {
            let lhs = pi_g(&f.apply(&a).unwrap(), &v, &lat);
            let rhs = pf.apply(&a).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn trivial_subgroup_lacks_module_structure() {
        let o = OgzGenerators::new(&[2, 2], int(1)).unwrap();
        let g = o.group.clone();
        let one = Polynomial::one(g.layout());
        let f = GermSum::single(ints(&[0, 1, 0, 0]), one.into());
        assert!(matches!(validate_module_structure(&o.all(), std::slice::from_ref(&f)), Err(Error::ModuleStructureMissing(0))));
        let sym = symmetrize_over(&g, &g.whole(), &f);
        assert!(validate_module_structure(&o.all(), &[sym]).is_ok());
    }
}
