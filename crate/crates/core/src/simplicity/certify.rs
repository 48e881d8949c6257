//! Window certificates for irreducibility and for the canonical module.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::Zero;
use serde::Serialize;

use super::graph::{build_gamma_regular, build_gamma_singular, singular_setup, window_points, GammaGraph, GraphMode};
use crate::arith::scalar::to_reprs;
use crate::arith::{linalg, Polynomial, Scalar, ScalarRepr};
use crate::error::{show_point, Result};
use crate::groups::ReflectionGroup;
use crate::modules::{InvariantGerm, ModuleEngine, Point, ShiftLattice};
use crate::modules::sample::reynolds;
use crate::skew::SkewElement;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "witness", rename_all = "lowercase")]
pub enum Condition {
    Pass,
    Fail(String),
    Inconclusive(String),
}

impl Condition {
    pub fn passed(&self) -> bool {
        matches!(self, Self::Pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedOnWindow,
    Inconclusive,
    Violated,
}

#[derive(Clone, Debug, Serialize)]
pub struct SimplicityReport {
    pub radius: u32,
    pub mode: GraphMode,
    pub vertices: usize,
    pub edges: usize,
    pub conditions: BTreeMap<String, Condition>,
    pub sccs: Vec<Vec<Vec<ScalarRepr>>>,
    pub strongly_connected: bool,
    pub verdict: Verdict,
}

fn sccs_as_points(g: &GammaGraph) -> Vec<Vec<Vec<ScalarRepr>>> {
    g.sccs().into_iter().map(|c| c.into_iter().map(|i| to_reprs(&g.vertices[i])).collect()).collect()
}

/// `G`-symmetrized monomials of degree `1..=max_degree`.
pub fn symmetrized_monomials(group: &ReflectionGroup, max_degree: u32) -> Vec<Polynomial> {
    let l = group.layout();
    let n = l.dim();
    let whole = group.whole();
    let mut out: Vec<Polynomial> = Vec::new();
    let mut frontier: Vec<Vec<u16>> = vec![vec![0; n]];
    for _ in 0..max_degree {
        let mut next = BTreeSet::new();
        for e in &frontier {
            for i in 0..n {
                let mut e2 = e.clone();
                e2[i] += 1;
                next.insert(e2);
            }
        }
        for e in &next {
            let m = Polynomial::from_terms(l, vec![(e.clone(), Scalar::from_integer(1.into()))]).expect("valid");
            let s = reynolds(group, &whole, &m);
            if !out.contains(&s) {
                out.push(s);
            }
        }
        frontier = next.into_iter().collect();
    }
    out
}

/// Pairs of points not separated by any symmetrized monomial up to the cap.
fn separation(group: &ReflectionGroup, points: &[Point], cap: u32) -> Condition {
    let probes = symmetrized_monomials(group, cap);
    let mut seen: BTreeMap<Vec<Scalar>, &Point> = BTreeMap::new();
    for p in points {
        let sig: Vec<Scalar> = probes.iter().map(|q| q.eval(p).expect("dimension")).collect();
        if let Some(prev) = seen.insert(sig, p) {
            return Condition::Inconclusive(format!(
                "({}) and ({}) agree on all symmetrized monomials of degree <= {cap}",
                show_point(prev).join(","),
                show_point(p).join(",")
            ));
        }
    }
    Condition::Pass
}

/// Every `±b_j` is a sum of at most `max_len` generator shifts.
fn monoid_generation(lattice: &ShiftLattice, shifts: &[Point], max_len: usize) -> Condition {
    let coords: Vec<Vec<Scalar>> = shifts.iter().filter_map(|s| lattice.coordinates(s)).collect();
    let r = lattice.rank();
    let mut reached: HashSet<Vec<Scalar>> = HashSet::new();
    let mut frontier = vec![vec![Scalar::zero(); r]];
    reached.insert(frontier[0].clone());
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for c in &coords {
                let q: Vec<Scalar> = p.iter().zip(c).map(|(a, b)| a + b).collect();
                if reached.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    for j in 0..r {
        for sign in [1i64, -1] {
            let mut e = vec![Scalar::zero(); r];
            e[j] = Scalar::from_integer(sign.into());
            if !reached.contains(&e) {
                let b: Vec<Scalar> = lattice.basis()[j].iter().map(|x| x * Scalar::from_integer(sign.into())).collect();
                return Condition::Fail(format!("({}) is not a sum of at most {max_len} shifts", show_point(&b).join(",")));
            }
        }
    }
    Condition::Pass
}

/// No coefficient vanishes at a window point.
fn no_zeros(generators: &[SkewElement], points: &[Point]) -> Result<Condition> {
    for (i, a) in generators.iter().enumerate() {
        for (_, shift, f) in a.terms() {
            if shift.iter().all(|s| s.is_zero()) {
                continue;
            }
            for p in points {
                let val = f.eval(p).map_err(|_| crate::error::Error::PoleOnOrbit(show_point(p)))?;
                if val.is_zero() {
                    return Ok(Condition::Fail(format!("generator {i} coefficient vanishes at ({})", show_point(p).join(","))));
                }
            }
        }
    }
    Ok(Condition::Pass)
}

fn shifts_of(generators: &[SkewElement]) -> Vec<Point> {
    generators
        .iter()
        .flat_map(|a| a.terms().map(|(_, s, _)| s.clone()).collect::<Vec<_>>())
        .filter(|s| s.iter().any(|x| !x.is_zero()))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Separation, monoid generation and absence of zeros on the window, plus strong connectivity.
pub fn check_regular_conditions(generators: &[SkewElement], v: &[Scalar], radius: u32) -> Result<SimplicityReport> {
    let graph = build_gamma_regular(generators, v, radius)?;
    let group = generators[0].group().clone();
    let lattice = ShiftLattice::from_generators(generators)?;
    let points = window_points(&lattice, v, radius);
    let mut conditions = BTreeMap::new();
    conditions.insert("separation".into(), separation(&group, &points, 3));
    let max_len = (2 * radius as usize * lattice.rank()).max(1);
    conditions.insert("monoid_generation".into(), monoid_generation(&lattice, &shifts_of(generators), max_len));
    conditions.insert("no_zeros".into(), no_zeros(generators, &points)?);
    let strongly_connected = graph.is_strongly_connected();
    conditions.insert(
        "strongly_connected".into(),
        if strongly_connected { Condition::Pass } else { Condition::Fail(format!("{} components", graph.sccs().len())) },
    );
    let verdict = verdict_of(&conditions);
    Ok(SimplicityReport {
        radius,
        mode: GraphMode::Regular,
        vertices: graph.vertices.len(),
        edges: graph.edges.len(),
        sccs: sccs_as_points(&graph),
        strongly_connected,
        conditions,
        verdict,
    })
}

fn verdict_of(conditions: &BTreeMap<String, Condition>) -> Verdict {
    if conditions.values().any(|c| matches!(c, Condition::Fail(_))) {
        Verdict::Violated
    } else if conditions.values().all(Condition::passed) {
        Verdict::CertifiedOnWindow
    } else {
        Verdict::Inconclusive
    }
}

/// The fiber of `M(K, ·)` at `ξ` is spanned by classes of `K`-invariants times the constant.
fn fiber_cyclic(k: &std::sync::Arc<ReflectionGroup>, xi: &[Scalar]) -> Result<Condition> {
    let engine = ModuleEngine::new(k.clone());
    let (base, _) = k.parabolic_rep(xi)?;
    let dim = engine.fiber_basis(&base)?.len();
    let cap = k.root_system().positive_roots().len() as u32 + 1;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let reps = engine.fiber_basis(&base)?;
    let mut sample = vec![Polynomial::one(k.layout())];
    sample.extend(symmetrized_monomials(k, cap));
    for b in sample {
        let germ = InvariantGerm::polynomial(k, &base, b)?;
        let class = engine.reduce_to_fiber(&germ)?;
        rows.push(reps.iter().map(|u| class.coords.get(u).cloned().unwrap_or_else(Scalar::zero)).collect());
        if linalg::rank(&rows) == dim {
            return Ok(Condition::Pass);
        }
    }
    Ok(Condition::Inconclusive(format!(
        "sampled invariants span {} of {dim} fiber dimensions at ({})",
        linalg::rank(&rows),
        show_point(xi).join(",")
    )))
}

/// Builds the singular graph, checks separation and fiber cyclicity on the window, and asks
/// for every vertex to be reachable from the vertex of `v`.
pub fn certify_canonical_module(generators: &[SkewElement], v: &[Scalar], radius: u32) -> Result<SimplicityReport> {
    let graph = build_gamma_singular(generators, v, radius)?;
    let group = generators[0].group().clone();
    let setup = singular_setup(generators, v)?;
    let mut conditions = BTreeMap::new();
    conditions.insert("separation".into(), separation(&group, &graph.vertices, 3));

    let cyclic = match group.reflection_subgroup(&setup.k) {
        Ok(k) => {
            let mut c = Condition::Pass;
            for xi in &graph.vertices {
                c = fiber_cyclic(&k, xi)?;
                if !c.passed() {
                    break;
                }
            }
            c
        }
        Err(_) => Condition::Inconclusive("G_{ℷv} is not generated by reflections".into()),
    };
    conditions.insert("fiber_cyclic".into(), cyclic);

    let start = graph.vertex_index(&super::graph::orbit_rep(&group, &setup.k, v)).expect("v lies in its window");
    let reach = if graph.edges.is_empty() {
        Condition::Inconclusive("no edges inside the window".into())
    } else {
        let seen = graph.reachable_from(start);
        match seen.iter().position(|s| !s) {
            Some(i) => Condition::Fail(format!("({}) is unreachable from v", show_point(&graph.vertices[i]).join(","))),
            None => Condition::Pass,
        }
    };
    conditions.insert("reachable_from_v".into(), reach);
    let strongly_connected = graph.is_strongly_connected();
    let verdict = verdict_of(&conditions);
    Ok(SimplicityReport {
        radius,
        mode: GraphMode::Singular,
        vertices: graph.vertices.len(),
        edges: graph.edges.len(),
        sccs: sccs_as_points(&graph),
        strongly_connected,
        conditions,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{frac, int, ints, Frf};
    use crate::groups::RootSystem;
    use crate::skew::OgzGenerators;

    fn trivial(n: usize) -> std::sync::Arc<ReflectionGroup> {
        ReflectionGroup::generate(RootSystem::type_a_product(&vec![1; n]).unwrap()).unwrap()
    }

    #[test]
    fn one_sided_shifts_fail_monoid_generation() {
        let g = trivial(1);
        let up = SkewElement::translation(&g, ints(&[1]));
        let r = check_regular_conditions(&[up], &ints(&[0]), 2).unwrap();
        assert!(matches!(r.conditions["monoid_generation"], Condition::Fail(_)));
        assert_eq!(r.verdict, Verdict::Violated);
    }

    #[test]
    fn ogz_generic_point_certified() {
        let o = OgzGenerators::new(&[1, 2], int(1)).unwrap();
        let v = vec![frac(1, 3), frac(1, 5), frac(2, 7)];
        let r = check_regular_conditions(&o.all(), &v, 3).unwrap();
        assert_eq!(r.verdict, Verdict::CertifiedOnWindow, "{:?}", r.conditions);
        let c = certify_canonical_module(&o.all(), &v, 3).unwrap();
        assert_eq!(c.verdict, Verdict::CertifiedOnWindow, "{:?}", c.conditions);
    }

    #[test]
    fn integer_root_breaks_no_zeros() {
        let g = trivial(1);
        let x = Polynomial::var(g.layout(), 0);
        let f: Frf = (&x - &Polynomial::constant(g.layout(), int(2))).into();
        let gens = [SkewElement::term(&g, f.clone(), 0, ints(&[1])), SkewElement::term(&g, f, 0, ints(&[-1]))];
        let r = check_regular_conditions(&gens, &ints(&[0]), 3).unwrap();
        match &r.conditions["no_zeros"] {
            Condition::Fail(w) => assert!(w.contains("(2)")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn disconnected_and_empty_windows() {
        let g = trivial(2);
        let gens = [SkewElement::translation(&g, ints(&[1, 0])), SkewElement::translation(&g, ints(&[0, 1]))];
        let r = certify_canonical_module(&gens, &ints(&[0, 0]), 1).unwrap();
        assert_eq!(r.verdict, Verdict::Violated);
        let r0 = certify_canonical_module(&gens, &ints(&[0, 0]), 0).unwrap();
        assert_eq!(r0.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn ogz_integral_point_reaches_window() {
        let o = OgzGenerators::new(&[1, 2], int(1)).unwrap();
        let v = ints(&[0, 0, 0]);
        let r = certify_canonical_module(&o.all(), &v, 3).unwrap();
        assert_eq!(r.conditions["reachable_from_v"], Condition::Pass, "{:?}", r);
    }
}
