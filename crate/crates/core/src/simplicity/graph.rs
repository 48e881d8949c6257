//! Γ-graphs on a lattice window around `v`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use petgraph::algo::tarjan_scc;
use petgraph::dot::{Config, Dot};
use petgraph::graph::{DiGraph, NodeIndex};
use petgraph::visit::Bfs;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::scalar::to_reprs;
use crate::arith::{fmt_scalar, Scalar, ScalarRepr};
use crate::error::{show_point, Error, Result};
use crate::groups::{ReflectionGroup, Subgroup};
use crate::modules::{lattice_stabilizer, InvariantGerm, Point, ShiftLattice};
use crate::arith::Polynomial;
use crate::skew::SkewElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphMode {
    Regular,
    Singular,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaEdge {
    pub from: usize,
    pub to: usize,
    pub generator: usize,
    pub shift: Point,
    pub value: Scalar,
}

/// Vertices are window points (regular) or `G_{ℷ·v}`-orbit representatives (singular), sorted.
#[derive(Clone, Debug)]
pub struct GammaGraph {
    pub mode: GraphMode,
    pub radius: u32,
    pub v: Point,
    pub vertices: Vec<Point>,
    pub edges: Vec<GammaEdge>,
}

#[derive(Serialize)]
struct EdgeJson {
    from: usize,
    to: usize,
    generator: usize,
    shift: Vec<ScalarRepr>,
    value: ScalarRepr,
}

#[derive(Serialize)]
struct GraphJson {
    mode: GraphMode,
    radius: u32,
    v: Vec<ScalarRepr>,
    vertices: Vec<Vec<ScalarRepr>>,
    edges: Vec<EdgeJson>,
}

/// All points `v + Σ c_j b_j` with `|c_j| ≤ R`.
pub fn window_points(lattice: &ShiftLattice, v: &[Scalar], radius: u32) -> Vec<Point> {
    let r = radius as i64;
    let rank = lattice.rank();
    let mut coords = vec![-r; rank];
    let mut out = Vec::new();
    loop {
        out.push(lattice.point(v, &coords));
        let mut i = 0;
        loop {
            if i == rank {
                out.sort();
                return out;
            }
            coords[i] += 1;
            if coords[i] <= r {
                break;
            }
            coords[i] = -r;
            i += 1;
        }
    }
}

pub fn in_window(lattice: &ShiftLattice, v: &[Scalar], radius: u32, x: &[Scalar]) -> bool {
    let d: Point = x.iter().zip(v).map(|(a, b)| a - b).collect();
    let bound = Scalar::from_integer((radius as i64).into());
    lattice
        .coordinates(&d)
        .is_some_and(|c| c.iter().all(|t| t <= &bound && t >= &-bound.clone()))
}

impl GammaGraph {
    pub fn to_petgraph(&self) -> DiGraph<String, String> {
        let mut g = DiGraph::new();
        let nodes: Vec<NodeIndex> = self
            .vertices
            .iter()
            .map(|p| g.add_node(format!("({})", show_point(p).join(","))))
            .collect();
        for e in &self.edges {
            g.add_edge(nodes[e.from], nodes[e.to], format!("A{}: {}", e.generator, fmt_scalar(&e.value)));
        }
        g
    }

    /// Strongly connected components, each sorted, listed in ascending order of their first vertex.
    pub fn sccs(&self) -> Vec<Vec<usize>> {
        let g = self.to_petgraph();
        let mut out: Vec<Vec<usize>> = tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|n| n.index()).collect();
                c.sort();
                c
            })
            .collect();
        out.sort();
        out
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.sccs().len() <= 1
    }

    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        let g = self.to_petgraph();
        let mut seen = vec![false; self.vertices.len()];
        let mut bfs = Bfs::new(&g, NodeIndex::new(start));
        while let Some(n) = bfs.next(&g) {
            seen[n.index()] = true;
        }
        seen
    }

    pub fn vertex_index(&self, p: &[Scalar]) -> Option<usize> {
        self.vertices.binary_search_by(|x| x.as_slice().cmp(p)).ok()
    }

    pub fn to_dot(&self) -> String {
        format!("{}", Dot::with_config(&self.to_petgraph(), &[Config::GraphContentOnly]))
            .lines()
            .fold(String::from("digraph gamma {\n"), |acc, l| acc + l + "\n")
            + "}\n"
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = GraphJson {
            mode: self.mode,
            radius: self.radius,
            v: to_reprs(&self.v),
            vertices: self.vertices.iter().map(|p| to_reprs(p)).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeJson {
                    from: e.from,
                    to: e.to,
                    generator: e.generator,
                    shift: to_reprs(&e.shift),
                    value: ScalarRepr(e.value.clone()),
                })
                .collect(),
        };
        serde_json::to_value(j).expect("serializable")
    }
}

fn add(a: &[Scalar], b: &[Scalar]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Edges `x → x + ξ` whenever a term `f φ_ξ` has `f(x + ξ) ≠ 0`, both ends in the window.
pub fn build_gamma_regular(generators: &[SkewElement], v: &[Scalar], radius: u32) -> Result<GammaGraph> {
    if generators.iter().any(|a| !a.is_pure_translation()) {
        return Err(Error::Config("the regular graph needs generators with trivial group parts".into()));
    }
    let lattice = ShiftLattice::from_generators(generators)?;
    let vertices = window_points(&lattice, v, radius);
    let index: BTreeMap<&Point, usize> = vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let per_vertex: Vec<Vec<GammaEdge>> = vertices
        .par_iter()
        .enumerate()
        .map(|(i, x)| {
            let mut out = Vec::new();
            for (gi, a) in generators.iter().enumerate() {
                for (_, shift, f) in a.terms() {
                    if shift.iter().all(|s| s.is_zero()) {
                        continue;
                    }
                    let y = add(x, shift);
                    let Some(&j) = index.get(&y) else { continue };
                    let value = f.eval(&y).map_err(|_| Error::PoleOnOrbit(show_point(&y)))?;
                    if !value.is_zero() {
                        out.push(GammaEdge { from: i, to: j, generator: gi, shift: shift.clone(), value });
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(GammaGraph { mode: GraphMode::Regular, radius, v: v.to_vec(), vertices, edges: per_vertex.into_iter().flatten().collect() })
}

/// Lexicographically smallest point of the `K`-orbit.
pub fn orbit_rep(group: &ReflectionGroup, k: &Subgroup, x: &[Scalar]) -> Point {
    k.elements().iter().map(|&g| group.act_point(g, x)).min().expect("nonempty subgroup")
}

/// Context shared by the singular graph and the certificate.
pub(crate) struct SingularSetup {
    pub lattice: ShiftLattice,
    pub k: Subgroup,
}

pub(crate) fn singular_setup(generators: &[SkewElement], v: &[Scalar]) -> Result<SingularSetup> {
    let group = generators.first().ok_or(Error::DegenerateLattice)?.group().clone();
    let lattice = ShiftLattice::from_generators(generators)?;
    let k = lattice_stabilizer(&group, v, &lattice)?;
    Ok(SingularSetup { lattice, k })
}

/// Vertices are `G_{ℷ·v}`-orbits meeting the window; `ξ̄ → η̄` when `A(1 at ξ̄)` is nonzero at `η`.
pub fn build_gamma_singular(generators: &[SkewElement], v: &[Scalar], radius: u32) -> Result<GammaGraph> {
    let group = generators.first().ok_or(Error::DegenerateLattice)?.group().clone();
    let SingularSetup { lattice, k } = singular_setup(generators, v)?;
    let vertices: Vec<Point> = window_points(&lattice, v, radius)
        .into_iter()
        .map(|x| orbit_rep(&group, &k, &x))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<&Point, usize> = vertices.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let one = Polynomial::one(group.layout());
    let per_vertex: Vec<Vec<GammaEdge>> = vertices
        .par_iter()
        .enumerate()
        .map(|(i, xi)| {
            let germ = InvariantGerm::polynomial(&group, xi, one.clone())?;
            let mut out = Vec::new();
            for (gi, a) in generators.iter().enumerate() {
                let mut targets = BTreeSet::new();
                for (q, _) in group.orbit(germ.base()) {
                    for (g, zeta, _) in a.terms() {
                        let y = add(&group.act_point(g, &q), zeta);
                        if lattice.same_coset(&y, v) {
                            targets.insert(orbit_rep(&group, &k, &y));
                        }
                    }
                }
                for eta in targets {
                    if &eta == xi {
                        continue;
                    }
                    let Some(&j) = index.get(&eta) else { continue };
                    let h = germ.apply_at(&group, a, &eta)?;
                    let value = h.eval(&eta)?;
                    if !value.is_zero() {
                        let shift = eta.iter().zip(xi).map(|(a, b)| a - b).collect();
                        out.push(GammaEdge { from: i, to: j, generator: gi, shift, value });
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(GammaGraph { mode: GraphMode::Singular, radius, v: v.to_vec(), vertices, edges: per_vertex.into_iter().flatten().collect() })
}
