//! Fibers, basis functionals and the two computations of the action on `M*`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::germ::{apply_operator_to_germ, InvariantGerm, Point};
use super::sample::reynolds;
use super::schubert::{functional_value, FunctionalConvention, Schubert};
use super::vector::{FiberClass, FiberVector, FunctionalBasisElement, FunctionalVector};
use crate::arith::{linalg, Frf, Polynomial, Scalar};
use crate::error::{show_point, Error, Result};
use crate::groups::{ReflectionGroup, Subgroup};
use crate::skew::{delta_inverse, partial_delta, poly_divided_diff_word, SkewElement};

/// Dual probes at the origin for one parabolic stabilizer: `α_u(dual[k]) = δ_{u, reps[k]}`.
#[derive(Clone, Debug)]
pub struct ProbeSet {
    pub reps: Vec<usize>,
    pub dual: Vec<Polynomial>,
}

pub struct ModuleEngine {
    group: Arc<ReflectionGroup>,
    convention: FunctionalConvention,
    schubert: OnceLock<Schubert>,
    probes: Mutex<HashMap<Vec<usize>, Arc<ProbeSet>>>,
}

/// Result of iterating invariant multiplication operators on one functional.
#[derive(Clone, Debug)]
pub struct HarishChandraReport {
    pub span_dims: Vec<usize>,
    pub fiber_dim: usize,
    pub bound: usize,
    pub stabilized: bool,
}

impl HarishChandraReport {
    pub fn holds(&self) -> bool {
        self.stabilized && self.span_dims.iter().all(|&d| d <= self.bound)
    }
}

fn sub(a: &[Scalar], b: &[Scalar]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn neg(a: &[Scalar]) -> Point {
    a.iter().map(|x| -x).collect()
}

/// `f / Δ_H`.
fn div_root_product(group: &ReflectionGroup, h: &Subgroup, f: Frf) -> Frf {
    let rs = group.root_system();
    rs.positive_roots().iter().filter(|x| h.contains(group.reflection(x))).fold(f, |acc, x| {
        let (s, l) = rs.gamma_form(x);
        acc.div_form(&l).scale(&s.recip())
    })
}

fn intersect(a: &Subgroup, b: &Subgroup) -> Vec<usize> {
    a.elements().iter().copied().filter(|&g| b.contains(g)).collect()
}

impl ModuleEngine {
    pub fn new(group: Arc<ReflectionGroup>) -> Self {
        Self::with_convention(group, FunctionalConvention::default())
    }

    pub fn with_convention(group: Arc<ReflectionGroup>, convention: FunctionalConvention) -> Self {
        Self { group, convention, schubert: OnceLock::new(), probes: Mutex::new(HashMap::new()) }
    }

    pub fn group(&self) -> &Arc<ReflectionGroup> {
        &self.group
    }

    pub fn convention(&self) -> FunctionalConvention {
        self.convention
    }

    pub fn schubert(&self) -> &Schubert {
        self.schubert.get_or_init(|| Schubert::new(&self.group))
    }

    pub fn norm(&self, w: usize) -> Scalar {
        self.schubert().norm(&self.group, w).clone()
    }

    /// Shortest coset representatives for the stabilizer of a parabolic representative.
    pub fn fiber_basis(&self, base: &[Scalar]) -> Result<Vec<usize>> {
        Ok(self.probe_set(base)?.reps.clone())
    }

    /// Probe duals for the stabilizer of `base`; trivial stabilizers use `𝒫_u / c_u` directly.
    pub fn probe_set(&self, base: &[Scalar]) -> Result<Arc<ProbeSet>> {
        let g = &self.group;
        let stab = g.stabilizer(base);
        let j = g.parabolic_type(&stab).ok_or_else(|| Error::NotParabolicStabilizer(show_point(base)))?;
        if let Some(p) = self.probes.lock().unwrap().get(&j) {
            return Ok(p.clone());
        }
        let reps = g.shortest_coset_reps(&stab)?;
        let sc = self.schubert();
        let origin = vec![Scalar::zero(); g.dim()];
        let set = if stab.order() == 1 {
            let dual = reps.iter().map(|&u| sc.poly(u).scale(&self.norm(u).recip())).collect();
            ProbeSet { reps, dual }
        } else {
            // greedy choice of symmetrized Schubert polynomials with independent pairings
            let d = reps.len();
            let mut chosen: Vec<Polynomial> = Vec::new();
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            let order: Vec<usize> = reps.iter().copied().chain(0..g.order()).collect();
            for w in order {
                if chosen.len() == d {
                    break;
                }
                let cand = reynolds(g, &stab, sc.poly(w));
                let row: Vec<Scalar> = reps
                    .iter()
                    .map(|&u| functional_value(g, u, &origin, &cand.clone().into()))
                    .collect::<Result<_>>()?;
                let mut trial = rows.clone();
                trial.push(row.clone());
                if linalg::rank(&trial) > rows.len() {
                    rows = trial;
                    chosen.push(cand);
                }
            }
            if chosen.len() < d {
                return Err(Error::NotParabolicStabilizer(show_point(base)));
            }
            // rows[k][i] = α_{reps[i]}(chosen[k]); dual_i = Σ_k chosen[k] X[k][i] with X = rows⁻¹
            let x = linalg::inverse(&rows).expect("full rank by construction");
            let dual = (0..d)
                .map(|i| {
                    (0..d).fold(Polynomial::zero(g.layout()), |acc, k| &acc + &chosen[k].scale(&x[i][k]))
                })
                .collect();
            ProbeSet { reps, dual }
        };
        let set = Arc::new(set);
        self.probes.lock().unwrap().insert(j, set.clone());
        Ok(set)
    }

    /// The functional label whose support is the parabolic representative of `q`'s orbit.
    pub fn label_for(&self, q: &[Scalar]) -> Result<Point> {
        let (rep, _) = self.group.parabolic_rep(q)?;
        Ok(self.convention.support(&rep))
    }

    fn support_checked(&self, f: &FunctionalBasisElement) -> Result<Point> {
        let xi = self.convention.support(&f.point);
        let (rep, _) = self.group.parabolic_rep(&xi)?;
        if rep != xi {
            return Err(Error::NotParabolicStabilizer(show_point(&f.point)));
        }
        if !self.probe_set(&xi)?.reps.contains(&f.w) {
            return Err(Error::WrongLongestElement);
        }
        Ok(xi)
    }

    /// The probe germ dual to `(base, reps[k])`.
    fn probe_germ(&self, base: &[Scalar], probes: &ProbeSet, k: usize) -> InvariantGerm {
        let rep: Frf = probes.dual[k].translate(&neg(base)).into();
        InvariantGerm::new(&self.group, base, rep).expect("probe germs are invariant")
    }

    /// `α(F)` for one basis functional; zero off the functional's orbit.
    pub fn evaluate(&self, f: &FunctionalBasisElement, germ: &InvariantGerm) -> Result<Scalar> {
        let xi = self.support_checked(f)?;
        match germ.germ_at(&self.group, &xi) {
            Some(h) => functional_value(&self.group, f.w, &xi, &h),
            None => Ok(Scalar::zero()),
        }
    }

    /// Schubert coordinates `α_w(F)/c_w` over `(G/G_ξ)^short`.
    pub fn reduce_to_fiber(&self, germ: &InvariantGerm) -> Result<FiberClass> {
        let base = germ.base();
        let probes = self.probe_set(base)?;
        let mut coords = BTreeMap::new();
        for &u in &probes.reps {
            let v = functional_value(&self.group, u, base, germ.rep())? / self.norm(u);
            if !v.is_zero() {
                coords.insert(u, v);
            }
        }
        Ok(FiberClass { point: base.clone(), coords })
    }

    /// An invariant germ reducing to `class`.
    pub fn lift(&self, class: &FiberClass) -> Result<InvariantGerm> {
        let base = &class.point;
        let probes = self.probe_set(base)?;
        let mut p = Polynomial::zero(self.group.layout());
        for (k, u) in probes.reps.iter().enumerate() {
            if let Some(c) = class.coords.get(u) {
                p = &p + &probes.dual[k].scale(&(c * self.norm(*u)));
            }
        }
        InvariantGerm::polynomial(&self.group, base, p.translate(&neg(base)))
    }

    /// `f ∘ A` expanded in basis functionals by pairing against dual probe germs at every
    /// source orbit.
    pub fn act_on_functional(&self, a: &SkewElement, f: &FunctionalBasisElement) -> Result<FunctionalVector> {
        let g = &self.group;
        let xi = self.support_checked(f)?;
        let mut sources = BTreeSet::new();
        for (h, zeta, _) in a.terms() {
            let q = g.act_point(g.inv(h), &sub(&xi, zeta));
            sources.insert(g.parabolic_rep(&q)?.0);
        }
        let mut jobs = Vec::new();
        for q in sources {
            let probes = self.probe_set(&q)?;
            for k in 0..probes.reps.len() {
                jobs.push((q.clone(), probes.clone(), k));
            }
        }
        let values: Vec<(FunctionalBasisElement, Scalar)> = jobs
            .par_iter()
            .map(|(q, probes, k)| {
                let germ = self.probe_germ(q, probes, *k);
                let h = germ.apply_at(g, a, &xi)?;
                let v = functional_value(g, f.w, &xi, &h)?;
                Ok((FunctionalBasisElement { point: self.convention.support(q), w: probes.reps[*k] }, v))
            })
            .collect::<Result<_>>()?;
        let mut out = FunctionalVector::new();
        for (b, v) in values {
            out.add(b, v);
        }
        Ok(out)
    }

    pub fn act_on_functional_vector(&self, a: &SkewElement, v: &FunctionalVector) -> Result<FunctionalVector> {
        let mut out = FunctionalVector::new();
        for (f, c) in v.iter() {
            out = out.plus(&self.act_on_functional(a, f)?.scale(c));
        }
        Ok(out)
    }

    /// Lift each class, apply `A`, reduce again.
    pub fn act_on_fiber_vector(&self, a: &SkewElement, m: &FiberVector) -> Result<FiberVector> {
        let mut out = FiberVector::new();
        for class in m.classes() {
            let germ = self.lift(&class)?;
            for h in apply_operator_to_germ(&self.group, a, &germ)? {
                out.add_class(&self.reduce_to_fiber(&h)?);
            }
        }
        Ok(out)
    }

    /// `⟨α, m⟩` with `α_w(class) = coords[w] · c_w`.
    pub fn pair(&self, alpha: &FunctionalVector, m: &FiberVector) -> Scalar {
        let mut acc = Scalar::zero();
        for (f, c) in alpha.iter() {
            let xi = self.convention.support(&f.point);
            if let Some(coords) = m.class_at(&xi) {
                if let Some(x) = coords.get(&f.w) {
                    acc += c * x * self.norm(f.w);
                }
            }
        }
        acc
    }

    /// `f ∘ Σ_τ τ·(Δ_v/Δ · p φ_v)` through the expansion
    /// `Σ_s a_s ev₀ ∘ ∂_w ∘ ∂_{w_s} ∘ (φ_ξ t_s) φ_{ξ−v_s}` over right cosets `G_ξ τ_s`,
    /// without forming the operator.
    pub fn act_on_functional_structure(&self, v: &[Scalar], p: &Polynomial, f: &FunctionalBasisElement) -> Result<FunctionalVector> {
        let g = &self.group;
        let xi = self.support_checked(f)?;
        let gv = g.stabilizer(v);
        let jv = g.parabolic_type(&gv).ok_or_else(|| Error::NotParabolicStabilizer(show_point(v)))?;
        for s in jv {
            if g.act_poly(g.simple_reflection(s), p) != *p {
                return Err(Error::NotInvariantCoefficient);
            }
        }
        let gp = g.stabilizer(&xi);
        let w0p = g.longest_in(&gp);
        let delta_v = partial_delta(g, &gv);
        let delta_p = partial_delta(g, &gp);
        let base_coeff = delta_inverse(g).mul_poly(&delta_p);

        struct Coset {
            vs: Point,
            a: Scalar,
            ws: usize,
            t: Frf,
        }
        let mut seen = vec![false; g.order()];
        let mut cosets = Vec::new();
        for tau in 0..g.order() {
            if seen[tau] {
                continue;
            }
            let members: Vec<usize> = gp.elements().iter().map(|&h| g.mul(h, tau)).collect();
            for &m in &members {
                seen[m] = true;
            }
            let (tau_s, ks) = members
                .iter()
                .find_map(|&t| {
                    let vs = g.act_point(t, v);
                    let ks = g.subgroup_from_elements(intersect(&gp, &g.stabilizer(&vs))).ok()?;
                    g.parabolic_type(&ks).map(|_| (t, ks))
                })
                .ok_or_else(|| Error::NotParabolicStabilizer(show_point(v)))?;
            let vs = g.act_point(tau_s, v);
            let delta_s = partial_delta(g, &ks);
            let a = poly_divided_diff_word(g, g.longest_in(&ks), &delta_s).as_constant().expect("constant");
            let ws = g.mul(w0p, g.longest_in(&ks));
            let sign = if g.length(tau_s).is_multiple_of(2) { Scalar::one() } else { -Scalar::one() };
            let num = &g.act_poly(tau_s, &delta_v) * &g.act_poly(tau_s, p);
            let t = div_root_product(g, &ks, base_coeff.mul_poly(&num)).scale(&sign);
            cosets.push(Coset { vs, a, ws, t });
        }

        let mut sources = BTreeSet::new();
        for c in &cosets {
            sources.insert(g.parabolic_rep(&sub(&xi, &c.vs))?.0);
        }
        let mut out = FunctionalVector::new();
        for q in sources {
            let probes = self.probe_set(&q)?;
            for k in 0..probes.reps.len() {
                let germ = self.probe_germ(&q, &probes, k);
                let mut total = Scalar::zero();
                for c in &cosets {
                    let word = g.mul(f.w, c.ws);
                    let d = g.length(f.w) + g.length(c.ws);
                    if g.length(word) != d {
                        continue;
                    }
                    let src = sub(&xi, &c.vs);
                    let Some(fq) = germ.germ_at(g, &src) else { continue };
                    let d = d as u32;
                    let jet = c.t.taylor(&xi, d)?.mul_truncated(&fq.taylor(&src, d)?, d).homogeneous_part(d);
                    let val = poly_divided_diff_word(g, word, &jet).as_constant().expect("degree drops to zero");
                    total += &c.a * val;
                }
                out.add(FunctionalBasisElement { point: self.convention.support(&q), w: probes.reps[k] }, total);
            }
        }
        Ok(out)
    }

    /// Iterates `b·id` on `f` for each sampled invariant and records the dimension at which the
    /// span stops growing.
    pub fn check_harish_chandra(&self, f: &FunctionalBasisElement, sample: &[Polynomial]) -> Result<HarishChandraReport> {
        let xi = self.support_checked(f)?;
        let fiber_dim = self.probe_set(&xi)?.reps.len();
        let bound = self.group.order();
        let mut span_dims = Vec::new();
        let mut stabilized = true;
        for b in sample {
            let op = SkewElement::poly(&self.group, b.clone());
            let mut span = vec![FunctionalVector::basis(f.clone())];
            let mut cur = span[0].clone();
            let mut done = false;
            for _ in 0..=bound {
                cur = self.act_on_functional_vector(&op, &cur)?;
                span.push(cur.clone());
                let r = span_rank(&span);
                if r < span.len() {
                    span.pop();
                    done = true;
                    break;
                }
            }
            stabilized &= done;
            span_dims.push(span.len());
        }
        Ok(HarishChandraReport { span_dims, fiber_dim, bound, stabilized })
    }
}

fn span_rank(vs: &[FunctionalVector]) -> usize {
    let keys: BTreeSet<&FunctionalBasisElement> = vs.iter().flat_map(|v| v.iter().map(|(k, _)| k)).collect();
    let rows: Vec<Vec<Scalar>> = vs.iter().map(|v| keys.iter().map(|k| v.get(k)).collect()).collect();
    linalg::rank(&rows)
}
