//! Constructors for Gelfand-Tsetlin type generators, standard elements and the
//! two kinds of divided-difference operators.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::ddiff::{divided_diff_action, divided_diff_word, poly_divided_diff_word};
use super::SkewElement;
use crate::arith::{int, Frf, Polynomial, Scalar, VariableLayout};
use crate::error::{show_point, Error, Result};
use crate::groups::{ReflectionGroup, RootSystem, Subgroup};

/// `∏_j (v_{k,1} − v_{r,j})` over all columns of row `r`.
fn row_product(layout: &VariableLayout, k: usize, r: usize) -> Polynomial {
    let lead = Polynomial::var(layout, layout.index(k, 0));
    layout
        .row_range(r)
        .fold(Polynomial::one(layout), |acc, j| &acc * &(&lead - &Polynomial::var(layout, j)))
}

/// `1 / ∏_{j ≥ 2} (v_{k,1} − v_{k,j})`.
fn row_vandermonde_inv(layout: &VariableLayout, k: usize) -> Frf {
    let lead = Polynomial::var(layout, layout.index(k, 0));
    layout.row_range(k).skip(1).fold(Frf::one(layout), |acc, j| {
        let d = Frf::from(&lead - &Polynomial::var(layout, j)).inv().expect("linear");
        &acc * &d
    })
}

fn delta_shift(layout: &VariableLayout, k: usize, a: &Scalar) -> Vec<Scalar> {
    let mut s = vec![Scalar::zero(); layout.dim()];
    s[layout.index(k, 0)] = a.clone();
    s
}

/// Coefficient `∏_{j}(v_{k1} − v_{r,j}) / ∏_{j≥2}(v_{k1} − v_{kj})`, with `r = None` for the empty product.
fn tableau_coeff(layout: &VariableLayout, k: usize, r: Option<usize>) -> Frf {
    let num = r.map_or_else(|| Polynomial::one(layout), |r| row_product(layout, k, r));
    row_vandermonde_inv(layout, k).mul_poly(&num)
}

/// Generators of `U(gl_n)` realized on the staircase layout `(1, 2, ..., n)`.
#[derive(Clone, Debug)]
pub struct GzGenerators {
    pub group: Arc<ReflectionGroup>,
    pub n: usize,
    /// `E_{ij}` keyed by one-based `(i, j)`.
    pub e: BTreeMap<(usize, usize), SkewElement>,
}

impl GzGenerators {
    /// `E_{k,k+1} = Σ g·(P φ_{δ^{k1}})` and `E_{k+1,k} = −Σ g·(Q φ_{−δ^{k1}})` with the tableau
    /// coefficients `P`, `Q`; `E_{kk} = Σ_i (v_{ki}−i+1) − Σ_i (v_{k−1,i}−i+1)`. Sums run over
    /// distinct translates. With `φ_ξ f = f(x − ξ)` these signs are the ones for which the
    /// gl_n relations hold.
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Config("gl_n generators need n >= 2".into()));
        }
        let rows: Vec<usize> = (1..=n).collect();
        let group = ReflectionGroup::generate(RootSystem::type_a_product(&rows)?)?;
        let layout = group.layout().clone();
        let mut e = BTreeMap::new();
        for k in 0..n - 1 {
            let up = tableau_coeff(&layout, k, Some(k + 1));
            let raise = SkewElement::term(&group, up, 0, delta_shift(&layout, k, &int(1))).orbit_sum();
            let down = tableau_coeff(&layout, k, k.checked_sub(1));
            let lower = -&SkewElement::term(&group, down, 0, delta_shift(&layout, k, &int(-1))).orbit_sum();
            e.insert((k + 1, k + 2), raise);
            e.insert((k + 2, k + 1), lower);
        }
        for k in 0..n {
            let mut h = Polynomial::zero(&layout);
            for (i, j) in layout.row_range(k).enumerate() {
                h = &(&h + &Polynomial::var(&layout, j)) - &Polynomial::constant(&layout, int(i as i64));
            }
            if k > 0 {
                for (i, j) in layout.row_range(k - 1).enumerate() {
                    h = &(&h - &Polynomial::var(&layout, j)) + &Polynomial::constant(&layout, int(i as i64));
                }
            }
            e.insert((k + 1, k + 1), SkewElement::poly(&group, h));
        }
        Ok(Self { group, n, e })
    }

    pub fn get(&self, i: usize, j: usize) -> &SkewElement {
        &self.e[&(i, j)]
    }

    /// Adds `E_{il}` for `|i − l| > 1` through `E_{il} = [E_{i,i+1}, E_{i+1,l}]` and
    /// `E_{li} = [E_{l,l−1}, E_{l−1,i}]`.
    pub fn with_commutators(mut self) -> Self {
        for gap in 2..self.n {
            for i in 1..=self.n - gap {
                let l = i + gap;
                let up = self.get(i, i + 1).commutator(self.get(i + 1, l));
                let down = self.get(l, l - 1).commutator(self.get(l - 1, i));
                self.e.insert((i, l), up);
                self.e.insert((l, i), down);
            }
        }
        self
    }
}

/// One failed relation `[E_ij, E_kl] = δ_jk E_il − δ_li E_kj`.
#[derive(Clone, Debug)]
pub struct RelationFailure {
    pub lhs: ((usize, usize), (usize, usize)),
    pub difference: SkewElement,
}

/// Checks every gl_n relation among the (completed) generators.
pub fn check_gl_relations(gens: &BTreeMap<(usize, usize), SkewElement>, n: usize) -> (usize, Vec<RelationFailure>) {
    let keys: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
    let group = gens.values().next().expect("nonempty").group().clone();
    let mut checked = 0;
    let mut failures = Vec::new();
    for (a, &(i, j)) in keys.iter().enumerate() {
        for &(k, l) in &keys[a + 1..] {
            checked += 1;
            let lhs = gens[&(i, j)].commutator(&gens[&(k, l)]);
            let mut rhs = SkewElement::zero(&group);
            if j == k {
                rhs = &rhs + &gens[&(i, l)];
            }
            if l == i {
                rhs = &rhs - &gens[&(k, j)];
            }
            let diff = &lhs - &rhs;
            if !diff.is_zero() {
                failures.push(RelationFailure { lhs: ((i, j), (k, l)), difference: diff });
            }
        }
    }
    (checked, failures)
}

/// Generators `E_k`, `F_k` for rows of arbitrary sizes.
#[derive(Clone, Debug)]
pub struct OgzGenerators {
    pub group: Arc<ReflectionGroup>,
    pub a: Scalar,
    pub e: Vec<SkewElement>,
    pub f: Vec<SkewElement>,
}

impl OgzGenerators {
    /// `E_k = Σ g·(∏_j(v_{k1}−v_{k+1,j}) / ∏_{j≥2}(v_{k1}−v_{kj}) φ_{aδ^{k1}})` and `F_k` with
    /// row `k−1` in the numerator and shift `−aδ^{k1}`; sums over distinct translates.
    pub fn new(rows: &[usize], a: Scalar) -> Result<Self> {
        if rows.is_empty() || a.is_zero() {
            return Err(Error::Config("row sizes must be nonempty and a nonzero".into()));
        }
        let group = ReflectionGroup::generate(RootSystem::type_a_product(rows)?)?;
        let layout = group.layout().clone();
        let mut e = Vec::new();
        let mut f = Vec::new();
        for k in 0..rows.len() - 1 {
            let up = tableau_coeff(&layout, k, Some(k + 1));
            e.push(SkewElement::term(&group, up, 0, delta_shift(&layout, k, &a)).orbit_sum());
            let down = tableau_coeff(&layout, k, k.checked_sub(1));
            f.push(SkewElement::term(&group, down, 0, delta_shift(&layout, k, &-&a)).orbit_sum());
        }
        Ok(Self { group, a, e, f })
    }

    /// `E_1, F_1, E_2, F_2, ...`.
    pub fn all(&self) -> Vec<SkewElement> {
        self.e.iter().zip(&self.f).flat_map(|(a, b)| [a.clone(), b.clone()]).collect()
    }
}

/// `Σ_{g∈G} g · (f φ_{a δ^{k1}})`.
pub fn standard_element(group: &Arc<ReflectionGroup>, f: Frf, k: usize, a: &Scalar) -> SkewElement {
    SkewElement::term(group, f, 0, delta_shift(group.layout(), k, a)).symmetrize()
}

/// One summand `(w, p, v)` of a type I or type II operator.
#[derive(Clone, Debug)]
pub struct DdPart {
    pub w: usize,
    pub p: Polynomial,
    pub v: Vec<Scalar>,
}

/// Checks that `G_v` is parabolic, `p` is `G_v`-invariant and `w` is the longest element of
/// `(G/G_v)^short`.
pub fn validate_part(group: &ReflectionGroup, part: &DdPart) -> Result<Subgroup> {
    let stab = group.stabilizer(&part.v);
    let j = group.parabolic_type(&stab).ok_or_else(|| Error::NotParabolicStabilizer(show_point(&part.v)))?;
    for s in j {
        if group.act_poly(group.simple_reflection(s), &part.p) != part.p {
            return Err(Error::NotInvariantCoefficient);
        }
    }
    if group.longest_short_rep(&stab)? != part.w {
        return Err(Error::WrongLongestElement);
    }
    Ok(stab)
}

/// `Σ_i ∂_{w_i} ∘ p_i φ_{v_i}`.
pub fn build_type_i(group: &Arc<ReflectionGroup>, parts: &[DdPart]) -> Result<SkewElement> {
    let mut acc = SkewElement::zero(group);
    for part in parts {
        validate_part(group, part)?;
        let x = SkewElement::term(group, part.p.clone().into(), 0, part.v.clone());
        acc = &acc + &(&divided_diff_word(group, part.w) * &x);
    }
    Ok(acc)
}

/// `Σ_i ∂_{w_i} · p_i φ_{v_i}`, with `·` the conjugation action.
pub fn build_type_ii(group: &Arc<ReflectionGroup>, parts: &[DdPart]) -> Result<SkewElement> {
    let mut acc = SkewElement::zero(group);
    for part in parts {
        validate_part(group, part)?;
        let x = SkewElement::term(group, part.p.clone().into(), 0, part.v.clone());
        acc = &acc + &divided_diff_action(group, part.w, &x);
    }
    Ok(acc)
}

/// `Δ_H = ∏ γ_x` over the positive roots whose reflections lie in `h`.
pub fn partial_delta(group: &ReflectionGroup, h: &Subgroup) -> Polynomial {
    let rs = group.root_system();
    rs.positive_roots()
        .iter()
        .filter(|x| h.contains(group.reflection(x)))
        .fold(Polynomial::one(group.layout()), |acc, x| &acc * &rs.gamma_poly(x))
}

/// `1/Δ` as a product of normalized forms.
pub fn delta_inverse(group: &ReflectionGroup) -> Frf {
    let rs = group.root_system();
    rs.positive_roots().iter().fold(Frf::one(group.layout()), |acc, x| {
        let (s, l) = rs.gamma_form(x);
        &acc * &Frf::recip_form(group.layout(), &l).scale(&s.recip())
    })
}

/// `Σ_{τ∈G} τ · (Δ_v/Δ · p φ_v)` with `Δ_v` the root product of `G_v`.
pub fn structure_element(group: &Arc<ReflectionGroup>, v: &[Scalar], p: &Polynomial) -> Result<SkewElement> {
    let stab = group.stabilizer(v);
    let j = group.parabolic_type(&stab).ok_or_else(|| Error::NotParabolicStabilizer(show_point(v)))?;
    for s in j {
        if group.act_poly(group.simple_reflection(s), p) != *p {
            return Err(Error::NotInvariantCoefficient);
        }
    }
    let coeff = delta_inverse(group).mul_poly(&(&partial_delta(group, &stab) * p));
    Ok(SkewElement::term(group, coeff, 0, v.to_vec()).symmetrize())
}

/// `∂_{w′₀} Δ_v`, the scalar relating the symmetrized and divided-difference forms.
pub fn structure_scalar(group: &ReflectionGroup, v: &[Scalar]) -> Scalar {
    let stab = group.stabilizer(v);
    let w = group.longest_in(&stab);
    poly_divided_diff_word(group, w, &partial_delta(group, &stab))
        .as_constant()
        .expect("top divided difference of the root product is constant")
}
