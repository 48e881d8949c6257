//! Sparse multivariate polynomials with rational coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::affine::AffineLinearForm;
use super::layout::VariableLayout;
use super::linalg::{self, Matrix};
use super::scalar::{fmt_scalar, Scalar};
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub SmallVec<[u16; 10]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.0[i] = 1;
        m
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    layout: VariableLayout,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(layout: &VariableLayout) -> Self {
        Self { layout: layout.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(layout: &VariableLayout, c: Scalar) -> Self {
        let mut p = Self::zero(layout);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(layout.dim()), c);
        }
        p
    }

    pub fn one(layout: &VariableLayout) -> Self {
        Self::constant(layout, Scalar::one())
    }

    pub fn var(layout: &VariableLayout, i: usize) -> Self {
        let mut p = Self::zero(layout);
        p.terms.insert(Monomial::var(layout.dim(), i), Scalar::one());
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(layout: &VariableLayout, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u16>, Scalar)>,
    {
        let mut p = Self::zero(layout);
        for (e, c) in terms {
            if e.len() != layout.dim() {
                return Err(Error::DimensionMismatch { expected: layout.dim(), got: e.len() });
            }
            p.add_term(Monomial(e.into()), c);
        }
        Ok(p)
    }

    /// Linear polynomial `Σ c_i x_i + c0`.
    pub fn linear(layout: &VariableLayout, coeffs: &[Scalar], c0: &Scalar) -> Self {
        let mut p = Self::constant(layout, c0.clone());
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(layout.dim(), i), c.clone());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn layout(&self) -> &VariableLayout {
        &self.layout
    }

    pub fn nvars(&self) -> usize {
        self.layout.dim()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(&self.layout);
        }
        Self {
            layout: self.layout.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    fn check_layout(&self, other: &Self) {
        assert_eq!(self.layout, other.layout, "polynomial layouts differ");
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.layout);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: point.len() });
        }
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Product truncated to total degree `<= d`.
    pub fn mul_truncated(&self, other: &Self, d: u32) -> Self {
        self.check_layout(other);
        let mut out = Self::zero(&self.layout);
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            if d1 > d {
                break;
            }
            for (m2, c2) in &other.terms {
                if d1 + m2.degree() > d {
                    break;
                }
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn truncate(&self, d: u32) -> Self {
        Self {
            layout: self.layout.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() <= d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        Self {
            layout: self.layout.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Renames variables: the result is `p(x_{π(0)}, ..., x_{π(N-1)})`.
    pub fn permute_vars(&self, pi: &[usize]) -> Self {
        let n = self.nvars();
        let mut out = Self::zero(&self.layout);
        for (m, c) in &self.terms {
            let mut e = Monomial::one(n);
            for (i, &k) in m.exps().iter().enumerate() {
                e.0[pi[i]] = k;
            }
            out.terms.insert(e, c.clone());
        }
        out
    }

    /// `p(A x + b)`.
    pub fn pull_back(&self, a: &Matrix, b: &[Scalar]) -> Result<Self> {
        let n = self.nvars();
        if a.len() != n || b.len() != n || a.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: a.len().min(b.len()) });
        }
        let images: Vec<Polynomial> =
            (0..n).map(|i| Polynomial::linear(&self.layout, &a[i], &b[i])).collect();
        Ok(self.compose(&images))
    }

    /// Substitutes `x_i -> images[i]`.
    pub fn compose(&self, images: &[Polynomial]) -> Self {
        let n = self.nvars();
        let mut powers: Vec<Vec<Polynomial>> = (0..n).map(|_| vec![Polynomial::one(&self.layout)]).collect();
        let mut out = Self::zero(&self.layout);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&self.layout, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// `p(x + c)`.
    pub fn translate(&self, c: &[Scalar]) -> Self {
        let images: Vec<Polynomial> = (0..self.nvars())
            .map(|i| {
                let mut v = Polynomial::var(&self.layout, i);
                v.add_term(Monomial::one(self.nvars()), c[i].clone());
                v
            })
            .collect();
        if c.iter().all(|x| x.is_zero()) {
            return self.clone();
        }
        self.compose(&images)
    }

    /// The function `x -> p(map⁻¹ x − shift)`, i.e. `p` pushed forward along
    /// `x -> map (x + shift)`. Translation by `ξ` sends `f` to `f(x − ξ)`.
    pub fn substitute_affine(&self, map: &Matrix, shift: &[Scalar]) -> Result<Self> {
        let n = self.nvars();
        if map.len() != n || shift.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: map.len().min(shift.len()) });
        }
        let inv = linalg::inverse(map).ok_or(Error::SingularMatrix)?;
        let neg: Vec<Scalar> = shift.iter().map(|s| -s).collect();
        self.pull_back(&inv, &neg)
    }

    /// Exact quotient by an affine form, or `NotDivisible`.
    pub fn exact_divide(&self, l: &AffineLinearForm) -> Result<Self> {
        if l.nvars() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), got: l.nvars() });
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        // l = x_j + r with r free of x_0..x_j.
        let j = l.leading_index();
        let r = {
            let mut c = l.coeffs().to_vec();
            c[j] = Scalar::zero();
            Polynomial::linear(&self.layout, &c, l.constant())
        };
        // p = Σ_k a_k x_j^k with a_k free of x_j.
        let mut parts: Vec<Polynomial> = Vec::new();
        for (m, c) in &self.terms {
            let k = m.0[j] as usize;
            if parts.len() <= k {
                parts.resize(k + 1, Polynomial::zero(&self.layout));
            }
            let mut m2 = m.clone();
            m2.0[j] = 0;
            parts[k].add_term(m2, c.clone());
        }
        let d = parts.len() - 1;
        if d == 0 {
            return Err(Error::NotDivisible);
        }
        // b_{d-1} = a_d, b_{k-1} = a_k - r b_k, remainder a_0 - r b_0.
        let mut b: Vec<Polynomial> = vec![Polynomial::zero(&self.layout); d];
        b[d - 1] = parts[d].clone();
        for k in (1..d).rev() {
            b[k - 1] = &parts[k] - &(&r * &b[k]);
        }
        let rem = &parts[0] - &(&r * &b[0]);
        if !rem.is_zero() {
            return Err(Error::NotDivisible);
        }
        let mut q = Polynomial::zero(&self.layout);
        for (k, bk) in b.into_iter().enumerate() {
            for (m, c) in bk.terms {
                let mut m2 = m;
                m2.0[j] += k as u16;
                q.add_term(m2, c);
            }
        }
        Ok(q)
    }

    /// Returns `(scale, form)` with `self = scale · form` if `self` has degree exactly 1.
    pub fn as_affine(&self) -> Option<(Scalar, AffineLinearForm)> {
        if self.total_degree() != Some(1) {
            return None;
        }
        let n = self.nvars();
        let mut coeffs = vec![Scalar::zero(); n];
        let mut c0 = Scalar::zero();
        for (m, c) in &self.terms {
            if m.degree() == 0 {
                c0 = c.clone();
            } else {
                let i = m.exps().iter().position(|&e| e == 1).unwrap();
                coeffs[i] = c.clone();
            }
        }
        AffineLinearForm::normalized(coeffs, c0)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_layout(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_layout(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_layout(rhs);
        let mut out = Polynomial::zero(&self.layout);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Scalar::zero();
            let a = if neg { -c } else { c.clone() };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let vars: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let v = self.layout.var_name(i);
                    if e == 1 { v } else { format!("{v}^{e}") }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{}", fmt_scalar(&a))?;
            } else if a.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_scalar(&a), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::{int, ints};

    fn l2() -> VariableLayout {
        VariableLayout::flat(2)
    }

    fn x(i: usize) -> Polynomial {
        Polynomial::var(&l2(), i)
    }

    fn form(c: &[i64], c0: i64) -> AffineLinearForm {
        AffineLinearForm::normalized(ints(c), int(c0)).unwrap().1
    }

    #[test]
    fn grlex_order() {
        let a = Monomial(SmallVec::from_slice(&[2, 0]));
        let b = Monomial(SmallVec::from_slice(&[1, 1]));
        let c = Monomial(SmallVec::from_slice(&[0, 3]));
        assert!(a > b);
        assert!(c > a);
    }

    #[test]
    fn difference_of_squares_divides() {
        let p = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        let q = p.exact_divide(&form(&[1, -1], 0)).unwrap();
        assert_eq!(q, &x(0) + &x(1));
    }

    #[test]
    fn self_division_is_one() {
        let p = &x(0) - &x(1);
        assert_eq!(p.exact_divide(&form(&[1, -1], 0)).unwrap(), Polynomial::one(&l2()));
    }

    #[test]
    fn non_divisible_case() {
        let p = &(&x(0) * &x(1)) + &Polynomial::one(&l2());
        assert!(matches!(p.exact_divide(&form(&[1, -1], 0)), Err(Error::NotDivisible)));
        assert!(matches!(Polynomial::one(&l2()).exact_divide(&form(&[1, 0], 0)), Err(Error::NotDivisible)));
    }

    #[test]
    fn divide_by_shifted_form() {
        // (x1 - x2 - 1)(x1 + 3 x2) / (x1 - x2 - 1)
        let l = &(&x(0) - &x(1)) - &Polynomial::one(&l2());
        let m = &x(0) + &x(1).scale(&int(3));
        let q = (&l * &m).exact_divide(&form(&[1, -1], -1)).unwrap();
        assert_eq!(q, m);
    }

    #[test]
    fn substitution_examples() {
        let swap = vec![ints(&[0, 1]), ints(&[1, 0])];
        let id = linalg::identity(2);
        assert_eq!(x(0).substitute_affine(&swap, &ints(&[0, 0])).unwrap(), x(1));
        assert_eq!(
            x(0).substitute_affine(&id, &ints(&[1, 0])).unwrap(),
            &x(0) - &Polynomial::one(&l2())
        );
        let p = &x(0) * &x(1);
        let expect = &(&x(1) - &Polynomial::one(&l2())) * &x(0);
        assert_eq!(p.substitute_affine(&swap, &ints(&[1, 0])).unwrap(), expect);
        assert!(matches!(p.substitute_affine(&id, &ints(&[1])), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn eval_and_display() {
        let p = &(&x(0) * &x(0)).scale(&int(3)) - &x(1);
        assert_eq!(p.eval(&ints(&[2, 5])).unwrap(), int(7));
        assert_eq!(p.to_string(), "3*x1^2 - x2");
        assert_eq!(p.permute_vars(&[1, 0]).to_string(), "3*x2^2 - x1");
    }

    #[test]
    fn truncated_products() {
        let p = &x(0) + &Polynomial::one(&l2());
        let sq = p.mul_truncated(&p, 1);
        assert_eq!(sq, &x(0).scale(&int(2)) + &Polynomial::one(&l2()));
        assert_eq!(p.pow(3).homogeneous_part(2), (&x(0) * &x(0)).scale(&int(3)));
    }
}
