//! Rational functions whose denominators split into affine-linear factors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::affine::AffineLinearForm;
use super::layout::VariableLayout;
use super::linalg::{self, Matrix};
use super::poly::Polynomial;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// `numerator / Π l^m`, kept fully cancelled so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FactoredRationalFunction {
    num: Polynomial,
    den: BTreeMap<AffineLinearForm, u32>,
}

pub type Frf = FactoredRationalFunction;

impl FactoredRationalFunction {
    pub fn new(num: Polynomial, den: BTreeMap<AffineLinearForm, u32>) -> Self {
        let mut f = Self { num, den };
        f.cancel();
        f
    }

    pub fn zero(layout: &VariableLayout) -> Self {
        Polynomial::zero(layout).into()
    }

    pub fn one(layout: &VariableLayout) -> Self {
        Polynomial::one(layout).into()
    }

    pub fn constant(layout: &VariableLayout, c: Scalar) -> Self {
        Polynomial::constant(layout, c).into()
    }

    /// `1 / l`.
    pub fn recip_form(layout: &VariableLayout, l: &AffineLinearForm) -> Self {
        Self { num: Polynomial::one(layout), den: BTreeMap::from([(l.clone(), 1)]) }
    }

    /// `1 / Π forms`.
    pub fn recip_product<'a, I: IntoIterator<Item = &'a AffineLinearForm>>(layout: &VariableLayout, forms: I) -> Self {
        let mut den = BTreeMap::new();
        for l in forms {
            *den.entry(l.clone()).or_insert(0) += 1;
        }
        Self { num: Polynomial::one(layout), den }
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut kept = BTreeMap::new();
        for (l, m) in std::mem::take(&mut self.den) {
            let mut left = m;
            while left > 0 {
                match self.num.exact_divide(&l) {
                    Ok(q) => {
                        self.num = q;
                        left -= 1;
                    }
                    Err(_) => break,
                }
            }
            if left > 0 {
                kept.insert(l, left);
            }
        }
        self.den = kept;
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<AffineLinearForm, u32> {
        &self.den
    }

    pub fn layout(&self) -> &VariableLayout {
        self.num.layout()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.is_polynomial() { self.num.as_constant() } else { None }
    }

    fn den_poly(den: &BTreeMap<AffineLinearForm, u32>, layout: &VariableLayout) -> Polynomial {
        let mut p = Polynomial::one(layout);
        for (l, &m) in den {
            let lp = Polynomial::linear(layout, l.coeffs(), l.constant());
            for _ in 0..m {
                p = &p * &lp;
            }
        }
        p
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.layout());
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Divides by an affine form.
    pub fn div_form(&self, l: &AffineLinearForm) -> Self {
        let mut den = self.den.clone();
        *den.entry(l.clone()).or_insert(0) += 1;
        Self::new(self.num.clone(), den)
    }

    pub fn mul_poly(&self, p: &Polynomial) -> Self {
        Self::new(&self.num * p, self.den.clone())
    }

    /// Multiplicative inverse; only defined when the numerator is a constant or an affine form.
    pub fn inv(&self) -> Result<Self> {
        let layout = self.layout().clone();
        let top = Self::den_poly(&self.den, &layout);
        if let Some(c) = self.num.as_constant() {
            if c.is_zero() {
                return Err(Error::PoleAtPoint);
            }
            return Ok(Self::new(top.scale(&c.recip()), BTreeMap::new()));
        }
        match self.num.as_affine() {
            Some((s, l)) => Ok(Self::new(top.scale(&s.recip()), BTreeMap::from([(l, 1)]))),
            None => Err(Error::NonLinearDenominator),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.layout());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar> {
        let mut d = Scalar::one();
        for (l, &m) in &self.den {
            if l.nvars() != point.len() {
                return Err(Error::DimensionMismatch { expected: l.nvars(), got: point.len() });
            }
            let v = l.eval(point);
            if v.is_zero() {
                return Err(Error::PoleAtPoint);
            }
            d *= num_traits::pow(v, m as usize);
        }
        Ok(self.num.eval(point)? / d)
    }

    /// No denominator factor vanishes at `point`.
    pub fn is_holomorphic_at(&self, point: &[Scalar]) -> bool {
        self.den.keys().all(|l| !l.eval(point).is_zero())
    }

    /// First denominator factor vanishing at `point`.
    pub fn pole_factor_at(&self, point: &[Scalar]) -> Option<&AffineLinearForm> {
        self.den.keys().find(|l| l.eval(point).is_zero())
    }

    /// `f(A x + b)` for invertible `A`.
    pub fn pull_back(&self, a: &Matrix, b: &[Scalar]) -> Result<Self> {
        let mut num = self.num.pull_back(a, b)?;
        let mut den = BTreeMap::new();
        let mut scale = Scalar::one();
        for (l, &m) in &self.den {
            let (s, l2) = l.pull_back(a, b);
            scale *= num_traits::pow(s, m as usize);
            *den.entry(l2).or_insert(0) += m;
        }
        if !scale.is_one() {
            num = num.scale(&scale.recip());
        }
        // an affine change of variables cannot create new common factors
        Ok(Self { num, den })
    }

    /// Same convention as [`Polynomial::substitute_affine`].
    pub fn substitute_affine(&self, map: &Matrix, shift: &[Scalar]) -> Result<Self> {
        let inv = linalg::inverse(map).ok_or(Error::SingularMatrix)?;
        let neg: Vec<Scalar> = shift.iter().map(|s| -s).collect();
        self.pull_back(&inv, &neg)
    }

    /// `f(x + c)`.
    pub fn translate(&self, c: &[Scalar]) -> Self {
        if c.iter().all(|x| x.is_zero()) {
            return self.clone();
        }
        let num = self.num.translate(c);
        let mut den = BTreeMap::new();
        for (l, &m) in &self.den {
            *den.entry(l.translate(c)).or_insert(0) += m;
        }
        Self { num, den }
    }

    /// Taylor polynomial of `y -> f(point + y)` up to total degree `d`.
    pub fn taylor(&self, point: &[Scalar], d: u32) -> Result<Polynomial> {
        let layout = self.layout().clone();
        let mut acc = self.num.translate(point).truncate(d);
        for (l, &m) in &self.den {
            let c = l.eval(point);
            if c.is_zero() {
                return Err(Error::PoleAtPoint);
            }
            // 1/(c + λ) = (1/c) Σ (-λ/c)^k
            let lam = Polynomial::linear(&layout, l.coeffs(), &Scalar::zero());
            let ratio = lam.scale(&(-c.recip()));
            let mut series = Polynomial::one(&layout);
            let mut pw = Polynomial::one(&layout);
            for _ in 0..d {
                pw = pw.mul_truncated(&ratio, d);
                series = &series + &pw;
            }
            let series = series.scale(&c.recip());
            for _ in 0..m {
                acc = acc.mul_truncated(&series, d);
            }
        }
        Ok(acc)
    }
}

impl From<Polynomial> for FactoredRationalFunction {
    fn from(p: Polynomial) -> Self {
        Self { num: p, den: BTreeMap::new() }
    }
}

impl<'a> Add<&'a Frf> for &'a Frf {
    type Output = Frf;
    fn add(self, rhs: &Frf) -> Frf {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return Frf::new(&self.num + &rhs.num, self.den.clone());
        }
        let layout = self.layout().clone();
        let mut lcm = self.den.clone();
        for (l, &m) in &rhs.den {
            let e = lcm.entry(l.clone()).or_insert(0);
            *e = (*e).max(m);
        }
        let missing = |den: &BTreeMap<AffineLinearForm, u32>| -> BTreeMap<AffineLinearForm, u32> {
            lcm.iter()
                .filter_map(|(l, &m)| {
                    let k = m - den.get(l).copied().unwrap_or(0);
                    (k > 0).then(|| (l.clone(), k))
                })
                .collect()
        };
        let a = &self.num * &Frf::den_poly(&missing(&self.den), &layout);
        let b = &rhs.num * &Frf::den_poly(&missing(&rhs.den), &layout);
        Frf::new(&a + &b, lcm)
    }
}

impl<'a> Sub<&'a Frf> for &'a Frf {
    type Output = Frf;
    fn sub(self, rhs: &Frf) -> Frf {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Frf> for &'a Frf {
    type Output = Frf;
    fn mul(self, rhs: &Frf) -> Frf {
        if self.is_zero() || rhs.is_zero() {
            return Frf::zero(self.layout());
        }
        if self.den.is_empty() && rhs.den.is_empty() {
            return Frf { num: &self.num * &rhs.num, den: BTreeMap::new() };
        }
        let mut den = self.den.clone();
        for (l, &m) in &rhs.den {
            *den.entry(l.clone()).or_insert(0) += m;
        }
        Frf::new(&self.num * &rhs.num, den)
    }
}

impl Neg for &Frf {
    type Output = Frf;
    fn neg(self) -> Frf {
        Frf { num: -&self.num, den: self.den.clone() }
    }
}

impl fmt::Display for FactoredRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let parts: Vec<String> = self
            .den
            .iter()
            .map(|(l, &m)| if m == 1 { format!("({l})") } else { format!("({l})^{m}") })
            .collect();
        write!(f, "({}) / {}", self.num, parts.join("*"))
    }
}

impl fmt::Debug for FactoredRationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frf[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::scalar::{frac, int, ints};

    fn l2() -> VariableLayout {
        VariableLayout::flat(2)
    }

    fn x(i: usize) -> Polynomial {
        Polynomial::var(&l2(), i)
    }

    fn form(c: &[i64], c0: i64) -> AffineLinearForm {
        AffineLinearForm::normalized(ints(c), int(c0)).unwrap().1
    }

    fn recip(c: &[i64], c0: i64) -> Frf {
        let p = Polynomial::linear(&l2(), &ints(c), &int(c0));
        Frf::from(p).inv().unwrap()
    }

    #[test]
    fn antisymmetric_sum_vanishes() {
        let s = &recip(&[1, -1], 0) + &recip(&[-1, 1], 0);
        assert!(s.is_zero());
        assert!(s.denominator().is_empty());
    }

    #[test]
    fn cancellation_on_construction() {
        let p = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        let f = Frf::new(p, BTreeMap::from([(form(&[1, -1], 0), 1)]));
        assert_eq!(f, Frf::from(&x(0) + &x(1)));
        let g = &Frf::from(&x(0) - &x(1)) * &recip(&[1, -1], 0);
        assert!(g.is_one());
    }

    #[test]
    fn evaluation_and_poles() {
        assert_eq!(Frf::from(&x(0) + &x(1)).eval(&ints(&[0, 0])).unwrap(), int(0));
        assert!(matches!(recip(&[1, -1], 0).eval(&ints(&[1, 1])), Err(Error::PoleAtPoint)));
        let p = &(&x(0) * &x(0)) - &(&x(1) * &x(1));
        let f = Frf::new(p, BTreeMap::from([(form(&[1, -1], 0), 1)]));
        assert_eq!(f.eval(&ints(&[3, 1])).unwrap(), int(4));
        assert_eq!(recip(&[2, 0], 1).eval(&ints(&[1, 7])).unwrap(), frac(1, 3));
    }

    #[test]
    fn non_linear_inverse_rejected() {
        let f = Frf::from(&(&x(0) * &x(0)) + &Polynomial::one(&l2()));
        assert!(matches!(f.inv(), Err(Error::NonLinearDenominator)));
    }

    #[test]
    fn taylor_of_simple_pole() {
        // 1/(1 - x1) at the origin
        let f = recip(&[-1, 0], 1);
        let t = f.taylor(&ints(&[0, 0]), 3).unwrap();
        let expect = &(&(&Polynomial::one(&l2()) + &x(0)) + &x(0).pow(2)) + &x(0).pow(3);
        assert_eq!(t, expect);
        assert!(matches!(f.taylor(&ints(&[1, 0]), 1), Err(Error::PoleAtPoint)));
    }

    #[test]
    fn pull_back_rescales_forms() {
        let f = recip(&[1, -1], 0);
        let swap = vec![ints(&[0, 1]), ints(&[1, 0])];
        assert_eq!(f.pull_back(&swap, &ints(&[0, 0])).unwrap(), -&f);
        let t = f.translate(&ints(&[1, 0]));
        assert_eq!(t, recip(&[1, -1], 1));
    }
}
