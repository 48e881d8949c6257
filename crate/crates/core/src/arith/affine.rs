use std::fmt;

use num_traits::{One, Zero};

use super::linalg::Matrix;
use super::scalar::{fmt_scalar, Scalar};

/// `Σ c_i x_i + c_0`, scaled so the first nonzero `c_i` is 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineLinearForm {
    coeffs: Vec<Scalar>,
    constant: Scalar,
}

impl AffineLinearForm {
    /// Normalizes `Σ coeffs_i x_i + constant`, returning the factor pulled out.
    /// `None` if the coefficient vector is zero.
    pub fn normalized(coeffs: Vec<Scalar>, constant: Scalar) -> Option<(Scalar, Self)> {
        let lead = coeffs.iter().find(|c| !c.is_zero())?.clone();
        if lead.is_one() {
            return Some((lead, Self { coeffs, constant }));
        }
        let inv = lead.recip();
        let coeffs = coeffs.into_iter().map(|c| c * &inv).collect();
        Some((lead, Self { coeffs, constant: constant * inv }))
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Scalar {
        &self.constant
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn leading_index(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap()
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        self.coeffs
            .iter()
            .zip(point)
            .filter(|(c, _)| !c.is_zero())
            .fold(self.constant.clone(), |acc, (c, x)| acc + c * x)
    }

    /// `l(A x + b)`, renormalized.
    pub fn pull_back(&self, a: &Matrix, b: &[Scalar]) -> (Scalar, Self) {
        let n = self.nvars();
        let mut coeffs = vec![Scalar::zero(); n];
        let mut constant = self.constant.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                if !a[i][j].is_zero() {
                    coeffs[j] += c * &a[i][j];
                }
            }
            constant += c * &b[i];
        }
        Self::normalized(coeffs, constant).expect("invertible pull-back keeps forms nonconstant")
    }

    /// `l(x + c)`; the linear part is unchanged.
    pub fn translate(&self, c: &[Scalar]) -> Self {
        Self { coeffs: self.coeffs.clone(), constant: self.eval(c) }
    }

    /// Linear part only.
    pub fn homogeneous(&self) -> Self {
        Self { coeffs: self.coeffs.clone(), constant: Scalar::zero() }
    }
}

impl fmt::Display for AffineLinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, c: &Scalar, name: Option<String>| -> fmt::Result {
            let neg = c < &Scalar::zero();
            let a = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match name {
                Some(n) if a.is_one() => write!(f, "{n}"),
                Some(n) => write!(f, "{}*{n}", fmt_scalar(&a)),
                None => write!(f, "{}", fmt_scalar(&a)),
            }
        };
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                put(f, c, Some(format!("x{}", i + 1)))?;
            }
        }
        if !self.constant.is_zero() {
            put(f, &self.constant, None)?;
        }
        Ok(())
    }
}

impl fmt::Debug for AffineLinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}
