use std::collections::HashSet;

use num_traits::{Signed, Zero};

use crate::arith::linalg::{self, Matrix};
use crate::arith::{int, AffineLinearForm, Polynomial, Scalar, VariableLayout};
use crate::error::{Error, Result};

const ROOT_CAP: usize = 20_000;

/// Root data: simple roots, a symmetric bilinear form, and the positive roots they generate.
#[derive(Clone, Debug)]
pub struct RootSystem {
    layout: VariableLayout,
    form: Matrix,
    simple: Vec<Vec<Scalar>>,
    positive: Vec<Vec<Scalar>>,
}

impl RootSystem {
    /// Closes the simple roots under their reflections. `form` defaults to the dot product.
    pub fn new(layout: VariableLayout, simple: Vec<Vec<Scalar>>, form: Option<Matrix>) -> Result<Self> {
        let n = layout.dim();
        let form = form.unwrap_or_else(|| linalg::identity(n));
        if form.len() != n || form.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: form.len() });
        }
        if linalg::transpose(&form) != form {
            return Err(Error::NotARootSystem("bilinear form is not symmetric".into()));
        }
        for a in &simple {
            if a.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: a.len() });
            }
            if linalg::bilinear(&form, a, a) <= Scalar::zero() {
                return Err(Error::NotARootSystem("simple root of non-positive norm".into()));
            }
        }
        if linalg::rank(&simple) != simple.len() {
            return Err(Error::NotARootSystem("simple roots are linearly dependent".into()));
        }
        let mut rs = Self { layout, form, simple: simple.clone(), positive: vec![] };
        let refl: Vec<Matrix> = simple.iter().map(|a| rs.reflection_matrix(a)).collect();
        let mut seen: HashSet<Vec<Scalar>> = HashSet::new();
        let mut all: Vec<Vec<Scalar>> = Vec::new();
        for a in &simple {
            if seen.insert(a.clone()) {
                all.push(a.clone());
            }
        }
        let mut i = 0;
        while i < all.len() {
            for r in &refl {
                let y = linalg::mat_vec(r, &all[i]);
                if seen.insert(y.clone()) {
                    all.push(y);
                    if all.len() > ROOT_CAP {
                        return Err(Error::NotARootSystem("root closure does not terminate".into()));
                    }
                }
            }
            i += 1;
        }
        let mut positive = Vec::new();
        for x in &all {
            let c = linalg::solve_in_span(&simple, x)
                .ok_or_else(|| Error::NotARootSystem("root outside the span of simple roots".into()))?;
            let pos = c.iter().all(|t| !t.is_negative());
            let neg = c.iter().all(|t| !t.is_positive());
            match (pos, neg) {
                (true, false) => positive.push(x.clone()),
                (false, true) => {}
                _ => return Err(Error::NotARootSystem("root of mixed sign in the simple basis".into())),
            }
        }
        // negatives of the orbit are roots too; every orbit element is ± a positive root
        for x in &positive {
            let m: Vec<Scalar> = x.iter().map(|t| -t).collect();
            if !seen.contains(&m) && !seen.contains(x) {
                return Err(Error::NotARootSystem("root set not symmetric".into()));
            }
        }
        positive.sort();
        rs.positive = positive;
        for x in &rs.positive {
            let r = rs.reflection_matrix(x);
            for y in &rs.positive {
                let z = linalg::mat_vec(&r, y);
                if !rs.is_root(&z) {
                    return Err(Error::NotARootSystem("not closed under reflections".into()));
                }
            }
        }
        Ok(rs)
    }

    /// `S_{n_1} x ... x S_{n_r}` acting on the rows of the layout.
    pub fn type_a_product(rows: &[usize]) -> Result<Self> {
        let layout = VariableLayout::new(rows)?;
        let n = layout.dim();
        let mut simple = Vec::new();
        for k in 0..rows.len() {
            for i in 0..rows[k].saturating_sub(1) {
                let mut a = vec![Scalar::zero(); n];
                a[layout.index(k, i)] = int(1);
                a[layout.index(k, i + 1)] = int(-1);
                simple.push(a);
            }
        }
        Self::new(layout, simple, None)
    }

    /// Rank-two group of order `2m` for the crystallographic values `m ∈ {2, 3, 4, 6}`,
    /// in simple-root coordinates with the Gram matrix as form.
    pub fn dihedral(m: u32) -> Result<Self> {
        let gram = match m {
            2 => [[1, 0], [0, 1]],
            3 => [[2, -1], [-1, 2]],
            4 => [[2, -1], [-1, 1]],
            6 => [[2, -3], [-3, 6]],
            _ => return Err(Error::Config(format!("dihedral({m}) has no rational realization; use m in {{2,3,4,6}}"))),
        };
        let form: Matrix = gram.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
        Self::new(VariableLayout::flat(2), vec![vec![int(1), int(0)], vec![int(0), int(1)]], Some(form))
    }

    pub fn layout(&self) -> &VariableLayout {
        &self.layout
    }

    pub fn dim(&self) -> usize {
        self.layout.dim()
    }

    pub fn form(&self) -> &Matrix {
        &self.form
    }

    pub fn simple_roots(&self) -> &[Vec<Scalar>] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Vec<Scalar>] {
        &self.positive
    }

    pub fn pairing(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        linalg::bilinear(&self.form, x, y)
    }

    pub fn is_root(&self, x: &[Scalar]) -> bool {
        let m: Vec<Scalar> = x.iter().map(|t| -t).collect();
        self.positive.binary_search_by(|p| p.as_slice().cmp(x)).is_ok()
            || self.positive.binary_search(&m).is_ok()
    }

    pub fn is_positive_root(&self, x: &[Scalar]) -> bool {
        self.positive.binary_search_by(|p| p.as_slice().cmp(x)).is_ok()
    }

    /// Matrix of `σ_a(x) = x − 2 (x,a)/(a,a) a`.
    pub fn reflection_matrix(&self, a: &[Scalar]) -> Matrix {
        let n = self.dim();
        let ba = linalg::mat_vec(&self.form, a);
        let c = int(2) / linalg::dot(a, &ba);
        let mut m = linalg::identity(n);
        for i in 0..n {
            for j in 0..n {
                if !a[i].is_zero() && !ba[j].is_zero() {
                    m[i][j] -= &c * &a[i] * &ba[j];
                }
            }
        }
        m
    }

    /// `γ_x(y) = (x, y)` as a linear polynomial.
    pub fn gamma_poly(&self, x: &[Scalar]) -> Polynomial {
        let c = linalg::mat_vec(&self.form, x);
        Polynomial::linear(&self.layout, &c, &Scalar::zero())
    }

    /// `γ_x` split as `scale · normalized form`.
    pub fn gamma_form(&self, x: &[Scalar]) -> (Scalar, AffineLinearForm) {
        AffineLinearForm::normalized(linalg::mat_vec(&self.form, x), Scalar::zero()).expect("nonzero root")
    }

    /// `Δ = Π_{x ∈ Φ⁺} γ_x`.
    pub fn delta(&self) -> Polynomial {
        self.positive.iter().fold(Polynomial::one(&self.layout), |acc, x| &acc * &self.gamma_poly(x))
    }
}
