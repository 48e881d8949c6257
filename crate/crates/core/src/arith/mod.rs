//! Exact arithmetic: rationals, polynomials, affine forms and rational functions
//! with affine-linear denominators.

pub mod affine;
pub mod frf;
pub mod json;
pub mod layout;
pub mod linalg;
pub mod poly;
pub mod scalar;

pub use affine::AffineLinearForm;
pub use frf::{FactoredRationalFunction, Frf};
pub use layout::VariableLayout;
pub use linalg::Matrix;
pub use poly::{Monomial, Polynomial};
pub use scalar::{fmt_point, fmt_scalar, frac, int, ints, parse_scalar, Scalar, ScalarRepr};
