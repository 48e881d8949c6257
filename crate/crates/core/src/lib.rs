//! Exact symbolic computations with Gelfand-Tsetlin type operators: rational functions with
//! affine denominators, reflection groups, the skew group ring, invariant germs and the
//! modules built from them, and window certificates for simplicity.

#![allow(clippy::needless_range_loop)]

pub mod arith;
pub mod commands;
pub mod error;
pub mod groups;
pub mod modules;
pub mod simplicity;
pub mod skew;

pub use error::{Error, Result};
