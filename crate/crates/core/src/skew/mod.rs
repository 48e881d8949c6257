//! The skew group ring: products, group action, symmetrization, divided differences and
//! operator builders.

mod builders;
mod ddiff;
mod element;
mod galois;
pub mod json;

pub use builders::{
    build_type_i, build_type_ii, check_gl_relations, delta_inverse, partial_delta, standard_element,
    structure_element, structure_scalar, validate_part, DdPart, GzGenerators, OgzGenerators, RelationFailure,
};
pub use ddiff::{
    divided_diff_action, divided_diff_of_word, divided_diff_word, divided_difference, poly_divided_diff_word,
    poly_divided_difference,
};
pub use element::{ShiftVector, SkewElement, SkewTerm};
pub use galois::validate_rational_galois_generator;
