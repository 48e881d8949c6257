//! Invariant germs, fibers, the modules `M` and `M*`, and the maps between germ spaces.

pub mod engine;
pub mod germ;
pub mod homs;
pub mod sample;
pub mod schubert;
pub mod vector;

pub use engine::{HarishChandraReport, ModuleEngine, ProbeSet};
pub use germ::{apply_operator_to_germ, GermJson, GermSum, InvariantGerm, Point};
pub use homs::{inclusion_p, lattice_stabilizer, pi_g, pi_g_inverse, symmetrize_over, upsilon, validate_module_structure, ShiftLattice};
pub use schubert::{functional_value, FunctionalConvention, Schubert};
pub use vector::{FiberClass, FiberVector, FunctionalBasisElement, FunctionalVector, VectorEntryJson};
