//! Configuration files, the operator DSL and the batch commands.

pub mod config;
pub mod dsl;
pub mod run;

pub use config::{build_group, EngineConfig, GroupSpec, LoadedConfig, OperatorSpec, Resolved};
pub use dsl::{parse_poly, parse_skew};
pub use run::{
    check_structure_theorem, cmd_act, cmd_commutators, cmd_gamma, cmd_schubert, cmd_structure_theorem,
    cmd_verify_invariance, exit_code, CommandOptions, Report, StructureCheck,
};
