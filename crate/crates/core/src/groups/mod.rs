//! Finite reflection groups from rational root data.

mod character;
mod group;
mod root_system;

pub use character::{d_chi, Character};
pub use group::{GroupElement, ReflectionGroup, Subgroup, DEFAULT_ORDER_CAP};
pub use root_system::RootSystem;
