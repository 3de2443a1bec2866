//! L-R smash products on functions on a group tensored with its enveloping
//! algebra, and the λ-ordered star products on `T*G`.

pub mod check;
pub mod group;
pub mod lambda;
pub mod product;

pub use check::bimodule_check;
pub use group::{apply_field, field_bracket, Field, GroupModel};
pub use lambda::{Calibration, LambdaStar};
pub use product::{Bimodule, SmashElement};
