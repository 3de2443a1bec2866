//! Hopf algebra structures on enveloping algebras and Drinfeld twists.

pub mod check;
pub mod lie;
pub mod twist;
pub mod uenv;

pub use check::{corrupted_antipode, hopf_axiom_check, hopf_axiom_check_with, AntipodeFn};
pub use lie::{jacobi_check, LieAlgebra, LieVector};
pub use twist::{twist_checks, Twist};
pub use uenv::{delta_monomial, pbw_normal_form, Chooser, Mode, Pbw, UElement, UEnv, T};
