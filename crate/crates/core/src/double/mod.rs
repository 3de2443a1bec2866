//! Finite-dimensional Hopf algebras and their Drinfeld doubles.

pub mod drinfeld;
pub mod fd;
pub mod group;

pub use drinfeld::{double_structure_check, r_matrix_check, r_matrix_check_for, PairedHopf};
pub use fd::{fd_axiom_check, Elem, FdHopf, Vector};
pub use group::FiniteGroup;
