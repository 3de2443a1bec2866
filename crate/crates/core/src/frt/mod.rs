//! Yang-Baxter matrices over `ℚ(q)`, FRT relations and degree-bounded
//! flatness of the resulting quadratic algebras.

pub mod quadratic;
pub mod rmatrix;

pub use quadratic::{frt_relations, quantum_determinant, Flatness, QuadraticAlgebra};
pub use rmatrix::{ybe_check, RMatrix, YbeWitness};
