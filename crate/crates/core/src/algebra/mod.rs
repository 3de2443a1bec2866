//! Exact coefficient arithmetic: rationals, polynomials, truncated series,
//! tensor elements, ℚ(q) and matrices over a field.

pub mod matrix;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod ring;
pub mod series;
pub mod tensor;

pub use matrix::{rank, Field, Matrix};
pub use poly::{Monomial, Polynomial, Vars};
pub use ratfun::{RationalFunction, UniPoly};
pub use rational::Rational;
pub use ring::{Additive, RenderTerms, Ring};
pub use series::{series_mul, Series, DEFAULT_ORDER};
pub use tensor::TensorElement;
