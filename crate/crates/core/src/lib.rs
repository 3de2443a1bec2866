//! Exact algebra for deformation quantization.

pub mod algebra;
pub mod double;
pub mod error;
pub mod frt;
pub mod hopf;
pub mod parse;
pub mod report;
pub mod shipped;
pub mod smash;
pub mod starprod;
pub mod verify;

pub use error::{Error, Result};
