//! Asymmetry measures of quantum states relative to symmetry groups, and
//! construction and verification of symmetric quantum channels.
//!
//! Matrices are dense and complex; logarithms are base 2. See the `cli`
//! module for the command-line surface and file formats.

pub mod cli;
pub mod error;
pub mod experiments;
pub mod groups;
pub mod linalg;
pub mod measures;
pub mod quantum;
pub mod random;
pub mod real;

pub use error::{Error, Result};
