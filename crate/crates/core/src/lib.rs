pub mod cosmo;
pub mod error;
pub mod expr;
pub mod fd;
pub mod geometry;
pub mod orbits;
pub mod random;
pub mod special;
pub mod symmetry;
pub mod tensors;

pub use error::{Error, Result};
