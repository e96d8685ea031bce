//! Resultants, reduced resultants and Bézout coefficients over Artinian
//! principal ideal rings, with the supporting polynomial and linear algebra.

pub mod bench;
pub mod bivariate;
pub mod error;
pub mod linalg;
pub mod numberfield;
pub mod oracle;
pub mod padic;
pub mod poly;
pub mod resultant;
pub mod sample;
pub mod ring;
pub mod text;

pub use error::{Error, Result};
