//! Resultants, reduced resultants and Bézout certificates of univariate
//! polynomials over Artinian principal ideal rings.

mod bezout;
mod ppa;
mod res;
mod rres;

pub use bezout::{rres_bezout, BezoutCertificate};
pub use ppa::{ppa, PpaOutcome};
pub use res::{formal_degree_correction, res, res_ideal};
pub use rres::{contraction, rres};
