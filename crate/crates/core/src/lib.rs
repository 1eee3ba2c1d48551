pub mod chartab;
pub mod cli;
pub mod error;
pub mod galois;
pub mod gfpla;
pub mod groupact;
pub mod homology;
pub mod inequal;
pub mod poset;
pub mod qarith;
pub mod series;

pub use error::{Error, Result};
