//! Neighborhood VC-dimension of vertex subsets of generalized Hamming graphs.

pub mod constructions;
pub mod detect;
pub mod error;
pub mod hamming;
pub mod shatter;
pub mod verify;

pub use error::{Error, Result};
