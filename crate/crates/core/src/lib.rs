//! Framed, double and linear chord diagrams modulo four-term relations.

pub mod algebra;
pub mod cli;
pub mod diagrams;
pub mod error;
pub mod intlinalg;
pub mod parity;
pub mod sums;
pub mod surgery;

pub use error::{Error, Result};
