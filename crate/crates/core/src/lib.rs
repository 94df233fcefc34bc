//! Exact-arithmetic verifier for the volume argument behind Tucker's and
//! Sperner's lemmas.

pub mod build;
pub mod cli;
pub mod degree;
pub mod deform;
pub mod error;
pub mod exactmath;
pub mod fixtures;
pub mod instance;
pub mod label;
pub mod render;
pub mod simplicial;
pub mod verify;

pub use error::{Error, Result};
