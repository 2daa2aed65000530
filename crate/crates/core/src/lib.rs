//! Executable orbit-space equivariant homotopy on finite simplicial G-sets.

pub mod corpus;
pub mod diagram;
pub mod error;
pub mod group;
pub mod gsset;
pub mod homology;
pub mod homotopy;
pub mod io;
pub mod scenarios;
pub mod sset;

pub use error::{Error, Result};
