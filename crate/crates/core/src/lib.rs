//! Exact classification data for symplectic torus actions with coisotropic
//! principal orbits.

#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod generate;
pub mod holonomy;
pub mod ingredients;
pub mod invariants;
pub mod linalg;
pub mod nilgroup;
pub mod orbitspace;
pub mod polytope;
pub mod samples;
pub mod torus;

pub use error::{Error, Result};
